#pragma once

#include "latmix/matrix.hpp"

namespace latmix {

struct HnfResult {
    IntMat H;  // canonical row-style Hermite normal form, same shape as input
    IntMat U;  // unimodular, U * M = H
};

/// Row-style HNF: pivots positive, entries above each pivot reduced into
/// [0, pivot), nonzero rows first. Canonical: equal row spaces over Z give
/// equal H.
HnfResult hermite_normal_form(const IntMat& M);

struct SnfResult {
    IntMat D;  // diagonal, d_1 | d_2 | ... | d_r > 0, then zeros
    IntMat U;  // unimodular, rows x rows
    IntMat V;  // unimodular, cols x cols; U * M * V = D
};

SnfResult smith_normal_form(const IntMat& M);

/// Positive diagonal entries of the Smith form (the invariant factors).
std::vector<Int> invariant_factors(const IntMat& M);

}  // namespace latmix
