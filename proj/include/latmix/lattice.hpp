#pragma once

#include "latmix/normal_forms.hpp"

namespace latmix {

/// A sublattice of Z^n, stored as its canonical row-HNF basis
/// (rank many rows, no zero rows).
struct SublatticeBasis {
    std::size_t ambient_dim = 0;
    IntMat basis;  // rank x ambient_dim, canonical HNF

    std::size_t rank() const { return basis.rows; }
    bool operator==(const SublatticeBasis&) const = default;
};

/// Surjective integer map Z^n -> Z^m whose kernel in Z^n is a prescribed
/// saturated sublattice.
struct QuotientMap {
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    IntMat matrix;  // target_dim x source_dim

    std::vector<Int> apply(const std::vector<Int>& v) const;
};

/// Canonicalizes an arbitrary generating set (rows) into a SublatticeBasis.
SublatticeBasis sublattice_from_generators(std::size_t ambient_dim, const IntMat& generators);

/// Lambda = (Q-span of G) intersected with Z^n; saturated, same rank, contains G.
SublatticeBasis saturation(const SublatticeBasis& g);

bool is_saturated(const SublatticeBasis& g);

/// [Lambda : G] for G a finite-index sublattice of Lambda (equal ranks).
/// Convention: rank 0 gives 1.
Int lattice_index(const SublatticeBasis& g, const SublatticeBasis& lambda);

/// Deterministic projection with kernel Lambda; target normalized to Z^m.
/// Requires Lambda saturated.
QuotientMap quotient_map(const SublatticeBasis& lambda);

}  // namespace latmix
