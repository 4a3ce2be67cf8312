#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "latmix/ints.hpp"

namespace latmix {

/// Dense matrix of exact integers, row-major.
struct IntMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    IntMat(std::initializer_list<std::initializer_list<Int>> init);

    Int& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    bool operator==(const IntMat&) const = default;

    static IntMat identity(std::size_t n);

    std::vector<Int> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Int>& v);

    void swap_rows(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    /// row_i -= q * row_j
    void submul_row(std::size_t i, std::size_t j, const Int& q);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_col(std::size_t i);
    /// col_i -= q * col_j
    void submul_col(std::size_t i, std::size_t j, const Int& q);

    bool is_zero_row(std::size_t i) const;
};

IntMat mul(const IntMat& A, const IntMat& B);
IntMat transpose(const IntMat& A);
IntMat vstack(const IntMat& A, const IntMat& B);

/// Determinant of a square matrix, exact (Bareiss fraction-free elimination).
Int det(const IntMat& A);

/// Rank over Q.
std::size_t rank_q(const IntMat& A);

/// Exact inverse of an integer matrix with |det| = 1; nullopt otherwise.
std::optional<IntMat> inverse_unimodular(const IntMat& A);

// ---- small exact rational linear algebra (used by the geometry code) ----

using RatVec = std::vector<Rat>;
using RatRows = std::vector<RatVec>;

std::size_t rat_rank(RatRows rows);

/// Solve A x = b for square nonsingular rational A; nullopt if singular.
std::optional<RatVec> rat_solve(RatRows A, RatVec b);

/// One-dimensional kernel of a (d-1) x d rational matrix of rank d-1;
/// nullopt if the rank is smaller.
std::optional<RatVec> rat_nullvector(RatRows rows, std::size_t dim);

/// Incremental row-echelon accumulator over Q for rank bookkeeping.
class RankTracker {
  public:
    /// Adds a row; returns true if it increased the rank.
    bool add_row(RatVec v);
    std::size_t rank() const { return echelon_.size(); }

  private:
    RatRows echelon_;  // reduced rows, each with a leading pivot column
    std::vector<std::size_t> pivots_;
};

}  // namespace latmix
