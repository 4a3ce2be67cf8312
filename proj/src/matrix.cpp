#include "latmix/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "latmix/errors.hpp"

namespace latmix {

IntMat::IntMat(std::initializer_list<std::initializer_list<Int>> init) {
    rows = init.size();
    cols = rows ? init.begin()->size() : 0;
    a.reserve(rows * cols);
    for (const auto& r : init) {
        if (r.size() != cols) throw std::invalid_argument("ragged initializer");
        for (const auto& x : r) a.push_back(x);
    }
}

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<Int> IntMat::row(std::size_t i) const {
    return std::vector<Int>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
}

void IntMat::set_row(std::size_t i, const std::vector<Int>& v) {
    std::copy(v.begin(), v.end(), a.begin() + i * cols);
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMat::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMat::submul_row(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < cols; ++c) (*this)(i, c) -= q * (*this)(j, c);
}

void IntMat::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMat::negate_col(std::size_t i) {
    for (std::size_t r = 0; r < rows; ++r) (*this)(r, i) = -(*this)(r, i);
}

void IntMat::submul_col(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < rows; ++r) (*this)(r, i) -= q * (*this)(r, j);
}

bool IntMat::is_zero_row(std::size_t i) const {
    for (std::size_t c = 0; c < cols; ++c)
        if ((*this)(i, c) != 0) return false;
    return true;
}

IntMat mul(const IntMat& A, const IntMat& B) {
    if (A.cols != B.rows) throw std::invalid_argument("matrix dimension mismatch");
    IntMat C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            const Int& aik = A(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < B.cols; ++j) C(i, j) += aik * B(k, j);
        }
    return C;
}

IntMat transpose(const IntMat& A) {
    IntMat T(A.cols, A.rows);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) T(j, i) = A(i, j);
    return T;
}

IntMat vstack(const IntMat& A, const IntMat& B) {
    if (A.rows == 0) return B;
    if (B.rows == 0) return A;
    if (A.cols != B.cols) throw std::invalid_argument("vstack dimension mismatch");
    IntMat C(A.rows + B.rows, A.cols);
    std::copy(A.a.begin(), A.a.end(), C.a.begin());
    std::copy(B.a.begin(), B.a.end(), C.a.begin() + A.a.size());
    return C;
}

Int det(const IntMat& A) {
    if (A.rows != A.cols) throw std::invalid_argument("det of non-square matrix");
    std::size_t n = A.rows;
    if (n == 0) return 1;
    IntMat M = A;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && M(p, k) == 0) ++p;
            if (p == n) return 0;
            M.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
        prev = M(k, k);
    }
    return sign > 0 ? M(n - 1, n - 1) : Int(-M(n - 1, n - 1));
}

std::size_t rank_q(const IntMat& A) {
    RankTracker t;
    for (std::size_t i = 0; i < A.rows; ++i) {
        RatVec v(A.cols);
        for (std::size_t j = 0; j < A.cols; ++j) v[j] = Rat(A(i, j));
        t.add_row(std::move(v));
    }
    return t.rank();
}

std::optional<IntMat> inverse_unimodular(const IntMat& A) {
    if (A.rows != A.cols) return std::nullopt;
    std::size_t n = A.rows;
    Int d = det(A);
    if (d != 1 && d != -1) return std::nullopt;
    // Gauss-Jordan over Q; the result is integral because |det| = 1.
    RatRows M(n, RatVec(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) M[i][j] = Rat(A(i, j));
        M[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && M[p][col] == 0) ++p;
        std::swap(M[col], M[p]);
        Rat piv = M[col][col];
        for (std::size_t j = 0; j < 2 * n; ++j) M[col][j] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || M[i][col] == 0) continue;
            Rat f = M[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) M[i][j] -= f * M[col][j];
        }
    }
    IntMat R(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& v = M[i][n + j];
            if (boost::multiprecision::denominator(v) != 1)
                throw InternalError("non-integral inverse of unimodular matrix");
            R(i, j) = boost::multiprecision::numerator(v);
        }
    return R;
}

std::size_t rat_rank(RatRows rows) {
    RankTracker t;
    for (auto& r : rows) t.add_row(std::move(r));
    return t.rank();
}

std::optional<RatVec> rat_solve(RatRows A, RatVec b) {
    std::size_t n = A.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (A[i].size() != n) throw std::invalid_argument("rat_solve: non-square");
        A[i].push_back(b[i]);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && A[p][col] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(A[col], A[p]);
        Rat piv = A[col][col];
        for (std::size_t j = col; j <= n; ++j) A[col][j] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || A[i][col] == 0) continue;
            Rat f = A[i][col];
            for (std::size_t j = col; j <= n; ++j) A[i][j] -= f * A[col][j];
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = A[i][n];
    return x;
}

std::optional<RatVec> rat_nullvector(RatRows rows, std::size_t dim) {
    // Row-reduce; then back-substitute for the single free column.
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < dim && r < rows.size(); ++col) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        Rat piv = rows[r][col];
        for (std::size_t j = 0; j < dim; ++j) rows[r][j] /= piv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            Rat f = rows[i][col];
            for (std::size_t j = 0; j < dim; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    if (r != dim - 1) return std::nullopt;
    // The free column is the one not in pivots.
    std::vector<bool> is_pivot(dim, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (free_col < dim && is_pivot[free_col]) ++free_col;
    RatVec v(dim);
    v[free_col] = 1;
    for (std::size_t i = 0; i < r; ++i) v[pivots[i]] = -rows[i][free_col];
    return v;
}

bool RankTracker::add_row(RatVec v) {
    std::size_t dim = v.size();
    for (std::size_t e = 0; e < echelon_.size(); ++e) {
        std::size_t p = pivots_[e];
        if (v[p] == 0) continue;
        Rat f = v[p];
        for (std::size_t j = 0; j < dim; ++j) v[j] -= f * echelon_[e][j];
    }
    std::size_t piv = 0;
    while (piv < dim && v[piv] == 0) ++piv;
    if (piv == dim) return false;
    Rat lead = v[piv];
    for (std::size_t j = 0; j < dim; ++j) v[j] /= lead;
    // Keep stored rows fully reduced so the forward pass above stays valid.
    for (std::size_t e = 0; e < echelon_.size(); ++e) {
        if (echelon_[e][piv] == 0) continue;
        Rat f = echelon_[e][piv];
        for (std::size_t j = 0; j < dim; ++j) echelon_[e][j] -= f * v[j];
    }
    echelon_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

}  // namespace latmix
