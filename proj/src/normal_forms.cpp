#include "latmix/normal_forms.hpp"

#include "latmix/errors.hpp"

namespace latmix {

HnfResult hermite_normal_form(const IntMat& M) {
    IntMat H = M;
    IntMat U = IntMat::identity(M.rows);
    std::size_t row = 0;
    for (std::size_t col = 0; col < H.cols && row < H.rows; ++col) {
        // Euclidean elimination below the working row.
        while (true) {
            std::size_t best = H.rows;
            for (std::size_t i = row; i < H.rows; ++i) {
                if (H(i, col) == 0) continue;
                if (best == H.rows || abs_int(H(i, col)) < abs_int(H(best, col))) best = i;
            }
            if (best == H.rows) break;  // column is zero from `row` down
            H.swap_rows(row, best);
            U.swap_rows(row, best);
            bool done = true;
            for (std::size_t i = row + 1; i < H.rows; ++i) {
                if (H(i, col) == 0) continue;
                Int q = H(i, col) / H(row, col);
                H.submul_row(i, row, q);
                U.submul_row(i, row, q);
                if (H(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (H(row, col) == 0) continue;
        if (H(row, col) < 0) {
            H.negate_row(row);
            U.negate_row(row);
        }
        for (std::size_t i = 0; i < row; ++i) {
            Int q = floor_div(H(i, col), H(row, col));
            H.submul_row(i, row, q);
            U.submul_row(i, row, q);
        }
        ++row;
    }
    return {std::move(H), std::move(U)};
}

SnfResult smith_normal_form(const IntMat& M) {
    IntMat D = M;
    IntMat U = IntMat::identity(M.rows);
    IntMat V = IntMat::identity(M.cols);

    auto find_pivot = [&](std::size_t t, std::size_t& pi, std::size_t& pj) {
        bool found = false;
        for (std::size_t i = t; i < D.rows; ++i)
            for (std::size_t j = t; j < D.cols; ++j) {
                if (D(i, j) == 0) continue;
                if (!found || abs_int(D(i, j)) < abs_int(D(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        return found;
    };

    std::size_t t = 0;
    while (t < D.rows && t < D.cols) {
        std::size_t pi = t, pj = t;
        if (!find_pivot(t, pi, pj)) break;
        D.swap_rows(t, pi);
        U.swap_rows(t, pi);
        D.swap_cols(t, pj);
        V.swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < D.rows; ++i) {
                if (D(i, t) == 0) continue;
                Int q = D(i, t) / D(t, t);
                D.submul_row(i, t, q);
                U.submul_row(i, t, q);
                if (D(i, t) != 0) {
                    D.swap_rows(t, i);
                    U.swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < D.cols; ++j) {
                if (D(t, j) == 0) continue;
                Int q = D(t, j) / D(t, t);
                D.submul_col(j, t, q);
                V.submul_col(j, t, q);
                if (D(t, j) != 0) {
                    D.swap_cols(t, j);
                    V.swap_cols(t, j);
                    clean = false;
                }
            }
        }
        // Enforce divisibility of the remaining submatrix by the pivot.
        bool redo = false;
        for (std::size_t i = t + 1; i < D.rows && !redo; ++i)
            for (std::size_t j = t + 1; j < D.cols && !redo; ++j)
                if (D(i, j) % D(t, t) != 0) {
                    // Fold the offending row into row t and re-eliminate.
                    for (std::size_t c = 0; c < D.cols; ++c) D(t, c) += D(i, c);
                    for (std::size_t c = 0; c < D.rows; ++c) U(t, c) += U(i, c);
                    redo = true;
                }
        if (redo) continue;
        if (D(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
        }
        ++t;
    }
    return {std::move(D), std::move(U), std::move(V)};
}

std::vector<Int> invariant_factors(const IntMat& M) {
    SnfResult s = smith_normal_form(M);
    std::vector<Int> f;
    std::size_t r = std::min(s.D.rows, s.D.cols);
    for (std::size_t i = 0; i < r; ++i)
        if (s.D(i, i) != 0) f.push_back(s.D(i, i));
    return f;
}

}  // namespace latmix
