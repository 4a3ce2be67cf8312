#pragma once

#include <random>
#include <vector>

#include "latmix/oracles.hpp"
#include "latmix/supports.hpp"

namespace latmix::testing {

inline SupportCollection sc(std::size_t n,
                            const std::vector<std::vector<std::vector<Int>>>& pts) {
    return SupportCollection::create(n, pts);
}

inline LatticePolytope hull(std::size_t m, const std::vector<std::vector<Int>>& pts) {
    return convex_hull_int(pts, m);
}

inline IndexSubset all_indices(std::size_t k) {
    IndexSubset j(k);
    for (std::size_t i = 0; i < k; ++i) j[i] = i;
    return j;
}

/// Random unimodular n x n matrix from a few elementary row operations.
inline IntMat random_unimodular(std::mt19937_64& rng, std::size_t n) {
    IntMat u = IntMat::identity(n);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<long> coeff(-2, 2);
    for (int step = 0; step < 8; ++step) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        u.submul_row(i, j, Int(coeff(rng)));
        if (step % 3 == 0) u.swap_rows(i, j);
    }
    return u;
}

/// Applies x -> U x to every point of every support.
inline SupportCollection transform(const SupportCollection& a, const IntMat& u) {
    std::vector<std::vector<std::vector<Int>>> pts;
    for (const auto& s : a.supports) {
        std::vector<std::vector<Int>> sp;
        for (std::size_t p = 0; p < s.rows; ++p) {
            std::vector<Int> v(a.ambient_dim, Int(0));
            for (std::size_t i = 0; i < a.ambient_dim; ++i)
                for (std::size_t j = 0; j < a.ambient_dim; ++j) v[i] += u(i, j) * s(p, j);
            sp.push_back(std::move(v));
        }
        pts.push_back(std::move(sp));
    }
    return SupportCollection::create(a.ambient_dim, pts);
}

/// Translates each support by its own random integer vector.
inline SupportCollection translate_each(const SupportCollection& a, std::mt19937_64& rng,
                                        long bound = 3) {
    std::uniform_int_distribution<long> coord(-bound, bound);
    std::vector<std::vector<std::vector<Int>>> pts;
    for (const auto& s : a.supports) {
        std::vector<Int> t(a.ambient_dim);
        for (auto& x : t) x = Int(coord(rng));
        std::vector<std::vector<Int>> sp;
        for (std::size_t p = 0; p < s.rows; ++p) {
            std::vector<Int> v = s.row(p);
            for (std::size_t j = 0; j < a.ambient_dim; ++j) v[j] += t[j];
            sp.push_back(std::move(v));
        }
        pts.push_back(std::move(sp));
    }
    return SupportCollection::create(a.ambient_dim, pts);
}

}  // namespace latmix::testing
