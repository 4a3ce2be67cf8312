#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "latmix/errors.hpp"
#include "latmix/normal_forms.hpp"
#include "latmix/oracles.hpp"

using namespace latmix;
using namespace latmix::testing;

namespace {

IntMat random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Int(d(rng));
    return m;
}

/// Is v in the Z-row-space of M? Reduce against the HNF pivots.
bool in_row_space_z(const IntMat& m, std::vector<Int> v) {
    IntMat h = hermite_normal_form(m).H;
    for (std::size_t i = 0; i < h.rows; ++i) {
        if (h.is_zero_row(i)) break;
        std::size_t p = 0;
        while (p < h.cols && h(i, p) == 0) ++p;
        if (v[p] % h(i, p) != 0) continue;
        Int q = v[p] / h(i, p);
        for (std::size_t j = 0; j < h.cols; ++j) v[j] -= q * h(i, j);
    }
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

/// gcd of all r x r minors of M (r = rank), by direct enumeration.
Int minors_gcd(const IntMat& m, std::size_t r) {
    std::vector<std::size_t> rows_sel, cols_sel;
    Int g = 0;
    std::vector<std::size_t> ri(r), ci(r);
    auto rec_cols = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
        if (depth == r) {
            IntMat sub(r, r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) sub(i, j) = m(ri[i], ci[j]);
            g = gcd_int(g, det(sub));
            return;
        }
        for (std::size_t c = start; c < m.cols; ++c) {
            ci[depth] = c;
            self(self, c + 1, depth + 1);
        }
    };
    auto rec_rows = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
        if (depth == r) {
            rec_cols(rec_cols, 0, 0);
            return;
        }
        for (std::size_t i = start; i < m.rows; ++i) {
            ri[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec_rows(rec_rows, 0, 0);
    return g;
}

bool is_canonical_hnf(const IntMat& h) { return hermite_normal_form(h).H == h; }

}  // namespace

TEST_CASE("hermite normal form on worked matrices") {
    auto r1 = hermite_normal_form(IntMat{{2, 0}, {0, 3}});
    CHECK(r1.H == IntMat{{2, 0}, {0, 3}});
    CHECK(r1.U == IntMat::identity(2));

    auto r2 = hermite_normal_form(IntMat{{0, 1}, {1, 0}});
    CHECK(r2.H == IntMat::identity(2));

    IntMat m{{2, 4}, {1, 3}};
    auto r3 = hermite_normal_form(m);
    CHECK(mul(r3.U, m) == r3.H);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(in_row_space_z(m, r3.H.row(i)));
        CHECK(in_row_space_z(r3.H, m.row(i)));
    }
}

TEST_CASE("hermite normal form properties on random matrices") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> dims(1, 6);
    for (int it = 0; it < 200; ++it) {
        IntMat m = random_matrix(rng, dims(rng), dims(rng), 5);
        auto r = hermite_normal_form(m);
        CHECK(abs_int(det(r.U)) == 1);
        CHECK(mul(r.U, m) == r.H);
        CHECK(is_canonical_hnf(r.H));
    }
}

TEST_CASE("smith normal form on worked matrices") {
    auto r1 = smith_normal_form(IntMat{{2, 0}, {0, 3}});
    CHECK(r1.D == IntMat{{1, 0}, {0, 6}});

    auto r2 = smith_normal_form(IntMat::identity(3));
    CHECK(r2.D == IntMat::identity(3));

    auto r3 = smith_normal_form(IntMat{{2, 2}, {0, 4}});
    CHECK(r3.D(0, 0) * r3.D(1, 1) == 8);
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<std::size_t> dims(1, 4);
    for (int it = 0; it < 200; ++it) {
        IntMat m = random_matrix(rng, dims(rng), dims(rng), 5);
        auto r = smith_normal_form(m);
        CHECK(abs_int(det(r.U)) == 1);
        CHECK(abs_int(det(r.V)) == 1);
        CHECK(mul(mul(r.U, m), r.V) == r.D);
        auto factors = invariant_factors(m);
        for (std::size_t i = 1; i < factors.size(); ++i)
            CHECK(factors[i] % factors[i - 1] == 0);
        // Product of invariant factors = gcd of all rank x rank minors.
        if (!factors.empty()) {
            Int prod = 1;
            for (const Int& f : factors) prod *= f;
            CHECK(prod == minors_gcd(m, factors.size()));
        }
    }
}

TEST_CASE("saturation on worked lattices") {
    auto g1 = sublattice_from_generators(2, IntMat{{2, 0}});
    CHECK(saturation(g1).basis == IntMat{{1, 0}});

    auto g2 = sublattice_from_generators(2, IntMat{{2, 2}});
    CHECK(saturation(g2).basis == IntMat{{1, 1}});

    auto g3 = sublattice_from_generators(2, IntMat::identity(2));
    CHECK(saturation(g3).basis == IntMat::identity(2));
}

TEST_CASE("lattice index on worked lattices") {
    auto z = sublattice_from_generators(1, IntMat::identity(1));
    auto two_z = sublattice_from_generators(1, IntMat{{2}});
    CHECK(lattice_index(two_z, z) == 2);
    CHECK(lattice_index(z, z) == 1);

    auto g = sublattice_from_generators(2, IntMat{{2, 0}, {0, 3}});
    auto lam = saturation(g);
    CHECK(lattice_index(g, lam) == 6);
    CHECK(index_by_fundamental_domain(g, lam) == 6);
}

TEST_CASE("saturation and index properties on random sublattices") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 200; ++it) {
        auto [g, lam] = random_sublattice_pair(rng);
        auto sat = saturation(g);
        CHECK(saturation(sat) == sat);
        CHECK(is_saturated(sat));
        for (std::size_t i = 0; i < g.basis.rows; ++i)
            CHECK(in_row_space_z(sat.basis, g.basis.row(i)));
        Int prod = 1;
        for (const Int& f : invariant_factors(g.basis)) prod *= f;
        CHECK(lattice_index(g, sat) == prod);
    }
}

TEST_CASE("quotient map on worked lattices") {
    auto pi1 = quotient_map(sublattice_from_generators(2, IntMat{{1, 0}}));
    CHECK(pi1.target_dim == 1);
    CHECK(pi1.apply({1, 0}) == std::vector<Int>{0});

    auto pi2 = quotient_map(sublattice_from_generators(3, IntMat(0, 3)));
    CHECK(pi2.matrix == IntMat::identity(3));

    auto pi3 = quotient_map(sublattice_from_generators(2, IntMat::identity(2)));
    CHECK(pi3.target_dim == 0);
    CHECK(pi3.matrix.rows == 0);
}

TEST_CASE("quotient map kernel and surjectivity certificate") {
    std::mt19937_64 rng(14);
    std::vector<Int> zero_vec;
    for (int it = 0; it < 200; ++it) {
        auto lam = saturation(random_sublattice_pair(rng).first);
        auto pi = quotient_map(lam);
        for (std::size_t i = 0; i < lam.basis.rows; ++i) {
            auto img = pi.apply(lam.basis.row(i));
            for (const Int& x : img) CHECK(x == 0);
        }
        if (pi.target_dim == 0) continue;
        // Smith form [I_m | 0] certifies surjectivity onto Z^m.
        auto d = smith_normal_form(pi.matrix).D;
        for (std::size_t i = 0; i < pi.target_dim; ++i) CHECK(d(i, i) == 1);
    }
}

TEST_CASE("difference lattice worked examples and anchor independence") {
    auto a1 = sc(1, {{{0}, {2}}});
    CHECK(difference_lattice(a1, {0}).basis == IntMat{{2}});

    auto sq = sc(2, {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}});
    CHECK(difference_lattice(sq, {0}).basis == IntMat::identity(2));

    CHECK(difference_lattice(sq, {}).rank() == 0);

    // Anchor independence: differences against the last point instead.
    auto a = sc(2, {{{0, 1}, {2, 4}, {6, 3}}});
    auto from_op = difference_lattice(a, {0});
    IntMat gens(2, 2);
    gens.set_row(0, {Int(0) - 6, Int(1) - 3});
    gens.set_row(1, {Int(2) - 6, Int(4) - 3});
    CHECK(sublattice_from_generators(2, gens) == from_op);
}

TEST_CASE("lattice index rejects rank mismatch and non-containment") {
    auto z2 = sublattice_from_generators(2, IntMat::identity(2));
    auto line = sublattice_from_generators(2, IntMat{{1, 0}});
    CHECK_THROWS_AS((void)lattice_index(line, z2), PreconditionError);
    auto three = sublattice_from_generators(1, IntMat{{3}});
    auto two = sublattice_from_generators(1, IntMat{{2}});
    CHECK_THROWS_AS((void)lattice_index(three, two), PreconditionError);
}
