#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "latmix/errors.hpp"
#include "latmix/oracles.hpp"

using namespace latmix;
using namespace latmix::testing;

namespace {

const std::vector<std::vector<Int>> kSquare = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};

SupportCollection bilinear_over_index_2() {
    // Unit square in the xy-plane plus two even/odd supports on the z-axis.
    return sc(3, {{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}},
                  {{0, 0, 0}, {0, 0, 2}},
                  {{0, 0, 1}, {0, 0, 3}}});
}

SupportCollection cubic_over_index_2() {
    return sc(3, {{{0, 0, 0}, {3, 0, 0}, {0, 3, 0}},
                  {{0, 0, 0}, {0, 0, 2}},
                  {{0, 0, 1}, {0, 0, 3}}});
}

}  // namespace

TEST_CASE("bkk number") {
    CHECK(bkk_number({hull(2, {{0, 0}, {1, 0}}), hull(2, {{0, 0}, {0, 1}})}) == 1);
    CHECK(bkk_number({hull(2, kSquare), hull(2, kSquare)}) == 2);
    CHECK(bkk_number({}) == 1);
    CHECK_THROWS_AS((void)bkk_number({hull(1, {{0}, {1}}), hull(1, {{0}, {1}})}),
                    PreconditionError);
}

TEST_CASE("root count") {
    CHECK(root_count(sc(1, {{{0}, {2}}, {{1}, {3}}})) == 2);
    CHECK(root_count(sc(2, {kSquare, kSquare})) == 2);
    CHECK(root_count(sc(2, {{{0, 0}, {1, 0}}, {{0, 0}, {2, 0}}, {{0, 0}, {0, 1}}})) == 1);
    CHECK_THROWS_AS((void)root_count(sc(2, {kSquare})), PreconditionError);
}

TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(sc(2, {kSquare})) == -2);
    CHECK(euler_characteristic(bilinear_over_index_2()) == -4);
    CHECK(euler_characteristic(sc(1, {{{0}, {1}}})) == 1);
    // Complement of the essential subcollection must be a single support.
    CHECK_THROWS_AS((void)euler_characteristic(sc(2, {kSquare, kSquare})), PreconditionError);
}

TEST_CASE("geometric genus") {
    CHECK(geometric_genus(sc(2, {{{0, 0}, {3, 0}, {0, 3}}})) == 1);
    CHECK(geometric_genus(bilinear_over_index_2()) == 0);
    CHECK(geometric_genus(cubic_over_index_2()) == 2);
    // Zero-dimensional components have no genus.
    CHECK_THROWS_AS((void)geometric_genus(sc(1, {{{0}, {1}}})), PreconditionError);
}

TEST_CASE("zero set structure") {
    auto s1 = zero_set_structure(sc(1, {{{0}, {2}}, {{1}, {3}}}));
    CHECK(s1.num_components == 2);
    CHECK(s1.component_ambient_dim == 0);
    CHECK(s1.zero_set_dim == 0);
    CHECK(s1.residual_polytopes.empty());
    CHECK(s1.complete_intersection);

    auto s2 = zero_set_structure(bilinear_over_index_2());
    CHECK(s2.essential == IndexSubset{1, 2});
    CHECK(s2.num_components == 2);
    CHECK(s2.component_ambient_dim == 2);
    CHECK(s2.zero_set_dim == 1);
    REQUIRE(s2.residual_polytopes.size() == 1);
    CHECK(s2.residual_polytopes[0].vertices.size() == 4);
    CHECK(lattice_volume(s2.residual_polytopes[0]) == 1);

    auto s3 = zero_set_structure(sc(2, {kSquare, kSquare}));
    CHECK(s3.essential.empty());
    CHECK(s3.num_components == 1);
    CHECK(s3.zero_set_dim == 0);
    CHECK(s3.residual_polytopes.size() == 2);
}

TEST_CASE("structure invariants hold on random collections") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 200; ++it) {
        auto a = random_support_collection(rng, 3, 4);
        auto s = zero_set_structure(a);
        CHECK(s.num_components >= 1);
        CHECK(s.zero_set_dim ==
              s.component_ambient_dim -
                  (static_cast<long long>(a.size()) - static_cast<long long>(s.essential.size())));
        for (const auto& p : s.residual_polytopes)
            CHECK(static_cast<long long>(p.ambient_dim) == s.component_ambient_dim);
    }
}

TEST_CASE("full report presence rules") {
    auto r1 = full_report(sc(1, {{{0}, {2}}, {{1}, {3}}}));
    REQUIRE(r1.root_count.has_value());
    CHECK(*r1.root_count == 2);
    CHECK_FALSE(r1.euler_characteristic.has_value());
    CHECK_FALSE(r1.genus_note.empty());

    auto r2 = full_report(sc(2, {kSquare}));
    CHECK_FALSE(r2.root_count.has_value());
    CHECK_FALSE(r2.root_count_note.empty());
    REQUIRE(r2.euler_characteristic.has_value());
    CHECK(*r2.euler_characteristic == -2);
    REQUIRE(r2.geometric_genus.has_value());
    CHECK(*r2.geometric_genus == 0);

    std::mt19937_64 rng(42);
    for (int it = 0; it < 200; ++it) {
        auto a = random_support_collection(rng, 3, 4);
        auto r = full_report(a);
        CHECK(r.root_count.has_value() == (r.defect_report.generic_zero_set_dim == 0));
        bool hypersurface = r.structure.residual_polytopes.size() == 1 &&
                            r.defect_report.generic_zero_set_dim >= 1;
        CHECK(r.euler_characteristic.has_value() == hypersurface);
    }
}

TEST_CASE("bkk symmetry, multilinearity, and diagonal") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<std::size_t> dims(1, 3);
    for (int it = 0; it < 60; ++it) {
        std::size_t m = dims(rng);
        std::vector<LatticePolytope> polys;
        for (std::size_t i = 0; i < m; ++i) polys.push_back(random_lattice_polytope(rng, m));
        Int reference = bkk_number(polys);
        auto perm = polys;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(bkk_number(perm) == reference);

        std::vector<LatticePolytope> diag(m, polys[0]);
        Rat fact = 1;
        for (std::size_t i = 2; i <= m; ++i) fact *= Rat(i);
        CHECK(Rat(bkk_number(diag)) == fact * lattice_volume(polys[0]));
    }
    // Multilinearity in the first slot, m = 2.
    for (int it = 0; it < 40; ++it) {
        auto p1 = random_lattice_polytope(rng, 2);
        auto p1p = random_lattice_polytope(rng, 2);
        auto p2 = random_lattice_polytope(rng, 2);
        CHECK(bkk_number({minkowski_sum(p1, p1p), p2}) ==
              bkk_number({p1, p2}) + bkk_number({p1p, p2}));
    }
}

TEST_CASE("reports are invariant under unimodular maps and per-support translations") {
    std::mt19937_64 rng(44);
    for (int it = 0; it < 60; ++it) {
        auto a = random_support_collection(rng, 3, 4);
        auto r = full_report(a);
        auto b = translate_each(transform(a, random_unimodular(rng, a.ambient_dim)), rng);
        auto q = full_report(b);
        CHECK(q.defect_report.minimal_defect == r.defect_report.minimal_defect);
        CHECK(q.defect_report.essential == r.defect_report.essential);
        CHECK(q.defect_report.essential_index == r.defect_report.essential_index);
        CHECK(q.defect_report.consistency_codim == r.defect_report.consistency_codim);
        CHECK(q.structure.num_components == r.structure.num_components);
        CHECK(q.structure.zero_set_dim == r.structure.zero_set_dim);
        CHECK(q.root_count == r.root_count);
        CHECK(q.euler_characteristic == r.euler_characteristic);
        CHECK(q.geometric_genus == r.geometric_genus);
    }
}

TEST_CASE("bkk agrees with the interpolation oracle") {
    std::mt19937_64 rng(45);
    std::uniform_int_distribution<std::size_t> dims(1, 3);
    for (int it = 0; it < 60; ++it) {
        std::size_t m = dims(rng);
        std::vector<LatticePolytope> polys;
        for (std::size_t i = 0; i < m; ++i) polys.push_back(random_lattice_polytope(rng, m));
        CHECK(bkk_number(polys) == mixed_volume_by_interpolation(polys));
    }
}
