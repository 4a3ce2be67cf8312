#pragma once

#include <utility>

#include "latmix/lattice.hpp"

namespace latmix {

/// Rational-vertex polytope in Q^m with exact facet data. Lower-dimensional
/// polytopes carry an affine chart; facet inequalities live in intrinsic
/// coordinates, c = chart * (x - base).
struct LatticePolytope {
    std::size_t ambient_dim = 0;
    std::size_t intrinsic_dim = 0;

    std::vector<RatVec> vertices;  // irredundant, sorted lexicographically

    RatVec base;    // chart origin (first deduplicated input point)
    RatRows dirs;   // intrinsic_dim x ambient_dim
    RatRows chart;  // intrinsic_dim x ambient_dim, c = chart * (x - base)

    struct Facet {
        RatVec normal;  // intrinsic, primitive integer entries
        Rat offset;     // <normal, c> <= offset
    };
    std::vector<Facet> facets;  // merged supporting hyperplanes

    Rat intrinsic_volume;  // volume in the intrinsic chart (= ambient volume
                           // when intrinsic_dim == ambient_dim)

    RatVec to_chart(const RatVec& x) const;
    bool in_affine_hull(const RatVec& x) const;
    bool contains(const RatVec& x) const;
    bool strictly_contains(const RatVec& x) const;  // relative interior

    /// Ambient halfspace description <a,x> <= b (only meaningful when
    /// combined with the affine-hull equations for degenerate polytopes).
    std::vector<std::pair<RatVec, Rat>> ambient_inequalities() const;
    /// Equations <e,x> = c cutting out the affine hull.
    std::vector<std::pair<RatVec, Rat>> affine_hull_equations() const;
};

inline constexpr std::uint64_t kDefaultMaxLatticePoints = 10'000'000;

LatticePolytope convex_hull(std::vector<RatVec> points, std::size_t ambient_dim);
LatticePolytope convex_hull_int(const std::vector<std::vector<Int>>& points,
                                std::size_t ambient_dim);

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

/// Volume in R^m normalized so the unit cell of Z^m has volume 1;
/// 0 for lower-dimensional polytopes, 1 for a nonempty polytope in dim 0.
Rat lattice_volume(const LatticePolytope& p);

/// All integer points of P (bounding-box scan, capped).
std::vector<std::vector<Int>> lattice_points(const LatticePolytope& p,
                                             std::uint64_t max_points = kDefaultMaxLatticePoints);

/// Number of integer points in the relative interior of P.
Int interior_lattice_point_count(const LatticePolytope& p,
                                 std::uint64_t max_points = kDefaultMaxLatticePoints);

/// Image of a support under a quotient map, deduplicated and sorted.
std::vector<std::vector<Int>> project_support(const std::vector<std::vector<Int>>& points,
                                              const QuotientMap& pi);

LatticePolytope dilate(const LatticePolytope& p, const Int& factor);

}  // namespace latmix
