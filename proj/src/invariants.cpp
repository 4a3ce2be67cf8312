#include "latmix/invariants.hpp"

#include <algorithm>

#include "latmix/errors.hpp"

namespace latmix {

namespace {

/// Residual data shared by the headline invariants: essential J, ind(J),
/// and the projected complement supports in quotient coordinates.
struct Residual {
    IndexSubset essential;
    Int index = 1;
    std::size_t quotient_dim = 0;
    std::vector<std::vector<std::vector<Int>>> projected_supports;  // i not in J, in order
};

Residual residual_data(const SupportCollection& a, std::size_t max_subsets) {
    Residual r;
    r.essential = essential_subcollection(a, max_subsets);
    SublatticeBasis g = difference_lattice(a, r.essential);
    SublatticeBasis lambda = saturation(g);
    r.index = lattice_index(g, lambda);
    QuotientMap pi = quotient_map(lambda);
    r.quotient_dim = pi.target_dim;
    for (std::size_t i : subset_complement(r.essential, a.size())) {
        std::vector<std::vector<Int>> pts;
        for (std::size_t p = 0; p < a.supports[i].rows; ++p)
            pts.push_back(a.supports[i].row(p));
        r.projected_supports.push_back(project_support(pts, pi));
    }
    return r;
}

}  // namespace

Int bkk_number(const std::vector<LatticePolytope>& polytopes) {
    std::size_t m = polytopes.size();
    if (m == 0) return 1;  // empty product convention
    for (const auto& p : polytopes)
        if (p.ambient_dim != m)
            throw PreconditionError("bkk_number: need exactly m polytopes in dimension m");
    Rat total = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
        // Hull of the Minkowski sum over the chosen subset.
        std::vector<RatVec> pts;
        for (std::size_t i = 0; i < m; ++i) {
            if (!(mask & (std::uint64_t(1) << i))) continue;
            if (pts.empty()) {
                pts = polytopes[i].vertices;
                continue;
            }
            std::vector<RatVec> next;
            next.reserve(pts.size() * polytopes[i].vertices.size());
            for (const auto& x : pts)
                for (const auto& y : polytopes[i].vertices) {
                    RatVec s(m);
                    for (std::size_t j = 0; j < m; ++j) s[j] = x[j] + y[j];
                    next.push_back(std::move(s));
                }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            pts = std::move(next);
        }
        int popcount = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::uint64_t(1) << i)) ++popcount;
        Rat vol = lattice_volume(convex_hull(std::move(pts), m));
        if ((m - popcount) % 2 == 0)
            total += vol;
        else
            total -= vol;
    }
    if (boost::multiprecision::denominator(total) != 1 || total < 0)
        throw InternalError("bkk_number: expected a nonnegative integer");
    return boost::multiprecision::numerator(total);
}

Int root_count(const SupportCollection& a, std::size_t max_subsets) {
    DefectReport rep = build_defect_report(a, max_subsets);
    if (rep.generic_zero_set_dim != 0)
        throw PreconditionError("root_count: generic zero set has dimension " +
                                std::to_string(rep.generic_zero_set_dim) + ", not 0");
    Residual r = residual_data(a, max_subsets);
    std::vector<LatticePolytope> polys;
    for (const auto& pts : r.projected_supports)
        polys.push_back(convex_hull_int(pts, r.quotient_dim));
    return r.index * bkk_number(polys);
}

Int euler_characteristic(const SupportCollection& a, std::size_t max_subsets) {
    Residual r = residual_data(a, max_subsets);
    if (r.projected_supports.size() != 1)
        throw PreconditionError("euler_characteristic: the essential complement must be a "
                                "single support (hypersurface case)");
    std::size_t m = r.quotient_dim;
    if (m < 1)
        throw PreconditionError("euler_characteristic: quotient dimension must be at least 1");
    LatticePolytope delta = convex_hull_int(r.projected_supports[0], m);
    std::vector<LatticePolytope> copies(m, delta);
    Int value = r.index * bkk_number(copies);
    return (m % 2 == 1) ? value : Int(-value);
}

Int geometric_genus(const SupportCollection& a, std::size_t max_subsets,
                    std::uint64_t max_points) {
    Residual r = residual_data(a, max_subsets);
    if (r.projected_supports.size() != 1)
        throw PreconditionError("geometric_genus: the essential complement must be a single "
                                "support (hypersurface case)");
    std::size_t m = r.quotient_dim;
    if (m < 2)
        throw PreconditionError("geometric_genus: components must be positive-dimensional");
    LatticePolytope delta = convex_hull_int(r.projected_supports[0], m);
    return r.index * interior_lattice_point_count(delta, max_points);
}

ZeroSetStructure zero_set_structure(const SupportCollection& a, std::size_t max_subsets) {
    DefectReport rep = build_defect_report(a, max_subsets);
    Residual r = residual_data(a, max_subsets);
    ZeroSetStructure s;
    s.essential = r.essential;
    s.num_components = r.index;
    s.component_ambient_dim = static_cast<long long>(r.quotient_dim);
    s.zero_set_dim = rep.generic_zero_set_dim;
    for (const auto& pts : r.projected_supports)
        s.residual_polytopes.push_back(convex_hull_int(pts, r.quotient_dim));
    s.complete_intersection = true;
    return s;
}

InvariantReport full_report(const SupportCollection& a, std::size_t max_subsets,
                            std::uint64_t max_points) {
    InvariantReport rep;
    rep.defect_report = build_defect_report(a, max_subsets);
    rep.structure = zero_set_structure(a, max_subsets);

    if (rep.structure.zero_set_dim == 0) {
        rep.root_count = root_count(a, max_subsets);
    } else {
        rep.root_count_note = "absent: generic zero set has dimension " +
                              std::to_string(rep.structure.zero_set_dim) + ", not 0";
    }

    bool hypersurface =
        rep.structure.residual_polytopes.size() == 1 && rep.structure.zero_set_dim >= 1;
    if (hypersurface) {
        rep.euler_characteristic = euler_characteristic(a, max_subsets);
        if (rep.structure.zero_set_dim >= 1 && rep.structure.component_ambient_dim >= 2) {
            rep.geometric_genus = geometric_genus(a, max_subsets, max_points);
        } else {
            rep.genus_note = "absent: components are not positive-dimensional";
        }
    } else {
        std::string why = rep.structure.residual_polytopes.size() != 1
                              ? "essential complement is not a single support"
                              : "generic zero set is zero-dimensional";
        rep.euler_note = "absent: " + why;
        rep.genus_note = "absent: " + why;
    }
    return rep;
}

}  // namespace latmix
