#pragma once

#include <optional>
#include <string>

#include "latmix/polytope.hpp"
#include "latmix/supports.hpp"

namespace latmix {

/// Component structure of the zero set of a generic consistent system.
struct ZeroSetStructure {
    IndexSubset essential;
    Int num_components = 1;               // ind(J)
    long long component_ambient_dim = 0;  // n - dim L(J)
    long long zero_set_dim = 0;           // n - k - d(A)
    std::vector<LatticePolytope> residual_polytopes;  // pi_J(Delta_i), i not in J
    bool complete_intersection = true;
};

struct InvariantReport {
    DefectReport defect_report;
    ZeroSetStructure structure;
    std::optional<Int> root_count;
    std::optional<Int> euler_characteristic;
    std::optional<Int> geometric_genus;
    std::string root_count_note;
    std::string euler_note;
    std::string genus_note;
};

/// m! times the mixed volume of m polytopes in dimension m, by
/// inclusion-exclusion over Minkowski sums. m = 0 gives 1.
Int bkk_number(const std::vector<LatticePolytope>& polytopes);

/// Number of roots of the generic consistent system; requires a
/// zero-dimensional generic zero set.
Int root_count(const SupportCollection& a, std::size_t max_subsets = kDefaultMaxSubsets);

/// Euler characteristic in the hypersurface case (essential complement is a
/// single support).
Int euler_characteristic(const SupportCollection& a, std::size_t max_subsets = kDefaultMaxSubsets);

/// Geometric genus in the hypersurface case with positive-dimensional
/// components.
Int geometric_genus(const SupportCollection& a, std::size_t max_subsets = kDefaultMaxSubsets,
                    std::uint64_t max_points = kDefaultMaxLatticePoints);

ZeroSetStructure zero_set_structure(const SupportCollection& a,
                                    std::size_t max_subsets = kDefaultMaxSubsets);

InvariantReport full_report(const SupportCollection& a,
                            std::size_t max_subsets = kDefaultMaxSubsets,
                            std::uint64_t max_points = kDefaultMaxLatticePoints);

}  // namespace latmix
