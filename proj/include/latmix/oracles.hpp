#pragma once

#include <random>
#include <string>

#include "latmix/invariants.hpp"

namespace latmix {

struct OracleConfig {
    std::uint64_t random_seed = 20240501;
    std::size_t instance_count = 200;
    std::size_t dimension_cap = 3;
    long coordinate_bound = 4;
    std::size_t support_size_cap = 4;
};

/// Leading coefficient of the interpolated Ehrhart polynomial
/// t -> #(tP intersect Z^m), evaluated at t = 0..m. Equals lattice_volume.
Rat ehrhart_volume(const LatticePolytope& p,
                   std::uint64_t max_points = kDefaultMaxLatticePoints);

/// m! times the coefficient of lambda_1...lambda_m in the interpolated
/// polynomial vol(lambda_1 P_1 + ... + lambda_m P_m). Equals bkk_number.
Int mixed_volume_by_interpolation(const std::vector<LatticePolytope>& polytopes);

/// Counts points of Lambda in a half-open fundamental parallelepiped of G.
/// Equals lattice_index.
Int index_by_fundamental_domain(const SublatticeBasis& g, const SublatticeBasis& lambda,
                                const Int& max_index = Int(100000));

/// Unpruned full subset scan with fraction-free integer rank; returns
/// (d(A), essential subset). Equals minimal_defect / essential_subcollection.
std::pair<int, IndexSubset> exhaustive_essential(const SupportCollection& a);

// Seeded random instance generators (shared by the check suite and tests).
SupportCollection random_support_collection(std::mt19937_64& rng, std::size_t max_dim = 4,
                                            std::size_t max_supports = 5,
                                            long coordinate_bound = 3,
                                            std::size_t max_support_size = 4);
LatticePolytope random_lattice_polytope(std::mt19937_64& rng, std::size_t dim,
                                        long coordinate_bound = 4,
                                        std::size_t max_points = 6);
/// A pair (G, Lambda) with G a finite-index sublattice of Lambda.
std::pair<SublatticeBasis, SublatticeBasis> random_sublattice_pair(std::mt19937_64& rng,
                                                                   std::size_t max_rank = 3,
                                                                   std::size_t max_dim = 4);

struct CheckResult {
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::string first_failure;  // serialized instance for replay, if any
};

/// Cross-validates every oracle against its primary counterpart.
std::vector<CheckResult> run_check_suite(const OracleConfig& config);

}  // namespace latmix
