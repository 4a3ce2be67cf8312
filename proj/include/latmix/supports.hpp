#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latmix/lattice.hpp"

namespace latmix {

/// Ordered collection A_1,...,A_k of finite nonempty point sets in Z^n.
/// Points within a support are deduplicated and sorted lexicographically.
struct SupportCollection {
    std::size_t ambient_dim = 0;
    std::vector<IntMat> supports;  // each: points as rows

    static SupportCollection create(std::size_t ambient_dim,
                                    const std::vector<std::vector<std::vector<Int>>>& points);

    std::size_t size() const { return supports.size(); }
    std::vector<Int> point(std::size_t support, std::size_t idx) const {
        return supports[support].row(idx);
    }
};

/// Subset of {0,...,k-1}, ascending. (Reports and the CLI print 1-based.)
using IndexSubset = std::vector<std::size_t>;

IndexSubset subset_complement(const IndexSubset& j, std::size_t k);

inline constexpr std::size_t kDefaultMaxSubsets = std::size_t(1) << 24;

struct DefectReport {
    // Full table only for k <= 16; key is the subset bitmask.
    std::map<std::uint32_t, int> defect_by_subset;
    int minimal_defect = 0;
    IndexSubset essential;
    Int essential_index = 1;  // ind(J) of the essential subcollection
    bool generically_consistent = true;
    int consistency_codim = 0;
    std::size_t omega_dim = 0;      // sum |A_i|
    long long incidence_dim = 0;    // n + sum |A_i| - k
    long long generic_zero_set_dim = 0;  // n - k - d(A)
};

/// Difference lattice G(J): Z-span of {a - a0 : a in A_i, i in J}.
SublatticeBasis difference_lattice(const SupportCollection& a, const IndexSubset& j);

/// dim L(J): rank over Q of the stacked difference vectors.
int direction_space_dim(const SupportCollection& a, const IndexSubset& j);

/// def(J) = dim L(J) - |J|; def(empty) = 0.
int defect(const SupportCollection& a, const IndexSubset& j);

/// d(A) = min over all subsets J of def(J); always <= 0.
int minimal_defect(const SupportCollection& a, std::size_t max_subsets = kDefaultMaxSubsets);

/// The unique inclusion-minimal subset attaining d(A); empty when d(A) = 0.
/// Throws InternalError if inclusion-minimal achievers are not unique.
IndexSubset essential_subcollection(const SupportCollection& a,
                                    std::size_t max_subsets = kDefaultMaxSubsets);

bool is_generically_consistent(const SupportCollection& a,
                               std::size_t max_subsets = kDefaultMaxSubsets);

/// max(0, -d(A)).
int consistency_codimension(const SupportCollection& a,
                            std::size_t max_subsets = kDefaultMaxSubsets);

/// Defect of the projected complement collection (pi_J(A_i))_{i not in J}
/// inside Z^n / Lambda(J). Satisfies def(A) = def(J) + result.
int defect_of_projected_complement(const SupportCollection& a, const IndexSubset& j);

/// Projected complement collection itself, in quotient coordinates.
SupportCollection projected_complement(const SupportCollection& a, const IndexSubset& j);

/// For an essential-as-a-whole collection with dim L(A) = n, the subset I of
/// size n with d(I) = 0 obtained by removing indices that raise the defect by
/// exactly one.
IndexSubset consistent_core(const SupportCollection& a,
                            std::size_t max_subsets = kDefaultMaxSubsets);

DefectReport build_defect_report(const SupportCollection& a,
                                 std::size_t max_subsets = kDefaultMaxSubsets);

}  // namespace latmix
