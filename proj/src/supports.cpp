#include "latmix/supports.hpp"

#include <algorithm>

#include "latmix/errors.hpp"

namespace latmix {

namespace {

std::vector<std::vector<Int>> canonical_points(const std::vector<std::vector<Int>>& pts) {
    auto sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return sorted;
}

/// Difference rows a - a_0 of one support (anchor = first point).
void append_difference_rows(const IntMat& support, std::vector<std::vector<Int>>& out) {
    for (std::size_t p = 1; p < support.rows; ++p) {
        std::vector<Int> d(support.cols);
        for (std::size_t c = 0; c < support.cols; ++c) d[c] = support(p, c) - support(0, c);
        out.push_back(std::move(d));
    }
}

void check_indices(const SupportCollection& a, const IndexSubset& j) {
    for (std::size_t idx : j)
        if (idx >= a.size()) throw PreconditionError("support index out of range");
}

std::uint64_t subset_count_or_throw(std::size_t k, std::size_t max_subsets) {
    if (k >= 63 || (std::uint64_t(1) << k) > max_subsets)
        throw CapExceeded("subset enumeration cap exceeded (k = " + std::to_string(k) + ")");
    return std::uint64_t(1) << k;
}

/// Visits every subset with its defect, reusing ranks along a recursive
/// include/exclude tree. visit(bitmask, size, rank).
template <typename Visit>
void enumerate_defects(const SupportCollection& a, Visit&& visit) {
    std::size_t k = a.size();
    std::vector<std::vector<std::vector<Int>>> diffs(k);
    for (std::size_t i = 0; i < k; ++i) append_difference_rows(a.supports[i], diffs[i]);

    // Depth-first over indices; the tracker is copied on the include branch.
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t mask, std::size_t size,
                   const RankTracker& tracker) -> void {
        if (i == k) {
            visit(mask, size, tracker.rank());
            return;
        }
        self(self, i + 1, mask, size, tracker);
        RankTracker with = tracker;
        for (const auto& row : diffs[i]) {
            RatVec v(row.size());
            for (std::size_t c = 0; c < row.size(); ++c) v[c] = Rat(row[c]);
            with.add_row(std::move(v));
        }
        self(self, i + 1, mask | (std::uint64_t(1) << i), size + 1, with);
    };
    rec(rec, 0, 0, 0, RankTracker{});
}

}  // namespace

SupportCollection SupportCollection::create(
    std::size_t ambient_dim, const std::vector<std::vector<std::vector<Int>>>& points) {
    SupportCollection a;
    a.ambient_dim = ambient_dim;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].empty())
            throw ParseError("support " + std::to_string(i + 1) + " is empty; supports must be nonempty");
        for (std::size_t p = 0; p < points[i].size(); ++p)
            if (points[i][p].size() != ambient_dim)
                throw ParseError("support " + std::to_string(i + 1) + ", point " +
                                 std::to_string(p + 1) + ": expected " +
                                 std::to_string(ambient_dim) + " coordinates, got " +
                                 std::to_string(points[i][p].size()));
        auto pts = canonical_points(points[i]);
        IntMat m(pts.size(), ambient_dim);
        for (std::size_t p = 0; p < pts.size(); ++p) m.set_row(p, pts[p]);
        a.supports.push_back(std::move(m));
    }
    return a;
}

IndexSubset subset_complement(const IndexSubset& j, std::size_t k) {
    std::vector<bool> in(k, false);
    for (std::size_t idx : j) in[idx] = true;
    IndexSubset c;
    for (std::size_t i = 0; i < k; ++i)
        if (!in[i]) c.push_back(i);
    return c;
}

SublatticeBasis difference_lattice(const SupportCollection& a, const IndexSubset& j) {
    check_indices(a, j);
    std::vector<std::vector<Int>> rows;
    for (std::size_t idx : j) append_difference_rows(a.supports[idx], rows);
    IntMat gens(rows.size(), a.ambient_dim);
    for (std::size_t r = 0; r < rows.size(); ++r) gens.set_row(r, rows[r]);
    return sublattice_from_generators(a.ambient_dim, gens);
}

int direction_space_dim(const SupportCollection& a, const IndexSubset& j) {
    check_indices(a, j);
    std::vector<std::vector<Int>> rows;
    for (std::size_t idx : j) append_difference_rows(a.supports[idx], rows);
    IntMat m(rows.size(), a.ambient_dim);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return static_cast<int>(rank_q(m));
}

int defect(const SupportCollection& a, const IndexSubset& j) {
    return direction_space_dim(a, j) - static_cast<int>(j.size());
}

int minimal_defect(const SupportCollection& a, std::size_t max_subsets) {
    subset_count_or_throw(a.size(), max_subsets);
    int best = 0;  // empty subset
    enumerate_defects(a, [&](std::uint64_t, std::size_t size, std::size_t rank) {
        int d = static_cast<int>(rank) - static_cast<int>(size);
        best = std::min(best, d);
    });
    return best;
}

IndexSubset essential_subcollection(const SupportCollection& a, std::size_t max_subsets) {
    subset_count_or_throw(a.size(), max_subsets);
    int d = minimal_defect(a, max_subsets);
    if (d == 0) return {};

    std::vector<std::uint64_t> achievers;
    enumerate_defects(a, [&](std::uint64_t mask, std::size_t size, std::size_t rank) {
        if (static_cast<int>(rank) - static_cast<int>(size) == d) achievers.push_back(mask);
    });
    // Inclusion-minimal achievers; the theorem says there is exactly one.
    std::vector<std::uint64_t> minimal;
    for (std::uint64_t m : achievers) {
        bool has_proper_subset = false;
        for (std::uint64_t o : achievers)
            if (o != m && (o & m) == o) {
                has_proper_subset = true;
                break;
            }
        if (!has_proper_subset) minimal.push_back(m);
    }
    if (minimal.size() != 1)
        throw InternalError("essential subcollection is not unique; this contradicts a theorem "
                            "and indicates a bug");
    IndexSubset j;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (minimal[0] & (std::uint64_t(1) << i)) j.push_back(i);
    return j;
}

bool is_generically_consistent(const SupportCollection& a, std::size_t max_subsets) {
    return minimal_defect(a, max_subsets) >= 0;
}

int consistency_codimension(const SupportCollection& a, std::size_t max_subsets) {
    return std::max(0, -minimal_defect(a, max_subsets));
}

SupportCollection projected_complement(const SupportCollection& a, const IndexSubset& j) {
    check_indices(a, j);
    SublatticeBasis lambda = saturation(difference_lattice(a, j));
    QuotientMap pi = quotient_map(lambda);
    IndexSubset comp = subset_complement(j, a.size());
    std::vector<std::vector<std::vector<Int>>> projected;
    for (std::size_t idx : comp) {
        std::vector<std::vector<Int>> pts;
        for (std::size_t p = 0; p < a.supports[idx].rows; ++p)
            pts.push_back(pi.apply(a.supports[idx].row(p)));
        projected.push_back(std::move(pts));
    }
    return SupportCollection::create(pi.target_dim, projected);
}

int defect_of_projected_complement(const SupportCollection& a, const IndexSubset& j) {
    SupportCollection q = projected_complement(a, j);
    IndexSubset all(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) all[i] = i;
    return defect(q, all);
}

IndexSubset consistent_core(const SupportCollection& a, std::size_t max_subsets) {
    std::size_t k = a.size();
    std::size_t n = a.ambient_dim;
    IndexSubset all(k);
    for (std::size_t i = 0; i < k; ++i) all[i] = i;
    int def_a = defect(a, all);
    int d_a = minimal_defect(a, max_subsets);
    if (!(def_a == d_a && d_a < 0))
        throw PreconditionError("consistent_core: collection is not essential as a whole");
    if (essential_subcollection(a, max_subsets) != all)
        throw PreconditionError("consistent_core: collection is not essential as a whole");
    if (direction_space_dim(a, all) != static_cast<int>(n))
        throw PreconditionError("consistent_core: dim L(A) must equal the ambient dimension");

    auto restrict = [&](const IndexSubset& keep) {
        std::vector<std::vector<std::vector<Int>>> pts;
        for (std::size_t idx : keep) {
            std::vector<std::vector<Int>> sp;
            for (std::size_t p = 0; p < a.supports[idx].rows; ++p)
                sp.push_back(a.supports[idx].row(p));
            pts.push_back(std::move(sp));
        }
        return SupportCollection::create(n, pts);
    };

    IndexSubset current = all;
    int cur_def = def_a;
    while (cur_def < 0) {
        bool removed = false;
        for (std::size_t pos = 0; pos < current.size(); ++pos) {
            IndexSubset next = current;
            next.erase(next.begin() + pos);
            SupportCollection sub = restrict(next);
            IndexSubset sub_all(sub.size());
            for (std::size_t i = 0; i < sub.size(); ++i) sub_all[i] = i;
            if (defect(sub, sub_all) == cur_def + 1 &&
                minimal_defect(sub, max_subsets) == cur_def + 1) {
                current = next;
                ++cur_def;
                removed = true;
                break;
            }
        }
        if (!removed)
            throw InternalError("consistent_core: no removable index; contradicts the "
                                "successive-removal argument");
    }
    if (current.size() != n)
        throw InternalError("consistent_core: terminated with wrong size");
    return current;
}

DefectReport build_defect_report(const SupportCollection& a, std::size_t max_subsets) {
    subset_count_or_throw(a.size(), max_subsets);
    DefectReport r;
    std::size_t k = a.size();
    if (k <= 16) {
        enumerate_defects(a, [&](std::uint64_t mask, std::size_t size, std::size_t rank) {
            r.defect_by_subset[static_cast<std::uint32_t>(mask)] =
                static_cast<int>(rank) - static_cast<int>(size);
        });
    } else {
        for (std::size_t i = 0; i < k && i < 32; ++i)
            r.defect_by_subset[std::uint32_t(1) << i] = defect(a, {i});
    }
    r.minimal_defect = minimal_defect(a, max_subsets);
    r.essential = essential_subcollection(a, max_subsets);
    if (!r.essential.empty()) {
        SublatticeBasis g = difference_lattice(a, r.essential);
        r.essential_index = lattice_index(g, saturation(g));
    }
    r.generically_consistent = r.minimal_defect >= 0;
    r.consistency_codim = std::max(0, -r.minimal_defect);
    r.omega_dim = 0;
    for (const auto& s : a.supports) r.omega_dim += s.rows;
    r.incidence_dim = static_cast<long long>(a.ambient_dim) +
                      static_cast<long long>(r.omega_dim) - static_cast<long long>(k);
    r.generic_zero_set_dim = static_cast<long long>(a.ambient_dim) -
                             static_cast<long long>(k) - r.minimal_defect;
    return r;
}

}  // namespace latmix
