#include "latmix/oracles.hpp"

#include <algorithm>
#include <sstream>

#include "latmix/errors.hpp"

namespace latmix {

namespace {

/// Row w of the inverse Vandermonde at nodes 1..count: applying w to samples
/// p(1..count) yields the coefficient of t^power in p (deg p < count).
RatVec coefficient_weights(std::size_t count, std::size_t power) {
    RatRows vand(count, RatVec(count));
    for (std::size_t j = 0; j < count; ++j) {
        Rat t = Rat(j + 1);
        Rat acc = 1;
        for (std::size_t i = 0; i < count; ++i) {
            vand[j][i] = acc;
            acc *= t;
        }
    }
    // Solve V^T w = e_power  (so that w . samples = coeff).
    RatRows vt(count, RatVec(count));
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) vt[i][j] = vand[j][i];
    RatVec e(count, Rat(0));
    e[power] = 1;
    auto w = rat_solve(vt, e);
    if (!w) throw InternalError("Vandermonde system is singular");
    return *w;
}

Rat rat_det_local(RatRows m) {
    std::size_t n = m.size();
    Rat result = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m[p][col] == 0) ++p;
        if (p == n) return 0;
        if (p != col) {
            std::swap(m[p], m[col]);
            result = -result;
        }
        result *= m[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return result;
}

/// Fraction-free (Bareiss-style) integer rank, independent of RankTracker.
std::size_t bareiss_rank(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && m[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[rank], m[p]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

std::string serialize_collection(const SupportCollection& a) {
    std::ostringstream os;
    os << "{\"ambient_dim\":" << a.ambient_dim << ",\"supports\":[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << "[";
        for (std::size_t p = 0; p < a.supports[i].rows; ++p) {
            if (p) os << ",";
            os << "[";
            for (std::size_t c = 0; c < a.ambient_dim; ++c) {
                if (c) os << ",";
                os << a.supports[i](p, c);
            }
            os << "]";
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

std::string serialize_points(const std::vector<RatVec>& pts) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) os << ",";
        os << "[";
        for (std::size_t j = 0; j < pts[i].size(); ++j) {
            if (j) os << ",";
            os << pts[i][j];
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string serialize_matrix(const IntMat& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (i) os << ",";
        os << "[";
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (j) os << ",";
            os << m(i, j);
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace

Rat ehrhart_volume(const LatticePolytope& p, std::uint64_t max_points) {
    std::size_t m = p.ambient_dim;
    if (m > 4) throw CapExceeded("ehrhart_volume: dimension cap is 4");
    // Counts at t = 0..m; the m-th finite difference over m! is the leading
    // coefficient of the degree-m Ehrhart polynomial.
    std::vector<Rat> counts;
    for (std::size_t t = 0; t <= m; ++t) {
        LatticePolytope scaled = dilate(p, Int(t));
        counts.push_back(Rat(Int(lattice_points(scaled, max_points).size())));
    }
    for (std::size_t step = 0; step < m; ++step)
        for (std::size_t i = counts.size() - 1; i > step; --i)
            counts[i] = counts[i] - counts[i - 1];
    Rat fact = 1;
    for (std::size_t i = 2; i <= m; ++i) fact *= Rat(i);
    return counts[m] / fact;
}

Int mixed_volume_by_interpolation(const std::vector<LatticePolytope>& polytopes) {
    std::size_t m = polytopes.size();
    if (m == 0) return 1;
    if (m > 3) throw CapExceeded("mixed_volume_by_interpolation: dimension cap is 3");
    for (const auto& p : polytopes)
        if (p.ambient_dim != m)
            throw PreconditionError("mixed_volume_by_interpolation: dimension mismatch");

    RatVec w = coefficient_weights(m + 1, 1);
    std::vector<std::size_t> idx(m, 0);  // grid indices, node = idx + 1
    Rat coeff = 0;
    while (true) {
        // vol(sum of lambda_i P_i) at lambda_i = idx[i] + 1.
        std::vector<RatVec> pts;
        for (std::size_t i = 0; i < m; ++i) {
            Rat lambda = Rat(idx[i] + 1);
            std::vector<RatVec> scaled;
            for (const auto& v : polytopes[i].vertices) {
                RatVec s(m);
                for (std::size_t j = 0; j < m; ++j) s[j] = v[j] * lambda;
                scaled.push_back(std::move(s));
            }
            if (pts.empty()) {
                pts = std::move(scaled);
            } else {
                std::vector<RatVec> next;
                next.reserve(pts.size() * scaled.size());
                for (const auto& x : pts)
                    for (const auto& y : scaled) {
                        RatVec s(m);
                        for (std::size_t j = 0; j < m; ++j) s[j] = x[j] + y[j];
                        next.push_back(std::move(s));
                    }
                std::sort(next.begin(), next.end());
                next.erase(std::unique(next.begin(), next.end()), next.end());
                pts = std::move(next);
            }
        }
        Rat vol = lattice_volume(convex_hull(std::move(pts), m));
        Rat weight = 1;
        for (std::size_t i = 0; i < m; ++i) weight *= w[idx[i]];
        coeff += weight * vol;

        std::size_t j = 0;
        while (j < m && idx[j] == m) {
            idx[j] = 0;
            ++j;
        }
        if (j == m) break;
        ++idx[j];
    }
    // The coefficient of lambda_1...lambda_m in vol(sum lambda_i P_i) is
    // m! times the mixed volume, which is the BKK number itself.
    if (boost::multiprecision::denominator(coeff) != 1)
        throw InternalError("mixed_volume_by_interpolation: non-integer result");
    return boost::multiprecision::numerator(coeff);
}

Int index_by_fundamental_domain(const SublatticeBasis& g, const SublatticeBasis& lambda,
                                const Int& max_index) {
    if (g.rank() != lambda.rank())
        throw PreconditionError("index_by_fundamental_domain: rank mismatch");
    std::size_t r = g.rank();
    if (r == 0) return 1;
    if (r > 3) throw CapExceeded("index_by_fundamental_domain: rank cap is 3");
    std::size_t n = g.ambient_dim;

    // Express G's basis in Lambda's coordinates: M with M * lambda = g (rows).
    RatRows lt(r, RatVec(r));
    std::vector<std::size_t> pick;
    {
        RankTracker t;
        for (std::size_t col = 0; col < n && pick.size() < r; ++col) {
            RatVec eq(r);
            for (std::size_t j = 0; j < r; ++j) eq[j] = Rat(lambda.basis(j, col));
            if (t.add_row(eq)) pick.push_back(col);
        }
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) lt[i][j] = Rat(lambda.basis(j, pick[i]));
    RatRows m_rows(r, RatVec(r));
    for (std::size_t i = 0; i < r; ++i) {
        RatVec b(r);
        for (std::size_t c = 0; c < r; ++c) b[c] = Rat(g.basis(i, pick[c]));
        auto x = rat_solve(lt, b);
        if (!x) throw PreconditionError("index_by_fundamental_domain: degenerate basis");
        for (std::size_t j = 0; j < r; ++j) {
            if (boost::multiprecision::denominator((*x)[j]) != 1)
                throw PreconditionError("index_by_fundamental_domain: G not inside Lambda");
            m_rows[i][j] = (*x)[j];
        }
    }
    Rat d = rat_det_local(m_rows);
    Rat ad = d < 0 ? Rat(-d) : d;
    if (ad > Rat(max_index)) throw CapExceeded("index_by_fundamental_domain: index cap exceeded");

    // Count integer c with c = t * M for t in [0,1)^r.
    std::vector<Int> lo(r), hi(r);
    for (std::size_t j = 0; j < r; ++j) {
        Rat lob = 0, hib = 0;
        for (std::size_t i = 0; i < r; ++i) {
            const Rat& v = m_rows[i][j];
            if (v < 0)
                lob += v;
            else
                hib += v;
        }
        lo[j] = ceil_div(boost::multiprecision::numerator(lob), boost::multiprecision::denominator(lob));
        hi[j] = floor_div(boost::multiprecision::numerator(hib), boost::multiprecision::denominator(hib));
    }
    // Transposed system for t: M^T t = c.
    RatRows mt(r, RatVec(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) mt[i][j] = m_rows[j][i];
    Int count = 0;
    std::vector<Int> c = lo;
    while (true) {
        RatVec rhs(r);
        for (std::size_t j = 0; j < r; ++j) rhs[j] = Rat(c[j]);
        auto t = rat_solve(mt, rhs);
        if (t) {
            bool inside = true;
            for (const Rat& ti : *t)
                if (ti < 0 || ti >= 1) {
                    inside = false;
                    break;
                }
            if (inside) ++count;
        }
        std::size_t j = 0;
        while (j < r && c[j] == hi[j]) {
            c[j] = lo[j];
            ++j;
        }
        if (j == r) break;
        ++c[j];
    }
    return count;
}

std::pair<int, IndexSubset> exhaustive_essential(const SupportCollection& a) {
    std::size_t k = a.size();
    if (k > 16) throw CapExceeded("exhaustive_essential: cap is k <= 16");
    std::vector<int> defect_of(std::size_t(1) << k);
    int d = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << k); ++mask) {
        std::vector<std::vector<Int>> rows;
        std::size_t size = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (!(mask & (std::uint32_t(1) << i))) continue;
            ++size;
            for (std::size_t p = 1; p < a.supports[i].rows; ++p) {
                std::vector<Int> row(a.ambient_dim);
                for (std::size_t c = 0; c < a.ambient_dim; ++c)
                    row[c] = a.supports[i](p, c) - a.supports[i](0, c);
                rows.push_back(std::move(row));
            }
        }
        defect_of[mask] = static_cast<int>(bareiss_rank(std::move(rows))) - static_cast<int>(size);
        d = std::min(d, defect_of[mask]);
    }
    if (d == 0) return {0, {}};
    std::uint32_t best = 0;
    bool found = false;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << k); ++mask) {
        if (defect_of[mask] != d) continue;
        bool minimal = true;
        for (std::uint32_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask)
            if (defect_of[sub] == d) {
                minimal = false;
                break;
            }
        if (!minimal) continue;
        if (found) throw InternalError("exhaustive_essential: multiple minimal achievers");
        best = mask;
        found = true;
    }
    IndexSubset j;
    for (std::size_t i = 0; i < k; ++i)
        if (best & (std::uint32_t(1) << i)) j.push_back(i);
    return {d, j};
}

SupportCollection random_support_collection(std::mt19937_64& rng, std::size_t max_dim,
                                            std::size_t max_supports, long coordinate_bound,
                                            std::size_t max_support_size) {
    std::uniform_int_distribution<std::size_t> dim_dist(1, max_dim);
    std::uniform_int_distribution<std::size_t> k_dist(1, max_supports);
    std::uniform_int_distribution<std::size_t> size_dist(1, max_support_size);
    std::size_t n = dim_dist(rng);
    std::size_t k = k_dist(rng);
    std::uniform_int_distribution<long> coord(-coordinate_bound, coordinate_bound);
    std::vector<std::vector<std::vector<Int>>> supports(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t sz = size_dist(rng);
        for (std::size_t p = 0; p < sz; ++p) {
            std::vector<Int> pt(n);
            for (std::size_t c = 0; c < n; ++c) pt[c] = coord(rng);
            supports[i].push_back(std::move(pt));
        }
    }
    return SupportCollection::create(n, supports);
}

LatticePolytope random_lattice_polytope(std::mt19937_64& rng, std::size_t dim,
                                        long coordinate_bound, std::size_t max_points) {
    std::uniform_int_distribution<std::size_t> count_dist(dim + 1, std::max(dim + 1, max_points));
    std::uniform_int_distribution<long> coord(0, coordinate_bound);
    std::size_t count = count_dist(rng);
    std::vector<std::vector<Int>> pts(count, std::vector<Int>(dim));
    for (auto& p : pts)
        for (auto& x : p) x = coord(rng);
    return convex_hull_int(pts, dim);
}

std::pair<SublatticeBasis, SublatticeBasis> random_sublattice_pair(std::mt19937_64& rng,
                                                                   std::size_t max_rank,
                                                                   std::size_t max_dim) {
    std::uniform_int_distribution<std::size_t> rank_dist(1, max_rank);
    std::size_t r = rank_dist(rng);
    std::uniform_int_distribution<std::size_t> dim_dist(r, max_dim);
    std::size_t n = dim_dist(rng);
    std::uniform_int_distribution<long> coord(-3, 3);
    std::uniform_int_distribution<long> small(-2, 2);
    while (true) {
        IntMat lam(r, n);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j) lam(i, j) = coord(rng);
        if (rank_q(lam) != r) continue;
        IntMat mult(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) mult(i, j) = small(rng);
        if (det(mult) == 0) continue;
        SublatticeBasis lambda = sublattice_from_generators(n, lam);
        SublatticeBasis g = sublattice_from_generators(n, mul(mult, lambda.basis));
        return {g, lambda};
    }
}

std::vector<CheckResult> run_check_suite(const OracleConfig& config) {
    std::vector<CheckResult> results;

    {
        CheckResult r{"bkk_number vs mixed_volume_by_interpolation"};
        std::mt19937_64 rng(config.random_seed * 4 + 1);
        std::uniform_int_distribution<std::size_t> mdist(1, std::min<std::size_t>(3, config.dimension_cap));
        for (std::size_t i = 0; i < config.instance_count; ++i) {
            std::size_t m = mdist(rng);
            std::vector<LatticePolytope> polys;
            std::string instance = "[";
            for (std::size_t j = 0; j < m; ++j) {
                polys.push_back(random_lattice_polytope(rng, m, config.coordinate_bound,
                                                        config.support_size_cap));
                if (j) instance += ",";
                instance += serialize_points(polys.back().vertices);
            }
            instance += "]";
            ++r.instances;
            if (bkk_number(polys) != mixed_volume_by_interpolation(polys)) {
                ++r.failures;
                if (r.first_failure.empty()) r.first_failure = instance;
            }
        }
        results.push_back(std::move(r));
    }

    {
        CheckResult r{"lattice_volume vs ehrhart_volume"};
        std::mt19937_64 rng(config.random_seed * 4 + 2);
        std::uniform_int_distribution<std::size_t> mdist(1, std::min<std::size_t>(3, config.dimension_cap));
        for (std::size_t i = 0; i < config.instance_count; ++i) {
            LatticePolytope p = random_lattice_polytope(rng, mdist(rng), config.coordinate_bound,
                                                        config.support_size_cap + 2);
            ++r.instances;
            if (lattice_volume(p) != ehrhart_volume(p)) {
                ++r.failures;
                if (r.first_failure.empty()) r.first_failure = serialize_points(p.vertices);
            }
        }
        results.push_back(std::move(r));
    }

    {
        CheckResult r{"lattice_index vs index_by_fundamental_domain"};
        std::mt19937_64 rng(config.random_seed * 4 + 3);
        for (std::size_t i = 0; i < config.instance_count; ++i) {
            auto [g, lambda] = random_sublattice_pair(rng);
            ++r.instances;
            if (lattice_index(g, lambda) != index_by_fundamental_domain(g, lambda)) {
                ++r.failures;
                if (r.first_failure.empty())
                    r.first_failure = "{\"G\":" + serialize_matrix(g.basis) +
                                      ",\"Lambda\":" + serialize_matrix(lambda.basis) + "}";
            }
        }
        results.push_back(std::move(r));
    }

    {
        CheckResult r{"essential_subcollection vs exhaustive_essential"};
        std::mt19937_64 rng(config.random_seed * 4 + 4);
        for (std::size_t i = 0; i < config.instance_count; ++i) {
            SupportCollection a = random_support_collection(rng);
            ++r.instances;
            auto [d, j] = exhaustive_essential(a);
            if (d != minimal_defect(a) || j != essential_subcollection(a)) {
                ++r.failures;
                if (r.first_failure.empty()) r.first_failure = serialize_collection(a);
            }
        }
        results.push_back(std::move(r));
    }

    return results;
}

}  // namespace latmix
