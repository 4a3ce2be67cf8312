#include "latmix/polytope.hpp"

#include <algorithm>
#include <map>

#include "latmix/errors.hpp"

namespace latmix {

namespace {

Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Rat rat_det(RatRows m) {
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

/// Scales a rational hyperplane (normal, offset) so the normal becomes a
/// primitive integer vector, preserving orientation.
void canonicalize_hyperplane(RatVec& normal, Rat& offset) {
    Int l = 1;
    for (const Rat& x : normal) l = l / gcd_int(l, boost::multiprecision::denominator(x)) *
                                     boost::multiprecision::denominator(x);
    Int g = 0;
    for (const Rat& x : normal) g = gcd_int(g, boost::multiprecision::numerator(Rat(x * l)));
    Rat scale = Rat(l, g);
    for (Rat& x : normal) x *= scale;
    offset *= scale;
}

struct HullSimplex {
    std::vector<std::size_t> verts;  // point ids, sorted
    RatVec normal;
    Rat offset;
    bool alive = true;
};

/// Full-dimensional incremental hull over exact rationals. `coords` are
/// points in Q^d with at least d+1 affinely independent among them;
/// `init` are indices of such a simplex.
struct FullDimHull {
    std::size_t d;
    const std::vector<RatVec>& coords;
    RatVec ref;  // strictly interior reference point
    std::vector<HullSimplex> simplices;

    FullDimHull(std::size_t d, const std::vector<RatVec>& coords,
                const std::vector<std::size_t>& init)
        : d(d), coords(coords) {
        ref.assign(d, Rat(0));
        for (std::size_t id : init)
            for (std::size_t j = 0; j < d; ++j) ref[j] += coords[id][j];
        for (std::size_t j = 0; j < d; ++j) ref[j] /= Rat(init.size());

        for (std::size_t skip = 0; skip < init.size(); ++skip) {
            std::vector<std::size_t> face;
            for (std::size_t i = 0; i < init.size(); ++i)
                if (i != skip) face.push_back(init[i]);
            add_simplex(std::move(face));
        }
        std::vector<bool> used(coords.size(), false);
        for (std::size_t id : init) used[id] = true;
        for (std::size_t id = 0; id < coords.size(); ++id)
            if (!used[id]) insert(id);
    }

    void add_simplex(std::vector<std::size_t> verts) {
        std::sort(verts.begin(), verts.end());
        RatRows rows;
        for (std::size_t i = 1; i < verts.size(); ++i)
            rows.push_back(sub(coords[verts[i]], coords[verts[0]]));
        auto n = rat_nullvector(rows, d);
        if (!n) throw InternalError("hull: degenerate facet simplex");
        Rat b = dot(*n, coords[verts[0]]);
        Rat side = dot(*n, ref);
        if (side == b) throw InternalError("hull: reference point on facet hyperplane");
        if (side > b) {
            for (Rat& x : *n) x = -x;
            b = -b;
        }
        canonicalize_hyperplane(*n, b);
        simplices.push_back({std::move(verts), std::move(*n), std::move(b), true});
    }

    void insert(std::size_t p) {
        std::vector<std::size_t> visible;
        for (std::size_t f = 0; f < simplices.size(); ++f) {
            if (!simplices[f].alive) continue;
            if (dot(simplices[f].normal, coords[p]) > simplices[f].offset) visible.push_back(f);
        }
        if (visible.empty()) return;  // inside or on the boundary
        std::map<std::vector<std::size_t>, int> ridge_count;
        for (std::size_t f : visible) {
            const auto& vs = simplices[f].verts;
            for (std::size_t skip = 0; skip < vs.size(); ++skip) {
                std::vector<std::size_t> ridge;
                for (std::size_t i = 0; i < vs.size(); ++i)
                    if (i != skip) ridge.push_back(vs[i]);
                ++ridge_count[ridge];
            }
        }
        for (std::size_t f : visible) simplices[f].alive = false;
        for (const auto& [ridge, count] : ridge_count) {
            if (count != 1) continue;  // interior ridge of the visible region
            std::vector<std::size_t> verts = ridge;
            verts.push_back(p);
            add_simplex(std::move(verts));
        }
    }
};

std::uint64_t checked_box_size(const std::vector<Int>& lo, const std::vector<Int>& hi,
                               std::uint64_t cap) {
    Int total = 1;
    for (std::size_t j = 0; j < lo.size(); ++j) {
        if (hi[j] < lo[j]) return 0;
        total *= hi[j] - lo[j] + 1;
        if (total > Int(cap)) throw CapExceeded("lattice point bounding box exceeds cap");
    }
    return total.convert_to<std::uint64_t>();
}

template <typename Test>
Int scan_box(const LatticePolytope& p, std::uint64_t cap, Test&& test,
             std::vector<std::vector<Int>>* out) {
    std::size_t m = p.ambient_dim;
    if (m == 0) {
        // The unique point of Z^0.
        if (out) out->push_back({});
        return 1;
    }
    std::vector<Int> lo(m), hi(m);
    for (std::size_t j = 0; j < m; ++j) {
        Rat mn = p.vertices[0][j], mx = p.vertices[0][j];
        for (const auto& v : p.vertices) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        lo[j] = ceil_div(boost::multiprecision::numerator(mn), boost::multiprecision::denominator(mn));
        hi[j] = floor_div(boost::multiprecision::numerator(mx), boost::multiprecision::denominator(mx));
    }
    if (checked_box_size(lo, hi, cap) == 0) return 0;
    Int count = 0;
    std::vector<Int> x = lo;
    while (true) {
        RatVec xr(m);
        for (std::size_t j = 0; j < m; ++j) xr[j] = Rat(x[j]);
        if (test(xr)) {
            ++count;
            if (out) out->push_back(x);
        }
        std::size_t j = 0;
        while (j < m && x[j] == hi[j]) {
            x[j] = lo[j];
            ++j;
        }
        if (j == m) break;
        ++x[j];
    }
    return count;
}

}  // namespace

RatVec LatticePolytope::to_chart(const RatVec& x) const {
    RatVec diff = sub(x, base);
    RatVec c(intrinsic_dim);
    for (std::size_t i = 0; i < intrinsic_dim; ++i) c[i] = dot(chart[i], diff);
    return c;
}

bool LatticePolytope::in_affine_hull(const RatVec& x) const {
    RatVec c = to_chart(x);
    // x must reconstruct exactly from the chart coordinates.
    for (std::size_t j = 0; j < ambient_dim; ++j) {
        Rat acc = base[j];
        for (std::size_t i = 0; i < intrinsic_dim; ++i) acc += c[i] * dirs[i][j];
        if (acc != x[j]) return false;
    }
    return true;
}

bool LatticePolytope::contains(const RatVec& x) const {
    if (!in_affine_hull(x)) return false;
    RatVec c = to_chart(x);
    for (const Facet& f : facets)
        if (dot(f.normal, c) > f.offset) return false;
    return true;
}

bool LatticePolytope::strictly_contains(const RatVec& x) const {
    if (!in_affine_hull(x)) return false;
    if (intrinsic_dim == 0) return x == base;
    RatVec c = to_chart(x);
    for (const Facet& f : facets)
        if (dot(f.normal, c) >= f.offset) return false;
    return true;
}

std::vector<std::pair<RatVec, Rat>> LatticePolytope::ambient_inequalities() const {
    std::vector<std::pair<RatVec, Rat>> out;
    for (const Facet& f : facets) {
        RatVec a(ambient_dim, Rat(0));
        for (std::size_t i = 0; i < intrinsic_dim; ++i)
            for (std::size_t j = 0; j < ambient_dim; ++j) a[j] += f.normal[i] * chart[i][j];
        Rat b = f.offset + dot(a, base);
        out.emplace_back(std::move(a), std::move(b));
    }
    return out;
}

std::vector<std::pair<RatVec, Rat>> LatticePolytope::affine_hull_equations() const {
    // Basis of { e : dirs * e = 0 } via row reduction of dirs.
    RatRows rows = dirs;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < ambient_dim && r < rows.size(); ++col) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        Rat piv = rows[r][col];
        for (std::size_t j = 0; j < ambient_dim; ++j) rows[r][j] /= piv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            Rat f = rows[i][col];
            for (std::size_t j = 0; j < ambient_dim; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::pair<RatVec, Rat>> out;
    for (std::size_t free = 0; free < ambient_dim; ++free) {
        if (is_pivot[free]) continue;
        RatVec e(ambient_dim, Rat(0));
        e[free] = 1;
        for (std::size_t i = 0; i < r; ++i) e[pivots[i]] = -rows[i][free];
        Rat c = dot(e, base);
        out.emplace_back(std::move(e), std::move(c));
    }
    return out;
}

LatticePolytope convex_hull(std::vector<RatVec> points, std::size_t ambient_dim) {
    if (points.empty()) throw PreconditionError("convex_hull: empty point set");
    for (const auto& p : points)
        if (p.size() != ambient_dim) throw PreconditionError("convex_hull: dimension mismatch");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    LatticePolytope poly;
    poly.ambient_dim = ambient_dim;
    poly.base = points[0];

    // Affine basis by greedy rank growth.
    RankTracker tracker;
    std::vector<std::size_t> basis_ids;
    for (std::size_t i = 1; i < points.size(); ++i) {
        RatVec diff = sub(points[i], poly.base);
        if (tracker.add_row(diff)) {
            poly.dirs.push_back(std::move(diff));
            basis_ids.push_back(i);
        }
    }
    std::size_t d = poly.dirs.size();
    poly.intrinsic_dim = d;

    if (d == ambient_dim) {
        // Identity chart: c = x - base, with the standard basis as directions
        // so that x reconstructs as base + sum c_i * dirs_i.
        poly.chart.assign(d, RatVec(ambient_dim, Rat(0)));
        poly.dirs.assign(d, RatVec(ambient_dim, Rat(0)));
        for (std::size_t i = 0; i < d; ++i) {
            poly.chart[i][i] = 1;
            poly.dirs[i][i] = 1;
        }
    } else {
        // Left inverse chart = (D D^T)^{-1} D.
        RatRows gram(d, RatVec(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) gram[i][j] = dot(poly.dirs[i], poly.dirs[j]);
        poly.chart.assign(d, RatVec(ambient_dim));
        for (std::size_t j = 0; j < ambient_dim; ++j) {
            RatVec col(d);
            for (std::size_t i = 0; i < d; ++i) col[i] = poly.dirs[i][j];
            auto sol = rat_solve(gram, col);
            if (!sol) throw InternalError("convex_hull: singular Gram matrix");
            for (std::size_t i = 0; i < d; ++i) poly.chart[i][j] = (*sol)[i];
        }
    }

    if (d == 0) {
        poly.vertices = {points[0]};
        poly.intrinsic_volume = 1;
        return poly;
    }

    std::vector<RatVec> coords(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) coords[i] = poly.to_chart(points[i]);

    std::vector<std::size_t> vertex_ids;
    if (d == 1) {
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 1; i < points.size(); ++i) {
            if (coords[i][0] < coords[lo][0]) lo = i;
            if (coords[i][0] > coords[hi][0]) hi = i;
        }
        poly.facets.push_back({{Rat(1)}, coords[hi][0]});
        poly.facets.push_back({{Rat(-1)}, -coords[lo][0]});
        poly.intrinsic_volume = coords[hi][0] - coords[lo][0];
        vertex_ids = {lo, hi};
    } else {
        std::vector<std::size_t> init = {0};
        init.insert(init.end(), basis_ids.begin(), basis_ids.end());
        FullDimHull hull(d, coords, init);

        // Volume: cone the boundary triangulation from the interior point.
        Rat vol = 0;
        Rat dfact = 1;
        for (std::size_t i = 2; i <= d; ++i) dfact *= Rat(i);
        for (const auto& s : hull.simplices) {
            if (!s.alive) continue;
            RatRows edges;
            for (std::size_t v : s.verts) edges.push_back(sub(coords[v], hull.ref));
            Rat dv = rat_det(edges);
            vol += (dv < 0 ? -dv : dv);
        }
        poly.intrinsic_volume = vol / dfact;

        // Merge coplanar facet simplices into supporting hyperplanes.
        std::map<std::pair<RatVec, Rat>, bool> planes;
        for (const auto& s : hull.simplices)
            if (s.alive) planes[{s.normal, s.offset}] = true;
        for (const auto& [key, _] : planes) poly.facets.push_back({key.first, key.second});

        // Vertices: boundary points whose tight facet normals span Q^d.
        std::vector<std::size_t> candidates;
        for (const auto& s : hull.simplices)
            if (s.alive) candidates.insert(candidates.end(), s.verts.begin(), s.verts.end());
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (std::size_t id : candidates) {
            RankTracker normals;
            for (const auto& f : poly.facets)
                if (dot(f.normal, coords[id]) == f.offset) normals.add_row(f.normal);
            if (normals.rank() == d) vertex_ids.push_back(id);
        }
    }

    for (std::size_t id : vertex_ids) poly.vertices.push_back(points[id]);
    std::sort(poly.vertices.begin(), poly.vertices.end());
    return poly;
}

LatticePolytope convex_hull_int(const std::vector<std::vector<Int>>& points,
                                std::size_t ambient_dim) {
    std::vector<RatVec> pts;
    pts.reserve(points.size());
    for (const auto& p : points) {
        RatVec v(p.size());
        for (std::size_t j = 0; j < p.size(); ++j) v[j] = Rat(p[j]);
        pts.push_back(std::move(v));
    }
    return convex_hull(std::move(pts), ambient_dim);
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.ambient_dim != q.ambient_dim)
        throw PreconditionError("minkowski_sum: ambient dimension mismatch");
    std::vector<RatVec> sums;
    sums.reserve(p.vertices.size() * q.vertices.size());
    for (const auto& a : p.vertices)
        for (const auto& b : q.vertices) {
            RatVec s(a.size());
            for (std::size_t j = 0; j < a.size(); ++j) s[j] = a[j] + b[j];
            sums.push_back(std::move(s));
        }
    return convex_hull(std::move(sums), p.ambient_dim);
}

Rat lattice_volume(const LatticePolytope& p) {
    if (p.ambient_dim == 0) return 1;
    if (p.intrinsic_dim < p.ambient_dim) return 0;
    return p.intrinsic_volume;
}

std::vector<std::vector<Int>> lattice_points(const LatticePolytope& p, std::uint64_t max_points) {
    std::vector<std::vector<Int>> out;
    scan_box(p, max_points, [&](const RatVec& x) { return p.contains(x); }, &out);
    return out;
}

Int interior_lattice_point_count(const LatticePolytope& p, std::uint64_t max_points) {
    return scan_box(p, max_points, [&](const RatVec& x) { return p.strictly_contains(x); },
                    nullptr);
}

std::vector<std::vector<Int>> project_support(const std::vector<std::vector<Int>>& points,
                                              const QuotientMap& pi) {
    std::vector<std::vector<Int>> out;
    for (const auto& p : points) out.push_back(pi.apply(p));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LatticePolytope dilate(const LatticePolytope& p, const Int& factor) {
    if (factor < 0) throw PreconditionError("dilate: negative factor");
    std::vector<RatVec> pts = p.vertices;
    for (auto& v : pts)
        for (auto& x : v) x *= Rat(factor);
    return convex_hull(std::move(pts), p.ambient_dim);
}

}  // namespace latmix
