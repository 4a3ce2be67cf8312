#include "latmix/lattice.hpp"

#include "latmix/errors.hpp"

namespace latmix {

std::vector<Int> QuotientMap::apply(const std::vector<Int>& v) const {
    if (v.size() != source_dim) throw PreconditionError("quotient map: dimension mismatch");
    std::vector<Int> out(target_dim);
    for (std::size_t i = 0; i < target_dim; ++i)
        for (std::size_t j = 0; j < source_dim; ++j) out[i] += matrix(i, j) * v[j];
    return out;
}

SublatticeBasis sublattice_from_generators(std::size_t ambient_dim, const IntMat& generators) {
    if (generators.rows != 0 && generators.cols != ambient_dim)
        throw PreconditionError("generator width does not match ambient dimension");
    HnfResult h = hermite_normal_form(generators);
    std::size_t r = 0;
    while (r < h.H.rows && !h.H.is_zero_row(r)) ++r;
    IntMat basis(r, ambient_dim);
    for (std::size_t i = 0; i < r; ++i) basis.set_row(i, h.H.row(i));
    return {ambient_dim, std::move(basis)};
}

SublatticeBasis saturation(const SublatticeBasis& g) {
    std::size_t r = g.rank();
    std::size_t n = g.ambient_dim;
    if (r == 0) return g;
    // B = U^{-1} D V^{-1}; the first r rows of V^{-1} span the saturation.
    SnfResult s = smith_normal_form(g.basis);
    auto vinv = inverse_unimodular(s.V);
    if (!vinv) throw InternalError("SNF transform not unimodular");
    IntMat gens(r, n);
    for (std::size_t i = 0; i < r; ++i) gens.set_row(i, vinv->row(i));
    return sublattice_from_generators(n, gens);
}

bool is_saturated(const SublatticeBasis& g) {
    for (const Int& f : invariant_factors(g.basis))
        if (f != 1) return false;
    return true;
}

Int lattice_index(const SublatticeBasis& g, const SublatticeBasis& lambda) {
    if (g.ambient_dim != lambda.ambient_dim)
        throw PreconditionError("lattice_index: ambient dimension mismatch");
    if (g.rank() != lambda.rank())
        throw PreconditionError("lattice_index: rank mismatch");
    std::size_t r = g.rank();
    if (r == 0) return 1;
    std::size_t n = g.ambient_dim;
    // Express each basis row of G in Lambda's basis; must be integral.
    // Solve X * Lambda = G row by row via the transposed system.
    IntMat X(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        // lambda.basis^T (n x r) * x = g_row (n); overdetermined, use any r
        // independent rows of lambda.basis^T (columns of lambda.basis).
        RatRows A;
        RatVec b;
        RankTracker tracker;
        for (std::size_t col = 0; col < n && A.size() < r; ++col) {
            RatVec eq(r);
            for (std::size_t j = 0; j < r; ++j) eq[j] = Rat(lambda.basis(j, col));
            if (tracker.add_row(eq)) {
                A.push_back(eq);
                b.push_back(Rat(g.basis(i, col)));
            }
        }
        if (A.size() != r) throw PreconditionError("lattice_index: degenerate basis");
        auto x = rat_solve(A, b);
        if (!x) throw PreconditionError("lattice_index: degenerate basis");
        // Verify the full system, not only the selected rows.
        for (std::size_t col = 0; col < n; ++col) {
            Rat acc = 0;
            for (std::size_t j = 0; j < r; ++j) acc += (*x)[j] * Rat(lambda.basis(j, col));
            if (acc != Rat(g.basis(i, col)))
                throw PreconditionError("lattice_index: G not contained in span of Lambda");
        }
        for (std::size_t j = 0; j < r; ++j) {
            const Rat& v = (*x)[j];
            if (boost::multiprecision::denominator(v) != 1)
                throw PreconditionError("lattice_index: G not contained in Lambda");
            X(i, j) = boost::multiprecision::numerator(v);
        }
    }
    Int idx = 1;
    for (const Int& f : invariant_factors(X)) idx *= f;
    if (idx <= 0) throw InternalError("lattice_index: nonpositive index");
    return idx;
}

QuotientMap quotient_map(const SublatticeBasis& lambda) {
    if (!is_saturated(lambda)) throw PreconditionError("quotient_map: lattice not saturated");
    std::size_t n = lambda.ambient_dim;
    std::size_t r = lambda.rank();
    std::size_t m = n - r;
    if (r == 0) return {n, n, IntMat::identity(n)};
    // Complete the basis to a unimodular matrix W via the SNF transform:
    // W = [basis; last m rows of V^{-1}], then P = last m rows of W^{-T}.
    SnfResult s = smith_normal_form(lambda.basis);
    auto vinv = inverse_unimodular(s.V);
    if (!vinv) throw InternalError("SNF transform not unimodular");
    IntMat W(n, n);
    for (std::size_t i = 0; i < r; ++i) W.set_row(i, lambda.basis.row(i));
    for (std::size_t i = 0; i < m; ++i) W.set_row(r + i, vinv->row(r + i));
    auto winv = inverse_unimodular(W);
    if (!winv) throw InternalError("basis completion not unimodular");
    IntMat P(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) P(i, j) = (*winv)(j, r + i);
    return {n, m, std::move(P)};
}

}  // namespace latmix
