#include "cdga/massey.hpp"

#include <map>
#include <utility>

namespace cdga {

namespace {

bool all_zero(const std::vector<Rational>& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

Element representative(const Element& a, const Element& c, const Element& x, const Element& y, int p)
{
    Rational sgn(p % 2 == 0 ? -1 : 1);
    return x * c + sgn * (a * y);
}

// One-time RREF factorization of [A | I] for solving A x = b against many
// right-hand sides. Canonical solutions (free variables zero) agree with
// solve() since both run the same deterministic elimination.
struct ExactSolver {
    int cols = 0;
    RatMatrix E;               // recorded row operations, rows x rows
    std::vector<int> pivots;   // pivot columns of A, one per leading row

    explicit ExactSolver(const RatMatrix& A) : cols(A.cols())
    {
        const int rows = A.rows();
        RatMatrix aug(rows, cols + rows);
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c)
                aug.at(r, c) = A.at(r, c);
            aug.at(r, cols + r) = 1;
        }
        auto red = rref(aug);
        for (int p : red.pivots)
            if (p < cols)
                pivots.push_back(p);
        E = RatMatrix(rows, rows);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < rows; ++c)
                E.at(r, c) = red.mat.at(r, cols + c);
    }

    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const
    {
        auto v = E * b;
        for (size_t i = pivots.size(); i < v.size(); ++i)
            if (v[i] != 0)
                return std::nullopt;
        std::vector<Rational> x(cols, Rational(0));
        for (size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = std::move(v[i]);
        return x;
    }
};

}  // namespace

Subspace indeterminacy(const Dga& dga, const Element& a, const Element& c, int target_degree)
{
    auto pa = a.degree();
    auto pc = c.degree();
    if (!pa || !pc)
        throw Error("indeterminacy requires nonzero homogeneous classes");
    if (!dga.d(a).is_zero() || !dga.d(c).is_zero())
        throw Error("indeterminacy requires closed inputs");

    const auto& hm = cohomology(dga, target_degree);
    std::vector<std::vector<Rational>> vecs;
    for (const auto& h : cohomology(dga, target_degree - *pa).representatives)
        vecs.push_back(hm.class_coords(a * h));
    for (const auto& h : cohomology(dga, target_degree - *pc).representatives)
        vecs.push_back(hm.class_coords(h * c));
    return Subspace::span(hm.dim(), vecs);
}

MasseyResult triple_massey(const Dga& dga, const Element& a, const Element& b, const Element& c)
{
    auto p = a.degree();
    auto q = b.degree();
    auto r = c.degree();
    if (!p || !q || !r)
        throw Error("triple product requires nonzero homogeneous inputs");
    if (!dga.d(a).is_zero() || !dga.d(b).is_zero() || !dga.d(c).is_zero())
        throw Error("triple product inputs must be closed");

    auto x = is_exact(dga, a * b);
    if (!x)
        throw Error("product of the first two inputs is a nonzero class; triple product undefined");
    auto y = is_exact(dga, b * c);
    if (!y)
        throw Error("product of the last two inputs is a nonzero class; triple product undefined");

    const int m = *p + *q + *r - 1;
    Element w = representative(a, c, *x, *y, *p);
    auto w_class = cohomology(dga, m).class_coords(w);
    Subspace ind = indeterminacy(dga, a, c, m);
    bool vanishes = ind.contains(w_class);
    return MasseyResult{dga, a, b, c, *x, *y, std::move(w), m, std::move(w_class), std::move(ind), vanishes};
}

PairingCertificate certify_nonvanishing(const MasseyResult& res, const Element& dual)
{
    const auto& hm = cohomology(res.dga, res.target_degree);
    Rational value = pairing(res.dga, res.w, dual);
    std::vector<Rational> ind_pairings;
    bool clean = true;
    for (const auto& v : res.indeterminacy.basis()) {
        Rational pv = pairing(res.dga, hm.element_from_class(v), dual);
        if (pv != 0)
            clean = false;
        ind_pairings.push_back(std::move(pv));
    }
    const bool certified = value != 0 && clean;
    return PairingCertificate{dual, std::move(value), std::move(ind_pairings), certified};
}

std::vector<MasseyResult> scan_triple_massey(const Dga& dga, int p, int q, int r, const ScanOptions& opts)
{
    const auto& hp = cohomology(dga, p);
    const auto& hq = cohomology(dga, q);
    const auto& hr = cohomology(dga, r);
    for (const auto* h : {&hp, &hq, &hr})
        if (h->dim() > opts.max_classes_per_degree)
            throw Error("degree " + std::to_string(h->degree) + " has " + std::to_string(h->dim()) +
                        " classes, over the scan limit of " + std::to_string(opts.max_classes_per_degree));

    const int m = p + q + r - 1;
    const auto& hm = cohomology(dga, m);
    std::vector<MasseyResult> out;
    if (hm.dim() == 0 || hp.dim() == 0 || hq.dim() == 0 || hr.dim() == 0)
        return out;

    const ExactSolver solve_x(dga.d_matrix(p + q - 1));
    const ExactSolver solve_y(dga.d_matrix(q + r - 1));

    // Primitives are shared across triples: x depends on (i,j) only and y on
    // (j,k) only. An absent entry value means the cup product is nonzero.
    std::map<std::pair<int, int>, std::optional<Element>> memo_x, memo_y;
    auto primitive = [&dga](std::map<std::pair<int, int>, std::optional<Element>>& memo,
                            const ExactSolver& solver, int prod_deg, const Element& u, const Element& v,
                            int i, int j) -> const std::optional<Element>& {
        auto it = memo.find({i, j});
        if (it != memo.end())
            return it->second;
        std::optional<Element> prim;
        if (auto sol = solver.solve((u * v).coords(prod_deg)))
            prim = Element::from_coords(dga.algebra(), prod_deg - 1, *sol);
        return memo.emplace(std::make_pair(i, j), std::move(prim)).first->second;
    };

    std::map<std::pair<int, int>, Subspace> ind_memo;
    auto get_ind = [&](int i, int k) -> const Subspace& {
        auto it = ind_memo.find({i, k});
        if (it != ind_memo.end())
            return it->second;
        Subspace s = indeterminacy(dga, hp.representatives[i], hr.representatives[k], m);
        return ind_memo.emplace(std::make_pair(i, k), std::move(s)).first->second;
    };

    for (int i = 0; i < hp.dim(); ++i) {
        const Element& a = hp.representatives[i];
        for (int j = 0; j < hq.dim(); ++j) {
            const auto& x = primitive(memo_x, solve_x, p + q, a, hq.representatives[j], i, j);
            if (!x)
                continue;
            for (int k = 0; k < hr.dim(); ++k) {
                const auto& y = primitive(memo_y, solve_y, q + r, hq.representatives[j], hr.representatives[k], j, k);
                if (!y)
                    continue;
                const Element& c = hr.representatives[k];
                Element w = representative(a, c, *x, *y, p);
                auto w_class = hm.class_coords(w);
                if (all_zero(w_class))
                    continue;
                const Subspace& ind = get_ind(i, k);
                if (ind.contains(w_class))
                    continue;
                out.push_back(MasseyResult{dga, a, hq.representatives[j], c, *x, *y, std::move(w), m,
                                           std::move(w_class), ind, false});
            }
        }
    }
    return out;
}

}  // namespace cdga
