#include "cdga/cohomology.hpp"

namespace cdga {

namespace {

bool all_zero(const std::vector<Rational>& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

std::shared_ptr<const CohomologyBasis> compute_cohomology(const Dga& dga, int k)
{
    const Algebra& alg = dga.algebra();
    const auto& chain = alg.basis(k);
    const int n = static_cast<int>(chain.size());

    Subspace Z = kernel(dga.d_matrix(k));
    Subspace B = image(dga.d_matrix(k - 1));

    // Pick cocycle rows that stay independent modulo the coboundaries.
    std::vector<std::vector<Rational>> reps;
    Subspace acc = B;
    for (const auto& z : Z.basis()) {
        if (acc.contains(z))
            continue;
        reps.push_back(z);
        acc = acc.sum(Subspace::span(n, {z}));
    }
    const int dim_b = B.dim();
    const int m = dim_b + static_cast<int>(reps.size());  // == dim Z

    // Row-reduce [S^T | I]: with S the stacked basis (coboundaries first,
    // then representatives), the recorded row operations E satisfy
    // E*S^T = [I_m; 0]. For a cocycle v = S^T w this gives w = (E v)[0..m),
    // so rows [dim_b, m) of E project onto class coordinates and rows
    // [m, n) vanish exactly on the cocycle space.
    RatMatrix aug(n, m + n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < dim_b; ++c)
            aug.at(r, c) = B.basis()[c][r];
        for (int c = dim_b; c < m; ++c)
            aug.at(r, c) = reps[c - dim_b][r];
        aug.at(r, m + r) = 1;
    }
    auto red = rref(aug);

    RatMatrix projection(m - dim_b, n);
    for (int r = dim_b; r < m; ++r)
        for (int c = 0; c < n; ++c)
            projection.at(r - dim_b, c) = red.mat.at(r, m + c);
    RatMatrix closure(n - m, n);
    for (int r = m; r < n; ++r)
        for (int c = 0; c < n; ++c)
            closure.at(r - m, c) = red.mat.at(r, m + c);

    std::vector<Element> rep_elems;
    for (const auto& z : reps)
        rep_elems.push_back(Element::from_coords(alg, k, z));
    return std::make_shared<CohomologyBasis>(
        CohomologyBasis{k, alg, chain, std::move(rep_elems), std::move(projection), std::move(closure)});
}

}  // namespace

std::vector<Rational> CohomologyBasis::class_coords(const Element& u) const
{
    return class_coords_from_chain(u.coords(degree));
}

std::vector<Rational> CohomologyBasis::class_coords_from_chain(const std::vector<Rational>& chain_coords) const
{
    if (chain_coords.size() != chain_basis.size())
        throw Error("coordinate vector has wrong length for degree " + std::to_string(degree));
    if (!all_zero(closure_check * chain_coords))
        throw Error("element is not closed");
    return projection * chain_coords;
}

Element CohomologyBasis::element_from_class(const std::vector<Rational>& coords) const
{
    if (static_cast<int>(coords.size()) != dim())
        throw Error("class coordinate vector has wrong length");
    Element out = alg.zero();
    for (int i = 0; i < dim(); ++i)
        if (coords[i] != 0)
            out = out + coords[i] * representatives[i];
    return out;
}

const CohomologyBasis& cohomology(const Dga& dga, int k)
{
    if (auto cached = dga.coh_cached(k))
        return *cached;
    return dga.coh_store(k, compute_cohomology(dga, k));
}

std::vector<int> betti(const Dga& dga) { return betti(dga, dga.algebra().total_degree()); }

std::vector<int> betti(const Dga& dga, int up_to)
{
    std::vector<int> out;
    for (int k = 0; k <= up_to; ++k)
        out.push_back(cohomology(dga, k).dim());
    return out;
}

std::optional<Element> is_exact(const Dga& dga, const Element& u)
{
    if (u.is_zero())
        return u.algebra().zero();
    auto deg = u.degree();
    if (!deg)
        throw Error("element is not homogeneous");
    if (!dga.d(u).is_zero())
        throw Error("element is not closed");
    auto x = solve(dga.d_matrix(*deg - 1), u.coords(*deg));
    if (!x)
        return std::nullopt;
    return Element::from_coords(dga.algebra(), *deg - 1, *x);
}

std::vector<Rational> cup(const Dga& dga, const Element& u, const Element& v)
{
    auto du = u.degree();
    auto dv = v.degree();
    if (!du || !dv)
        throw Error("cup factors must be nonzero and homogeneous");
    if (!dga.d(u).is_zero() || !dga.d(v).is_zero())
        throw Error("cup factors must be closed");
    return cohomology(dga, *du + *dv).class_coords(u * v);
}

Rational pairing(const Dga& dga, const Element& u, const Element& v)
{
    if (u.is_zero() || v.is_zero())
        return Rational(0);
    const Algebra& alg = dga.algebra();
    const int n = alg.total_degree();
    auto du = u.degree();
    auto dv = v.degree();
    if (!du || !dv || *du + *dv != n)
        throw Error("pairing requires homogeneous elements of complementary degree");
    if (!dga.d(u).is_zero() || !dga.d(v).is_zero())
        throw Error("pairing requires closed elements");

    const auto& top = cohomology(dga, n);
    if (top.dim() != 1)
        throw Error("top cohomology is not one-dimensional");
    Element ori = alg.element(alg.orientation_monomial(), 1);
    if (all_zero(top.class_coords(ori)))
        throw Error("orientation class vanishes in top cohomology");

    Element w = u * v;
    auto it = w.terms().find(alg.orientation_monomial());
    return it == w.terms().end() ? Rational(0) : it->second;
}

DualityMatrix duality_matrix(const Dga& dga, int k)
{
    const int n = dga.algebra().total_degree();
    const auto& hk = cohomology(dga, k);
    const auto& hnk = cohomology(dga, n - k);
    RatMatrix m(hk.dim(), hnk.dim());
    for (int i = 0; i < hk.dim(); ++i)
        for (int j = 0; j < hnk.dim(); ++j)
            m.at(i, j) = pairing(dga, hk.representatives[i], hnk.representatives[j]);
    bool nondeg = hk.dim() == hnk.dim() && rank(m) == hk.dim();
    return DualityMatrix{std::move(m), nondeg};
}

Dga tensor(const Dga& a, const Dga& b)
{
    const Algebra& A = a.algebra();
    const Algebra& B = b.algebra();

    std::vector<GeneratorSpec> gens = A.gens();
    std::vector<std::string> b_names;
    for (const auto& g : B.gens()) {
        std::string name = g.name;
        auto taken = [&](const std::string& s) {
            if (A.gen_index(s) >= 0)
                return true;
            for (const auto& bn : b_names)
                if (bn == s)
                    return true;
            return false;
        };
        for (int suffix = 2; taken(name); ++suffix)
            name = g.name + "_" + std::to_string(suffix);
        b_names.push_back(name);
        gens.push_back({name, g.degree});
    }
    Algebra alg(std::move(gens));

    const int na = A.gen_count();
    auto shift = [&](const Element& u, int offset) {
        Element out = alg.zero();
        for (const auto& [m, c] : u.terms()) {
            Monomial t = m;
            for (auto& [g, e] : t.factors)
                g += offset;
            out = out + alg.element(std::move(t), c);
        }
        return out;
    };

    std::vector<Element> diffs;
    for (int i = 0; i < na; ++i)
        diffs.push_back(shift(a.gen_differential(i), 0));
    for (int i = 0; i < B.gen_count(); ++i)
        diffs.push_back(shift(b.gen_differential(i), na));
    return Dga(std::move(alg), std::move(diffs));
}

}  // namespace cdga
