#include "cdga/dga.hpp"

#include "cdga/cohomology.hpp"
#include "cdga/model_io.hpp"

#include <map>
#include <mutex>

namespace cdga {

struct Dga::Impl {
    Algebra alg;
    std::vector<Element> gen_diffs;

    mutable std::mutex mtx;
    mutable std::map<int, RatMatrix> dmat_cache;
    mutable std::map<int, std::shared_ptr<const CohomologyBasis>> coh_cache;

    explicit Impl(Algebra a) : alg(std::move(a)) {}
};

namespace {

// d extended from generators as a graded derivation. For any generator g,
// |g|*(|g|+1) is even, so g commutes with d(g) and d(g^e) = e*g^(e-1)*d(g).
Element derive(const Algebra& alg, const std::vector<Element>& diffs, const Element& u)
{
    Element out(alg);
    for (const auto& [m, c] : u.terms()) {
        int prefix_deg = 0;
        for (size_t j = 0; j < m.factors.size(); ++j) {
            const auto [g, e] = m.factors[j];
            if (!diffs[g].is_zero()) {
                Monomial pre;
                pre.factors.assign(m.factors.begin(), m.factors.begin() + j);
                pre.degree = prefix_deg;
                Monomial suf;
                suf.factors.assign(m.factors.begin() + j + 1, m.factors.end());
                suf.degree = m.degree - prefix_deg - alg.gen(g).degree * e;
                Element mid = diffs[g];
                if (e > 1) {
                    Monomial pw;
                    pw.factors.emplace_back(g, e - 1);
                    pw.degree = alg.gen(g).degree * (e - 1);
                    mid = Rational(e) * (alg.element(std::move(pw), 1) * mid);
                }
                Element term = alg.element(std::move(pre), 1) * mid * alg.element(std::move(suf), 1);
                Rational sc = c;
                if (prefix_deg % 2 != 0)
                    sc = -sc;
                out = out + sc * term;
            }
            prefix_deg += alg.gen(g).degree * e;
        }
    }
    return out;
}

}  // namespace

Dga::Dga(Algebra alg, std::vector<Element> gen_diffs) : impl_(std::make_shared<Impl>(std::move(alg)))
{
    const Algebra& a = impl_->alg;
    if (static_cast<int>(gen_diffs.size()) != a.gen_count())
        throw Error("expected " + std::to_string(a.gen_count()) + " generator differentials, got " +
                    std::to_string(gen_diffs.size()));
    for (int i = 0; i < a.gen_count(); ++i) {
        if (!gen_diffs[i].algebra().same(a))
            throw Error("d(" + a.gen(i).name + ") belongs to a different algebra");
        if (!gen_diffs[i].is_homogeneous(a.gen(i).degree + 1))
            throw Error("d(" + a.gen(i).name + ") must be homogeneous of degree " +
                        std::to_string(a.gen(i).degree + 1));
    }
    for (int i = 0; i < a.gen_count(); ++i) {
        Element dd = derive(a, gen_diffs, gen_diffs[i]);
        if (!dd.is_zero())
            throw Error("d^2 != 0 at generator '" + a.gen(i).name + "': d(d(" + a.gen(i).name +
                        ")) = " + render(dd));
    }
    impl_->gen_diffs = std::move(gen_diffs);
}

const Algebra& Dga::algebra() const { return impl_->alg; }

const Element& Dga::gen_differential(int i) const
{
    if (i < 0 || i >= impl_->alg.gen_count())
        throw Error("generator index out of range");
    return impl_->gen_diffs[i];
}

Element Dga::d(const Element& u) const
{
    if (!u.algebra().same(impl_->alg))
        throw Error("element belongs to a different algebra");
    return derive(impl_->alg, impl_->gen_diffs, u);
}

const RatMatrix& Dga::d_matrix(int k) const
{
    std::scoped_lock lock(impl_->mtx);
    auto it = impl_->dmat_cache.find(k);
    if (it != impl_->dmat_cache.end())
        return it->second;

    const auto& from = impl_->alg.basis(k);
    const auto& to = impl_->alg.basis(k + 1);
    RatMatrix m(static_cast<int>(to.size()), static_cast<int>(from.size()));
    for (size_t j = 0; j < from.size(); ++j) {
        Element du = derive(impl_->alg, impl_->gen_diffs, impl_->alg.element(from[j], 1));
        auto col = du.coords(k + 1);
        for (size_t r = 0; r < col.size(); ++r)
            m.at(static_cast<int>(r), static_cast<int>(j)) = std::move(col[r]);
    }
    return impl_->dmat_cache.emplace(k, std::move(m)).first->second;
}

std::shared_ptr<const CohomologyBasis> Dga::coh_cached(int k) const
{
    std::scoped_lock lock(impl_->mtx);
    auto it = impl_->coh_cache.find(k);
    return it == impl_->coh_cache.end() ? nullptr : it->second;
}

const CohomologyBasis& Dga::coh_store(int k, std::shared_ptr<const CohomologyBasis> basis) const
{
    std::scoped_lock lock(impl_->mtx);
    return *impl_->coh_cache.emplace(k, std::move(basis)).first->second;
}

}  // namespace cdga
