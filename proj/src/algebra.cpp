#include "cdga/algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace cdga {

struct Algebra::Impl {
    std::vector<GeneratorSpec> gens;
    std::map<std::string, int, std::less<>> index_by_name;
    int total_degree = 0;

    mutable std::mutex mtx;
    mutable std::map<int, std::vector<Monomial>> basis_cache;
};

Algebra::Algebra(std::vector<GeneratorSpec> gens) : impl_(std::make_shared<Impl>())
{
    for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
        const auto& g = gens[i];
        if (g.name.empty())
            throw Error("generator name must be nonempty");
        if (g.degree < 1)
            throw Error("generator '" + g.name + "' has degree " + std::to_string(g.degree) +
                        "; degrees must be >= 1");
        if (!impl_->index_by_name.emplace(g.name, i).second)
            throw Error("duplicate generator name '" + g.name + "'");
        impl_->total_degree += g.degree;
    }
    impl_->gens = std::move(gens);
}

int Algebra::gen_count() const { return static_cast<int>(impl_->gens.size()); }
const GeneratorSpec& Algebra::gen(int i) const { return impl_->gens.at(i); }
const std::vector<GeneratorSpec>& Algebra::gens() const { return impl_->gens; }
int Algebra::total_degree() const { return impl_->total_degree; }

int Algebra::gen_index(std::string_view name) const
{
    auto it = impl_->index_by_name.find(name);
    return it == impl_->index_by_name.end() ? -1 : it->second;
}

Monomial Algebra::orientation_monomial() const
{
    Monomial m;
    for (int i = 0; i < gen_count(); ++i)
        m.factors.emplace_back(i, 1);
    m.degree = impl_->total_degree;
    return m;
}

namespace {

void enumerate_monomials(const std::vector<GeneratorSpec>& gens, int gi, int remaining,
                         std::vector<std::pair<int, int>>& cur, int degree, std::vector<Monomial>& out)
{
    if (remaining == 0) {
        out.push_back(Monomial{cur, degree});
        return;
    }
    if (gi == static_cast<int>(gens.size()))
        return;
    enumerate_monomials(gens, gi + 1, remaining, cur, degree, out);
    const int dg = gens[gi].degree;
    const int emax = (dg % 2 == 1) ? 1 : remaining / dg;
    for (int e = 1; e <= emax && dg * e <= remaining; ++e) {
        cur.emplace_back(gi, e);
        enumerate_monomials(gens, gi + 1, remaining - dg * e, cur, degree, out);
        cur.pop_back();
    }
}

}  // namespace

const std::vector<Monomial>& Algebra::basis(int degree) const
{
    std::scoped_lock lock(impl_->mtx);
    auto it = impl_->basis_cache.find(degree);
    if (it != impl_->basis_cache.end())
        return it->second;

    std::vector<Monomial> out;
    if (degree == 0) {
        out.push_back(Monomial{});
    } else if (degree > 0) {
        std::vector<std::pair<int, int>> cur;
        enumerate_monomials(impl_->gens, 0, degree, cur, degree, out);
        std::sort(out.begin(), out.end());
    }
    return impl_->basis_cache.emplace(degree, std::move(out)).first->second;
}

int Algebra::basis_index(const Monomial& m) const
{
    const auto& b = basis(m.degree);
    auto it = std::lower_bound(b.begin(), b.end(), m);
    if (it == b.end() || !(*it == m))
        return -1;
    return static_cast<int>(it - b.begin());
}

std::optional<std::pair<Monomial, int>> Algebra::mul_monomials(const Monomial& a, const Monomial& b) const
{
    const auto& gens = impl_->gens;

    // Koszul sign: each odd-degree factor of b passing an odd-degree factor
    // of a with larger index contributes one transposition.
    long swaps = 0;
    for (const auto& [gb, eb] : b.factors) {
        if (gens[gb].degree % 2 == 0)
            continue;
        for (const auto& [ga, ea] : a.factors)
            if (gens[ga].degree % 2 == 1 && ga > gb)
                ++swaps;
    }

    Monomial m;
    m.degree = a.degree + b.degree;
    m.factors.reserve(a.factors.size() + b.factors.size());
    size_t i = 0, j = 0;
    while (i < a.factors.size() || j < b.factors.size()) {
        if (j == b.factors.size() || (i < a.factors.size() && a.factors[i].first < b.factors[j].first)) {
            m.factors.push_back(a.factors[i++]);
        } else if (i == a.factors.size() || b.factors[j].first < a.factors[i].first) {
            m.factors.push_back(b.factors[j++]);
        } else {
            const int g = a.factors[i].first;
            if (gens[g].degree % 2 == 1)
                return std::nullopt;  // square of an odd generator
            m.factors.emplace_back(g, a.factors[i].second + b.factors[j].second);
            ++i, ++j;
        }
    }
    return std::make_pair(std::move(m), swaps % 2 == 0 ? 1 : -1);
}

Element Algebra::zero() const { return Element(*this); }

Element Algebra::unit() const { return Element(*this, Monomial{}, Rational(1)); }

Element Algebra::gen_element(int i) const
{
    if (i < 0 || i >= gen_count())
        throw Error("generator index out of range");
    Monomial m;
    m.factors.emplace_back(i, 1);
    m.degree = impl_->gens[i].degree;
    return Element(*this, std::move(m), Rational(1));
}

Element Algebra::element(Monomial m, Rational coeff) const { return Element(*this, std::move(m), std::move(coeff)); }

Element::Element(Algebra alg, Monomial m, Rational coeff) : alg_(std::move(alg))
{
    if (coeff != 0)
        terms_.emplace(std::move(m), std::move(coeff));
}

bool Element::is_homogeneous(int k) const
{
    for (const auto& [m, c] : terms_)
        if (m.degree != k)
            return false;
    return true;
}

bool Element::is_homogeneous() const
{
    return terms_.empty() || is_homogeneous(terms_.begin()->first.degree);
}

std::optional<int> Element::degree() const
{
    if (terms_.empty() || !is_homogeneous())
        return std::nullopt;
    return terms_.begin()->first.degree;
}

void Element::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

namespace {
void require_same_algebra(const Element& a, const Element& b)
{
    if (!a.algebra().same(b.algebra()))
        throw Error("elements belong to different algebras");
}
}  // namespace

Element Element::operator+(const Element& o) const
{
    require_same_algebra(*this, o);
    Element r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

Element Element::operator-(const Element& o) const
{
    require_same_algebra(*this, o);
    Element r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, -c);
    return r;
}

Element Element::operator-() const
{
    Element r(alg_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

Element Element::operator*(const Element& o) const
{
    require_same_algebra(*this, o);
    Element r(alg_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            auto prod = alg_.mul_monomials(ma, mb);
            if (!prod)
                continue;
            r.add_term(prod->first, ca * cb * prod->second);
        }
    }
    return r;
}

Element operator*(const Rational& q, const Element& u)
{
    Element r(u.alg_);
    if (q == 0)
        return r;
    for (const auto& [m, c] : u.terms_)
        r.terms_.emplace(m, q * c);
    return r;
}

bool operator==(const Element& a, const Element& b)
{
    require_same_algebra(a, b);
    return a.terms_ == b.terms_;
}

std::vector<Rational> Element::coords(int k) const
{
    if (!is_homogeneous(k))
        throw Error("element is not homogeneous of degree " + std::to_string(k));
    std::vector<Rational> v(alg_.basis(k).size(), Rational(0));
    for (const auto& [m, c] : terms_) {
        int idx = alg_.basis_index(m);
        if (idx < 0)
            throw Error("monomial outside the algebra basis");
        v[idx] = c;
    }
    return v;
}

Element Element::from_coords(const Algebra& alg, int k, const std::vector<Rational>& coords)
{
    const auto& b = alg.basis(k);
    if (coords.size() != b.size())
        throw Error("coordinate vector has wrong length for degree " + std::to_string(k));
    Element r(alg);
    for (size_t i = 0; i < b.size(); ++i)
        if (coords[i] != 0)
            r.terms_.emplace(b[i], coords[i]);
    return r;
}

}  // namespace cdga
