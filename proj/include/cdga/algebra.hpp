#pragma once

#include "cdga/errors.hpp"
#include "cdga/rational.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cdga {

struct GeneratorSpec {
    std::string name;
    int degree = 1;  // >= 1; odd-degree generators are squarefree
};

// Monomial in a fixed generator ordering: factors (generator index, exponent),
// strictly increasing in the index. Odd-degree generators carry exponent 1.
// The empty factor list is the unit. Total degree is cached at construction.
struct Monomial {
    std::vector<std::pair<int, int>> factors;
    int degree = 0;

    bool is_unit() const { return factors.empty(); }

    // Sum of exponents; monomials with word length >= 2 are decomposable.
    int word_length() const
    {
        int n = 0;
        for (auto& [g, e] : factors)
            n += e;
        return n;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors == b.factors; }

    // Canonical order: by degree, then lexicographically on the factor list.
    friend bool operator<(const Monomial& a, const Monomial& b)
    {
        if (a.degree != b.degree)
            return a.degree < b.degree;
        return a.factors < b.factors;
    }
};

class Element;

// A free graded-commutative algebra over Q on named generators.
// Value-semantic handle; two Algebra values are "the same algebra" iff they
// share the underlying generator table (pointer identity). Immutable after
// construction.
class Algebra {
  public:
    explicit Algebra(std::vector<GeneratorSpec> gens);

    int gen_count() const;
    const GeneratorSpec& gen(int i) const;
    const std::vector<GeneratorSpec>& gens() const;
    int gen_index(std::string_view name) const;  // -1 if absent

    // Degree of the orientation monomial (every generator once).
    int total_degree() const;
    Monomial orientation_monomial() const;

    // Admissible monomials of the given degree, sorted canonically. Cached.
    const std::vector<Monomial>& basis(int degree) const;
    // Position of m within basis(m.degree); -1 if not admissible.
    int basis_index(const Monomial& m) const;

    Element zero() const;
    Element unit() const;
    Element gen_element(int i) const;
    Element element(Monomial m, Rational coeff) const;

    // Product of canonical monomials with the Koszul sign; nullopt when an
    // odd generator collides (square of an odd generator is zero).
    std::optional<std::pair<Monomial, int>> mul_monomials(const Monomial& a, const Monomial& b) const;

    bool same(const Algebra& other) const { return impl_ == other.impl_; }

  private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// Exact-rational linear combination of monomials, in canonical form
// (no zero coefficients stored). Immutable value type.
class Element {
  public:
    explicit Element(Algebra alg) : alg_(std::move(alg)) {}
    Element(Algebra alg, Monomial m, Rational coeff);

    const Algebra& algebra() const { return alg_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // Zero is homogeneous of every degree.
    bool is_homogeneous(int k) const;
    bool is_homogeneous() const;
    // Degree of a nonzero homogeneous element; nullopt for zero or mixed.
    std::optional<int> degree() const;

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element operator*(const Element& o) const;
    friend Element operator*(const Rational& q, const Element& u);
    friend Element operator*(const Element& u, const Rational& q) { return q * u; }

    // Same algebra and same term mapping. Comparing elements of different
    // algebras is a usage error.
    friend bool operator==(const Element& a, const Element& b);
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    // Coefficient vector over basis(k). Throws unless homogeneous of degree k.
    std::vector<Rational> coords(int k) const;
    static Element from_coords(const Algebra& alg, int k, const std::vector<Rational>& coords);

  private:
    friend class Algebra;
    void add_term(const Monomial& m, const Rational& c);

    Algebra alg_;
    std::map<Monomial, Rational> terms_;
};

inline Algebra make_algebra(std::vector<GeneratorSpec> gens) { return Algebra(std::move(gens)); }

}  // namespace cdga
