#pragma once

#include "cdga/errors.hpp"
#include "cdga/rational.hpp"

#include <optional>
#include <vector>

namespace cdga {

// Dense exact-rational matrix, row-major.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, Rational(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    static RatMatrix identity(int n);
    RatMatrix transposed() const;

    std::vector<Rational> operator*(const std::vector<Rational>& v) const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

struct RrefResult {
    RatMatrix mat;
    std::vector<int> pivots;  // pivot column per pivot row, strictly increasing
};

// Deterministic reduced row-echelon form: leftmost pivot, topmost row.
RrefResult rref(const RatMatrix& m);
int rank(const RatMatrix& m);

// Canonical solution of A x = b with free variables set to zero; nullopt if
// inconsistent. Throws on shape mismatch.
std::optional<std::vector<Rational>> solve(const RatMatrix& A, const std::vector<Rational>& b);

// A linear subspace of Q^ambient with a canonical RREF basis.
class Subspace {
  public:
    Subspace() = default;
    explicit Subspace(int ambient) : ambient_(ambient) {}

    static Subspace span(int ambient, const std::vector<std::vector<Rational>>& vectors);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::vector<Rational>>& basis() const { return basis_; }

    // Expansion coefficients of v over the RREF basis, iff v lies in the span.
    std::optional<std::vector<Rational>> member(const std::vector<Rational>& v) const;
    bool contains(const std::vector<Rational>& v) const { return member(v).has_value(); }

    Subspace sum(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

  private:
    int ambient_ = 0;
    std::vector<std::vector<Rational>> basis_;
};

// Null space {x : A x = 0} in Q^cols.
Subspace kernel(const RatMatrix& A);
// Column span of A in Q^rows.
Subspace image(const RatMatrix& A);

inline std::optional<std::vector<Rational>> member(const Subspace& s, const std::vector<Rational>& v)
{
    return s.member(v);
}

}  // namespace cdga
