#include "cdga/linalg.hpp"

namespace cdga {

RatMatrix RatMatrix::identity(int n)
{
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transposed() const
{
    RatMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

std::vector<Rational> RatMatrix::operator*(const std::vector<Rational>& v) const
{
    if (static_cast<int>(v.size()) != cols_)
        throw Error("matrix-vector shape mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (int r = 0; r < rows_; ++r) {
        Rational acc(0);
        for (int c = 0; c < cols_; ++c)
            if (e_[static_cast<size_t>(r) * cols_ + c] != 0 && v[c] != 0)
                acc += e_[static_cast<size_t>(r) * cols_ + c] * v[c];
        out[r] = std::move(acc);
    }
    return out;
}

RrefResult rref(const RatMatrix& m)
{
    RrefResult res{m, {}};
    RatMatrix& a = res.mat;
    int pr = 0;  // next pivot row
    for (int pc = 0; pc < a.cols() && pr < a.rows(); ++pc) {
        int sel = -1;
        for (int r = pr; r < a.rows(); ++r)
            if (a.at(r, pc) != 0) {
                sel = r;
                break;
            }
        if (sel < 0)
            continue;
        if (sel != pr)
            for (int c = 0; c < a.cols(); ++c)
                std::swap(a.at(sel, c), a.at(pr, c));
        const Rational inv = 1 / a.at(pr, pc);
        for (int c = pc; c < a.cols(); ++c)
            a.at(pr, c) *= inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == pr || a.at(r, pc) == 0)
                continue;
            const Rational f = a.at(r, pc);
            for (int c = pc; c < a.cols(); ++c)
                a.at(r, c) -= f * a.at(pr, c);
        }
        res.pivots.push_back(pc);
        ++pr;
    }
    return res;
}

int rank(const RatMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::optional<std::vector<Rational>> solve(const RatMatrix& A, const std::vector<Rational>& b)
{
    if (static_cast<int>(b.size()) != A.rows())
        throw Error("right-hand side has wrong length");
    RatMatrix aug(A.rows(), A.cols() + 1);
    for (int r = 0; r < A.rows(); ++r) {
        for (int c = 0; c < A.cols(); ++c)
            aug.at(r, c) = A.at(r, c);
        aug.at(r, A.cols()) = b[r];
    }
    auto red = rref(aug);
    std::vector<Rational> x(A.cols(), Rational(0));
    for (size_t i = 0; i < red.pivots.size(); ++i) {
        if (red.pivots[i] == A.cols())
            return std::nullopt;  // pivot in the augmented column
        x[red.pivots[i]] = red.mat.at(static_cast<int>(i), A.cols());
    }
    return x;
}

Subspace Subspace::span(int ambient, const std::vector<std::vector<Rational>>& vectors)
{
    RatMatrix m(static_cast<int>(vectors.size()), ambient);
    for (size_t r = 0; r < vectors.size(); ++r) {
        if (static_cast<int>(vectors[r].size()) != ambient)
            throw Error("spanning vector has wrong length");
        for (int c = 0; c < ambient; ++c)
            m.at(static_cast<int>(r), c) = vectors[r][c];
    }
    auto red = rref(m);
    Subspace s(ambient);
    for (size_t i = 0; i < red.pivots.size(); ++i) {
        std::vector<Rational> row(ambient);
        for (int c = 0; c < ambient; ++c)
            row[c] = red.mat.at(static_cast<int>(i), c);
        s.basis_.push_back(std::move(row));
    }
    return s;
}

std::optional<std::vector<Rational>> Subspace::member(const std::vector<Rational>& v) const
{
    if (static_cast<int>(v.size()) != ambient_)
        throw Error("vector has wrong length for this subspace");
    // RREF rows lead with a 1 in distinct columns, so the expansion
    // coefficient of row i is just v at that row's leading column.
    std::vector<Rational> coeff(basis_.size(), Rational(0));
    std::vector<Rational> rem = v;
    for (size_t i = 0; i < basis_.size(); ++i) {
        int lead = -1;
        for (int c = 0; c < ambient_; ++c)
            if (basis_[i][c] != 0) {
                lead = c;
                break;
            }
        coeff[i] = rem[lead];
        if (coeff[i] == 0)
            continue;
        for (int c = 0; c < ambient_; ++c)
            if (basis_[i][c] != 0)
                rem[c] -= coeff[i] * basis_[i][c];
    }
    for (const auto& r : rem)
        if (r != 0)
            return std::nullopt;
    return coeff;
}

Subspace Subspace::sum(const Subspace& other) const
{
    if (ambient_ != other.ambient_)
        throw Error("subspaces live in different ambient spaces");
    std::vector<std::vector<Rational>> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, all);
}

Subspace kernel(const RatMatrix& A)
{
    auto red = rref(A);
    std::vector<bool> is_pivot(A.cols(), false);
    for (int p : red.pivots)
        is_pivot[p] = true;
    std::vector<std::vector<Rational>> vecs;
    for (int j = 0; j < A.cols(); ++j) {
        if (is_pivot[j])
            continue;
        std::vector<Rational> x(A.cols(), Rational(0));
        x[j] = 1;
        for (size_t i = 0; i < red.pivots.size(); ++i)
            x[red.pivots[i]] = -red.mat.at(static_cast<int>(i), j);
        vecs.push_back(std::move(x));
    }
    return Subspace::span(A.cols(), vecs);
}

Subspace image(const RatMatrix& A)
{
    std::vector<std::vector<Rational>> cols;
    cols.reserve(A.cols());
    for (int c = 0; c < A.cols(); ++c) {
        std::vector<Rational> v(A.rows());
        for (int r = 0; r < A.rows(); ++r)
            v[r] = A.at(r, c);
        cols.push_back(std::move(v));
    }
    return Subspace::span(A.rows(), cols);
}

}  // namespace cdga
