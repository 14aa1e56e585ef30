#pragma once

#include "cdga/algebra.hpp"
#include "cdga/linalg.hpp"

#include <memory>
#include <vector>

namespace cdga {

struct CohomologyBasis;

// A free graded-commutative algebra together with a degree +1 differential,
// given on generators and extended as a graded derivation. d∘d = 0 is
// verified on every generator at construction. Immutable value handle.
class Dga {
  public:
    // gen_diffs[i] = d(generator i); each must be homogeneous of degree
    // gen(i).degree + 1. Throws Error on a degree mismatch or when d^2 != 0
    // (the message names the offending generator and shows d(d(g))).
    Dga(Algebra alg, std::vector<Element> gen_diffs);

    const Algebra& algebra() const;
    const Element& gen_differential(int i) const;

    // Graded Leibniz extension to arbitrary elements.
    Element d(const Element& u) const;

    // Matrix of d : basis(k) -> basis(k+1). Cached.
    const RatMatrix& d_matrix(int k) const;

    bool same(const Dga& other) const { return impl_ == other.impl_; }

    // Per-degree cohomology cache plumbing; used by cohomology().
    std::shared_ptr<const CohomologyBasis> coh_cached(int k) const;
    const CohomologyBasis& coh_store(int k, std::shared_ptr<const CohomologyBasis> basis) const;

  private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

inline Dga make_dga(Algebra alg, std::vector<Element> gen_diffs)
{
    return Dga(std::move(alg), std::move(gen_diffs));
}

inline Element differential(const Dga& dga, const Element& u) { return dga.d(u); }

}  // namespace cdga
