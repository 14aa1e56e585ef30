#pragma once

#include "cdga/dga.hpp"

#include <vector>

namespace cdga {

// A minimal model approximation up to a degree cutoff: a free CDGA with
// decomposable differential together with a quasi-isomorphism into the target.
struct MinimalModelResult {
    Dga model;
    Dga target;
    std::vector<Element> images;  // model generator -> element of the target
    int cutoff = 0;
};

// True iff every generator differential is decomposable (every monomial of
// d(g) has word length >= 2).
bool is_minimal(const Dga& dga);

// Morphism applied to an element of the model (multiplicative extension of
// the generator images).
Element apply_morphism(const MinimalModelResult& res, const Element& u);

// Already-minimal inputs come back unchanged with the identity morphism.
// Otherwise the standard inductive construction for simply connected targets
// (H^1 = 0): per degree k <= cutoff, adjoin closed generators to surject onto
// H^k and generators killing the kernel of H^{k+1}. Non-minimal inputs with
// H^1 != 0 are rejected with an Error.
MinimalModelResult minimal_model(const Dga& dga, int cutoff);

// Recomputes both cohomologies and the induced map; true iff the morphism is
// a chain map inducing isomorphisms in all degrees <= cutoff.
bool check_quasi_iso(const MinimalModelResult& res);

}  // namespace cdga
