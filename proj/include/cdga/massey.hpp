#pragma once

#include "cdga/cohomology.hpp"
#include "cdga/dga.hpp"
#include "cdga/linalg.hpp"

#include <vector>

namespace cdga {

// Triple Massey product ⟨[a],[b],[c]⟩ with indeterminacy.
//
// Sign convention: with d x = a∧b, d y = b∧c and p = |a|, the representative
// is w = x∧c + (-1)^{p+1} a∧y. The product "vanishes" iff the class of w lies
// in the indeterminacy subspace [a]∪H^{q+r-1} + H^{p+q-1}∪[c].
struct MasseyResult {
    Dga dga;
    Element a, b, c;
    Element x, y;                      // canonical primitives: d x = a∧b, d y = b∧c
    Element w;                         // representative, degree p+q+r-1
    int target_degree = 0;
    std::vector<Rational> w_class;     // class coordinates of w in H^{target_degree}
    Subspace indeterminacy;            // subspace of H^{target_degree} coordinates
    bool vanishes = false;
};

// Throws Error when an input is not closed or when [a][b] or [b][c] is a
// nonzero class (product undefined).
MasseyResult triple_massey(const Dga& dga, const Element& a, const Element& b, const Element& c);

// [a]∪H^{q+r-1} + H^{p+q-1}∪[c] as a subspace of H^m, m = p+q+r-1.
Subspace indeterminacy(const Dga& dga, const Element& a, const Element& c, int target_degree);

// Pairing of a Massey representative and of every indeterminacy basis class
// against a dual class. If the representative pairs nonzero while every
// indeterminacy pairing is zero, the product is nonzero in the quotient.
struct PairingCertificate {
    Element dual;
    Rational pairing_value;
    std::vector<Rational> indeterminacy_pairings;
    bool certified = false;
};

PairingCertificate certify_nonvanishing(const MasseyResult& res, const Element& dual);

struct ScanOptions {
    // Bail out instead of iterating a basis bigger than this.
    int max_classes_per_degree = 64;
};

// All triples of basis classes in degrees (p,q,r) whose stepwise cup products
// vanish and whose Massey product does not; deterministic order by input
// index.
std::vector<MasseyResult> scan_triple_massey(const Dga& dga, int p, int q, int r,
                                             const ScanOptions& opts = {});

}  // namespace cdga
