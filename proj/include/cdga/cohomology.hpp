#pragma once

#include "cdga/dga.hpp"
#include "cdga/linalg.hpp"

#include <optional>
#include <vector>

namespace cdga {

// Degree-k cohomology of a Dga: deterministic closed representatives plus a
// linear coordinate map sending any degree-k cocycle to its class coordinates.
// Coboundaries map to zero. Representatives are selected from the RREF basis
// of the cocycle space, skipping rows that are dependent modulo coboundaries.
struct CohomologyBasis {
    int degree = 0;
    Algebra alg;
    std::vector<Monomial> chain_basis;       // monomial basis of the degree-k slice
    std::vector<Element> representatives;    // closed, project to a basis of ker/im
    RatMatrix projection;                    // dim() x |chain_basis|
    RatMatrix closure_check;                 // rows vanish exactly on cocycle coordinates

    int dim() const { return static_cast<int>(representatives.size()); }

    // Class coordinates of a cocycle; throws if u is not closed or has the
    // wrong degree. Zero is accepted in every degree.
    std::vector<Rational> class_coords(const Element& u) const;
    std::vector<Rational> class_coords_from_chain(const std::vector<Rational>& chain_coords) const;

    // Representative cocycle of the class with the given coordinates.
    Element element_from_class(const std::vector<Rational>& coords) const;
};

// Cached per Dga and degree.
const CohomologyBasis& cohomology(const Dga& dga, int k);

// b_k for k = 0..up_to (default: the orientation degree).
std::vector<int> betti(const Dga& dga);
std::vector<int> betti(const Dga& dga, int up_to);

// A primitive x with d x = u (free variables zero, hence canonical), or
// nullopt when u represents a nonzero class. Throws if u is not closed.
std::optional<Element> is_exact(const Dga& dga, const Element& u);

// Class coordinates of [u∧v] in H^{|u|+|v|}. Inputs must be closed.
std::vector<Rational> cup(const Dga& dga, const Element& u, const Element& v);

// Poincaré pairing: coefficient of the orientation monomial in u∧v.
// Requires complementary degrees and 1-dimensional top cohomology spanned by
// the orientation class.
Rational pairing(const Dga& dga, const Element& u, const Element& v);

struct DualityMatrix {
    RatMatrix matrix;  // pairings H^k x H^{n-k} on representatives
    bool nondegenerate = false;
};
DualityMatrix duality_matrix(const Dga& dga, int k);

// CDGA model of a product: generators of a then b (renamed on collision),
// differentials carried over.
Dga tensor(const Dga& a, const Dga& b);

}  // namespace cdga
