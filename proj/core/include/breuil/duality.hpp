#pragma once

#include "breuil/morphism.hpp"

namespace breuil {

// M* = Hom_S(M, S) in the dual basis, Fil* = {f : f(Fil) in u^{er} S},
// phi*(f)(phi(x)) = c^r phi(s) when f(x) = u^{er} s, N* = N o f - f o N.
// Coefficients and descent data are carried over by transposition.
// Needs a free generated object.
Object dualize(const Object& obj);

// f* : B* -> A*, g -> g o f. The duals can be passed in to share them
// between calls.
Morphism dualize(const Morphism& m, const Object& source_dual, const Object& target_dual);
Morphism dualize(const Morphism& m);

// x -> (f -> f(x)), the identity matrix in the bidual basis.
Morphism bidual_map(const Object& obj, const Object& bidual);

}  // namespace breuil
