#pragma once

#include <vector>

#include "breuil/object.hpp"

namespace breuil {

struct ClosureStep {
  std::vector<int> module_orders;
  std::vector<int> fil_orders;
  int fp_length = 0;  // F_p-dimension of the module at this step
};

struct Closure {
  Object object;
  Morphism map;  // inclusion for Gen, projection for Fil
  std::vector<ClosureStep> trace;
  int steps() const { return static_cast<int>(trace.size()); }
};

// Largest generated subobject: G <- span phi(F), F <- iota^{-1}(G) until
// stationary.
Closure gen_closure(const Object& obj);
// Universal quotient with injective iota: kill K = ker iota and span phi(K)
// until K = 0.
Closure fil_closure(const Object& obj);

}  // namespace breuil
