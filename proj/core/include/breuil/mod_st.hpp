#pragma once

#include "breuil/morphism.hpp"

namespace breuil {

struct ModSt {
  Object object;
  Morphism pr;  // 1 (x) h_j -> phi(h_j)
};

// S (x)_{phi, k[u]/u^e} Fil/u^e Fil with Fil := pr^{-1}(Fil), phi(x) = 1 (x) pr(x)
// and N(s (x) x) = c^{-1} (x) u^e N(x) - u s' (x) x. Throws NotReduced when
// Fil/u^e Fil is not free over k[u]/u^e. Needs iota injective. The coefficient
// action is carried along; descent data is dropped.
ModSt mod_st(const Object& obj);

}  // namespace breuil
