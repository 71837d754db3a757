#pragma once

#include "breuil/finite_field.hpp"
#include "breuil/linalg.hpp"

namespace breuil {

// Elements of k[u]/u^N: coefficient of u^j at index j.
using RingElement = Vec;

struct TruncatedRing {
  Field k;
  int N = 1;

  TruncatedRing() = default;
  TruncatedRing(Field field, int n);

  RingElement zero() const { return RingElement(N, 0); }
  RingElement one() const;
  RingElement constant(Fq c) const;
  RingElement u_pow(int j) const;

  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement neg(const RingElement& a) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  RingElement scale(Fq c, const RingElement& a) const;
  RingElement shift(const RingElement& a, int t) const;  // u^t * a

  // Coefficients to the p-th power and u -> u^p.
  RingElement frobenius(const RingElement& a) const;
  // The derivation N(s) = -u ds/du, so N(u^j) = -j u^j.
  RingElement monodromy(const RingElement& a) const;

  int valuation(const RingElement& a) const;  // N for zero
  bool is_unit(const RingElement& a) const { return a[0] != 0; }
  RingElement inverse(const RingElement& a) const;
  RingElement pow(const RingElement& a, int e) const;
};

}  // namespace breuil
