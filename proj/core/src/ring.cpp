#include "breuil/ring.hpp"

#include "breuil/errors.hpp"

namespace breuil {

TruncatedRing::TruncatedRing(Field field, int n) : k(std::move(field)), N(n) {
  if (N < 1) throw ParameterError("truncation order must be >= 1");
}

RingElement TruncatedRing::one() const { return constant(1); }

RingElement TruncatedRing::constant(Fq c) const {
  RingElement r(N, 0);
  r[0] = c;
  return r;
}

RingElement TruncatedRing::u_pow(int j) const {
  RingElement r(N, 0);
  if (j < N) r[j] = 1;
  return r;
}

RingElement TruncatedRing::add(const RingElement& a, const RingElement& b) const {
  RingElement r(N);
  for (int j = 0; j < N; ++j) r[j] = k->add(a[j], b[j]);
  return r;
}

RingElement TruncatedRing::sub(const RingElement& a, const RingElement& b) const {
  RingElement r(N);
  for (int j = 0; j < N; ++j) r[j] = k->sub(a[j], b[j]);
  return r;
}

RingElement TruncatedRing::neg(const RingElement& a) const {
  RingElement r(N);
  for (int j = 0; j < N; ++j) r[j] = k->neg(a[j]);
  return r;
}

RingElement TruncatedRing::mul(const RingElement& a, const RingElement& b) const {
  RingElement r(N, 0);
  for (int i = 0; i < N; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j < N; ++j)
      if (b[j] != 0) r[i + j] = k->add(r[i + j], k->mul(a[i], b[j]));
  }
  return r;
}

RingElement TruncatedRing::scale(Fq c, const RingElement& a) const {
  RingElement r(N);
  for (int j = 0; j < N; ++j) r[j] = k->mul(c, a[j]);
  return r;
}

RingElement TruncatedRing::shift(const RingElement& a, int t) const {
  RingElement r(N, 0);
  for (int j = 0; j + t < N; ++j) r[j + t] = a[j];
  return r;
}

RingElement TruncatedRing::frobenius(const RingElement& a) const {
  RingElement r(N, 0);
  const long p = k->p();
  for (long j = 0; j * p < N; ++j) r[j * p] = k->frob(a[j]);
  return r;
}

RingElement TruncatedRing::monodromy(const RingElement& a) const {
  RingElement r(N, 0);
  for (int j = 1; j < N; ++j)
    if (a[j] != 0) r[j] = k->mul(k->from_int(-j), a[j]);
  return r;
}

int TruncatedRing::valuation(const RingElement& a) const {
  for (int j = 0; j < N; ++j)
    if (a[j] != 0) return j;
  return N;
}

RingElement TruncatedRing::inverse(const RingElement& a) const {
  if (!is_unit(a)) throw BreuilError("inverse of a non-unit in k[u]/u^N");
  // Solve a * b = 1 coefficient by coefficient.
  RingElement b(N, 0);
  const Fq a0inv = k->inv(a[0]);
  b[0] = a0inv;
  for (int n = 1; n < N; ++n) {
    Fq s = 0;
    for (int i = 1; i <= n; ++i) s = k->add(s, k->mul(a[i], b[n - i]));
    b[n] = k->mul(k->neg(s), a0inv);
  }
  return b;
}

RingElement TruncatedRing::pow(const RingElement& a, int e) const {
  RingElement r = one();
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

}  // namespace breuil
