#include "breuil/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "breuil/errors.hpp"

namespace breuil {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t qt = r / nr;
    std::swap(t, nt);
    nt -= qt * t;
    std::swap(r, nr);
    nr -= qt * r;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint32_t c = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a.back()) * lead_inv) % p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + static_cast<std::uint64_t>(p - c) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = static_cast<std::uint32_t>((c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(c), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly r{1};
  r = poly_mod(r, m, p);
  base = poly_mod(base, m, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// x^{p^j} mod m
Poly frobenius_power_of_x(int j, const Poly& m, std::uint32_t p) {
  Poly x = poly_mod(Poly{0, 1}, m, p);
  for (int i = 0; i < j; ++i) x = poly_powmod(x, p, m, p);
  return x;
}

}  // namespace

bool FiniteField::is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool FiniteField::is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  Poly m = poly;
  trim(m);
  if (m.size() < 2) return false;
  const int f = static_cast<int>(m.size()) - 1;
  if (f == 1) return true;
  const Poly x{0, 1};
  if (poly_sub(frobenius_power_of_x(f, m, p), x, p) != Poly{}) return false;
  for (int l : prime_factors(f)) {
    Poly g = poly_gcd(m, poly_sub(frobenius_power_of_x(f / l, m, p), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> FiniteField::default_modulus(std::uint32_t p, int f) {
  if (f == 1) return {0, 1};
  std::uint64_t count = 1;
  for (int i = 0; i < f; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly m(f + 1, 0);
    std::uint64_t v = idx;
    for (int i = 0; i < f; ++i) {
      m[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    m[f] = 1;
    if (is_irreducible(p, m)) return m;
  }
  throw ParameterError("no irreducible polynomial found");
}

Field FiniteField::make(std::uint32_t p, int f, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw ParameterError("p = " + std::to_string(p) + " is not prime");
  if (f < 1) throw ParameterError("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < f; ++i) q *= p;
  if (q > (1u << 20)) throw ParameterError("field too large for table arithmetic");
  if (modulus.empty()) modulus = default_modulus(p, f);
  for (auto& c : modulus) c %= p;
  if (static_cast<int>(modulus.size()) != f + 1 || modulus.back() != 1)
    throw ParameterError("modulus must be monic of degree f");
  if (!is_irreducible(p, modulus)) throw ParameterError("modulus is not irreducible");

  auto F = std::shared_ptr<FiniteField>(new FiniteField());
  F->p_ = p;
  F->f_ = f;
  F->q_ = static_cast<std::uint32_t>(q);
  F->modulus_ = modulus;
  F->digits_.resize(q * f);
  for (std::uint32_t a = 0; a < q; ++a) {
    std::uint32_t v = a;
    for (int s = 0; s < f; ++s) {
      F->digits_[a * f + s] = v % p;
      v /= p;
    }
  }
  F->neg_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    std::uint32_t c[64];
    for (int s = 0; s < f; ++s) c[s] = (p - F->digit(a, s)) % p;
    F->neg_[a] = F->from_digits(c);
  }
  if (q <= 1024) {
    F->add_.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        F->add_[a * q + b] = static_cast<std::uint16_t>(F->add_slow(a, b));
  }

  // Find the smallest-index primitive element and build log/exp tables.
  const std::uint32_t order = F->q_ - 1;
  F->exp_.assign(2 * static_cast<std::size_t>(order) + 1, 0);
  F->log_.assign(q, 0);
  for (Fq g = 1; g < q; ++g) {
    Fq x = 1;
    std::uint32_t k = 0;
    bool ok = true;
    do {
      F->exp_[k] = x;
      x = F->mul_slow(x, g);
      ++k;
      if (x == 1 && k < order) {
        ok = false;
        break;
      }
    } while (k < order);
    if (!ok || x != 1) continue;
    F->gen_ = g;
    break;
  }
  if (order == 1) {
    F->gen_ = 1;
    F->exp_[0] = 1;
  }
  for (std::uint32_t k = 0; k < order; ++k) {
    F->log_[F->exp_[k]] = k;
    F->exp_[k + order] = F->exp_[k];
  }
  F->frob_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) F->frob_[a] = F->pow(a, p);
  return F;
}

Fq FiniteField::from_digits(const std::uint32_t* c) const {
  Fq v = 0;
  for (int s = f_ - 1; s >= 0; --s) v = v * p_ + c[s];
  return v;
}

Fq FiniteField::add_slow(Fq a, Fq b) const {
  std::uint32_t c[64];
  for (int s = 0; s < f_; ++s) c[s] = (digit(a, s) + digit(b, s)) % p_;
  return from_digits(c);
}

Fq FiniteField::mul_slow(Fq a, Fq b) const {
  Poly pa(f_), pb(f_);
  for (int s = 0; s < f_; ++s) {
    pa[s] = digit(a, s);
    pb[s] = digit(b, s);
  }
  Poly r = poly_mulmod(pa, pb, modulus_, p_);
  r.resize(f_, 0);
  return from_digits(r.data());
}

Fq FiniteField::inv(Fq a) const {
  if (a == 0) throw BreuilError("inverse of zero in finite field");
  const std::uint32_t order = q_ - 1;
  return exp_[(order - log_[a]) % order];
}

Fq FiniteField::pow(Fq a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = q_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % order)) % order];
}

Fq FiniteField::frob_pow(Fq a, long j) const {
  long jj = j % f_;
  if (jj < 0) jj += f_;
  for (long i = 0; i < jj; ++i) a = frob_[a];
  return a;
}

Fq FiniteField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Fq>(r);
}

Fq FiniteField::subfield_generator(int h) const {
  if (h <= 0 || f_ % h != 0) throw ParameterError("subfield degree must divide f");
  std::uint64_t ph = 1;
  for (int i = 0; i < h; ++i) ph *= p_;
  return pow(gen_, (q_ - 1) / (ph - 1));
}

int FiniteField::degree_of(Fq a) const {
  Fq x = frob_[a];
  int d = 1;
  while (x != a) {
    x = frob_[x];
    ++d;
  }
  return d;
}

std::vector<std::uint32_t> FiniteField::minimal_polynomial(Fq a) const {
  // prod_{j<d} (x - a^{p^j}) has coefficients in F_p.
  const int d = degree_of(a);
  std::vector<Fq> c{1};
  Fq conj = a;
  for (int j = 0; j < d; ++j) {
    std::vector<Fq> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] = add(next[i + 1], c[i]);
      next[i] = sub(next[i], mul(c[i], conj));
    }
    c = std::move(next);
    conj = frob_[conj];
  }
  std::vector<std::uint32_t> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i];
  return out;
}

Fq FiniteField::root_of_unity(std::uint32_t n) const {
  if (n == 0 || (q_ - 1) % n != 0) return 0;
  return pow(gen_, (q_ - 1) / n);
}

std::vector<Fq> field_embedding(const FiniteField& small, const FiniteField& big) {
  if (small.p() != big.p() || big.f() % small.f() != 0)
    throw ParameterError("field is not a subfield");
  const auto& m = small.modulus();
  Fq root = 0;
  bool found = false;
  for (Fq b = 0; b < big.q() && !found; ++b) {
    Fq acc = 0, pw = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      acc = big.add(acc, big.mul(big.from_int(m[i]), pw));
      pw = big.mul(pw, b);
    }
    if (acc == 0) {
      root = b;
      found = true;
    }
  }
  if (!found) throw ParameterError("modulus has no root in the larger field");
  std::vector<Fq> table(small.q());
  for (Fq a = 0; a < small.q(); ++a) {
    Fq acc = 0, pw = 1;
    for (int s = 0; s < small.f(); ++s) {
      acc = big.add(acc, big.mul(big.from_int(small.digit(a, s)), pw));
      pw = big.mul(pw, root);
    }
    table[a] = acc;
  }
  return table;
}

}  // namespace breuil
