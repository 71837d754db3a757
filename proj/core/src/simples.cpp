#include "breuil/simples.hpp"

#include <algorithm>
#include <numeric>

#include <boost/rational.hpp>

#include "breuil/errors.hpp"

namespace breuil {

namespace {

using Q = boost::rational<long long>;

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int minimal_period(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    bool ok = true;
    for (int i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return d;
  }
  return n;
}

std::vector<int> rotate_by(const std::vector<int>& w, int s) {
  std::vector<int> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(i + s) % w.size()];
  return out;
}

}  // namespace

int DigitClass::d_h() const { return std::lcm(d(), h); }

DigitClass canonicalize_digits(std::uint32_t p, const std::vector<int>& word, int h) {
  if (word.empty()) throw ParameterError("empty digit word");
  if (h < 1) throw ParameterError("h must be positive");
  for (int a : word)
    if (a < 0 || a >= static_cast<int>(p)) throw ParameterError("digit out of range");
  const int d = minimal_period(word);
  std::vector<int> w(word.begin(), word.begin() + d);
  if (std::all_of(w.begin(), w.end(), [&](int a) { return a == static_cast<int>(p) - 1; }))
    throw ExcludedClass("the constant word p-1 is excluded");
  const int g = std::gcd(d, h);
  std::vector<int> best = w;
  for (int s = g; s < d; s += g) best = std::min(best, rotate_by(w, s));
  return {p, h, best};
}

std::vector<DigitClass> classes_with_dh(std::uint32_t p, int h, int m) {
  std::vector<DigitClass> out;
  for (int d = 1; d <= m; ++d) {
    if (std::lcm(d, h) != m) continue;
    const long long total = ipow(p, d);
    std::vector<int> w(d);
    for (long long idx = 0; idx < total; ++idx) {
      long long v = idx;
      for (auto& a : w) {
        a = static_cast<int>(v % p);
        v /= p;
      }
      if (minimal_period(w) != d) continue;
      if (std::all_of(w.begin(), w.end(), [&](int a) { return a == static_cast<int>(p) - 1; })) continue;
      auto c = canonicalize_digits(p, w, h);
      if (c.digits == w) out.push_back(c);
    }
  }
  return out;
}

Rational digits_to_rational(std::uint32_t p, const std::vector<int>& word) {
  long long m = 0;
  for (std::size_t i = 0; i < word.size(); ++i) m += word[i] * ipow(p, static_cast<int>(i));
  Q x(m, ipow(p, static_cast<int>(word.size())) - 1);
  if (x >= 1) x -= 1;
  return {x.numerator(), x.denominator()};
}

std::vector<int> rational_to_digits(std::uint32_t p, Rational in) {
  Q x(in.num, in.den);
  long long fl = x.numerator() / x.denominator();
  if (x.numerator() < 0 && x.numerator() % x.denominator() != 0) --fl;
  x -= fl;
  if (x.denominator() % p == 0) throw ParameterError("denominator divisible by p");
  int d = 1;
  while ((ipow(p, d) - 1) % x.denominator() != 0) {
    if (++d > 40) throw ParameterError("period too long");
  }
  long long m = boost::rational_cast<long long>(x * Q(ipow(p, d) - 1));
  std::vector<int> w(d);
  for (auto& a : w) {
    a = static_cast<int>(m % p);
    m /= p;
  }
  return w;
}

Object build_simple_word(const std::vector<int>& word, int h, const RingParams& P, bool with_N) {
  const auto& F = *P.k;
  const int p = P.p();
  if (P.er() < p - 1) throw ParameterError("simple objects need er >= p-1");
  if (h < 1 || F.f() % h != 0) throw ParameterError("E = F_{p^h} must lie in k");
  const int d = minimal_period(word);
  const int dh = std::lcm(d, h);
  ChainModule M(P.k, P.N(), std::vector<int>(dh, P.N()));
  const Fq sign = P.r % 2 ? F.neg(1) : 1;
  const Fq gamma = F.subfield_generator(h);

  FreeSpec s;
  s.rank = dh;
  CoeffSpec cs;
  cs.h = h;
  cs.gamma = gamma;
  for (int i = 0; i < dh; ++i) {
    s.fil_gens.push_back(M.mul_u(M.gen(i), P.er() - word[i % d]));
    s.phi_values.push_back(M.scale(sign, M.gen((i + 1) % dh)));
    cs.on_module.push_back(M.scale(F.frob_pow(gamma, i), M.gen(i)));
  }
  if (with_N) s.N_values = std::vector<Elem>(dh, M.zero());
  s.coeff = cs;
  return make_free(P, s);
}

Object build_simple(const DigitClass& a, const RingParams& P, bool with_N) {
  if (a.p != P.k->p()) throw ParameterError("digit class over another prime");
  return build_simple_word(a.digits, a.h, P, with_N);
}

TameCharacter make_character(std::uint32_t p, int level, std::uint64_t n) {
  const std::uint64_t mod = static_cast<std::uint64_t>(ipow(p, level)) - 1;
  TameCharacter c;
  c.level = level;
  std::uint64_t x = mod ? n % mod : 0;
  for (int j = 0; j < level; ++j) {
    c.orbit.push_back(x);
    x = mod ? (x * p) % mod : 0;
  }
  std::sort(c.orbit.begin(), c.orbit.end());
  c.orbit.erase(std::unique(c.orbit.begin(), c.orbit.end()), c.orbit.end());
  return c;
}

TameCharacter tame_character_of_shape(const std::vector<int>& b, const RingParams& P) {
  const int d = static_cast<int>(b.size());
  if (d == 0) throw ParameterError("empty shape");
  const long long p = P.p(), e = P.e, er = P.er();
  for (int x : b)
    if (x < 0 || x > er) throw ParameterError("shape exponent outside [0, er]");
  // v_i = alpha_i v_0 + beta_i; closing the cycle gives v_0.
  Q alpha(1), beta(0);
  for (int i = 0; i < d; ++i) {
    alpha *= p;
    beta = beta * Q(p) - Q(er - b[i], e);
  }
  const Q v0 = -beta / (alpha - Q(1));
  const long long mod = ipow(p, d) - 1;
  const Q n = v0 * Q(e * mod);
  if (n.denominator() != 1) throw BreuilError("valuation solve gave a non-integral exponent");
  long long ni = n.numerator() % mod;
  if (ni < 0) ni += mod;
  // Reduce to the minimal period of the digit word.
  std::vector<int> a(d);
  for (int i = 0; i < d; ++i) a[i] = static_cast<int>(er - b[i]);
  const int dm = minimal_period(a);
  if (dm < d) {
    const long long small = ipow(p, dm) - 1;
    ni = ni / (mod / small);
  }
  return make_character(static_cast<std::uint32_t>(p), dm, static_cast<std::uint64_t>(ni));
}

TameCharacter tame_character(const DigitClass& a, const RingParams& P) {
  std::vector<int> b;
  for (int x : a.digits) b.push_back(P.er() - x);
  return tame_character_of_shape(b, P);
}

TameCharacter dual_character(const TameCharacter& c, const RingParams& P) {
  const long long p = P.p();
  const long long mod = ipow(p, c.level) - 1;
  const long long top = P.er() * (mod / (p - 1));
  long long n = (top - static_cast<long long>(c.representative())) % mod;
  if (n < 0) n += mod;
  return make_character(static_cast<std::uint32_t>(p), c.level, static_cast<std::uint64_t>(n));
}

Identification identify_simple(const Object& obj, std::uint64_t seed) {
  Identification out;
  if (!obj->coeff) throw ParameterError("identification needs a coefficient action");
  const auto& P = obj->params;
  const int h = obj->coeff->h;
  for (const auto& a : classes_with_dh(P.k->p(), h, obj->M.rank())) {
    ++out.candidates;
    auto cand = build_simple(a, P, obj->has_N);
    auto r = find_isomorphism(obj, cand, {}, seed);
    if (!r.iso) continue;
    if (out.match) throw BreuilError("two simple classes match the same object");
    out.match = a;
  }
  return out;
}

}  // namespace breuil
