#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace breuil {

// Elements of F_{p^f} are packed as integers sum_s c_s p^s, where c_s is the
// coefficient of alpha^s and alpha is a root of the modulus. Index 0 is zero,
// index 1 is one, and for f = 1 the index is the residue itself.
using Fq = std::uint32_t;

class FiniteField;
using Field = std::shared_ptr<const FiniteField>;

class FiniteField {
 public:
  // modulus: monic, low degree first, length f+1. Empty selects the default.
  static Field make(std::uint32_t p, int f, std::vector<std::uint32_t> modulus = {});
  static Field prime(std::uint32_t p) { return make(p, 1); }

  // First irreducible monic polynomial of degree f, ordered by the packed
  // index of its lower coefficients.
  static std::vector<std::uint32_t> default_modulus(std::uint32_t p, int f);
  // Rabin's test.
  static bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);
  static bool is_prime(std::uint32_t n);

  std::uint32_t p() const { return p_; }
  int f() const { return f_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Fq add(Fq a, Fq b) const {
    if (!add_.empty()) return add_[a * q_ + b];
    return add_slow(a, b);
  }
  Fq neg(Fq a) const { return neg_[a]; }
  Fq sub(Fq a, Fq b) const { return add(a, neg_[b]); }
  Fq mul(Fq a, Fq b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Fq inv(Fq a) const;
  Fq pow(Fq a, std::uint64_t e) const;
  Fq frob(Fq a) const { return frob_[a]; }
  // a^{p^j}, j may be negative.
  Fq frob_pow(Fq a, long j) const;
  // Image of an integer in the prime field.
  Fq from_int(long long v) const;

  std::uint32_t digit(Fq a, int s) const { return digits_[a * f_ + s]; }
  Fq from_digits(const std::uint32_t* c) const;

  // Smallest-index generator of the multiplicative group.
  Fq generator() const { return gen_; }
  // Generator of the unique subfield of degree h (requires h | f).
  Fq subfield_generator(int h) const;
  // Degree of F_p(a) over F_p.
  int degree_of(Fq a) const;
  // Minimal polynomial of a over F_p, monic, low degree first.
  std::vector<std::uint32_t> minimal_polynomial(Fq a) const;
  // Primitive n-th root of unity, or 0 if n does not divide q-1.
  Fq root_of_unity(std::uint32_t n) const;

  bool operator==(const FiniteField& o) const {
    return p_ == o.p_ && f_ == o.f_ && modulus_ == o.modulus_;
  }

 private:
  FiniteField() = default;
  Fq add_slow(Fq a, Fq b) const;
  Fq mul_slow(Fq a, Fq b) const;

  std::uint32_t p_ = 0;
  int f_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> digits_;
  std::vector<std::uint16_t> add_;
  std::vector<Fq> neg_, frob_, exp_;
  std::vector<std::uint32_t> log_;
  Fq gen_ = 0;
};

inline bool same_field(const Field& a, const Field& b) { return a == b || *a == *b; }

// Field embedding small -> big sending the small modulus root to the
// smallest-index root in big. Requires f_small | f_big.
std::vector<Fq> field_embedding(const FiniteField& small, const FiniteField& big);

}  // namespace breuil
