#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "breuil/hom.hpp"

namespace breuil {

// A class of R_h: a primitive periodic base-p word (a_0, ..., a_{d-1}), kept
// in canonical rotation (lex-least among rotations by multiples of gcd(d, h)).
struct DigitClass {
  std::uint32_t p = 0;
  int h = 1;
  std::vector<int> digits;

  int d() const { return static_cast<int>(digits.size()); }
  int d_h() const;
  bool operator==(const DigitClass&) const = default;
};

DigitClass canonicalize_digits(std::uint32_t p, const std::vector<int>& word, int h);
// All canonical classes of R_h whose d_h equals m.
std::vector<DigitClass> classes_with_dh(std::uint32_t p, int h, int m);

// x = num/den, always reduced with 0 <= x < 1.
struct Rational {
  long long num = 0;
  long long den = 1;
  bool operator==(const Rational&) const = default;
};
// m / (p^d - 1) with m = sum a_i p^i.
Rational digits_to_rational(std::uint32_t p, const std::vector<int>& word);
// Inverse of the above on minimal-period words. Throws when the reduced
// denominator is divisible by p.
std::vector<int> rational_to_digits(std::uint32_t p, Rational x);

// M(a): rank d_h, Fil spanned by u^{er-a_i} e_i, phi_r(u^{er-a_i} e_i) =
// (-1)^r e_{i+1}, N = 0, nu(gamma) e_i = gamma^{p^i} e_i for the canonical
// generator gamma of F_{p^h} inside k.
Object build_simple(const DigitClass& a, const RingParams& params, bool with_N = true);
// Same construction from an arbitrary (non-canonical) representative word.
Object build_simple_word(const std::vector<int>& word, int h, const RingParams& params, bool with_N = true);

// Level d and the Frobenius orbit {n p^j mod p^d - 1}, sorted.
struct TameCharacter {
  int level = 1;
  std::vector<std::uint64_t> orbit;
  std::uint64_t representative() const { return orbit.front(); }
  bool operator==(const TameCharacter&) const = default;
};
TameCharacter make_character(std::uint32_t p, int level, std::uint64_t n);

// Exponent of a cyclic shape Fil = <u^{b_i} e_i>, phi(u^{b_i} e_i) = unit e_{i+1}:
// solve v_{i+1} = p v_i - a_i/e with a_i = er - b_i exactly over Q and read
// n = e (p^d - 1) v_0.
TameCharacter tame_character_of_shape(const std::vector<int>& b, const RingParams& params);
TameCharacter tame_character(const DigitClass& a, const RingParams& params);
// Orbit of er (p^d - 1)/(p - 1) - n.
TameCharacter dual_character(const TameCharacter& c, const RingParams& params);

struct Identification {
  std::optional<DigitClass> match;
  int candidates = 0;
};
// Runs through the classes with d_h = rank and tests E-equivariant
// isomorphism against each M(a).
Identification identify_simple(const Object& obj, std::uint64_t seed = 0);

}  // namespace breuil
