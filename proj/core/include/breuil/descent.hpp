#pragma once

#include <cstdint>

#include "breuil/hom.hpp"
#include "breuil/simples.hpp"

namespace breuil {

// L/K tame, totally ramified of degree n prime to p, with mn = 1 mod p, zeta
// a primitive n-th root of unity in k and omega(j) = zeta^{t j} where
// t = (1 - nm)/p mod n.
struct TameExtension {
  Field k;
  std::uint32_t n = 1;
  std::uint32_t m = 1;
  std::uint32_t t = 0;
  Fq zeta = 1;

  static TameExtension make(Field k, std::uint32_t n);
  Fq omega(std::int64_t j) const;
};

// Largest e_L accepted by base_change_tame.
inline constexpr int kMaxTameRamification = 48;

// u_K -> u_L^n on every structure, N_L = n N_K on generators. When the input
// has no descent data the output carries the trivial action of Gal(L/K)
// (A(x (x) s) = x (x) sigma(s)); descent data already present is dropped.
Object base_change_tame(const Object& obj, const TameExtension& ext);
Morphism base_change_tame(const Morphism& m, const Object& source_L, const Object& target_L,
                          const TameExtension& ext);

// Scalars extended along the embedding k -> l (smallest-index root).
Object base_change_unramified(const Object& obj, const Field& l);
Morphism base_change_unramified(const Morphism& m, const Object& source_l, const Object& target_l);

// A^n = id, semilinearity, Fil-stability, commutation with phi, N and the
// coefficient action; with check_dual the dual action on dualize(obj) is
// validated too (for free generated objects).
ValidationReport validate_descent(const BreuilModule& obj, bool check_dual = true);

// Valuation v_0 of the cyclic solve behind tame_character_of_shape.
Rational shape_valuation(const std::vector<int>& b, const RingParams& params);

}  // namespace breuil
