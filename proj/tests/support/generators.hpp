#pragma once

#include <random>

#include "breuil/chain_module.hpp"
#include "breuil/hom.hpp"
#include "breuil/object.hpp"

namespace gen {

using Rng = std::mt19937_64;

breuil::Fq random_scalar(Rng& rng, const breuil::FiniteField& F);
breuil::Elem random_elem(Rng& rng, const breuil::ChainModule& M);

// p = 3, k = F_3, e = 2, r = 1, c = -1.
breuil::RingParams base_params();
breuil::RingParams params(std::uint32_t p, int f, int e, int r);

// Rank one free object: Fil = u^b S, phi(u^b e) = lambda e, N = 0.
breuil::Object rank_one(const breuil::RingParams& P, int b, breuil::Fq lambda, bool with_N = true);

// Random valid Mod object of the given rank. Built diagonally (Fil spanned by
// u^{b_i} e_i, phi with coefficients in k[u^p], N = 0) and then transported
// along a random automorphism, which makes N nonzero in general.
breuil::Object random_free(Rng& rng, const breuil::RingParams& P, int rank, bool with_N = true);

// An isomorphic copy of a free object along a random automorphism.
breuil::Object transport(Rng& rng, const breuil::Object& obj);

// Uniform element of the F_p-span of a Hom basis.
breuil::Morphism random_morphism(Rng& rng, const breuil::Object& a, const breuil::Object& b);

// a, b, c with Hom(a, b) and Hom(b, c) nonzero: b and c contain a as a
// summand up to transport.
struct Triple {
  breuil::Object a, b, c;
};
Triple composable_triple(Rng& rng, const breuil::RingParams& P);

// Rank one 'Fil object with phi(u^b x) = u^a x and a > b; its Gen closure
// vanishes.
breuil::Object phantom(const breuil::RingParams& P, int b, int a);

// M free of rank one on x; Fil free on g1, g2 with iota(g1) = u^{er} x,
// iota(g2) = 0, phi(g1) = c x, phi(g2) = x. Its Fil closure is zero.
breuil::Object phantom_generator(const breuil::RingParams& P);

// 0 -> sub -> middle -> quot -> 0, exact on modules and on Fil, with both ends
// phantom: Fil = <u^{b1} e1, u^{b2} e2>, phi(u^{b1} e1) = u^{a1} e1,
// phi(u^{b2} e2) = u^{a2} e2 + y e1.
struct Extension {
  breuil::Object sub, middle, quot;
};
Extension phantom_extension(Rng& rng, const breuil::RingParams& P);

}  // namespace gen
