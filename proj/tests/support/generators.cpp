#include "support/generators.hpp"

#include <stdexcept>

namespace gen {

using namespace breuil;

Fq random_scalar(Rng& rng, const FiniteField& F) {
  return static_cast<Fq>(std::uniform_int_distribution<std::uint32_t>(0, F.q() - 1)(rng));
}

Elem random_elem(Rng& rng, const ChainModule& M) {
  Elem x(M.length());
  for (auto& c : x) c = random_scalar(rng, *M.field());
  return x;
}

RingParams base_params() { return params(3, 1, 2, 1); }

RingParams params(std::uint32_t p, int f, int e, int r) { return RingParams::make(FiniteField::make(p, f), e, r); }

Object rank_one(const RingParams& P, int b, Fq lambda, bool with_N) {
  ChainModule M(P.k, P.N(), {P.N()});
  FreeSpec s;
  s.rank = 1;
  s.fil_gens = {M.embed(0, P.ring().u_pow(b))};
  s.phi_values = {M.scale(lambda, M.gen(0))};
  if (with_N) s.N_values = std::vector<Elem>{M.zero()};
  return make_free(P, s);
}

namespace {

Matrix random_invertible(Rng& rng, const FiniteField& F, int d) {
  while (true) {
    Matrix m(d, d);
    for (auto& x : m.a) x = random_scalar(rng, F);
    if (rank(F, m) == d) return m;
  }
}

}  // namespace

Object random_free(Rng& rng, const RingParams& P, int d, bool with_N) {
  const auto& F = *P.k;
  const int N = P.N();
  const int p = P.p();
  ChainModule M(P.k, N, std::vector<int>(d, N));
  std::uniform_int_distribution<int> bdist(0, P.er());

  // phi(u^{b_i} e_i) = sum_j G_ji e_j with G_ji in k[u^p], G invertible mod u.
  Matrix G0 = random_invertible(rng, F, d);
  std::vector<Elem> fil, phi;
  for (int i = 0; i < d; ++i) {
    fil.push_back(M.embed(i, P.ring().u_pow(bdist(rng))));
    Elem v = M.zero();
    for (int j = 0; j < d; ++j) {
      v[M.offset(j)] = G0.at(j, i);
      for (int t = p; t < N; t += p) v[M.offset(j) + t] = random_scalar(rng, F);
    }
    phi.push_back(v);
  }

  FreeSpec s;
  s.rank = d;
  s.fil_gens = fil;
  s.phi_values = phi;
  if (with_N) s.N_values = std::vector<Elem>(d, M.zero());
  return transport(rng, make_free(P, s));
}

Object transport(Rng& rng, const Object& obj) {
  const auto& o = *obj;
  const auto& F = *o.params.k;
  const ChainModule& M = o.M;
  const int d = M.rank();
  Matrix P0 = random_invertible(rng, F, d);
  std::vector<Elem> Pimg;
  for (int i = 0; i < d; ++i) {
    Elem v = random_elem(rng, M);
    for (int j = 0; j < d; ++j) v[M.offset(j)] = P0.at(j, i);
    Pimg.push_back(v);
  }
  auto inv = inverse(F, linear_matrix(M, M, Pimg));
  if (!inv) throw std::logic_error("transport matrix not invertible");
  auto Pinv = images_from_matrix(M, *inv);
  auto conj = [&](const Elem& x) { return apply_linear(M, M, Pimg, x); };

  FreeSpec s;
  s.rank = d;
  for (int j = 0; j < o.Fil.rank(); ++j) {
    s.fil_gens.push_back(conj(o.iota[j]));
    s.phi_values.push_back(conj(o.phi[j]));
  }
  if (o.has_N) {
    std::vector<Elem> Nv;
    for (int i = 0; i < d; ++i) Nv.push_back(conj(o.N_of(Pinv[i])));
    s.N_values = Nv;
  }
  if (o.coeff) {
    CoeffSpec cs;
    cs.h = o.coeff->h;
    cs.gamma = o.coeff->gamma;
    for (int i = 0; i < d; ++i) cs.on_module.push_back(conj(o.nu_of(Pinv[i])));
    s.coeff = cs;
  }
  return make_free(o.params, s);
}

Morphism random_morphism(Rng& rng, const Object& a, const Object& b) {
  auto H = hom_basis(a, b);
  Vec z(H.dim());
  for (auto& c : z) c = static_cast<Fq>(rng() % a->params.k->p());
  return H.element(z);
}

Triple composable_triple(Rng& rng, const RingParams& P) {
  auto a = random_free(rng, P, 1);
  auto b = transport(rng, direct_sum(a, random_free(rng, P, 1)));
  auto c = rng() % 2 ? transport(rng, direct_sum(b, random_free(rng, P, 1))) : transport(rng, a);
  return {a, b, c};
}

Object phantom(const RingParams& P, int b, int a) {
  ChainModule M(P.k, P.N(), {P.N()});
  FreeSpec s;
  s.rank = 1;
  s.fil_gens = {M.mul_u(M.gen(0), b)};
  s.phi_values = {M.mul_u(M.gen(0), a)};
  return make_free(P, s);
}

Object phantom_generator(const RingParams& P) {
  ChainModule M(P.k, P.N(), {P.N()});
  UniSpec u;
  u.M_orders = {P.N()};
  u.Fil_orders = {P.N(), P.N()};
  u.iota = {M.mul_u(M.gen(0), P.er()), M.zero()};
  u.phi = {M.mul_ring(P.c, M.gen(0)), M.gen(0)};
  return make_uni(P, u);
}

Extension phantom_extension(Rng& rng, const RingParams& P) {
  std::uniform_int_distribution<int> bdist(0, P.er());
  auto pick = [&](int& b, int& a) {
    b = bdist(rng);
    a = std::uniform_int_distribution<int>(b + 1, P.N() - 1)(rng);
  };
  int b1, a1, b2, a2;
  pick(b1, a1);
  pick(b2, a2);
  ChainModule M(P.k, P.N(), {P.N(), P.N()});
  FreeSpec s;
  s.rank = 2;
  s.fil_gens = {M.mul_u(M.gen(0), b1), M.mul_u(M.gen(1), b2)};
  Elem y = M.mul_u(M.gen(1), a2);
  for (int t = 0; t < P.N(); ++t) y[M.offset(0) + t] = random_scalar(rng, *P.k);
  s.phi_values = {M.mul_u(M.gen(0), a1), y};
  return {phantom(P, b1, a1), make_free(P, s), phantom(P, b2, a2)};
}

}  // namespace gen
