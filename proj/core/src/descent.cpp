#include "breuil/descent.hpp"

#include <numeric>
#include <string>

#include <boost/rational.hpp>

#include "breuil/duality.hpp"
#include "breuil/errors.hpp"

namespace breuil {

TameExtension TameExtension::make(Field k, std::uint32_t n) {
  const std::uint32_t p = k->p();
  if (n == 0 || n % p == 0) throw ParameterError("tame degree must be prime to p");
  if ((k->q() - 1) % n != 0) throw ParameterError("mu_n is not contained in k");
  TameExtension ext;
  ext.k = k;
  ext.n = n;
  ext.m = 1;
  while ((static_cast<std::uint64_t>(ext.m) * n) % p != 1 % p) ++ext.m;
  const std::int64_t num = 1 - static_cast<std::int64_t>(n) * ext.m;  // divisible by p
  std::int64_t t = (num / static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(n);
  if (t < 0) t += n;
  ext.t = static_cast<std::uint32_t>(t);
  ext.zeta = k->root_of_unity(n);
  return ext;
}

Fq TameExtension::omega(std::int64_t j) const {
  std::int64_t e = (static_cast<std::int64_t>(t) * j) % static_cast<std::int64_t>(n);
  if (e < 0) e += n;
  return k->pow(zeta, static_cast<std::uint64_t>(e));
}

namespace {

// Coordinates (i, s) of an element of src land on (i, n s) in dst; each
// coefficient is passed through map.
template <class Map>
Elem spread(const ChainModule& src, const ChainModule& dst, int n, const Elem& x, Map map) {
  Elem y = dst.zero();
  for (int i = 0; i < src.rank(); ++i)
    for (int s = 0; s < src.order(i); ++s) y[dst.offset(i) + n * s] = map(x[src.offset(i) + s]);
  return y;
}

template <class Map>
std::vector<Elem> spread_all(const ChainModule& src, const ChainModule& dst, int n, const std::vector<Elem>& xs,
                             Map map) {
  std::vector<Elem> out;
  for (const auto& x : xs) out.push_back(spread(src, dst, n, x, map));
  return out;
}

std::vector<int> scaled(const std::vector<int>& orders, int n) {
  std::vector<int> out;
  for (int o : orders) out.push_back(o * n);
  return out;
}

// Rebuilds obj over new parameters with u -> u^n and coefficients through
// map; scale multiplies N.
template <class Map>
UniSpec transport_spec(const BreuilModule& o, const ChainModule& M, const ChainModule& Fil, int n, Fq scale, Map map) {
  UniSpec u;
  u.M_orders = M.orders();
  u.Fil_orders = Fil.orders();
  u.iota = spread_all(o.M, M, n, o.iota, map);
  u.phi = spread_all(o.M, M, n, o.phi, map);
  if (o.has_N) {
    auto Nm = spread_all(o.M, M, n, o.N, map);
    auto Nf = spread_all(o.Fil, Fil, n, o.N_fil, map);
    for (auto& x : Nm) x = M.scale(scale, x);
    for (auto& x : Nf) x = Fil.scale(scale, x);
    u.N = Nm;
    u.N_fil = Nf;
  }
  if (o.coeff) {
    CoeffSpec cs;
    cs.h = o.coeff->h;
    cs.gamma = map(o.coeff->gamma);
    cs.on_module = spread_all(o.M, M, n, o.coeff->on_module, map);
    cs.on_fil = spread_all(o.Fil, Fil, n, o.coeff->on_fil, map);
    u.coeff = cs;
  }
  return u;
}

}  // namespace

Object base_change_tame(const Object& obj, const TameExtension& ext) {
  const auto& o = *obj;
  const auto& P = o.params;
  if (!same_field(P.k, ext.k)) throw ParameterError("tame base change over another residue field");
  const int n = static_cast<int>(ext.n);
  const int eL = P.e * n;
  if (eL > kMaxTameRamification) throw ParameterError("ramification index above the configured bound");
  const auto& F = *P.k;
  ChainModule cK(P.k, P.N(), {P.N()});
  ChainModule cL(P.k, P.N() * n, {P.N() * n});
  RingParams L = RingParams::make(P.k, eL, P.r, spread(cK, cL, n, P.c, [](Fq x) { return x; }));
  ChainModule M(P.k, L.N(), scaled(o.M.orders(), n));
  ChainModule Fil(P.k, L.N(), scaled(o.Fil.orders(), n));
  auto id = [](Fq x) { return x; };
  UniSpec u = transport_spec(o, M, Fil, n, F.from_int(n), id);
  if (!o.descent) {
    DescentSpec ds;
    ds.n = n;
    ds.omega = ext.omega(1);
    for (int i = 0; i < M.rank(); ++i) ds.on_module.push_back(M.gen(i));
    std::vector<Elem> on_fil;
    for (int j = 0; j < Fil.rank(); ++j) on_fil.push_back(Fil.gen(j));
    ds.on_fil = on_fil;
    u.descent = ds;
  }
  return make_uni(L, u);
}

Morphism base_change_tame(const Morphism& m, const Object& source_L, const Object& target_L,
                          const TameExtension& ext) {
  const int n = static_cast<int>(ext.n);
  auto id = [](Fq x) { return x; };
  return Morphism{source_L, target_L, spread_all(m.target->M, target_L->M, n, m.f, id),
                  spread_all(m.target->Fil, target_L->Fil, n, m.f_fil, id)};
}

Object base_change_unramified(const Object& obj, const Field& l) {
  const auto& o = *obj;
  const auto& P = o.params;
  auto table = field_embedding(*P.k, *l);
  auto map = [&](Fq x) { return table[x]; };
  ChainModule cK(P.k, P.N(), {P.N()});
  ChainModule cL(l, P.N(), {P.N()});
  RingParams L = RingParams::make(l, P.e, P.r, spread(cK, cL, 1, P.c, map));
  ChainModule M(l, L.N(), o.M.orders());
  ChainModule Fil(l, L.N(), o.Fil.orders());
  UniSpec u = transport_spec(o, M, Fil, 1, 1, map);
  if (o.descent) {
    DescentSpec ds;
    ds.n = o.descent->n;
    ds.omega = map(o.descent->omega);
    ds.on_module = spread_all(o.M, M, 1, o.descent->on_module, map);
    ds.on_fil = spread_all(o.Fil, Fil, 1, o.descent->on_fil, map);
    u.descent = ds;
  }
  return make_uni(L, u);
}

Morphism base_change_unramified(const Morphism& m, const Object& source_l, const Object& target_l) {
  auto table = field_embedding(*m.source->params.k, *source_l->params.k);
  auto map = [&](Fq x) { return table[x]; };
  return Morphism{source_l, target_l, spread_all(m.target->M, target_l->M, 1, m.f, map),
                  spread_all(m.target->Fil, target_l->Fil, 1, m.f_fil, map)};
}

ValidationReport validate_descent(const BreuilModule& o, bool check_dual) {
  ValidationReport rep;
  if (!o.descent) {
    rep.add("descent.present", false, "no descent action");
    return rep;
  }
  const auto& F = *o.params.k;
  const auto& D = *o.descent;
  rep.add("descent.omega_order", F.pow(D.omega, D.n) == 1, "omega^n != 1");

  auto first_bad = [](int count, auto pred, const char* g) {
    for (int i = 0; i < count; ++i)
      if (!pred(i)) return std::string(g) + std::to_string(i);
    return std::string();
  };
  std::string w = first_bad(o.M.rank(), [&](int i) { return o.M.killed_by_u_pow(D.on_module[i], o.M.order(i)); }, "g");
  if (w.empty())
    w = first_bad(o.Fil.rank(), [&](int j) { return o.Fil.killed_by_u_pow(D.on_fil[j], o.Fil.order(j)); }, "h");
  rep.add("descent.well_defined", w.empty(), w);

  w = first_bad(o.M.rank(), [&](int i) {
    Elem x = o.M.gen(i);
    for (int s = 0; s < D.n; ++s) x = o.sigma_of(x);
    return x == o.M.gen(i);
  }, "g");
  if (w.empty())
    w = first_bad(o.Fil.rank(), [&](int j) {
      Elem x = o.Fil.gen(j);
      for (int s = 0; s < D.n; ++s) x = o.sigma_fil_of(x);
      return x == o.Fil.gen(j);
    }, "h");
  rep.add("descent.order", w.empty(), w.empty() ? w : "A^n != id at " + w);

  w = first_bad(o.Fil.rank(), [&](int j) { return o.iota_of(D.on_fil[j]) == o.sigma_of(o.iota[j]); }, "h");
  rep.add("descent.fil_compat", w.empty(), w);
  w = first_bad(o.Fil.rank(), [&](int j) { return o.phi_of(D.on_fil[j]) == o.sigma_of(o.phi[j]); }, "h");
  rep.add("descent.phi_compat", w.empty(), w);
  if (o.has_N) {
    w = first_bad(o.M.rank(), [&](int i) { return o.N_of(D.on_module[i]) == o.sigma_of(o.N[i]); }, "g");
    if (w.empty())
      w = first_bad(o.Fil.rank(), [&](int j) { return o.N_fil_of(D.on_fil[j]) == o.sigma_fil_of(o.N_fil[j]); }, "h");
    rep.add("descent.N_compat", w.empty(), w.empty() ? w : "A N != N A at " + w);
  }
  if (o.coeff) {
    w = first_bad(o.M.rank(), [&](int i) {
      return o.nu_of(D.on_module[i]) == o.sigma_of(o.coeff->on_module[i]);
    }, "g");
    rep.add("descent.coeff_compat", w.empty(), w);
  }
  if (check_dual && o.M.is_free() && o.is_filtered() && o.is_generated()) {
    auto self = std::make_shared<BreuilModule>(o);
    auto dual = dualize(self);
    rep.merge(validate_descent(*dual, false), "dual.");
  }
  return rep;
}

Rational shape_valuation(const std::vector<int>& b, const RingParams& P) {
  using Q = boost::rational<long long>;
  const long long p = P.p(), e = P.e, er = P.er();
  Q alpha(1), beta(0);
  for (int x : b) {
    alpha *= p;
    beta = beta * Q(p) - Q(er - x, e);
  }
  const Q v0 = -beta / (alpha - Q(1));
  return {v0.numerator(), v0.denominator()};
}

}  // namespace breuil
