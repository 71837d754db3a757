#include "breuil/object.hpp"

#include <functional>
#include <sstream>

#include "breuil/descent.hpp"
#include "breuil/errors.hpp"

namespace breuil {

RingParams RingParams::make(Field k, int e, int r, std::optional<RingElement> c) {
  RingParams P;
  P.k = std::move(k);
  P.e = e;
  P.r = r;
  const int p = P.p();
  if (e < 1) throw ParameterError("ramification index must be >= 1");
  if (r < 1 || r > p - 2) throw ParameterError("need 1 <= r <= p-2");
  const TruncatedRing R = P.ring();
  if (c) {
    if (static_cast<int>(c->size()) != P.N()) throw ShapeError("c must have length ep");
    P.c = *c;
  } else {
    P.c = R.constant(P.k->neg(1));
  }
  if (!R.is_unit(P.c)) throw ParameterError("c must be a unit of k[u]/u^{ep}");
  return P;
}

void ValidationReport::add(std::string name, bool passed, std::string witness) {
  // Witnesses only describe failures.
  if (passed) witness.clear();
  checks.push_back({std::move(name), passed, std::move(witness)});
}

void ValidationReport::merge(const ValidationReport& o, const std::string& prefix) {
  for (const auto& c : o.checks) checks.push_back({prefix + c.name, c.passed, c.witness});
  for (const auto& [k, v] : o.predicates) predicates[prefix + k] = v;
}

bool ValidationReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const Check* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<std::string> ValidationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.name);
  return out;
}

std::string format_elem(const ChainModule& M, const Elem& x) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < M.rank(); ++i) {
    for (int t = 0; t < M.order(i); ++t) {
      const Fq c = x[M.offset(i) + t];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << c << "*u^" << t << "*g" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

void BreuilModule::finalize() {
  fil_image_ = image(Fil, M, iota, Submodule::full(Fil));
  iota_solver_ = RowSolver(params.k, linear_matrix(Fil, M, iota));
  fil_kernel_dim_ = iota_solver_.kernel().rows;
}

bool BreuilModule::is_generated() const { return Submodule::span(M, phi) == Submodule::full(M); }

namespace {

void check_shape(const ChainModule& m, const std::vector<Elem>& v, std::size_t count, const char* what) {
  if (v.size() != count) {
    throw ShapeError(std::string(what) + ": expected " + std::to_string(count) + " images, got " +
                     std::to_string(v.size()));
  }
  for (const auto& x : v)
    if (static_cast<int>(x.size()) != m.length())
      throw ShapeError(std::string(what) + ": element length does not match its module");
}

// Values on Fil generators of a map that is known on M, pulled back through
// iota. Failing generators are recorded.
std::vector<Elem> pull_back(const BreuilModule& obj, const std::vector<Elem>& on_module_of_iota,
                            std::vector<int>& failed) {
  std::vector<Elem> out;
  for (std::size_t j = 0; j < on_module_of_iota.size(); ++j) {
    auto x = obj.iota_preimage(on_module_of_iota[j]);
    if (!x) {
      failed.push_back(static_cast<int>(j));
      out.push_back(obj.Fil.zero());
    } else {
      out.push_back(*x);
    }
  }
  return out;
}

std::string list_gens(const std::vector<int>& idx, const char* prefix) {
  std::ostringstream os;
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << prefix << idx[i];
  return os.str();
}

}  // namespace

Object make_uni(const RingParams& params, const UniSpec& spec) {
  auto obj = std::make_shared<BreuilModule>();
  obj->params = params;
  obj->M = ChainModule(params.k, params.N(), spec.M_orders);
  obj->Fil = ChainModule(params.k, params.N(), spec.Fil_orders);
  check_shape(obj->M, spec.iota, spec.Fil_orders.size(), "iota");
  check_shape(obj->M, spec.phi, spec.Fil_orders.size(), "phi");
  obj->iota = spec.iota;
  obj->phi = spec.phi;
  obj->finalize();

  if (spec.N) {
    check_shape(obj->M, *spec.N, spec.M_orders.size(), "N");
    obj->has_N = true;
    obj->N = *spec.N;
    if (spec.N_fil) {
      check_shape(obj->Fil, *spec.N_fil, spec.Fil_orders.size(), "N_fil");
      obj->N_fil = *spec.N_fil;
    } else {
      if (!obj->is_filtered()) throw ShapeError("N_fil is required when iota is not injective");
      std::vector<Elem> target;
      for (const auto& y : obj->iota) target.push_back(obj->M.mul_u(obj->N_of(y), params.e));
      std::vector<int> failed;
      obj->N_fil = pull_back(*obj, target, failed);
      obj->construction.push_back({"griffiths", failed.empty(), failed.empty() ? "" : "u^e N(Fil) not in Fil at " + list_gens(failed, "h")});
    }
  } else if (spec.N_fil) {
    throw ShapeError("N_fil given without N");
  }

  if (spec.coeff) {
    const auto& cs = *spec.coeff;
    CoefficientAction ca;
    ca.h = cs.h;
    if (cs.h < 1 || params.k->f() % cs.h != 0) throw ParameterError("coefficient degree h must divide f");
    ca.gamma = cs.gamma ? *cs.gamma : params.k->subfield_generator(cs.h);
    check_shape(obj->M, cs.on_module, spec.M_orders.size(), "coefficient action");
    ca.on_module = cs.on_module;
    obj->coeff = ca;
    if (cs.on_fil) {
      check_shape(obj->Fil, *cs.on_fil, spec.Fil_orders.size(), "coefficient action on Fil");
      obj->coeff->on_fil = *cs.on_fil;
    } else {
      if (!obj->is_filtered()) throw ShapeError("coefficient action on Fil is required when iota is not injective");
      std::vector<Elem> target;
      for (const auto& y : obj->iota) target.push_back(obj->nu_of(y));
      std::vector<int> failed;
      obj->coeff->on_fil = pull_back(*obj, target, failed);
      obj->construction.push_back({"coeff.fil_stable", failed.empty(), list_gens(failed, "h")});
    }
  }

  if (spec.descent) {
    const auto& ds = *spec.descent;
    DescentAction da;
    da.n = ds.n;
    da.omega = ds.omega;
    check_shape(obj->M, ds.on_module, spec.M_orders.size(), "descent action");
    da.on_module = ds.on_module;
    obj->descent = da;
    if (ds.on_fil) {
      check_shape(obj->Fil, *ds.on_fil, spec.Fil_orders.size(), "descent action on Fil");
      obj->descent->on_fil = *ds.on_fil;
    } else {
      if (!obj->is_filtered()) throw ShapeError("descent action on Fil is required when iota is not injective");
      std::vector<Elem> target;
      for (const auto& y : obj->iota) target.push_back(obj->sigma_of(y));
      std::vector<int> failed;
      obj->descent->on_fil = pull_back(*obj, target, failed);
      obj->construction.push_back({"descent.fil_stable", failed.empty(), list_gens(failed, "h")});
    }
  }
  return obj;
}

Object make_free(const RingParams& params, const FreeSpec& spec) {
  const int N = params.N();
  ChainModule M(params.k, N, std::vector<int>(spec.rank, N));
  ChainModule G(params.k, N, std::vector<int>(spec.fil_gens.size(), N));
  check_shape(M, spec.fil_gens, spec.fil_gens.size(), "fil generators");
  check_shape(M, spec.phi_values, spec.fil_gens.size(), "phi values");

  auto fil = Submodule::span(M, spec.fil_gens);
  auto q = decompose(fil);

  // phi on the chain basis of Fil, through a lift to the free module on the
  // given generators; syzygies must map to zero.
  RowSolver solver(params.k, linear_matrix(G, M, spec.fil_gens));
  std::vector<Elem> phi;
  for (const auto& h : q.lifts) {
    auto a = solver.solve(h);
    if (!a) throw BreuilError("chain generator of Fil is not in the span of the given generators");
    phi.push_back(apply_frobenius(G, M, spec.phi_values, *a));
  }
  std::vector<int> bad;
  for (int i = 0; i < solver.kernel().rows; ++i)
    if (!is_zero(apply_frobenius(G, M, spec.phi_values, solver.kernel().row_vec(i)))) bad.push_back(i);

  UniSpec u;
  u.M_orders = M.orders();
  u.Fil_orders = q.module.orders();
  u.iota = q.lifts;
  u.phi = phi;
  u.N = spec.N_values;
  u.coeff = spec.coeff;
  u.descent = spec.descent;
  auto obj = make_uni(params, u);
  auto mut = std::const_pointer_cast<BreuilModule>(obj);
  mut->construction.insert(mut->construction.begin(),
                           {"phi_syzygies", bad.empty(), bad.empty() ? "" : "relation among Fil generators not killed by phi"});
  return obj;
}

Object standard_object(const RingParams& params, int t, bool with_N) {
  if (t < 0 || t > params.r) throw ParameterError("S(t) needs 0 <= t <= r");
  const TruncatedRing R = params.ring();
  ChainModule M(params.k, params.N(), {params.N()});
  FreeSpec s;
  s.rank = 1;
  s.fil_gens = {M.embed(0, R.u_pow(params.e * t))};
  s.phi_values = {M.embed(0, R.pow(params.c, t))};
  if (with_N) s.N_values = std::vector<Elem>{M.zero()};
  return make_free(params, s);
}

Object zero_object(const RingParams& params, bool with_N) {
  UniSpec u;
  if (with_N) u.N = std::vector<Elem>{};
  if (with_N) u.N_fil = std::vector<Elem>{};
  return make_uni(params, u);
}

ValidationReport validate_object(const BreuilModule& o) {
  ValidationReport rep;
  const int e = o.params.e, p = o.params.p(), er = o.params.er();

  {
    std::string w;
    for (int i = 0; i < o.M.rank() && w.empty(); ++i) {
      Elem x = o.M.mul_u(o.M.gen(i), er);
      if (!o.fil_image().contains(x)) w = "u^er*g" + std::to_string(i) + " not in image of iota";
    }
    rep.add("fil_contains_u_er", w.empty(), w);
  }
  auto per_gen = [&](const char* name, const ChainModule& m, const std::vector<Elem>& img, auto factor,
                     const char* g) {
    std::string w;
    for (int j = 0; j < m.rank() && w.empty(); ++j)
      if (!o.M.killed_by_u_pow(img[j], factor(m.order(j)))) w = std::string(g) + std::to_string(j);
    rep.add(name, w.empty(), w);
  };
  per_gen("iota_well_defined", o.Fil, o.iota, [](int m) { return m; }, "h");
  per_gen("phi_well_defined", o.Fil, o.phi, [p](int m) { return p * m; }, "h");

  if (o.has_N) {
    per_gen("N_well_defined", o.M, o.N, [](int n) { return n; }, "g");
    {
      std::string w;
      for (int j = 0; j < o.Fil.rank() && w.empty(); ++j)
        if (!o.Fil.killed_by_u_pow(o.N_fil[j], o.Fil.order(j))) w = "h" + std::to_string(j);
      rep.add("N_fil_well_defined", w.empty(), w);
    }
    std::string wg, wc;
    for (int j = 0; j < o.Fil.rank(); ++j) {
      const Elem h = o.Fil.gen(j);
      if (wg.empty() && o.iota_of(o.N_fil_of(h)) != o.M.mul_u(o.N_of(o.iota[j]), e))
        wg = "iota N_fil(h" + std::to_string(j) + ") != u^e N iota(h" + std::to_string(j) + ")";
      if (wc.empty()) {
        Elem lhs = o.phi_of(o.N_fil_of(h));
        Elem rhs = o.M.mul_ring(o.params.c, o.N_of(o.phi[j]));
        if (lhs != rhs)
          wc = "phi N_fil(h" + std::to_string(j) + ") = " + format_elem(o.M, lhs) + " but c N phi = " +
               format_elem(o.M, rhs);
      }
    }
    rep.add("iota_N_commute", wg.empty(), wg);
    rep.add("phi_N_commute", wc.empty(), wc);
  }
  for (const auto& c : o.construction) rep.checks.push_back(c);
  if (o.coeff) rep.merge(validate_coefficients(o));
  if (o.descent) rep.merge(validate_descent(o));

  rep.predicates["is_filtered"] = o.is_filtered();
  rep.predicates["is_generated"] = o.is_generated();
  rep.predicates["is_mod"] = o.is_filtered() && o.is_generated();
  rep.predicates["is_free"] = o.is_free();
  return rep;
}

ValidationReport validate_coefficients(const BreuilModule& o) {
  ValidationReport rep;
  if (!o.coeff) {
    rep.add("coeff.present", false, "no coefficient action");
    return rep;
  }
  const auto& F = *o.params.k;
  const auto& ca = *o.coeff;
  if (ca.h < 1 || F.f() % ca.h != 0) throw ParameterError("coefficient degree h must divide f");
  rep.add("coeff.gamma_generates_E", F.degree_of(ca.gamma) == ca.h,
          "degree of gamma is " + std::to_string(F.degree_of(ca.gamma)));

  // P(nu(gamma)) = 0 for the minimal polynomial P of gamma.
  const auto P = F.minimal_polynomial(ca.gamma);
  auto annihilates = [&](const ChainModule& m, const std::vector<Elem>& img) {
    for (int i = 0; i < m.rank(); ++i) {
      Elem x = m.gen(i), acc = m.zero();
      for (std::size_t d = 0; d < P.size(); ++d) {
        m.axpy(acc, P[d], x);
        x = apply_linear(m, m, img, x);
      }
      if (!is_zero(acc)) return i;
    }
    return -1;
  };
  int bad = annihilates(o.M, ca.on_module);
  int bad_fil = annihilates(o.Fil, ca.on_fil);
  rep.add("coeff.ring_hom", bad < 0 && bad_fil < 0,
          bad >= 0 ? "g" + std::to_string(bad) : (bad_fil >= 0 ? "h" + std::to_string(bad_fil) : ""));

  std::string w;
  for (int i = 0; i < o.M.rank() && w.empty(); ++i)
    if (!o.M.killed_by_u_pow(ca.on_module[i], o.M.order(i))) w = "g" + std::to_string(i);
  for (int j = 0; j < o.Fil.rank() && w.empty(); ++j)
    if (!o.Fil.killed_by_u_pow(ca.on_fil[j], o.Fil.order(j))) w = "h" + std::to_string(j);
  rep.add("coeff.well_defined", w.empty(), w);

  std::string wi, wp, wn;
  for (int j = 0; j < o.Fil.rank(); ++j) {
    const Elem h = o.Fil.gen(j);
    if (wi.empty() && o.iota_of(o.nu_fil_of(h)) != o.nu_of(o.iota[j])) wi = "h" + std::to_string(j);
    if (wp.empty() && o.phi_of(o.nu_fil_of(h)) != o.nu_of(o.phi[j]))
      wp = "phi(nu h" + std::to_string(j) + ") != nu(phi h" + std::to_string(j) + ")";
    if (o.has_N && wn.empty() && o.N_fil_of(o.nu_fil_of(h)) != o.nu_fil_of(o.N_fil[j])) wn = "h" + std::to_string(j);
  }
  if (o.has_N)
    for (int i = 0; i < o.M.rank() && wn.empty(); ++i)
      if (o.N_of(o.coeff->on_module[i]) != o.nu_of(o.N[i])) wn = "g" + std::to_string(i);
  rep.add("coeff.fil_compat", wi.empty(), wi);
  rep.add("coeff.phi_compat", wp.empty(), wp);
  if (o.has_N) rep.add("coeff.N_compat", wn.empty(), wn);
  return rep;
}

bool is_cris(const BreuilModule& o) {
  if (!o.has_N) throw BreuilError("crystalline predicate needs N");
  for (const auto& y : o.N)
    if (o.M.valuation(y) < 1) return false;
  return true;
}

namespace {

Elem place(const ChainModule& sum, const Elem& x, bool second) {
  Elem y = sum.zero();
  std::copy(x.begin(), x.end(), y.begin() + (second ? sum.length() - static_cast<int>(x.size()) : 0));
  return y;
}

std::vector<Elem> place_all(const ChainModule& sum, const std::vector<Elem>& xs, bool second) {
  std::vector<Elem> out;
  for (const auto& x : xs) out.push_back(place(sum, x, second));
  return out;
}

template <class T>
std::vector<T> cat(std::vector<T> a, const std::vector<T>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

Object direct_sum(const Object& a, const Object& b) {
  if (!(a->params == b->params)) throw ParameterError("direct sum of objects over different rings");
  if (a->has_N != b->has_N) throw ParameterError("direct sum needs matching N flags");
  if (a->coeff.has_value() != b->coeff.has_value()) throw ParameterError("direct sum needs matching coefficient data");
  if (a->descent.has_value() != b->descent.has_value()) throw ParameterError("direct sum needs matching descent data");
  auto s = std::make_shared<BreuilModule>();
  s->params = a->params;
  s->M = ChainModule::direct_sum(a->M, b->M);
  s->Fil = ChainModule::direct_sum(a->Fil, b->Fil);
  s->iota = cat(place_all(s->M, a->iota, false), place_all(s->M, b->iota, true));
  s->phi = cat(place_all(s->M, a->phi, false), place_all(s->M, b->phi, true));
  s->has_N = a->has_N;
  if (s->has_N) {
    s->N = cat(place_all(s->M, a->N, false), place_all(s->M, b->N, true));
    s->N_fil = cat(place_all(s->Fil, a->N_fil, false), place_all(s->Fil, b->N_fil, true));
  }
  if (a->coeff) {
    if (a->coeff->h != b->coeff->h) throw ParameterError("direct sum needs the same coefficient field");
    CoefficientAction cb = b->coeff->gamma == a->coeff->gamma ? *b->coeff : rebase_coefficients(*b, a->coeff->gamma);
    CoefficientAction ca = *a->coeff;
    ca.on_module = cat(place_all(s->M, a->coeff->on_module, false), place_all(s->M, cb.on_module, true));
    ca.on_fil = cat(place_all(s->Fil, a->coeff->on_fil, false), place_all(s->Fil, cb.on_fil, true));
    s->coeff = ca;
  }
  if (a->descent) {
    if (a->descent->n != b->descent->n || a->descent->omega != b->descent->omega)
      throw ParameterError("direct sum needs the same descent character");
    DescentAction da = *a->descent;
    da.on_module = cat(place_all(s->M, a->descent->on_module, false), place_all(s->M, b->descent->on_module, true));
    da.on_fil = cat(place_all(s->Fil, a->descent->on_fil, false), place_all(s->Fil, b->descent->on_fil, true));
    s->descent = da;
  }
  s->construction = cat(a->construction, b->construction);
  s->finalize();
  return s;
}

Object without_extras(const Object& a, bool keep_N) {
  auto s = std::make_shared<BreuilModule>(*a);
  s->coeff.reset();
  s->descent.reset();
  if (!keep_N) {
    s->has_N = false;
    s->N.clear();
    s->N_fil.clear();
  }
  return s;
}

CoefficientAction rebase_coefficients(const BreuilModule& obj, Fq gamma2) {
  const auto& F = *obj.params.k;
  const auto& ca = *obj.coeff;
  if (F.degree_of(gamma2) > ca.h || F.frob_pow(gamma2, ca.h) != gamma2)
    throw ParameterError("new generator is not in the coefficient field");
  // gamma2 = sum_{i<h} c_i gamma^i over F_p, solved on F_p digits.
  auto Fp = FiniteField::prime(F.p());
  Matrix A(ca.h, F.f());
  Fq pw = 1;
  for (int i = 0; i < ca.h; ++i, pw = F.mul(pw, ca.gamma))
    for (int s = 0; s < F.f(); ++s) A.at(i, s) = F.digit(pw, s);
  Vec y(F.f());
  for (int s = 0; s < F.f(); ++s) y[s] = F.digit(gamma2, s);
  auto sol = solve_linear(*Fp, transpose(A), y);
  if (!sol.particular) throw ParameterError("generator not expressible in the coefficient field");
  const Vec& c = *sol.particular;
  auto poly = [&](const ChainModule& m, const std::vector<Elem>& img) {
    std::vector<Elem> out;
    for (int i = 0; i < m.rank(); ++i) {
      Elem x = m.gen(i), acc = m.zero();
      for (int d = 0; d < ca.h; ++d) {
        m.axpy(acc, c[d], x);
        x = apply_linear(m, m, img, x);
      }
      out.push_back(acc);
    }
    return out;
  };
  CoefficientAction out;
  out.h = ca.h;
  out.gamma = gamma2;
  out.on_module = poly(obj.M, ca.on_module);
  out.on_fil = poly(obj.Fil, ca.on_fil);
  return out;
}

namespace {

bool stable(const Submodule& s, const std::function<Elem(const Elem&)>& op) {
  for (const auto& x : s.basis())
    if (!s.contains(op(x))) return false;
  return true;
}

}  // namespace

Induced induced_subobject(const Object& obj, const Submodule& G, const Submodule& F) {
  const auto& o = *obj;
  auto qG = decompose(G);
  auto qF = decompose(F);
  auto sub = std::make_shared<BreuilModule>();
  sub->params = o.params;
  sub->M = qG.module;
  sub->Fil = qF.module;
  for (const auto& h : qF.lifts) {
    Elem i = o.iota_of(h), p = o.phi_of(h);
    if (!G.contains(i) || !G.contains(p)) throw BreuilError("submodule pair is not stable under iota and phi");
    sub->iota.push_back(qG.project(i));
    sub->phi.push_back(qG.project(p));
  }
  sub->has_N = o.has_N;
  if (o.has_N) {
    for (const auto& g : qG.lifts) {
      Elem y = o.N_of(g);
      if (!G.contains(y)) throw BreuilError("submodule is not stable under N");
      sub->N.push_back(qG.project(y));
    }
    for (const auto& h : qF.lifts) {
      Elem y = o.N_fil_of(h);
      if (!F.contains(y)) throw BreuilError("Fil submodule is not stable under N_fil");
      sub->N_fil.push_back(qF.project(y));
    }
  }
  if (o.coeff && stable(G, [&](const Elem& x) { return o.nu_of(x); }) &&
      stable(F, [&](const Elem& x) { return o.nu_fil_of(x); })) {
    CoefficientAction ca{o.coeff->h, o.coeff->gamma, {}, {}};
    for (const auto& g : qG.lifts) ca.on_module.push_back(qG.project(o.nu_of(g)));
    for (const auto& h : qF.lifts) ca.on_fil.push_back(qF.project(o.nu_fil_of(h)));
    sub->coeff = ca;
  }
  if (o.descent && stable(G, [&](const Elem& x) { return o.sigma_of(x); }) &&
      stable(F, [&](const Elem& x) { return o.sigma_fil_of(x); })) {
    DescentAction da{o.descent->n, o.descent->omega, {}, {}};
    for (const auto& g : qG.lifts) da.on_module.push_back(qG.project(o.sigma_of(g)));
    for (const auto& h : qF.lifts) da.on_fil.push_back(qF.project(o.sigma_fil_of(h)));
    sub->descent = da;
  }
  sub->finalize();
  Induced out;
  out.object = sub;
  out.map = Morphism{sub, obj, qG.lifts, qF.lifts};
  return out;
}

Induced quotient_object(const Object& obj, const Submodule& Q, const Submodule& K) {
  const auto& o = *obj;
  auto qM = decompose(Submodule::full(o.M), Q);
  auto qF = decompose(Submodule::full(o.Fil), K);
  for (const auto& x : K.basis())
    if (!Q.contains(o.iota_of(x)) || !Q.contains(o.phi_of(x)))
      throw BreuilError("quotient data: iota(K) and phi(K) must lie in Q");
  auto quo = std::make_shared<BreuilModule>();
  quo->params = o.params;
  quo->M = qM.module;
  quo->Fil = qF.module;
  for (const auto& h : qF.lifts) {
    quo->iota.push_back(qM.project(o.iota_of(h)));
    quo->phi.push_back(qM.project(o.phi_of(h)));
  }
  quo->has_N = o.has_N;
  if (o.has_N) {
    if (!stable(Q, [&](const Elem& x) { return o.N_of(x); }) ||
        !stable(K, [&](const Elem& x) { return o.N_fil_of(x); }))
      throw BreuilError("quotient data not stable under N");
    for (const auto& g : qM.lifts) quo->N.push_back(qM.project(o.N_of(g)));
    for (const auto& h : qF.lifts) quo->N_fil.push_back(qF.project(o.N_fil_of(h)));
  }
  if (o.coeff && stable(Q, [&](const Elem& x) { return o.nu_of(x); }) &&
      stable(K, [&](const Elem& x) { return o.nu_fil_of(x); })) {
    CoefficientAction ca{o.coeff->h, o.coeff->gamma, {}, {}};
    for (const auto& g : qM.lifts) ca.on_module.push_back(qM.project(o.nu_of(g)));
    for (const auto& h : qF.lifts) ca.on_fil.push_back(qF.project(o.nu_fil_of(h)));
    quo->coeff = ca;
  }
  if (o.descent && stable(Q, [&](const Elem& x) { return o.sigma_of(x); }) &&
      stable(K, [&](const Elem& x) { return o.sigma_fil_of(x); })) {
    DescentAction da{o.descent->n, o.descent->omega, {}, {}};
    for (const auto& g : qM.lifts) da.on_module.push_back(qM.project(o.sigma_of(g)));
    for (const auto& h : qF.lifts) da.on_fil.push_back(qF.project(o.sigma_fil_of(h)));
    quo->descent = da;
  }
  quo->finalize();
  Morphism pr{obj, quo, {}, {}};
  for (int i = 0; i < o.M.rank(); ++i) pr.f.push_back(qM.project(o.M.gen(i)));
  for (int j = 0; j < o.Fil.rank(); ++j) pr.f_fil.push_back(qF.project(o.Fil.gen(j)));
  return {quo, pr};
}

}  // namespace breuil
