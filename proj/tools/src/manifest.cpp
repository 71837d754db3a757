#include "breuil_tools/manifest.hpp"

#include "breuil/errors.hpp"
#include "breuil/morphism.hpp"

namespace breuil::manifest {

namespace {

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ManifestError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ManifestError(at(where, key), "missing field");
  return *it;
}

long long integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ManifestError(where, "expected an integer");
  return j.get<long long>();
}

const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) throw ManifestError(where, "expected a list");
  return j;
}

std::vector<int> int_list(const json& j, const std::string& where) {
  std::vector<int> out;
  for (std::size_t i = 0; i < array(j, where).size(); ++i) out.push_back(static_cast<int>(integer(j[i], at(where, i))));
  return out;
}

std::vector<Elem> parse_elements(const ChainModule& M, const json& j, const std::string& where) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < array(j, where).size(); ++i) out.push_back(parse_element(M, j[i], at(where, i)));
  return out;
}

void expect_count(const std::vector<Elem>& xs, std::size_t n, const std::string& where) {
  if (xs.size() != n)
    throw ManifestError(where, "expected " + std::to_string(n) + " entries, got " + std::to_string(xs.size()));
}

std::optional<CoeffSpec> parse_coeff(const json& j, const ChainModule& M, const ChainModule* Fil,
                                     const FiniteField& F, const std::string& where) {
  auto it = j.find("coeff");
  if (it == j.end()) return std::nullopt;
  const std::string w = at(where, "coeff");
  CoeffSpec cs;
  cs.h = static_cast<int>(integer(field(*it, "h", w), at(w, "h")));
  if (it->contains("gamma")) cs.gamma = parse_field_element(F, (*it)["gamma"], at(w, "gamma"));
  cs.on_module = parse_elements(M, field(*it, "on_module", w), at(w, "on_module"));
  expect_count(cs.on_module, M.rank(), at(w, "on_module"));
  if (it->contains("on_fil")) {
    if (!Fil) throw ManifestError(at(w, "on_fil"), "only allowed for kind uni");
    cs.on_fil = parse_elements(*Fil, (*it)["on_fil"], at(w, "on_fil"));
    expect_count(*cs.on_fil, Fil->rank(), at(w, "on_fil"));
  }
  return cs;
}

std::optional<DescentSpec> parse_descent(const json& j, const ChainModule& M, const ChainModule* Fil,
                                         const FiniteField& F, const std::string& where) {
  auto it = j.find("descent");
  if (it == j.end()) return std::nullopt;
  const std::string w = at(where, "descent");
  DescentSpec ds;
  ds.n = static_cast<int>(integer(field(*it, "n", w), at(w, "n")));
  ds.omega = parse_field_element(F, field(*it, "omega", w), at(w, "omega"));
  ds.on_module = parse_elements(M, field(*it, "on_module", w), at(w, "on_module"));
  expect_count(ds.on_module, M.rank(), at(w, "on_module"));
  if (it->contains("on_fil")) {
    if (!Fil) throw ManifestError(at(w, "on_fil"), "only allowed for kind uni");
    ds.on_fil = parse_elements(*Fil, (*it)["on_fil"], at(w, "on_fil"));
    expect_count(*ds.on_fil, Fil->rank(), at(w, "on_fil"));
  }
  return ds;
}

// Library errors raised while building an entity are reported at its path.
template <class F>
auto located(const std::string& where, F f) {
  try {
    return f();
  } catch (const ManifestError&) {
    throw;
  } catch (const BreuilError& e) {
    throw ManifestError(where, e.what());
  }
}

}  // namespace

json field_element(const FiniteField& F, Fq a) {
  if (F.f() == 1) return F.digit(a, 0);
  json d = json::array();
  for (int s = 0; s < F.f(); ++s) d.push_back(F.digit(a, s));
  return d;
}

json element(const ChainModule& M, const Elem& x) {
  const auto& F = *M.field();
  json out = json::array();
  for (int i = 0; i < M.rank(); ++i) {
    int len = M.order(i);
    while (len > 0 && x[M.offset(i) + len - 1] == 0) --len;
    json c = json::array();
    for (int s = 0; s < len; ++s) c.push_back(field_element(F, x[M.offset(i) + s]));
    out.push_back(c);
  }
  return out;
}

json elements(const ChainModule& M, const std::vector<Elem>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(element(M, x));
  return out;
}

json ring(const RingParams& P) {
  ChainModule R(P.k, P.N(), {P.N()});
  return {{"p", P.p()},     {"f", P.k->f()}, {"modulus", P.k->modulus()},
          {"e", P.e},       {"r", P.r},      {"c", element(R, P.c)[0]}};
}

json object(const BreuilModule& o) {
  json j{{"kind", "uni"},
         {"M_orders", o.M.orders()},
         {"Fil_orders", o.Fil.orders()},
         {"iota", elements(o.M, o.iota)},
         {"phi", elements(o.M, o.phi)}};
  if (o.has_N) {
    j["N"] = elements(o.M, o.N);
    j["N_fil"] = elements(o.Fil, o.N_fil);
  }
  const auto& F = *o.params.k;
  if (o.coeff)
    j["coeff"] = {{"h", o.coeff->h},
                  {"gamma", field_element(F, o.coeff->gamma)},
                  {"on_module", elements(o.M, o.coeff->on_module)},
                  {"on_fil", elements(o.Fil, o.coeff->on_fil)}};
  if (o.descent)
    j["descent"] = {{"n", o.descent->n},
                    {"omega", field_element(F, o.descent->omega)},
                    {"on_module", elements(o.M, o.descent->on_module)},
                    {"on_fil", elements(o.Fil, o.descent->on_fil)}};
  return j;
}

json morphism(const Morphism& m, const std::string& source, const std::string& target) {
  return {{"source", source},
          {"target", target},
          {"matrix", elements(m.target->M, m.f)},
          {"fil_matrix", elements(m.target->Fil, m.f_fil)}};
}

json report(const ValidationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cj{{"name", c.name}, {"passed", c.passed}};
    if (!c.witness.empty()) cj["witness"] = c.witness;
    checks.push_back(cj);
  }
  return {{"ok", r.ok()}, {"checks", checks}, {"predicates", r.predicates}};
}

json substructure(const Substructure& s) {
  return {{"module", elements(s.module.ambient(), s.module.generators())},
          {"fil", elements(s.fil.ambient(), s.fil.generators())},
          {"module_length", s.module.length()},
          {"fil_length", s.fil.length()}};
}

json summary(const BreuilModule& o) {
  return {{"rank", o.M.rank()},
          {"M_orders", o.M.orders()},
          {"Fil_orders", o.Fil.orders()},
          {"fp_length", o.M.fp_dim()}};
}

json character(const TameCharacter& c) { return {{"level", c.level}, {"orbit", c.orbit}}; }

Fq parse_field_element(const FiniteField& F, const json& j, const std::string& where) {
  if (j.is_number_integer()) return F.from_int(j.get<long long>());
  std::vector<std::uint32_t> d(F.f(), 0);
  const auto& a = array(j, where);
  if (a.size() > static_cast<std::size_t>(F.f())) throw ManifestError(where, "more digits than the field degree");
  for (std::size_t s = 0; s < a.size(); ++s) {
    long long v = integer(a[s], at(where, s));
    if (v < 0 || v >= static_cast<long long>(F.p())) throw ManifestError(at(where, s), "digit out of range");
    d[s] = static_cast<std::uint32_t>(v);
  }
  return F.from_digits(d.data());
}

Elem parse_element(const ChainModule& M, const json& j, const std::string& where) {
  const auto& a = array(j, where);
  if (a.size() != static_cast<std::size_t>(M.rank()))
    throw ManifestError(where, "expected " + std::to_string(M.rank()) + " generator blocks");
  Elem x = M.zero();
  for (int i = 0; i < M.rank(); ++i) {
    const std::string w = at(where, static_cast<std::size_t>(i));
    const auto& c = array(a[i], w);
    if (c.size() > static_cast<std::size_t>(M.order(i)))
      throw ManifestError(w, "more coefficients than the chain order " + std::to_string(M.order(i)));
    for (std::size_t s = 0; s < c.size(); ++s) x[M.offset(i) + s] = parse_field_element(*M.field(), c[s], at(w, s));
  }
  return x;
}

RingParams parse_ring(const json& j, const std::string& where) {
  auto p = integer(field(j, "p", where), at(where, "p"));
  auto f = j.contains("f") ? integer(j["f"], at(where, "f")) : 1;
  auto e = integer(field(j, "e", where), at(where, "e"));
  auto r = integer(field(j, "r", where), at(where, "r"));
  if (p < 2 || p > 1000 || f < 1 || f > 16) throw ManifestError(where, "unsupported field size");
  std::vector<std::uint32_t> modulus;
  if (j.contains("modulus"))
    for (int v : int_list(j["modulus"], at(where, "modulus"))) modulus.push_back(static_cast<std::uint32_t>(v));
  Field k = located(where, [&] { return FiniteField::make(static_cast<std::uint32_t>(p), static_cast<int>(f), modulus); });
  std::optional<RingElement> c;
  if (j.contains("c")) {
    ChainModule R(k, static_cast<int>(e * p), {static_cast<int>(e * p)});
    c = parse_element(R, json::array({j["c"]}), at(where, "c"));
  }
  return located(where, [&] { return RingParams::make(k, static_cast<int>(e), static_cast<int>(r), c); });
}

Object parse_object(const RingParams& P, const json& j, const std::string& where) {
  const auto& F = *P.k;
  const std::string kind = field(j, "kind", where).is_string() ? j["kind"].get<std::string>() : "";
  if (kind == "free") {
    const int d = static_cast<int>(integer(field(j, "rank", where), at(where, "rank")));
    if (d < 0) throw ManifestError(at(where, "rank"), "negative rank");
    ChainModule M(P.k, P.N(), std::vector<int>(d, P.N()));
    FreeSpec s;
    s.rank = d;
    s.fil_gens = parse_elements(M, field(j, "fil", where), at(where, "fil"));
    s.phi_values = parse_elements(M, field(j, "phi", where), at(where, "phi"));
    expect_count(s.phi_values, s.fil_gens.size(), at(where, "phi"));
    if (j.contains("N")) {
      s.N_values = parse_elements(M, j["N"], at(where, "N"));
      expect_count(*s.N_values, d, at(where, "N"));
    }
    s.coeff = parse_coeff(j, M, nullptr, F, where);
    s.descent = parse_descent(j, M, nullptr, F, where);
    return located(where, [&] { return make_free(P, s); });
  }
  if (kind == "uni") {
    UniSpec u;
    u.M_orders = int_list(field(j, "M_orders", where), at(where, "M_orders"));
    u.Fil_orders = int_list(field(j, "Fil_orders", where), at(where, "Fil_orders"));
    for (int o : u.M_orders)
      if (o < 0 || o > P.N()) throw ManifestError(at(where, "M_orders"), "chain order out of range");
    for (int o : u.Fil_orders)
      if (o < 0 || o > P.N()) throw ManifestError(at(where, "Fil_orders"), "chain order out of range");
    ChainModule M(P.k, P.N(), u.M_orders), Fil(P.k, P.N(), u.Fil_orders);
    u.iota = parse_elements(M, field(j, "iota", where), at(where, "iota"));
    expect_count(u.iota, Fil.rank(), at(where, "iota"));
    u.phi = parse_elements(M, field(j, "phi", where), at(where, "phi"));
    expect_count(u.phi, Fil.rank(), at(where, "phi"));
    if (j.contains("N")) {
      u.N = parse_elements(M, j["N"], at(where, "N"));
      expect_count(*u.N, M.rank(), at(where, "N"));
    }
    if (j.contains("N_fil")) {
      u.N_fil = parse_elements(Fil, j["N_fil"], at(where, "N_fil"));
      expect_count(*u.N_fil, Fil.rank(), at(where, "N_fil"));
    }
    u.coeff = parse_coeff(j, M, &Fil, F, where);
    u.descent = parse_descent(j, M, &Fil, F, where);
    return located(where, [&] { return make_uni(P, u); });
  }
  throw ManifestError(at(where, "kind"), "expected \"free\" or \"uni\"");
}

Manifest parse(const json& j) {
  if (!j.is_object()) throw ManifestError("", "manifest must be a JSON object");
  Manifest m;
  m.params = parse_ring(field(j, "ring", ""), "/ring");
  if (j.contains("objects"))
    for (const auto& [name, oj] : j["objects"].items()) m.objects[name] = parse_object(m.params, oj, "/objects/" + name);
  auto lookup = [&](const json& nj, const std::string& where) {
    if (!nj.is_string()) throw ManifestError(where, "expected an object name");
    auto it = m.objects.find(nj.get<std::string>());
    if (it == m.objects.end()) throw ManifestError(where, "unknown object " + nj.get<std::string>());
    return it->second;
  };
  if (j.contains("morphisms"))
    for (const auto& [name, mj] : j["morphisms"].items()) {
      const std::string w = "/morphisms/" + name;
      Object s = lookup(field(mj, "source", w), at(w, "source"));
      Object t = lookup(field(mj, "target", w), at(w, "target"));
      auto f = parse_elements(t->M, field(mj, "matrix", w), at(w, "matrix"));
      expect_count(f, s->M.rank(), at(w, "matrix"));
      if (mj.contains("fil_matrix")) {
        auto ff = parse_elements(t->Fil, mj["fil_matrix"], at(w, "fil_matrix"));
        expect_count(ff, s->Fil.rank(), at(w, "fil_matrix"));
        m.morphisms[name] = Morphism{s, t, f, ff};
      } else {
        auto mm = located(w, [&] { return from_module_map(s, t, f); });
        if (!mm) throw ManifestError(at(w, "matrix"), "map does not carry Fil into Fil; give fil_matrix");
        m.morphisms[name] = *mm;
      }
    }
  if (j.contains("substructures"))
    for (const auto& [name, sj] : j["substructures"].items()) {
      const std::string w = "/substructures/" + name;
      Object o = lookup(field(sj, "object", w), at(w, "object"));
      Substructure s{Submodule::span(o->M, parse_elements(o->M, field(sj, "module", w), at(w, "module"))),
                     Submodule::span(o->Fil, parse_elements(o->Fil, field(sj, "fil", w), at(w, "fil")))};
      m.substructures[name] = {sj["object"].get<std::string>(), s};
    }
  return m;
}

Manifest parse_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ManifestError("byte " + std::to_string(e.byte), e.what());
  }
  return parse(j);
}

json print(const Manifest& m) {
  json j{{"ring", ring(m.params)}};
  std::map<const BreuilModule*, std::string> names;
  for (const auto& [name, o] : m.objects) {
    j["objects"][name] = object(*o);
    names[o.get()] = name;
  }
  auto name_of = [&](const Object& o) {
    auto it = names.find(o.get());
    if (it == names.end()) throw std::logic_error("morphism endpoint missing from manifest");
    return it->second;
  };
  for (const auto& [name, mor] : m.morphisms) j["morphisms"][name] = morphism(mor, name_of(mor.source), name_of(mor.target));
  for (const auto& [name, sub] : m.substructures) {
    json sj = substructure(sub.second);
    sj["object"] = sub.first;
    j["substructures"][name] = sj;
  }
  return j;
}

}  // namespace breuil::manifest
