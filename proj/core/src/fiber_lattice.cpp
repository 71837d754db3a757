#include "breuil/fiber_lattice.hpp"

#include <set>

#include "breuil/errors.hpp"

namespace breuil {

namespace {

Submodule phi_span(const BreuilModule& a, const Submodule& F) {
  std::vector<Elem> imgs;
  for (const auto& x : F.generators()) imgs.push_back(a.phi_of(x));
  return Submodule::span(a.M, imgs);
}

Submodule iota_image(const BreuilModule& a, const Submodule& F) { return image(a.Fil, a.M, a.iota, F); }

void check_members(const std::vector<Substructure>& subs, const BreuilModule& ambient) {
  if (subs.empty()) throw ParameterError("empty family");
  for (const auto& s : subs) {
    auto rep = is_substructure(s, ambient);
    if (!rep.ok()) throw ParameterError("not a substructure: " + rep.failures().front());
    if (!rep.predicates.at("is_generated")) throw ParameterError("substructure is not generated");
  }
}

}  // namespace

Substructure whole(const BreuilModule& a) { return {Submodule::full(a.M), Submodule::full(a.Fil)}; }
Substructure nothing(const BreuilModule& a) { return {Submodule::zero(a.M), Submodule::zero(a.Fil)}; }

ValidationReport is_substructure(const Substructure& s, const BreuilModule& a) {
  if (!(s.module.ambient() == a.M) || !(s.fil.ambient() == a.Fil))
    throw ShapeError("substructure does not live in the ambient object");
  ValidationReport rep;
  const Submodule iF = iota_image(a, s.fil);
  rep.add("fil_in_module", s.module.contains(iF), "iota(Fil_c) not in c");
  rep.add("fil_contains_u_er", iF.contains(s.module.mul_u(a.params.er())), "u^er c not in iota(Fil_c)");
  const Submodule pF = phi_span(a, s.fil);
  rep.add("phi_stable", s.module.contains(pF), "phi(Fil_c) not in c");
  if (a.has_N) {
    bool ok = true;
    for (const auto& x : s.module.generators()) ok = ok && s.module.contains(a.N_of(x));
    for (const auto& x : s.fil.generators()) ok = ok && s.fil.contains(a.N_fil_of(x));
    rep.add("N_stable", ok, "N(c) not in c");
  }
  rep.predicates["is_generated"] = pF == s.module;
  return rep;
}

Substructure gen_within(const Substructure& s, const BreuilModule& a) {
  Substructure cur = s;
  while (true) {
    Submodule G = phi_span(a, cur.fil);
    Submodule F = cur.fil.intersect(preimage(a.Fil, a.iota, G));
    Substructure next{G, F};
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

Substructure fiber_sup(const std::vector<Substructure>& subs, const BreuilModule& a) {
  check_members(subs, a);
  Substructure out = subs.front();
  for (std::size_t i = 1; i < subs.size(); ++i) {
    out.module = out.module.sum(subs[i].module);
    out.fil = out.fil.sum(subs[i].fil);
  }
  return out;
}

Substructure fiber_inf(const std::vector<Substructure>& subs, const BreuilModule& a) {
  check_members(subs, a);
  Substructure out = subs.front();
  for (std::size_t i = 1; i < subs.size(); ++i) {
    out.module = out.module.intersect(subs[i].module);
    out.fil = out.fil.intersect(subs[i].fil);
  }
  return gen_within(out, a);
}

Induced realize(const Object& ambient, const Substructure& s) { return induced_subobject(ambient, s.module, s.fil); }

std::vector<Substructure> generated_substructures(const BreuilModule& a) {
  const auto& F = *a.params.k;
  const ChainModule& Fil = a.Fil;
  // All submodules of Fil: cyclic ones first, then sums, up to rank(Fil)
  // generators.
  std::set<Vec> seen;
  std::vector<Submodule> level, all;
  auto key = [](const Submodule& s) {
    Vec k = s.space().basis().a;
    k.push_back(static_cast<Fq>(s.length()));
    return k;
  };
  auto add = [&](Submodule s, std::vector<Submodule>& into) {
    if (seen.insert(key(s)).second) {
      into.push_back(s);
      all.push_back(std::move(s));
    }
  };
  add(Submodule::zero(Fil), level);
  std::uint64_t total = 1;
  for (int i = 0; i < Fil.length(); ++i) {
    total *= F.q();
    if (total > (1u << 22)) throw ParameterError("ambient too large for exhaustive enumeration");
  }
  std::vector<Submodule> cyclic;
  Elem x(Fil.length());
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::uint64_t v = idx;
    for (auto& c : x) {
      c = static_cast<Fq>(v % F.q());
      v /= F.q();
    }
    add(Submodule::span(Fil, {x}), cyclic);
  }
  level = cyclic;
  for (int g = 2; g <= Fil.rank(); ++g) {
    std::vector<Submodule> next;
    for (const auto& s : level)
      for (const auto& c : cyclic) add(s.sum(c), next);
    level = std::move(next);
  }

  std::vector<Substructure> out;
  for (const auto& Fc : all) {
    Substructure s{phi_span(a, Fc), Fc};
    auto rep = is_substructure(s, a);
    if (rep.ok() && rep.predicates.at("is_generated")) out.push_back(s);
  }
  return out;
}

}  // namespace breuil
