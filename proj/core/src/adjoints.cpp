#include "breuil/adjoints.hpp"

#include "breuil/errors.hpp"
#include "breuil/morphism.hpp"

namespace breuil {

Closure gen_closure(const Object& obj) {
  const auto& o = *obj;
  Submodule G = Submodule::full(o.M);
  Submodule F = Submodule::full(o.Fil);
  Closure out;
  while (true) {
    std::vector<Elem> imgs;
    for (const auto& x : F.generators()) imgs.push_back(o.phi_of(x));
    Submodule G2 = Submodule::span(o.M, imgs);
    Submodule F2 = preimage(o.Fil, o.iota, G2);
    if (!G.contains(G2)) throw BreuilError("Gen iteration is not decreasing");
    out.trace.push_back({decompose(G2).module.orders(), decompose(F2).module.orders(), G2.fp_dim()});
    const bool stationary = G2 == G && F2 == F;
    G = std::move(G2);
    F = std::move(F2);
    if (stationary) break;
  }
  auto ind = induced_subobject(obj, G, F);
  out.object = ind.object;
  out.map = ind.map;
  return out;
}

Closure fil_closure(const Object& obj) {
  Closure out;
  Object cur = obj;
  Morphism proj = identity(obj);
  while (true) {
    const auto& o = *cur;
    Submodule K = kernel(o.Fil, o.M, o.iota);
    std::vector<Elem> imgs;
    for (const auto& x : K.generators()) imgs.push_back(o.phi_of(x));
    Submodule Q = Submodule::span(o.M, imgs);
    if (K.is_zero()) {
      out.trace.push_back({o.M.orders(), o.Fil.orders(), o.M.fp_dim()});
      break;
    }
    auto q = quotient_object(cur, Q, K);
    proj = compose(q.map, proj);
    cur = q.object;
    out.trace.push_back({cur->M.orders(), cur->Fil.orders(), cur->M.fp_dim()});
  }
  out.object = cur;
  out.map = proj;
  return out;
}

}  // namespace breuil
