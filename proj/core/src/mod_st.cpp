#include "breuil/mod_st.hpp"

#include "breuil/errors.hpp"

namespace breuil {

namespace {

// 1 (x) sum_l t_l h_l = sum_l phi(t_l mod u^e) eps_l, for x = sum_l t_l h_l
// in the chain coordinates of Fil.
Elem tensor_one(const ChainModule& Fil, const ChainModule& E, int e, const Elem& x) {
  const auto& F = *Fil.field();
  const int p = static_cast<int>(F.p());
  Elem out = E.zero();
  for (int l = 0; l < Fil.rank(); ++l)
    for (int t = 0; t < e; ++t) {
      const Fq c = x[Fil.offset(l) + t];
      if (c != 0 && p * t < E.order(l)) out[E.offset(l) + p * t] = F.frob(c);
    }
  return out;
}

}  // namespace

ModSt mod_st(const Object& obj) {
  const auto& o = *obj;
  if (!o.is_filtered()) throw ParameterError("mod_st needs an injective iota");
  const auto& P = o.params;
  const int e = P.e, N = P.N(), m = o.Fil.rank();
  for (int j = 0; j < m; ++j)
    if (o.Fil.order(j) < e)
      throw NotReduced("Fil/u^e Fil is not free over k[u]/u^e (generator h" + std::to_string(j) + " has order " +
                       std::to_string(o.Fil.order(j)) + ")");

  ChainModule E(P.k, N, std::vector<int>(m, N));
  // pr(eps_j) = phi(h_j)
  Submodule fil = preimage(E, o.phi, o.fil_image());
  const TruncatedRing R = P.ring();
  const RingElement cinv = R.inverse(P.c);

  auto phi_new = [&](const Elem& x) {
    auto h = o.iota_preimage(apply_linear(E, o.M, o.phi, x));
    if (!h) throw BreuilError("pr(Fil) is not in Fil");
    return tensor_one(o.Fil, E, e, *h);
  };

  FreeSpec spec;
  spec.rank = m;
  spec.fil_gens = fil.generators();
  for (const auto& x : spec.fil_gens) spec.phi_values.push_back(phi_new(x));
  if (o.has_N) {
    std::vector<Elem> Nv;
    for (int j = 0; j < m; ++j) Nv.push_back(E.mul_ring(cinv, tensor_one(o.Fil, E, e, o.N_fil[j])));
    spec.N_values = Nv;
  }
  if (o.coeff) {
    CoeffSpec cs;
    cs.h = o.coeff->h;
    cs.gamma = o.coeff->gamma;
    for (int j = 0; j < m; ++j) cs.on_module.push_back(tensor_one(o.Fil, E, e, o.coeff->on_fil[j]));
    spec.coeff = cs;
  }
  ModSt out;
  out.object = make_free(P, spec);
  auto pr = from_module_map(out.object, obj, o.phi);
  if (!pr) throw BreuilError("projection does not preserve Fil");
  out.pr = *pr;
  return out;
}

}  // namespace breuil
