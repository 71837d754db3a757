#include "breuil/duality.hpp"

#include "breuil/errors.hpp"

namespace breuil {

namespace {

// Functional sum_l coord_i(img_l) e_l^vee in the dual of `out`, i.e. the i-th
// row of the matrix whose columns are img (which live in `in`).
Elem transposed(const ChainModule& in, const ChainModule& out_module, const std::vector<Elem>& img, int i,
                const TruncatedRing& R, bool negate = false) {
  const ChainModule& M = out_module;
  Elem out = M.zero();
  for (int l = 0; l < M.rank(); ++l) {
    RingElement c = in.coordinate(img[l], i);
    if (negate) c = R.neg(c);
    for (int t = 0; t < M.order(l); ++t) out[M.offset(l) + t] = c[t];
  }
  return out;
}

// f(x) for a functional f on a free module.
RingElement evaluate(const ChainModule& M, const TruncatedRing& R, const Elem& f, const Elem& x) {
  RingElement s = R.zero();
  for (int i = 0; i < M.rank(); ++i) s = R.add(s, R.mul(M.coordinate(f, i), M.coordinate(x, i)));
  return s;
}

}  // namespace

Object dualize(const Object& obj) {
  const auto& o = *obj;
  if (!o.M.is_free() || !o.is_filtered() || !o.is_generated())
    throw ParameterError("duality needs a free, filtered and generated object");
  const auto& P = o.params;
  const int N = P.N(), er = P.er(), d = o.M.rank(), m = o.Fil.rank();
  const TruncatedRing R = P.ring();
  const ChainModule& Mv = o.M;  // same shape

  // Fil* as the kernel of f -> (f(iota h_j) mod u^{er})_j.
  ChainModule T(P.k, N, std::vector<int>(m, er));
  std::vector<Elem> cond;
  for (int i = 0; i < d; ++i) {
    Elem y = T.zero();
    for (int j = 0; j < m; ++j) {
      RingElement c = o.M.coordinate(o.iota[j], i);
      for (int t = 0; t < er; ++t) y[T.offset(j) + t] = c[t];
    }
    cond.push_back(y);
  }
  Submodule fil = kernel(Mv, T, cond);

  // Functionals are pinned down by their values on the phi(h_j), which
  // generate M.
  ChainModule V(P.k, N, std::vector<int>(m, N));
  std::vector<Elem> on_phi;
  for (int i = 0; i < d; ++i) {
    Elem y = V.zero();
    for (int j = 0; j < m; ++j) {
      RingElement c = o.M.coordinate(o.phi[j], i);
      for (int t = 0; t < N; ++t) y[V.offset(j) + t] = c[t];
    }
    on_phi.push_back(y);
  }
  RowSolver solver(P.k, linear_matrix(Mv, V, on_phi));
  const RingElement cr = R.pow(P.c, P.r);

  FreeSpec spec;
  spec.rank = d;
  spec.fil_gens = fil.generators();
  for (const auto& g : spec.fil_gens) {
    Elem w = V.zero();
    for (int j = 0; j < m; ++j) {
      RingElement v = evaluate(o.M, R, g, o.iota[j]);
      RingElement s = R.zero();
      for (int t = er; t < N; ++t) s[t - er] = v[t];
      RingElement img = R.mul(cr, R.frobenius(s));
      for (int t = 0; t < N; ++t) w[V.offset(j) + t] = img[t];
    }
    auto x = solver.solve(w);
    if (!x) throw BreuilError("dual Frobenius is not defined on a Fil* generator");
    spec.phi_values.push_back(*x);
  }
  if (o.has_N) {
    std::vector<Elem> Nv;
    for (int i = 0; i < d; ++i) Nv.push_back(transposed(o.M, o.M, o.N, i, R, true));
    spec.N_values = Nv;
  }
  if (o.coeff) {
    CoeffSpec cs;
    cs.h = o.coeff->h;
    cs.gamma = o.coeff->gamma;
    for (int i = 0; i < d; ++i) cs.on_module.push_back(transposed(o.M, o.M, o.coeff->on_module, i, R));
    spec.coeff = cs;
  }
  if (o.descent) {
    // (A* f)(x) = sigma(f(A^{-1} x)) with A^{-1} = A^{n-1}.
    const auto& F = *P.k;
    std::vector<Elem> inv;
    for (int i = 0; i < d; ++i) {
      Elem x = o.M.gen(i);
      for (int s = 1; s < o.descent->n; ++s) x = o.sigma_of(x);
      inv.push_back(x);
    }
    DescentSpec ds;
    ds.n = o.descent->n;
    ds.omega = o.descent->omega;
    for (int l = 0; l < d; ++l) {
      Elem y = Mv.zero();
      for (int i = 0; i < d; ++i) {
        RingElement c = o.M.coordinate(inv[i], l);
        Fq w = 1;
        for (int t = 0; t < N; ++t, w = F.mul(w, ds.omega)) y[Mv.offset(i) + t] = F.mul(c[t], w);
      }
      ds.on_module.push_back(y);
    }
    spec.descent = ds;
  }
  return make_free(P, spec);
}

Morphism dualize(const Morphism& m, const Object& source_dual, const Object& target_dual) {
  const auto& A = *m.source;
  const TruncatedRing R = A.params.ring();
  std::vector<Elem> img;
  for (int l = 0; l < m.target->M.rank(); ++l) img.push_back(transposed(m.target->M, A.M, m.f, l, R));
  auto out = from_module_map(target_dual, source_dual, img);
  if (!out) throw BreuilError("dual map does not preserve Fil*");
  return *out;
}

Morphism dualize(const Morphism& m) { return dualize(m, dualize(m.source), dualize(m.target)); }

Morphism bidual_map(const Object& obj, const Object& bidual) {
  std::vector<Elem> img;
  for (int i = 0; i < obj->M.rank(); ++i) img.push_back(bidual->M.gen(i));
  auto out = from_module_map(obj, bidual, img);
  if (!out) throw BreuilError("evaluation map does not preserve Fil");
  return *out;
}

}  // namespace breuil
