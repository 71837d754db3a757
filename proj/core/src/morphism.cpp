#include "breuil/morphism.hpp"

#include "breuil/errors.hpp"

namespace breuil {

namespace {

std::string gen_name(const char* g, int i) { return std::string(g) + std::to_string(i); }

}  // namespace

ValidationReport validate_morphism(const Morphism& m) {
  ValidationReport rep;
  const auto& A = *m.source;
  const auto& B = *m.target;
  if (!(A.params == B.params)) throw ParameterError("morphism between objects over different rings");
  if (m.f.size() != static_cast<std::size_t>(A.M.rank()) || m.f_fil.size() != static_cast<std::size_t>(A.Fil.rank()))
    throw ShapeError("morphism image count does not match the source generators");

  std::string w;
  for (int i = 0; i < A.M.rank() && w.empty(); ++i)
    if (!B.M.killed_by_u_pow(m.f[i], A.M.order(i))) w = gen_name("g", i);
  for (int j = 0; j < A.Fil.rank() && w.empty(); ++j)
    if (!B.Fil.killed_by_u_pow(m.f_fil[j], A.Fil.order(j))) w = gen_name("h", j);
  rep.add("well_defined", w.empty(), w);

  auto fM = [&](const Elem& x) { return apply_linear(A.M, B.M, m.f, x); };
  auto fF = [&](const Elem& x) { return apply_linear(A.Fil, B.Fil, m.f_fil, x); };

  std::string wi, wp, wn;
  for (int j = 0; j < A.Fil.rank(); ++j) {
    if (wi.empty() && B.iota_of(m.f_fil[j]) != fM(A.iota[j])) wi = gen_name("h", j);
    if (wp.empty() && B.phi_of(m.f_fil[j]) != fM(A.phi[j]))
      wp = "phi'(f_fil h" + std::to_string(j) + ") = " + format_elem(B.M, B.phi_of(m.f_fil[j])) +
           " but f(phi h" + std::to_string(j) + ") = " + format_elem(B.M, fM(A.phi[j]));
  }
  rep.add("iota_compat", wi.empty(), wi);
  rep.add("phi_compat", wp.empty(), wp);
  if (A.has_N && B.has_N) {
    for (int i = 0; i < A.M.rank() && wn.empty(); ++i)
      if (B.N_of(m.f[i]) != fM(A.N[i])) wn = gen_name("g", i);
    for (int j = 0; j < A.Fil.rank() && wn.empty(); ++j)
      if (B.N_fil_of(m.f_fil[j]) != fF(A.N_fil[j])) wn = gen_name("h", j);
    rep.add("N_compat", wn.empty(), wn);
  }
  if (A.coeff && B.coeff) {
    CoefficientAction cb = B.coeff->gamma == A.coeff->gamma ? *B.coeff : rebase_coefficients(B, A.coeff->gamma);
    std::string wc;
    for (int i = 0; i < A.M.rank() && wc.empty(); ++i)
      if (apply_linear(B.M, B.M, cb.on_module, m.f[i]) != fM(A.coeff->on_module[i])) wc = gen_name("g", i);
    for (int j = 0; j < A.Fil.rank() && wc.empty(); ++j)
      if (apply_linear(B.Fil, B.Fil, cb.on_fil, m.f_fil[j]) != fF(A.coeff->on_fil[j])) wc = gen_name("h", j);
    rep.add("coeff_compat", wc.empty(), wc);
  }
  if (A.descent && B.descent) {
    std::string wd;
    for (int i = 0; i < A.M.rank() && wd.empty(); ++i)
      if (B.sigma_of(m.f[i]) != fM(A.descent->on_module[i])) wd = gen_name("g", i);
    for (int j = 0; j < A.Fil.rank() && wd.empty(); ++j)
      if (B.sigma_fil_of(m.f_fil[j]) != fF(A.descent->on_fil[j])) wd = gen_name("h", j);
    rep.add("descent_compat", wd.empty(), wd);
  }
  return rep;
}

Morphism identity(const Object& a) {
  Morphism m{a, a, {}, {}};
  for (int i = 0; i < a->M.rank(); ++i) m.f.push_back(a->M.gen(i));
  for (int j = 0; j < a->Fil.rank(); ++j) m.f_fil.push_back(a->Fil.gen(j));
  return m;
}

Morphism zero_morphism(const Object& a, const Object& b) {
  return Morphism{a, b, std::vector<Elem>(a->M.rank(), b->M.zero()), std::vector<Elem>(a->Fil.rank(), b->Fil.zero())};
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (f.target != g.source && !(f.target->M == g.source->M && f.target->Fil == g.source->Fil))
    throw ShapeError("composition of non-composable morphisms");
  const auto& A = *f.source;
  const auto& B = *f.target;
  const auto& C = *g.target;
  return Morphism{f.source, g.target, compose_images(A.M, B.M, C.M, f.f, g.f),
                  compose_images(A.Fil, B.Fil, C.Fil, f.f_fil, g.f_fil)};
}

Morphism add(const Morphism& a, const Morphism& b) {
  Morphism m = a;
  for (std::size_t i = 0; i < m.f.size(); ++i) m.f[i] = a.target->M.add(a.f[i], b.f[i]);
  for (std::size_t j = 0; j < m.f_fil.size(); ++j) m.f_fil[j] = a.target->Fil.add(a.f_fil[j], b.f_fil[j]);
  return m;
}

Morphism scale(Fq c, const Morphism& a) {
  Morphism m = a;
  for (auto& x : m.f) x = a.target->M.scale(c, x);
  for (auto& x : m.f_fil) x = a.target->Fil.scale(c, x);
  return m;
}

bool operator==(const Morphism& a, const Morphism& b) { return a.f == b.f && a.f_fil == b.f_fil; }

std::optional<Morphism> from_module_map(const Object& source, const Object& target, std::vector<Elem> f) {
  if (!target->is_filtered()) throw BreuilError("Fil component is only determined for filtered targets");
  Morphism m{source, target, std::move(f), {}};
  for (int j = 0; j < source->Fil.rank(); ++j) {
    auto y = target->iota_preimage(apply_linear(source->M, target->M, m.f, source->iota[j]));
    if (!y) return std::nullopt;
    m.f_fil.push_back(*y);
  }
  return m;
}

namespace {

// f mod u as a k-matrix between the tops M/uM and M'/uM'.
bool bijective_map(const ChainModule& A, const ChainModule& B, const std::vector<Elem>& f) {
  if (A.sorted_orders() != B.sorted_orders()) return false;
  const int n = A.rank();
  if (n == 0) return true;
  Matrix top(n, n);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) top.at(i, l) = f[i][B.offset(l)];
  return rank(*A.field(), top) == n;
}

}  // namespace

bool is_isomorphism(const Morphism& m) {
  return bijective_map(m.source->M, m.target->M, m.f) && bijective_map(m.source->Fil, m.target->Fil, m.f_fil);
}

std::optional<Morphism> inverse(const Morphism& m) {
  if (!is_isomorphism(m)) return std::nullopt;
  const auto& A = *m.source;
  const auto& B = *m.target;
  auto inv_images = [](const ChainModule& X, const ChainModule& Y, const std::vector<Elem>& f) {
    auto mi = inverse(*X.field(), linear_matrix(X, Y, f));
    return images_from_matrix(Y, *mi);
  };
  return Morphism{m.target, m.source, inv_images(A.M, B.M, m.f), inv_images(A.Fil, B.Fil, m.f_fil)};
}

SumMaps direct_sum_maps(const Object& a, const Object& b) {
  SumMaps s;
  s.sum = direct_sum(a, b);
  const auto& S = *s.sum;
  auto shifted = [](const ChainModule& sum, const ChainModule& part, bool second) {
    std::vector<Elem> out;
    for (int i = 0; i < part.rank(); ++i) {
      Elem y = sum.zero();
      y[(second ? sum.length() - part.length() : 0) + part.offset(i)] = 1;
      out.push_back(y);
    }
    return out;
  };
  auto restricted = [](const ChainModule& sum, const ChainModule& part, bool second) {
    std::vector<Elem> out;
    const int base = second ? sum.rank() - part.rank() : 0;
    for (int i = 0; i < sum.rank(); ++i) {
      Elem y = part.zero();
      const int local = i - base;
      if (local >= 0 && local < part.rank()) y[part.offset(local)] = 1;
      out.push_back(y);
    }
    return out;
  };
  s.in_a = Morphism{a, s.sum, shifted(S.M, a->M, false), shifted(S.Fil, a->Fil, false)};
  s.in_b = Morphism{b, s.sum, shifted(S.M, b->M, true), shifted(S.Fil, b->Fil, true)};
  s.pr_a = Morphism{s.sum, a, restricted(S.M, a->M, false), restricted(S.Fil, a->Fil, false)};
  s.pr_b = Morphism{s.sum, b, restricted(S.M, b->M, true), restricted(S.Fil, b->Fil, true)};
  return s;
}

}  // namespace breuil
