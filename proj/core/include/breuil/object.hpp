#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "breuil/chain_module.hpp"

namespace breuil {

// k = F_{p^f}, S = k[u]/u^{ep}, Hodge bound r and the unit c.
struct RingParams {
  Field k;
  int e = 1;
  int r = 1;
  RingElement c;

  // Checks 1 <= r <= p-2 and that c is a unit. c defaults to -1.
  static RingParams make(Field k, int e, int r, std::optional<RingElement> c = std::nullopt);

  int p() const { return static_cast<int>(k->p()); }
  int N() const { return e * p(); }
  int er() const { return e * r; }
  TruncatedRing ring() const { return TruncatedRing(k, N()); }
  bool operator==(const RingParams& o) const {
    return same_field(k, o.k) && e == o.e && r == o.r && c == o.c;
  }
};

struct Check {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct ValidationReport {
  std::vector<Check> checks;
  std::map<std::string, bool> predicates;

  void add(std::string name, bool passed, std::string witness = {});
  void merge(const ValidationReport& o, const std::string& prefix = {});
  bool ok() const;
  const Check* find(const std::string& name) const;
  std::vector<std::string> failures() const;
};

// nu(gamma) for a fixed generator gamma of E = F_{p^h} inside k, given on the
// generators of the module and of Fil.
struct CoefficientAction {
  int h = 1;
  Fq gamma = 1;
  std::vector<Elem> on_module;
  std::vector<Elem> on_fil;
};

// The generator of Gal(L/K) = Z/n, acting semilinearly over u -> omega u.
struct DescentAction {
  int n = 1;
  Fq omega = 1;
  std::vector<Elem> on_module;
  std::vector<Elem> on_fil;
};

// The general object: chain modules M and Fil, iota : Fil -> M, phi_r : Fil -> M
// semilinear, and the monodromy pair (N, N_Fil). All maps are stored by their
// values on generators. Free objects are the case M free and iota injective.
class BreuilModule {
 public:
  RingParams params;
  ChainModule M;
  ChainModule Fil;
  std::vector<Elem> iota;   // iota(h_j) in M
  std::vector<Elem> phi;    // phi_r(h_j) in M
  bool has_N = false;
  std::vector<Elem> N;      // N(g_i) in M
  std::vector<Elem> N_fil;  // N_Fil(h_j) in Fil
  std::optional<CoefficientAction> coeff;
  std::optional<DescentAction> descent;
  // Checks that could only be decided while building (syzygies of phi on a
  // presented Fil, Griffiths transversality for free objects).
  std::vector<Check> construction;

  Elem iota_of(const Elem& x) const { return apply_linear(Fil, M, iota, x); }
  Elem phi_of(const Elem& x) const { return apply_frobenius(Fil, M, phi, x); }
  Elem N_of(const Elem& x) const { return apply_leibniz(M, N, 0, x); }
  Elem N_fil_of(const Elem& x) const { return apply_leibniz(Fil, N_fil, params.e, x); }
  Elem nu_of(const Elem& x) const { return apply_linear(M, M, coeff->on_module, x); }
  Elem nu_fil_of(const Elem& x) const { return apply_linear(Fil, Fil, coeff->on_fil, x); }
  Elem sigma_of(const Elem& x) const { return apply_twisted(M, M, descent->on_module, descent->omega, x); }
  Elem sigma_fil_of(const Elem& x) const {
    return apply_twisted(Fil, Fil, descent->on_fil, descent->omega, x);
  }

  // iota(Fil) as a submodule of M.
  const Submodule& fil_image() const { return fil_image_; }
  bool is_filtered() const { return fil_kernel_dim_ == 0; }
  bool is_generated() const;
  bool is_free() const { return M.is_free() && is_filtered(); }
  bool is_zero() const { return M.is_zero_module() && Fil.is_zero_module(); }
  // Some x in Fil with iota(x) = y.
  std::optional<Elem> iota_preimage(const Elem& y) const { return iota_solver_.solve(y); }

  // Recomputes the cached data; called by every factory.
  void finalize();

 private:
  Submodule fil_image_;
  RowSolver iota_solver_;
  int fil_kernel_dim_ = 0;
};

using Object = std::shared_ptr<const BreuilModule>;

// A pair (f, f_Fil) of S-linear maps, stored on generators.
struct Morphism {
  Object source;
  Object target;
  std::vector<Elem> f;      // f(g_i) in target M
  std::vector<Elem> f_fil;  // f_Fil(h_j) in target Fil
};

// ---- factories -----------------------------------------------------------

struct CoeffSpec {
  int h = 1;
  std::optional<Fq> gamma;           // defaults to the canonical subfield generator
  std::vector<Elem> on_module;       // nu(gamma)(g_i)
  std::optional<std::vector<Elem>> on_fil;
};

struct DescentSpec {
  int n = 1;
  Fq omega = 1;
  std::vector<Elem> on_module;
  std::optional<std::vector<Elem>> on_fil;
};

// Free module of rank d with Fil spanned by fil_gens and phi_r(fil_gens[l]) =
// phi_values[l]. N is given on the basis; N_Fil is derived by Griffiths.
struct FreeSpec {
  int rank = 0;
  std::vector<Elem> fil_gens;
  std::vector<Elem> phi_values;
  std::optional<std::vector<Elem>> N_values;
  std::optional<CoeffSpec> coeff;
  std::optional<DescentSpec> descent;
};
Object make_free(const RingParams& params, const FreeSpec& spec);

struct UniSpec {
  std::vector<int> M_orders;
  std::vector<int> Fil_orders;
  std::vector<Elem> iota;
  std::vector<Elem> phi;
  std::optional<std::vector<Elem>> N;
  std::optional<std::vector<Elem>> N_fil;  // derived through iota when omitted
  std::optional<CoeffSpec> coeff;
  std::optional<DescentSpec> descent;
};
Object make_uni(const RingParams& params, const UniSpec& spec);

// S(t): M = S, Fil = u^{et} S, phi_r(u^{et}) = c^t, N = 0.
Object standard_object(const RingParams& params, int t, bool with_N = true);
Object zero_object(const RingParams& params, bool with_N = true);

// ---- operations ------------------------------------------------------------

ValidationReport validate_object(const BreuilModule& obj);
ValidationReport validate_coefficients(const BreuilModule& obj);
bool is_cris(const BreuilModule& obj);
Object direct_sum(const Object& a, const Object& b);
Object without_extras(const Object& a, bool keep_N);

// Coefficient action re-expressed on another generator of the same E.
CoefficientAction rebase_coefficients(const BreuilModule& obj, Fq gamma);

// Sub- and quotient objects cut out by stable submodules. The extra
// structures (coefficients, descent) are kept only when the submodules are
// stable under them.
struct Induced {
  Object object;
  Morphism map;  // inclusion into, or projection from, the original
};
Induced induced_subobject(const Object& obj, const Submodule& G, const Submodule& F);
Induced quotient_object(const Object& obj, const Submodule& Q, const Submodule& K);

std::string format_elem(const ChainModule& M, const Elem& x);

}  // namespace breuil
