#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "breuil/morphism.hpp"

namespace breuil {

struct HomOptions {
  bool use_N = true;        // impose N-compatibility when both sides carry N
  bool use_coeff = true;    // E-equivariance when both sides carry coefficients
  bool use_descent = true;  // Gal(L/K)-equivariance when both sides carry descent data
};

// F_p-basis of Hom(source, target). Unknowns are the F_p digits of the
// generator images f(g_i), restricted to the u^{n_i}-torsion of the target,
// together with f_Fil(h_j) when the target's iota is not injective.
class HomSpace {
 public:
  const Object& source() const { return source_; }
  const Object& target() const { return target_; }
  int dim() const { return basis_.rows; }
  int unknowns() const { return static_cast<int>(slots_.size()) * f_; }
  const Matrix& basis_matrix() const { return basis_; }

  std::vector<Morphism> basis() const;
  Morphism element(const Vec& coeffs) const;  // F_p combination of the basis
  Vec flatten(const Morphism& m) const;       // in the unknown layout
  std::optional<Vec> coordinates(const Morphism& m) const;
  bool contains(const Morphism& m) const { return coordinates(m).has_value(); }

 private:
  friend HomSpace hom_basis(const Object&, const Object&, const HomOptions&);
  struct Slot {
    bool fil;
    int gen;
    int pos;
  };
  Morphism decode(const Vec& z) const;

  Object source_, target_;
  std::vector<Slot> slots_;
  bool derive_fil_ = false;
  int f_ = 1;
  Matrix basis_;
};

HomSpace hom_basis(const Object& source, const Object& target, const HomOptions& opt = {});

struct IsoSearch {
  std::optional<Morphism> iso;
  std::string mode;  // "invariants", "exhaustive" or "random"
  int hom_dim = 0;
  bool exact() const { return mode != "random"; }
};
// Dimension at most 12 (and p^dim <= 3^12) is enumerated exhaustively up to
// scalars; otherwise 4096 seeded uniform samples are tried.
IsoSearch find_isomorphism(const Object& a, const Object& b, const HomOptions& opt = {}, std::uint64_t seed = 0);

struct KernelCokernel {
  Object object;
  Morphism map;  // inclusion K -> source, or projection target -> C
};
KernelCokernel kernel_mod(const Morphism& m);
KernelCokernel cokernel_mod(const Morphism& m);
KernelCokernel image_mod(const Morphism& m);

}  // namespace breuil
