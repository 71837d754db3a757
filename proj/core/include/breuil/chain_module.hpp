#pragma once

#include <optional>
#include <vector>

#include "breuil/linalg.hpp"
#include "breuil/ring.hpp"

namespace breuil {

// Elements of a chain module are flat k-vectors: coordinate (i, t) holds the
// coefficient of u^t g_i at offset(i) + t.
using Elem = Vec;

// (+)_i k[u]/u^{n_i} g_i with every n_i in [1, N].
class ChainModule {
 public:
  ChainModule() = default;
  ChainModule(Field k, int N, std::vector<int> orders);

  const Field& field() const { return k_; }
  int ring_order() const { return N_; }
  TruncatedRing ring() const { return TruncatedRing(k_, N_); }
  const std::vector<int>& orders() const { return orders_; }
  std::vector<int> sorted_orders() const;  // descending
  int rank() const { return static_cast<int>(orders_.size()); }
  int order(int i) const { return orders_[i]; }
  int offset(int i) const { return offsets_[i]; }
  int length() const { return length_; }            // dimension over k
  int fp_dim() const { return length_ * k_->f(); }  // dimension over F_p
  bool is_free() const;
  bool is_zero_module() const { return orders_.empty(); }

  Elem zero() const { return Elem(length_, 0); }
  Elem gen(int i) const;
  // s * g_i, truncated to the order of g_i.
  Elem embed(int i, const RingElement& s) const;
  RingElement coordinate(const Elem& x, int i) const;  // padded to length N

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem scale(Fq c, const Elem& a) const;
  Elem mul_u(const Elem& a, int t) const;
  Elem mul_ring(const RingElement& s, const Elem& a) const;
  void axpy(Elem& acc, Fq c, const Elem& x) const;  // acc += c * x
  bool killed_by_u_pow(const Elem& a, int t) const;
  // Largest s with x in u^s M, capped at N.
  int valuation(const Elem& x) const;

  // Concatenation of generators.
  static ChainModule direct_sum(const ChainModule& a, const ChainModule& b);
  bool operator==(const ChainModule& o) const { return N_ == o.N_ && orders_ == o.orders_ && same_field(k_, o.k_); }

 private:
  Field k_;
  int N_ = 1;
  std::vector<int> orders_;
  std::vector<int> offsets_;
  int length_ = 0;
};

// Maps given by the images of generators. All four families are extended to
// whole elements by the appropriate rule.

// S-linear: sum x_{i,t} u^t img_i
Elem apply_linear(const ChainModule& src, const ChainModule& tgt, const std::vector<Elem>& img, const Elem& x);
// phi-semilinear: sum x_{i,t}^p u^{pt} img_i
Elem apply_frobenius(const ChainModule& src, const ChainModule& tgt, const std::vector<Elem>& img, const Elem& x);
// sigma-semilinear with sigma(u) = w u, trivial on k: sum x_{i,t} w^t u^t img_i
Elem apply_twisted(const ChainModule& src, const ChainModule& tgt, const std::vector<Elem>& img, Fq w, const Elem& x);
// Leibniz operator with twist u^shift: sum x_{i,t} (u^t img_i - t u^{t+shift} g_i)
Elem apply_leibniz(const ChainModule& m, const std::vector<Elem>& img, int shift, const Elem& x);

// k-matrix of an S-linear map: row (offset(i)+t) is the image of u^t g_i.
Matrix linear_matrix(const ChainModule& src, const ChainModule& tgt, const std::vector<Elem>& img);
// Generator images read back from a k-linear map that is known to be S-linear.
std::vector<Elem> images_from_matrix(const ChainModule& src, const Matrix& m);
// Images of the composite g o f.
std::vector<Elem> compose_images(const ChainModule& a, const ChainModule& b, const ChainModule& c,
                                 const std::vector<Elem>& f, const std::vector<Elem>& g);

// A u-stable k-subspace, i.e. an S-submodule. The k-basis is kept in reduced
// echelon form with coordinates ordered by (generator, u-degree), which makes
// it canonical.
class Submodule {
 public:
  Submodule() = default;
  static Submodule zero(const ChainModule& ambient);
  static Submodule full(const ChainModule& ambient);
  static Submodule span(const ChainModule& ambient, const std::vector<Elem>& gens);
  // Wraps a k-subspace that the caller knows to be u-stable.
  static Submodule from_space(const ChainModule& ambient, Subspace space);

  const ChainModule& ambient() const { return ambient_; }
  const Subspace& space() const { return space_; }
  int length() const { return space_.dim(); }
  int fp_dim() const { return space_.dim() * ambient_.field()->f(); }
  bool is_zero() const { return space_.dim() == 0; }

  bool contains(const Elem& x) const { return space_.contains(x); }
  bool contains(const Submodule& o) const { return space_.contains(o.space_); }
  Elem reduce(const Elem& x) const { return space_.reduce(x); }

  Submodule sum(const Submodule& o) const;
  Submodule intersect(const Submodule& o) const;
  Submodule mul_u(int t) const;
  bool operator==(const Submodule& o) const { return ambient_ == o.ambient_ && space_ == o.space_; }

  // Echelon rows whose pivot starts a u-chain; they generate over S.
  std::vector<Elem> generators() const;
  // k-basis rows.
  std::vector<Elem> basis() const;

 private:
  ChainModule ambient_;
  Subspace space_;
};

// Preimage of a submodule of tgt under an S-linear map src -> tgt.
Submodule preimage(const ChainModule& src, const std::vector<Elem>& img, const Submodule& target_sub);
// Image of a submodule of src.
Submodule image(const ChainModule& src, const ChainModule& tgt, const std::vector<Elem>& img, const Submodule& s);
Submodule kernel(const ChainModule& src, const ChainModule& tgt, const std::vector<Elem>& img);

// a/b written as a chain module. lifts[c] is a representative in the ambient
// of the c-th generator; project() maps an element of a to coordinates in the
// quotient chain module.
struct Quotient {
  ChainModule module;
  std::vector<Elem> lifts;
  Elem project(const Elem& y) const;

  std::vector<int> cols;  // pivot columns used by project
  Matrix inv;             // inverse of the full basis restricted to cols
};

// Requires b contained in a, same ambient. Generators come out with
// descending orders.
Quotient decompose(const Submodule& a, const Submodule& b);
inline Quotient decompose(const Submodule& a) { return decompose(a, Submodule::zero(a.ambient())); }

}  // namespace breuil
