#include "breuil/chain_module.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "breuil/errors.hpp"

namespace breuil {

ChainModule::ChainModule(Field k, int N, std::vector<int> orders)
    : k_(std::move(k)), N_(N), orders_(std::move(orders)) {
  if (N_ < 1) throw ParameterError("ring order must be >= 1");
  offsets_.reserve(orders_.size());
  for (int n : orders_) {
    if (n < 1 || n > N_) throw ShapeError("chain order " + std::to_string(n) + " outside [1, N]");
    offsets_.push_back(length_);
    length_ += n;
  }
}

std::vector<int> ChainModule::sorted_orders() const {
  auto v = orders_;
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

bool ChainModule::is_free() const {
  return std::all_of(orders_.begin(), orders_.end(), [&](int n) { return n == N_; });
}

Elem ChainModule::gen(int i) const {
  Elem x = zero();
  x[offsets_[i]] = 1;
  return x;
}

Elem ChainModule::embed(int i, const RingElement& s) const {
  Elem x = zero();
  for (int t = 0; t < orders_[i] && t < static_cast<int>(s.size()); ++t) x[offsets_[i] + t] = s[t];
  return x;
}

RingElement ChainModule::coordinate(const Elem& x, int i) const {
  RingElement s(N_, 0);
  for (int t = 0; t < orders_[i]; ++t) s[t] = x[offsets_[i] + t];
  return s;
}

Elem ChainModule::add(const Elem& a, const Elem& b) const {
  Elem r(length_);
  for (int j = 0; j < length_; ++j) r[j] = k_->add(a[j], b[j]);
  return r;
}

Elem ChainModule::sub(const Elem& a, const Elem& b) const {
  Elem r(length_);
  for (int j = 0; j < length_; ++j) r[j] = k_->sub(a[j], b[j]);
  return r;
}

Elem ChainModule::neg(const Elem& a) const {
  Elem r(length_);
  for (int j = 0; j < length_; ++j) r[j] = k_->neg(a[j]);
  return r;
}

Elem ChainModule::scale(Fq c, const Elem& a) const {
  Elem r(length_);
  for (int j = 0; j < length_; ++j) r[j] = k_->mul(c, a[j]);
  return r;
}

void ChainModule::axpy(Elem& acc, Fq c, const Elem& x) const {
  if (c == 0) return;
  for (int j = 0; j < length_; ++j)
    if (x[j] != 0) acc[j] = k_->add(acc[j], k_->mul(c, x[j]));
}

Elem ChainModule::mul_u(const Elem& a, int t) const {
  if (t == 0) return a;
  Elem r = zero();
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const int off = offsets_[i];
    for (int s = 0; s + t < orders_[i]; ++s) r[off + s + t] = a[off + s];
  }
  return r;
}

Elem ChainModule::mul_ring(const RingElement& s, const Elem& a) const {
  Elem r = zero();
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const int off = offsets_[i], n = orders_[i];
    for (int x = 0; x < n; ++x) {
      if (a[off + x] == 0) continue;
      for (int y = 0; x + y < n; ++y)
        if (s[y] != 0) r[off + x + y] = k_->add(r[off + x + y], k_->mul(a[off + x], s[y]));
    }
  }
  return r;
}

bool ChainModule::killed_by_u_pow(const Elem& a, int t) const {
  for (std::size_t i = 0; i < orders_.size(); ++i)
    for (int s = 0; s + t < orders_[i]; ++s)
      if (a[offsets_[i] + s] != 0) return false;
  return true;
}

int ChainModule::valuation(const Elem& x) const {
  // x lies in u^s M iff coordinate i has u-adic valuation >= s for each i.
  int v = N_;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    for (int t = 0; t < orders_[i]; ++t) {
      if (x[offsets_[i] + t] != 0) {
        v = std::min(v, t);
        break;
      }
    }
  }
  return v;
}

ChainModule ChainModule::direct_sum(const ChainModule& a, const ChainModule& b) {
  if (a.N_ != b.N_ || !same_field(a.k_, b.k_)) throw ParameterError("direct sum over different rings");
  auto o = a.orders_;
  o.insert(o.end(), b.orders_.begin(), b.orders_.end());
  return ChainModule(a.k_, a.N_, std::move(o));
}

Elem apply_linear(const ChainModule& src, const ChainModule& tgt, const std::vector<Elem>& img, const Elem& x) {
  const auto& F = *tgt.field();
  Elem r = tgt.zero();
  for (int i = 0; i < src.rank(); ++i) {
    const Elem& y = img[i];
    for (int t = 0; t < src.order(i); ++t) {
      const Fq c = x[src.offset(i) + t];
      if (c == 0) continue;
      for (int l = 0; l < tgt.rank(); ++l) {
        const int off = tgt.offset(l);
        for (int s = 0; s + t < tgt.order(l); ++s)
          if (y[off + s] != 0) r[off + s + t] = F.add(r[off + s + t], F.mul(c, y[off + s]));
      }
    }
  }
  return r;
}

Elem apply_frobenius(const ChainModule& src, const ChainModule& tgt, const std::vector<Elem>& img, const Elem& x) {
  const auto& F = *tgt.field();
  const int p = static_cast<int>(F.p());
  Elem r = tgt.zero();
  for (int i = 0; i < src.rank(); ++i) {
    const Elem& y = img[i];
    for (int t = 0; t < src.order(i); ++t) {
      const Fq c0 = x[src.offset(i) + t];
      if (c0 == 0) continue;
      const Fq c = F.frob(c0);
      const int sh = p * t;
      for (int l = 0; l < tgt.rank(); ++l) {
        const int off = tgt.offset(l);
        for (int s = 0; s + sh < tgt.order(l); ++s)
          if (y[off + s] != 0) r[off + s + sh] = F.add(r[off + s + sh], F.mul(c, y[off + s]));
      }
    }
  }
  return r;
}

Elem apply_twisted(const ChainModule& src, const ChainModule& tgt, const std::vector<Elem>& img, Fq w,
                   const Elem& x) {
  const auto& F = *tgt.field();
  Elem r = tgt.zero();
  for (int i = 0; i < src.rank(); ++i) {
    const Elem& y = img[i];
    Fq wt = 1;
    for (int t = 0; t < src.order(i); ++t, wt = F.mul(wt, w)) {
      const Fq c0 = x[src.offset(i) + t];
      if (c0 == 0) continue;
      const Fq c = F.mul(c0, wt);
      for (int l = 0; l < tgt.rank(); ++l) {
        const int off = tgt.offset(l);
        for (int s = 0; s + t < tgt.order(l); ++s)
          if (y[off + s] != 0) r[off + s + t] = F.add(r[off + s + t], F.mul(c, y[off + s]));
      }
    }
  }
  return r;
}

Elem apply_leibniz(const ChainModule& m, const std::vector<Elem>& img, int shift, const Elem& x) {
  const auto& F = *m.field();
  Elem r = apply_linear(m, m, img, x);
  for (int i = 0; i < m.rank(); ++i) {
    const int off = m.offset(i);
    for (int t = 1; t + shift < m.order(i); ++t) {
      const Fq c = x[off + t];
      if (c == 0) continue;
      r[off + t + shift] = F.sub(r[off + t + shift], F.mul(F.from_int(t), c));
    }
  }
  return r;
}

Matrix linear_matrix(const ChainModule& src, const ChainModule& tgt, const std::vector<Elem>& img) {
  Matrix m(src.length(), tgt.length());
  for (int i = 0; i < src.rank(); ++i) {
    for (int t = 0; t < src.order(i); ++t) {
      Elem y = tgt.mul_u(img[i], t);
      std::copy(y.begin(), y.end(), m.row(src.offset(i) + t));
    }
  }
  return m;
}

std::vector<Elem> images_from_matrix(const ChainModule& src, const Matrix& m) {
  std::vector<Elem> out;
  out.reserve(src.rank());
  for (int i = 0; i < src.rank(); ++i) out.push_back(m.row_vec(src.offset(i)));
  return out;
}

std::vector<Elem> compose_images(const ChainModule& a, const ChainModule& b, const ChainModule& c,
                                 const std::vector<Elem>& f, const std::vector<Elem>& g) {
  std::vector<Elem> out;
  out.reserve(a.rank());
  for (int i = 0; i < a.rank(); ++i) out.push_back(apply_linear(b, c, g, f[i]));
  return out;
}

Submodule Submodule::zero(const ChainModule& ambient) {
  Submodule s;
  s.ambient_ = ambient;
  s.space_ = Subspace(ambient.field(), ambient.length());
  return s;
}

Submodule Submodule::full(const ChainModule& ambient) {
  Submodule s;
  s.ambient_ = ambient;
  s.space_ = Subspace::full(ambient.field(), ambient.length());
  return s;
}

Submodule Submodule::span(const ChainModule& ambient, const std::vector<Elem>& gens) {
  Matrix m(0, ambient.length());
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != ambient.length()) throw ShapeError("element does not fit the ambient module");
    Elem x = g;
    for (int t = 0; t < ambient.ring_order() && !breuil::is_zero(x); ++t) {
      m.append_row(x);
      x = ambient.mul_u(x, 1);
    }
  }
  return from_space(ambient, Subspace::span(ambient.field(), std::move(m)));
}

Submodule Submodule::from_space(const ChainModule& ambient, Subspace space) {
  Submodule s;
  s.ambient_ = ambient;
  s.space_ = std::move(space);
  return s;
}

Submodule Submodule::sum(const Submodule& o) const {
  if (!(ambient_ == o.ambient_)) throw ShapeError("submodules of different ambients");
  return from_space(ambient_, space_.sum(o.space_));
}

Submodule Submodule::intersect(const Submodule& o) const {
  if (!(ambient_ == o.ambient_)) throw ShapeError("submodules of different ambients");
  return from_space(ambient_, space_.intersect(o.space_));
}

Submodule Submodule::mul_u(int t) const {
  std::vector<Elem> rows;
  for (const auto& b : basis()) rows.push_back(ambient_.mul_u(b, t));
  return from_space(ambient_, Subspace::span(ambient_.field(), ambient_.length(), rows));
}

std::vector<Elem> Submodule::basis() const {
  std::vector<Elem> out;
  for (int i = 0; i < space_.dim(); ++i) out.push_back(space_.basis().row_vec(i));
  return out;
}

std::vector<Elem> Submodule::generators() const {
  const auto& piv = space_.pivots();
  std::vector<char> is_piv(ambient_.length(), 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<int> gen_of(ambient_.length(), 0);
  for (int i = 0; i < ambient_.rank(); ++i)
    for (int t = 0; t < ambient_.order(i); ++t) gen_of[ambient_.offset(i) + t] = i;
  std::vector<Elem> out;
  for (std::size_t r = 0; r < piv.size(); ++r) {
    const int q = piv[r];
    const bool chain_start = q == ambient_.offset(gen_of[q]) || !is_piv[q - 1];
    if (chain_start) out.push_back(space_.basis().row_vec(static_cast<int>(r)));
  }
  return out;
}

Submodule preimage(const ChainModule& src, const std::vector<Elem>& img, const Submodule& target_sub) {
  Matrix m = linear_matrix(src, target_sub.ambient(), img);
  for (int r = 0; r < m.rows; ++r) {
    Elem red = target_sub.reduce(m.row_vec(r));
    std::copy(red.begin(), red.end(), m.row(r));
  }
  Matrix c = left_kernel(*src.field(), m);
  return Submodule::from_space(src, Subspace::span(src.field(), std::move(c)));
}

Submodule image(const ChainModule& src, const ChainModule& tgt, const std::vector<Elem>& img, const Submodule& s) {
  std::vector<Elem> rows;
  for (const auto& b : s.basis()) rows.push_back(apply_linear(src, tgt, img, b));
  return Submodule::from_space(tgt, Subspace::span(tgt.field(), tgt.length(), rows));
}

Submodule kernel(const ChainModule& src, const ChainModule& tgt, const std::vector<Elem>& img) {
  return preimage(src, img, Submodule::zero(tgt));
}

Elem Quotient::project(const Elem& y) const {
  Vec sel(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) sel[i] = y[cols[i]];
  Vec alpha = vec_times(*module.field(), sel, inv);
  alpha.resize(module.length());
  return alpha;
}

Quotient decompose(const Submodule& a, const Submodule& b) {
  const ChainModule& V = a.ambient();
  const Field& F = V.field();
  if (!a.contains(b)) throw ShapeError("quotient requires b contained in a");

  const auto abasis = a.basis();
  // K_j = { x in a : u^j x in b }
  auto K = [&](int j) {
    Matrix R(0, V.length());
    for (const auto& x : abasis) R.append_row(b.reduce(V.mul_u(x, j)));
    Matrix C = left_kernel(*F, R);
    std::vector<Elem> rows;
    for (int i = 0; i < C.rows; ++i) {
      Elem v = V.zero();
      for (int k = 0; k < C.cols; ++k) V.axpy(v, C.at(i, k), abasis[k]);
      rows.push_back(v);
    }
    return Subspace::span(F, V.length(), rows);
  };

  int jmax = 0;
  while (!b.contains(a.mul_u(jmax))) ++jmax;

  Subspace S = b.space();
  std::vector<std::pair<int, Elem>> chains;
  std::vector<Subspace> Ks(jmax + 1);
  for (int j = 0; j <= jmax; ++j) Ks[j] = K(j);
  for (int j = jmax; j >= 1; --j) {
    Subspace T = Ks[j - 1].sum(S);
    const Matrix& kb = Ks[j].basis();
    for (int r = 0; r < kb.rows; ++r) {
      Elem x = kb.row_vec(r);
      if (T.contains(x)) continue;
      std::vector<Elem> chain;
      Elem y = x;
      for (int t = 0; t < j; ++t) {
        chain.push_back(y);
        y = V.mul_u(y, 1);
      }
      Subspace add = Subspace::span(F, V.length(), chain);
      T = T.sum(add);
      S = S.sum(add);
      chains.emplace_back(j, x);
    }
  }
  if (S.dim() != a.length()) throw BreuilError("chain decomposition failed to span");

  Quotient q;
  std::vector<int> orders;
  for (auto& [j, x] : chains) {
    orders.push_back(j);
    q.lifts.push_back(x);
  }
  q.module = ChainModule(F, V.ring_order(), orders);

  Matrix Z(0, V.length());
  for (auto& [j, x] : chains) {
    Elem y = x;
    for (int t = 0; t < j; ++t) {
      Z.append_row(y);
      y = V.mul_u(y, 1);
    }
  }
  for (const auto& w : b.basis()) Z.append_row(w);
  Matrix E = Z;
  q.cols = rref(*F, E);
  Matrix Zc(Z.rows, static_cast<int>(q.cols.size()));
  for (int i = 0; i < Z.rows; ++i)
    for (std::size_t c = 0; c < q.cols.size(); ++c) Zc.at(i, static_cast<int>(c)) = Z.at(i, q.cols[c]);
  auto inv = inverse(*F, Zc);
  if (!inv) throw BreuilError("chain decomposition basis is singular");
  q.inv = std::move(*inv);
  return q;
}

}  // namespace breuil
