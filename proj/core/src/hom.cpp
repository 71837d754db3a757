#include "breuil/hom.hpp"

#include <functional>
#include <random>

#include "breuil/adjoints.hpp"
#include "breuil/errors.hpp"

namespace breuil {

namespace {

void push_digits(const FiniteField& F, const Elem& x, Vec& out) {
  for (Fq c : x)
    for (int s = 0; s < F.f(); ++s) out.push_back(F.digit(c, s));
}

}  // namespace

Morphism HomSpace::decode(const Vec& z) const {
  const auto& A = *source_;
  const auto& B = *target_;
  const auto& F = *A.params.k;
  Morphism m{source_, target_, std::vector<Elem>(A.M.rank(), B.M.zero()),
             std::vector<Elem>(A.Fil.rank(), B.Fil.zero())};
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    const Fq c = F.from_digits(z.data() + s * f_);
    if (c == 0) continue;
    const Slot& sl = slots_[s];
    (sl.fil ? m.f_fil[sl.gen] : m.f[sl.gen])[sl.pos] = c;
  }
  if (derive_fil_) {
    for (int j = 0; j < A.Fil.rank(); ++j) {
      auto y = B.iota_preimage(apply_linear(A.M, B.M, m.f, A.iota[j]));
      if (y) m.f_fil[j] = *y;
    }
  }
  return m;
}

std::vector<Morphism> HomSpace::basis() const {
  std::vector<Morphism> out;
  for (int i = 0; i < basis_.rows; ++i) out.push_back(decode(basis_.row_vec(i)));
  return out;
}

Morphism HomSpace::element(const Vec& coeffs) const {
  auto Fp = FiniteField::prime(source_->params.k->p());
  return decode(vec_times(*Fp, coeffs, basis_));
}

Vec HomSpace::flatten(const Morphism& m) const {
  const auto& F = *source_->params.k;
  Vec z;
  z.reserve(slots_.size() * f_);
  for (const auto& sl : slots_) {
    const Fq c = (sl.fil ? m.f_fil[sl.gen] : m.f[sl.gen])[sl.pos];
    for (int s = 0; s < f_; ++s) z.push_back(F.digit(c, s));
  }
  return z;
}

std::optional<Vec> HomSpace::coordinates(const Morphism& m) const {
  Vec z = flatten(m);
  if (!(decode(z) == m)) return std::nullopt;
  auto Fp = FiniteField::prime(source_->params.k->p());
  RowSolver solver(Fp, basis_);
  return solver.solve(z);
}

HomSpace hom_basis(const Object& a, const Object& b, const HomOptions& opt) {
  const auto& A = *a;
  const auto& B = *b;
  if (!(A.params == B.params)) throw ParameterError("Hom between objects over different rings");
  const auto& F = *A.params.k;
  auto Fp = FiniteField::prime(F.p());

  HomSpace H;
  H.source_ = a;
  H.target_ = b;
  H.f_ = F.f();
  H.derive_fil_ = B.is_filtered();
  for (int i = 0; i < A.M.rank(); ++i)
    for (int l = 0; l < B.M.rank(); ++l)
      for (int t = std::max(0, B.M.order(l) - A.M.order(i)); t < B.M.order(l); ++t)
        H.slots_.push_back({false, i, B.M.offset(l) + t});
  if (!H.derive_fil_) {
    for (int j = 0; j < A.Fil.rank(); ++j)
      for (int l = 0; l < B.Fil.rank(); ++l)
        for (int t = std::max(0, B.Fil.order(l) - A.Fil.order(j)); t < B.Fil.order(l); ++t)
          H.slots_.push_back({true, j, B.Fil.offset(l) + t});
  }
  const int U = H.unknowns();

  // The residual of each stage is F_p-linear in the unknowns; each stage
  // replaces the current basis by the combinations with zero residual.
  using Stage = std::function<void(const Morphism&, Vec&)>;
  std::vector<Stage> stages;
  const bool derive = H.derive_fil_;

  auto fM = [&](const Morphism& m, const Elem& x) { return apply_linear(A.M, B.M, m.f, x); };
  auto fF = [&](const Morphism& m, const Elem& x) { return apply_linear(A.Fil, B.Fil, m.f_fil, x); };

  if (opt.use_coeff && A.coeff && B.coeff) {
    CoefficientAction cb = B.coeff->gamma == A.coeff->gamma ? *B.coeff : rebase_coefficients(B, A.coeff->gamma);
    stages.push_back([&, cb](const Morphism& m, Vec& out) {
      for (int i = 0; i < A.M.rank(); ++i)
        push_digits(F, B.M.sub(apply_linear(B.M, B.M, cb.on_module, m.f[i]), fM(m, A.coeff->on_module[i])), out);
      if (!derive)
        for (int j = 0; j < A.Fil.rank(); ++j)
          push_digits(F, B.Fil.sub(apply_linear(B.Fil, B.Fil, cb.on_fil, m.f_fil[j]), fF(m, A.coeff->on_fil[j])),
                      out);
    });
  }
  if (opt.use_descent && A.descent && B.descent) {
    if (A.descent->omega != B.descent->omega || A.descent->n != B.descent->n)
      throw ParameterError("descent data over different characters");
    stages.push_back([&](const Morphism& m, Vec& out) {
      for (int i = 0; i < A.M.rank(); ++i)
        push_digits(F, B.M.sub(B.sigma_of(m.f[i]), fM(m, A.descent->on_module[i])), out);
      if (!derive)
        for (int j = 0; j < A.Fil.rank(); ++j)
          push_digits(F, B.Fil.sub(B.sigma_fil_of(m.f_fil[j]), fF(m, A.descent->on_fil[j])), out);
    });
  }
  if (opt.use_N && A.has_N && B.has_N) {
    stages.push_back([&](const Morphism& m, Vec& out) {
      for (int i = 0; i < A.M.rank(); ++i) push_digits(F, B.M.sub(B.N_of(m.f[i]), fM(m, A.N[i])), out);
      if (!derive)
        for (int j = 0; j < A.Fil.rank(); ++j)
          push_digits(F, B.Fil.sub(B.N_fil_of(m.f_fil[j]), fF(m, A.N_fil[j])), out);
    });
  }
  if (derive) {
    stages.push_back([&](const Morphism& m, Vec& out) {
      for (int j = 0; j < A.Fil.rank(); ++j) push_digits(F, B.fil_image().reduce(fM(m, A.iota[j])), out);
    });
    stages.push_back([&](const Morphism& m, Vec& out) {
      for (int j = 0; j < A.Fil.rank(); ++j) {
        auto y = B.iota_preimage(fM(m, A.iota[j]));
        if (!y) throw BreuilError("Fil membership stage left a non-member");
        push_digits(F, B.M.sub(B.phi_of(*y), fM(m, A.phi[j])), out);
      }
    });
  } else {
    stages.push_back([&](const Morphism& m, Vec& out) {
      for (int j = 0; j < A.Fil.rank(); ++j) {
        push_digits(F, B.M.sub(B.iota_of(m.f_fil[j]), fM(m, A.iota[j])), out);
        push_digits(F, B.M.sub(B.phi_of(m.f_fil[j]), fM(m, A.phi[j])), out);
      }
    });
  }

  Matrix basis = Matrix::identity(U);
  // Decoding without the derived Fil part; the stages that need it compute it.
  const bool keep = H.derive_fil_;
  H.derive_fil_ = false;
  for (const auto& stage : stages) {
    if (basis.rows == 0) break;
    Matrix R;
    for (int r = 0; r < basis.rows; ++r) {
      Vec out;
      stage(H.decode(basis.row_vec(r)), out);
      if (r == 0) R = Matrix(0, static_cast<int>(out.size()));
      R.append_row(out);
    }
    Matrix C = left_kernel(*Fp, R);
    basis = multiply(*Fp, C, basis);
  }
  H.derive_fil_ = keep;
  H.basis_ = std::move(basis);
  return H;
}

namespace {

Matrix top_matrix(const ChainModule& A, const ChainModule& B, const std::vector<Elem>& f) {
  Matrix t(A.rank(), B.rank());
  for (int i = 0; i < A.rank(); ++i)
    for (int l = 0; l < B.rank(); ++l) t.at(i, l) = f[i][B.offset(l)];
  return t;
}

std::vector<int> coker_iota_orders(const BreuilModule& o) {
  return decompose(Submodule::full(o.M), o.fil_image()).module.sorted_orders();
}

}  // namespace

IsoSearch find_isomorphism(const Object& a, const Object& b, const HomOptions& opt, std::uint64_t seed) {
  IsoSearch res;
  const auto& A = *a;
  const auto& B = *b;
  if (A.M.sorted_orders() != B.M.sorted_orders() || A.Fil.sorted_orders() != B.Fil.sorted_orders() ||
      coker_iota_orders(A) != coker_iota_orders(B)) {
    res.mode = "invariants";
    return res;
  }
  const auto& F = *A.params.k;
  const std::uint32_t p = F.p();
  HomSpace H = hom_basis(a, b, opt);
  const int D = H.dim();
  res.hom_dim = D;
  const int n = A.M.rank(), nf = A.Fil.rank();

  if (n == 0 && nf == 0) {
    res.mode = "exhaustive";
    res.iso = zero_morphism(a, b);
    return res;
  }
  auto mors = H.basis();
  std::vector<Matrix> T, TF;
  for (const auto& m : mors) {
    T.push_back(top_matrix(A.M, B.M, m.f));
    TF.push_back(top_matrix(A.Fil, B.Fil, m.f_fil));
  }
  auto combo_ok = [&](const Vec& z) {
    Matrix t(n, n), tf(nf, nf);
    for (int d = 0; d < D; ++d) {
      if (z[d] == 0) continue;
      for (std::size_t x = 0; x < t.a.size(); ++x) t.a[x] = F.add(t.a[x], F.mul(z[d], T[d].a[x]));
      for (std::size_t x = 0; x < tf.a.size(); ++x) tf.a[x] = F.add(tf.a[x], F.mul(z[d], TF[d].a[x]));
    }
    return rank(F, t) == n && rank(F, tf) == nf;
  };

  constexpr std::uint64_t kExhaustiveLimit = 531441;  // 3^12
  constexpr int kMaxExhaustiveDim = 12;
  constexpr int kRandomSamples = 4096;
  std::uint64_t total = 1;
  bool small = D <= kMaxExhaustiveDim;
  for (int d = 0; d < D && small; ++d) {
    total *= p;
    if (total > kExhaustiveLimit) small = false;
  }
  if (small) {
    res.mode = "exhaustive";
    Vec z(D, 0);
    // Up to scalars: the first nonzero coordinate is 1.
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      std::uint64_t v = idx;
      int lead = -1;
      for (int d = 0; d < D; ++d) {
        z[d] = static_cast<Fq>(v % p);
        v /= p;
        if (lead < 0 && z[d] != 0) lead = d;
      }
      if (z[lead] != 1) continue;
      if (combo_ok(z)) {
        res.iso = H.element(z);
        return res;
      }
    }
    return res;
  }
  res.mode = "random";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  Vec z(D);
  for (int s = 0; s < kRandomSamples; ++s) {
    for (auto& c : z) c = dist(rng);
    if (combo_ok(z)) {
      res.iso = H.element(z);
      return res;
    }
  }
  return res;
}

KernelCokernel kernel_mod(const Morphism& m) {
  const auto& A = *m.source;
  const auto& B = *m.target;
  Submodule K = kernel(A.M, B.M, m.f);
  Submodule KF = kernel(A.Fil, B.Fil, m.f_fil);
  auto naive = induced_subobject(m.source, K, KF);
  auto g = gen_closure(naive.object);
  return {g.object, compose(naive.map, g.map)};
}

KernelCokernel cokernel_mod(const Morphism& m) {
  const auto& A = *m.source;
  const auto& B = *m.target;
  Submodule Q = image(A.M, B.M, m.f, Submodule::full(A.M));
  Submodule K = image(A.Fil, B.Fil, m.f_fil, Submodule::full(A.Fil));
  auto naive = quotient_object(m.target, Q, K);
  auto c = fil_closure(naive.object);
  return {c.object, compose(c.map, naive.map)};
}

KernelCokernel image_mod(const Morphism& m) { return kernel_mod(cokernel_mod(m).map); }

}  // namespace breuil
