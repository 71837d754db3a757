#include "breuil/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "breuil/errors.hpp"

namespace breuil {

namespace {

// row_dst -= c * row_src over [from, n)
inline void axpy(const FiniteField& F, Fq* dst, const Fq* src, Fq c, int from, int n) {
  if (c == 0) return;
  const Fq nc = F.neg(c);
  for (int j = from; j < n; ++j) {
    if (src[j] != 0) dst[j] = F.add(dst[j], F.mul(nc, src[j]));
  }
}

inline void scale(const FiniteField& F, Fq* row, Fq c, int from, int n) {
  for (int j = from; j < n; ++j)
    if (row[j] != 0) row[j] = F.mul(row[j], c);
}

}  // namespace

void Matrix::append_row(const Vec& v) {
  if (static_cast<int>(v.size()) != cols) throw ShapeError("row length mismatch");
  a.insert(a.end(), v.begin(), v.end());
  ++rows;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rs, int cols) {
  Matrix m(0, cols);
  m.a.reserve(rs.size() * static_cast<std::size_t>(cols));
  for (const auto& r : rs) m.append_row(r);
  return m;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

Matrix multiply(const FiniteField& F, const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw ShapeError("matrix product shape mismatch");
  Matrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    Fq* zr = z.row(i);
    for (int k = 0; k < x.cols; ++k) {
      const Fq c = x.at(i, k);
      if (c == 0) continue;
      const Fq* yr = y.row(k);
      for (int j = 0; j < y.cols; ++j)
        if (yr[j] != 0) zr[j] = F.add(zr[j], F.mul(c, yr[j]));
    }
  }
  return z;
}

Vec vec_times(const FiniteField& F, const Vec& v, const Matrix& m) {
  if (static_cast<int>(v.size()) != m.rows) throw ShapeError("vector-matrix shape mismatch");
  Vec out(m.cols, 0);
  for (int k = 0; k < m.rows; ++k) {
    if (v[k] == 0) continue;
    const Fq* r = m.row(k);
    for (int j = 0; j < m.cols; ++j)
      if (r[j] != 0) out[j] = F.add(out[j], F.mul(v[k], r[j]));
  }
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Fq x) { return x == 0; });
}

std::vector<int> rref(const FiniteField& F, Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i) {
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) std::swap_ranges(m.row(piv), m.row(piv) + m.cols, m.row(r));
    scale(F, m.row(r), F.inv(m.at(r, c)), c, m.cols);
    for (int i = 0; i < m.rows; ++i) {
      if (i != r && m.at(i, c) != 0) axpy(F, m.row(i), m.row(r), m.at(i, c), c, m.cols);
    }
    pivots.push_back(c);
    ++r;
  }
  m.rows = r;
  m.a.resize(static_cast<std::size_t>(r) * m.cols);
  return pivots;
}

int rank(const FiniteField& F, Matrix m) { return static_cast<int>(rref(F, m).size()); }

Matrix nullspace(const FiniteField& F, const Matrix& A) {
  Matrix m = A;
  auto piv = rref(F, m);
  std::vector<char> is_piv(A.cols, 0);
  for (int c : piv) is_piv[c] = 1;
  Matrix out(0, A.cols);
  for (int free = 0; free < A.cols; ++free) {
    if (is_piv[free]) continue;
    Vec x(A.cols, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = F.neg(m.at(static_cast<int>(i), free));
    out.append_row(x);
  }
  return out;
}

Matrix left_kernel(const FiniteField& F, const Matrix& R) {
  const int n = R.rows;
  Matrix out(0, n);
  std::vector<int> live;
  for (int i = 0; i < n; ++i) {
    const Fq* r = R.row(i);
    if (std::any_of(r, r + R.cols, [](Fq x) { return x != 0; })) {
      live.push_back(i);
    } else {
      Vec e(n, 0);
      e[i] = 1;
      out.append_row(e);
    }
  }
  if (live.empty()) return out;
  // Augment the live rows with their combination vectors and eliminate.
  const int L = static_cast<int>(live.size());
  const int W = R.cols + n;
  Matrix m(L, W);
  for (int k = 0; k < L; ++k) {
    std::copy(R.row(live[k]), R.row(live[k]) + R.cols, m.row(k));
    m.at(k, R.cols + live[k]) = 1;
  }
  int r = 0;
  for (int c = 0; c < R.cols && r < L; ++c) {
    int piv = -1;
    for (int i = r; i < L; ++i) {
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) std::swap_ranges(m.row(piv), m.row(piv) + W, m.row(r));
    const Fq inv = F.inv(m.at(r, c));
    for (int i = r + 1; i < L; ++i) {
      const Fq x = m.at(i, c);
      if (x != 0) axpy(F, m.row(i), m.row(r), F.mul(x, inv), c, W);
    }
    ++r;
  }
  for (int i = r; i < L; ++i) out.append_row(Vec(m.row(i) + R.cols, m.row(i) + W));
  return out;
}

SolutionSpace solve_linear(const FiniteField& F, const Matrix& A, const Vec& b) {
  if (static_cast<int>(b.size()) != A.rows) throw ShapeError("right-hand side length mismatch");
  Matrix aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    std::copy(A.row(i), A.row(i) + A.cols, aug.row(i));
    aug.at(i, A.cols) = b[i];
  }
  auto piv = rref(F, aug);
  SolutionSpace s;
  s.basis = nullspace(F, A);
  if (!piv.empty() && piv.back() == A.cols) return s;
  Vec x(A.cols, 0);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug.at(static_cast<int>(i), A.cols);
  s.particular = std::move(x);
  return s;
}

std::optional<Matrix> inverse(const FiniteField& F, const Matrix& m) {
  if (m.rows != m.cols) throw ShapeError("inverse of non-square matrix");
  const int n = m.rows;
  if (n == 0) return Matrix(0, 0);
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    std::copy(m.row(i), m.row(i) + n, aug.row(i));
    aug.at(i, n + i) = 1;
  }
  auto piv = rref(F, aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i) std::copy(aug.row(i) + n, aug.row(i) + 2 * n, inv.row(i));
  return inv;
}

Subspace Subspace::span(const Field& F, int n, const std::vector<Vec>& gens) {
  return span(F, Matrix::from_rows(gens, n));
}

Subspace Subspace::span(const Field& F, Matrix gens) {
  Subspace s;
  s.F_ = F;
  s.pivots_ = rref(*F, gens);
  s.basis_ = std::move(gens);
  return s;
}

Subspace Subspace::full(const Field& F, int n) { return span(F, Matrix::identity(n)); }

Vec Subspace::reduce(Vec v) const {
  for (int i = 0; i < basis_.rows; ++i) {
    const Fq c = v[pivots_[i]];
    if (c != 0) axpy(*F_, v.data(), basis_.row(i), c, pivots_[i], basis_.cols);
  }
  return v;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  Vec c(basis_.rows, 0);
  for (int i = 0; i < basis_.rows; ++i) c[i] = v[pivots_[i]];
  Vec back = vec_times(*F_, c, basis_);
  if (back != v) return std::nullopt;
  return c;
}

bool Subspace::contains(const Subspace& o) const {
  for (int i = 0; i < o.basis_.rows; ++i)
    if (!contains(o.basis_.row_vec(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  Matrix m = basis_;
  m.a.insert(m.a.end(), o.basis_.a.begin(), o.basis_.a.end());
  m.rows += o.basis_.rows;
  return span(F_, std::move(m));
}

Subspace Subspace::intersect(const Subspace& o) const {
  // Zassenhaus: rows (a | a) and (b | 0); the rows with zero left half give
  // the intersection in the right half.
  const int n = ambient_dim();
  Matrix m(basis_.rows + o.basis_.rows, 2 * n);
  for (int i = 0; i < basis_.rows; ++i) {
    std::copy(basis_.row(i), basis_.row(i) + n, m.row(i));
    std::copy(basis_.row(i), basis_.row(i) + n, m.row(i) + n);
  }
  for (int i = 0; i < o.basis_.rows; ++i)
    std::copy(o.basis_.row(i), o.basis_.row(i) + n, m.row(basis_.rows + i));
  auto piv = rref(*F_, m);
  Matrix out(0, n);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] >= n) out.append_row(Vec(m.row(static_cast<int>(i)) + n, m.row(static_cast<int>(i)) + 2 * n));
  }
  return span(F_, std::move(out));
}

RowSolver::RowSolver(const Field& F, const Matrix& A) {
  const int n = A.cols, m = A.rows;
  Matrix aug(m, n + m);
  for (int i = 0; i < m; ++i) {
    std::copy(A.row(i), A.row(i) + n, aug.row(i));
    aug.at(i, n + i) = 1;
  }
  auto piv = rref(*F, aug);
  Matrix basis(0, n);
  combos_ = Matrix(0, m);
  kernel_ = Matrix(0, m);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    const int r = static_cast<int>(i);
    if (piv[i] < n) {
      basis.append_row(Vec(aug.row(r), aug.row(r) + n));
      combos_.append_row(Vec(aug.row(r) + n, aug.row(r) + n + m));
    } else {
      kernel_.append_row(Vec(aug.row(r) + n, aug.row(r) + n + m));
    }
  }
  image_ = Subspace::span(F, std::move(basis));
}

std::optional<Vec> RowSolver::solve(const Vec& y) const {
  auto c = image_.coordinates(y);
  if (!c) return std::nullopt;
  return vec_times(*image_.field(), *c, combos_);
}

}  // namespace breuil
