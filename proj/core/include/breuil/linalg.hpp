#pragma once

#include <optional>
#include <vector>

#include "breuil/finite_field.hpp"

namespace breuil {

using Vec = std::vector<Fq>;

// Dense row-major matrix over a finite field. Vectors are rows throughout.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Fq> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  Fq& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  Fq at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  Fq* row(int i) { return a.data() + static_cast<std::size_t>(i) * cols; }
  const Fq* row(int i) const { return a.data() + static_cast<std::size_t>(i) * cols; }
  Vec row_vec(int i) const { return Vec(row(i), row(i) + cols); }
  void append_row(const Vec& v);

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);
  bool operator==(const Matrix&) const = default;
};

Matrix transpose(const Matrix& m);
Matrix multiply(const FiniteField& F, const Matrix& x, const Matrix& y);
Vec vec_times(const FiniteField& F, const Vec& v, const Matrix& m);
bool is_zero(const Vec& v);

// Reduced row echelon form in place; zero rows are removed. Returns pivots.
std::vector<int> rref(const FiniteField& F, Matrix& m);
int rank(const FiniteField& F, Matrix m);

// Basis (rows) of { x : A x^T = 0 }.
Matrix nullspace(const FiniteField& F, const Matrix& A);
// Basis (rows) of { c : c R = 0 }. Rows of R that are already zero are
// passed through without elimination work.
Matrix left_kernel(const FiniteField& F, const Matrix& R);

struct SolutionSpace {
  std::optional<Vec> particular;  // empty when inconsistent
  Matrix basis;                   // homogeneous solutions
  int dimension() const { return particular ? basis.rows : -1; }
};
// Solves A x^T = b^T.
SolutionSpace solve_linear(const FiniteField& F, const Matrix& A, const Vec& b);

// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const FiniteField& F, const Matrix& m);

// Row space kept in reduced echelon form; the form is canonical so equality
// of subspaces is equality of bases.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const Field& F, int n) : F_(F), basis_(0, n) {}
  static Subspace span(const Field& F, int n, const std::vector<Vec>& gens);
  static Subspace span(const Field& F, Matrix gens);
  static Subspace full(const Field& F, int n);

  int ambient_dim() const { return basis_.cols; }
  int dim() const { return basis_.rows; }
  const Matrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  const Field& field() const { return F_; }

  // Remainder of v after clearing pivot columns; zero iff v is in the span.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }
  // Coefficients c with c * basis = v, if v lies in the span.
  std::optional<Vec> coordinates(const Vec& v) const;
  bool contains(const Subspace& o) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

 private:
  Field F_;
  Matrix basis_;
  std::vector<int> pivots_;
};

// Solver for x A = y when A is fixed: image in echelon form plus, for each
// echelon row, the combination of rows of A producing it.
class RowSolver {
 public:
  RowSolver() = default;
  RowSolver(const Field& F, const Matrix& A);
  const Subspace& image() const { return image_; }
  // Some x with x A = y, or nullopt if y is not in the row space.
  std::optional<Vec> solve(const Vec& y) const;
  // Basis of { x : x A = 0 }.
  const Matrix& kernel() const { return kernel_; }

 private:
  Subspace image_;
  Matrix combos_;
  Matrix kernel_;
};

}  // namespace breuil
