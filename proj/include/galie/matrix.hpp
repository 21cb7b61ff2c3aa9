#ifndef GALIE_MATRIX_HPP
#define GALIE_MATRIX_HPP

#include <optional>
#include <vector>

#include "galie/field.hpp"

namespace galie {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, const std::vector<Vec>& rows);
  static Matrix column(const Vec& v);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Scalar& s) const;
  Matrix transpose() const;
  /// Matrix-vector product (v as column).
  Vec apply(const Vec& v) const;

  bool operator==(const Matrix& o) const = default;
  bool is_zero() const;
  /// Lexicographic on (rows, cols, entries); used for canonical orderings.
  bool lex_less(const Matrix& o) const;

 private:
  Field field_ = Field::rationals();
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> e_;
};

// -- vector helpers (coordinate vectors over one field) --
Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& s, const Vec& a);
bool is_zero(const Vec& a);

/// A subspace of k^ambient in canonical form: basis rows are the nonzero
/// rows of a reduced row-echelon form, so equal subspaces compare equal.
class Subspace {
 public:
  Subspace() = default;
  /// Canonicalizes the row span of `rows`.
  static Subspace row_span(const Matrix& rows);
  static Subspace zero(Field f, std::size_t ambient);
  static Subspace full(Field f, std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const Field& field() const { return basis_.field(); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in this basis; empty if v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  bool operator==(const Subspace& o) const = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;  // dim x ambient, canonical RREF
};

/// Row-reduction outcome: canonical row space plus rank.
struct RrefResult {
  Subspace row_space;
  std::size_t rank = 0;
};
RrefResult rref(const Matrix& a);

/// All solutions of A X = B as particular + kernel: every solution column is
/// particular column + an element of the kernel subspace of k^{A.cols}.
struct LinearSolution {
  Matrix particular;  // cols(A) x cols(B)
  Subspace kernel;    // subspace of k^{cols(A)}
};
/// Empty optional means the system is inconsistent.
std::optional<LinearSolution> solve_linear(const Matrix& a, const Matrix& b);

/// Empty optional means singular.
std::optional<Matrix> invert(const Matrix& a);

/// Flatten/unflatten between n x m matrices and row-major nm-vectors.
Vec flatten(const Matrix& m);
Matrix unflatten(const Field& f, std::size_t rows, std::size_t cols, const Vec& v);

}  // namespace galie

#endif
