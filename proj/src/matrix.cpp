#include "galie/matrix.hpp"

#include <algorithm>

namespace galie {

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<Vec>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::column(const Vec& v) {
  if (v.empty()) throw std::invalid_argument("Matrix::column: empty vector");
  Matrix m(v[0].field(), v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_, Scalar::zero(field_));
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
    throw std::invalid_argument("Matrix: shape or field mismatch in +");
  Matrix m = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
    throw std::invalid_argument("Matrix: shape or field mismatch in -");
  Matrix m = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || !(field_ == o.field_))
    throw std::invalid_argument("Matrix: shape or field mismatch in *");
  Matrix m(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, j) += aik * o.at(k, j);
    }
  return m;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix m = *this;
  for (auto& x : m.e_) x *= s;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
  Vec r(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::lex_less(const Matrix& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == o.e_[i]) continue;
    return e_[i] < o.e_[i];
  }
  return false;
}

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v(n, Scalar::zero(f));
  v.at(i) = Scalar::one(f);
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec add: size mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec sub: size mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& s, const Vec& a) {
  Vec r = a;
  for (auto& x : r) x *= s;
  return r;
}

bool is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_zero(); });
}

namespace {

struct Echelon {
  Matrix m;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

// In-place Gauss-Jordan to reduced row-echelon form.
Echelon echelon(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (std::size_t j = 0; j < cols; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar fct = m.at(i, c);
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) -= fct * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

}  // namespace

Subspace Subspace::row_span(const Matrix& rows) {
  Echelon e = echelon(rows);
  Subspace s;
  s.ambient_ = rows.cols();
  s.basis_ = Matrix(rows.field(), e.pivots.size(), rows.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) s.basis_.at(i, j) = e.m.at(i, j);
  return s;
}

Subspace Subspace::zero(Field f, std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(f, 0, ambient);
  return s;
}

Subspace Subspace::full(Field f, std::size_t ambient) {
  return row_span(Matrix::identity(f, ambient));
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::coordinates: ambient mismatch");
  // Reduce v against the RREF basis; residual must vanish.
  Vec residual = v;
  Vec coords(dim(), Scalar::zero(basis_.field()));
  for (std::size_t i = 0; i < dim(); ++i) {
    // pivot column of row i = first nonzero column
    std::size_t c = 0;
    while (c < ambient_ && basis_.at(i, c).is_zero()) ++c;
    Scalar coeff = residual[c];
    if (coeff.is_zero()) continue;
    coords[i] = coeff;
    for (std::size_t j = 0; j < ambient_; ++j) residual[j] -= coeff * basis_.at(i, j);
  }
  if (!galie::is_zero(residual)) return std::nullopt;
  return coords;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (ambient_ != o.ambient_ || !(field() == o.field()))
    throw std::invalid_argument("Subspace::sum: ambient or field mismatch");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < dim(); ++i) rows.push_back(basis_.row(i));
  for (std::size_t i = 0; i < o.dim(); ++i) rows.push_back(o.basis_.row(i));
  Matrix stacked = rows.empty() ? Matrix(field(), 0, ambient_) : Matrix::from_rows(field(), rows);
  return row_span(stacked);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient_ != o.ambient_ || !(field() == o.field()))
    throw std::invalid_argument("Subspace::intersect: ambient or field mismatch");
  // v = a^T U = b^T W: kernel of the stacked constraints [U^T | -W^T].
  const std::size_t r1 = dim(), r2 = o.dim();
  if (r1 == 0 || r2 == 0) return Subspace::zero(field(), ambient_);
  Matrix sys(field(), ambient_, r1 + r2);
  for (std::size_t i = 0; i < ambient_; ++i) {
    for (std::size_t j = 0; j < r1; ++j) sys.at(i, j) = basis_.at(j, i);
    for (std::size_t j = 0; j < r2; ++j) sys.at(i, r1 + j) = -o.basis_.at(j, i);
  }
  auto sol = solve_linear(sys, Matrix(field(), ambient_, 1));
  // homogeneous system is always consistent
  const Subspace& ker = sol->kernel;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < ker.dim(); ++i) {
    Vec ab = ker.basis().row(i);
    Vec v(ambient_, Scalar::zero(field()));
    for (std::size_t j = 0; j < r1; ++j)
      for (std::size_t c = 0; c < ambient_; ++c) v[c] += ab[j] * basis_.at(j, c);
    rows.push_back(std::move(v));
  }
  Matrix m = rows.empty() ? Matrix(field(), 0, ambient_) : Matrix::from_rows(field(), rows);
  return row_span(m);
}

RrefResult rref(const Matrix& a) {
  Subspace s = Subspace::row_span(a);
  return RrefResult{s, s.dim()};
}

std::optional<LinearSolution> solve_linear(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_linear: row count mismatch");
  if (!(a.field() == b.field())) throw std::invalid_argument("solve_linear: field mismatch");
  const Field f = a.field();
  const std::size_t n = a.cols(), k = b.cols();
  // augmented [A | B]
  Matrix aug(f, a.rows(), n + k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < k; ++j) aug.at(i, n + j) = b.at(i, j);
  }
  // manual echelon restricted to the A block so pivots never land in B
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < aug.rows(); ++c) {
    std::size_t piv = aug.rows();
    for (std::size_t i = r; i < aug.rows(); ++i)
      if (!aug.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == aug.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < n + k; ++j) std::swap(aug.at(piv, j), aug.at(r, j));
    Scalar inv = aug.at(r, c).inverse();
    for (std::size_t j = 0; j < n + k; ++j) aug.at(r, j) *= inv;
    for (std::size_t i = 0; i < aug.rows(); ++i) {
      if (i == r || aug.at(i, c).is_zero()) continue;
      Scalar fct = aug.at(i, c);
      for (std::size_t j = 0; j < n + k; ++j) aug.at(i, j) -= fct * aug.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  // consistency: zero A-rows must have zero B-part
  for (std::size_t i = r; i < aug.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (!aug.at(i, n + j).is_zero()) return std::nullopt;
  // particular: free variables zero
  Matrix particular(f, n, k);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) particular.at(pivots[i], j) = aug.at(i, n + j);
  // kernel: one generator per free column
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> kernel_rows;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec v(n, Scalar::zero(f));
    v[c] = Scalar::one(f);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -aug.at(i, c);
    kernel_rows.push_back(std::move(v));
  }
  Matrix km = kernel_rows.empty() ? Matrix(f, 0, n) : Matrix::from_rows(f, kernel_rows);
  return LinearSolution{particular, Subspace::row_span(km)};
}

std::optional<Matrix> invert(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("invert: matrix not square");
  auto sol = solve_linear(a, Matrix::identity(a.field(), a.rows()));
  if (!sol || sol->kernel.dim() != 0) return std::nullopt;
  return sol->particular;
}

Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

Matrix unflatten(const Field& f, std::size_t rows, std::size_t cols, const Vec& v) {
  if (v.size() != rows * cols) throw std::invalid_argument("unflatten: size mismatch");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = v[i * cols + j];
  return m;
}

}  // namespace galie
