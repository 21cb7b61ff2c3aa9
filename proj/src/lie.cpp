#include "galie/lie.hpp"

#include <sstream>

namespace galie {

std::string JacobiViolation::describe() const {
  std::ostringstream os;
  os << "Jacobi identity fails on basis triple (" << i + 1 << "," << j + 1 << "," << k + 1
     << ") with Jacobiator";
  for (const auto& c : jacobiator) os << " " << c.to_string();
  return os.str();
}

Vec LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw std::invalid_argument("basis_bracket: index out of range");
  if (i == j) return zero_vec(field_, dim_);
  if (i < j) return table_[pair_index(i, j)];
  Vec v = table_[pair_index(j, i)];
  for (auto& c : v) c = -c;
  return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("bracket: dimension mismatch");
  Vec r = zero_vec(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      Scalar c = x[i] * y[j];
      Vec bb = basis_bracket(i, j);
      for (std::size_t k = 0; k < dim_; ++k)
        if (!bb[k].is_zero()) r[k] += c * bb[k];
    }
  }
  return r;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = bracket(x, unit_vec(field_, dim_, j));
    for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

std::variant<LieAlgebra, JacobiViolation> make_lie_algebra(
    Field f, std::size_t dim, const std::vector<BracketEntry>& entries,
    std::vector<std::string> names) {
  LieAlgebra l;
  l.field_ = f;
  l.dim_ = dim;
  if (names.empty())
    for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  if (names.size() != dim) throw std::invalid_argument("make_lie_algebra: name count mismatch");
  l.names_ = std::move(names);
  l.table_.assign(dim * dim, Vec{});
  std::vector<bool> seen(dim * dim, false);
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim) throw std::invalid_argument("make_lie_algebra: index out of range");
    if (e.i >= e.j) throw std::invalid_argument("make_lie_algebra: entries require i < j");
    if (e.value.size() != dim) throw std::invalid_argument("make_lie_algebra: bracket value length mismatch");
    for (const auto& c : e.value)
      if (!(c.field() == f)) throw std::invalid_argument("make_lie_algebra: scalar field mismatch");
    std::size_t idx = e.i * dim + e.j;
    if (seen[idx]) throw std::invalid_argument("make_lie_algebra: duplicate entry (" +
                                               std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) + ")");
    seen[idx] = true;
    l.table_[idx] = e.value;
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      if (l.table_[i * dim + j].empty()) l.table_[i * dim + j] = zero_vec(f, dim);
  // Jacobi on all C(n,3) triples
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = j + 1; k < dim; ++k) {
        Vec s = l.bracket(l.basis_bracket(i, j), unit_vec(f, dim, k));
        s = add(s, l.bracket(l.basis_bracket(j, k), unit_vec(f, dim, i)));
        s = add(s, l.bracket(l.basis_bracket(k, i), unit_vec(f, dim, j)));
        if (!is_zero(s)) return JacobiViolation{i, j, k, s};
      }
  return l;
}

LieAlgebra require_lie_algebra(Field f, std::size_t dim, const std::vector<BracketEntry>& entries,
                               std::vector<std::string> names) {
  auto r = make_lie_algebra(f, dim, entries, std::move(names));
  if (auto* v = std::get_if<JacobiViolation>(&r))
    throw std::logic_error("internal construction is not a Lie algebra: " + v->describe());
  return std::get<LieAlgebra>(std::move(r));
}

Subspace derived_subalgebra(const LieAlgebra& l) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) rows.push_back(l.basis_bracket(i, j));
  Matrix m = rows.empty() ? Matrix(l.field(), 0, l.dim()) : Matrix::from_rows(l.field(), rows);
  return Subspace::row_span(m);
}

namespace {

Subspace kernel_of_stacked_ads(const LieAlgebra& l, const std::vector<Vec>& generators) {
  const std::size_t n = l.dim();
  if (generators.empty()) return Subspace::full(l.field(), n);
  Matrix sys(l.field(), generators.size() * n, n);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    Matrix adg = l.ad(generators[g]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sys.at(g * n + i, j) = adg.at(i, j);
  }
  auto sol = solve_linear(sys, Matrix(l.field(), sys.rows(), 1));
  return sol->kernel;
}

}  // namespace

Subspace center(const LieAlgebra& l) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < l.dim(); ++i) gens.push_back(unit_vec(l.field(), l.dim(), i));
  return kernel_of_stacked_ads(l, gens);
}

Subspace centralizer(const LieAlgebra& l, const Subspace& s) {
  if (s.ambient() != l.dim()) throw std::invalid_argument("centralizer: ambient mismatch");
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < s.dim(); ++i) gens.push_back(s.basis().row(i));
  return kernel_of_stacked_ads(l, gens);
}

Subspace derivations(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  const Field& f = l.field();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  Matrix sys(f, pairs.size() * n, n * n);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs[p];
    Vec cij = l.basis_bracket(i, j);
    for (std::size_t r = 0; r < n; ++r) {
      std::size_t row = p * n + r;
      // D([e_i,e_j]) term: component r = sum_b cij_b D[r][b]
      for (std::size_t b = 0; b < n; ++b)
        if (!cij[b].is_zero()) sys.at(row, r * n + b) += cij[b];
      // -[D e_i, e_j] and -[e_i, D e_j]
      for (std::size_t s = 0; s < n; ++s) {
        Vec csj = l.basis_bracket(s, j);
        if (!csj[r].is_zero()) sys.at(row, s * n + i) -= csj[r];
        Vec cis = l.basis_bracket(i, s);
        if (!cis[r].is_zero()) sys.at(row, s * n + j) -= cis[r];
      }
    }
  }
  auto sol = solve_linear(sys, Matrix(f, sys.rows(), 1));
  return sol->kernel;
}

std::optional<Vec> is_inner(const LieAlgebra& l, const Matrix& d) {
  const std::size_t n = l.dim();
  if (d.rows() != n || d.cols() != n) throw std::invalid_argument("is_inner: shape mismatch");
  // ad_x[r][c] = sum_k x_k [e_k, e_c]_r
  Matrix sys(l.field(), n * n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t c = 0; c < n; ++c) {
      Vec ckc = l.basis_bracket(k, c);
      for (std::size_t r = 0; r < n; ++r) sys.at(r * n + c, k) = ckc[r];
    }
  auto sol = solve_linear(sys, Matrix::column(flatten(d)));
  if (!sol) return std::nullopt;
  return sol->particular.col(0);
}

namespace {

Subspace inner_derivations(const LieAlgebra& l) {
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < l.dim(); ++k)
    rows.push_back(flatten(l.ad(unit_vec(l.field(), l.dim(), k))));
  return Subspace::row_span(Matrix::from_rows(l.field(), rows));
}

// Derived subspace of a bracket-closed subspace, inside the ambient algebra.
Subspace derived_of(const LieAlgebra& l, const Subspace& s) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      rows.push_back(l.bracket(s.basis().row(i), s.basis().row(j)));
  Matrix m = rows.empty() ? Matrix(l.field(), 0, l.dim()) : Matrix::from_rows(l.field(), rows);
  return Subspace::row_span(m);
}

}  // namespace

StructuralReport structural_predicates(const LieAlgebra& l) {
  StructuralReport r;
  Subspace d = derived_subalgebra(l);
  r.perfect = d.dim() == l.dim();
  r.abelian = d.dim() == 0;
  r.derived_series_dims.push_back(l.dim());
  Subspace cur = Subspace::full(l.field(), l.dim());
  while (true) {
    Subspace next = derived_of(l, cur);
    if (next == cur) break;
    r.derived_series_dims.push_back(next.dim());
    cur = next;
    if (next.dim() == 0) break;
  }
  r.solvable = cur.dim() == 0;
  r.nilpotent_center_free = center(l).dim() == 0;
  r.all_derivations_inner = derivations(l) == inner_derivations(l);
  r.complete = r.nilpotent_center_free && r.all_derivations_inner;
  r.sympathetic = r.perfect && r.complete;
  return r;
}

bool is_subalgebra(const LieAlgebra& l, const Subspace& s) {
  if (s.ambient() != l.dim()) throw std::invalid_argument("is_subalgebra: ambient mismatch");
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (!s.contains(l.bracket(s.basis().row(i), s.basis().row(j)))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& l, const Subspace& s) {
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (!s.contains(l.bracket(unit_vec(l.field(), l.dim(), i), s.basis().row(j)))) return false;
  return true;
}

bool is_automorphism(const LieAlgebra& l, const Matrix& m) { return is_isomorphism(l, l, m); }

bool is_isomorphism(const LieAlgebra& a, const LieAlgebra& b, const Matrix& m) {
  if (a.dim() != b.dim()) return false;
  if (m.rows() != a.dim() || m.cols() != a.dim())
    throw std::invalid_argument("is_isomorphism: shape mismatch");
  if (!invert(m)) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      Vec lhs = m.apply(a.basis_bracket(i, j));
      Vec rhs = b.bracket(m.col(i), m.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

LieAlgebra restrict_to_subalgebra(const LieAlgebra& l, const Subspace& s) {
  if (!is_subalgebra(l, s)) throw std::invalid_argument("restrict_to_subalgebra: not bracket-closed");
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j) {
      Vec br = l.bracket(s.basis().row(i), s.basis().row(j));
      auto coords = s.coordinates(br);
      entries.push_back(BracketEntry{i, j, *coords});
    }
  return require_lie_algebra(l.field(), s.dim(), entries);
}

namespace {

std::vector<BracketEntry> heisenberg_entries(const Field& f, std::size_t n) {
  // basis x_1..x_n, y_1..y_n, w
  std::vector<BracketEntry> e;
  const std::size_t dim = 2 * n + 1;
  for (std::size_t i = 0; i < n; ++i) {
    Vec w = zero_vec(f, dim);
    w[2 * n] = Scalar::one(f);
    e.push_back(BracketEntry{i, n + i, w});
  }
  return e;
}

std::vector<std::string> heisenberg_names(std::size_t n, const std::string& last) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  names.push_back(last);
  return names;
}

LieAlgebra build_gl(const Field& f, std::size_t n) {
  const std::size_t dim = n * n;
  auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
  std::vector<BracketEntry> entries;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b) {
      std::size_t i = a / n, j = a % n, k = b / n, l = b % n;
      // [e_ij, e_kl] = d_jk e_il - d_li e_kj
      Vec v = zero_vec(f, dim);
      if (j == k) v[idx(i, l)] += Scalar::one(f);
      if (l == i) v[idx(k, j)] -= Scalar::one(f);
      if (!is_zero(v)) entries.push_back(BracketEntry{a, b, v});
    }
  return require_lie_algebra(f, dim, entries, names);
}

// Structure constants from an explicit matrix basis (used by sl(m), m > 2).
LieAlgebra from_matrix_basis(const Field& f, const std::vector<Matrix>& basis,
                             std::vector<std::string> names) {
  std::vector<Vec> flat;
  for (const auto& b : basis) flat.push_back(flatten(b));
  Subspace span = Subspace::row_span(Matrix::from_rows(f, flat));
  if (span.dim() != basis.size()) throw std::logic_error("from_matrix_basis: dependent basis");
  // coordinates in the given (not canonical) basis: solve B^T c = v
  Matrix bt = Matrix::from_rows(f, flat).transpose();
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Matrix comm = basis[i] * basis[j] - basis[j] * basis[i];
      auto sol = solve_linear(bt, Matrix::column(flatten(comm)));
      if (!sol) throw std::logic_error("from_matrix_basis: not closed under commutator");
      entries.push_back(BracketEntry{i, j, sol->particular.col(0)});
    }
  return require_lie_algebra(f, basis.size(), entries, std::move(names));
}

LieAlgebra build_sl(const Field& f, std::size_t m) {
  if (m == 2) {
    // classical presentation: [e1,e2] = e3, [e1,e3] = -2 e1, [e2,e3] = 2 e2
    Vec a = zero_vec(f, 3), b = zero_vec(f, 3), c = zero_vec(f, 3);
    a[2] = Scalar::one(f);
    b[0] = Scalar::from_int(f, -2);
    c[1] = Scalar::from_int(f, 2);
    return require_lie_algebra(f, 3, {{0, 1, a}, {0, 2, b}, {1, 2, c}});
  }
  std::vector<Matrix> basis;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      Matrix e(f, m, m);
      e.at(i, j) = Scalar::one(f);
      basis.push_back(e);
      names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    Matrix h(f, m, m);
    h.at(i, i) = Scalar::one(f);
    h.at(i + 1, i + 1) = -Scalar::one(f);
    basis.push_back(h);
    names.push_back("h" + std::to_string(i + 1));
  }
  return from_matrix_basis(f, basis, names);
}

LieAlgebra build_t(const Field& f, std::size_t n, bool plus_sign) {
  // basis x_1..x_n, y_1..y_n, w, u; [x_i,y_i] = w, [u,x_i] = [u,y_i] = s (w+u)
  // with s = +1 for "t" and s = -1 for the "t_alt" sign convention on the
  // adjoined generator.
  const std::size_t dim = 2 * n + 2;
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    Vec w = zero_vec(f, dim);
    w[2 * n] = Scalar::one(f);
    entries.push_back(BracketEntry{i, n + i, w});
  }
  Scalar sgn = plus_sign ? Scalar::one(f) : -Scalar::one(f);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    // stored as [x_i, u] = -[u, x_i]
    Vec v = zero_vec(f, dim);
    v[2 * n] = -sgn;
    v[2 * n + 1] = -sgn;
    entries.push_back(BracketEntry{i, 2 * n + 1, v});
  }
  auto names = heisenberg_names(n, "w");
  names.push_back("u");
  return require_lie_algebra(f, dim, entries, names);
}

LieAlgebra build_b(const Field& f, std::size_t n) {
  // basis x_1..x_n, y_1..y_n, w, z; [x_i,y_i] = w, [z,x_i] = y_i
  const std::size_t dim = 2 * n + 2;
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    Vec w = zero_vec(f, dim);
    w[2 * n] = Scalar::one(f);
    entries.push_back(BracketEntry{i, n + i, w});
    Vec v = zero_vec(f, dim);
    v[n + i] = -Scalar::one(f);  // [x_i, z] = -y_i
    entries.push_back(BracketEntry{i, 2 * n + 1, v});
  }
  auto names = heisenberg_names(n, "w");
  names.push_back("z");
  return require_lie_algebra(f, dim, entries, names);
}

LieAlgebra build_glaff(const Field& f, std::size_t n) {
  // gl(n) ⋉ k^n: [e_ij, v_k] = d_jk v_i
  const std::size_t dim = n * n + n;
  std::vector<BracketEntry> entries;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
  for (std::size_t a = 0; a < n * n; ++a)
    for (std::size_t b = a + 1; b < n * n; ++b) {
      std::size_t i = a / n, j = a % n, k = b / n, l = b % n;
      Vec v = zero_vec(f, dim);
      if (j == k) v[idx(i, l)] += Scalar::one(f);
      if (l == i) v[idx(k, j)] -= Scalar::one(f);
      if (!is_zero(v)) entries.push_back(BracketEntry{a, b, v});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (j != k) continue;
        Vec v = zero_vec(f, dim);
        v[n * n + i] = Scalar::one(f);
        entries.push_back(BracketEntry{idx(i, j), n * n + k, v});
      }
  return require_lie_algebra(f, dim, entries, names);
}

LieAlgebra build_fivedim(const Field& f) {
  if (f.characteristic() == 2)
    throw std::invalid_argument("catalog: fivedim_perfect requires characteristic != 2");
  const std::size_t dim = 5;
  auto vec = [&](std::initializer_list<std::pair<std::size_t, long long>> terms) {
    Vec v = zero_vec(f, dim);
    for (auto [i, c] : terms) v[i] = Scalar::from_int(f, c);
    return v;
  };
  std::vector<BracketEntry> entries = {
      {0, 1, vec({{2, 1}})},   // [e1,e2] = e3
      {0, 2, vec({{0, -2}})},  // [e1,e3] = -2 e1
      {0, 4, vec({{3, 1}})},   // [e1,e5] = e4
      {1, 2, vec({{1, 2}})},   // [e2,e3] = 2 e2
      {1, 3, vec({{4, 1}})},   // [e2,e4] = e5
      {2, 3, vec({{3, 1}})},   // [e3,e4] = e4
      {2, 4, vec({{4, -1}})},  // [e3,e5] = -e5
  };
  return require_lie_algebra(f, dim, entries);
}

}  // namespace

Matrix fivedim_delta(const Field& f) {
  Matrix d(f, 5, 5);
  d.at(0, 0) = Scalar::one(f);
  d.at(3, 0) = Scalar::from_int(f, -1);
  d.at(1, 1) = Scalar::from_int(f, -1);
  d.at(4, 2) = Scalar::one(f);
  d.at(3, 3) = Scalar::from_int(f, -1);
  d.at(4, 4) = Scalar::from_int(f, -2);
  return d;
}

void heisenberg_twist(const Field& f, std::size_t n, Vec& lambda, Matrix& delta) {
  const std::size_t dim = 2 * n + 1;
  lambda = zero_vec(f, dim);
  delta = Matrix(f, dim, dim);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    lambda[i] = Scalar::one(f);
    delta.at(2 * n, i) = Scalar::one(f);
  }
}

LieAlgebra holomorph(const LieAlgebra& g) {
  const Field& f = g.field();
  const std::size_t n = g.dim();
  Subspace der = derivations(g);
  const std::size_t d = der.dim();
  std::vector<Matrix> ders;
  for (std::size_t a = 0; a < d; ++a) ders.push_back(unflatten(f, n, n, der.basis().row(a)));
  const std::size_t dim = n + d;
  std::vector<BracketEntry> entries;
  auto pad = [&](const Vec& gv, const Vec& dv) {
    Vec v = gv;
    v.insert(v.end(), dv.begin(), dv.end());
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      entries.push_back(BracketEntry{i, j, pad(g.basis_bracket(i, j), zero_vec(f, d))});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < d; ++a) {
      // [(g_i, 0), (0, D_a)] = (-D_a(g_i), 0)
      Vec gv = ders[a].apply(unit_vec(f, n, i));
      for (auto& c : gv) c = -c;
      entries.push_back(BracketEntry{i, n + a, pad(gv, zero_vec(f, d))});
    }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      Matrix comm = ders[a] * ders[b] - ders[b] * ders[a];
      auto coords = der.coordinates(flatten(comm));
      if (!coords) throw std::logic_error("holomorph: derivations not closed under commutator");
      entries.push_back(BracketEntry{n + a, n + b, pad(zero_vec(f, n), *coords)});
    }
  std::vector<std::string> names = g.basis_names();
  for (std::size_t a = 1; a <= d; ++a) names.push_back("D" + std::to_string(a));
  return require_lie_algebra(f, dim, entries, names);
}

LieAlgebra catalog(const std::string& name, std::size_t n, const Field& f) {
  auto need = [&](bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument("catalog " + name + ": " + msg);
  };
  if (name == "gl") {
    need(n >= 1, "n >= 1 required");
    return build_gl(f, n);
  }
  if (name == "sl") {
    need(n >= 2, "n >= 2 required");
    return build_sl(f, n);
  }
  if (name == "heisenberg") {
    need(n >= 1, "n >= 1 required");
    return require_lie_algebra(f, 2 * n + 1, heisenberg_entries(f, n), heisenberg_names(n, "w"));
  }
  if (name == "l") {
    need(n >= 1, "n >= 1 required");
    const std::size_t dim = 2 * n + 1;
    std::vector<BracketEntry> entries;
    for (std::size_t i = 0; i < n; ++i) {
      Vec ei = zero_vec(f, dim);
      ei[i] = Scalar::one(f);
      entries.push_back(BracketEntry{i, 2 * n, ei});  // [E_i, G] = E_i
      Vec fi = zero_vec(f, dim);
      fi[n + i] = -Scalar::one(f);
      entries.push_back(BracketEntry{n + i, 2 * n, fi});  // [F_i, G] = -F_i
    }
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("E" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) names.push_back("F" + std::to_string(i));
    names.push_back("G");
    return require_lie_algebra(f, dim, entries, names);
  }
  if (name == "aff2") {
    Vec v = zero_vec(f, 2);
    v[1] = Scalar::one(f);
    return require_lie_algebra(f, 2, {{0, 1, v}});
  }
  if (name == "fivedim_perfect") return build_fivedim(f);
  if (name == "t") {
    need(n >= 1, "n >= 1 required");
    return build_t(f, n, true);
  }
  if (name == "t_alt") {
    need(n >= 1, "n >= 1 required");
    return build_t(f, n, false);
  }
  if (name == "b") {
    need(n >= 1, "n >= 1 required");
    return build_b(f, n);
  }
  if (name == "glaff") {
    need(n >= 1, "n >= 1 required");
    return build_glaff(f, n);
  }
  throw std::invalid_argument("catalog: unknown algebra name '" + name + "'");
}

}  // namespace galie
