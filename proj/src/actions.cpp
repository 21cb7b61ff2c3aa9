#include "galie/actions.hpp"

#include <map>

namespace galie {

namespace {

struct MatrixLess {
  bool operator()(const Matrix& a, const Matrix& b) const { return a.lex_less(b); }
};

}  // namespace

GroupAction close_group(const LieAlgebra& h, const std::vector<Matrix>& generators,
                        std::size_t cap) {
  const Field& f = h.field();
  const std::size_t d = h.dim();
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (!is_automorphism(h, generators[i]))
      throw std::invalid_argument("close_group: generator " + std::to_string(i + 1) +
                                  " is not a Lie algebra automorphism");
  std::vector<Matrix> elems;
  std::map<Matrix, std::size_t, MatrixLess> index;
  auto push = [&](const Matrix& m) {
    auto it = index.find(m);
    if (it != index.end()) return it->second;
    if (elems.size() >= cap)
      throw std::runtime_error("close_group: closure exceeds cap of " + std::to_string(cap));
    elems.push_back(m);
    index.emplace(m, elems.size() - 1);
    return elems.size() - 1;
  };
  push(Matrix::identity(f, d));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : generators) push(elems[i] * g);
  const std::size_t n = elems.size();
  FiniteGroupTable table;
  table.n = n;
  table.id = 0;
  table.mul.assign(n * n, 0);
  table.inv.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find(elems[i] * elems[j]);
      if (it == index.end()) throw std::logic_error("close_group: set not closed");
      table.mul[i * n + j] = it->second;
      if (it->second == 0) table.inv[i] = j;
    }
  return GroupAction{h, std::move(elems), std::move(table)};
}

Subspace invariants(const GroupAction& a) {
  const Field& f = a.h.field();
  const std::size_t d = a.h.dim(), n = a.order();
  Matrix sys(f, n * d, d);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Scalar v = a.elements[g].at(i, j);
        if (i == j) v -= Scalar::one(f);
        sys.at(g * d + i, j) = v;
      }
  auto sol = solve_linear(sys, Matrix(f, sys.rows(), 1));
  return sol->kernel;
}

ReynoldsData reynolds(const GroupAction& a) {
  const Field& f = a.h.field();
  const std::size_t d = a.h.dim();
  Scalar order = Scalar::from_int(f, static_cast<long long>(a.order()));
  if (order.is_zero())
    throw ModularCaseError("reynolds: group order " + std::to_string(a.order()) +
                           " is not invertible in " + f.to_string());
  Matrix sum(f, d, d);
  for (const auto& m : a.elements) sum = sum + m;
  Matrix t = sum * order.inverse();
  ReynoldsData r;
  r.t = t;
  r.inv = Subspace::row_span(t.transpose());
  auto sol = solve_linear(t, Matrix(f, d, 1));
  r.kernel = sol->kernel;
  return r;
}

Subspace twist_image(const GroupAction& a, std::size_t gamma) {
  const Field& f = a.h.field();
  const std::size_t d = a.h.dim();
  Matrix m = Matrix::identity(f, d) - a.elements.at(gamma);
  return Subspace::row_span(m.transpose());
}

bool hilbert90_check(const GroupAction& a, std::size_t gamma) {
  if (a.table.element_order(gamma) != a.order())
    throw std::invalid_argument("hilbert90_check: the chosen element does not generate the group");
  return reynolds(a).kernel == twist_image(a, gamma);
}

bool gamma_abelian_check(const GroupAction& a, std::size_t gamma) {
  Subspace hg = twist_image(a, gamma);
  for (std::size_t g = 0; g < a.order(); ++g)
    for (std::size_t gp = 0; gp < a.order(); ++gp) {
      if (g == gp) continue;
      for (std::size_t i = 0; i < hg.dim(); ++i)
        for (std::size_t j = 0; j < hg.dim(); ++j) {
          Vec z = a.elements[g].apply(hg.basis().row(i));
          Vec zp = a.elements[gp].apply(hg.basis().row(j));
          if (!is_zero(a.h.bracket(z, zp))) return false;
        }
    }
  return true;
}

ArtinResult artin_reconstruct(const GroupAction& a) {
  ReynoldsData rd = reynolds(a);
  Extension ext = make_extension(a.h, rd.inv, rd.kernel.basis());
  ExtendingSystem sys = canonical_extending_system(ext);
  ArtinResult res{ext, sys, check_skew_axioms(ext.g, sys), classify(sys), true, false};
  const Field& f = a.h.field();
  Scalar inv_order = Scalar::from_int(f, static_cast<long long>(a.order())).inverse();
  const std::size_t n = ext.n(), m = ext.m();
  for (std::size_t x = 0; x < m && res.theta_matches; ++x)
    for (std::size_t y = x + 1; y < m && res.theta_matches; ++y) {
      Vec avg = zero_vec(f, a.h.dim());
      for (const auto& g : a.elements)
        avg = add(avg, a.h.bracket(g.apply(ext.v_rows.row(x)), g.apply(ext.v_rows.row(y))));
      avg = scale(inv_order, avg);
      Vec ad = ext.to_adapted(avg);
      for (std::size_t i = 0; i < n; ++i)
        if (ad[i] != sys.theta[x * m + y][i]) res.theta_matches = false;
      for (std::size_t i = n; i < n + m; ++i)
        if (!ad[i].is_zero()) res.theta_matches = false;
    }
  res.phi_ok = phi_iso_check(ext);
  return res;
}

CyclicStructureResult cyclic_structure(const GroupAction& a, std::size_t gamma) {
  CyclicStructureResult r;
  r.cyclic = a.table.element_order(gamma) == a.order();
  if (!r.cyclic) return r;
  r.hilbert90 = hilbert90_check(a, gamma);
  r.gamma_abelian = gamma_abelian_check(a, gamma);
  if (!r.hilbert90) return r;
  ReynoldsData rd = reynolds(a);
  Extension ext = make_extension(a.h, rd.inv, twist_image(a, gamma).basis());
  ExtendingSystem sys = canonical_extending_system(ext);
  r.theta_trivial = sys.theta_trivial();
  r.ideal = is_ideal(a.h, twist_image(a, gamma));
  r.semidirect_iso = classify(sys) == ProductKind::Semidirect && phi_iso_check(ext);
  return r;
}

Matrix gl_conjugation(const Field& f, std::size_t n, const Matrix& m) {
  auto minv = invert(m);
  if (!minv) throw std::invalid_argument("gl_conjugation: matrix is singular");
  Matrix res(f, n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Matrix e(f, n, n);
      e.at(a, b) = Scalar::one(f);
      Vec img = flatten(m * e * *minv);
      for (std::size_t k = 0; k < n * n; ++k) res.at(k, a * n + b) = img[k];
    }
  return res;
}

Matrix gl_permutation(const Field& f, const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  Matrix res(f, n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      res.at(perm[i] * n + perm[j], i * n + j) = Scalar::one(f);
  return res;
}

Matrix sl2_scaling(const Field& f, const Scalar& u) {
  Matrix m(f, 3, 3);
  m.at(0, 0) = u.inverse();
  m.at(1, 1) = u;
  m.at(2, 2) = Scalar::one(f);
  return m;
}

}  // namespace galie
