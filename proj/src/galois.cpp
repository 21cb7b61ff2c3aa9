#include "galie/galois.hpp"

#include <algorithm>
#include <map>

namespace galie {

namespace {

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      if (a[i] < b[i]) return true;
      if (b[i] < a[i]) return false;
    }
    return a.size() < b.size();
  }
};

Vec element_key(const GaloisElement& e) {
  Vec k = flatten(e.sigma);
  Vec r = flatten(e.r);
  k.insert(k.end(), r.begin(), r.end());
  return k;
}

// group table from the composition law (σ,r)·(σ',r') = (σσ', rσ' + r')
FiniteGroupTable build_table(std::vector<GaloisElement>& elems, const Field& f, std::size_t n,
                             std::size_t m) {
  std::sort(elems.begin(), elems.end(), [](const GaloisElement& a, const GaloisElement& b) {
    return VecLess{}(element_key(a), element_key(b));
  });
  std::map<Vec, std::size_t, VecLess> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(element_key(elems[i]), i);
  GaloisElement id{Matrix::identity(f, m), Matrix(f, n, m)};
  auto idit = index.find(element_key(id));
  if (idit == index.end()) throw std::logic_error("galois group does not contain the identity");
  FiniteGroupTable t;
  t.n = elems.size();
  t.id = idit->second;
  t.mul.assign(t.n * t.n, 0);
  t.inv.assign(t.n, 0);
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j) {
      GaloisElement prod{elems[i].sigma * elems[j].sigma,
                         elems[i].r * elems[j].sigma + elems[j].r};
      auto it = index.find(element_key(prod));
      if (it == index.end()) throw std::logic_error("galois group is not closed");
      t.mul[i * t.n + j] = it->second;
      if (it->second == t.id) t.inv[i] = j;
    }
  return t;
}

}  // namespace

bool is_galois_pair(const Extension& ext, const ExtendingSystem& sys, const Matrix& sigma,
                    const Matrix& r) {
  const Field& f = ext.h.field();
  const std::size_t n = ext.n(), m = ext.m();
  if (sigma.rows() != m || sigma.cols() != m || r.rows() != n || r.cols() != m)
    throw std::invalid_argument("is_galois_pair: shape mismatch");
  if (!invert(sigma)) return false;
  auto eg = [&](std::size_t i) { return unit_vec(f, n, i); };
  auto exv = [&](std::size_t x) { return unit_vec(f, m, x); };
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t g = 0; g < n; ++g) {
      const Vec& w = sys.right[x * n + g];
      // (G1)
      if (sigma.apply(w) != sys.ract(sigma.col(x), eg(g))) return false;
      // (G2)
      Vec rhs = ext.g.bracket(r.col(x), eg(g));
      rhs = add(rhs, sys.lact(sub(sigma.col(x), exv(x)), eg(g)));
      if (r.apply(w) != rhs) return false;
    }
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = x + 1; y < m; ++y) {
      const Vec& br = sys.vbr[x * m + y];
      Vec sx = sigma.col(x), sy = sigma.col(y);
      // (G3)
      Vec rhs = sys.vbracket(sx, sy);
      rhs = add(rhs, sys.ract(sx, r.col(y)));
      rhs = sub(rhs, sys.ract(sy, r.col(x)));
      if (sigma.apply(br) != rhs) return false;
      // (G4)
      Vec rhs4 = ext.g.bracket(r.col(x), r.col(y));
      rhs4 = add(rhs4, sys.lact(sx, r.col(y)));
      rhs4 = sub(rhs4, sys.lact(sy, r.col(x)));
      rhs4 = add(rhs4, sys.cocycle(sx, sy));
      rhs4 = sub(rhs4, sys.theta[x * m + y]);
      if (r.apply(br) != rhs4) return false;
    }
  return true;
}

Matrix omega(const Extension& ext, const GaloisElement& el) {
  const Field& f = ext.h.field();
  const std::size_t n = ext.n(), m = ext.m(), d = n + m;
  Matrix t = Matrix::identity(f, d);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t i = 0; i < n; ++i) t.at(i, n + x) = el.r.at(i, x);
    for (std::size_t y = 0; y < m; ++y) t.at(n + y, n + x) = el.sigma.at(y, x);
    t.at(n + x, n + x) = el.sigma.at(x, x);
  }
  return ext.A * t * ext.A_inv;
}

GaloisGroup galois_group_structured(const Extension& ext, std::uint64_t budget) {
  const Field& f = ext.h.field();
  const std::size_t n = ext.n(), m = ext.m();
  ExtendingSystem sys = canonical_extending_system(ext);
  const std::size_t nu = m * m + n * m;  // unknowns: σ row-major, then r row-major
  auto sidx = [&](std::size_t a, std::size_t b) { return a * m + b; };
  auto ridx = [&](std::size_t i, std::size_t x) { return m * m + i * m + x; };
  std::vector<Vec> rows;
  Vec rhs_col;
  // (G1): σ(x↼g) − σ(x)↼g = 0, component c in V
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t g = 0; g < n; ++g) {
      const Vec& w = sys.right[x * n + g];
      for (std::size_t c = 0; c < m; ++c) {
        Vec row = zero_vec(f, nu);
        for (std::size_t b = 0; b < m; ++b) row[sidx(c, b)] += w[b];
        for (std::size_t y = 0; y < m; ++y) row[sidx(y, x)] -= sys.right[y * n + g][c];
        rows.push_back(std::move(row));
        rhs_col.push_back(Scalar::zero(f));
      }
    }
  // (G2): r(x↼g) − [r(x),g] − σ(x)⇀g = −(x⇀g), component c in g
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t g = 0; g < n; ++g) {
      const Vec& w = sys.right[x * n + g];
      for (std::size_t c = 0; c < n; ++c) {
        Vec row = zero_vec(f, nu);
        for (std::size_t b = 0; b < m; ++b) row[ridx(c, b)] += w[b];
        for (std::size_t i = 0; i < n; ++i) row[ridx(i, x)] -= ext.g.basis_bracket(i, g)[c];
        for (std::size_t y = 0; y < m; ++y) row[sidx(y, x)] -= sys.left[y * n + g][c];
        rows.push_back(std::move(row));
        rhs_col.push_back(-sys.left[x * n + g][c]);
      }
    }
  Matrix a = Matrix::from_rows(f, rows);
  auto sol = solve_linear(a, Matrix::column(rhs_col));
  if (!sol) throw std::logic_error("galois_group_structured: linear axioms inconsistent");
  const std::size_t d = sol->kernel.dim();
  std::uint64_t total = 1;
  if (d > 0) {
    if (f.is_rationals())
      throw InfiniteFieldError(
          "galois_group_structured: affine solution space is positive-dimensional over Q");
    for (std::size_t i = 0; i < d; ++i) {
      if (total > budget / f.p + 1) total = budget + 1;
      else total *= f.p;
      if (total > budget)
        throw BudgetExceededError("galois_group_structured: " + std::to_string(d) +
                                  " free parameters exceed the candidate budget of " +
                                  std::to_string(budget));
    }
  }
  std::vector<GaloisElement> elems;
  std::vector<std::uint32_t> digits(d, 0);
  while (true) {
    Vec u = sol->particular.col(0);
    for (std::size_t k = 0; k < d; ++k)
      if (digits[k] != 0)
        u = add(u, scale(Scalar::residue(f, digits[k]), sol->kernel.basis().row(k)));
    Matrix sigma(f, m, m), r(f, n, m);
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) sigma.at(x, y) = u[sidx(x, y)];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t x = 0; x < m; ++x) r.at(i, x) = u[ridx(i, x)];
    if (is_galois_pair(ext, sys, sigma, r)) elems.push_back({sigma, r});
    // advance base-p counter
    std::size_t k = 0;
    while (k < d && ++digits[k] == f.p) digits[k++] = 0;
    if (k == d) break;
  }
  GaloisGroup grp{ext, std::move(elems), {}, total};
  grp.table = build_table(grp.elements, f, n, m);
  return grp;
}

ModpExtensionTable adapted_modp_table(const Extension& ext) {
  const Field& f = ext.h.field();
  if (!f.is_prime_field())
    throw InfiniteFieldError("adapted_modp_table: finite field required");
  const std::size_t d = ext.n() + ext.m();
  ModpExtensionTable t;
  t.p = f.p;
  t.n = ext.n();
  t.m = ext.m();
  t.bracket.assign(d * d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      Vec br = ext.to_adapted(ext.h.bracket(ext.A.col(i), ext.A.col(j)));
      for (std::size_t k = 0; k < d; ++k) t.bracket[(i * d + j) * d + k] = br[k].residue_value();
    }
  return t;
}

GaloisGroup galois_group_direct(const Extension& ext, std::uint64_t budget, bool parallel) {
  const Field& f = ext.h.field();
  if (!f.is_rationals() && f.p == 0) throw std::logic_error("bad field");
  ModpExtensionTable t = adapted_modp_table(ext);  // throws over Q
  const std::size_t n = ext.n(), m = ext.m();
  if ((n + m) * m > 64)
    throw BudgetExceededError("galois_group_direct: candidate encoding exceeds 64 digits");
  std::uint64_t total = t.candidate_count();
  if (total > budget)
    throw BudgetExceededError("galois_group_direct: " + std::to_string(total) +
                              " candidates exceed the budget of " + std::to_string(budget));
  std::vector<std::uint64_t> hits =
      parallel ? modp_scan_parallel(t, 0, total) : modp_scan_serial(t, 0, total);
  std::vector<GaloisElement> elems;
  for (std::uint64_t cand : hits) {
    Matrix sigma(f, m, m), r(f, n, m);
    std::uint64_t c = cand;
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t x = 0; x < m; ++x) {
        sigma.at(y, x) = Scalar::residue(f, static_cast<std::uint32_t>(c % f.p));
        c /= f.p;
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t x = 0; x < m; ++x) {
        r.at(i, x) = Scalar::residue(f, static_cast<std::uint32_t>(c % f.p));
        c /= f.p;
      }
    elems.push_back({sigma, r});
  }
  GaloisGroup grp{ext, std::move(elems), {}, total};
  grp.table = build_table(grp.elements, f, n, m);
  return grp;
}

Codim1Group codim1_group(const LieAlgebra& g, const TwistedDerivation& td, std::uint64_t budget) {
  const Field& f = g.field();
  if (!f.is_prime_field())
    throw InfiniteFieldError("codim1_group: u ranges over k^*, finite field required");
  if (!twisted_derivation_check(g, td))
    throw std::invalid_argument("codim1_group: (lambda, delta) is not a twisted derivation");
  const std::size_t n = g.dim();
  // λ(e_j) g0 − [g0, e_j] = (u−1) Δ(e_j): rows (j, c), unknowns g0
  Matrix a(f, n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t k = 0; k < n; ++k) {
        Scalar v = k == c ? td.lambda[j] : Scalar::zero(f);
        v -= g.basis_bracket(k, j)[c];
        a.at(j * n + c, k) = v;
      }
    }
  std::vector<Codim1Element> elems;
  std::uint64_t scanned = 0;
  for (std::uint32_t uu = 1; uu < f.p; ++uu) {
    Scalar u = Scalar::residue(f, uu);
    Vec rhs;
    for (std::size_t j = 0; j < n; ++j) {
      Vec dj = td.delta.col(j);
      for (std::size_t c = 0; c < n; ++c) rhs.push_back((u - Scalar::one(f)) * dj[c]);
    }
    auto sol = solve_linear(a, Matrix::column(rhs));
    if (!sol) continue;
    const std::size_t d = sol->kernel.dim();
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < d; ++i) combos *= f.p;
    scanned += combos;
    if (scanned > budget)
      throw BudgetExceededError("codim1_group: solution walk exceeds the budget of " +
                                std::to_string(budget));
    std::vector<std::uint32_t> digits(d, 0);
    while (true) {
      Vec g0 = sol->particular.col(0);
      for (std::size_t k = 0; k < d; ++k)
        if (digits[k] != 0)
          g0 = add(g0, scale(Scalar::residue(f, digits[k]), sol->kernel.basis().row(k)));
      elems.push_back({u, g0});
      std::size_t k = 0;
      while (k < d && ++digits[k] == f.p) digits[k++] = 0;
      if (k == d) break;
    }
  }
  std::sort(elems.begin(), elems.end(), [](const Codim1Element& x, const Codim1Element& y) {
    if (x.u < y.u) return true;
    if (y.u < x.u) return false;
    return VecLess{}(x.g0, y.g0);
  });
  auto key = [](const Codim1Element& e) {
    Vec k{e.u};
    k.insert(k.end(), e.g0.begin(), e.g0.end());
    return k;
  };
  std::map<Vec, std::size_t, VecLess> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(key(elems[i]), i);
  FiniteGroupTable t;
  t.n = elems.size();
  t.mul.assign(t.n * t.n, 0);
  t.inv.assign(t.n, 0);
  Codim1Element id{Scalar::one(f), zero_vec(f, n)};
  auto idit = index.find(key(id));
  if (idit == index.end()) throw std::logic_error("codim1_group: identity missing");
  t.id = idit->second;
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j) {
      // (u, g)·(u', g') = (uu', u'g + g')
      Codim1Element prod{elems[i].u * elems[j].u,
                         add(scale(elems[j].u, elems[i].g0), elems[j].g0)};
      auto it = index.find(key(prod));
      if (it == index.end()) throw std::logic_error("codim1_group: not closed");
      t.mul[i * t.n + j] = it->second;
      if (it->second == t.id) t.inv[i] = j;
    }
  return Codim1Group{std::move(elems), std::move(t)};
}

Matrix codim1_omega(const LieAlgebra& g, const Codim1Element& el) {
  const Field& f = g.field();
  const std::size_t n = g.dim();
  Matrix m = Matrix::identity(f, n + 1);
  for (std::size_t i = 0; i < n; ++i) m.at(i, n) = el.g0[i];
  m.at(n, n) = el.u;
  return m;
}

RadicalChainReport verify_radical_chain(const LieAlgebra& h, const std::vector<Subspace>& chain,
                                        std::uint64_t budget) {
  RadicalChainReport rep;
  auto fail = [&](const std::string& why) {
    rep.chain_valid = false;
    rep.invalid_reason = why;
    return rep;
  };
  if (chain.size() < 2) return fail("chain needs at least two terms");
  if (chain.back().dim() != h.dim()) return fail("last term must be the whole algebra");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i].ambient() != h.dim()) return fail("term " + std::to_string(i) + " has wrong ambient");
    if (!is_subalgebra(h, chain[i]))
      return fail("term " + std::to_string(i) + " is not a subalgebra");
    if (i > 0) {
      if (!chain[i].contains(chain[i - 1]))
        return fail("term " + std::to_string(i) + " does not contain its predecessor");
      if (chain[i].dim() != chain[i - 1].dim() + 1)
        return fail("step " + std::to_string(i) + " is not of codimension 1");
    }
  }
  rep.chain_valid = true;
  // per-step Galois groups Gal(h_i / h_{i-1}), each of codimension 1
  for (std::size_t i = 1; i < chain.size(); ++i) {
    LieAlgebra hi = restrict_to_subalgebra(h, chain[i]);
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < chain[i - 1].dim(); ++r)
      rows.push_back(*chain[i].coordinates(chain[i - 1].basis().row(r)));
    Subspace base = rows.empty() ? Subspace::zero(h.field(), chain[i].dim())
                                 : Subspace::row_span(Matrix::from_rows(h.field(), rows));
    GaloisGroup gi = galois_group_direct(make_extension(hi, base), budget);
    RadicalChainStep step;
    step.galois_order = gi.order();
    step.metabelian = group_analysis(gi.table).metabelian;
    rep.steps.push_back(step);
  }
  // the full group and stability of the intermediate terms
  Extension full_ext = make_extension(h, chain.front());
  GaloisGroup full = galois_group_direct(full_ext, budget);
  rep.galois_order = full.order();
  rep.solvable = group_analysis(full.table).solvable;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    bool stable = true;
    for (const auto& el : full.elements) {
      Matrix w = omega(full_ext, el);
      for (std::size_t r = 0; r < chain[i - 1].dim() && stable; ++r)
        if (!chain[i - 1].contains(w.apply(chain[i - 1].basis().row(r)))) stable = false;
      if (!stable) break;
    }
    rep.steps[i - 1].stable = stable;
  }
  return rep;
}

}  // namespace galie
