#include "galie/products.hpp"

#include <functional>
#include <sstream>

namespace galie {

ExtendingSystem ExtendingSystem::zero(Field f, std::size_t n, std::size_t m) {
  ExtendingSystem s;
  s.field = f;
  s.n = n;
  s.m = m;
  s.left.assign(m * n, zero_vec(f, n));
  s.right.assign(m * n, zero_vec(f, m));
  s.theta.assign(m * m, zero_vec(f, n));
  s.vbr.assign(m * m, zero_vec(f, m));
  return s;
}

Vec ExtendingSystem::theta_basis(std::size_t x, std::size_t y) const {
  if (x == y) return zero_vec(field, n);
  if (x < y) return theta[x * m + y];
  Vec v = theta[y * m + x];
  for (auto& c : v) c = -c;
  return v;
}

Vec ExtendingSystem::vbr_basis(std::size_t x, std::size_t y) const {
  if (x == y) return zero_vec(field, m);
  if (x < y) return vbr[x * m + y];
  Vec v = vbr[y * m + x];
  for (auto& c : v) c = -c;
  return v;
}

Vec ExtendingSystem::lact(const Vec& x, const Vec& g) const {
  Vec r = zero_vec(field, n);
  for (std::size_t a = 0; a < m; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i].is_zero()) continue;
      r = add(r, scale(x[a] * g[i], left[a * n + i]));
    }
  }
  return r;
}

Vec ExtendingSystem::ract(const Vec& x, const Vec& g) const {
  Vec r = zero_vec(field, m);
  for (std::size_t a = 0; a < m; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i].is_zero()) continue;
      r = add(r, scale(x[a] * g[i], right[a * n + i]));
    }
  }
  return r;
}

Vec ExtendingSystem::cocycle(const Vec& x, const Vec& y) const {
  Vec r = zero_vec(field, n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || x[a].is_zero() || y[b].is_zero()) continue;
      r = add(r, scale(x[a] * y[b], theta_basis(a, b)));
    }
  return r;
}

Vec ExtendingSystem::vbracket(const Vec& x, const Vec& y) const {
  Vec r = zero_vec(field, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || x[a].is_zero() || y[b].is_zero()) continue;
      r = add(r, scale(x[a] * y[b], vbr_basis(a, b)));
    }
  return r;
}

bool ExtendingSystem::left_trivial() const {
  for (const auto& v : left)
    if (!is_zero(v)) return false;
  return true;
}

bool ExtendingSystem::right_trivial() const {
  for (const auto& v : right)
    if (!is_zero(v)) return false;
  return true;
}

bool ExtendingSystem::theta_trivial() const {
  for (const auto& v : theta)
    if (!is_zero(v)) return false;
  return true;
}

bool AxiomReport::all_ok() const {
  for (const auto& a : axioms)
    if (!a.ok) return false;
  return true;
}

std::string AxiomReport::first_failure() const {
  for (const auto& a : axioms)
    if (!a.ok) return a.name + ": " + a.detail;
  return {};
}

namespace {

std::string basis_tuple(std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) s += ",";
    s += std::to_string(i + 1);
    first = false;
  }
  return s + ")";
}

using CheckFn = std::function<bool(std::string&)>;

void run_axiom(AxiomReport& rep, const std::string& name, const CheckFn& fn) {
  AxiomCheck c;
  c.name = name;
  c.ok = fn(c.detail);
  rep.axioms.push_back(std::move(c));
}

}  // namespace

AxiomReport check_extending_axioms(const LieAlgebra& g, const ExtendingSystem& s) {
  if (!(g.field() == s.field) || g.dim() != s.n)
    throw std::invalid_argument("check_extending_axioms: system does not match the algebra");
  const Field& f = s.field;
  const std::size_t n = s.n, m = s.m;
  auto ev = [&](std::size_t i) { return unit_vec(f, n, i); };
  auto ex = [&](std::size_t x) { return unit_vec(f, m, x); };
  AxiomReport rep;

  run_axiom(rep, "L1", [&](std::string& d) {
    // right module law on V: x ↼ [a,b] = (x↼a)↼b − (x↼b)↼a
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          Vec lhs = s.ract(ex(x), g.basis_bracket(a, b));
          Vec rhs = sub(s.ract(s.ract(ex(x), ev(a)), ev(b)),
                        s.ract(s.ract(ex(x), ev(b)), ev(a)));
          if (lhs != rhs) {
            d = "right module law fails at " + basis_tuple({x, a, b});
            return false;
          }
        }
    return true;
  });

  run_axiom(rep, "L2", [&](std::string& d) {
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          Vec lhs = s.lact(ex(x), g.basis_bracket(a, b));
          Vec rhs = g.bracket(s.lact(ex(x), ev(a)), ev(b));
          rhs = add(rhs, g.bracket(ev(a), s.lact(ex(x), ev(b))));
          rhs = add(rhs, s.lact(s.ract(ex(x), ev(a)), ev(b)));
          rhs = sub(rhs, s.lact(s.ract(ex(x), ev(b)), ev(a)));
          if (lhs != rhs) {
            d = "fails at " + basis_tuple({x, a, b});
            return false;
          }
        }
    return true;
  });

  run_axiom(rep, "L3", [&](std::string& d) {
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y)
        for (std::size_t a = 0; a < n; ++a) {
          Vec lhs = s.ract(s.vbr_basis(x, y), ev(a));
          Vec rhs = s.vbracket(ex(x), s.ract(ex(y), ev(a)));
          rhs = add(rhs, s.vbracket(s.ract(ex(x), ev(a)), ex(y)));
          rhs = add(rhs, s.ract(ex(x), s.lact(ex(y), ev(a))));
          rhs = sub(rhs, s.ract(ex(y), s.lact(ex(x), ev(a))));
          if (lhs != rhs) {
            d = "fails at " + basis_tuple({x, y, a});
            return false;
          }
        }
    return true;
  });

  run_axiom(rep, "L4", [&](std::string& d) {
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y)
        for (std::size_t a = 0; a < n; ++a) {
          Vec lhs = s.lact(s.vbr_basis(x, y), ev(a));
          Vec rhs = s.lact(ex(x), s.lact(ex(y), ev(a)));
          rhs = sub(rhs, s.lact(ex(y), s.lact(ex(x), ev(a))));
          rhs = add(rhs, g.bracket(ev(a), s.theta_basis(x, y)));
          rhs = add(rhs, s.cocycle(ex(x), s.ract(ex(y), ev(a))));
          rhs = add(rhs, s.cocycle(s.ract(ex(x), ev(a)), ex(y)));
          if (lhs != rhs) {
            d = "fails at " + basis_tuple({x, y, a});
            return false;
          }
        }
    return true;
  });

  auto circular = [&](auto term, std::size_t len, std::size_t x, std::size_t y, std::size_t z) {
    Vec r = zero_vec(f, len);
    r = add(r, term(x, y, z));
    r = add(r, term(y, z, x));
    r = add(r, term(z, x, y));
    return r;
  };

  run_axiom(rep, "L5", [&](std::string& d) {
    auto term = [&](std::size_t x, std::size_t y, std::size_t z) {
      return add(s.cocycle(ex(x), s.vbr_basis(y, z)), s.lact(ex(x), s.theta_basis(y, z)));
    };
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = x + 1; y < m; ++y)
        for (std::size_t z = y + 1; z < m; ++z)
          if (!is_zero(circular(term, n, x, y, z))) {
            d = "circular sum nonzero at " + basis_tuple({x, y, z});
            return false;
          }
    return true;
  });

  run_axiom(rep, "L6", [&](std::string& d) {
    auto term = [&](std::size_t x, std::size_t y, std::size_t z) {
      return add(s.vbracket(ex(x), s.vbr_basis(y, z)), s.ract(ex(x), s.theta_basis(y, z)));
    };
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = x + 1; y < m; ++y)
        for (std::size_t z = y + 1; z < m; ++z)
          if (!is_zero(circular(term, m, x, y, z))) {
            d = "circular sum nonzero at " + basis_tuple({x, y, z});
            return false;
          }
    return true;
  });

  return rep;
}

AxiomReport check_skew_axioms(const LieAlgebra& g, const ExtendingSystem& s) {
  if (!(g.field() == s.field) || g.dim() != s.n)
    throw std::invalid_argument("check_skew_axioms: system does not match the algebra");
  AxiomReport rep;
  if (!s.left_trivial()) {
    rep.axioms.push_back({"precondition", false, "the left action x ⇀ g is not trivial"});
    return rep;
  }
  const Field& f = s.field;
  const std::size_t n = s.n, m = s.m;
  auto ev = [&](std::size_t i) { return unit_vec(f, n, i); };
  auto ex = [&](std::size_t x) { return unit_vec(f, m, x); };

  run_axiom(rep, "T1", [&](std::string& d) {
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          Vec lhs = s.ract(ex(x), g.basis_bracket(a, b));
          Vec rhs = sub(s.ract(s.ract(ex(x), ev(a)), ev(b)),
                        s.ract(s.ract(ex(x), ev(b)), ev(a)));
          if (lhs != rhs) {
            d = "right module law fails at " + basis_tuple({x, a, b});
            return false;
          }
        }
    return true;
  });

  run_axiom(rep, "T2", [&](std::string& d) {
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y)
        for (std::size_t a = 0; a < n; ++a) {
          Vec lhs = s.ract(s.vbr_basis(x, y), ev(a));
          Vec rhs = add(s.vbracket(ex(x), s.ract(ex(y), ev(a))),
                        s.vbracket(s.ract(ex(x), ev(a)), ex(y)));
          if (lhs != rhs) {
            d = "fails at " + basis_tuple({x, y, a});
            return false;
          }
        }
    return true;
  });

  run_axiom(rep, "T3", [&](std::string& d) {
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y)
        for (std::size_t a = 0; a < n; ++a) {
          Vec lhs = g.bracket(s.theta_basis(x, y), ev(a));
          Vec rhs = add(s.cocycle(ex(x), s.ract(ex(y), ev(a))),
                        s.cocycle(s.ract(ex(x), ev(a)), ex(y)));
          if (lhs != rhs) {
            d = "fails at " + basis_tuple({x, y, a});
            return false;
          }
        }
    return true;
  });

  run_axiom(rep, "T4", [&](std::string& d) {
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = x + 1; y < m; ++y)
        for (std::size_t z = y + 1; z < m; ++z) {
          Vec r = s.cocycle(ex(x), s.vbr_basis(y, z));
          r = add(r, s.cocycle(ex(y), s.vbr_basis(z, x)));
          r = add(r, s.cocycle(ex(z), s.vbr_basis(x, y)));
          if (!is_zero(r)) {
            d = "circular sum nonzero at " + basis_tuple({x, y, z});
            return false;
          }
        }
    return true;
  });

  run_axiom(rep, "T5", [&](std::string& d) {
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = x + 1; y < m; ++y)
        for (std::size_t z = y + 1; z < m; ++z) {
          Vec r = add(s.vbracket(ex(x), s.vbr_basis(y, z)), s.ract(ex(x), s.theta_basis(y, z)));
          r = add(r, add(s.vbracket(ex(y), s.vbr_basis(z, x)), s.ract(ex(y), s.theta_basis(z, x))));
          r = add(r, add(s.vbracket(ex(z), s.vbr_basis(x, y)), s.ract(ex(z), s.theta_basis(x, y))));
          if (!is_zero(r)) {
            d = "circular sum nonzero at " + basis_tuple({x, y, z});
            return false;
          }
        }
    return true;
  });

  return rep;
}

ProductKind classify(const ExtendingSystem& s) {
  bool l = s.left_trivial(), r = s.right_trivial(), t = s.theta_trivial();
  if (l && t) return ProductKind::Semidirect;
  if (l) return ProductKind::Skew;
  if (r) return ProductKind::Crossed;
  if (t) return ProductKind::MatchedPair;
  return ProductKind::General;
}

std::string to_string(ProductKind k) {
  switch (k) {
    case ProductKind::General: return "general";
    case ProductKind::Skew: return "skew";
    case ProductKind::Crossed: return "crossed";
    case ProductKind::MatchedPair: return "matched_pair";
    case ProductKind::Semidirect: return "semidirect";
  }
  return "general";
}

LieAlgebra unified_product(const LieAlgebra& g, const ExtendingSystem& s,
                           std::vector<std::string> v_names) {
  AxiomReport rep = check_extending_axioms(g, s);
  if (!rep.all_ok())
    throw std::invalid_argument("unified_product: not an extending system, axiom " +
                                rep.first_failure());
  const Field& f = s.field;
  const std::size_t n = s.n, m = s.m, dim = n + m;
  auto pad = [&](const Vec& gv, const Vec& vv) {
    Vec r = gv;
    r.insert(r.end(), vv.begin(), vv.end());
    return r;
  };
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      entries.push_back(BracketEntry{i, j, pad(g.basis_bracket(i, j), zero_vec(f, m))});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < m; ++x) {
      // [(e_i, 0), (0, e_x)] = (-(x ⇀ e_i), -(x ↼ e_i))
      Vec gv = s.left[x * n + i];
      Vec vv = s.right[x * n + i];
      for (auto& c : gv) c = -c;
      for (auto& c : vv) c = -c;
      entries.push_back(BracketEntry{i, n + x, pad(gv, vv)});
    }
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = x + 1; y < m; ++y)
      entries.push_back(BracketEntry{n + x, n + y, pad(s.theta[x * m + y], s.vbr[x * m + y])});
  std::vector<std::string> names = g.basis_names();
  if (v_names.empty())
    for (std::size_t x = 1; x <= m; ++x) v_names.push_back("v" + std::to_string(x));
  if (v_names.size() != m) throw std::invalid_argument("unified_product: name count mismatch");
  names.insert(names.end(), v_names.begin(), v_names.end());
  return require_lie_algebra(f, dim, entries, names);
}

LieAlgebra skew_crossed_product(const LieAlgebra& g, const ExtendingSystem& s,
                                std::vector<std::string> v_names) {
  if (!s.left_trivial())
    throw std::invalid_argument("skew_crossed_product: the left action must be trivial");
  return unified_product(g, s, std::move(v_names));
}

LieAlgebra semidirect_product(const LieAlgebra& g, const ExtendingSystem& s,
                              std::vector<std::string> v_names) {
  if (classify(s) != ProductKind::Semidirect)
    throw std::invalid_argument("semidirect_product: requires trivial left action and cocycle");
  return unified_product(g, s, std::move(v_names));
}

Extension make_extension(const LieAlgebra& h, const Subspace& g_sub) {
  const Field& f = h.field();
  const std::size_t d = h.dim();
  Subspace span = g_sub;
  std::vector<Vec> vrows;
  for (std::size_t k = 0; k < d && span.dim() < d; ++k) {
    Vec e = unit_vec(f, d, k);
    if (span.contains(e)) continue;
    vrows.push_back(e);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < span.dim(); ++i) rows.push_back(span.basis().row(i));
    rows.push_back(e);
    span = Subspace::row_span(Matrix::from_rows(f, rows));
  }
  Matrix v = vrows.empty() ? Matrix(f, 0, d) : Matrix::from_rows(f, vrows);
  return make_extension(h, g_sub, v);
}

Extension make_extension(const LieAlgebra& h, const Subspace& g_sub, const Matrix& v_rows) {
  const Field& f = h.field();
  const std::size_t d = h.dim(), n = g_sub.dim(), m = v_rows.rows();
  if (g_sub.ambient() != d || v_rows.cols() != d || n + m != d)
    throw std::invalid_argument("make_extension: dimensions do not add up");
  if (!is_subalgebra(h, g_sub))
    throw std::invalid_argument("make_extension: g is not a subalgebra of h");
  Matrix a(f, d, d);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < d; ++i) a.at(i, j) = g_sub.basis().at(j, i);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < d; ++i) a.at(i, n + j) = v_rows.at(j, i);
  auto a_inv = invert(a);
  if (!a_inv) throw std::invalid_argument("make_extension: complement does not complete a basis");
  Matrix sel(f, d, d);
  for (std::size_t i = 0; i < n; ++i) sel.at(i, i) = Scalar::one(f);
  Extension ext{h, g_sub, restrict_to_subalgebra(h, g_sub), v_rows, a, *a_inv, a * sel * *a_inv};
  return ext;
}

ExtendingSystem canonical_extending_system(const Extension& ext) {
  const Field& f = ext.h.field();
  const std::size_t n = ext.n(), m = ext.m();
  ExtendingSystem s = ExtendingSystem::zero(f, n, m);
  auto split = [&](const Vec& ambient, Vec& gpart, Vec& vpart) {
    Vec ad = ext.to_adapted(ambient);
    gpart.assign(ad.begin(), ad.begin() + n);
    vpart.assign(ad.begin() + n, ad.end());
  };
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t i = 0; i < n; ++i) {
      Vec br = ext.h.bracket(ext.v_rows.row(x), ext.g_sub.basis().row(i));
      split(br, s.left[x * n + i], s.right[x * n + i]);
    }
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = x + 1; y < m; ++y) {
      Vec br = ext.h.bracket(ext.v_rows.row(x), ext.v_rows.row(y));
      split(br, s.theta[x * m + y], s.vbr[x * m + y]);
    }
  return s;
}

bool phi_iso_check(const Extension& ext) {
  ExtendingSystem s = canonical_extending_system(ext);
  LieAlgebra prod = unified_product(ext.g, s);
  return is_isomorphism(prod, ext.h, ext.A);
}

bool twisted_derivation_check(const LieAlgebra& g, const TwistedDerivation& td) {
  const Field& f = g.field();
  const std::size_t n = g.dim();
  if (td.lambda.size() != n || td.delta.rows() != n || td.delta.cols() != n)
    throw std::invalid_argument("twisted_derivation_check: shape mismatch");
  auto lam = [&](const Vec& v) {
    Scalar r = Scalar::zero(f);
    for (std::size_t i = 0; i < n; ++i) r += td.lambda[i] * v[i];
    return r;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec br = g.basis_bracket(i, j);
      if (!lam(br).is_zero()) return false;
      Vec lhs = td.delta.apply(br);
      Vec ei = unit_vec(f, n, i), ej = unit_vec(f, n, j);
      Vec rhs = add(g.bracket(td.delta.apply(ei), ej), g.bracket(ei, td.delta.apply(ej)));
      rhs = add(rhs, scale(td.lambda[i], td.delta.apply(ej)));
      rhs = sub(rhs, scale(td.lambda[j], td.delta.apply(ei)));
      if (lhs != rhs) return false;
    }
  return true;
}

LieAlgebra single_extension(const LieAlgebra& g, const TwistedDerivation& td,
                            const std::string& v_name) {
  if (!twisted_derivation_check(g, td))
    throw std::invalid_argument("single_extension: (lambda, delta) is not a twisted derivation");
  const Field& f = g.field();
  const std::size_t n = g.dim();
  ExtendingSystem s = ExtendingSystem::zero(f, n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    s.left[i] = td.delta.col(i);
    s.right[i] = Vec{td.lambda[i]};
  }
  return unified_product(g, s, {v_name});
}

}  // namespace galie
