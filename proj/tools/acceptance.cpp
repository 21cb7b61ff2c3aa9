// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Everything here recomputes from scratch with both enumerators.
#include <functional>
#include <iostream>
#include <random>

#include "galie/format.hpp"
#include "galie/galois.hpp"

using namespace galie;

namespace {

int failures = 0;

void criterion(int n, const std::string& what, const std::function<bool()>& f) {
  bool ok = false;
  std::string err;
  try {
    ok = f();
  } catch (const std::exception& e) {
    err = e.what();
  }
  std::cout << "criterion " << n << " (" << what << "): " << (ok ? "PASS" : "FAIL");
  if (!err.empty()) std::cout << " [" << err << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

GaloisGroup both_enumerators(const Extension& ext, bool* agree = nullptr) {
  GaloisGroup d = galois_group_direct(ext);
  GaloisGroup s = galois_group_structured(ext);
  bool same = d.order() == s.order();
  for (std::size_t i = 0; same && i < d.order(); ++i)
    same = d.elements[i].sigma == s.elements[i].sigma && d.elements[i].r == s.elements[i].r;
  if (agree)
    *agree = same;
  else if (!same)
    throw std::logic_error("enumerators disagree");
  return d;
}

GaloisGroup catalog_galois(const std::string& spec, std::uint32_t p) {
  ExtensionSpec es = extension_catalog(spec, Field::prime(p));
  return both_enumerators(make_extension(es.h, es.sub));
}

bool omega_is_homomorphism(const GaloisGroup& g) {
  std::vector<Matrix> ws;
  for (const auto& el : g.elements) {
    Matrix w = omega(g.ext, el);
    if (!is_automorphism(g.ext.h, w)) return false;
    for (std::size_t i = 0; i < g.ext.n(); ++i)
      if (w.apply(g.ext.A.col(i)) != g.ext.A.col(i)) return false;
    ws.push_back(w);
  }
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j)
      if (ws[i] * ws[j] != ws[g.table.at(i, j)]) return false;
  return true;
}

// the cyclic-action corpus shared by the Hilbert 90 and Artin criteria
std::vector<GroupAction> named_corpus() {
  std::vector<GroupAction> corpus;
  Field f5 = Field::prime(5);
  LieAlgebra sl2 = catalog("sl", 2, f5);
  corpus.push_back(close_group(sl2, {sl2_scaling(f5, Scalar::from_int(f5, -1))}));  // U2
  LieAlgebra gl3 = catalog("gl", 3, f5);
  corpus.push_back(close_group(gl3, {gl_permutation(f5, {1, 2, 0})}));  // C3 in S3
  corpus.push_back(close_group(gl3, {gl_permutation(f5, {1, 0, 2})}));  // C2 in S3
  LieAlgebra a2 = catalog("aff2", 0, f5);
  Matrix g(f5, 2, 2);
  g.at(0, 0) = Scalar::one(f5);
  g.at(1, 1) = Scalar::from_int(f5, -1);
  corpus.push_back(close_group(a2, {g}));  // C2 on aff(2)
  return corpus;
}

std::vector<GroupAction> randomized_cyclic_corpus(std::size_t count) {
  std::mt19937 rng(20260823);
  std::vector<GroupAction> corpus;
  while (corpus.size() < count) {
    Field f = Field::prime(rng() % 2 ? 3 : 5);
    std::optional<GroupAction> act;
    try {
      switch (rng() % 3) {
        case 0: {  // scaling on sl(2)
          std::uint32_t u = 1 + rng() % (f.p - 1);
          act = close_group(catalog("sl", 2, f), {sl2_scaling(f, Scalar::residue(f, u))});
          break;
        }
        case 1: {  // permutation on gl(4)
          std::vector<std::size_t> perm{0, 1, 2, 3};
          std::shuffle(perm.begin(), perm.end(), rng);
          act = close_group(catalog("gl", 4, f), {gl_permutation(f, perm)});
          break;
        }
        case 2: {  // conjugation on gl(2)
          Matrix m(f, 2, 2);
          for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) m.at(i, j) = Scalar::residue(f, rng() % f.p);
          if (!invert(m)) continue;
          act = close_group(catalog("gl", 2, f), {gl_conjugation(f, 2, m)});
          break;
        }
      }
    } catch (const std::runtime_error&) {
      continue;  // closure cap
    }
    if (!act || act->order() < 2 || act->order() % f.p == 0) continue;
    corpus.push_back(std::move(*act));
  }
  return corpus;
}

std::size_t generator_index(const FiniteGroupTable& t) {
  for (std::size_t i = 0; i < t.n; ++i)
    if (t.element_order(i) == t.n) return i;
  throw std::logic_error("not cyclic");
}

std::vector<std::string> extension_corpus(std::uint32_t p) {
  std::vector<std::string> specs{"aff2", "sl2", "heisenberg:1", "l:1", "t:1", "t_alt:1", "b:1"};
  if (p != 2) specs.push_back("fivedim_perfect");
  return specs;
}

}  // namespace

int main() {
  criterion(1, "Gal(aff(2)/ke1) is k^*", [] {
    for (std::uint32_t p : {3u, 5u, 7u}) {
      GaloisGroup g = catalog_galois("aff2", p);
      if (g.order() != p - 1 || !group_analysis(g.table).cyclic) return false;
    }
    return true;
  });

  criterion(2, "Gal(sl(2)/ke3) is the unit group acting diagonally", [] {
    for (std::uint32_t p : {3u, 5u}) {
      GaloisGroup g = catalog_galois("sl2", p);
      if (g.order() != p - 1 || !group_analysis(g.table).cyclic) return false;
      Field f = g.ext.h.field();
      for (const auto& el : g.elements) {
        Matrix w = omega(g.ext, el);  // must be diag(u, u^{-1}, 1)
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = 0; j < 3; ++j)
            if (i != j && !w.at(i, j).is_zero()) return false;
        if (w.at(0, 0) * w.at(1, 1) != Scalar::one(f)) return false;
        if (w.at(2, 2) != Scalar::one(f)) return false;
      }
    }
    return true;
  });

  criterion(3, "Gal(h5/h3) orders 24 and 216, non-abelian solvable", [] {
    for (std::uint32_t p : {2u, 3u}) {
      GaloisGroup g = catalog_galois("heisenberg:1", p);
      if (g.order() != (p == 2 ? 24u : 216u)) return false;
      GroupAnalysis an = group_analysis(g.table);
      if (an.abelian || !an.solvable) return false;
    }
    return true;
  });

  criterion(4, "Gal(l(5)/l(3)) over F3 has order 36, metabelian", [] {
    GaloisGroup g = catalog_galois("l:1", 3);
    return g.order() == 36 && group_analysis(g.table).metabelian;
  });

  criterion(5, "twisted Heisenberg groups over F5", [] {
    Field f5 = Field::prime(5);
    GaloisGroup t4 = catalog_galois("t:1", 5);
    if (t4.order() != 4 || !group_analysis(t4.table).cyclic) return false;
    for (const auto& el : t4.elements) {
      // elements are (alpha, (alpha - 1) w)
      Scalar alpha = el.sigma.at(0, 0);
      Vec expect = zero_vec(f5, 3);
      expect[2] = alpha - Scalar::one(f5);
      if (el.r.col(0) != expect) return false;
    }
    GaloisGroup b4 = catalog_galois("b:1", 5);
    if (b4.order() != 5 || !group_analysis(b4.table).elementary_abelian) return false;
    // the codimension-1 description agrees with the direct enumeration
    LieAlgebra h3 = catalog("heisenberg", 1, f5);
    Vec lambda;
    Matrix delta(f5, 0, 0);
    heisenberg_twist(f5, 1, lambda, delta);
    return codim1_group(h3, {lambda, delta}).elements.size() == t4.order();
  });

  std::cout << "note: over F3 the outer derivation of the perfect algebra becomes inner\n"
               "      (it equals ad(2 e3 + e5)), so the group there is k^* of order 2\n"
               "      rather than trivial; the trivial group appears for p > 3.\n";
  criterion(6, "perfect algebra extension: trivial over F5, k^* over F3", [] {
    return catalog_galois("fivedim_perfect", 5).order() == 1 &&
           catalog_galois("fivedim_perfect", 3).order() == 2;
  });

  criterion(7, "invariants of C_n and S_3 on gl(n, F5)", [] {
    Field f5 = Field::prime(5);
    for (std::size_t n : {2u, 3u}) {
      LieAlgebra gl = catalog("gl", n, f5);
      std::vector<std::size_t> cyc(n);
      for (std::size_t i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
      Subspace inv = invariants(close_group(gl, {gl_permutation(f5, cyc)}));
      if (inv.dim() != n) return false;
      for (std::size_t k = 0; k < n; ++k) {  // circulant basis
        Vec c = zero_vec(f5, n * n);
        for (std::size_t i = 0; i < n; ++i) c[i * n + (i + k) % n] = Scalar::one(f5);
        if (!inv.contains(c)) return false;
      }
    }
    LieAlgebra gl3 = catalog("gl", 3, f5);
    Subspace inv = invariants(
        close_group(gl3, {gl_permutation(f5, {1, 0, 2}), gl_permutation(f5, {1, 2, 0})}));
    if (inv.dim() != 2) return false;
    Vec id = zero_vec(f5, 9), off = zero_vec(f5, 9);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) (i == j ? id : off)[i * 3 + j] = Scalar::one(f5);
    return inv.contains(id) && inv.contains(off);
  });

  criterion(8, "Hilbert 90 across the cyclic corpus", [] {
    std::vector<GroupAction> corpus = named_corpus();
    for (auto& a : randomized_cyclic_corpus(20)) corpus.push_back(std::move(a));
    for (const GroupAction& a : corpus)
      if (!hilbert90_check(a, generator_index(a.table))) return false;
    return true;
  });

  criterion(9, "Artin reconstruction across the corpus", [] {
    std::vector<GroupAction> corpus = named_corpus();
    for (auto& a : randomized_cyclic_corpus(20)) corpus.push_back(std::move(a));
    for (const GroupAction& a : corpus) {
      ArtinResult res = artin_reconstruct(a);
      if (!res.skew.all_ok() || !res.theta_matches || !res.phi_ok) return false;
    }
    return true;
  });

  criterion(10, "oracle equivalence and the omega embedding over F2/F3", [] {
    for (std::uint32_t p : {2u, 3u})
      for (const std::string& spec : extension_corpus(p)) {
        ExtensionSpec es = extension_catalog(spec, Field::prime(p));
        Extension ext = make_extension(es.h, es.sub);
        bool agree = false;
        GaloisGroup g = both_enumerators(ext, &agree);
        if (!agree || !omega_is_homomorphism(g)) return false;
      }
    return true;
  });

  criterion(11, "codim-1 groups metabelian; radical chains solvable", [] {
    // every computed codimension-1 Galois group
    for (std::uint32_t p : {2u, 3u, 5u})
      for (const std::string& spec : extension_corpus(p)) {
        ExtensionSpec es = extension_catalog(spec, Field::prime(p));
        Extension ext = make_extension(es.h, es.sub);
        if (ext.m() != 1) continue;
        GaloisGroup g = galois_group_direct(ext);
        if (!group_analysis(g.table).metabelian) return false;
      }
    // radical chains in h^5 and l(5) over F3
    Field f3 = Field::prime(3);
    {
      ExtensionSpec es = extension_catalog("heisenberg:1", f3);
      std::vector<Vec> g_rows, mid_rows;
      for (std::size_t i : {0u, 1u, 2u}) g_rows.push_back(unit_vec(f3, 5, i));
      for (std::size_t i : {0u, 1u, 2u, 3u}) mid_rows.push_back(unit_vec(f3, 5, i));
      RadicalChainReport r = verify_radical_chain(
          es.h, {Subspace::row_span(Matrix::from_rows(f3, g_rows)),
                 Subspace::row_span(Matrix::from_rows(f3, mid_rows)), Subspace::full(f3, 5)});
      if (!r.chain_valid || !r.solvable) return false;
      for (const auto& s : r.steps)
        if (!s.metabelian) return false;
    }
    {
      ExtensionSpec es = extension_catalog("l:1", f3);
      std::vector<Vec> g_rows, mid_rows;
      for (std::size_t i : {0u, 1u, 2u}) g_rows.push_back(unit_vec(f3, 5, i));
      for (std::size_t i : {0u, 1u, 2u, 3u}) mid_rows.push_back(unit_vec(f3, 5, i));
      RadicalChainReport r = verify_radical_chain(
          es.h, {Subspace::row_span(Matrix::from_rows(f3, g_rows)),
                 Subspace::row_span(Matrix::from_rows(f3, mid_rows)), Subspace::full(f3, 5)});
      if (!r.chain_valid || !r.solvable) return false;
      for (const auto& s : r.steps)
        if (!s.metabelian) return false;
    }
    return true;
  });

  criterion(12, "unified product round-trip for every catalog extension", [] {
    std::vector<std::string> specs{"aff2",     "sl2", "heisenberg:1", "heisenberg:2",
                                   "l:1",      "l:2", "t:1",          "t:2",
                                   "t_alt:1",  "b:1", "b:2",          "fivedim_perfect"};
    for (const Field& f : {Field::rationals(), Field::prime(3), Field::prime(5)})
      for (const std::string& spec : specs) {
        ExtensionSpec es = extension_catalog(spec, f);
        if (!phi_iso_check(make_extension(es.h, es.sub))) return false;
      }
    return true;
  });

  std::cout << (failures ? "ACCEPTANCE: FAIL" : "ACCEPTANCE: PASS") << "\n";
  return failures ? 1 : 0;
}
