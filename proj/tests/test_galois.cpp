#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galie/galois.hpp"

using namespace galie;

namespace {

const Field Q = Field::rationals();

Subspace first_coords(const Field& f, std::size_t dim, std::size_t k) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < k; ++i) rows.push_back(unit_vec(f, dim, i));
  return Subspace::row_span(Matrix::from_rows(f, rows));
}

Subspace coords(const Field& f, std::size_t dim, std::vector<std::size_t> idx) {
  std::vector<Vec> rows;
  for (std::size_t i : idx) rows.push_back(unit_vec(f, dim, i));
  return Subspace::row_span(Matrix::from_rows(f, rows));
}

// h^5 with the subalgebra h^3 = span(x1, y1, w); basis order is x1,x2,y1,y2,w
Extension h5_over_h3(const Field& f) {
  LieAlgebra h5 = catalog("heisenberg", 2, f);
  return make_extension(h5, coords(f, 5, {0, 2, 4}));
}

Extension fivedim_ext(const Field& f) {
  LieAlgebra g = catalog("fivedim_perfect", 0, f);
  LieAlgebra gd = single_extension(g, {zero_vec(f, 5), fivedim_delta(f)});
  return make_extension(gd, first_coords(f, 6, 5));
}

void check_same_group(const GaloisGroup& a, const GaloisGroup& b) {
  REQUIRE(a.order() == b.order());
  for (std::size_t i = 0; i < a.order(); ++i) {
    CHECK(a.elements[i].sigma == b.elements[i].sigma);
    CHECK(a.elements[i].r == b.elements[i].r);
  }
  CHECK(a.table.mul == b.table.mul);
}

void check_omega(const GaloisGroup& g) {
  const Extension& ext = g.ext;
  std::vector<Matrix> ws;
  for (const auto& el : g.elements) {
    Matrix w = omega(ext, el);
    CHECK(is_automorphism(ext.h, w));
    for (std::size_t i = 0; i < ext.n(); ++i) {
      Vec gi = ext.A.col(i);
      CHECK(w.apply(gi) == gi);
    }
    ws.push_back(w);
  }
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j)
      CHECK(ws[i] * ws[j] == ws[g.table.at(i, j)]);
}

}  // namespace

TEST_CASE("serial and parallel scans return identical hit lists") {
  for (std::uint32_t p : {2u, 3u}) {
    Extension ext = h5_over_h3(Field::prime(p));
    ModpExtensionTable t = adapted_modp_table(ext);
    std::uint64_t total = t.candidate_count();
    auto serial = modp_scan_serial(t, 0, total);
    auto parallel = modp_scan_parallel(t, 0, total);
    CHECK(serial == parallel);
    CHECK(!serial.empty());
  }
}

TEST_CASE("the two enumerators agree on the heisenberg extension") {
  for (std::uint32_t p : {2u, 3u}) {
    CAPTURE(p);
    Extension ext = h5_over_h3(Field::prime(p));
    GaloisGroup d = galois_group_direct(ext);
    GaloisGroup s = galois_group_structured(ext);
    check_same_group(d, s);
    CHECK(d.order() == (p == 2 ? 24 : 216));
    auto an = group_analysis(d.table);
    CHECK(!an.abelian);
    CHECK(an.solvable);
  }
}

TEST_CASE("scaling automorphism groups of codimension-1 extensions") {
  Field f5 = Field::prime(5);
  // aff(2) over its one-dimensional subalgebra k e1
  {
    LieAlgebra a2 = catalog("aff2", 0, f5);
    Extension ext = make_extension(a2, first_coords(f5, 2, 1));
    GaloisGroup d = galois_group_direct(ext);
    check_same_group(d, galois_group_structured(ext));
    CHECK(d.order() == 4);
    CHECK(group_analysis(d.table).cyclic);
    check_omega(d);
  }
  // sl(2) over the Cartan line k e3
  {
    LieAlgebra sl2 = catalog("sl", 2, f5);
    Extension ext = make_extension(sl2, coords(f5, 3, {2}));
    GaloisGroup d = galois_group_direct(ext);
    check_same_group(d, galois_group_structured(ext));
    CHECK(d.order() == 4);
    CHECK(group_analysis(d.table).cyclic);
    check_omega(d);
  }
}

TEST_CASE("twisted heisenberg extensions t and b") {
  Field f5 = Field::prime(5);
  LieAlgebra h3 = catalog("heisenberg", 1, f5);
  Vec lambda;
  Matrix delta(f5, 0, 0);
  heisenberg_twist(f5, 1, lambda, delta);
  // t^4: adjoin u with [u, x1] = [u, y1] = w + u
  {
    LieAlgebra t4 = catalog("t", 1, f5);
    Extension ext = make_extension(t4, first_coords(f5, 4, 3));
    GaloisGroup d = galois_group_direct(ext);
    check_same_group(d, galois_group_structured(ext));
    CHECK(d.order() == 4);
    auto an = group_analysis(d.table);
    CHECK(an.cyclic);
    check_omega(d);
    // the matching codimension-1 group of the twisting pair
    Codim1Group c = codim1_group(h3, {lambda, delta});
    CHECK(c.elements.size() == d.order());
    CHECK(group_analysis(c.table).cyclic);
  }
  // the opposite sign convention gives a group of the same order
  {
    LieAlgebra t4a = catalog("t_alt", 1, f5);
    Extension ext = make_extension(t4a, first_coords(f5, 4, 3));
    GaloisGroup d = galois_group_direct(ext);
    check_same_group(d, galois_group_structured(ext));
    CHECK(d.order() == 4);
  }
  // b^4: adjoin z with [z, x1] = x1, [z, y1] = y1, [z, w] = 2w
  {
    LieAlgebra b4 = catalog("b", 1, f5);
    Extension ext = make_extension(b4, first_coords(f5, 4, 3));
    GaloisGroup d = galois_group_direct(ext);
    check_same_group(d, galois_group_structured(ext));
    CHECK(d.order() == 5);
    CHECK(group_analysis(d.table).elementary_abelian);
    check_omega(d);
  }
}

TEST_CASE("the diagonal algebra l(5) over l(3)") {
  Field f3 = Field::prime(3);
  LieAlgebra l5 = catalog("l", 2, f3);
  // basis E1,E2,F1,F2,G; l(3) = span(E1, F1, G)
  Extension ext = make_extension(l5, coords(f3, 5, {0, 2, 4}));
  GaloisGroup d = galois_group_direct(ext);
  check_same_group(d, galois_group_structured(ext));
  CHECK(d.order() == 36);
  auto an = group_analysis(d.table);
  CHECK(an.metabelian);
  CHECK(!an.abelian);
}

TEST_CASE("the outer derivation extension degenerates in characteristic 3") {
  {
    Extension ext = fivedim_ext(Field::prime(5));
    GaloisGroup d = galois_group_direct(ext);
    check_same_group(d, galois_group_structured(ext));
    CHECK(d.order() == 1);
  }
  {
    // the derivation becomes inner here, so the group is k^* of order 2
    Extension ext = fivedim_ext(Field::prime(3));
    GaloisGroup d = galois_group_direct(ext);
    check_same_group(d, galois_group_structured(ext));
    CHECK(d.order() == 2);
    check_omega(d);
  }
  {
    // over Q the linear axioms pin the solution down uniquely
    GaloisGroup s = galois_group_structured(fivedim_ext(Q));
    CHECK(s.order() == 1);
  }
}

TEST_CASE("is_galois_pair on hand-built candidates") {
  Field f5 = Field::prime(5);
  LieAlgebra a2 = catalog("aff2", 0, f5);
  Extension ext = make_extension(a2, first_coords(f5, 2, 1));
  ExtendingSystem sys = canonical_extending_system(ext);
  Matrix sigma = Matrix::identity(f5, 1);
  Matrix r(f5, 1, 1);
  CHECK(is_galois_pair(ext, sys, sigma, r));
  sigma.at(0, 0) = Scalar::from_int(f5, 2);
  CHECK(is_galois_pair(ext, sys, sigma, r));
  r.at(0, 0) = Scalar::one(f5);
  CHECK(!is_galois_pair(ext, sys, sigma, r));
  CHECK(!is_galois_pair(ext, sys, Matrix(f5, 1, 1), Matrix(f5, 1, 1)));
}

TEST_CASE("budget and field guards") {
  Extension ext3 = h5_over_h3(Field::prime(3));
  CHECK_THROWS_AS(galois_group_direct(ext3, 10), BudgetExceededError);
  CHECK_THROWS_AS(galois_group_direct(h5_over_h3(Q)), InfiniteFieldError);
  // over Q the heisenberg group is infinite, which the structured solver reports
  CHECK_THROWS_AS(galois_group_structured(h5_over_h3(Q)), InfiniteFieldError);
  Field f5 = Field::prime(5);
  LieAlgebra h3 = catalog("heisenberg", 1, Q);
  Vec lambda;
  Matrix delta(Q, 0, 0);
  heisenberg_twist(Q, 1, lambda, delta);
  CHECK_THROWS_AS(codim1_group(h3, {lambda, delta}), InfiniteFieldError);
}

TEST_CASE("codim1 group for the outer derivation") {
  for (std::uint32_t p : {3u, 5u}) {
    Field f = Field::prime(p);
    LieAlgebra g = catalog("fivedim_perfect", 0, f);
    Codim1Group c = codim1_group(g, {zero_vec(f, 5), fivedim_delta(f)});
    CHECK(c.elements.size() == (p == 3 ? 2 : 1));
    for (const auto& el : c.elements) {
      LieAlgebra gd = single_extension(g, {zero_vec(f, 5), fivedim_delta(f)});
      Matrix w = codim1_omega(g, el);
      CHECK(is_automorphism(gd, w));
    }
  }
}

TEST_CASE("radical chain verification") {
  Field f3 = Field::prime(3);
  LieAlgebra h5 = catalog("heisenberg", 2, f3);
  Subspace g = coords(f3, 5, {0, 2, 4});
  Subspace mid = coords(f3, 5, {0, 1, 2, 4});
  Subspace full = Subspace::full(f3, 5);
  RadicalChainReport rep = verify_radical_chain(h5, {g, mid, full});
  CHECK(rep.chain_valid);
  REQUIRE(rep.steps.size() == 2);
  CHECK(rep.steps[0].metabelian);
  CHECK(rep.steps[1].metabelian);
  CHECK(rep.galois_order == 216);
  CHECK(rep.solvable);

  RadicalChainReport bad = verify_radical_chain(h5, {g, mid});
  CHECK(!bad.chain_valid);
  RadicalChainReport skip = verify_radical_chain(h5, {g, full});
  CHECK(!skip.chain_valid);
}
