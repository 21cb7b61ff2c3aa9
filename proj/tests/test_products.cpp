#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galie/products.hpp"

using namespace galie;

namespace {

const Field Q = Field::rationals();

Subspace first_coords(const Field& f, std::size_t ambient, std::size_t k) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < k; ++i) rows.push_back(unit_vec(f, ambient, i));
  return Subspace::row_span(Matrix::from_rows(f, rows));
}

}  // namespace

TEST_CASE("canonical extending system of sl(2)/ke3 matches the known skew form") {
  LieAlgebra sl2 = catalog("sl", 2, Q);
  std::vector<Vec> grow = {unit_vec(Q, 3, 2)};
  Subspace ke3 = Subspace::row_span(Matrix::from_rows(Q, grow));
  std::vector<Vec> vrow = {unit_vec(Q, 3, 0), unit_vec(Q, 3, 1)};
  Extension ext = make_extension(sl2, ke3, Matrix::from_rows(Q, vrow));
  ExtendingSystem s = canonical_extending_system(ext);
  CHECK(s.n == 1);
  CHECK(s.m == 2);
  CHECK(s.left_trivial());
  for (const auto& v : s.vbr) CHECK(is_zero(v));
  // e1 ↼ e3 = -2 e1, e2 ↼ e3 = 2 e2, θ(e1, e2) = e3
  CHECK(s.right[0] == Vec{Scalar::from_int(Q, -2), Scalar::zero(Q)});
  CHECK(s.right[1] == Vec{Scalar::zero(Q), Scalar::from_int(Q, 2)});
  CHECK(s.theta_basis(0, 1) == Vec{Scalar::one(Q)});
  CHECK(s.theta_basis(1, 0) == Vec{Scalar::from_int(Q, -1)});
  CHECK(classify(s) == ProductKind::Skew);
  CHECK(check_extending_axioms(ext.g, s).all_ok());
  CHECK(check_skew_axioms(ext.g, s).all_ok());
  CHECK(phi_iso_check(ext));
}

TEST_CASE("round trip through the canonical system on catalog extensions") {
  struct Case {
    std::string ambient;
    std::size_t n_param;
    std::size_t sub_dim;
    Field f;
  };
  std::vector<Case> cases = {
      {"aff2", 0, 1, Q},          {"heisenberg", 2, 3, Q},
      {"heisenberg", 2, 3, Field::prime(3)}, {"l", 2, 3, Field::prime(3)},
      {"t", 1, 3, Field::prime(5)}, {"b", 1, 3, Field::prime(5)},
      {"gl", 2, 3, Q},
  };
  for (const auto& c : cases) {
    CAPTURE(c.ambient);
    LieAlgebra h = catalog(c.ambient, c.n_param, c.f);
    Subspace sub = first_coords(c.f, h.dim(), c.sub_dim);
    if (!is_subalgebra(h, sub)) continue;  // guards against a bad test case
    Extension ext = make_extension(h, sub);
    ExtendingSystem s = canonical_extending_system(ext);
    CHECK(check_extending_axioms(ext.g, s).all_ok());
    CHECK(phi_iso_check(ext));
  }
}

TEST_CASE("subalgebras in non-coordinate position") {
  LieAlgebra sl2 = catalog("sl", 2, Field::prime(7));
  const Field f7 = Field::prime(7);
  // span of e1 + e3 is a subalgebra (one-dimensional)
  Vec v = add(unit_vec(f7, 3, 0), unit_vec(f7, 3, 2));
  Subspace sub = Subspace::row_span(Matrix::from_rows(f7, {v}));
  Extension ext = make_extension(sl2, sub);
  CHECK(ext.n() == 1);
  CHECK(ext.m() == 2);
  CHECK(ext.proj.apply(v) == v);
  for (std::size_t x = 0; x < 2; ++x)
    CHECK(is_zero(ext.proj.apply(ext.v_rows.row(x))));
  CHECK(phi_iso_check(ext));
}

TEST_CASE("unified_product rejects non-systems naming the failed axiom") {
  LieAlgebra h5 = catalog("heisenberg", 2, Q);
  Subspace sub = first_coords(Q, 5, 3);  // x1, x2, y1: not the h3 copy
  // use the x1, y1, w copy instead
  std::vector<Vec> rows = {unit_vec(Q, 5, 0), unit_vec(Q, 5, 2), unit_vec(Q, 5, 4)};
  Extension ext = make_extension(h5, Subspace::row_span(Matrix::from_rows(Q, rows)));
  ExtendingSystem s = canonical_extending_system(ext);
  CHECK(unified_product(ext.g, s).dim() == 5);

  ExtendingSystem bad = s;
  bad.theta[1] = unit_vec(Q, 3, 0);  // θ(v1,v2) = x1 breaks L4 ([a, θ(x,y)] term)
  auto rep = check_extending_axioms(ext.g, bad);
  CHECK(!rep.all_ok());
  try {
    unified_product(ext.g, bad);
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    CHECK(msg.find(rep.first_failure()) != std::string::npos);
  }
}

TEST_CASE("one nontrivial cocycle entry over heisenberg yields the next heisenberg") {
  for (std::size_t n : {1u, 2u}) {
    LieAlgebra h = catalog("heisenberg", n, Q);
    ExtendingSystem s = ExtendingSystem::zero(Q, 2 * n + 1, 2);
    s.theta[0 * 2 + 1] = unit_vec(Q, 2 * n + 1, 2 * n);  // θ(x_{n+1}, y_{n+1}) = w
    CHECK(check_extending_axioms(h, s).all_ok());
    CHECK(classify(s) == ProductKind::Skew);
    LieAlgebra prod = unified_product(h, s);
    LieAlgebra big = catalog("heisenberg", n + 1, Q);
    // permute product basis (x_1..x_n, y_1..y_n, w, x_{n+1}, y_{n+1}) into
    // catalog order (x_1..x_{n+1}, y_1..y_{n+1}, w)
    Matrix perm(Q, 2 * n + 3, 2 * n + 3);
    for (std::size_t i = 0; i < n; ++i) {
      perm.at(i, i) = Scalar::one(Q);              // x_i
      perm.at(n + 1 + i, n + i) = Scalar::one(Q);  // y_i
    }
    perm.at(2 * n + 2, 2 * n) = Scalar::one(Q);  // w
    perm.at(n, 2 * n + 1) = Scalar::one(Q);      // x_{n+1}
    perm.at(2 * n + 1, 2 * n + 2) = Scalar::one(Q);  // y_{n+1}
    CHECK(is_isomorphism(prod, big, perm));
  }
}

TEST_CASE("zero system gives the direct sum") {
  LieAlgebra g = catalog("aff2", 0, Q);
  ExtendingSystem s = ExtendingSystem::zero(Q, 2, 2);
  CHECK(classify(s) == ProductKind::Semidirect);
  LieAlgebra d = semidirect_product(g, s);
  CHECK(d.dim() == 4);
  CHECK(derived_subalgebra(d).dim() == 1);
  std::vector<Vec> vrows = {unit_vec(Q, 4, 2), unit_vec(Q, 4, 3)};
  CHECK(is_ideal(d, Subspace::row_span(Matrix::from_rows(Q, vrows))));
}

TEST_CASE("skew and semidirect wrappers enforce their preconditions") {
  LieAlgebra g = catalog("aff2", 0, Q);
  ExtendingSystem s = ExtendingSystem::zero(Q, 2, 1);
  s.left[0] = unit_vec(Q, 2, 1);
  CHECK_THROWS_AS(skew_crossed_product(g, s), std::invalid_argument);
  ExtendingSystem t = ExtendingSystem::zero(Q, 2, 2);
  t.theta[1] = unit_vec(Q, 2, 1);
  CHECK_THROWS_AS(semidirect_product(g, t), std::invalid_argument);
}

TEST_CASE("twisted derivations and single extensions") {
  for (const Field& f : {Q, Field::prime(5)}) {
    LieAlgebra h3 = catalog("heisenberg", 1, f);
    TwistedDerivation td;
    heisenberg_twist(f, 1, td.lambda, td.delta);
    CHECK(twisted_derivation_check(h3, td));
    LieAlgebra t4 = single_extension(h3, td, "u");
    LieAlgebra cat = catalog("t", 1, f);
    REQUIRE(t4.dim() == cat.dim());
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        CHECK(t4.basis_bracket(i, j) == cat.basis_bracket(i, j));

    // λ = 0, Δ(x1) = y1 gives the b-series algebra
    TwistedDerivation bd;
    bd.lambda = zero_vec(f, 3);
    bd.delta = Matrix(f, 3, 3);
    bd.delta.at(1, 0) = Scalar::one(f);
    CHECK(twisted_derivation_check(h3, bd));
    LieAlgebra b4 = single_extension(h3, bd, "z");
    LieAlgebra bcat = catalog("b", 1, f);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        CHECK(b4.basis_bracket(i, j) == bcat.basis_bracket(i, j));

    // a pair violating λ([g,h]) = 0 is rejected
    TwistedDerivation bad = td;
    bad.lambda[2] = Scalar::one(f);
    CHECK(!twisted_derivation_check(h3, bad));
    CHECK_THROWS_AS(single_extension(h3, bad), std::invalid_argument);
  }
}

TEST_CASE("single extension by the outer derivation of the perfect algebra") {
  for (const Field& f : {Q, Field::prime(3), Field::prime(5)}) {
    LieAlgebra g = catalog("fivedim_perfect", 0, f);
    TwistedDerivation td{zero_vec(f, 5), fivedim_delta(f)};
    CHECK(twisted_derivation_check(g, td));
    LieAlgebra gd = single_extension(g, td);
    CHECK(gd.dim() == 6);
    Subspace sub = first_coords(f, 6, 5);
    CHECK(is_subalgebra(gd, sub));
    CHECK(phi_iso_check(make_extension(gd, sub)));
  }
}

TEST_CASE("canonical system of l(2n+3) over l(2n+1)") {
  const Field f3 = Field::prime(3);
  LieAlgebra l5 = catalog("l", 2, f3);
  // copy of l(3): E1, F1, G at indices 0, 2, 4
  std::vector<Vec> rows = {unit_vec(f3, 5, 0), unit_vec(f3, 5, 2), unit_vec(f3, 5, 4)};
  Extension ext = make_extension(l5, Subspace::row_span(Matrix::from_rows(f3, rows)));
  ExtendingSystem s = canonical_extending_system(ext);
  CHECK(s.left_trivial());
  CHECK(s.theta_trivial());
  CHECK(classify(s) == ProductKind::Semidirect);
  CHECK(phi_iso_check(ext));
}
