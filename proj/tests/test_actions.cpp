#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galie/actions.hpp"

using namespace galie;

namespace {

GroupAction sl2_scaling_action(std::uint32_t p, long long u) {
  Field f = Field::prime(p);
  LieAlgebra sl2 = catalog("sl", 2, f);
  return close_group(sl2, {sl2_scaling(f, Scalar::from_int(f, u))});
}

}  // namespace

TEST_CASE("group closure of the sl(2) scaling action") {
  GroupAction a = sl2_scaling_action(5, 3);  // 3 has order 4 mod 5
  CHECK(a.order() == 4);
  auto an = group_analysis(a.table);
  CHECK(an.cyclic);
  CHECK(an.abelian);
  CHECK(!an.elementary_abelian);
  Subspace inv = invariants(a);
  CHECK(inv.dim() == 1);
  CHECK(inv.contains(unit_vec(a.h.field(), 3, 2)));
  CHECK(is_subalgebra(a.h, inv));
}

TEST_CASE("close_group rejects non-automorphisms and enforces the cap") {
  Field f5 = Field::prime(5);
  LieAlgebra sl2 = catalog("sl", 2, f5);
  Matrix bad = Matrix::identity(f5, 3);
  bad.at(0, 1) = Scalar::one(f5);
  CHECK_THROWS_AS(close_group(sl2, {bad}), std::invalid_argument);
  GroupAction a = sl2_scaling_action(7, 3);  // order 6
  CHECK(a.order() == 6);
  CHECK_THROWS_AS(close_group(catalog("sl", 2, Field::prime(7)),
                              {sl2_scaling(Field::prime(7), Scalar::from_int(Field::prime(7), 3))},
                              4),
                  std::runtime_error);
}

TEST_CASE("reynolds operator is the projection onto invariants") {
  GroupAction a = sl2_scaling_action(5, 4);  // U2 = {1, -1}
  CHECK(a.order() == 2);
  ReynoldsData rd = reynolds(a);
  CHECK(rd.t * rd.t == rd.t);
  CHECK(rd.inv == invariants(a));
  CHECK(rd.inv.dim() + rd.kernel.dim() == 3);
  for (std::size_t i = 0; i < rd.inv.dim(); ++i) {
    Vec v = rd.inv.basis().row(i);
    CHECK(rd.t.apply(v) == v);
  }
  for (std::size_t i = 0; i < rd.kernel.dim(); ++i)
    CHECK(is_zero(rd.t.apply(rd.kernel.basis().row(i))));
}

TEST_CASE("modular case is rejected") {
  Field f2 = Field::prime(2);
  LieAlgebra a2 = catalog("aff2", 0, f2);
  Matrix g = Matrix::identity(f2, 2);
  g.at(1, 0) = Scalar::one(f2);  // e1 -> e1 + e2, order 2 in characteristic 2
  GroupAction act = close_group(a2, {g});
  CHECK(act.order() == 2);
  CHECK_THROWS_AS(reynolds(act), ModularCaseError);
  CHECK_THROWS_AS(hilbert90_check(act, 1), ModularCaseError);
}

TEST_CASE("invariants of permutation actions on gl(n)") {
  Field f5 = Field::prime(5);
  // C_n generated by the full cycle: invariants are the circulants
  for (std::size_t n : {2u, 3u}) {
    LieAlgebra gl = catalog("gl", n, f5);
    std::vector<std::size_t> cyc(n);
    for (std::size_t i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    GroupAction a = close_group(gl, {gl_permutation(f5, cyc)});
    CHECK(a.order() == n);
    Subspace inv = invariants(a);
    CHECK(inv.dim() == n);
    // a circulant: sum over i of e_{i, i+k} is fixed
    for (std::size_t k = 0; k < n; ++k) {
      Vec c = zero_vec(f5, n * n);
      for (std::size_t i = 0; i < n; ++i) c[i * n + (i + k) % n] = Scalar::one(f5);
      CHECK(inv.contains(c));
    }
  }
  // S_3 on gl(3): invariants are spanned by I and the all-off-diagonal matrix
  LieAlgebra gl3 = catalog("gl", 3, f5);
  GroupAction s3 = close_group(gl3, {gl_permutation(f5, {1, 0, 2}), gl_permutation(f5, {1, 2, 0})});
  CHECK(s3.order() == 6);
  auto an = group_analysis(s3.table);
  CHECK(!an.abelian);
  CHECK(an.metabelian);
  CHECK(an.solvable);
  CHECK(an.derived_series_orders == std::vector<std::size_t>{6, 3, 1});
  Subspace inv = invariants(s3);
  CHECK(inv.dim() == 2);
  Vec id = zero_vec(f5, 9), off = zero_vec(f5, 9);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      (i == j ? id : off)[i * 3 + j] = Scalar::one(f5);
  CHECK(inv.contains(id));
  CHECK(inv.contains(off));
}

TEST_CASE("hilbert 90 for cyclic actions") {
  GroupAction a = sl2_scaling_action(5, 3);
  CHECK(hilbert90_check(a, 1));
  // an element of order 2 in the C4 group does not generate
  std::size_t sq = a.table.at(1, 1);
  CHECK(a.table.element_order(sq) == 2);
  CHECK_THROWS_AS(hilbert90_check(a, sq), std::invalid_argument);

  Field f3 = Field::prime(3);
  LieAlgebra gl2 = catalog("gl", 2, f3);
  GroupAction c2 = close_group(gl2, {gl_permutation(f3, {1, 0})});
  CHECK(hilbert90_check(c2, 1));
}

TEST_CASE("gamma-abelian detection") {
  // sl(2) under U2: h_gamma = span(e1, e2) and [e1, e2] = e3, not abelian
  GroupAction u2 = sl2_scaling_action(5, 4);
  CHECK(!gamma_abelian_check(u2, 1));
  // aff(2) under diag(1, -1): h_gamma = span(e2)
  Field f5 = Field::prime(5);
  LieAlgebra a2 = catalog("aff2", 0, f5);
  Matrix g(f5, 2, 2);
  g.at(0, 0) = Scalar::one(f5);
  g.at(1, 1) = Scalar::from_int(f5, -1);
  GroupAction act = close_group(a2, {g});
  CHECK(act.order() == 2);
  CHECK(gamma_abelian_check(act, 1));
  auto cs = cyclic_structure(act, 1);
  CHECK(cs.cyclic);
  CHECK(cs.hilbert90);
  CHECK(cs.gamma_abelian);
  CHECK(cs.theta_trivial);
  CHECK(cs.ideal);
  CHECK(cs.semidirect_iso);
}

TEST_CASE("artin reconstruction on the test corpus") {
  std::vector<GroupAction> corpus;
  corpus.push_back(sl2_scaling_action(5, 4));
  corpus.push_back(sl2_scaling_action(5, 3));
  corpus.push_back(sl2_scaling_action(7, 3));
  {
    Field f5 = Field::prime(5);
    LieAlgebra gl3 = catalog("gl", 3, f5);
    corpus.push_back(close_group(gl3, {gl_permutation(f5, {1, 2, 0})}));
    corpus.push_back(
        close_group(gl3, {gl_permutation(f5, {1, 0, 2}), gl_permutation(f5, {1, 2, 0})}));
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CAPTURE(i);
    ArtinResult res = artin_reconstruct(corpus[i]);
    CHECK(res.skew.all_ok());
    CHECK((res.kind == ProductKind::Skew || res.kind == ProductKind::Semidirect));
    CHECK(res.theta_matches);
    CHECK(res.phi_ok);
  }
}

TEST_CASE("trivial group action") {
  Field f5 = Field::prime(5);
  LieAlgebra sl2 = catalog("sl", 2, f5);
  GroupAction a = close_group(sl2, {});
  CHECK(a.order() == 1);
  CHECK(invariants(a) == Subspace::full(f5, 3));
  ReynoldsData rd = reynolds(a);
  CHECK(rd.t == Matrix::identity(f5, 3));
  CHECK(rd.kernel.dim() == 0);
  auto an = group_analysis(a.table);
  CHECK(an.cyclic);
  CHECK(an.elementary_abelian);
  CHECK(hilbert90_check(a, 0));
  CHECK(gamma_abelian_check(a, 0));
}

TEST_CASE("gl conjugation action") {
  Field f7 = Field::prime(7);
  LieAlgebra gl2 = catalog("gl", 2, f7);
  Matrix m(f7, 2, 2);
  m.at(0, 0) = Scalar::from_int(f7, 2);
  m.at(0, 1) = Scalar::one(f7);
  m.at(1, 1) = Scalar::one(f7);
  Matrix conj = gl_conjugation(f7, 2, m);
  CHECK(is_automorphism(gl2, conj));
  GroupAction a = close_group(gl2, {conj});
  CHECK(a.order() > 1);
  // the identity matrix of gl(2) is always invariant under conjugation
  Vec id = zero_vec(f7, 4);
  id[0] = id[3] = Scalar::one(f7);
  CHECK(invariants(a).contains(id));
}
