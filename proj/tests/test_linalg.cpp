#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "galie/matrix.hpp"

using namespace galie;

namespace {

Matrix random_matrix(std::mt19937& rng, const Field& f, std::size_t r, std::size_t c) {
  Matrix m(f, r, c);
  if (f.is_prime_field()) {
    std::uniform_int_distribution<std::uint32_t> d(0, f.p - 1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::residue(f, d(rng));
  } else {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        m.at(i, j) = Scalar::from_rational(Rational(num(rng), den(rng)));
  }
  return m;
}

}  // namespace

TEST_CASE("field parsing and scalar arithmetic") {
  CHECK(Field::parse("Q")->is_rationals());
  CHECK(Field::parse("F5")->p == 5);
  CHECK(!Field::parse("F4"));
  CHECK(!Field::parse("F"));
  CHECK(!Field::parse("fp5"));
  CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);

  Field q = Field::rationals();
  Scalar a = *Scalar::parse(q, "2/3");
  Scalar b = *Scalar::parse(q, "-1/6");
  CHECK((a + b).to_string() == "1/2");
  CHECK((a * b).to_string() == "-1/9");
  CHECK((a / b).to_string() == "-4");
  CHECK_THROWS_AS(Scalar::zero(q).inverse(), std::domain_error);

  Field f7 = Field::prime(7);
  Scalar x = *Scalar::parse(f7, "-1");
  CHECK(x.residue_value() == 6);
  Scalar half = *Scalar::parse(f7, "1/2");
  CHECK(half.residue_value() == 4);
  CHECK((half * Scalar::from_int(f7, 2)).is_one());
  CHECK(!Scalar::parse(f7, "1/7"));
  CHECK_THROWS_AS(Scalar::from_int(q, 1) + Scalar::from_int(f7, 1), std::invalid_argument);
}

TEST_CASE("rref gives a canonical subspace representation") {
  Field f5 = Field::prime(5);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix m = random_matrix(rng, f5, 4, 6);
    Subspace s = Subspace::row_span(m);
    // shuffle and rescale the rows: same span, same canonical form
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    std::shuffle(rows.begin(), rows.end(), rng);
    std::uniform_int_distribution<std::uint32_t> d(1, 4);
    for (auto& r : rows) r = scale(Scalar::residue(f5, d(rng)), r);
    rows.push_back(add(rows[0], rows[1]));
    CHECK(Subspace::row_span(Matrix::from_rows(f5, rows)) == s);
  }
}

TEST_CASE("subspace membership, coordinates, sum, intersection") {
  Field q = Field::rationals();
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    Subspace u = Subspace::row_span(random_matrix(rng, q, 2, 5));
    Subspace w = Subspace::row_span(random_matrix(rng, q, 2, 5));
    Subspace s = u.sum(w);
    Subspace i = u.intersect(w);
    CHECK(s.contains(u));
    CHECK(s.contains(w));
    CHECK(u.contains(i));
    CHECK(w.contains(i));
    CHECK(s.dim() + i.dim() == u.dim() + w.dim());
    for (std::size_t r = 0; r < u.dim(); ++r) {
      Vec v = u.basis().row(r);
      auto c = u.coordinates(v);
      REQUIRE(c);
      // reconstruct from coordinates
      Vec back = zero_vec(q, 5);
      for (std::size_t k = 0; k < u.dim(); ++k)
        back = add(back, scale((*c)[k], u.basis().row(k)));
      CHECK(back == v);
    }
  }
  Subspace z = Subspace::zero(q, 4);
  CHECK(z.dim() == 0);
  CHECK(z.contains(zero_vec(q, 4)));
  CHECK(!z.contains(unit_vec(q, 4, 1)));
  CHECK(Subspace::full(q, 4).contains(unit_vec(q, 4, 3)));
}

TEST_CASE("solve_linear: particular plus kernel describes all solutions") {
  std::mt19937 rng(37);
  for (const Field& f : {Field::rationals(), Field::prime(3)}) {
    for (int trial = 0; trial < 40; ++trial) {
      Matrix a = random_matrix(rng, f, 4, 5);
      Matrix x = random_matrix(rng, f, 5, 2);
      Matrix b = a * x;
      auto sol = solve_linear(a, b);
      REQUIRE(sol);
      CHECK(a * sol->particular == b);
      for (std::size_t k = 0; k < sol->kernel.dim(); ++k)
        CHECK(::galie::is_zero(a.apply(sol->kernel.basis().row(k))));
      // x - particular must lie in the kernel columnwise
      for (std::size_t j = 0; j < 2; ++j)
        CHECK(sol->kernel.contains(sub(x.col(j), sol->particular.col(j))));
      CHECK(sol->kernel.dim() == 5 - rref(a).rank);
    }
  }
}

TEST_CASE("solve_linear reports inconsistency") {
  Field q = Field::rationals();
  Matrix a(q, 2, 2);
  a.at(0, 0) = Scalar::one(q);
  a.at(1, 0) = Scalar::one(q);
  Vec b{Scalar::one(q), Scalar::from_int(q, 2)};
  CHECK(!solve_linear(a, Matrix::column(b)));
}

TEST_CASE("invert") {
  std::mt19937 rng(41);
  Field f7 = Field::prime(7);
  int invertible = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Matrix a = random_matrix(rng, f7, 4, 4);
    auto inv = invert(a);
    if (rref(a).rank < 4) {
      CHECK(!inv);
      continue;
    }
    ++invertible;
    REQUIRE(inv);
    CHECK(a * *inv == Matrix::identity(f7, 4));
    CHECK(*inv * a == Matrix::identity(f7, 4));
  }
  CHECK(invertible > 0);
}

TEST_CASE("flatten round trip and lex order") {
  Field q = Field::rationals();
  std::mt19937 rng(53);
  Matrix m = random_matrix(rng, q, 3, 4);
  CHECK(unflatten(q, 3, 4, flatten(m)) == m);
  Matrix a = Matrix::identity(q, 2);
  Matrix b = a;
  b.at(1, 1) = Scalar::from_int(q, 2);
  CHECK(a.lex_less(b));
  CHECK(!b.lex_less(a));
  CHECK(!a.lex_less(a));
}
