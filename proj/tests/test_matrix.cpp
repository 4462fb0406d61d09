#include <doctest.h>

#include "freestar/matrix.hpp"
#include "freestar/parser.hpp"
#include "testutil.hpp"

using namespace freestar;
using testutil::Rng;

namespace {

Matrix M(std::vector<std::vector<long>> rows) {
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = Scalar(rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("determinant and minors, exact") {
  CHECK(det(M({{1}})) == Scalar(1));
  CHECK(det(M({{1, 2}, {2, 1}})) == Scalar(-3));
  CHECK(det(M({{2, 1}, {1, 2}})) == Scalar(3));
  CHECK(det(M({{0, 1}, {0, 0}})) == Scalar(0));

  auto minors = leading_principal_minors(M({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}));
  REQUIRE(minors.size() == 3);
  CHECK(minors[0] == Scalar(2));
  CHECK(minors[1] == Scalar(3));
  CHECK(minors[2] == Scalar(4));
}

TEST_CASE("positive definiteness via exact minors") {
  CHECK(is_positive_definite(M({{1}})));
  CHECK_FALSE(is_positive_definite(M({{1, 2}, {2, 1}})));
  CHECK(is_positive_definite(M({{2, 1}, {1, 2}})));
  CHECK_THROWS_AS(is_positive_definite(M({{1, 2}, {3, 1}})), PreconditionError);

  // hermitian gaussian case
  Matrix h(2, 2);
  h.at(0, 0) = Scalar(2);
  h.at(1, 1) = Scalar(2);
  h.at(0, 1) = Scalar(Rational(0), Rational(1));
  h.at(1, 0) = Scalar(Rational(0), Rational(-1));
  CHECK(is_positive_definite(h));  // minors 2, 3
}

TEST_CASE("solve is exact and detects singularity") {
  Matrix a = M({{2, 1}, {1, 3}});
  Matrix b = M({{1, 0}, {0, 1}});
  Matrix x = solve(a, b);
  CHECK(a * x == Matrix::identity(2));
  CHECK_THROWS_AS(solve(M({{1, 1}, {1, 1}}), b), PreconditionError);
}

TEST_CASE("rref and kernel") {
  Matrix m = M({{1, 2, 3}, {2, 4, 6}});
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) {
    Scalar dot(0);
    for (size_t j = 0; j < v.size(); ++j) dot += m.at(0, static_cast<int>(j)) * v[j];
    CHECK(dot.is_zero());
  }

  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    Matrix r(3, 5);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 5; ++j) r.at(i, j) = rng.scalar(FieldMode::Rational);
    for (const auto& v : kernel_basis(r)) {
      auto prod = mat_vec(r, v);
      for (const auto& c : prod) CHECK(c.is_zero());
    }
  }
}

TEST_CASE("polynomial echelon bases are canonical") {
  PolyEchelon e1, e2;
  Polynomial a = parse_poly("x1 + x2", 2, FieldMode::Rational);
  Polynomial b = parse_poly("x1 - x2", 2, FieldMode::Rational);
  // insertion order must not matter for the resulting basis
  e1.insert(a);
  e1.insert(b);
  e2.insert(b);
  e2.insert(a + b);
  auto b1 = e1.basis(), b2 = e2.basis();
  REQUIRE(b1.size() == 2);
  CHECK(b1 == b2);
  CHECK(e1.contains(a.scaled(Scalar(7)) + b));
  CHECK_FALSE(e1.contains(parse_poly("x1*x2", 2, FieldMode::Rational)));
}

TEST_CASE("sqrt upper bound") {
  CHECK(Rational::sqrt_upper_bound(Rational(4)) == Rational(2));
  Rational b = Rational::sqrt_upper_bound(Rational(3, 4));
  CHECK(b * b >= Rational(3, 4));
  CHECK(b <= Rational(1));
  CHECK(Rational::sqrt_upper_bound(Rational(0)).is_zero());
}
