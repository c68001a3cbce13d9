#include <doctest.h>

#include "cellule/laurent.hpp"

using namespace cellule;

TEST_SUITE_BEGIN("laurent");

TEST_CASE("basic arithmetic and degree") {
  LaurentPoly p = LaurentPoly::monomial(1, 2) + LaurentPoly::constant(3);
  CHECK(p.deg() == 2);
  CHECK(p.coeff(0) == 3);
  CHECK(p.str() == "v^2 + 3");
  CHECK((p - p).is_zero());
  CHECK(LaurentPoly().deg() == LaurentPoly::NEG_INF);

  LaurentPoly xi = LaurentPoly::xi(2);
  CHECK(xi.str() == "v^2 - v^-2");
  CHECK((xi * xi).coeff(0) == -2);
  CHECK((xi * xi).coeff(4) == 1);
}

TEST_CASE("bar involution") {
  LaurentPoly p = LaurentPoly::monomial(1, 2) + LaurentPoly::constant(3);
  CHECK(p.bar().str() == "3 + v^-2");
  CHECK(p.bar().bar() == p);
}

TEST_CASE("strictly negative part") {
  CHECK(LaurentPoly().strictly_negative());
  CHECK(LaurentPoly::monomial(-2, -1).strictly_negative());
  CHECK_FALSE(LaurentPoly::constant(1).strictly_negative());
}

TEST_CASE("antisymmetric solve") {
  // p with bar(p) - p = v - v^-1 is v^-1
  LaurentPoly a = LaurentPoly::xi(1);
  LaurentPoly p = LaurentPoly::solve_antisymmetric(a);
  CHECK(p == LaurentPoly::monomial(1, -1));
  CHECK(p.bar() - p == a);

  CHECK(LaurentPoly::solve_antisymmetric(LaurentPoly()).is_zero());

  // 3v^4 - 2v + 2v^-1 - 3v^-4 solves to 3v^-4 - 2v^-1... check the defining identity
  LaurentPoly b = LaurentPoly::monomial(3, 4) + LaurentPoly::monomial(-2, 1) +
                  LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-3, -4);
  LaurentPoly q = LaurentPoly::solve_antisymmetric(b);
  CHECK(q.strictly_negative());
  CHECK(q.bar() - q == b);

  CHECK_THROWS_AS(LaurentPoly::solve_antisymmetric(LaurentPoly::constant(1)), Error);
}

TEST_CASE("string forms") {
  CHECK(LaurentPoly().str() == "0");
  CHECK(LaurentPoly::monomial(1, -1).str() == "v^-1");
  CHECK(LaurentPoly::monomial(-1, 1).str() == "-v");
  CHECK((LaurentPoly::monomial(2, 3) + LaurentPoly::monomial(-1, -2)).str() == "2v^3 - v^-2");
}

TEST_SUITE_END();
