#include "doctest.h"

#include <vector>

#include "flagschur/errors.hpp"
#include "flagschur/laurent.hpp"

using namespace flagschur;

TEST_CASE("arithmetic and normal form") {
  const LaurentPoly v = LaurentPoly::v(1);
  const LaurentPoly one(1L);
  CHECK((v - v).is_zero());
  CHECK(((v + one) * (v - one)) == LaurentPoly::v(2) - one);
  CHECK((LaurentPoly::v(2) - one).to_string() == "v^2 - 1");
  CHECK(LaurentPoly::v(-3).shifted(3) == one);
  CHECK(LaurentPoly::v(2).substitute_power(-1) == LaurentPoly::v(-2));
  CHECK((v + one).pow(3).coeff(1) == 3);
}

TEST_CASE("quantum integers") {
  CHECK(quantum_bracket(1) == LaurentPoly(1L));
  CHECK(quantum_bracket(3) == LaurentPoly(1L) + LaurentPoly::v(2) + LaurentPoly::v(4));
  CHECK(quantum_factorial(0) == LaurentPoly(1L));
  CHECK(quantum_factorial(3) == quantum_bracket(2) * quantum_bracket(3));
  CHECK_THROWS_AS(quantum_bracket(0), DomainError);
  CHECK(eval_even(quantum_bracket(3), 2) == 7);
  CHECK(eval_even(quantum_factorial(3), 3) == 4 * 13);
}

TEST_CASE("exact division") {
  const LaurentPoly den = LaurentPoly::v(2) - LaurentPoly(1L);
  const LaurentPoly num = LaurentPoly::v(6) - LaurentPoly(1L);
  CHECK(exact_div(num, den) == quantum_bracket(3));
  CHECK(exact_div(num.shifted(-5), den.shifted(2)) == quantum_bracket(3).shifted(-7));
  CHECK_THROWS_AS(exact_div(LaurentPoly::v(2), den), NotDivisible);
  CHECK_THROWS_AS(exact_div(num, LaurentPoly()), DomainError);
  const LaurentPoly half = exact_div(LaurentPoly(1L), LaurentPoly(2L));
  CHECK(half.coeff(0) == Rational(1, 2));
}

TEST_CASE("even specialization") {
  CHECK(eval_even(LaurentPoly::v(-2), 3) == Rational(1, 3));
  CHECK_THROWS_AS(eval_even(LaurentPoly::v(1), 2), OddExponent);
}

TEST_CASE("bipoly fitting") {
  // G = v^2 + (1 - v^2) v' + 3 v'^2
  const BiPoly g({LaurentPoly::v(2), LaurentPoly(1L) - LaurentPoly::v(2), LaurentPoly(3L)});
  std::vector<BiSample> samples;
  for (int p = 0; p < 5; ++p) samples.push_back({p, g.eval_shift(p)});
  CHECK(fit_bipoly(samples, 2) == g);
  CHECK(fit_bipoly(samples, 4) == g);
  CHECK_THROWS_AS(fit_bipoly(samples, 1), NoFit);
  CHECK_THROWS_AS(fit_bipoly(std::span(samples).first(2), 2), Underdetermined);
  CHECK(g.eval_one() == LaurentPoly(4L));
  std::vector<BiSample> dup{{1, LaurentPoly(1L)}, {1, LaurentPoly(1L)}};
  CHECK_THROWS_AS(fit_bipoly(dup, 1), DomainError);
}
