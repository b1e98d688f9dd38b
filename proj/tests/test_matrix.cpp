#include "doctest.h"

#include "flagschur/matrix.hpp"

using namespace flagschur;

TEST_CASE("row and column sums") {
  const Matrix a = Matrix::from_rows({{1, 2, 0}, {0, 1, 3}, {1, 0, 0}});
  CHECK(ro(a) == WeightVec{3, 4, 1});
  CHECK(co(a) == WeightVec{2, 3, 3});
  CHECK(a.total() == 8);
  CHECK(ro(a.transpose()) == co(a));
}

TEST_CASE("theta enumeration") {
  CHECK(enumerate_theta(2, 1).size() == 4);
  CHECK(enumerate_theta(2, 2).size() == 10);
  CHECK(enumerate_theta(3, 3).size() == 165);
  CHECK(compositions(3, 2).size() == 6);
  CHECK(compositions(2, 2).front() == WeightVec{0, 2});
}

TEST_CASE("normalization exponent and orbit dimension") {
  const Matrix a = Matrix::from_rows({{1, 1}, {0, 0}});
  CHECK(norm_exponent(a) == 1);
  CHECK(norm_exponent(Matrix::identity(3)) == 0);
  for (const auto& m : enumerate_theta(3, 3)) {
    const long d = m.total();
    CHECK(dim_orbit(m) + dim_stab(m) == d * d);
  }
}

TEST_CASE("order and hats") {
  const Matrix a = Matrix::from_rows({{1, 1}, {0, 1}});
  const Matrix b = Matrix::from_rows({{2, 0}, {0, 1}});
  CHECK(preceq(b, a));
  CHECK_FALSE(preceq(a, b));
  CHECK(is_hat(hat(a)));
  CHECK(shift(hat(a), 2) == Matrix::from_rows({{2, 1}, {0, 2}}));
  Matrix t = Matrix::from_rows({{-1, 1}, {0, 0}});
  CHECK(is_tilde(t));
  CHECK_FALSE(is_theta(t));
  CHECK(a.to_string() == "[[1,1],[0,1]]");
}
