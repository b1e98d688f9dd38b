#include "doctest.h"

#include "flagschur/errors.hpp"
#include "flagschur/flag_oracle.hpp"

using namespace flagschur;

TEST_CASE("flag counts") {
  CHECK(enumerate_flags(2, 2, 2).size() == 5);
  CHECK(enumerate_flags(2, 2, 3).size() == 6);
  CHECK(enumerate_subspaces(2, 3, 1).size() == 7);
  CHECK(enumerate_subspaces(3, 4, 2).size() == 130);
  CHECK_THROWS_AS(enumerate_flags(3, 6, 3, 100), TooLarge);
}

TEST_CASE("orbit matrices: two routes, canonical pairs, transpose symmetry") {
  for (int q : {2, 3}) {
    for (const auto& a : enumerate_theta(2, 3)) {
      auto [f, g] = canonical_pair(a, q);
      CHECK(orbit_matrix(f, g) == a);
      CHECK(orbit_matrix_by_intersections(f, g) == a);
      CHECK(orbit_matrix(g, f) == a.transpose());
    }
  }
  const auto flags = enumerate_flags(3, 2, 2);
  for (const auto& f : flags) {
    for (const auto& g : flags) {
      CHECK(orbit_matrix(f, g) == orbit_matrix_by_intersections(f, g));
      CHECK(orbit_matrix(g, f) == orbit_matrix(f, g).transpose());
    }
  }
}

TEST_CASE("small convolution constants") {
  const Matrix b = Matrix::from_rows({{1, 1}, {0, 0}});
  const Matrix a = Matrix::from_rows({{0, 0}, {1, 1}});
  const Matrix d2 = Matrix::from_rows({{2, 0}, {0, 0}});
  CHECK(convolve_oracle(b, a, b, 2) == 0);
  CHECK(convolve_oracle(d2, d2, d2, 3) == 1);
  // Every line of F_q^2 is an intermediate flag: q + 1 of them.
  const Matrix up = Matrix::from_rows({{1, 1}, {0, 0}});
  const Matrix low = Matrix::from_rows({{1, 0}, {1, 0}});
  CHECK(convolve_oracle(up, low, d2, 2) == 3);
  CHECK(convolve_oracle(up, low, d2, 3) == 4);
}

TEST_CASE("counting lemmas") {
  for (int q : {2, 3}) {
    for (int m = 1; m <= 4; ++m) {
      for (int n = 1; n <= m; ++n) {
        const auto rep = verify_counting_lemmas(q, m, n);
        CHECK(rep.ok());
        CHECK(rep.second_applicable == (n < m));
      }
    }
  }
  CHECK_THROWS_AS(verify_counting_lemmas(4, 2, 1), DomainError);
}
