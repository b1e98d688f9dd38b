#include "doctest.h"

#include "closed_forms.hpp"
#include "flagschur/errors.hpp"
#include "flagschur/stabilization.hpp"

using namespace flagschur;

namespace {

Matrix gen_matrix(int n, int i, int j) {
  Matrix m(n);
  if (i != j) m(i, j) = 1;
  return m;
}

}  // namespace

TEST_CASE("single factor stabilizes to itself") {
  const Matrix a = Matrix::from_rows({{0, 1}, {0, -1}});
  const StableQuery q{{a}};
  CHECK(min_valid_shift(q) == 1);
  const auto sp = stabilize(q);
  REQUIRE(sp.terms.size() == 1);
  CHECK(sp.terms[0].z == a);
  CHECK(sp.terms[0].g == BiPoly({LaurentPoly(1L)}));
  CHECK(sp.held_out_ps.size() >= 2);
}

TEST_CASE("malformed queries") {
  CHECK_THROWS_AS(min_valid_shift(StableQuery{}), DomainError);
  const Matrix a = Matrix::from_rows({{0, 1}, {0, 0}});
  CHECK_THROWS_AS(min_valid_shift(StableQuery{{a, a}}), DomainError);
  CHECK_THROWS_AS(min_valid_shift(StableQuery{{Matrix::from_rows({{0, -1}, {0, 0}})}}), DomainError);
}

TEST_CASE("sampled support of E12 * E12 in n = 2") {
  const Matrix e = Matrix::from_rows({{0, 1}, {0, 0}});
  const Matrix lhs = Matrix::from_rows({{1, 1}, {0, -1}});  // co(lhs) = ro(e)
  const StableQuery q{{lhs, e}};
  for (int p = 2; p <= 6; ++p) {
    const auto x = sample_product(q, p);
    REQUIRE(x.terms().size() == 1);
    const Matrix m = x.terms().begin()->first;
    CHECK(hat(m) == Matrix::from_rows({{0, 2}, {0, 0}}));
  }
}

TEST_CASE("generator products stabilize with held-out validation") {
  for (int n = 2; n <= 3; ++n) {
    for (int i = 0; i < n; ++i)
      for (int a = i; a < n; ++a)
        for (int j = 0; j < n; ++j)
          for (int b = j; b < n; ++b) {
            const Matrix x = gen_matrix(n, i, a);
            const Matrix y = gen_matrix(n, j, b);
            WeightVec lambda(static_cast<std::size_t>(n), 1);
            const WeightVec mu = [&] {
              WeightVec m = lambda;
              const auto c = co(x);
              const auto r = ro(y);
              for (int k = 0; k < n; ++k) m[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k)] - r[static_cast<std::size_t>(k)];
              return m;
            }();
            const StableQuery q{{add_diag(x, lambda), add_diag(y, mu)}};
            const auto sp = stabilize(q);
            CHECK(sp.held_out_ps.size() >= 2);
            for (int p : sp.fit_ps) CHECK(reproduces(q, sp, p));
            for (int p : sp.held_out_ps) CHECK(reproduces(q, sp, p));
            const int last = sp.held_out_ps.back();
            CHECK(reproduces(q, sp, last + 1));
            CHECK(reproduces(q, sp, last + 2));
          }
  }
}

TEST_CASE("first-case products have v'-independent constants") {
  const int n = 4;
  // i < j < b < a: (i, a, j, b) = (0, 3, 1, 2)
  const StableQuery q{{gen_matrix(n, 0, 3), add_diag(gen_matrix(n, 1, 2), {0, -1, 0, 1})}};
  const auto sp = stabilize(q);
  for (const auto& t : sp.terms) CHECK(t.g.degree() == 0);
}

TEST_CASE("specialization") {
  StableProduct sp;
  sp.terms.push_back({Matrix::from_rows({{0, 1}, {0, 0}}), BiPoly({LaurentPoly(0L), LaurentPoly(1L)}), 0});
  sp.terms.push_back({Matrix::from_rows({{0, 0}, {1, 0}}), BiPoly({LaurentPoly(1L), LaurentPoly(-1L)}), 0});
  const auto s = specialize(sp);
  REQUIRE(s.size() == 1);
  CHECK(s[0].second == LaurentPoly(1L));
  CHECK(specialized_integral(s));
}

TEST_CASE("limit generators") {
  CHECK(limit_generator(1, 0, 2).is_zero());
  const auto d = limit_generator(0, 0, 3).symbols();
  REQUIRE(d.size() == 1);
  CHECK(d[0].hat == Matrix(3));
  CHECK(d[0].weight == WeightVec{1, 0, 0});
  CHECK(d[0].scale == LaurentPoly(1L));
  const auto u = limit_generator(0, 1, 3).symbols();
  REQUIRE(u.size() == 1);
  CHECK(u[0].hat == Matrix::unit(3, 0, 1));
  CHECK(u[0].scale == LaurentPoly::v(1) - LaurentPoly::v(-1));
}

TEST_CASE("formal products reproduce the proof's closed forms") {
  const int n = 4;
  for (const auto& cf : testing::proof_closed_forms(n)) {
    const auto got = formal_product(limit_generator(cf.x1, cf.y1, n), limit_generator(cf.x2, cf.y2, n));
    CHECK_MESSAGE(got == cf.expected, cf.label << " at " << cf.x1 << cf.y1 << "," << cf.x2 << cf.y2 << ": got "
                                              << got.to_string() << " expected " << cf.expected.to_string());
  }
  CHECK(formal_product(UElement(n), limit_generator(0, 1, n)).is_zero());
}

TEST_CASE("recognized products re-expand at a fresh diagonal") {
  const int n = 3;
  const auto prod = formal_product(limit_generator(0, 1, n), limit_generator(1, 2, n));
  // t12 t23 on [E12 + D_λ][E23 + D_μ] with λ = (4, 2, 5)
  const WeightVec lambda{4, 2, 5};
  const Matrix x = add_diag(Matrix::unit(n, 0, 1), lambda);
  WeightVec mu(static_cast<std::size_t>(n));
  const auto cx = co(x);
  const auto ry = ro(Matrix::unit(n, 1, 2));
  for (int k = 0; k < n; ++k) mu[static_cast<std::size_t>(k)] = cx[static_cast<std::size_t>(k)] - ry[static_cast<std::size_t>(k)];
  const auto terms = specialize(stabilize(StableQuery{{x, add_diag(Matrix::unit(n, 1, 2), mu)}}));
  const LaurentPoly s = LaurentPoly::v(1) - LaurentPoly::v(-1);
  const LaurentPoly weight = LaurentPoly::v(lambda[0] + mu[1]);
  for (const auto& [z, g] : terms) {
    const auto w_it = prod.terms().find({hat(z), WeightVec{1, 1, 0}});
    REQUIRE(w_it != prod.terms().end());
    const auto nu = diagonal(z);
    CHECK(s * s * weight * g == w_it->second.shifted(nu[0] + nu[1]));
  }
  CHECK(terms.size() == prod.terms().size());
}

TEST_CASE("limit RTT relation") {
  for (int n = 1; n <= 3; ++n) CHECK(verify_limit_rtt(n).ok());
}
