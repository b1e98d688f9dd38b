#include "doctest.h"

#include "flagschur/errors.hpp"
#include "flagschur/flag_oracle.hpp"
#include "flagschur/schur.hpp"

using namespace flagschur;

namespace {

// Compares every structure constant landing on each target C with the brute-force count.
int compare_with_oracle(int n, int d, int q, bool (*accept)(const Matrix&)) {
  int mismatches = 0;
  for (const auto& c : enumerate_theta(n, d)) {
    const auto counts = oracle_constants_into(c, q);
    for (const auto& b : enumerate_theta(n, d)) {
      if (!accept(b) || ro(b) != ro(c)) continue;
      for (const auto& a : enumerate_theta(n, d)) {
        if (co(b) != ro(a) || co(a) != co(c)) continue;
        const auto spec = specialize_e(mult_basis(b, a), q);
        auto it = spec.find(c);
        const Rational got = it == spec.end() ? Rational(0) : it->second;
        auto jt = counts.find({b, a});
        const long want = jt == counts.end() ? 0 : jt->second;
        if (got != want) {
          ++mismatches;
          MESSAGE(b.to_string() << " * " << a.to_string() << " at " << c.to_string() << " q=" << q
                                << ": formula " << got.get_str() << " oracle " << want);
        }
      }
    }
  }
  return mismatches;
}

bool single_upper(const Matrix& b) { return classify(b) == Shape::SingleUpper; }
bool single_lower(const Matrix& b) { return classify(b) == Shape::SingleLower; }
bool chain(const Matrix& b) { return classify(b) == Shape::UpperChain; }
bool divided(const Matrix& b) { return classify(b) == Shape::DividedPower; }

}  // namespace

TEST_CASE("upper elementary formula matches flag counts") {
  for (int q : {2, 3}) {
    CHECK(compare_with_oracle(2, 3, q, single_upper) == 0);
    CHECK(compare_with_oracle(3, 3, q, single_upper) == 0);
  }
}

TEST_CASE("lower elementary formula matches flag counts") {
  for (int q : {2, 3}) {
    CHECK(compare_with_oracle(2, 3, q, single_lower) == 0);
    CHECK(compare_with_oracle(3, 3, q, single_lower) == 0);
  }
}

TEST_CASE("chain formula matches flag counts") {
  for (int q : {2, 3}) CHECK(compare_with_oracle(3, 3, q, chain) == 0);
}

TEST_CASE("divided powers match flag counts") {
  for (int q : {2, 3}) {
    CHECK(compare_with_oracle(2, 3, q, divided) == 0);
    CHECK(compare_with_oracle(3, 3, q, divided) == 0);
  }
}

TEST_CASE("chain of length one reduces to the elementary formula") {
  const Matrix b = Matrix::from_rows({{0, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  for (const auto& a : enumerate_theta(3, 3)) {
    if (co(b) != ro(a)) continue;
    CHECK(mult_chain(b, a) == mult_elementary_upper(b, a));
  }
}

TEST_CASE("shape errors") {
  const Matrix b = Matrix::from_rows({{0, 1}, {1, 0}});
  const Matrix a = Matrix::from_rows({{1, 0}, {0, 1}});
  CHECK_THROWS_AS(mult_elementary_upper(b, a), UnsupportedShape);
  CHECK_THROWS_AS(mult_chain(b, a), UnsupportedShape);
  const Matrix u = Matrix::from_rows({{0, 1}, {0, 1}});
  CHECK_THROWS_AS(mult_elementary_upper(u, Matrix::from_rows({{2, 0}, {0, 0}})), Incompatible);
  CHECK(classify(b) == Shape::Other);
}

TEST_CASE("basis conversion round trip") {
  for (const auto& a : enumerate_theta(3, 2)) {
    const auto x = SchurElement::basis_element(a);
    CHECK(to_e(to_bracket(x)) == x);
    CHECK(to_bracket(x).coeff(a) == LaurentPoly::v(static_cast<int>(norm_exponent(a))));
  }
  const auto x = SchurElement::basis_element(Matrix::from_rows({{1, 1}, {0, 0}}));
  CHECK(to_bracket(x).coeff(Matrix::from_rows({{1, 1}, {0, 0}})) == LaurentPoly::v(1));
}

TEST_CASE("identity element is a two-sided unit") {
  const auto one = identity_element(3, 2);
  for (const auto& a : enumerate_theta(3, 2)) {
    const auto x = SchurElement::basis_element(a);
    CHECK(product(one, x) == x);
    CHECK(product(x, one) == x);
  }
}

TEST_CASE("general left factors via triangular route agree with oracle") {
  for (int q : {2, 3}) {
    CHECK(compare_with_oracle(2, 3, q, [](const Matrix& b) { return classify(b) == Shape::Other; }) == 0);
    CHECK(compare_with_oracle(3, 2, q, [](const Matrix& b) { return classify(b) == Shape::Other; }) == 0);
  }
}

TEST_CASE("associativity on generator triples") {
  const int n = 3;
  const int d = 3;
  std::vector<SchurElement> gens;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) gens.push_back(generator_tbar(i, j, n, d));
  for (const auto& x : gens)
    for (const auto& y : gens)
      for (const auto& z : gens) CHECK(product(product(x, y), z) == product(x, product(y, z)));
}

TEST_CASE("RTT relations in small Schur algebras") {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 0; d <= 3; ++d) {
      const auto rep = verify_rtt_schur(n, d);
      CHECK_MESSAGE(rep.ok(), "n=" << n << " d=" << d << " failures=" << rep.failures.size()
                                   << (rep.ok() ? "" : " first " + rep.failures[0].relation));
    }
  }
}

TEST_CASE("triangular decomposition for n = 3") {
  for (int d = 0; d <= 3; ++d) {
    for (const auto& a : enumerate_theta(3, d)) {
      const auto res = triangular_product(a);
      CHECK_MESSAGE(res.leading_ok, a.to_string());
    }
  }
  const auto f = triangular_factors(Matrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
  REQUIRE(f.size() == 6);
  const std::vector<std::pair<int, int>> order{{1, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}, {0, 1}};
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(f[k].i == order[k].first);
    CHECK(f[k].j == order[k].second);
  }
}
