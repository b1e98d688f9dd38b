#include "doctest.h"

#include "flagschur/errors.hpp"
#include "flagschur/json_io.hpp"

using namespace flagschur;
namespace jio = flagschur::json_io;

TEST_CASE("laurent form") {
  const LaurentPoly p = LaurentPoly::v(2) - LaurentPoly(1L);
  CHECK(jio::to_json(p).dump() == R"({"2":"1","0":"-1"})");
  CHECK(jio::laurent_from_json(jio::parse(R"({"2":"1","0":"-1"})")) == p);
  const LaurentPoly half = jio::laurent_from_json(jio::parse(R"({"-3":"3/6"})"));
  CHECK(half.coeff(-3) == Rational(1, 2));
  CHECK_THROWS_AS(jio::laurent_from_json(jio::parse(R"({"x":"1"})")), ParseError);
  CHECK_THROWS_AS(jio::laurent_from_json(jio::parse(R"({"1":"1/0"})")), ParseError);
  CHECK_THROWS_AS(jio::laurent_from_json(jio::parse(R"({"1":"one"})")), ParseError);
}

TEST_CASE("matrix and element round trips") {
  const Matrix m = Matrix::from_rows({{1, 1}, {0, 0}});
  CHECK(jio::to_json(m).dump() == R"({"n":2,"rows":[[1,1],[0,0]]})");
  CHECK(jio::matrix_from_json(jio::to_json(m)) == m);
  CHECK_THROWS_AS(jio::matrix_from_json(jio::parse(R"({"n":2,"rows":[[1,1]]})")), ParseError);

  const auto t = generator_tbar(0, 1, 3, 2);
  const auto j = jio::to_json(t);
  CHECK(j["basis"] == "bracket");
  CHECK(jio::schur_from_json(j) == t);
  // terms come out in matrix order
  Matrix prev;
  bool first = true;
  for (const auto& term : j["terms"]) {
    const Matrix cur = jio::matrix_from_json(term["matrix"]);
    if (!first) CHECK(prev < cur);
    prev = cur;
    first = false;
  }
  CHECK_THROWS_AS(jio::schur_from_json(jio::parse(R"({"n":2,"d":1,"terms":[{"matrix":{"n":2,"rows":[[1,1],[0,0]]},"coeff":{"0":"1"}}]})")),
                  ParseError);
  CHECK_THROWS_AS(jio::parse("{"), ParseError);
}

TEST_CASE("stable products and formal elements") {
  StableProduct sp;
  sp.terms.push_back({Matrix::from_rows({{0, 1}, {0, -1}}), BiPoly({LaurentPoly(1L)}), 0});
  sp.terms.push_back({Matrix::from_rows({{0, 0}, {0, 1}}), BiPoly({LaurentPoly::v(2), LaurentPoly(), LaurentPoly(-1L)}), 1});
  const auto j = jio::to_json(sp);
  CHECK(j.size() == 2);
  CHECK_FALSE(j[0].contains("den"));
  CHECK(j[1]["den"] == 1);
  CHECK(jio::bipoly_from_json(j[1]["G"]) == sp.terms[1].g);

  const auto u = limit_generator(0, 2, 3) + limit_generator(1, 1, 3);
  CHECK(jio::uelement_from_json(jio::to_json(u)) == u);
  CHECK(jio::uelement_from_json(jio::parse(R"({"n":3,"symbols":[]})")).is_zero());
  CHECK_THROWS_AS(jio::uelement_from_json(jio::parse("[]")), ParseError);

  const auto q = jio::query_from_json(jio::parse(R"({"factors":[{"n":1,"rows":[[-2]]}]})"));
  CHECK(min_valid_shift(q) == 2);
  CHECK_THROWS_AS(jio::query_from_json(jio::parse(R"({"factors":[]})")), ParseError);
}
