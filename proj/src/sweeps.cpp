#include "flagschur/sweeps.hpp"

#include "flagschur/schur.hpp"

namespace flagschur {

OracleSweepReport verify_formulas_against_oracle(int n, int d, int q, std::size_t cap) {
  OracleSweepReport rep{n, d, q, 0, {}};
  const auto theta = enumerate_theta(n, d);
  for (const auto& c : theta) {
    const auto counts = oracle_constants_into(c, q, cap);
    const WeightVec rc = ro(c);
    const WeightVec cc = co(c);
    for (const auto& b : theta) {
      if (classify(b) == Shape::Other || ro(b) != rc) continue;
      const WeightVec cb = co(b);
      for (const auto& a : theta) {
        if (ro(a) != cb || co(a) != cc) continue;
        const auto spec = specialize_e(mult_basis(b, a), q);
        const auto it = spec.find(c);
        const Rational got = it == spec.end() ? Rational(0) : it->second;
        const auto jt = counts.find({b, a});
        const long want = jt == counts.end() ? 0 : jt->second;
        ++rep.checked;
        if (got != want) rep.mismatches.push_back({b, a, c, q, got, want});
      }
    }
  }
  return rep;
}

TriangularSweepReport verify_triangular(int n, int d) {
  TriangularSweepReport rep{n, d, 0, {}};
  for (const auto& a : enumerate_theta(n, d)) {
    ++rep.checked;
    if (!triangular_product(a).leading_ok) rep.failures.push_back(a);
  }
  return rep;
}

}  // namespace flagschur
