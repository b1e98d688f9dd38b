#pragma once

#include <cstddef>
#include <vector>

#include "flagschur/flag_oracle.hpp"
#include "flagschur/laurent.hpp"
#include "flagschur/matrix.hpp"

namespace flagschur {

struct OracleMismatch {
  Matrix b;
  Matrix a;
  Matrix c;
  int q = 0;
  Rational formula;
  long oracle = 0;
};

struct OracleSweepReport {
  int n = 0;
  int d = 0;
  int q = 0;
  long checked = 0;  // (B, A, C) triples compared
  std::vector<OracleMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Every (B, A, C) in Theta_d with B formula-shaped (diagonal, single entry,
/// divided power or upper chain): the formula's coefficient of e_C at v^2 = q
/// against the flag count.
OracleSweepReport verify_formulas_against_oracle(int n, int d, int q, std::size_t cap = kDefaultFlagCap);

struct TriangularSweepReport {
  int n = 0;
  int d = 0;
  long checked = 0;
  std::vector<Matrix> failures;  // A whose product is not chi_A e_A + lower terms
  bool ok() const { return failures.empty(); }
};

TriangularSweepReport verify_triangular(int n, int d);

}  // namespace flagschur
