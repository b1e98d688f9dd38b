#pragma once

#include <map>
#include <string>
#include <vector>

#include "flagschur/laurent.hpp"
#include "flagschur/matrix.hpp"

namespace flagschur {

/// Which orbit basis the coefficients refer to: the characteristic functions
/// e_A, or the normalized [A] = v^{-(d(A)-r(A))} e_A.
enum class Basis { E, Bracket };

std::string to_string(Basis b);

/// Element of the q-Schur algebra S_d: a finite combination of Theta_d
/// basis symbols with Laurent coefficients.
class SchurElement {
 public:
  using Terms = std::map<Matrix, LaurentPoly>;

  SchurElement(int n, int d, Basis basis = Basis::E);
  static SchurElement basis_element(const Matrix& a, Basis basis = Basis::E);

  int n() const { return n_; }
  int d() const { return d_; }
  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const Matrix& a) const;

  /// Adds c * (basis symbol of a). Throws DomainError unless a ∈ Theta_d.
  void add(const Matrix& a, const LaurentPoly& c);

  SchurElement& operator+=(const SchurElement& o);
  SchurElement& operator-=(const SchurElement& o);
  SchurElement& operator*=(const LaurentPoly& c);
  friend SchurElement operator+(SchurElement a, const SchurElement& b) { return a += b; }
  friend SchurElement operator-(SchurElement a, const SchurElement& b) { return a -= b; }
  friend SchurElement operator*(const LaurentPoly& c, SchurElement a) { return a *= c; }
  friend bool operator==(const SchurElement&, const SchurElement&) = default;

  std::string to_string() const;

 private:
  void check_compatible(const SchurElement& o) const;

  int n_;
  int d_;
  Basis basis_;
  Terms terms_;
};

SchurElement to_bracket(const SchurElement& x);
SchurElement to_e(const SchurElement& x);
SchurElement in_basis(const SchurElement& x, Basis b);

/// Sum of e_{D_λ} over all compositions λ of d; the unit of S_d.
SchurElement identity_element(int n, int d, Basis basis = Basis::E);

/// Coefficients of an e-basis element at v^2 = q (all exponents must be even).
std::map<Matrix, Rational> specialize_e(const SchurElement& x, long q);

// --- multiplication formulas (inputs are Theta_d matrices, outputs in the E basis) ---

/// e_B * e_A for B = diagonal + E_{i0,i1}, i0 < i1, co(B) = ro(A).
SchurElement mult_elementary_upper(const Matrix& b, const Matrix& a);
/// e_C * e_A for C = diagonal + E_{i0,i1}, i0 > i1, co(C) = ro(A).
SchurElement mult_elementary_lower(const Matrix& c, const Matrix& a);
/// e_B * e_A for B = diagonal + sum_k E_{i_{k-1}, i_k}, i_0 < ... < i_m.
SchurElement mult_chain(const Matrix& b, const Matrix& a);
/// e_B * e_A for B = diagonal + a E_{i0,i1} with a >= 1, via the identity
/// e_{F_a} * ... * e_{F_1} = [a]! e_B over unit factors F_t.
SchurElement mult_divided_power(const Matrix& b, const Matrix& a);

/// Off-diagonal structure of a left factor, as recognized by the dispatcher.
enum class Shape { Diagonal, SingleUpper, SingleLower, DividedPower, UpperChain, Other };
Shape classify(const Matrix& b);

/// e_K * e_L. Shapes without a direct formula go through the triangular
/// product of K, whose lower terms are themselves expanded recursively;
/// UnsupportedShape if that product is not chi_K e_K plus lower terms.
SchurElement mult_basis(const Matrix& k, const Matrix& l);

/// Bilinear product. Output is in x's basis when x and y share a basis, else E.
SchurElement product(const SchurElement& x, const SchurElement& y);

// --- generators and relations ---

/// The RTT generator t̄_ij of S_d (0-based i, j) in the bracket basis.
SchurElement generator_tbar(int i, int j, int n, int d);

struct RelationFailure {
  std::string relation;  // "R1".."R4"
  std::vector<int> indices;  // 0-based; (i,a,j,b) for R1, (i) or (i,j) otherwise
  SchurElement difference;   // lhs - rhs
};

struct RttReport {
  int n = 0;
  int d = 0;
  long checked = 0;
  std::vector<RelationFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks R1–R4 exactly for every index choice; scalars in R2/R3 are read as
/// multiples of the identity element.
RttReport verify_rtt_schur(int n, int d);

// --- triangular decomposition ---

struct TriangularFactor {
  int i = 0;
  int j = 0;
  int a = 0;
  Matrix m;  // D_ij + a E_ij
};

/// Factors of the triangular product for A, leftmost first: lower-triangular
/// positions ordered by (column, row) ascending, then upper positions ordered
/// by (column, row) descending. Diagonals are fixed right to left so each
/// factor's column sums match the row sums of its right neighbour, starting
/// from co(A). Throws ChainInfeasible on a negative diagonal entry.
std::vector<TriangularFactor> triangular_factors(const Matrix& a);

struct TriangularResult {
  LaurentPoly chi;          // coefficient of e_A
  SchurElement result;      // full product, E basis
  bool leading_ok = false;  // chi != 0 and all other terms strictly ⪯-below A
  std::vector<Matrix> not_below;  // offending support matrices, if any
};

TriangularResult triangular_product(const Matrix& a);

}  // namespace flagschur
