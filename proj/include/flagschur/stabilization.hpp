#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagschur/laurent.hpp"
#include "flagschur/matrix.hpp"
#include "flagschur/schur.hpp"

namespace flagschur {

/// Factors A_1..A_r with off-diagonal entries >= 0 and any integer diagonal;
/// the product is [_pA_1] * ... * [_pA_r] with _pA = A + pI.
struct StableQuery {
  std::vector<Matrix> factors;
};

/// Smallest p with every A_i + pI in Theta; throws DomainError on a malformed
/// query (negative off-diagonal entry, size or co/ro mismatch, no factors).
int min_valid_shift(const StableQuery& q);

/// The bracket-basis product of the shifted factors in S_{d(p)}.
SchurElement sample_product(const StableQuery& q, int p);

struct StableTerm {
  Matrix z;        // un-shifted support matrix
  BiPoly g;        // numerator in v' = v^{-p}
  int den_pow = 0; // G = g / (v^2 - 1)^den_pow
};

struct StableProduct {
  std::vector<StableTerm> terms;  // sorted by z
  std::vector<int> fit_ps;        // samples used to determine G
  std::vector<int> held_out_ps;   // samples used only for validation
};

struct StabilizeOptions {
  std::optional<int> p_min;  // first sample; default is the smallest valid p plus one
  int max_samples = 14;
  int max_den_pow = 2;
};

/// Fits the structure constants of the query as polynomials in v' = v^{-p}.
/// Throws NoStabilization when no fit of degree <= max_samples - 3 validates.
StableProduct stabilize(const StableQuery& q, const StabilizeOptions& opt = {});

/// G_j(v, v^{-p}) at a single p, as an element of S_{d(p)}.
SchurElement evaluate_at(const StableProduct& sp, const StableQuery& q, int p);
/// sample_product(q, p) == evaluate_at(sp, ..., p)
bool reproduces(const StableQuery& q, const StableProduct& sp, int p);

/// Each G_j at v' = 1, zero terms dropped. Throws NotDivisible if a value is
/// not a Laurent polynomial.
std::vector<std::pair<Matrix, LaurentPoly>> specialize(const StableProduct& sp);
/// False when some specialized coefficient has a non-integer rational coefficient.
bool specialized_integral(const std::vector<std::pair<Matrix, LaurentPoly>>& terms);

// --- limit algebra ---

/// scale * Â(weight) = scale * sum over λ of v^{λ·weight} [Â + D_λ]
struct FormalSymbol {
  Matrix hat;
  WeightVec weight;
  LaurentPoly scale;
};

/// Finite combination of formal symbols, keyed by (hat, weight).
class UElement {
 public:
  using Key = std::pair<Matrix, WeightVec>;
  using Terms = std::map<Key, LaurentPoly>;

  explicit UElement(int n);
  static UElement symbol(const Matrix& hat, const WeightVec& weight, const LaurentPoly& scale);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::vector<FormalSymbol> symbols() const;

  void add(const Matrix& hat, const WeightVec& weight, const LaurentPoly& scale);

  UElement& operator+=(const UElement& o);
  UElement& operator-=(const UElement& o);
  UElement& operator*=(const LaurentPoly& c);
  friend UElement operator+(UElement a, const UElement& b) { return a += b; }
  friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
  friend UElement operator*(const LaurentPoly& c, UElement a) { return a *= c; }
  friend bool operator==(const UElement&, const UElement&) = default;

  std::string to_string() const;

 private:
  int n_;
  Terms terms_;
};

/// t̄_ij in the limit algebra (0-based): (v - v^{-1}) E_ij(e_i) for i < j,
/// 0(e_i) for i = j, zero for i > j.
UElement limit_generator(int i, int j, int n);

/// Product in the limit algebra, recognized symbol pair by symbol pair from
/// stabilized samples over a grid of diagonals. Throws AnsatzFailure when
/// the samples do not have the form sum c_k Ĥ_k(w_k).
UElement formal_product(const UElement& x, const UElement& y);

struct LimitRelationFailure {
  std::vector<int> indices;  // (i, a, j, b), 0-based
  UElement difference;       // lhs - rhs
};

struct LimitRttReport {
  int n = 0;
  long checked = 0;
  std::vector<LimitRelationFailure> failures;
  bool ok() const { return failures.empty(); }
};

LimitRttReport verify_limit_rtt(int n);

}  // namespace flagschur
