#pragma once

#include <gmpxx.h>

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace flagschur {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Exact element of Q[v, v^-1], stored sparsely as exponent -> coefficient.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their term maps are equal.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  /// c * v^exp
  static LaurentPoly monomial(const Rational& c, int exp);
  /// v^exp
  static LaurentPoly v(int exp = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  int min_exp() const;
  int max_exp() const;
  Rational coeff(int exp) const;

  /// True when every coefficient is an integer, i.e. the element lies in Z[v, v^-1].
  bool is_integral() const;
  bool all_even() const;

  /// Multiply by v^k.
  LaurentPoly shifted(int k) const;
  /// Substitute v -> v^k (k may be negative).
  LaurentPoly substitute_power(int k) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  LaurentPoly pow(unsigned e) const;

  /// Human-readable form, e.g. "v^2 - 1 + 3/2*v^-1"; highest exponent first.
  std::string to_string() const;

 private:
  void add_term(int exp, const Rational& c);
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// 1 + v^2 + ... + v^{2(m-1)}; throws DomainError for m < 1.
LaurentPoly quantum_bracket(int m);
/// Product of quantum_bracket(1..m); quantum_factorial(0) = 1.
LaurentPoly quantum_factorial(int m);

/// Exact quotient num / den in Q[v, v^-1]; throws NotDivisible on a nonzero
/// remainder and DomainError when den is zero.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

/// Substitute v^2 := q into a polynomial whose exponents are all even.
Rational eval_even(const LaurentPoly& p, long q);

/// Polynomial in the auxiliary variable v' with coefficients in Q[v, v^-1].
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<LaurentPoly> coeffs);

  /// Coefficients indexed by v'-degree; trailing zero coefficients are trimmed.
  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// G(v, v^{-p}).
  LaurentPoly eval_shift(int p) const;
  /// G(v, 1).
  LaurentPoly eval_one() const;

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  std::vector<LaurentPoly> coeffs_;
};

struct BiSample {
  int p;
  LaurentPoly value;
};

/// Finds G of v'-degree <= `degree` with G(v, v^{-p}) = value for every sample.
///
/// The first degree+1 samples determine G by Newton divided differences in
/// the nodes v^{-p}; every division is exact in Q[v, v^-1] when a fit with
/// Laurent coefficients exists. The remaining samples are then checked.
/// Throws Underdetermined when there are too few samples and NoFit when no
/// polynomial of that degree matches.
BiPoly fit_bipoly(std::span<const BiSample> samples, int degree);

}  // namespace flagschur
