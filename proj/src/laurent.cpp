#include "flagschur/laurent.hpp"

#include <ostream>
#include <sstream>

#include "flagschur/errors.hpp"

namespace flagschur {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(0, Rational(c));
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exp) {
  LaurentPoly p;
  p.add_term(exp, c);
  return p;
}

LaurentPoly LaurentPoly::v(int exp) { return monomial(Rational(1), exp); }

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw DomainError("min_exp of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw DomainError("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool LaurentPoly::is_integral() const {
  for (const auto& [e, c] : terms_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

bool LaurentPoly::all_even() const {
  for (const auto& [e, c] : terms_) {
    if (e % 2 != 0) return false;
  }
  return true;
}

void LaurentPoly::add_term(int exp, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e * k, c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1L);
  LaurentPoly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly quantum_bracket(int m) {
  if (m < 1) throw DomainError("quantum_bracket requires m >= 1, got " + std::to_string(m));
  LaurentPoly r;
  for (int k = 0; k < m; ++k) r += LaurentPoly::v(2 * k);
  return r;
}

LaurentPoly quantum_factorial(int m) {
  if (m < 0) throw DomainError("quantum_factorial requires m >= 0");
  LaurentPoly r(1L);
  for (int k = 2; k <= m; ++k) r *= quantum_bracket(k);
  return r;
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DomainError("exact_div by zero");
  if (num.is_zero()) return {};
  // Work with ordinary polynomials N, D (D(0) != 0); then num / den is a
  // Laurent polynomial iff D divides N.
  const int shift = num.min_exp() - den.min_exp();
  const int den_lo = den.min_exp();
  const int den_deg = den.max_exp() - den_lo;
  const Rational lead = den.coeff(den.max_exp());

  std::map<int, Rational> rem;  // N, by degree
  for (const auto& [e, c] : num.terms()) rem.emplace(e - num.min_exp(), c);
  std::vector<std::pair<int, Rational>> dterms;
  for (const auto& [e, c] : den.terms()) dterms.emplace_back(e - den_lo, c);

  LaurentPoly quotient;
  while (!rem.empty()) {
    const int top = rem.rbegin()->first;
    if (top < den_deg) {
      throw NotDivisible("(" + num.to_string() + ") / (" + den.to_string() + ") leaves a remainder");
    }
    const int qdeg = top - den_deg;
    const Rational qc = rem.rbegin()->second / lead;
    quotient += LaurentPoly::monomial(qc, qdeg + shift);
    for (const auto& [e, c] : dterms) {
      auto [it, inserted] = rem.try_emplace(e + qdeg, Rational(0));
      it->second -= qc * c;
      if (it->second == 0) rem.erase(it);
    }
  }
  return quotient;
}

Rational eval_even(const LaurentPoly& p, long q) {
  if (q == 0) throw DomainError("eval_even at q = 0");
  Rational sum(0);
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 != 0) {
      throw OddExponent("eval_even: odd exponent v^" + std::to_string(e) + " in " + p.to_string());
    }
    const int half = e / 2;
    BigInt qp;
    mpz_pow_ui(qp.get_mpz_t(), BigInt(q).get_mpz_t(), static_cast<unsigned long>(half < 0 ? -half : half));
    if (half >= 0) {
      sum += c * Rational(qp);
    } else {
      sum += c / Rational(qp);
    }
  }
  return sum;
}

BiPoly::BiPoly(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

LaurentPoly BiPoly::eval_shift(int p) const {
  LaurentPoly r;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    r += coeffs_[k].shifted(-p * static_cast<int>(k));
  }
  return r;
}

LaurentPoly BiPoly::eval_one() const {
  LaurentPoly r;
  for (const auto& c : coeffs_) r += c;
  return r;
}

BiPoly fit_bipoly(std::span<const BiSample> samples, int degree) {
  if (degree < 0) throw DomainError("fit_bipoly: negative degree");
  const auto need = static_cast<std::size_t>(degree) + 1;
  if (samples.size() < need) {
    throw Underdetermined("fit_bipoly: " + std::to_string(samples.size()) + " samples for degree " +
                          std::to_string(degree));
  }
  for (std::size_t i = 0; i < need; ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      if (samples[i].p == samples[j].p) throw DomainError("fit_bipoly: repeated sample point");
    }
  }

  auto node = [&](std::size_t i) { return LaurentPoly::v(-samples[i].p); };

  // Divided differences; after the loop dd[k] = G[x_0, ..., x_k].
  std::vector<LaurentPoly> dd;
  dd.reserve(need);
  for (std::size_t i = 0; i < need; ++i) dd.push_back(samples[i].value);
  try {
    for (std::size_t k = 1; k < need; ++k) {
      for (std::size_t i = need - 1; i >= k; --i) {
        dd[i] = exact_div(dd[i] - dd[i - 1], node(i) - node(i - k));
      }
    }
  } catch (const NotDivisible&) {
    throw NoFit("fit_bipoly: no degree-" + std::to_string(degree) + " fit with Laurent coefficients");
  }

  // Expand the Newton form into monomial coefficients in v'.
  std::vector<LaurentPoly> coeffs(1, dd[need - 1]);
  for (std::size_t k = need - 1; k-- > 0;) {
    // coeffs <- coeffs * (v' - x_k) + dd[k]
    std::vector<LaurentPoly> next(coeffs.size() + 1);
    const LaurentPoly xk = node(k);
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
      next[m + 1] += coeffs[m];
      next[m] -= coeffs[m] * xk;
    }
    next[0] += dd[k];
    coeffs = std::move(next);
  }
  BiPoly g(std::move(coeffs));

  for (const auto& s : samples) {
    if (g.eval_shift(s.p) != s.value) {
      throw NoFit("fit_bipoly: degree-" + std::to_string(degree) + " fit misses sample p=" +
                  std::to_string(s.p));
    }
  }
  return g;
}

}  // namespace flagschur
