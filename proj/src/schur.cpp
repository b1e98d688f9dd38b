#include "flagschur/schur.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "flagschur/errors.hpp"

namespace flagschur {

std::string to_string(Basis b) { return b == Basis::E ? "e" : "bracket"; }

SchurElement::SchurElement(int n, int d, Basis basis) : n_(n), d_(d), basis_(basis) {
  if (n < 1 || d < 0) throw DomainError("SchurElement requires n >= 1 and d >= 0");
}

SchurElement SchurElement::basis_element(const Matrix& a, Basis basis) {
  SchurElement x(a.n(), static_cast<int>(a.total()), basis);
  x.add(a, LaurentPoly(1L));
  return x;
}

LaurentPoly SchurElement::coeff(const Matrix& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void SchurElement::add(const Matrix& a, const LaurentPoly& c) {
  if (a.n() != n_ || !is_theta(a) || a.total() != d_) {
    throw DomainError("matrix " + a.to_string() + " is not in Theta_" + std::to_string(d_) +
                      " for n = " + std::to_string(n_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SchurElement::check_compatible(const SchurElement& o) const {
  if (o.n_ != n_ || o.d_ != d_) throw Incompatible("elements live in different Schur algebras");
  if (o.basis_ != basis_) throw Incompatible("elements are expressed in different bases");
}

SchurElement& SchurElement::operator+=(const SchurElement& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

SchurElement& SchurElement::operator-=(const SchurElement& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

SchurElement& SchurElement::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

std::string SchurElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const char* open = basis_ == Basis::E ? "e" : "[";
  const char* close = basis_ == Basis::E ? "" : "]";
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << open << m.to_string() << close;
  }
  return os.str();
}

namespace {

SchurElement rescale(const SchurElement& x, Basis target, int sign) {
  SchurElement out(x.n(), x.d(), target);
  for (const auto& [m, c] : x.terms()) out.add(m, c.shifted(sign * static_cast<int>(norm_exponent(m))));
  return out;
}

}  // namespace

SchurElement to_bracket(const SchurElement& x) {
  if (x.basis() == Basis::Bracket) return x;
  return rescale(x, Basis::Bracket, +1);
}

SchurElement to_e(const SchurElement& x) {
  if (x.basis() == Basis::E) return x;
  return rescale(x, Basis::E, -1);
}

SchurElement in_basis(const SchurElement& x, Basis b) { return b == Basis::E ? to_e(x) : to_bracket(x); }

SchurElement identity_element(int n, int d, Basis basis) {
  SchurElement one(n, d, basis);
  for (const auto& lambda : compositions(n, d)) one.add(Matrix::diag(lambda), LaurentPoly(1L));
  return one;
}

std::map<Matrix, Rational> specialize_e(const SchurElement& x, long q) {
  if (x.basis() != Basis::E) throw DomainError("specialize_e expects an E-basis element");
  std::map<Matrix, Rational> out;
  for (const auto& [m, c] : x.terms()) out.emplace(m, eval_even(c, q));
  return out;
}

namespace {

// v^{2e}
LaurentPoly v2(long e) { return LaurentPoly::v(static_cast<int>(2 * e)); }

const LaurentPoly& v2_minus_one() {
  static const LaurentPoly p = LaurentPoly::v(2) - LaurentPoly(1L);
  return p;
}

long sum_ge(const Matrix& a, int r, int p) {
  long s = 0;
  for (int c = p; c < a.n(); ++c) s += a(r, c);
  return s;
}
long sum_gt(const Matrix& a, int r, int p) { return sum_ge(a, r, p + 1); }
long sum_le(const Matrix& a, int r, int p) {
  long s = 0;
  for (int c = 0; c <= p; ++c) s += a(r, c);
  return s;
}
long sum_lt(const Matrix& a, int r, int p) { return sum_le(a, r, p - 1); }

struct OffEntry {
  int row;
  int col;
  int value;
};

std::vector<OffEntry> off_diagonal(const Matrix& b) {
  std::vector<OffEntry> out;
  for (int i = 0; i < b.n(); ++i) {
    for (int j = 0; j < b.n(); ++j) {
      if (i != j && b(i, j) != 0) out.push_back({i, j, b(i, j)});
    }
  }
  return out;
}

void require_theta_pair(const Matrix& b, const Matrix& a, const char* who) {
  if (b.n() != a.n()) throw Incompatible(std::string(who) + ": matrix sizes differ");
  if (!is_theta(b) || !is_theta(a)) throw DomainError(std::string(who) + ": entries must be nonnegative");
  if (co(b) != ro(a)) {
    throw Incompatible(std::string(who) + ": co(" + b.to_string() + ") != ro(" + a.to_string() + ")");
  }
}

// Adds E_{r, p} - E_{r', p} bookkeeping for a finished chain.
struct ChainStep {
  int from_row;  // j_{l-1}
  int to_row;    // j_l
  int p;
};

Matrix apply_chain(const Matrix& a, const std::vector<ChainStep>& steps) {
  Matrix out = a;
  for (const auto& s : steps) {
    out(s.from_row, s.p) += 1;
    out(s.to_row, s.p) -= 1;
  }
  return out;
}

}  // namespace

SchurElement mult_elementary_upper(const Matrix& b, const Matrix& a) {
  const auto off = off_diagonal(b);
  if (off.size() != 1 || off[0].value != 1 || off[0].row >= off[0].col) {
    throw UnsupportedShape("mult_elementary_upper: " + b.to_string() + " is not diagonal + E_ij with i < j");
  }
  require_theta_pair(b, a, "mult_elementary_upper");
  const int i0 = off[0].row;
  const int i1 = off[0].col;
  const int n = a.n();
  SchurElement out(n, static_cast<int>(a.total()), Basis::E);

  std::vector<ChainStep> steps;
  // Chains i0 = j_0 < j_1 < ... < j_m = i1 with p_1 > ... > p_m and a_{j_l, p_l} >= 1.
  auto rec = [&](auto&& self, int prev_row, int prev_p, const LaurentPoly& acc) -> void {
    for (int row = prev_row + 1; row <= i1; ++row) {
      for (int p = 0; p < prev_p; ++p) {
        if (a(row, p) < 1) continue;
        LaurentPoly f;
        if (steps.empty()) {
          f = exact_div(v2(1 + sum_ge(a, prev_row, p)) - v2(sum_gt(a, prev_row, p)), v2_minus_one());
        } else {
          f = v2(sum_ge(a, prev_row, p)) - v2(sum_gt(a, prev_row, p) - 1);
        }
        for (int k = prev_row + 1; k < row; ++k) f *= v2(sum_ge(a, k, p));
        steps.push_back({prev_row, row, p});
        if (row == i1) {
          out.add(apply_chain(a, steps), acc * f);
        } else {
          self(self, row, p, acc * f);
        }
        steps.pop_back();
      }
    }
  };
  rec(rec, i0, n, LaurentPoly(1L));
  return out;
}

SchurElement mult_elementary_lower(const Matrix& c, const Matrix& a) {
  const auto off = off_diagonal(c);
  if (off.size() != 1 || off[0].value != 1 || off[0].row <= off[0].col) {
    throw UnsupportedShape("mult_elementary_lower: " + c.to_string() + " is not diagonal + E_ij with i > j");
  }
  require_theta_pair(c, a, "mult_elementary_lower");
  const int i0 = off[0].row;
  const int i1 = off[0].col;
  const int n = a.n();
  SchurElement out(n, static_cast<int>(a.total()), Basis::E);

  std::vector<ChainStep> steps;
  // Chains i0 = j_0 > j_1 > ... > j_m = i1 with p_1 < ... < p_m and a_{j_l, p_l} >= 1.
  auto rec = [&](auto&& self, int prev_row, int prev_p, const LaurentPoly& acc) -> void {
    for (int row = prev_row - 1; row >= i1; --row) {
      for (int p = prev_p + 1; p < n; ++p) {
        if (a(row, p) < 1) continue;
        LaurentPoly f;
        if (steps.empty()) {
          f = exact_div(v2(1 + sum_le(a, prev_row, p)) - v2(sum_lt(a, prev_row, p)), v2_minus_one());
        } else {
          f = v2(sum_le(a, prev_row, p)) - v2(sum_lt(a, prev_row, p) - 1);
        }
        for (int k = row + 1; k < prev_row; ++k) f *= v2(sum_le(a, k, p));
        steps.push_back({prev_row, row, p});
        if (row == i1) {
          out.add(apply_chain(a, steps), acc * f);
        } else {
          self(self, row, p, acc * f);
        }
        steps.pop_back();
      }
    }
  };
  rec(rec, i0, -1, LaurentPoly(1L));
  return out;
}

namespace {

// Anchors i_0 < i_1 < ... < i_m when b = diagonal + sum E_{i_{k-1}, i_k}; empty otherwise.
std::vector<int> upper_chain_anchors(const Matrix& b) {
  auto off = off_diagonal(b);
  if (off.empty()) return {};
  for (const auto& e : off) {
    if (e.value != 1 || e.row >= e.col) return {};
  }
  std::sort(off.begin(), off.end(), [](const OffEntry& x, const OffEntry& y) { return x.row < y.row; });
  std::vector<int> anchors{off[0].row};
  for (std::size_t k = 0; k < off.size(); ++k) {
    if (off[k].row != anchors.back()) return {};
    anchors.push_back(off[k].col);
  }
  return anchors;
}

}  // namespace

SchurElement mult_chain(const Matrix& b, const Matrix& a) {
  const auto anchors = upper_chain_anchors(b);
  if (anchors.empty()) {
    throw UnsupportedShape("mult_chain: " + b.to_string() + " is not diagonal + E_{i0 i1} + E_{i1 i2} + ...");
  }
  require_theta_pair(b, a, "mult_chain");
  const int n = a.n();
  const int segments = static_cast<int>(anchors.size()) - 1;
  SchurElement out(n, static_cast<int>(a.total()), Basis::E);

  std::vector<ChainStep> steps;
  // Segment k runs from anchors[k-1] to anchors[k]; `last_p` is p_{k-1, r_{k-1}}
  // (or -1 before the first segment); `first_in_segment` marks l = 1.
  auto rec = [&](auto&& self, int k, int prev_row, int prev_p, int last_p, const LaurentPoly& acc) -> void {
    const int target = anchors[static_cast<std::size_t>(k)];
    const bool first_in_segment = prev_row == anchors[static_cast<std::size_t>(k - 1)];
    for (int row = prev_row + 1; row <= target; ++row) {
      for (int p = 0; p < (first_in_segment ? n : prev_p); ++p) {
        if (a(row, p) < 1) continue;
        const long ge = sum_ge(a, prev_row, p);
        const long gt = sum_gt(a, prev_row, p);
        LaurentPoly f;
        if (!first_in_segment) {
          f = v2(ge) - v2(gt - 1);
        } else if (k == 1 || last_p < p) {
          f = exact_div(v2(1 + ge) - v2(gt), v2_minus_one());
        } else if (last_p > p) {
          f = exact_div(v2(ge) - v2(gt - 1), v2_minus_one());
        } else {
          f = exact_div(v2(ge) - v2(gt), v2_minus_one());
        }
        for (int x = prev_row + 1; x < row; ++x) f *= v2(sum_ge(a, x, p));
        if (f.is_zero()) continue;
        steps.push_back({prev_row, row, p});
        const LaurentPoly next = acc * f;
        if (row < target) {
          self(self, k, row, p, last_p, next);
        } else if (k == segments) {
          out.add(apply_chain(a, steps), next);
        } else {
          self(self, k + 1, row, -1, p, next);
        }
        steps.pop_back();
      }
    }
  };
  rec(rec, 1, anchors[0], n, -1, LaurentPoly(1L));
  return out;
}

SchurElement mult_divided_power(const Matrix& b, const Matrix& a) {
  const auto off = off_diagonal(b);
  if (off.size() != 1) {
    throw UnsupportedShape("mult_divided_power: " + b.to_string() + " is not diagonal + a E_ij");
  }
  require_theta_pair(b, a, "mult_divided_power");
  const auto [i0, i1, mult] = off[0];
  const int n = b.n();
  // Unit factors F_1 (rightmost) ... F_mult, each diagonal + E_{i0 i1}.
  std::vector<Matrix> factors;
  WeightVec need = co(b);
  for (int t = 0; t < mult; ++t) {
    WeightVec dg = need;
    dg[static_cast<std::size_t>(i1)] -= 1;
    Matrix f = Matrix::diag(dg) + Matrix::unit(n, i0, i1);
    need = ro(f);
    factors.push_back(std::move(f));
  }
  SchurElement y = SchurElement::basis_element(a);
  for (const auto& f : factors) {
    SchurElement next(n, y.d(), Basis::E);
    for (const auto& [m, c] : y.terms()) {
      SchurElement part = i0 < i1 ? mult_elementary_upper(f, m) : mult_elementary_lower(f, m);
      next += c * part;
    }
    y = std::move(next);
  }
  if (mult == 1) return y;
  const LaurentPoly fact = quantum_factorial(mult);
  SchurElement out(n, y.d(), Basis::E);
  for (const auto& [m, c] : y.terms()) out.add(m, exact_div(c, fact));
  return out;
}

Shape classify(const Matrix& b) {
  const auto off = off_diagonal(b);
  if (off.empty()) return Shape::Diagonal;
  if (off.size() == 1) {
    if (off[0].value > 1) return Shape::DividedPower;
    return off[0].row < off[0].col ? Shape::SingleUpper : Shape::SingleLower;
  }
  return upper_chain_anchors(b).empty() ? Shape::Other : Shape::UpperChain;
}

namespace {

struct Factorization {
  std::vector<TriangularFactor> factors;
  LaurentPoly chi;
  std::vector<std::pair<Matrix, LaurentPoly>> lower;  // terms of the product strictly below K
};

// e_K = chi^{-1} (product of factors - sum of lower terms), cached since the
// same left matrices recur across products.
const Factorization& factorization(const Matrix& k) {
  static std::mutex mu;
  static std::map<Matrix, Factorization> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  TriangularResult tri = triangular_product(k);
  if (!tri.leading_ok) {
    throw UnsupportedShape("no multiplication formula for left factor " + k.to_string() +
                           " and its triangular product is not unitriangular");
  }
  Factorization fac{triangular_factors(k), tri.chi, {}};
  for (const auto& [m, c] : tri.result.terms()) {
    if (m != k) fac.lower.emplace_back(m, c);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(k, std::move(fac)).first->second;
}

}  // namespace

SchurElement mult_basis(const Matrix& k, const Matrix& l) {
  if (k.n() != l.n()) throw Incompatible("mult_basis: matrix sizes differ");
  if (co(k) != ro(l)) return SchurElement(l.n(), static_cast<int>(l.total()), Basis::E);
  switch (classify(k)) {
    case Shape::Diagonal:
      return SchurElement::basis_element(l);
    case Shape::SingleUpper:
      return mult_elementary_upper(k, l);
    case Shape::SingleLower:
      return mult_elementary_lower(k, l);
    case Shape::DividedPower:
      return mult_divided_power(k, l);
    case Shape::UpperChain:
      return mult_chain(k, l);
    case Shape::Other:
      break;
  }
  const auto& fac = factorization(k);
  SchurElement y = SchurElement::basis_element(l);
  for (auto it = fac.factors.rbegin(); it != fac.factors.rend(); ++it) {
    SchurElement next(l.n(), y.d(), Basis::E);
    for (const auto& [m, c] : y.terms()) next += c * mult_basis(it->m, m);
    y = std::move(next);
  }
  for (const auto& [m, c] : fac.lower) y -= c * mult_basis(m, l);
  SchurElement out(l.n(), y.d(), Basis::E);
  for (const auto& [m, c] : y.terms()) out.add(m, exact_div(c, fac.chi));
  return out;
}

SchurElement product(const SchurElement& x, const SchurElement& y) {
  if (x.n() != y.n() || x.d() != y.d()) throw Incompatible("product: elements of different Schur algebras");
  const SchurElement xe = to_e(x);
  const SchurElement ye = to_e(y);
  SchurElement out(x.n(), x.d(), Basis::E);
  for (const auto& [k, ck] : xe.terms()) {
    const WeightVec ck_co = co(k);
    for (const auto& [l, cl] : ye.terms()) {
      if (ck_co != ro(l)) continue;
      out += (ck * cl) * mult_basis(k, l);
    }
  }
  const Basis target = x.basis() == y.basis() ? x.basis() : Basis::E;
  return in_basis(out, target);
}

SchurElement generator_tbar(int i, int j, int n, int d) {
  if (i < 0 || j < 0 || i >= n || j >= n) throw DomainError("generator index out of range");
  SchurElement t(n, d, Basis::Bracket);
  if (i > j) return t;
  if (i == j) {
    for (const auto& lambda : compositions(n, d)) {
      t.add(Matrix::diag(lambda), LaurentPoly::v(lambda[static_cast<std::size_t>(i)]));
    }
    return t;
  }
  // -(v^{-1} - v) = v - v^{-1}
  const LaurentPoly scale = LaurentPoly::v(1) - LaurentPoly::v(-1);
  for (const auto& lambda : compositions(n, d - 1)) {
    t.add(Matrix::diag(lambda) + Matrix::unit(n, i, j), scale.shifted(lambda[static_cast<std::size_t>(i)]));
  }
  return t;
}

RttReport verify_rtt_schur(int n, int d) {
  RttReport rep;
  rep.n = n;
  rep.d = d;
  std::vector<std::vector<SchurElement>> t;
  for (int i = 0; i < n; ++i) {
    t.emplace_back();
    for (int j = 0; j < n; ++j) t.back().push_back(generator_tbar(i, j, n, d));
  }
  std::map<std::pair<int, int>, SchurElement> cache;  // key: (i*n+j, k*n+l)
  auto mul = [&](int i, int j, int k, int l) -> const SchurElement& {
    const std::pair<int, int> key{i * n + j, k * n + l};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, product(t[i][j], t[k][l])).first;
    return it->second;
  };
  const LaurentPoly vinv_minus_v = LaurentPoly::v(-1) - LaurentPoly::v(1);

  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < n; ++a) {
      for (int j = 0; j < n; ++j) {
        for (int b = 0; b < n; ++b) {
          SchurElement lhs = LaurentPoly::v(i == j ? -1 : 0) * mul(i, a, j, b);
          lhs -= LaurentPoly::v(a == b ? -1 : 0) * mul(j, b, i, a);
          const long sign = static_cast<long>(b < a) - static_cast<long>(i < j);
          SchurElement rhs(n, d, Basis::Bracket);
          if (sign != 0) rhs = (LaurentPoly(sign) * vinv_minus_v) * mul(j, a, i, b);
          ++rep.checked;
          SchurElement diff = lhs - rhs;
          if (!diff.is_zero()) rep.failures.push_back({"R1", {i, a, j, b}, std::move(diff)});
        }
      }
    }
  }

  const SchurElement one = identity_element(n, d, Basis::Bracket);
  {
    SchurElement prod = t[0][0];
    for (int i = 1; i < n; ++i) prod = product(prod, t[i][i]);
    ++rep.checked;
    SchurElement diff = prod - LaurentPoly::v(d) * one;
    if (!diff.is_zero()) rep.failures.push_back({"R2", {}, std::move(diff)});
  }
  for (int i = 0; i < n; ++i) {
    SchurElement prod = one;
    for (int l = 0; l <= d; ++l) prod = product(prod, t[i][i] - LaurentPoly::v(l) * one);
    ++rep.checked;
    if (!prod.is_zero()) rep.failures.push_back({"R3", {i}, std::move(prod)});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      SchurElement power = one;
      for (int k = 0; k <= d; ++k) power = product(t[i][j], power);
      ++rep.checked;
      if (!power.is_zero()) rep.failures.push_back({"R4", {i, j}, std::move(power)});
    }
  }
  return rep;
}

std::vector<TriangularFactor> triangular_factors(const Matrix& a) {
  if (!is_theta(a)) throw DomainError("triangular_factors requires a Theta_d matrix");
  const int n = a.n();
  std::vector<std::pair<int, int>> order;
  for (int j = 0; j < n; ++j) {
    for (int i = j + 1; i < n; ++i) order.emplace_back(i, j);
  }
  for (int j = n - 1; j >= 0; --j) {
    for (int i = j - 1; i >= 0; --i) order.emplace_back(i, j);
  }
  std::vector<TriangularFactor> factors(order.size());
  WeightVec need = co(a);
  for (std::size_t idx = order.size(); idx-- > 0;) {
    const auto [i, j] = order[idx];
    const int mult = a(i, j);
    WeightVec dg = need;
    dg[static_cast<std::size_t>(j)] -= mult;
    if (dg[static_cast<std::size_t>(j)] < 0) {
      throw ChainInfeasible("triangular factor (" + std::to_string(i) + "," + std::to_string(j) +
                            ") of " + a.to_string() + " needs a negative diagonal entry");
    }
    Matrix m = Matrix::diag(dg);
    m(i, j) += mult;
    need = ro(m);
    factors[idx] = {i, j, mult, std::move(m)};
  }
  return factors;
}

TriangularResult triangular_product(const Matrix& a) {
  const auto factors = triangular_factors(a);
  SchurElement y = SchurElement::basis_element(Matrix::diag(co(a)));
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    y = product(SchurElement::basis_element(it->m), y);
  }
  TriangularResult res{y.coeff(a), y, false, {}};
  for (const auto& [m, c] : y.terms()) {
    if (m != a && !preceq(m, a)) res.not_below.push_back(m);
  }
  res.leading_ok = !res.chi.is_zero() && res.not_below.empty();
  return res;
}

}  // namespace flagschur
