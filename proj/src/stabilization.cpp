#include "flagschur/stabilization.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "flagschur/errors.hpp"

namespace flagschur {

int min_valid_shift(const StableQuery& q) {
  if (q.factors.empty()) throw DomainError("stable query needs at least one factor");
  const int n = q.factors.front().n();
  int p = std::numeric_limits<int>::min();
  for (std::size_t k = 0; k < q.factors.size(); ++k) {
    const Matrix& a = q.factors[k];
    if (a.n() != n) throw DomainError("stable query factors have different sizes");
    if (!is_tilde(a)) throw DomainError("stable query factor " + a.to_string() + " has a negative off-diagonal entry");
    if (k + 1 < q.factors.size() && co(a) != ro(q.factors[k + 1])) {
      throw DomainError("stable query: co(A_" + std::to_string(k + 1) + ") != ro(A_" + std::to_string(k + 2) + ")");
    }
    for (int i = 0; i < n; ++i) p = std::max(p, -a(i, i));
  }
  // Total must stay nonnegative too; with diagonals >= 0 it does.
  return p;
}

SchurElement sample_product(const StableQuery& q, int p) {
  if (p < min_valid_shift(q)) throw DomainError("shift p = " + std::to_string(p) + " leaves a negative diagonal");
  auto it = q.factors.rbegin();
  SchurElement y = SchurElement::basis_element(shift(*it, p), Basis::Bracket);
  for (++it; it != q.factors.rend(); ++it) {
    y = product(SchurElement::basis_element(shift(*it, p), Basis::Bracket), y);
  }
  return y;
}

namespace {

LaurentPoly v2_minus_one_pow(int k) { return (LaurentPoly::v(2) - LaurentPoly(1L)).pow(static_cast<unsigned>(k)); }

struct TermFit {
  BiPoly g;
  int den_pow = 0;
  int degree = 0;
};

std::optional<TermFit> fit_term(const std::vector<BiSample>& samples, int max_degree, int max_den_pow) {
  for (int k = 0; k <= max_den_pow; ++k) {
    std::vector<BiSample> scaled = samples;
    if (k > 0) {
      const LaurentPoly den = v2_minus_one_pow(k);
      for (auto& s : scaled) s.value *= den;
    }
    for (int deg = 0; deg <= max_degree; ++deg) {
      try {
        return TermFit{fit_bipoly(scaled, deg), k, deg};
      } catch (const NoFit&) {
      }
    }
  }
  return std::nullopt;
}

// Cancels common factors of v^2 - 1 between numerator and denominator.
void reduce(StableTerm& t) {
  const LaurentPoly base = LaurentPoly::v(2) - LaurentPoly(1L);
  while (t.den_pow > 0) {
    std::vector<LaurentPoly> c = t.g.coeffs();
    try {
      for (auto& x : c) x = exact_div(x, base);
    } catch (const NotDivisible&) {
      return;
    }
    t.g = BiPoly(std::move(c));
    --t.den_pow;
  }
}

}  // namespace

StableProduct stabilize(const StableQuery& q, const StabilizeOptions& opt) {
  const int p0 = opt.p_min.value_or(min_valid_shift(q) + 1);
  if (p0 < min_valid_shift(q)) throw DomainError("p_min is below the smallest valid shift");
  if (opt.max_samples < 3) throw DomainError("stabilize needs at least 3 samples");

  std::vector<int> ps;
  std::map<Matrix, std::map<int, LaurentPoly>> values;  // un-shifted Z -> p -> coefficient
  std::string last_failure;
  for (int k = 0; k < opt.max_samples; ++k) {
    const int p = p0 + k;
    ps.push_back(p);
    const SchurElement sample = sample_product(q, p);
    for (const auto& [m, c] : sample.terms()) values[shift(m, -p)][p] = c;
    if (ps.size() < 3) continue;

    const int max_degree = static_cast<int>(ps.size()) - 3;
    StableProduct out;
    int used_degree = 0;
    bool ok = true;
    for (const auto& [z, by_p] : values) {
      std::vector<BiSample> samples;
      for (int sp : ps) {
        auto it = by_p.find(sp);
        samples.push_back({sp, it == by_p.end() ? LaurentPoly() : it->second});
      }
      auto fit = fit_term(samples, max_degree, opt.max_den_pow);
      if (!fit) {
        ok = false;
        last_failure = "no fit for Z = " + z.to_string() + " with degree <= " + std::to_string(max_degree);
        break;
      }
      used_degree = std::max(used_degree, fit->degree);
      if (fit->g.is_zero()) continue;
      StableTerm t{z, fit->g, fit->den_pow};
      reduce(t);
      out.terms.push_back(std::move(t));
    }
    if (!ok) continue;
    out.fit_ps.assign(ps.begin(), ps.begin() + used_degree + 1);
    out.held_out_ps.assign(ps.begin() + used_degree + 1, ps.end());
    return out;
  }
  std::ostringstream msg;
  msg << "no stabilization after " << opt.max_samples << " samples from p = " << p0 << ": " << last_failure;
  throw NoStabilization(msg.str());
}

SchurElement evaluate_at(const StableProduct& sp, const StableQuery& q, int p) {
  const int n = q.factors.front().n();
  const int d = static_cast<int>(q.factors.front().total()) + n * p;
  SchurElement out(n, d, Basis::Bracket);
  for (const auto& t : sp.terms) {
    LaurentPoly c = t.g.eval_shift(p);
    if (t.den_pow > 0) c = exact_div(c, v2_minus_one_pow(t.den_pow));
    const Matrix z = shift(t.z, p);
    if (!is_theta(z)) {
      if (!c.is_zero()) throw DomainError("stable term " + t.z.to_string() + " is invalid at p = " + std::to_string(p));
      continue;
    }
    out.add(z, c);
  }
  return out;
}

bool reproduces(const StableQuery& q, const StableProduct& sp, int p) {
  try {
    return evaluate_at(sp, q, p) == sample_product(q, p);
  } catch (const Error&) {
    return false;
  }
}

std::vector<std::pair<Matrix, LaurentPoly>> specialize(const StableProduct& sp) {
  std::vector<std::pair<Matrix, LaurentPoly>> out;
  for (const auto& t : sp.terms) {
    LaurentPoly c = t.g.eval_one();
    if (t.den_pow > 0) c = exact_div(c, v2_minus_one_pow(t.den_pow));
    if (!c.is_zero()) out.emplace_back(t.z, std::move(c));
  }
  return out;
}

bool specialized_integral(const std::vector<std::pair<Matrix, LaurentPoly>>& terms) {
  return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second.is_integral(); });
}

UElement::UElement(int n) : n_(n) {
  if (n < 1) throw DomainError("UElement requires n >= 1");
}

UElement UElement::symbol(const Matrix& hat, const WeightVec& weight, const LaurentPoly& scale) {
  UElement u(hat.n());
  u.add(hat, weight, scale);
  return u;
}

std::vector<FormalSymbol> UElement::symbols() const {
  std::vector<FormalSymbol> out;
  for (const auto& [key, c] : terms_) out.push_back({key.first, key.second, c});
  return out;
}

void UElement::add(const Matrix& hat, const WeightVec& weight, const LaurentPoly& scale) {
  if (hat.n() != n_ || static_cast<int>(weight.size()) != n_) throw DomainError("UElement: size mismatch");
  if (!is_hat(hat)) throw DomainError(hat.to_string() + " is not a hat matrix");
  if (scale.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({hat, weight}, scale);
  if (!inserted) {
    it->second += scale;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UElement& UElement::operator+=(const UElement& o) {
  if (o.n_ != n_) throw Incompatible("UElement: size mismatch");
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

UElement& UElement::operator-=(const UElement& o) {
  if (o.n_ != n_) throw Incompatible("UElement: size mismatch");
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

UElement& UElement::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, x] : terms_) x *= c;
  return *this;
}

std::string UElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << k.first.to_string() << flagschur::to_string(k.second);
  }
  return os.str();
}

UElement limit_generator(int i, int j, int n) {
  if (i < 0 || j < 0 || i >= n || j >= n) throw DomainError("limit generator index out of range");
  UElement u(n);
  if (i > j) return u;
  WeightVec w(static_cast<std::size_t>(n), 0);
  w[static_cast<std::size_t>(i)] = 1;
  if (i == j) {
    u.add(Matrix(n), w, LaurentPoly(1L));
  } else {
    u.add(Matrix::unit(n, i, j), w, LaurentPoly::v(1) - LaurentPoly::v(-1));
  }
  return u;
}

namespace {

long dot(const WeightVec& a, const WeightVec& b) {
  long s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += static_cast<long>(a[k]) * b[k];
  return s;
}

WeightVec plus(WeightVec a, const WeightVec& b, int sign = 1) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += sign * b[k];
  return a;
}

// Diagonals at which a symbol product is sampled: index 0 is the base point,
// 1..n its unit perturbations, then the {0,1}^n grid and two off-grid points.
std::vector<WeightVec> lambda_samples(int n) {
  std::vector<WeightVec> out;
  const WeightVec base(static_cast<std::size_t>(n), 0);
  out.push_back(base);
  for (int k = 0; k < n; ++k) {
    WeightVec e = base;
    e[static_cast<std::size_t>(k)] = 1;
    out.push_back(e);
  }
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) <= 1) continue;
    WeightVec w(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(k)] = (mask >> k) & 1u;
    out.push_back(w);
  }
  const int a[] = {2, -1, 3, -2};
  const int b[] = {-1, 2, 0, 1};
  WeightVec h1(static_cast<std::size_t>(n));
  WeightVec h2(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    h1[static_cast<std::size_t>(k)] = a[k % 4] + k / 4;
    h2[static_cast<std::size_t>(k)] = b[k % 4] - k / 4;
  }
  out.push_back(h1);
  out.push_back(h2);
  return out;
}

struct Observation {
  WeightVec nu;
  LaurentPoly f;
};

std::string describe(const Matrix& h, const std::vector<std::pair<WeightVec, std::optional<Observation>>>& rows) {
  std::ostringstream os;
  os << "hat " << h.to_string() << ":";
  for (const auto& [lambda, obs] : rows) {
    os << " lambda=" << to_string(lambda) << " -> ";
    if (obs) {
      os << "[nu=" << to_string(obs->nu) << ", " << obs->f.to_string() << "]";
    } else {
      os << "absent";
    }
  }
  return os.str();
}

UElement symbol_product(const Matrix& hx, const WeightVec& wx, const Matrix& hy, const WeightVec& wy) {
  using Key = std::tuple<Matrix, WeightVec, Matrix, WeightVec>;
  static std::mutex mu;
  static std::map<Key, UElement> cache;
  const Key key{hx, wx, hy, wy};
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  const int n = hx.n();
  const auto lambdas = lambda_samples(n);
  const WeightVec offset = plus(co(hx), ro(hy), -1);
  // hat -> per-lambda observation
  std::map<Matrix, std::vector<std::optional<Observation>>> seen;
  for (std::size_t s = 0; s < lambdas.size(); ++s) {
    const WeightVec& lambda = lambdas[s];
    const WeightVec mu_w = plus(lambda, offset);
    const StableQuery q{{add_diag(hx, lambda), add_diag(hy, mu_w)}};
    const LaurentPoly weight_factor = LaurentPoly::v(static_cast<int>(dot(lambda, wx) + dot(mu_w, wy)));
    for (auto& [z, g] : specialize(stabilize(q))) {
      auto& row = seen[hat(z)];
      row.resize(lambdas.size());
      row[s] = Observation{diagonal(z), weight_factor * g};
    }
  }

  UElement out(n);
  for (auto& [h, row] : seen) {
    row.resize(lambdas.size());
    auto fail = [&, &h = h, &row = row](const std::string& why) {
      std::vector<std::pair<WeightVec, std::optional<Observation>>> rows;
      for (std::size_t s = 0; s < lambdas.size(); ++s) rows.emplace_back(lambdas[s], row[s]);
      throw AnsatzFailure("product " + hx.to_string() + to_string(wx) + " * " + hy.to_string() + to_string(wy) +
                          ": " + why + "; " + describe(h, rows));
    };
    for (std::size_t s = 0; s <= static_cast<std::size_t>(n); ++s) {
      if (!row[s]) fail("term missing at a base sample");
    }
    WeightVec w(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      LaurentPoly ratio;
      try {
        ratio = exact_div(row[static_cast<std::size_t>(k) + 1]->f, row[0]->f);
      } catch (const NotDivisible&) {
        fail("ratio under a unit shift is not a monomial");
      }
      if (!ratio.is_monomial() || ratio.coeff(ratio.min_exp()) != 1) fail("ratio under a unit shift is not a power of v");
      w[static_cast<std::size_t>(k)] = ratio.min_exp();
    }
    const LaurentPoly c = row[0]->f.shifted(static_cast<int>(-dot(w, row[0]->nu)));
    for (std::size_t s = 0; s < lambdas.size(); ++s) {
      if (!row[s]) fail("term missing at a held-out sample");
      if (row[s]->f != c.shifted(static_cast<int>(dot(w, row[s]->nu)))) fail("held-out sample disagrees");
    }
    out.add(h, w, c);
  }

  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, out);
  return out;
}

}  // namespace

UElement formal_product(const UElement& x, const UElement& y) {
  if (x.n() != y.n()) throw Incompatible("formal_product: size mismatch");
  UElement out(x.n());
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      out += (cx * cy) * symbol_product(kx.first, kx.second, ky.first, ky.second);
    }
  }
  return out;
}

LimitRttReport verify_limit_rtt(int n) {
  LimitRttReport rep;
  rep.n = n;
  std::vector<std::vector<UElement>> t;
  for (int i = 0; i < n; ++i) {
    t.emplace_back();
    for (int j = 0; j < n; ++j) t.back().push_back(limit_generator(i, j, n));
  }
  std::map<std::pair<int, int>, UElement> cache;
  auto mul = [&](int i, int j, int k, int l) -> const UElement& {
    const std::pair<int, int> key{i * n + j, k * n + l};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, formal_product(t[i][j], t[k][l])).first;
    return it->second;
  };
  const LaurentPoly vinv_minus_v = LaurentPoly::v(-1) - LaurentPoly::v(1);
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < n; ++a) {
      for (int j = 0; j < n; ++j) {
        for (int b = 0; b < n; ++b) {
          UElement lhs = LaurentPoly::v(i == j ? -1 : 0) * mul(i, a, j, b);
          lhs -= LaurentPoly::v(a == b ? -1 : 0) * mul(j, b, i, a);
          const long sign = static_cast<long>(b < a) - static_cast<long>(i < j);
          UElement rhs(n);
          if (sign != 0) rhs = (LaurentPoly(sign) * vinv_minus_v) * mul(j, a, i, b);
          ++rep.checked;
          UElement diff = lhs - rhs;
          if (!diff.is_zero()) rep.failures.push_back({{i, a, j, b}, std::move(diff)});
        }
      }
    }
  }
  return rep;
}

}  // namespace flagschur
