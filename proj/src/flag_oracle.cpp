#include "flagschur/flag_oracle.hpp"

#include <algorithm>
#include <string>

#include "flagschur/errors.hpp"

namespace flagschur {

bool is_prime(long q) {
  if (q < 2) return false;
  for (long k = 2; k * k <= q; ++k) {
    if (q % k == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(int q) : q_(q) {
  if (!is_prime(q)) throw DomainError("field order must be prime, got " + std::to_string(q));
}

int PrimeField::inv(int a) const {
  if (a % q_ == 0) throw DomainError("inverse of zero in F_q");
  // q is small; Fermat via repeated multiplication.
  int r = 1;
  int base = a % q_;
  int e = q_ - 2;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FqMat rref(const PrimeField& f, FqMat rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[lead]);
    const int s = f.inv(rows[lead][c]);
    for (int& x : rows[lead]) x = f.mul(x, s);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][c] == 0) continue;
      const int factor = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = f.sub(rows[r][k], f.mul(factor, rows[lead][k]));
    }
    ++lead;
  }
  rows.resize(lead);
  return rows;
}

Subspace::Subspace(int q, int ambient) : q_(q), ambient_(ambient) {
  if (ambient < 0) throw DomainError("negative ambient dimension");
}

Subspace Subspace::span(int q, int ambient, FqMat vectors) {
  PrimeField f(q);
  for (auto& x : vectors) {
    if (static_cast<int>(x.size()) != ambient) throw DomainError("vector length != ambient dimension");
    for (int& c : x) c = ((c % q) + q) % q;
  }
  Subspace s(q, ambient);
  s.basis_ = rref(f, std::move(vectors));
  return s;
}

Subspace Subspace::full(int q, int ambient) {
  std::vector<int> all(static_cast<std::size_t>(ambient));
  for (int i = 0; i < ambient; ++i) all[static_cast<std::size_t>(i)] = i;
  return coordinate(q, ambient, all);
}

Subspace Subspace::coordinate(int q, int ambient, const std::vector<int>& coords) {
  FqMat rows;
  for (int c : coords) {
    FqVec e(static_cast<std::size_t>(ambient), 0);
    e[static_cast<std::size_t>(c)] = 1;
    rows.push_back(std::move(e));
  }
  return span(q, ambient, std::move(rows));
}

bool Subspace::contains(const FqVec& x) const {
  FqMat rows = basis_;
  rows.push_back(x);
  return static_cast<int>(rref(PrimeField(q_), std::move(rows)).size()) == dim();
}

bool Subspace::contains(const Subspace& w) const {
  if (w.q_ != q_ || w.ambient_ != ambient_) throw DomainError("subspaces over different spaces");
  return subspace_sum(*this, w).dim() == dim();
}

Subspace Subspace::apply(const FqMat& g) const {
  PrimeField f(q_);
  FqMat images;
  for (const auto& x : basis_) {
    FqVec y(static_cast<std::size_t>(ambient_), 0);
    for (int r = 0; r < ambient_; ++r) {
      int acc = 0;
      for (int c = 0; c < ambient_; ++c) acc = f.add(acc, f.mul(g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], x[static_cast<std::size_t>(c)]));
      y[static_cast<std::size_t>(r)] = acc;
    }
    images.push_back(std::move(y));
  }
  return span(q_, ambient_, std::move(images));
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.q_ <=> b.q_; c != 0) return c;
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  if (auto c = a.basis_.size() <=> b.basis_.size(); c != 0) return c;
  return a.basis_ <=> b.basis_;
}

namespace {

void check_same_space(const Subspace& u, const Subspace& w) {
  if (u.q() != w.q() || u.ambient() != w.ambient()) {
    throw DomainError("subspace operation on mismatched field or ambient space");
  }
}

}  // namespace

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  check_same_space(u, w);
  FqMat rows = u.basis();
  rows.insert(rows.end(), w.basis().begin(), w.basis().end());
  return Subspace::span(u.q(), u.ambient(), std::move(rows));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& w) {
  check_same_space(u, w);
  // Zassenhaus: reduce [u | u] over [w | 0]; rows with zero left half carry
  // a basis of the intersection in their right half.
  const int d = u.ambient();
  PrimeField f(u.q());
  FqMat rows;
  for (const auto& x : u.basis()) {
    FqVec r(x);
    r.insert(r.end(), x.begin(), x.end());
    rows.push_back(std::move(r));
  }
  for (const auto& x : w.basis()) {
    FqVec r(x);
    r.insert(r.end(), static_cast<std::size_t>(d), 0);
    rows.push_back(std::move(r));
  }
  FqMat reduced = rref(f, std::move(rows));
  FqMat meet;
  for (const auto& r : reduced) {
    if (std::all_of(r.begin(), r.begin() + d, [](int x) { return x == 0; })) {
      meet.emplace_back(r.begin() + d, r.end());
    }
  }
  return Subspace::span(u.q(), d, std::move(meet));
}

WeightVec Flag::step_dims() const {
  WeightVec s;
  int prev = 0;
  for (const auto& v : chain) {
    s.push_back(v.dim() - prev);
    prev = v.dim();
  }
  return s;
}

Flag Flag::apply(const FqMat& g) const {
  Flag out;
  for (const auto& v : chain) out.chain.push_back(v.apply(g));
  return out;
}

namespace {

void check_pair(const Flag& f, const Flag& g) {
  if (f.n() != g.n() || f.n() == 0) throw DomainError("flags must have the same positive length");
  check_same_space(f.chain.front(), g.chain.front());
}

// V_i with V_0 = 0 (i is 1-based here).
const Subspace& step(const Flag& f, int i, const Subspace& zero) {
  return i == 0 ? zero : f.chain[static_cast<std::size_t>(i - 1)];
}

}  // namespace

Matrix orbit_matrix(const Flag& f, const Flag& g) {
  check_pair(f, g);
  const int n = f.n();
  const Subspace zero(f.chain.front().q(), f.chain.front().ambient());
  Matrix m(n);
  for (int i = 1; i <= n; ++i) {
    const Subspace& prev = step(f, i - 1, zero);
    const Subspace& cur = step(f, i, zero);
    for (int j = 1; j <= n; ++j) {
      const int upper = subspace_sum(prev, subspace_intersect(cur, step(g, j, zero))).dim();
      const int lower = subspace_sum(prev, subspace_intersect(cur, step(g, j - 1, zero))).dim();
      m(i - 1, j - 1) = upper - lower;
    }
  }
  return m;
}

Matrix orbit_matrix_by_intersections(const Flag& f, const Flag& g) {
  check_pair(f, g);
  const int n = f.n();
  const Subspace zero(f.chain.front().q(), f.chain.front().ambient());
  std::vector<std::vector<int>> meet(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n + 1), 0));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      meet[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = subspace_intersect(step(f, i, zero), step(g, j, zero)).dim();
    }
  }
  Matrix m(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      auto at = [&](int r, int c) { return meet[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; };
      m(i - 1, j - 1) = at(i, j) - at(i - 1, j) - at(i, j - 1) + at(i - 1, j - 1);
    }
  }
  return m;
}

std::vector<Subspace> enumerate_subspaces(int q, int d, int k) {
  PrimeField field(q);
  std::vector<Subspace> out;
  if (k < 0 || k > d) return out;
  // Choose pivot columns, then fill the free RREF positions in every way.
  std::vector<int> pivots(static_cast<std::size_t>(k));
  auto fill = [&](const std::vector<int>& piv) {
    std::vector<std::pair<int, int>> free;  // (row, col)
    for (int r = 0; r < k; ++r) {
      for (int c = piv[static_cast<std::size_t>(r)] + 1; c < d; ++c) {
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(r, c);
      }
    }
    std::vector<int> digits(free.size(), 0);
    while (true) {
      FqMat rows(static_cast<std::size_t>(k), FqVec(static_cast<std::size_t>(d), 0));
      for (int r = 0; r < k; ++r) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(piv[static_cast<std::size_t>(r)])] = 1;
      for (std::size_t t = 0; t < free.size(); ++t) {
        rows[static_cast<std::size_t>(free[t].first)][static_cast<std::size_t>(free[t].second)] = digits[t];
      }
      out.push_back(Subspace::span(q, d, std::move(rows)));
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
  };
  auto choose = [&](auto&& self, int idx, int start) -> void {
    if (idx == k) {
      fill(pivots);
      return;
    }
    for (int c = start; c < d; ++c) {
      pivots[static_cast<std::size_t>(idx)] = c;
      self(self, idx + 1, c + 1);
    }
  };
  choose(choose, 0, 0);
  return out;
}

std::vector<Flag> enumerate_flags_with_steps(const WeightVec& steps, int q, std::size_t cap) {
  PrimeField field(q);
  int d = 0;
  for (int s : steps) {
    if (s < 0) throw DomainError("negative flag step dimension");
    d += s;
  }
  const int n = static_cast<int>(steps.size());
  std::vector<std::vector<Subspace>> by_dim(static_cast<std::size_t>(d + 1));
  std::vector<Flag> out;
  Flag cur;
  auto rec = [&](auto&& self, int idx, int dim_so_far) -> void {
    if (idx == n) {
      if (out.size() >= cap) throw TooLarge("flag enumeration exceeds cap of " + std::to_string(cap));
      out.push_back(cur);
      return;
    }
    const int target = dim_so_far + steps[static_cast<std::size_t>(idx)];
    auto& pool = by_dim[static_cast<std::size_t>(target)];
    if (pool.empty()) pool = enumerate_subspaces(q, d, target);
    for (const auto& w : pool) {
      if (idx > 0 && !w.contains(cur.chain.back())) continue;
      cur.chain.push_back(w);
      self(self, idx + 1, target);
      cur.chain.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<Flag> enumerate_flags(int n, int d, int q, std::size_t cap) {
  if (n < 1 || d < 0) throw DomainError("enumerate_flags requires n >= 1, d >= 0");
  std::vector<Flag> out;
  for (const auto& steps : compositions(n, d)) {
    auto part = enumerate_flags_with_steps(steps, q, cap - out.size());
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::pair<Flag, Flag> canonical_pair(const Matrix& a, int q) {
  if (!is_theta(a)) throw DomainError("canonical_pair requires nonnegative entries");
  PrimeField field(q);
  const int n = a.n();
  const int d = static_cast<int>(a.total());
  // Coordinate t belongs to cell (row_of[t], col_of[t]).
  std::vector<int> row_of;
  std::vector<int> col_of;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < a(i, j); ++k) {
        row_of.push_back(i);
        col_of.push_back(j);
      }
    }
  }
  Flag f;
  Flag g;
  for (int i = 0; i < n; ++i) {
    std::vector<int> rows;
    std::vector<int> cols;
    for (int t = 0; t < d; ++t) {
      if (row_of[static_cast<std::size_t>(t)] <= i) rows.push_back(t);
      if (col_of[static_cast<std::size_t>(t)] <= i) cols.push_back(t);
    }
    f.chain.push_back(Subspace::coordinate(q, d, rows));
    g.chain.push_back(Subspace::coordinate(q, d, cols));
  }
  return {f, g};
}

long convolve_oracle_at(const Matrix& a, const Matrix& b, const Flag& v, const Flag& vp, std::size_t cap) {
  if (a.n() != b.n() || a.n() != v.n() || v.n() != vp.n()) throw DomainError("convolve_oracle: size mismatch");
  if (co(a) != ro(b)) return 0;
  if (ro(a) != v.step_dims() || co(b) != vp.step_dims()) return 0;
  long count = 0;
  for (const auto& mid : enumerate_flags_with_steps(co(a), v.chain.front().q(), cap)) {
    if (orbit_matrix(v, mid) == a && orbit_matrix(mid, vp) == b) ++count;
  }
  return count;
}

long convolve_oracle(const Matrix& a, const Matrix& b, const Matrix& c, int q, std::size_t cap) {
  if (a.n() != b.n() || a.n() != c.n()) throw DomainError("convolve_oracle: size mismatch");
  if (a.total() != c.total() || b.total() != c.total()) return 0;
  const auto [v, vp] = canonical_pair(c, q);
  return convolve_oracle_at(a, b, v, vp, cap);
}

std::map<std::pair<Matrix, Matrix>, long> oracle_constants_into(const Matrix& c, int q, std::size_t cap) {
  const auto [v, vp] = canonical_pair(c, q);
  std::map<std::pair<Matrix, Matrix>, long> out;
  for (const auto& mid : enumerate_flags(c.n(), static_cast<int>(c.total()), q, cap)) {
    ++out[{orbit_matrix(v, mid), orbit_matrix(mid, vp)}];
  }
  return out;
}

namespace {

long ipow(long b, int e) {
  long r = 1;
  for (int k = 0; k < e; ++k) r *= b;
  return r;
}

}  // namespace

CountingLemmaReport verify_counting_lemmas(int q, int m, int n) {
  if (n < 1 || n > m) throw DomainError("counting lemmas need 1 <= n <= m");
  CountingLemmaReport rep;
  rep.q = q;
  rep.m = m;
  rep.n = n;
  const auto hyperplanes = enumerate_subspaces(q, m, m - 1);

  std::vector<int> first_n(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) first_n[static_cast<std::size_t>(i)] = i;
  const Subspace v2 = Subspace::coordinate(q, m, first_n);
  first_n.pop_back();
  const Subspace v1 = Subspace::coordinate(q, m, first_n);
  for (const auto& h : hyperplanes) {
    if (h.contains(v1) && subspace_intersect(v2, h) != v2) ++rep.first_count;
  }
  rep.first_expected = ipow(q, m - n);

  if (n < m) {
    rep.second_applicable = true;
    const Subspace line = Subspace::coordinate(q, m, {n});
    for (const auto& h : hyperplanes) {
      if (subspace_intersect(line, h).dim() == 0 && subspace_intersect(v2, h).dim() == n - 1) {
        ++rep.second_count;
      }
    }
    rep.second_expected = ipow(q, m - 1) - ipow(q, m - n - 1);
  }
  return rep;
}

}  // namespace flagschur
