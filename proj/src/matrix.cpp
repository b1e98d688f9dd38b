#include "flagschur/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "flagschur/errors.hpp"

namespace flagschur {

Matrix::Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n), 0) {
  if (n < 0) throw DomainError("negative matrix dimension");
}

Matrix::Matrix(int n, std::vector<int> entries) : n_(n), a_(std::move(entries)) {
  if (n < 0 || a_.size() != static_cast<std::size_t>(n * n)) {
    throw DomainError("matrix entries do not form an n x n array");
  }
}

Matrix Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  Matrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw DomainError("matrix rows must have length n");
    }
    for (int j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> r;
  for (const auto& row : rows) r.emplace_back(row);
  return from_rows(r);
}

Matrix Matrix::diag(const WeightVec& lambda) {
  Matrix m(static_cast<int>(lambda.size()));
  for (int i = 0; i < m.n(); ++i) m(i, i) = lambda[static_cast<std::size_t>(i)];
  return m;
}

Matrix Matrix::identity(int n) { return diag(WeightVec(static_cast<std::size_t>(n), 1)); }

Matrix Matrix::unit(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n) throw DomainError("matrix unit index out of range");
  Matrix m(n);
  m(i, j) = 1;
  return m;
}

long Matrix::total() const {
  long s = 0;
  for (int x : a_) s += x;
  return s;
}

bool Matrix::is_diagonal() const { return off_diagonal_support() == 0; }

int Matrix::off_diagonal_support() const {
  int c = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i != j && (*this)(i, j) != 0) ++c;
    }
  }
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.n_ != n_) throw DomainError("matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (o.n_ != n_) throw DomainError("matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Matrix operator*(int k, Matrix a) {
  for (int& x : a.a_) x *= k;
  return a;
}

std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.a_.begin(), a.a_.end(), b.a_.begin(), b.a_.end());
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

WeightVec ro(const Matrix& m) {
  WeightVec r(static_cast<std::size_t>(m.n()), 0);
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) r[static_cast<std::size_t>(i)] += m(i, j);
  }
  return r;
}

WeightVec co(const Matrix& m) {
  WeightVec c(static_cast<std::size_t>(m.n()), 0);
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) c[static_cast<std::size_t>(j)] += m(i, j);
  }
  return c;
}

bool is_theta(const Matrix& m) {
  return std::all_of(m.entries().begin(), m.entries().end(), [](int x) { return x >= 0; });
}

bool is_tilde(const Matrix& m) {
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) {
      if (i != j && m(i, j) < 0) return false;
    }
  }
  return true;
}

bool is_hat(const Matrix& m) {
  if (!is_tilde(m)) return false;
  for (int i = 0; i < m.n(); ++i) {
    if (m(i, i) != 0) return false;
  }
  return true;
}

namespace {

// Sum of a_ij * a_kl over all ordered pairs of positions accepted by `pick`.
template <typename Pred>
long pair_sum(const Matrix& a, Pred pick) {
  const int n = a.n();
  long s = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const long x = a(i, j);
      if (x == 0) continue;
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          if (a(k, l) != 0 && pick(i, j, k, l)) s += x * a(k, l);
        }
      }
    }
  }
  return s;
}

}  // namespace

long dim_stab(const Matrix& a) {
  return pair_sum(a, [](int i, int j, int k, int l) { return i >= k && j >= l; });
}

long dim_orbit(const Matrix& a) {
  return pair_sum(a, [](int i, int j, int k, int l) { return i < k || j < l; });
}

long norm_exponent(const Matrix& a) {
  return pair_sum(a, [](int i, int j, int k, int l) { return i >= k && j < l; });
}

bool preceq(const Matrix& a, const Matrix& b) {
  if (a.n() != b.n()) throw DomainError("preceq: size mismatch");
  const int n = a.n();
  auto upper_corner = [n](const Matrix& m, int i, int j) {
    long s = 0;
    for (int r = 0; r <= i; ++r) {
      for (int c = j; c < n; ++c) s += m(r, c);
    }
    return s;
  };
  auto lower_corner = [n](const Matrix& m, int i, int j) {
    long s = 0;
    for (int r = i; r < n; ++r) {
      for (int c = 0; c <= j; ++c) s += m(r, c);
    }
    return s;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i < j && upper_corner(a, i, j) > upper_corner(b, i, j)) return false;
      if (i > j && lower_corner(a, i, j) > lower_corner(b, i, j)) return false;
    }
  }
  return true;
}

Matrix hat(const Matrix& a) {
  Matrix h = a;
  for (int i = 0; i < h.n(); ++i) h(i, i) = 0;
  return h;
}

Matrix add_diag(const Matrix& h, const WeightVec& lambda) {
  if (static_cast<int>(lambda.size()) != h.n()) throw DomainError("add_diag: weight length mismatch");
  return h + Matrix::diag(lambda);
}

Matrix shift(const Matrix& a, int p) {
  Matrix s = a;
  for (int i = 0; i < s.n(); ++i) s(i, i) += p;
  return s;
}

WeightVec diagonal(const Matrix& a) {
  WeightVec w(static_cast<std::size_t>(a.n()));
  for (int i = 0; i < a.n(); ++i) w[static_cast<std::size_t>(i)] = a(i, i);
  return w;
}

std::vector<WeightVec> compositions(int n, int d) {
  std::vector<WeightVec> out;
  if (n < 0 || d < 0) return out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  WeightVec cur(static_cast<std::size_t>(n), 0);
  // Recursive fill, first coordinate varying slowest.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      cur[static_cast<std::size_t>(pos)] = remaining;
      out.push_back(cur);
      return;
    }
    for (int x = 0; x <= remaining; ++x) {
      cur[static_cast<std::size_t>(pos)] = x;
      self(self, pos + 1, remaining - x);
    }
  };
  rec(rec, 0, d);
  return out;
}

std::vector<Matrix> enumerate_theta(int n, int d) {
  if (n < 1 || d < 0) throw DomainError("enumerate_theta requires n >= 1 and d >= 0");
  std::vector<Matrix> out;
  for (auto& flat : compositions(n * n, d)) out.emplace_back(n, std::move(flat));
  return out;
}

std::string to_string(const WeightVec& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

}  // namespace flagschur
