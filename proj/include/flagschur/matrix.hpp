#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace flagschur {

using WeightVec = std::vector<int>;

/// Dense n x n integer matrix indexing G-orbits on pairs of flags.
///
/// Indices are 0-based throughout the C++ API. Ordering is lexicographic on
/// the flattened rows (after comparing n), which fixes every enumeration and
/// output order in the library.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n);
  Matrix(int n, std::vector<int> entries);
  static Matrix from_rows(const std::vector<std::vector<int>>& rows);
  static Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
  static Matrix diag(const WeightVec& lambda);
  static Matrix identity(int n);
  /// Matrix unit E_ij.
  static Matrix unit(int n, int i, int j);

  int n() const { return n_; }
  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  int& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const std::vector<int>& entries() const { return a_; }

  long total() const;
  bool is_diagonal() const;
  /// Count of nonzero off-diagonal positions.
  int off_diagonal_support() const;

  Matrix transpose() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(int k, Matrix a);

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<int> a_;
};

/// Row sums.
WeightVec ro(const Matrix& m);
/// Column sums.
WeightVec co(const Matrix& m);

/// Nonnegative entries (Theta_d with d = total).
bool is_theta(const Matrix& m);
/// Off-diagonal entries nonnegative, diagonal arbitrary.
bool is_tilde(const Matrix& m);
/// Off-diagonal entries nonnegative and zero diagonal.
bool is_hat(const Matrix& m);

/// dim of the stabilizer C_G(V, V'): sum over i>=k, j>=l of a_ij a_kl.
long dim_stab(const Matrix& a);
/// dim O_A: sum over (i<k or j<l) of a_ij a_kl.
long dim_orbit(const Matrix& a);
/// d(A) - r(A) = sum over i>=k, j<l of a_ij a_kl; [A] = v^{-norm_exponent(A)} e_A.
long norm_exponent(const Matrix& a);

/// The corner-sum order:
/// sum_{r<=i, s>=j} a_rs <= same for B for all i<j, and
/// sum_{r>=i, s<=j} a_rs <= same for B for all i>j.
bool preceq(const Matrix& a, const Matrix& b);

/// Zero out the diagonal.
Matrix hat(const Matrix& a);
Matrix add_diag(const Matrix& h, const WeightVec& lambda);
/// A + pI.
Matrix shift(const Matrix& a, int p);
WeightVec diagonal(const Matrix& a);

/// All n x n nonnegative integer matrices with entry sum d, in ascending
/// lexicographic order of the flattened rows.
std::vector<Matrix> enumerate_theta(int n, int d);
/// All length-n nonnegative integer vectors summing to d, ascending lexicographic.
std::vector<WeightVec> compositions(int n, int d);

std::string to_string(const WeightVec& w);

}  // namespace flagschur
