#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "flagschur/matrix.hpp"

namespace flagschur {

/// Arithmetic in F_q for a prime q (q = 2 included).
class PrimeField {
 public:
  explicit PrimeField(int q);
  int q() const { return q_; }
  int add(int a, int b) const { return (a + b) % q_; }
  int sub(int a, int b) const { return (a - b + q_) % q_; }
  int mul(int a, int b) const { return (a * b) % q_; }
  int neg(int a) const { return (q_ - a) % q_; }
  int inv(int a) const;

 private:
  int q_;
};

bool is_prime(long q);

using FqVec = std::vector<int>;
using FqMat = std::vector<FqVec>;

/// A subspace of F_q^d stored by its reduced-row-echelon basis, which is
/// unique per subspace; equality and ordering are therefore structural.
class Subspace {
 public:
  Subspace(int q, int ambient);  // zero subspace
  static Subspace span(int q, int ambient, FqMat vectors);
  static Subspace full(int q, int ambient);
  static Subspace coordinate(int q, int ambient, const std::vector<int>& coords);

  int q() const { return q_; }
  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const FqMat& basis() const { return basis_; }

  bool contains(const FqVec& x) const;
  bool contains(const Subspace& w) const;
  /// Image under the linear map x -> g x (g given by rows, acting on column vectors).
  Subspace apply(const FqMat& g) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  int q_;
  int ambient_;
  FqMat basis_;
};

/// Reduce rows to RREF over F_q, dropping zero rows.
FqMat rref(const PrimeField& f, FqMat rows);

Subspace subspace_sum(const Subspace& u, const Subspace& w);
Subspace subspace_intersect(const Subspace& u, const Subspace& w);

/// n-step flag V_1 ⊆ ... ⊆ V_n = F_q^d (V_0 = 0 implicit).
struct Flag {
  std::vector<Subspace> chain;

  int n() const { return static_cast<int>(chain.size()); }
  /// dim V_i - dim V_{i-1}
  WeightVec step_dims() const;
  Flag apply(const FqMat& g) const;
  friend bool operator==(const Flag&, const Flag&) = default;
};

/// Relative position: entry (i,j) = dim (V_{i-1} + V_i ∩ V'_j) / (V_{i-1} + V_i ∩ V'_{j-1}).
Matrix orbit_matrix(const Flag& f, const Flag& g);
/// Same matrix via inclusion–exclusion over dim (V_i ∩ V'_j); an independent route.
Matrix orbit_matrix_by_intersections(const Flag& f, const Flag& g);

inline constexpr std::size_t kDefaultFlagCap = 200000;

/// All k-dimensional subspaces of F_q^d, in RREF order of enumeration.
std::vector<Subspace> enumerate_subspaces(int q, int d, int k);
/// Every n-step flag of F_q^d exactly once. Throws TooLarge past `cap`.
std::vector<Flag> enumerate_flags(int n, int d, int q, std::size_t cap = kDefaultFlagCap);
/// Flags with prescribed step dimensions.
std::vector<Flag> enumerate_flags_with_steps(const WeightVec& steps, int q,
                                             std::size_t cap = kDefaultFlagCap);

/// Coordinate pair (f, f') realizing the orbit matrix A: one basis vector per
/// unit of a_ij, V_i spanned by vectors with row index <= i and V'_j by those
/// with column index <= j.
std::pair<Flag, Flag> canonical_pair(const Matrix& a, int q);

/// Structure constant of e_A * e_B at e_C over F_q: with (V, V') ∈ O_C fixed,
/// the number of V'' with (V, V'') ∈ O_A and (V'', V') ∈ O_B.
long convolve_oracle(const Matrix& a, const Matrix& b, const Matrix& c, int q,
                     std::size_t cap = kDefaultFlagCap);
/// Same count with a caller-chosen representative (V, V') of O_C.
long convolve_oracle_at(const Matrix& a, const Matrix& b, const Flag& v, const Flag& vp,
                        std::size_t cap = kDefaultFlagCap);

/// Every structure constant landing on C at once: (A, B) -> count, over all
/// intermediate flags V''.
std::map<std::pair<Matrix, Matrix>, long> oracle_constants_into(const Matrix& c, int q,
                                                               std::size_t cap = kDefaultFlagCap);

struct CountingLemmaReport {
  int q = 0;
  int m = 0;
  int n = 0;
  long first_count = 0;
  long first_expected = 0;
  bool second_applicable = false;  // needs n < m
  long second_count = 0;
  long second_expected = 0;
  bool ok() const {
    return first_count == first_expected && (!second_applicable || second_count == second_expected);
  }
};

/// Brute-force check of the two hyperplane-counting lemmas in F_q^m:
/// hyperplanes containing V_1 (dim n-1) but not V_2 (dim n) number q^{m-n};
/// hyperplanes meeting a line V_1 trivially and an n-space V_2 (V_1 ∩ V_2 = 0)
/// in codimension one number q^{m-1} - q^{m-n-1}.
CountingLemmaReport verify_counting_lemmas(int q, int m, int n);

}  // namespace flagschur
