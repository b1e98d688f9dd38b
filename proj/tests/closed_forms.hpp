#pragma once

#include <string>
#include <vector>

#include "flagschur/stabilization.hpp"

namespace flagschur::testing {

// A generator product t_{x1 y1} t_{x2 y2} (0-based) with the closed form
// written out in the limit RTT proof.
struct ClosedForm {
  std::string label;
  int x1, y1, x2, y2;
  UElement expected;
};

inline UElement hat_sum(int n, std::vector<std::pair<int, int>> units, int i, int j, const LaurentPoly& c) {
  Matrix h(n);
  for (auto [r, s] : units) h(r, s) += 1;
  WeightVec w(static_cast<std::size_t>(n), 0);
  w[static_cast<std::size_t>(i)] += 1;
  w[static_cast<std::size_t>(j)] += 1;
  return UElement::symbol(h, w, c);
}

inline std::vector<ClosedForm> proof_closed_forms(int n) {
  const LaurentPoly v = LaurentPoly::v(1);
  const LaurentPoly s = LaurentPoly::v(1) - LaurentPoly::v(-1);
  const LaurentPoly s2 = s * s;
  std::vector<ClosedForm> out;
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a)
      for (int j = 0; j < n; ++j)
        for (int b = 0; b < n; ++b) {
          if (!(i < a && j < b)) continue;
          auto both = [&](const LaurentPoly& c) { return hat_sum(n, {{i, a}, {j, b}}, i, j, c); };
          auto one = [&](int r, int c_, const LaurentPoly& c) { return hat_sum(n, {{r, c_}}, i, j, c); };
          auto cross = [&](const LaurentPoly& c) { return hat_sum(n, {{i, b}, {j, a}}, i, j, c); };
          if (i < j && j < b && b < a) {
            out.push_back({"first: t_ia t_jb", i, a, j, b, both(s2)});
            out.push_back({"first: t_jb t_ia", j, b, i, a, both(s2)});
          }
          if (i < j && a <= b) {
            out.push_back({"second: t_jb t_ia", j, b, i, a, both(s2)});
            if (j < a && a == b) {
              out.push_back({"second i<j<a=b: t_ia t_jb", i, a, j, b, both(s2 * v)});
              out.push_back({"second i<j<a=b: t_ja t_ib", j, a, i, b, both(s2)});
            } else if (j < a && a < b) {
              out.push_back({"second i<j<a<b: t_ia t_jb", i, a, j, b, both(s2) + cross(s2 * s)});
              out.push_back({"second i<j<a<b: t_ja t_ib", j, a, i, b, cross(s2)});
            } else if (j == a) {
              out.push_back({"second i<j=a<b: t_ia t_jb", i, a, j, b, both(s2) + one(i, b, s2)});
              out.push_back({"second i<j=a<b: t_ja t_ib", j, a, i, b, one(i, b, s)});
            } else {
              out.push_back({"second i<a<j<b: t_ia t_jb", i, a, j, b, both(s2)});
              out.push_back({"second i<a<j<b: t_ja t_ib", j, a, i, b, UElement(n)});
            }
          }
          if (b < a && i >= j) {
            out.push_back({"third: t_ia t_jb", i, a, j, b, both(i == j ? s2 * v : s2)});
            if (b < i) {
              out.push_back({"third j<b<i<a: t_jb t_ia", j, b, i, a, both(s2)});
              out.push_back({"third j<b<i<a: t_ja t_ib", j, a, i, b, UElement(n)});
            } else if (b == i) {
              out.push_back({"third j<b=i<a: t_jb t_ia", j, b, i, a, both(s2) + one(j, a, s2)});
              out.push_back({"third j<b=i<a: t_ja t_ib", j, a, i, b, one(j, a, s)});
            } else if (j < i) {
              out.push_back({"third j<i<b<a: t_jb t_ia", j, b, i, a, both(s2) + cross(s2 * s)});
              out.push_back({"third j<i<b<a: t_ja t_ib", j, a, i, b, cross(s2)});
            } else {
              out.push_back({"third j=i<b<a: t_jb t_ia", j, b, i, a, both(s2 * v * v)});
              out.push_back({"third j=i<b<a: t_ja t_ib", j, a, i, b, cross(s2 * v)});
            }
          }
        }
  return out;
}

// Quadruples (i, a, j, b) of the fourth case j <= i < a <= b, where the proof
// reduces the relation to the earlier cases.
inline std::vector<std::vector<int>> fourth_case_quadruples(int n) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a)
      for (int j = 0; j < n; ++j)
        for (int b = 0; b < n; ++b)
          if (j <= i && i < a && a <= b) out.push_back({i, a, j, b});
  return out;
}

}  // namespace flagschur::testing
