#include "esh2d/diophantine.hpp"

#include <algorithm>
#include <stdexcept>

namespace esh2d {

namespace {

bool dominates(const DiophantineSolution& w, const DiophantineSolution& u) {
  return u.d <= w.d && u.e <= w.e && u.f <= w.f && u.g <= w.g && u.j <= w.j &&
         u.k <= w.k;
}

// All nontrivial feasible solutions with component sum <= bound.
std::vector<DiophantineSolution> all_solutions(int bound) {
  std::vector<DiophantineSolution> out;
  for (int d = 0; d <= bound; ++d)
    for (int e = 0; d + e <= bound; ++e)
      for (int f = 0; d + e + f <= bound; ++f)
        for (int g = 0; d + e + f + g <= bound; ++g)
          for (int j = 0; d + e + f + g + j <= bound; ++j)
            for (int k = 0; d + e + f + g + j + k <= bound; ++k) {
              const DiophantineSolution w{d, e, f, g, j, k};
              if (w.sum() > 0 && w.satisfies_equation()) out.push_back(w);
            }
  return out;
}

bool sum_lex_less(const DiophantineSolution& a, const DiophantineSolution& b) {
  if (a.sum() != b.sum()) return a.sum() < b.sum();
  return a.as_array() < b.as_array();
}

}  // namespace

DiophantineSolution operator-(const DiophantineSolution& a,
                              const DiophantineSolution& b) {
  return {a.d - b.d, a.e - b.e, a.f - b.f, a.g - b.g, a.j - b.j, a.k - b.k};
}

const std::array<DiophantineSolution, 11>& irreducible_generators() {
  static const std::array<DiophantineSolution, 11> w = {{
      {1, 1, 0, 0, 0, 0},  // w1
      {0, 0, 1, 1, 0, 0},  // w2
      {0, 0, 0, 0, 1, 1},  // w3
      {2, 0, 0, 0, 0, 1},  // w4
      {0, 0, 2, 0, 0, 1},  // w5
      {1, 0, 0, 1, 0, 0},  // w6
      {1, 0, 1, 0, 0, 1},  // w7
      {0, 1, 1, 0, 0, 0},  // w8
      {0, 1, 0, 1, 1, 0},  // w9
      {0, 2, 0, 0, 1, 0},  // w10
      {0, 0, 0, 2, 1, 0},  // w11
  }};
  return w;
}

std::vector<DiophantineSolution> enumerate_irreducible(int bound) {
  if (bound < 2)
    throw std::invalid_argument("enumerate_irreducible: bound must be >= 2");
  const std::vector<DiophantineSolution> sols = all_solutions(bound);
  std::vector<DiophantineSolution> out;
  for (const auto& w : sols) {
    // Any dominated nontrivial solution u gives the split w = u + (w - u);
    // the difference is automatically a nonnegative nontrivial solution.
    bool reducible = false;
    for (const auto& u : sols) {
      if (u != w && dominates(w, u)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(w);
  }
  std::sort(out.begin(), out.end(), sum_lex_less);
  return out;
}

std::vector<DiophantineSolution> reduce_solution(const DiophantineSolution& w0) {
  if (!w0.satisfies_equation())
    throw InfeasibleSolution(
        "reduce_solution: tuple does not satisfy the degree equation");

  const auto& gen = irreducible_generators();
  std::vector<DiophantineSolution> parts;
  DiophantineSolution w = w0;
  auto take = [&](int idx) {  // 0-based generator index
    w = w - gen[idx];
    parts.push_back(gen[idx]);
  };

  // Every step subtracts a generator and strictly decreases the component
  // sum, so this terminates.
  while (w.sum() > 0) {
    if (w.j == w.k) {
      if (w.d == w.e) {  // then also f == g
        if (w.d > 0)
          take(0);  // w1
        else if (w.f > 0)
          take(1);  // w2
        else
          take(2);  // w3; here j == k >= 1
      } else if (w.d > w.e) {
        take(5);  // w6: d - e = g - f > 0 forces d, g >= 1
      } else {
        take(7);  // w8: e, f >= 1
      }
    } else if (w.j > w.k) {
      // e + g >= 2 + d + f; lowest generator index first.
      if (w.e >= 1 && w.g >= 1)
        take(8);  // w9
      else if (w.e >= 2)
        take(9);  // w10
      else
        take(10);  // w11: g >= 2
    } else {
      // Mirror branch (j < k): the conjugates of w9, w10, w11 are w7, w4,
      // w5; tried in ascending original index so d + f >= 2 is consumed by
      // w4 first, then w5, then w7.
      if (w.d >= 2)
        take(3);  // w4
      else if (w.f >= 2)
        take(4);  // w5
      else
        take(6);  // w7: d, f >= 1
    }
  }
  return parts;
}

namespace {

bool dominates4(const ElasticitySolution& w, const ElasticitySolution& u) {
  return u.c <= w.c && u.d <= w.d && u.e <= w.e && u.f <= w.f;
}

}  // namespace

std::vector<ElasticitySolution> elasticity_irreducible() {
  constexpr int bound = 6;
  std::vector<ElasticitySolution> sols;
  for (int c = 0; c <= bound; ++c)
    for (int d = 0; c + d <= bound; ++d)
      for (int e = 0; c + d + e <= bound; ++e)
        for (int f = 0; c + d + e + f <= bound; ++f) {
          const ElasticitySolution w{c, d, e, f};
          if (w.sum() > 0 && w.satisfies_equation()) sols.push_back(w);
        }
  std::vector<ElasticitySolution> out;
  for (const auto& w : sols) {
    bool reducible = false;
    for (const auto& u : sols) {
      if (u != w && dominates4(w, u)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(w);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return a.as_array() < b.as_array();
  });
  return out;
}

}  // namespace esh2d
