#pragma once
// Nonnegative integer solutions of the phase-balance equation
//
//   (d - e) + (f - g) + 2 (j - k) = 0
//
// governing which monomials z1^d conj(z1)^e z2^f conj(z2)^g z3^j conj(z3)^k
// are rotation invariant. A solution is irreducible when it is not the sum of
// two nonnegative nontrivial solutions. There are exactly eleven irreducible
// solutions; every feasible solution reduces to a multiset of them.
//
// The four-component variant c - d + 2 (e - f) = 0 plays the same role for
// major-symmetric (elasticity) tensors and has exactly four irreducible
// solutions.

#include <array>
#include <compare>
#include <vector>

#include "esh2d/errors.hpp"

namespace esh2d {

struct DiophantineSolution {
  int d = 0, e = 0, f = 0, g = 0, j = 0, k = 0;

  int sum() const { return d + e + f + g + j + k; }
  bool satisfies_equation() const {
    return d >= 0 && e >= 0 && f >= 0 && g >= 0 && j >= 0 && k >= 0 &&
           (d - e) + (f - g) + 2 * (j - k) == 0;
  }
  // Swap of each exponent with its conjugate partner: (e, d, g, f, k, j).
  DiophantineSolution conjugated() const { return {e, d, g, f, k, j}; }

  std::array<int, 6> as_array() const { return {d, e, f, g, j, k}; }

  friend auto operator<=>(const DiophantineSolution&,
                          const DiophantineSolution&) = default;
};

DiophantineSolution operator-(const DiophantineSolution& a,
                              const DiophantineSolution& b);

// The eleven irreducible generators w1..w11 in their conventional order.
const std::array<DiophantineSolution, 11>& irreducible_generators();

// All irreducible solutions with component sum <= bound (bound >= 2),
// determined by exhaustive search: a candidate is reducible iff it
// componentwise dominates some other nontrivial solution. Sorted by
// (component sum, lexicographic).
std::vector<DiophantineSolution> enumerate_irreducible(int bound);

// Splits a feasible solution into generators whose componentwise sum equals
// the input (the multiset is not unique; the tie-breaks are fixed so the
// result is deterministic). Throws InfeasibleSolution if the input does not
// satisfy the equation.
std::vector<DiophantineSolution> reduce_solution(const DiophantineSolution& w);

struct ElasticitySolution {
  int c = 0, d = 0, e = 0, f = 0;

  int sum() const { return c + d + e + f; }
  bool satisfies_equation() const {
    return c >= 0 && d >= 0 && e >= 0 && f >= 0 && (c - d) + 2 * (e - f) == 0;
  }
  std::array<int, 4> as_array() const { return {c, d, e, f}; }

  friend auto operator<=>(const ElasticitySolution&,
                          const ElasticitySolution&) = default;
};

// The four irreducible solutions of the elasticity variant, verified by the
// same exhaustive search with bound 6.
std::vector<ElasticitySolution> elasticity_irreducible();

}  // namespace esh2d
