#pragma once
// Orbit equivalence of minor-symmetric tensors under SO(2) and O(2):
// analytic alignment recovery from the complex coordinates, an invariant
// fast filter, a brute-force grid-scan oracle (OpenMP-parallel with a serial
// reference path), and an empirical audit of how each invariant transforms.
//
// All rotation weights in the decomposition are even, so a rotation by
// theta + pi acts exactly like a rotation by theta; recovered angles are
// therefore only defined modulo pi.

#include <array>
#include <cstdint>

#include "esh2d/decomp.hpp"
#include "esh2d/invariants.hpp"
#include "esh2d/tensor.hpp"

namespace esh2d {

enum class Group { so2, o2 };

struct AlignmentResult {
  bool found = false;
  GroupElement element{};  // meaningful when found
  double residual = 0.0;   // Frobenius distance after alignment
};

// Decides whether some g in the chosen group maps m1 onto m2 within Frobenius
// distance tol. Candidate angles come from the complex coordinates: for the
// first slot that is nonzero on both sides (preferring z3, then z1, then z2)
// the phase equation gives `weight` candidate angles; each candidate is
// verified by full tensor comparison, falling through the slot ladder and
// finally the identity. The reflected branch conjugates m1 first. Not-found
// is a result, not an error.
AlignmentResult align(const EshelbyTensor& m1, const EshelbyTensor& m2,
                      Group group, double tol);

struct EquivalenceVerdict {
  bool equivalent = false;
  AlignmentResult alignment{};
};

// Fast path: compare invariant vectors first (J1..J9 with combined tolerance
// |a-b| <= atol + rtol*max(|a|,|b|); J10 directly for SO2, up to sign for
// O2); if the filter passes, confirm with align. The filter never rejects a
// truly equivalent pair.
EquivalenceVerdict check_equivalence(const EshelbyTensor& m1,
                                     const EshelbyTensor& m2, Group group,
                                     double tol = 1e-8, double rtol = 1e-8,
                                     double atol = 1e-10);

bool equivalent(const EshelbyTensor& m1, const EshelbyTensor& m2, Group group,
                double tol = 1e-8, double rtol = 1e-8, double atol = 1e-10);

// Minimizes |g * m1 - m2| over the angle grid {2 pi t / grid_size} crossed
// with {no-reflect, reflect}, then refines the best angle by golden-section
// search. Grid points are evaluated in parallel when OpenMP is enabled; the
// reduction is serial with ties broken by smallest angle, no-reflect before
// reflect, so the result does not depend on the thread count. grid_size >= 8.
AlignmentResult brute_force_align(const EshelbyTensor& m1,
                                  const EshelbyTensor& m2, int grid_size,
                                  double tol = 1e-8, Group group = Group::o2);

// Serial reference path; bit-identical to brute_force_align.
AlignmentResult brute_force_align_serial(const EshelbyTensor& m1,
                                         const EshelbyTensor& m2,
                                         int grid_size, double tol = 1e-8,
                                         Group group = Group::o2);

enum class ReflectionClass { invariant, sign_flip, neither };

const char* to_string(ReflectionClass c);

// Empirical transformation behavior of the ten invariants: the largest
// relative deviation |J(Q(theta) m) - J(m)| / (1 + |J(m)|) over sampled
// rotations, and the classification under the reflection (invariant when the
// values agree to 1e-8 * (1 + |J|), sign-flip when they agree up to sign,
// neither otherwise).
struct AuditReport {
  std::array<double, 10> rotation_max_deviation{};
  std::array<ReflectionClass, 10> reflection_class{};
  int samples = 0;
  std::uint64_t seed = 0;
};

AuditReport audit_action(const EshelbyTensor& m, int samples,
                         std::uint64_t seed);

}  // namespace esh2d
