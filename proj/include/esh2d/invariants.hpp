#pragma once
// The ten scalar invariants of a decomposed tensor, six derived invariants
// with their polynomial and trigonometric forms, separating witness
// configurations, and quartic contraction identities used as cross-checks.
//
// With z1, z2, z3 the complex coordinates of the deviatoric parts:
//
//   J1 = |z1|^2            J2 = |z2|^2            J3 = |z3|^2
//   J4 = Re(z1^2 conj(z3)) J5 = Re(z2^2 conj(z3))
//   J6 = Re(z1 conj(z2))   J7 = Re(z1 z2 conj(z3))
//   J8 = lambda            J9 = mu                J10 = v
//
// As raw index contractions, J1 = D1:D1, J2 = D2:D2, J3 = D::D and
// J6 = D1:D2 hold verbatim, while the three invariants coupling a deviator
// to the harmonic part carry a normalization:
//
//   J4 = sqrt2 * D1_ij D_ijkl D1_kl      (and analogously J5, J7)
//
// because contracting the unit harmonic tensors against the unit deviators
// yields 1/sqrt2, not 1. The sqrt2 makes the contraction route and the
// complex route agree exactly, so every trigonometric identity below holds
// with coefficient one.
//
// J1..J9 are invariant under the full orthogonal group; J10 is invariant
// under rotations and changes sign under reflections.

#include <array>
#include <utility>

#include "esh2d/decomp.hpp"

namespace esh2d {

struct InvariantVector {
  std::array<double, 10> j{};  // j[0] = J1, ..., j[9] = J10

  double j1() const { return j[0]; }
  double j2() const { return j[1]; }
  double j3() const { return j[2]; }
  double j4() const { return j[3]; }
  double j5() const { return j[4]; }
  double j6() const { return j[5]; }
  double j7() const { return j[6]; }
  double j8() const { return j[7]; }
  double j9() const { return j[8]; }
  double j10() const { return j[9]; }

  // Polynomial degree of each invariant in the tensor components.
  static const std::array<int, 10>& degrees();
};

// Contraction route (the normalized index contractions above).
InvariantVector invariant_basis(const Decomposition& dec);

// Complex route; agrees with invariant_basis on matched inputs.
InvariantVector invariant_basis_complex(const ComplexRep& rep, double lambda,
                                        double mu, double v);

// J11..J16, each a fixed polynomial in J1..J7:
//   J11 = J6^2 J3 - J7^2        J12 = J1 J7 - J4 J6
//   J13 = J1 J3 J6 - J4 J7      J14 = J5 J6 - J2 J7
//   J15 = J2 J3 J6 - J5 J7      J16 = (J1 J5 - J2 J4) / 2
struct DerivedInvariants {
  std::array<double, 6> j{};  // j[0] = J11, ..., j[5] = J16

  double j11() const { return j[0]; }
  double j12() const { return j[1]; }
  double j13() const { return j[2]; }
  double j14() const { return j[3]; }
  double j15() const { return j[4]; }
  double j16() const { return j[5]; }
};

DerivedInvariants derived_invariants(const InvariantVector& iv);

// Free polar coordinates for the deviatoric sector: z1 = H exp(i theta1),
// z2 = L exp(i theta2), z3 = K exp(i theta3).
struct PolarConfig {
  double H = 0.0;
  double L = 0.0;
  double K = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;
};

Decomposition to_decomposition(const PolarConfig& cfg, double lambda = 0.0,
                               double mu = 0.0, double v = 0.0);

// Trigonometric forms of J11..J16 evaluated directly on polar coordinates,
// e.g. J11 = H^2 L^2 K^2 sin(2 theta1 - theta3) sin(2 theta2 - theta3).
std::array<double, 6> derived_trig_forms(const PolarConfig& cfg);

// (polynomial form) - (trigonometric form) for J11..J16, where the
// polynomial form goes through the full contraction pipeline.
std::array<double, 6> syzygy_residuals(const PolarConfig& cfg);

// Residuals of the three quartic contraction identities
//   D1:D:D:D1 = (1/2) J1 J3
//   D2:D:D:D2 = (1/2) J2 J3
//   D1:D:D:D2 = (1/2) J3 J6
// with A:D:D:B = A_ij D_ijkl D_klpq B_pq. The 1/2 coefficients are pinned
// numerically by the brute-force contraction oracle in the test suite.
std::array<double, 3> contraction_identity_residuals(const EshelbyTensor& m);

// Two polar configurations that agree on every invariant except the selected
// one (s in 1..7) and differ there by at least 1/2. Throws std::out_of_range
// for s outside 1..7.
std::pair<PolarConfig, PolarConfig> irreducibility_witness(int s);

}  // namespace esh2d
