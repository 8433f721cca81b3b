#pragma once
// Orthonormal bases of the order-2 and order-4 harmonic spaces, the complex
// coordinate charts on them, and the induced group action on coordinates:
// a rotation by theta multiplies the order-2 coordinates by exp(2i*theta) and
// the order-4 coordinate by exp(4i*theta); the reflection conjugates all
// three.

#include <complex>

#include "esh2d/tensor.hpp"

namespace esh2d {

using ComplexScalar = std::complex<double>;

// (sqrt2/2)(e1 x e1 - e2 x e2) and (sqrt2/2)(e1 x e2 + e2 x e1).
const Dev2& dev2_basis_1();
const Dev2& dev2_basis_2();

// The even and odd unit harmonic fourth-order tensors.
const Harm4& harm4_basis_1();
const Harm4& harm4_basis_2();

// Coordinates (T . B1) + i (T . B2), full contraction against the basis pair.
ComplexScalar h2_project(const Dev2& s);
Dev2 h2_embed(ComplexScalar z);
ComplexScalar h4_project(const Harm4& t);
Harm4 h4_embed(ComplexScalar z);

// Frobenius distance from t to its projection onto the harmonic span.
double harm4_residual(const Harm4& t);

// residual <= 1e-10 * max(1, |t|)
bool harm4_is_valid(const Harm4& t);

// The three deviatoric parts of a decomposition in complex coordinates.
// Arguments are reported in (-pi, pi] (two-argument arctangent convention).
struct ComplexRep {
  ComplexScalar z1{};  // order-2 part coupled through delta x D1
  ComplexScalar z2{};  // order-2 part coupled through D2 x delta
  ComplexScalar z3{};  // order-4 harmonic part

  double H() const { return std::abs(z1); }
  double L() const { return std::abs(z2); }
  double K() const { return std::abs(z3); }
  double theta1() const { return std::arg(z1); }
  double theta2() const { return std::arg(z2); }
  double theta3() const { return std::arg(z3); }
};

// Action of g on coordinates: conjugate first when g contains the reflection,
// then apply the rotation phases. This matches the rotation-after-reflection
// normal form of GroupElement.
ComplexRep complex_action(const GroupElement& g, const ComplexRep& r);

}  // namespace esh2d
