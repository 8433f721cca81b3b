#include "esh2d/harmonic.hpp"

#include <cmath>
#include <numbers>

namespace esh2d {

namespace {

constexpr double kHalfSqrt2 = std::numbers::sqrt2 / 2.0;
constexpr double kQuarterSqrt2 = std::numbers::sqrt2 / 4.0;

Harm4 harm4_from_pattern(const std::array<int, 16>& sign) {
  Harm4 h;
  for (int i = 0; i < 16; ++i) h.c[i] = kQuarterSqrt2 * sign[i];
  return h;
}

}  // namespace

const Dev2& dev2_basis_1() {
  static const Dev2 e{kHalfSqrt2, 0.0};
  return e;
}

const Dev2& dev2_basis_2() {
  static const Dev2 e{0.0, kHalfSqrt2};
  return e;
}

// Nonzero entries sit on the words with an even (basis 1) or odd (basis 2)
// number of twos; eight entries of magnitude sqrt2/4 each, unit Frobenius
// norm, mutually orthogonal.
const Harm4& harm4_basis_1() {
  static const Harm4 e = harm4_from_pattern(
      {+1, 0, 0, -1, 0, -1, -1, 0, 0, -1, -1, 0, -1, 0, 0, +1});
  return e;
}

const Harm4& harm4_basis_2() {
  static const Harm4 e = harm4_from_pattern(
      {0, +1, +1, 0, +1, 0, 0, -1, +1, 0, 0, -1, 0, -1, -1, 0});
  return e;
}

ComplexScalar h2_project(const Dev2& s) {
  return {dot(s, dev2_basis_1()), dot(s, dev2_basis_2())};
}

Dev2 h2_embed(ComplexScalar z) {
  return {z.real() * kHalfSqrt2, z.imag() * kHalfSqrt2};
}

ComplexScalar h4_project(const Harm4& t) {
  return {dot(t, harm4_basis_1()), dot(t, harm4_basis_2())};
}

Harm4 h4_embed(ComplexScalar z) {
  const Harm4& e1 = harm4_basis_1();
  const Harm4& e2 = harm4_basis_2();
  Harm4 h;
  // The two basis patterns have disjoint supports, so each component is a
  // single product.
  for (int i = 0; i < 16; ++i)
    h.c[i] = z.real() * e1.c[i] + z.imag() * e2.c[i];
  return h;
}

double harm4_residual(const Harm4& t) {
  const Harm4 p = h4_embed(h4_project(t));
  double s = 0.0;
  for (int i = 0; i < 16; ++i) {
    const double d = t.c[i] - p.c[i];
    s += d * d;
  }
  return std::sqrt(s);
}

bool harm4_is_valid(const Harm4& t) {
  return harm4_residual(t) <= 1e-10 * std::max(1.0, frobenius_norm(t));
}

ComplexRep complex_action(const GroupElement& g, const ComplexRep& r) {
  ComplexRep out = r;
  if (g.reflect) {
    out.z1 = std::conj(out.z1);
    out.z2 = std::conj(out.z2);
    out.z3 = std::conj(out.z3);
  }
  const ComplexScalar phase2 = std::polar(1.0, 2.0 * g.angle);
  const ComplexScalar phase4 = std::polar(1.0, 4.0 * g.angle);
  out.z1 *= phase2;
  out.z2 *= phase2;
  out.z3 *= phase4;
  return out;
}

}  // namespace esh2d
