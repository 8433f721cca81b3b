#include "esh2d/invariants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace esh2d {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kPi = std::numbers::pi;

// A_ij D_ijkl B_kl
double triple_contract(const Dev2& a, const Harm4& d, const Dev2& b) {
  double s = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) s += a(i, j) * d(i, j, k, l) * b(k, l);
  return s;
}

// A_ij D_ijkl D_klpq B_pq
double quad_contract(const Dev2& a, const Harm4& d, const Dev2& b) {
  double s = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q)
              s += a(i, j) * d(i, j, k, l) * d(k, l, p, q) * b(p, q);
  return s;
}

}  // namespace

const std::array<int, 10>& InvariantVector::degrees() {
  static const std::array<int, 10> deg = {2, 2, 2, 3, 3, 2, 3, 1, 1, 1};
  return deg;
}

InvariantVector invariant_basis(const Decomposition& dec) {
  InvariantVector iv;
  iv.j[0] = dot(dec.d1, dec.d1);
  iv.j[1] = dot(dec.d2, dec.d2);
  iv.j[2] = dot(dec.d, dec.d);
  iv.j[3] = kSqrt2 * triple_contract(dec.d1, dec.d, dec.d1);
  iv.j[4] = kSqrt2 * triple_contract(dec.d2, dec.d, dec.d2);
  iv.j[5] = dot(dec.d1, dec.d2);
  iv.j[6] = kSqrt2 * triple_contract(dec.d1, dec.d, dec.d2);
  iv.j[7] = dec.lambda;
  iv.j[8] = dec.mu;
  iv.j[9] = dec.v;
  return iv;
}

InvariantVector invariant_basis_complex(const ComplexRep& rep, double lambda,
                                        double mu, double v) {
  const ComplexScalar z1 = rep.z1, z2 = rep.z2, z3 = rep.z3;
  InvariantVector iv;
  iv.j[0] = std::norm(z1);
  iv.j[1] = std::norm(z2);
  iv.j[2] = std::norm(z3);
  iv.j[3] = (z1 * z1 * std::conj(z3)).real();
  iv.j[4] = (z2 * z2 * std::conj(z3)).real();
  iv.j[5] = (z1 * std::conj(z2)).real();
  iv.j[6] = (z1 * z2 * std::conj(z3)).real();
  iv.j[7] = lambda;
  iv.j[8] = mu;
  iv.j[9] = v;
  return iv;
}

DerivedInvariants derived_invariants(const InvariantVector& iv) {
  const double j1 = iv.j1(), j2 = iv.j2(), j3 = iv.j3(), j4 = iv.j4(),
               j5 = iv.j5(), j6 = iv.j6(), j7 = iv.j7();
  DerivedInvariants d;
  d.j[0] = j6 * j6 * j3 - j7 * j7;
  d.j[1] = j1 * j7 - j4 * j6;
  d.j[2] = j1 * j3 * j6 - j4 * j7;
  d.j[3] = j5 * j6 - j2 * j7;
  d.j[4] = j2 * j3 * j6 - j5 * j7;
  d.j[5] = 0.5 * (j1 * j5 - j2 * j4);
  return d;
}

Decomposition to_decomposition(const PolarConfig& cfg, double lambda,
                               double mu, double v) {
  Decomposition dec;
  dec.lambda = lambda;
  dec.mu = mu;
  dec.v = v;
  dec.d1 = h2_embed(std::polar(cfg.H, cfg.theta1));
  dec.d2 = h2_embed(std::polar(cfg.L, cfg.theta2));
  dec.d = h4_embed(std::polar(cfg.K, cfg.theta3));
  return dec;
}

std::array<double, 6> derived_trig_forms(const PolarConfig& cfg) {
  const double H = cfg.H, L = cfg.L, K = cfg.K;
  const double t1 = cfg.theta1, t2 = cfg.theta2, t3 = cfg.theta3;
  const double s13 = std::sin(2.0 * t1 - t3);
  const double s23 = std::sin(2.0 * t2 - t3);
  const double s12 = std::sin(t1 - t2);
  const double s123 = std::sin(t1 + t2 - t3);
  return {
      H * H * L * L * K * K * s13 * s23,  // J11
      H * H * H * L * K * s13 * s12,      // J12
      H * H * H * L * K * K * s13 * s123, // J13
      H * L * L * L * K * s23 * s12,      // J14
      H * L * L * L * K * K * s23 * s123, // J15
      H * H * L * L * K * s12 * s123,     // J16
  };
}

std::array<double, 6> syzygy_residuals(const PolarConfig& cfg) {
  const DerivedInvariants poly =
      derived_invariants(invariant_basis(to_decomposition(cfg)));
  const std::array<double, 6> trig = derived_trig_forms(cfg);
  std::array<double, 6> r{};
  for (int i = 0; i < 6; ++i) r[i] = poly.j[i] - trig[i];
  return r;
}

std::array<double, 3> contraction_identity_residuals(const EshelbyTensor& m) {
  const Decomposition dec = decompose(m);
  const InvariantVector iv = invariant_basis(dec);
  return {
      quad_contract(dec.d1, dec.d, dec.d1) - 0.5 * iv.j1() * iv.j3(),
      quad_contract(dec.d2, dec.d, dec.d2) - 0.5 * iv.j2() * iv.j3(),
      quad_contract(dec.d1, dec.d, dec.d2) - 0.5 * iv.j3() * iv.j6(),
  };
}

std::pair<PolarConfig, PolarConfig> irreducibility_witness(int s) {
  switch (s) {
    case 1:  // only H differs; every other invariant is zero
      return {PolarConfig{1, 0, 0, 0, 0, 0}, PolarConfig{2, 0, 0, 0, 0, 0}};
    case 2:
      return {PolarConfig{0, 1, 0, 0, 0, 0}, PolarConfig{0, 2, 0, 0, 0, 0}};
    case 3:
      return {PolarConfig{0, 0, 1, 0, 0, 0}, PolarConfig{0, 0, 2, 0, 0, 0}};
    case 4:  // L = 0 kills J5, J6, J7; flipping theta3 flips J4 = cos(-theta3)
      return {PolarConfig{1, 0, 1, 0, 0, 0}, PolarConfig{1, 0, 1, 0, 0, kPi}};
    case 5:
      return {PolarConfig{0, 1, 1, 0, 0, 0}, PolarConfig{0, 1, 1, 0, 0, kPi}};
    case 6:  // K = 0 kills J3, J4, J5, J7; J6 = cos(theta1 - theta2)
      return {PolarConfig{1, 1, 0, 0, 0, 0},
              PolarConfig{1, 1, 0, kPi / 2, 0, 0}};
    case 7:  // both configurations give J4 = sqrt2/2, J5 = -sqrt2/2, J6 = 0;
             // J7 flips between +sqrt2/2 and -sqrt2/2
      return {PolarConfig{1, 1, 1, kPi / 2, 0, 3 * kPi / 4},
              PolarConfig{1, 1, 1, 3 * kPi / 2, 0, 11 * kPi / 4}};
    default:
      throw std::out_of_range("irreducibility_witness: s must be in 1..7");
  }
}

}  // namespace esh2d
