#include "doctest.h"
#include "esh2d/invariants.hpp"
#include "helpers.hpp"

#include <cmath>
#include <numbers>

using namespace esh2d;
using testutil::close_abs;
using testutil::Rng;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfSqrt2 = std::numbers::sqrt2 / 2.0;

// Independent brute-force oracle: A_ij D_ijkl D_klpq B_pq by literal loops
// over the full component arrays.
double quad_oracle(const Dev2& a, const Harm4& d, const Dev2& b) {
  double first[2][2] = {};  // A:D
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) first[k][l] += a(i, j) * d(i, j, k, l);
  double out = 0.0;
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l)
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
          out += first[k][l] * d(k, l, p, q) * b(p, q);
  return out;
}

}  // namespace

TEST_CASE("all invariants vanish on the zero decomposition") {
  const InvariantVector iv = invariant_basis(Decomposition{});
  for (double x : iv.j) CHECK(x == 0.0);
  const DerivedInvariants der = derived_invariants(iv);
  for (double x : der.j) CHECK(x == 0.0);
}

TEST_CASE("degree metadata") {
  const auto& deg = InvariantVector::degrees();
  CHECK(deg == std::array<int, 10>{2, 2, 2, 3, 3, 2, 3, 1, 1, 1});
}

// Pinned two-point configuration: H = L = K = 1, theta = (pi/2, 0, 3pi/4)
// gives J4 = sqrt2/2, J5 = -sqrt2/2, J6 = 0, J7 = sqrt2/2; the companion
// angles (3pi/2, 0, 11pi/4) flip only J7.
TEST_CASE("separating configuration values") {
  const PolarConfig cfg{1, 1, 1, kPi / 2, 0, 3 * kPi / 4};
  const InvariantVector iv = invariant_basis(to_decomposition(cfg));
  CHECK(close_abs(iv.j1(), 1.0, 1e-14));
  CHECK(close_abs(iv.j2(), 1.0, 1e-14));
  CHECK(close_abs(iv.j3(), 1.0, 1e-14));
  CHECK(close_abs(iv.j4(), kHalfSqrt2, 1e-14));
  CHECK(close_abs(iv.j5(), -kHalfSqrt2, 1e-14));
  CHECK(close_abs(iv.j6(), 0.0, 1e-14));
  CHECK(close_abs(iv.j7(), kHalfSqrt2, 1e-14));

  const PolarConfig other{1, 1, 1, 3 * kPi / 2, 0, 11 * kPi / 4};
  const InvariantVector ov = invariant_basis(to_decomposition(other));
  for (int s = 0; s < 6; ++s) CHECK(close_abs(ov.j[s], iv.j[s], 1e-12));
  CHECK(close_abs(ov.j7(), -kHalfSqrt2, 1e-14));
}

TEST_CASE("complex route on fixed coordinates") {
  {
    const InvariantVector iv =
        invariant_basis_complex({{1, 0}, {0, 1}, {0, 0}}, 0, 0, 0);
    CHECK(iv.j1() == 1.0);
    CHECK(iv.j2() == 1.0);
    CHECK(iv.j3() == 0.0);
    CHECK(iv.j4() == 0.0);
    CHECK(iv.j5() == 0.0);
    CHECK(iv.j6() == 0.0);  // Re(1 * conj(i)) = 0
    CHECK(iv.j7() == 0.0);
  }
  {
    const InvariantVector iv =
        invariant_basis_complex({{1, 1}, {0, 0}, {0, 2}}, 0, 0, 0);
    CHECK(iv.j1() == 2.0);
    CHECK(iv.j3() == 4.0);
    CHECK(iv.j4() == 4.0);  // Re((1+i)^2 * conj(2i)) = Re(2i * -2i) = 4
    CHECK(iv.j2() == 0.0);
    CHECK(iv.j5() == 0.0);
    CHECK(iv.j6() == 0.0);
    CHECK(iv.j7() == 0.0);
  }
  {
    const InvariantVector iv = invariant_basis_complex({}, 0, 0, 0);
    for (double x : iv.j) CHECK(x == 0.0);
  }
}

TEST_CASE("contraction route equals the complex route") {
  Rng rng(91);
  for (int trial = 0; trial < 1000; ++trial) {
    const Decomposition dec = testutil::random_decomposition(rng);
    const InvariantVector a = invariant_basis(dec);
    const InvariantVector b = invariant_basis_complex(
        complex_rep(dec), dec.lambda, dec.mu, dec.v);
    for (int s = 0; s < 10; ++s)
      CHECK(close_abs(a.j[s], b.j[s],
                      1e-12 * std::max(1.0, std::abs(a.j[s]))));
  }
}

TEST_CASE("nonnegative squared-norm invariants") {
  Rng rng(92);
  for (int trial = 0; trial < 200; ++trial) {
    const InvariantVector iv =
        invariant_basis(testutil::random_decomposition(rng));
    CHECK(iv.j1() >= 0.0);
    CHECK(iv.j2() >= 0.0);
    CHECK(iv.j3() >= 0.0);
  }
}

TEST_CASE("rotation invariance and reflection behavior") {
  Rng rng(93);
  for (int trial = 0; trial < 100; ++trial) {
    const EshelbyTensor m = testutil::random_tensor(rng);
    const InvariantVector base = invariant_basis(decompose(m));

    const GroupElement rot = GroupElement::rotation(rng.angle());
    const InvariantVector rotated =
        invariant_basis(decompose(group_apply(rot, m)));
    for (int s = 0; s < 10; ++s)
      CHECK(close_abs(rotated.j[s], base.j[s],
                      1e-10 * (1.0 + std::abs(base.j[s]))));

    const InvariantVector mirrored =
        invariant_basis(decompose(group_apply(GroupElement::reflection(), m)));
    for (int s = 0; s < 9; ++s)
      CHECK(close_abs(mirrored.j[s], base.j[s],
                      1e-10 * (1.0 + std::abs(base.j[s]))));
    CHECK(close_abs(mirrored.j10(), -base.j10(),
                    1e-10 * (1.0 + std::abs(base.j10()))));
  }
}

TEST_CASE("trigonometric forms of the coupled invariants") {
  Rng rng(94);
  for (int trial = 0; trial < 200; ++trial) {
    const PolarConfig cfg = testutil::random_polar(rng);
    const InvariantVector iv = invariant_basis(to_decomposition(cfg));
    const double H = cfg.H, L = cfg.L, K = cfg.K;
    CHECK(close_abs(iv.j4(), H * H * K * std::cos(2 * cfg.theta1 - cfg.theta3),
                    1e-12));
    CHECK(close_abs(iv.j5(), L * L * K * std::cos(2 * cfg.theta2 - cfg.theta3),
                    1e-12));
    CHECK(close_abs(iv.j6(), H * L * std::cos(cfg.theta1 - cfg.theta2),
                    1e-12));
    CHECK(close_abs(iv.j7(),
                    H * K * L * std::cos(cfg.theta1 + cfg.theta2 - cfg.theta3),
                    1e-12));
  }
}

TEST_CASE("derived invariants on sparse inputs") {
  InvariantVector iv;
  iv.j[5] = 1.0;  // J6
  iv.j[2] = 4.0;  // J3
  iv.j[6] = 1.0;  // J7
  const DerivedInvariants der = derived_invariants(iv);
  CHECK(der.j11() == 3.0);  // J6^2 J3 - J7^2
  CHECK(der.j12() == 0.0);
  CHECK(der.j13() == 0.0);
  CHECK(der.j14() == 0.0);
  CHECK(der.j15() == 0.0);
  CHECK(der.j16() == 0.0);
}

TEST_CASE("syzygy residuals vanish") {
  {  // every derived invariant carries a factor K
    const std::array<double, 6> r = syzygy_residuals({1.0, 0.7, 0.0, 1, 2, 3});
    for (double x : r) CHECK(close_abs(x, 0.0, 1e-15));
    const auto trig = derived_trig_forms({1.0, 0.7, 0.0, 1, 2, 3});
    for (double x : trig) CHECK(x == 0.0);
  }
  {  // all angles zero: every sine vanishes
    const PolarConfig cfg{1, 1, 1, 0, 0, 0};
    const auto trig = derived_trig_forms(cfg);
    for (double x : trig) CHECK(x == 0.0);
    const auto r = syzygy_residuals(cfg);
    for (double x : r) CHECK(close_abs(x, 0.0, 1e-14));
  }

  Rng rng(95);
  for (int trial = 0; trial < 1000; ++trial) {
    const PolarConfig cfg = testutil::random_polar(rng);
    const auto r = syzygy_residuals(cfg);
    const double h2 = cfg.H * cfg.H, l2 = cfg.L * cfg.L, k2 = cfg.K * cfg.K;
    const double tol = 1e-10 * (1.0 + h2 * l2 * k2);
    for (double x : r) CHECK(std::abs(x) <= tol);
  }
}

// The quartic identities hold with coefficient 1/2 on all three lines. The
// coefficient is pinned here by regression against the brute-force
// contraction: fitting c in A:D:D:A = c * J1 J3 over random inputs must give
// 1/2 to machine precision.
TEST_CASE("quartic contraction identity coefficients") {
  Rng rng(96);
  double fit_num = 0.0, fit_den = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Decomposition dec = testutil::random_decomposition(rng);
    const InvariantVector iv = invariant_basis(dec);
    fit_num += quad_oracle(dec.d1, dec.d, dec.d1) * iv.j1() * iv.j3();
    fit_den += iv.j1() * iv.j3() * iv.j1() * iv.j3();
  }
  CHECK(close_abs(fit_num / fit_den, 0.5, 1e-12));

  for (int trial = 0; trial < 200; ++trial) {
    const Decomposition dec = testutil::random_decomposition(rng);
    const InvariantVector iv = invariant_basis(dec);
    const double tol = 1e-12 * (1.0 + std::abs(iv.j3()) *
                                          (iv.j1() + iv.j2() + 1.0));
    CHECK(close_abs(quad_oracle(dec.d1, dec.d, dec.d1),
                    0.5 * iv.j1() * iv.j3(), tol));
    CHECK(close_abs(quad_oracle(dec.d2, dec.d, dec.d2),
                    0.5 * iv.j2() * iv.j3(), tol));
    CHECK(close_abs(quad_oracle(dec.d1, dec.d, dec.d2),
                    0.5 * iv.j3() * iv.j6(), tol));
  }
}

TEST_CASE("contraction identity residuals") {
  {
    const auto r = contraction_identity_residuals(EshelbyTensor{});
    for (double x : r) CHECK(x == 0.0);
  }
  {  // no harmonic part: every term vanishes
    Rng rng(97);
    Decomposition dec = testutil::random_decomposition(rng);
    dec.d = Harm4{};
    const auto r = contraction_identity_residuals(reconstruct(dec));
    for (double x : r) CHECK(close_abs(x, 0.0, 1e-13));
  }
  Rng rng(98);
  for (int trial = 0; trial < 1000; ++trial) {
    const EshelbyTensor m = testutil::random_tensor(rng);
    const double norm = frobenius_norm(m.c);
    const double tol = 1e-10 * (1.0 + norm * norm * norm * norm);
    for (double x : contraction_identity_residuals(m))
      CHECK(std::abs(x) <= tol);
  }
}

TEST_CASE("witness pairs separate exactly one invariant") {
  for (int s = 1; s <= 7; ++s) {
    const auto [cfg_a, cfg_b] = irreducibility_witness(s);
    const InvariantVector a = invariant_basis(to_decomposition(cfg_a));
    const InvariantVector b = invariant_basis(to_decomposition(cfg_b));
    for (int t = 0; t < 10; ++t) {
      if (t == s - 1)
        CHECK(std::abs(a.j[t] - b.j[t]) >= 0.5);
      else
        CHECK(close_abs(a.j[t], b.j[t], 1e-12));
    }
  }
  CHECK_THROWS_AS(irreducibility_witness(0), std::out_of_range);
  CHECK_THROWS_AS(irreducibility_witness(8), std::out_of_range);
}

TEST_CASE("specific witness values") {
  {
    const auto [a, b] = irreducibility_witness(1);
    const InvariantVector ia = invariant_basis(to_decomposition(a));
    const InvariantVector ib = invariant_basis(to_decomposition(b));
    CHECK(close_abs(ia.j1(), 1.0, 1e-14));
    CHECK(close_abs(ib.j1(), 4.0, 1e-14));
    for (int t = 1; t < 7; ++t) {
      CHECK(close_abs(ia.j[t], 0.0, 1e-14));
      CHECK(close_abs(ib.j[t], 0.0, 1e-14));
    }
  }
  {
    const auto [a, b] = irreducibility_witness(6);
    const InvariantVector ia = invariant_basis(to_decomposition(a));
    const InvariantVector ib = invariant_basis(to_decomposition(b));
    CHECK(close_abs(ia.j6(), 1.0, 1e-14));
    CHECK(close_abs(ib.j6(), 0.0, 1e-14));
  }
  {
    const auto [a, b] = irreducibility_witness(7);
    const InvariantVector ia = invariant_basis(to_decomposition(a));
    const InvariantVector ib = invariant_basis(to_decomposition(b));
    CHECK(close_abs(ia.j7(), kHalfSqrt2, 1e-14));
    CHECK(close_abs(ib.j7(), -kHalfSqrt2, 1e-14));
  }
}
