#include "doctest.h"
#include "esh2d/decomp.hpp"
#include "esh2d/elasticity.hpp"
#include "esh2d/invariants.hpp"
#include "helpers.hpp"

#include <cmath>

using namespace esh2d;
using testutil::close_abs;
using testutil::Rng;

namespace {

Tensor4 isotropic(double lambda0, double mu0) {
  Tensor4 t;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          t(i, j, k, l) = lambda0 * (i == j) * (k == l) +
                          mu0 * ((i == k) * (j == l) + (i == l) * (j == k));
  return t;
}

}  // namespace

TEST_CASE("isotropic and zero tensors validate") {
  CHECK_NOTHROW(to_elasticity(isotropic(2.0, 3.0), 0.0));
  CHECK_NOTHROW(to_elasticity(Tensor4{}, 0.0));
}

TEST_CASE("major asymmetry is rejected") {
  // minor-symmetric but d1 != d2, hence not major-symmetric
  Decomposition dec;
  dec.d1 = h2_embed({1.0, 0.0});
  dec.d2 = h2_embed({0.0, 1.0});
  const EshelbyTensor m = reconstruct(dec);
  CHECK_THROWS_AS(to_elasticity(m.raw(), 1e-10), SymmetryViolation);
}

TEST_CASE("isotropic invariants") {
  const auto inv = elasticity_invariants(to_elasticity(isotropic(2.0, 3.0), 0.0));
  CHECK(close_abs(inv[0], 2.0, 1e-14));
  CHECK(close_abs(inv[1], 3.0, 1e-14));
  CHECK(close_abs(inv[2], 0.0, 1e-14));
  CHECK(close_abs(inv[3], 0.0, 1e-14));
  CHECK(close_abs(inv[4], 0.0, 1e-14));
}

TEST_CASE("pure harmonic part has unit second invariant") {
  const Harm4& e1 = harm4_basis_1();
  const auto inv = elasticity_invariants(to_elasticity(Tensor4{e1.c}, 1e-12));
  CHECK(close_abs(inv[0], 0.0, 1e-14));
  CHECK(close_abs(inv[1], 0.0, 1e-14));
  CHECK(close_abs(inv[2], 0.0, 1e-14));
  CHECK(close_abs(inv[3], 1.0, 1e-14));
  CHECK(close_abs(inv[4], 0.0, 1e-14));
}

TEST_CASE("major symmetry forces v = 0 and d1 = d2") {
  Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const ElasticityTensor c = random_elasticity(rng.engine());
    const Decomposition dec = decompose(c.as_eshelby());
    CHECK(std::abs(dec.v) <= 1e-12);
    CHECK(frobenius_distance(dec.d1, dec.d2) <= 1e-12);
  }
}

TEST_CASE("five invariants equal the matching basis slots") {
  Rng rng(62);
  for (int trial = 0; trial < 200; ++trial) {
    const ElasticityTensor c = random_elasticity(rng.engine());
    const auto inv = elasticity_invariants(c);
    const InvariantVector iv = invariant_basis(decompose(c.as_eshelby()));
    CHECK(close_abs(inv[0], iv.j8(), 1e-12));
    CHECK(close_abs(inv[1], iv.j9(), 1e-12));
    CHECK(close_abs(inv[2], iv.j1(), 1e-12));
    CHECK(close_abs(inv[2], iv.j2(), 1e-12));
    CHECK(close_abs(inv[2], iv.j6(), 1e-12));
    CHECK(close_abs(inv[3], iv.j3(), 1e-12));
    CHECK(close_abs(inv[4], iv.j4(), 1e-12));
    CHECK(close_abs(inv[4], iv.j5(), 1e-12));
    CHECK(close_abs(inv[4], iv.j7(), 1e-12));
  }
}

TEST_CASE("invariants are stable under the full group") {
  const ElasticityTensor c = random_elasticity(63);
  const auto base = elasticity_invariants(c);
  Rng rng(64);
  for (int trial = 0; trial < 100; ++trial) {
    const GroupElement g = testutil::random_element(rng);
    const EshelbyTensor moved = group_apply(g, c.as_eshelby());
    const ElasticityTensor cm = to_elasticity(moved.raw(), 1e-10);
    const auto inv = elasticity_invariants(cm);
    for (int s = 0; s < 5; ++s)
      CHECK(close_abs(inv[s], base[s], 1e-10 * (1.0 + std::abs(base[s]))));
  }
}

TEST_CASE("six degrees of freedom round trip") {
  Rng rng(65);
  for (int trial = 0; trial < 100; ++trial) {
    const ElasticityTensor c = random_elasticity(rng.engine());
    const EshelbyTensor back = reconstruct(decompose(c.as_eshelby()));
    CHECK(frobenius_distance(back, c.as_eshelby()) <= 1e-13);
  }
}

TEST_CASE("the internal guard trips on a corrupted elasticity tensor") {
  // Bypasses to_elasticity: minor-symmetric but d1 != d2, so the struct
  // violates its own major-symmetry contract.
  Decomposition dec;
  dec.d1 = h2_embed({1.0, 0.0});
  const ElasticityTensor corrupted{reconstruct(dec).c};
  CHECK_THROWS_AS(elasticity_invariants(corrupted), InternalSymmetryBreach);
}

TEST_CASE("random_elasticity is canonical and deterministic") {
  const ElasticityTensor a = random_elasticity(5);
  const ElasticityTensor b = random_elasticity(5);
  CHECK(a.c == b.c);
  CHECK_NOTHROW(to_elasticity(Tensor4{a.c}, 0.0));
}
