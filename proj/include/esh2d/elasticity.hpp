#pragma once
// Major-symmetric (elasticity) specialization. Major symmetry forces v = 0
// and D1 = D2 in the irreducible decomposition, which collapses the ten
// invariants onto five independent ones: the two scalars, the squared norms
// of the shared deviator and of the harmonic part, and one coupling
// invariant.

#include <array>
#include <cstdint>

#include "esh2d/tensor.hpp"

namespace esh2d {

// Fourth-order tensor with minor symmetries plus the major symmetry
// C(i,j,k,l) == C(k,l,i,j); six independent components. Stored canonically
// (averaged over the full eight-element index symmetry group).
struct ElasticityTensor {
  Comps16 c{};

  double operator()(int i, int j, int k, int l) const {
    return c[flat_index(i, j, k, l)];
  }
  EshelbyTensor as_eshelby() const { return EshelbyTensor{c}; }
};

// Validates minor and major symmetry within tol and canonicalizes; throws
// SymmetryViolation with the worst deviation otherwise.
ElasticityTensor to_elasticity(const Tensor4& raw, double tol);

// Deterministic tensor with the six independent components drawn uniformly
// from [-1, 1].
ElasticityTensor random_elasticity(std::uint64_t seed);

// (lambda, mu, |E2|^2, |E4|^2, coupling) where E2 is the shared deviator and
// E4 the harmonic part; identical to the (J8, J9, J1, J3, J4) slots of the
// full invariant basis evaluated on C. Throws InternalSymmetryBreach if the
// decomposition fails to produce v = 0 and D1 = D2, which would indicate a
// decomposition bug rather than bad input.
std::array<double, 5> elasticity_invariants(const ElasticityTensor& c);

}  // namespace esh2d
