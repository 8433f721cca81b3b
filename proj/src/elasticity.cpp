#include "esh2d/elasticity.hpp"

#include <cmath>
#include <random>
#include <string>

#include "esh2d/decomp.hpp"
#include "esh2d/invariants.hpp"

namespace esh2d {

ElasticityTensor to_elasticity(const Tensor4& raw, double tol) {
  double dev = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          dev = std::max(dev, std::abs(raw(i, j, k, l) - raw(j, i, k, l)));
          dev = std::max(dev, std::abs(raw(i, j, k, l) - raw(i, j, l, k)));
          dev = std::max(dev, std::abs(raw(i, j, k, l) - raw(k, l, i, j)));
        }
  if (dev > tol)
    throw SymmetryViolation(
        "elasticity symmetry violated: max deviation " + std::to_string(dev) +
            " exceeds tolerance " + std::to_string(tol),
        dev);

  // Average over the eight-element index symmetry group; the pairwise
  // grouping keeps the result bitwise identical across all images.
  ElasticityTensor out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out.c[flat_index(i, j, k, l)] =
              (((raw(i, j, k, l) + raw(j, i, k, l)) +
                (raw(i, j, l, k) + raw(j, i, l, k))) +
               ((raw(k, l, i, j) + raw(l, k, i, j)) +
                (raw(k, l, j, i) + raw(l, k, j, i)))) /
              8.0;
  return out;
}

ElasticityTensor random_elasticity(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto next = [&] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  };
  // Symmetric 3x3 pair matrix: six independent draws.
  double p[3][3];
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) p[a][b] = p[b][a] = next();
  ElasticityTensor out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out.c[flat_index(i, j, k, l)] = p[i + j][k + l];
  return out;
}

std::array<double, 5> elasticity_invariants(const ElasticityTensor& c) {
  const Decomposition dec = decompose(c.as_eshelby());

  // Major symmetry forces the skew scalar to vanish and the two deviators to
  // coincide; anything else means decompose itself misbehaved.
  const double scale = std::max(1.0, frobenius_norm(c.c));
  if (std::abs(dec.v) > 1e-10 * scale ||
      frobenius_distance(dec.d1, dec.d2) > 1e-10 * scale)
    throw InternalSymmetryBreach(
        "elasticity_invariants: decomposition of a major-symmetric tensor "
        "produced v != 0 or d1 != d2");

  const InvariantVector iv = invariant_basis(dec);
  return {iv.j8(), iv.j9(), iv.j1(), iv.j3(), iv.j4()};
}

}  // namespace esh2d
