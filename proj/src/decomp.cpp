#include "esh2d/decomp.hpp"

namespace esh2d {

namespace {

constexpr double kDelta[2][2] = {{1.0, 0.0}, {0.0, 1.0}};
constexpr double kLevi[2][2] = {{0.0, 1.0}, {-1.0, 0.0}};

// The scalar and deviatoric words of the reconstruction; the harmonic part
// is added separately. Canonicalized so decompose and reconstruct see a
// bitwise identical tensor for identical part values.
Tensor4 scalar_dev_words(double lambda, double mu, double v, const Dev2& d1,
                         const Dev2& d2) {
  Tensor4 t;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          t(i, j, k, l) =
              lambda * kDelta[i][j] * kDelta[k][l] +
              mu * (kDelta[i][k] * kDelta[j][l] + kDelta[i][l] * kDelta[j][k]) +
              0.5 * v *
                  (kDelta[i][k] * kLevi[j][l] + kDelta[i][l] * kLevi[j][k] +
                   kDelta[j][k] * kLevi[i][l] + kDelta[j][l] * kLevi[i][k]) +
              kDelta[i][j] * d1(k, l) + kDelta[k][l] * d2(i, j);
  return symmetrize_minor(t).raw();
}

}  // namespace

Decomposition decompose(const EshelbyTensor& m) {
  double trace_pairs = 0.0;  // M_iikk
  double trace_cross = 0.0;  // M_ikik
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      trace_pairs += m(i, i, k, k);
      trace_cross += m(i, k, i, k);
    }

  Decomposition dec;
  dec.lambda = 0.375 * trace_pairs - 0.25 * trace_cross;
  dec.mu = 0.25 * trace_cross - 0.125 * trace_pairs;

  double skew = 0.0;  // eps_ij M_ikjk
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) skew += kLevi[i][j] * m(i, k, j, k);
  dec.v = 0.25 * skew;

  // D1_ab = (1/2) M_kkab - (1/4) M_kkll delta_ab, D2 with the pairs swapped.
  // Only the two free entries are kept, which makes both deviators exactly
  // symmetric and traceless; the harmonic remainder absorbs the round-off.
  dec.d1 = {0.5 * (m(0, 0, 0, 0) + m(1, 1, 0, 0)) - 0.25 * trace_pairs,
            0.5 * (m(0, 0, 0, 1) + m(1, 1, 0, 1))};
  dec.d2 = {0.5 * (m(0, 0, 0, 0) + m(0, 0, 1, 1)) - 0.25 * trace_pairs,
            0.5 * (m(0, 1, 0, 0) + m(0, 1, 1, 1))};

  const Tensor4 words =
      scalar_dev_words(dec.lambda, dec.mu, dec.v, dec.d1, dec.d2);
  for (int i = 0; i < 16; ++i) dec.d.c[i] = m.c[i] - words.c[i];
  return dec;
}

EshelbyTensor reconstruct(const Decomposition& dec) {
  const Tensor4 words =
      scalar_dev_words(dec.lambda, dec.mu, dec.v, dec.d1, dec.d2);
  EshelbyTensor m;
  for (int i = 0; i < 16; ++i) m.c[i] = words.c[i] + dec.d.c[i];
  return m;
}

ComplexRep complex_rep(const Decomposition& dec) {
  return {h2_project(dec.d1), h2_project(dec.d2), h4_project(dec.d)};
}

}  // namespace esh2d
