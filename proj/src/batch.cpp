#include "esh2d/batch.hpp"

#include <algorithm>
#include <cmath>

namespace esh2d {

std::vector<InvariantVector> batch_invariants(
    const std::vector<EshelbyTensor>& tensors, bool parallel) {
  std::vector<InvariantVector> out(tensors.size());
  const int n = static_cast<int>(tensors.size());
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) out[i] = invariant_basis(decompose(tensors[i]));
  } else {
    for (int i = 0; i < n; ++i) out[i] = invariant_basis(decompose(tensors[i]));
  }
  return out;
}

double batch_max_roundtrip_error(const std::vector<EshelbyTensor>& tensors,
                                 bool parallel) {
  const int n = static_cast<int>(tensors.size());
  std::vector<double> err(tensors.size());
  auto eval = [&](int i) {
    const EshelbyTensor back = reconstruct(decompose(tensors[i]));
    double worst = 0.0;
    for (int s = 0; s < 16; ++s)
      worst = std::max(worst, std::abs(back.c[s] - tensors[i].c[s]));
    return worst / std::max(1.0, inf_norm(tensors[i].c));
  };
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) err[i] = eval(i);
  } else {
    for (int i = 0; i < n; ++i) err[i] = eval(i);
  }
  // Serial reduction keeps the result independent of the thread count.
  double worst = 0.0;
  for (double e : err) worst = std::max(worst, e);
  return worst;
}

}  // namespace esh2d
