#pragma once
// Bulk kernels over arrays of tensors. Each kernel has an OpenMP-parallel
// path and a serial reference path; per-element results are written to
// independent slots and reduced serially, so both paths are bit-identical.

#include <vector>

#include "esh2d/decomp.hpp"
#include "esh2d/invariants.hpp"
#include "esh2d/tensor.hpp"

namespace esh2d {

std::vector<InvariantVector> batch_invariants(
    const std::vector<EshelbyTensor>& tensors, bool parallel);

// max over tensors of |reconstruct(decompose(M)) - M|_inf / max(1, |M|_inf).
double batch_max_roundtrip_error(const std::vector<EshelbyTensor>& tensors,
                                 bool parallel);

}  // namespace esh2d
