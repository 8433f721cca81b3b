#pragma once
// Orthogonal irreducible decomposition of a minor-symmetric tensor into three
// scalars (lambda, mu, v), two second-order deviators (d1, d2) and a
// fourth-order harmonic remainder (d), with the exact reconstruction
//
//   M_ijkl = lambda d_ij d_kl
//          + mu (d_ik d_jl + d_il d_jk)
//          + (v/2) (d_ik e_jl + d_il e_jk + d_jk e_il + d_jl e_ik)
//          + d_ij D1_kl + d_kl D2_ij + D_ijkl
//
// where d is the Kronecker delta and e the two-dimensional Levi-Civita
// symbol. The six parts are mutually orthogonal and carry 1+1+1+2+2+2 = 9
// degrees of freedom, exactly the independent components of the input, so
// decompose/reconstruct is a linear bijection.

#include "esh2d/harmonic.hpp"
#include "esh2d/tensor.hpp"

namespace esh2d {

struct Decomposition {
  double lambda = 0.0;
  double mu = 0.0;
  double v = 0.0;  // rotation invariant; changes sign under reflections
  Dev2 d1{};
  Dev2 d2{};
  Harm4 d{};
};

// Extracts the six parts. The scalars and deviators come from closed-form
// trace formulas; the harmonic part is the exact remainder after removing the
// first five parts, which keeps the round trip exact. No tolerance is
// involved: this is plain linear algebra.
Decomposition decompose(const EshelbyTensor& m);

EshelbyTensor reconstruct(const Decomposition& dec);

// Complex coordinates of (d1, d2, d).
ComplexRep complex_rep(const Decomposition& dec);

}  // namespace esh2d
