#pragma once
// Fixed-size fourth-order tensor algebra in two dimensions and the action of
// the planar orthogonal group.
//
// Storage is flat with offset(i,j,k,l) = 8i + 4j + 2k + l, indices 0-based in
// {0,1}. In the 1-based index convention used throughout the docs the offset
// reads 8(i-1) + 4(j-1) + 2(k-1) + (l-1).

#include <array>
#include <cstdint>

#include "esh2d/errors.hpp"

namespace esh2d {

using Comps16 = std::array<double, 16>;

constexpr int flat_index(int i, int j, int k, int l) {
  return 8 * i + 4 * j + 2 * k + l;
}

double frobenius_norm(const Comps16& c);
double inf_norm(const Comps16& c);
double dot(const Comps16& a, const Comps16& b);

// Unconstrained fourth-order tensor; the raw input type for validation.
struct Tensor4 {
  Comps16 c{};

  double operator()(int i, int j, int k, int l) const {
    return c[flat_index(i, j, k, l)];
  }
  double& operator()(int i, int j, int k, int l) {
    return c[flat_index(i, j, k, l)];
  }
};

Tensor4 operator+(const Tensor4& a, const Tensor4& b);
Tensor4 operator-(const Tensor4& a, const Tensor4& b);
Tensor4 operator*(double s, const Tensor4& a);

// Minor-symmetric fourth-order tensor, canonically stored so that
// M(i,j,k,l) == M(j,i,k,l) == M(i,j,l,k) holds bit for bit. Nine of the
// sixteen entries are independent.
struct EshelbyTensor {
  Comps16 c{};

  double operator()(int i, int j, int k, int l) const {
    return c[flat_index(i, j, k, l)];
  }
  Tensor4 raw() const { return Tensor4{c}; }
};

// Canonical form: the average over the four minor-symmetry index images.
EshelbyTensor symmetrize_minor(const Tensor4& raw);

// Accepts raw if no minor-symmetry deviation exceeds tol and returns the
// canonical symmetrization; throws SymmetryViolation otherwise.
EshelbyTensor validate_minor_symmetry(const Tensor4& raw, double tol);

double frobenius_distance(const EshelbyTensor& a, const EshelbyTensor& b);

// Symmetric traceless 2x2 matrix. Only the two free entries are stored, so
// S12 == S21 and S11 + S22 == 0 hold exactly.
struct Dev2 {
  double a = 0.0;  // S11 entry; S22 is -a
  double b = 0.0;  // S12 == S21 entry

  double operator()(int i, int j) const {
    return i == 0 ? (j == 0 ? a : b) : (j == 0 ? b : -a);
  }
};

double dot(const Dev2& s, const Dev2& t);
double frobenius_norm(const Dev2& s);
double frobenius_distance(const Dev2& s, const Dev2& t);

// Fourth-order harmonic tensor (totally symmetric and traceless). Stored as
// raw components; membership of the two-dimensional harmonic span is checked
// with harm4_residual() from harmonic.hpp.
struct Harm4 {
  Comps16 c{};

  double operator()(int i, int j, int k, int l) const {
    return c[flat_index(i, j, k, l)];
  }
};

double dot(const Harm4& a, const Harm4& b);
double frobenius_norm(const Harm4& a);

// Element of O(2) in normal form: a rotation by `angle` composed after an
// optional reflection (the reflection fixes e1 and negates e2). Determinant
// is +1 iff reflect is false. angle is kept in [0, 2*pi).
struct GroupElement {
  double angle = 0.0;
  bool reflect = false;

  static GroupElement identity() { return {}; }
  static GroupElement rotation(double theta);
  static GroupElement reflection() { return {0.0, true}; }

  // Row-major 2x2 matrix of the element.
  std::array<double, 4> matrix() const;

  // Group product: (*this) after rhs, the element mapping x to this(rhs(x)).
  GroupElement compose(const GroupElement& rhs) const;
  GroupElement inverse() const;
};

// Reduces an angle into [0, 2*pi).
double normalize_angle(double theta);

// Componentwise action Q_ia Q_jb Q_kc Q_ld T_abcd.
Tensor4 group_apply(const GroupElement& g, const Tensor4& t);

// Same action followed by re-canonicalization; the action preserves minor
// symmetry exactly and averaging removes the round-off asymmetry.
EshelbyTensor group_apply(const GroupElement& g, const EshelbyTensor& m);

Dev2 group_apply(const GroupElement& g, const Dev2& s);
Harm4 group_apply(const GroupElement& g, const Harm4& t);

// Deterministic tensor with the nine independent components drawn uniformly
// from [-1, 1]. A fixed seed always produces the same tensor.
EshelbyTensor random_eshelby(std::uint64_t seed);

}  // namespace esh2d
