#include "esh2d/tensor.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace esh2d {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Bits-to-double map for reproducible uniform draws in [-1, 1]; avoids the
// implementation-defined std::uniform_real_distribution.
double uniform_pm1(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
}
}  // namespace

double frobenius_norm(const Comps16& c) {
  double s = 0.0;
  for (double x : c) s += x * x;
  return std::sqrt(s);
}

double inf_norm(const Comps16& c) {
  double m = 0.0;
  for (double x : c) m = std::max(m, std::abs(x));
  return m;
}

double dot(const Comps16& a, const Comps16& b) {
  double s = 0.0;
  for (int i = 0; i < 16; ++i) s += a[i] * b[i];
  return s;
}

Tensor4 operator+(const Tensor4& a, const Tensor4& b) {
  Tensor4 r;
  for (int i = 0; i < 16; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

Tensor4 operator-(const Tensor4& a, const Tensor4& b) {
  Tensor4 r;
  for (int i = 0; i < 16; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

Tensor4 operator*(double s, const Tensor4& a) {
  Tensor4 r;
  for (int i = 0; i < 16; ++i) r.c[i] = s * a.c[i];
  return r;
}

EshelbyTensor symmetrize_minor(const Tensor4& raw) {
  EshelbyTensor m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          // Pairwise grouping keeps the average bitwise identical across all
          // four index images.
          m.c[flat_index(i, j, k, l)] =
              ((raw(i, j, k, l) + raw(j, i, k, l)) +
               (raw(i, j, l, k) + raw(j, i, l, k))) *
              0.25;
  return m;
}

EshelbyTensor validate_minor_symmetry(const Tensor4& raw, double tol) {
  double dev = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          dev = std::max(dev, std::abs(raw(i, j, k, l) - raw(j, i, k, l)));
          dev = std::max(dev, std::abs(raw(i, j, k, l) - raw(i, j, l, k)));
        }
  if (dev > tol)
    throw SymmetryViolation(
        "minor symmetry violated: max deviation " + std::to_string(dev) +
            " exceeds tolerance " + std::to_string(tol),
        dev);
  return symmetrize_minor(raw);
}

double frobenius_distance(const EshelbyTensor& a, const EshelbyTensor& b) {
  double s = 0.0;
  for (int i = 0; i < 16; ++i) {
    const double d = a.c[i] - b.c[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double dot(const Dev2& s, const Dev2& t) { return 2.0 * (s.a * t.a + s.b * t.b); }

double frobenius_norm(const Dev2& s) { return std::sqrt(dot(s, s)); }

double frobenius_distance(const Dev2& s, const Dev2& t) {
  const Dev2 d{s.a - t.a, s.b - t.b};
  return frobenius_norm(d);
}

double dot(const Harm4& a, const Harm4& b) { return dot(a.c, b.c); }

double frobenius_norm(const Harm4& a) { return frobenius_norm(a.c); }

double normalize_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;  // guards the rounding edge of the addition
  return t;
}

GroupElement GroupElement::rotation(double theta) {
  return {normalize_angle(theta), false};
}

std::array<double, 4> GroupElement::matrix() const {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  // rotation(angle) or rotation(angle) * diag(1, -1)
  if (!reflect) return {c, -s, s, c};
  return {c, s, s, -c};
}

GroupElement GroupElement::compose(const GroupElement& rhs) const {
  // R(a) S^p R(b) S^q = R(a + (-1)^p b) S^(p xor q)
  const double b = reflect ? -rhs.angle : rhs.angle;
  return {normalize_angle(angle + b), reflect != rhs.reflect};
}

GroupElement GroupElement::inverse() const {
  if (reflect) return *this;  // every reflection is an involution
  return {normalize_angle(-angle), false};
}

Tensor4 group_apply(const GroupElement& g, const Tensor4& t) {
  const auto q = g.matrix();
  Tensor4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          double s = 0.0;
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
              for (int p = 0; p < 2; ++p)
                for (int r = 0; r < 2; ++r)
                  s += q[2 * i + a] * q[2 * j + b] * q[2 * k + p] *
                       q[2 * l + r] * t(a, b, p, r);
          out(i, j, k, l) = s;
        }
  return out;
}

EshelbyTensor group_apply(const GroupElement& g, const EshelbyTensor& m) {
  return symmetrize_minor(group_apply(g, m.raw()));
}

Dev2 group_apply(const GroupElement& g, const Dev2& s) {
  const auto q = g.matrix();
  // S' = Q S Q^T; storing the two free entries keeps the result exactly
  // symmetric and traceless.
  double s00 = 0.0, s01 = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      s00 += q[a] * q[b] * s(a, b);
      s01 += q[a] * q[2 + b] * s(a, b);
    }
  return {s00, s01};
}

Harm4 group_apply(const GroupElement& g, const Harm4& t) {
  return Harm4{group_apply(g, Tensor4{t.c}).c};
}

EshelbyTensor random_eshelby(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Independent components indexed by (first pair, second pair); the pair of
  // indices (i,j) collapses to i+j in {0,1,2}.
  double p[3][3];
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) p[a][b] = uniform_pm1(rng);
  EshelbyTensor m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          m.c[flat_index(i, j, k, l)] = p[i + j][k + l];
  return m;
}

}  // namespace esh2d
