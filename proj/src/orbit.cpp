#include "esh2d/orbit.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace esh2d {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAuditTol = 1e-8;

double alignment_residual(const GroupElement& g, const EshelbyTensor& m1,
                          const EshelbyTensor& m2) {
  return frobenius_distance(group_apply(g, m1), m2);
}

// Finite candidate set from the phase equations z_b = exp(i w theta) z_a.
// Slots are consulted in the fixed ladder z3, z1, z2; a slot contributes only
// when it is safely nonzero on both sides. The identity angle is always
// appended so the scalars-only (fully degenerate) case still gets verified.
std::vector<double> candidate_angles(const ComplexRep& ra, const ComplexRep& rb,
                                     double thresh) {
  std::vector<double> cands;
  const struct {
    ComplexScalar a, b;
    int weight;
  } ladder[3] = {{ra.z3, rb.z3, 4}, {ra.z1, rb.z1, 2}, {ra.z2, rb.z2, 2}};
  for (const auto& slot : ladder) {
    if (std::abs(slot.a) > thresh && std::abs(slot.b) > thresh) {
      const double base = std::arg(slot.b / slot.a) / slot.weight;
      for (int n = 0; n < slot.weight; ++n)
        cands.push_back(normalize_angle(base + kTwoPi * n / slot.weight));
    }
  }
  cands.push_back(0.0);
  return cands;
}

template <typename F>
std::pair<double, double> golden_section_min(F&& f, double lo, double hi,
                                             int iters) {
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < iters; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

void grid_scan(const EshelbyTensor& m1, const EshelbyTensor& m2, int grid,
               bool reflect, std::vector<double>& out, bool parallel) {
  out.resize(grid);
  const double step = kTwoPi / grid;
  auto eval = [&](int t) {
    return alignment_residual(GroupElement{normalize_angle(t * step), reflect},
                              m1, m2);
  };
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int t = 0; t < grid; ++t) out[t] = eval(t);
  } else {
    for (int t = 0; t < grid; ++t) out[t] = eval(t);
  }
}

AlignmentResult brute_force_impl(const EshelbyTensor& m1,
                                 const EshelbyTensor& m2, int grid, double tol,
                                 Group group, bool parallel) {
  if (grid < 8)
    throw std::invalid_argument("brute_force_align: grid_size must be >= 8");

  std::vector<double> plain, mirrored;
  grid_scan(m1, m2, grid, false, plain, parallel);
  if (group == Group::o2) grid_scan(m1, m2, grid, true, mirrored, parallel);

  // Serial reduction; strict improvement keeps the smallest angle on ties and
  // prefers the no-reflect branch.
  int best_t = 0;
  bool best_reflect = false;
  double best = plain[0];
  for (int t = 1; t < grid; ++t)
    if (plain[t] < best) {
      best = plain[t];
      best_t = t;
    }
  if (group == Group::o2)
    for (int t = 0; t < grid; ++t)
      if (mirrored[t] < best) {
        best = mirrored[t];
        best_t = t;
        best_reflect = true;
      }

  const double step = kTwoPi / grid;
  const bool reflect = best_reflect;
  auto f = [&](double theta) {
    return alignment_residual(GroupElement{normalize_angle(theta), reflect},
                              m1, m2);
  };
  const auto [theta_ref, f_ref] =
      golden_section_min(f, best_t * step - step, best_t * step + step, 100);

  double angle = normalize_angle(best_t * step);
  if (f_ref < best) {
    best = f_ref;
    angle = normalize_angle(theta_ref);
  }
  return {best <= tol, GroupElement{angle, reflect}, best};
}

}  // namespace

AlignmentResult align(const EshelbyTensor& m1, const EshelbyTensor& m2,
                      Group group, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("align: tol must be > 0");

  const Decomposition dec2 = decompose(m2);
  const ComplexRep rep2 = complex_rep(dec2);
  // Slots below this magnitude contribute at most a tol-sized mismatch and
  // are treated as degenerate.
  const double thresh = tol / 8.0;

  double best_residual = frobenius_distance(m1, m2);
  for (int branch = 0; branch < 2; ++branch) {
    const bool reflect = branch == 1;
    if (reflect && group == Group::so2) break;

    const EshelbyTensor m1b =
        reflect ? group_apply(GroupElement::reflection(), m1) : m1;
    const Decomposition dec1 = decompose(m1b);
    if (std::abs(dec1.lambda - dec2.lambda) > tol ||
        std::abs(dec1.mu - dec2.mu) > tol || std::abs(dec1.v - dec2.v) > tol)
      continue;

    for (double theta : candidate_angles(complex_rep(dec1), rep2, thresh)) {
      const GroupElement g{normalize_angle(theta), reflect};
      const double r = alignment_residual(g, m1, m2);
      if (r <= tol) return {true, g, r};
      best_residual = std::min(best_residual, r);
    }
  }
  return {false, GroupElement::identity(), best_residual};
}

EquivalenceVerdict check_equivalence(const EshelbyTensor& m1,
                                     const EshelbyTensor& m2, Group group,
                                     double tol, double rtol, double atol) {
  const InvariantVector iv1 = invariant_basis(decompose(m1));
  const InvariantVector iv2 = invariant_basis(decompose(m2));
  auto close = [&](double x, double y) {
    return std::abs(x - y) <= atol + rtol * std::max(std::abs(x), std::abs(y));
  };

  bool filter_ok = true;
  for (int s = 0; s < 9 && filter_ok; ++s)
    filter_ok = close(iv1.j[s], iv2.j[s]);
  if (filter_ok) {
    // The decomposed skew scalar is a pseudo-scalar: reflections negate it,
    // so O2 equivalence must accept a sign flip.
    filter_ok = group == Group::so2
                    ? close(iv1.j10(), iv2.j10())
                    : close(iv1.j10(), iv2.j10()) ||
                          close(iv1.j10(), -iv2.j10());
  }
  if (!filter_ok)
    return {false,
            {false, GroupElement::identity(), frobenius_distance(m1, m2)}};

  const AlignmentResult a = align(m1, m2, group, tol);
  return {a.found, a};
}

bool equivalent(const EshelbyTensor& m1, const EshelbyTensor& m2, Group group,
                double tol, double rtol, double atol) {
  return check_equivalence(m1, m2, group, tol, rtol, atol).equivalent;
}

AlignmentResult brute_force_align(const EshelbyTensor& m1,
                                  const EshelbyTensor& m2, int grid_size,
                                  double tol, Group group) {
  return brute_force_impl(m1, m2, grid_size, tol, group, /*parallel=*/true);
}

AlignmentResult brute_force_align_serial(const EshelbyTensor& m1,
                                         const EshelbyTensor& m2,
                                         int grid_size, double tol,
                                         Group group) {
  return brute_force_impl(m1, m2, grid_size, tol, group, /*parallel=*/false);
}

const char* to_string(ReflectionClass c) {
  switch (c) {
    case ReflectionClass::invariant:
      return "invariant";
    case ReflectionClass::sign_flip:
      return "sign-flip";
    default:
      return "neither";
  }
}

AuditReport audit_action(const EshelbyTensor& m, int samples,
                         std::uint64_t seed) {
  if (samples < 1)
    throw std::invalid_argument("audit_action: samples must be >= 1");

  AuditReport report;
  report.samples = samples;
  report.seed = seed;

  const InvariantVector base = invariant_basis(decompose(m));

  std::mt19937_64 rng(seed);
  std::vector<double> angles(samples);
  for (int i = 0; i < samples; ++i)
    angles[i] = static_cast<double>(rng() >> 11) * 0x1.0p-53 * kTwoPi;

  std::vector<InvariantVector> rotated(samples);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < samples; ++i)
    rotated[i] = invariant_basis(
        decompose(group_apply(GroupElement::rotation(angles[i]), m)));

  for (int s = 0; s < 10; ++s) {
    double dev = 0.0;
    for (int i = 0; i < samples; ++i)
      dev = std::max(dev, std::abs(rotated[i].j[s] - base.j[s]) /
                              (1.0 + std::abs(base.j[s])));
    report.rotation_max_deviation[s] = dev;
  }

  const InvariantVector mirrored =
      invariant_basis(decompose(group_apply(GroupElement::reflection(), m)));
  for (int s = 0; s < 10; ++s) {
    const double scale = 1.0 + std::abs(base.j[s]);
    if (std::abs(mirrored.j[s] - base.j[s]) <= kAuditTol * scale)
      report.reflection_class[s] = ReflectionClass::invariant;
    else if (std::abs(mirrored.j[s] + base.j[s]) <= kAuditTol * scale)
      report.reflection_class[s] = ReflectionClass::sign_flip;
    else
      report.reflection_class[s] = ReflectionClass::neither;
  }
  return report;
}

}  // namespace esh2d
