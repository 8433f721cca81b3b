// Compares the serial reference paths against the OpenMP paths and verifies
// on the way that both produce identical results.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "esh2d/batch.hpp"
#include "esh2d/orbit.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double median_ms(F&& body, int reps) {
  std::vector<double> times;
  times.reserve(reps);
  for (int r = 0; r < reps; ++r) {
    const auto start = Clock::now();
    body();
    const auto stop = Clock::now();
    times.push_back(
        std::chrono::duration<double, std::milli>(stop - start).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

void print_row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s %10.2f ms %10.2f ms %8.2fx\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eshelby2d-bench: serial reference vs OpenMP kernels"};
  int tensors = 100000;
  int grid = 100000;
  int reps = 5;
  app.add_option("--tensors", tensors, "batch size");
  app.add_option("--grid", grid, "alignment grid size");
  app.add_option("--reps", reps, "repetitions (median reported)");
  CLI11_PARSE(app, argc, argv);

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads: %d, tensors: %d, grid: %d, reps: %d\n\n", threads,
              tensors, grid, reps);
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  std::vector<esh2d::EshelbyTensor> batch(tensors);
  for (int i = 0; i < tensors; ++i)
    batch[i] = esh2d::random_eshelby(static_cast<std::uint64_t>(i));

  int mismatches = 0;

  {
    std::vector<esh2d::InvariantVector> serial_out, parallel_out;
    const double ts = median_ms(
        [&] { serial_out = esh2d::batch_invariants(batch, false); }, reps);
    const double tp = median_ms(
        [&] { parallel_out = esh2d::batch_invariants(batch, true); }, reps);
    for (int i = 0; i < tensors; ++i)
      if (serial_out[i].j != parallel_out[i].j) ++mismatches;
    print_row("batch invariants", ts, tp);
  }

  {
    double serial_err = 0.0, parallel_err = 0.0;
    const double ts = median_ms(
        [&] { serial_err = esh2d::batch_max_roundtrip_error(batch, false); },
        reps);
    const double tp = median_ms(
        [&] { parallel_err = esh2d::batch_max_roundtrip_error(batch, true); },
        reps);
    if (serial_err != parallel_err) ++mismatches;
    print_row("batch round trip", ts, tp);
  }

  {
    const esh2d::EshelbyTensor m1 = esh2d::random_eshelby(2024);
    const esh2d::EshelbyTensor m2 =
        esh2d::group_apply(esh2d::GroupElement::rotation(0.83), m1);
    esh2d::AlignmentResult rs{}, rp{};
    const double ts = median_ms(
        [&] { rs = esh2d::brute_force_align_serial(m1, m2, grid); }, reps);
    const double tp =
        median_ms([&] { rp = esh2d::brute_force_align(m1, m2, grid); }, reps);
    if (rs.found != rp.found || rs.residual != rp.residual ||
        rs.element.angle != rp.element.angle ||
        rs.element.reflect != rp.element.reflect)
      ++mismatches;
    print_row("brute-force alignment", ts, tp);
  }

  if (mismatches) {
    std::fprintf(stderr, "\n%d kernel(s) disagreed between paths\n",
                 mismatches);
    return 1;
  }
  std::printf("\nall kernels agree between paths\n");
  return 0;
}
