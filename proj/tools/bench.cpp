// Benchmark of the OpenMP kernels against their serial references.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include "wignerlab/qft.hpp"
#include "wignerlab/scan.hpp"
#include "wignerlab/spin.hpp"
#include "wignerlab/wigner.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double time_ms(F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  body();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const std::string& name, double parallel_ms, double serial_ms) {
  std::cout << name << ": parallel " << parallel_ms << " ms, serial "
            << serial_ms << " ms, speedup " << serial_ms / parallel_ms
            << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t scale = argc > 1 ? std::stoull(argv[1]) : 1;

#ifdef _OPENMP
  std::cout << "OpenMP enabled, max threads " << omp_get_max_threads()
            << "\n";
#else
  std::cout << "OpenMP disabled; both columns run serially\n";
#endif

  {
    const std::size_t n = 2'000'000 * scale;
    wignerlab::FuzzSummary par, ser;
    const double tp = time_ms([&] { par = wignerlab::fuzz_lhv(n, 11); });
    const double ts =
        time_ms([&] { ser = wignerlab::fuzz_lhv_reference(n, 11); });
    row("fuzz_lhv (" + std::to_string(n) + " trials)", tp, ts);
    if (par.max_margin != ser.max_margin || par.worst_trial != ser.worst_trial)
      std::cout << "  WARNING: parallel/serial mismatch\n";
  }

  {
    const std::size_t samples = 20'000'000 * scale;
    wignerlab::qft::RegionFraction par{}, ser{};
    const double tp = time_ms([&] {
      par = wignerlab::qft::violation_region_fraction(2.0, samples, 11);
    });
    const double ts = time_ms([&] {
      ser = wignerlab::qft::violation_region_fraction_reference(2.0, samples,
                                                                11);
    });
    row("violation_region_fraction (" + std::to_string(samples) + " samples)",
        tp, ts);
    if (par.violated != ser.violated)
      std::cout << "  WARNING: parallel/serial mismatch\n";
  }

  {
    const std::size_t steps = 40 * scale;
    const wignerlab::scan::Evaluator target =
        [](std::span<const double> p) {
          return wignerlab::spin::model_inequality({p[0], p[1], p[2], p[3]});
        };
    const std::vector<wignerlab::scan::AxisRange> ranges{
        {"theta_ba", 0.0, 6.28, steps},
        {"theta_ca", 0.0, 6.28, steps},
        {"theta_bc", 0.0, 6.28, steps},
        {"omega_t", 0.0, 3.14, steps}};
    double best = -1e300;
    const double tp = time_ms([&] {
      wignerlab::scan::grid_scan_stream(
          target, ranges, [&](const wignerlab::scan::ScanRecord& r) {
            if (r.margin > best) best = r.margin;
          });
    });
    std::cout << "grid_scan (" << steps << "^4 points): " << tp
              << " ms, best margin " << best << "\n";
  }

  return 0;
}
