#include "wignerlab/scan.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wignerlab::scan {

namespace {

void check_ranges(const std::vector<AxisRange>& ranges) {
  if (ranges.empty() || ranges.size() > max_axes)
    throw std::invalid_argument("scan: need 1.." +
                                std::to_string(max_axes) + " axes");
  std::size_t total = 1;
  for (const auto& r : ranges) {
    if (!(r.lo < r.hi))
      throw std::invalid_argument("scan: axis '" + r.name +
                                  "' must have lo < hi");
    if (r.steps < 2)
      throw std::invalid_argument("scan: axis '" + r.name +
                                  "' needs at least 2 steps");
    if (total > max_grid_points / r.steps)
      throw std::invalid_argument("scan: lattice exceeds the point guard");
    total *= r.steps;
  }
}

std::size_t total_points(const std::vector<AxisRange>& ranges) {
  std::size_t total = 1;
  for (const auto& r : ranges) total *= r.steps;
  return total;
}

void decode_point(const std::vector<AxisRange>& ranges, std::size_t flat,
                  std::vector<double>& out) {
  // Row-major: the last axis varies fastest.
  out.resize(ranges.size());
  for (std::size_t ax = ranges.size(); ax-- > 0;) {
    const AxisRange& r = ranges[ax];
    const std::size_t idx = flat % r.steps;
    flat /= r.steps;
    out[ax] = r.lo + (r.hi - r.lo) * static_cast<double>(idx) /
                         static_cast<double>(r.steps - 1);
  }
}

[[noreturn]] void rethrow_with_point(const std::exception& e,
                                     const std::vector<AxisRange>& ranges,
                                     const std::vector<double>& point) {
  std::ostringstream msg;
  msg << "scan: evaluator failed at (";
  for (std::size_t i = 0; i < point.size(); ++i)
    msg << (i ? ", " : "") << ranges[i].name << "=" << point[i];
  msg << "): " << e.what();
  throw std::runtime_error(msg.str());
}

}  // namespace

void grid_scan_stream(const Evaluator& target,
                      const std::vector<AxisRange>& ranges,
                      const std::function<void(const ScanRecord&)>& sink) {
  check_ranges(ranges);
  const std::size_t total = total_points(ranges);
  constexpr std::size_t block = 65536;
  std::vector<ScanRecord> buffer;
  for (std::size_t base = 0; base < total; base += block) {
    const std::size_t count = std::min(block, total - base);
    buffer.assign(count, ScanRecord{});
    std::exception_ptr failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
      if (failure) continue;
      ScanRecord& rec = buffer[static_cast<std::size_t>(i)];
      decode_point(ranges, base + static_cast<std::size_t>(i), rec.params);
      try {
        const InequalityReport rep = target(rec.params);
        rec.lhs = rep.lhs;
        rec.rhs = rep.rhs;
        rec.margin = rep.margin;
        rec.violated = rep.violated;
      } catch (const std::exception& e) {
        try {
          rethrow_with_point(e, ranges, rec.params);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
          if (!failure) failure = std::current_exception();
        }
      }
    }
    if (failure) std::rethrow_exception(failure);
    for (const auto& rec : buffer) sink(rec);
  }
}

std::vector<ScanRecord> grid_scan(const Evaluator& target,
                                  const std::vector<AxisRange>& ranges) {
  std::vector<ScanRecord> out;
  out.reserve(std::min<std::size_t>(total_points(ranges), 1 << 20));
  grid_scan_stream(target, ranges,
                   [&](const ScanRecord& r) { out.push_back(r); });
  return out;
}

namespace {

double margin_at(const Evaluator& target, std::span<const double> point) {
  return target(point).margin;
}

// Golden-section maximization on [a, b]; assumes local unimodality around
// the incumbent. Returns the best point probed.
std::pair<double, double> golden_max(const std::function<double(double)>& f,
                                     double a, double b) {
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < 80 && (b - a) > 1e-13 * (1.0 + std::fabs(a)); ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  return f1 > f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

}  // namespace

MaxViolationResult maximize_violation(const Evaluator& target,
                                      const std::vector<AxisRange>& ranges,
                                      std::size_t refine_iters) {
  check_ranges(ranges);
  const std::size_t total = total_points(ranges);

  // Grid stage: best margin, ties broken by lowest row-major index.
  double best_margin = -1e300;
  std::size_t best_index = 0;
  std::exception_ptr failure;
#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    double local_best = -1e300;
    std::size_t local_index = 0;
    std::vector<double> point;
#ifdef _OPENMP
#pragma omp for nowait schedule(static)
#endif
    for (long long i = 0; i < static_cast<long long>(total); ++i) {
      if (failure) continue;
      decode_point(ranges, static_cast<std::size_t>(i), point);
      double m = -1e300;
      try {
        m = margin_at(target, point);
      } catch (const std::exception& e) {
        try {
          rethrow_with_point(e, ranges, point);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
          if (!failure) failure = std::current_exception();
        }
        continue;
      }
      if (m > local_best ||
          (m == local_best && static_cast<std::size_t>(i) < local_index)) {
        local_best = m;
        local_index = static_cast<std::size_t>(i);
      }
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    if (local_best > best_margin ||
        (local_best == best_margin && local_index < best_index)) {
      best_margin = local_best;
      best_index = local_index;
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<double> best_point;
  decode_point(ranges, best_index, best_point);

  // Refinement: cyclic coordinate descent with golden-section line search
  // over each axis' full range; improvements only, so the margin is
  // monotone non-decreasing.
  std::size_t iters_done = 0;
  for (std::size_t it = 0; it < refine_iters; ++it) {
    bool improved = false;
    for (std::size_t ax = 0; ax < ranges.size(); ++ax) {
      std::vector<double> probe = best_point;
      const auto line = [&](double x) {
        probe[ax] = x;
        return margin_at(target, probe);
      };
      const auto [x, fx] = golden_max(line, ranges[ax].lo, ranges[ax].hi);
      if (fx > best_margin) {
        best_margin = fx;
        best_point[ax] = x;
        improved = true;
      }
    }
    ++iters_done;
    if (!improved) break;
  }

  MaxViolationResult result;
  for (const auto& r : ranges) result.names.push_back(r.name);
  result.params = best_point;
  result.margin = best_margin;
  result.refinement_iterations = iters_done;
  return result;
}

}
