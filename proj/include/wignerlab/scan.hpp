#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "wignerlab/wigner.hpp"

namespace wignerlab::scan {

struct AxisRange {
  std::string name;
  double lo;
  double hi;
  std::size_t steps;  // >= 2 lattice points, endpoints included
};

struct ScanRecord {
  std::vector<double> params;
  double lhs;
  double rhs;
  double margin;
  bool violated;
};

using Evaluator = std::function<InequalityReport(std::span<const double>)>;

inline constexpr std::size_t max_grid_points = 100'000'000;
inline constexpr std::size_t max_axes = 4;

/// Evaluates the target on the full lattice, emitting records to sink in
/// row-major axis order regardless of worker count. Evaluator failures
/// are rethrown annotated with the offending lattice point.
void grid_scan_stream(const Evaluator& target,
                      const std::vector<AxisRange>& ranges,
                      const std::function<void(const ScanRecord&)>& sink);

/// Convenience collector over grid_scan_stream.
std::vector<ScanRecord> grid_scan(const Evaluator& target,
                                  const std::vector<AxisRange>& ranges);

struct MaxViolationResult {
  std::vector<std::string> names;
  std::vector<double> params;
  double margin;
  std::size_t refinement_iterations;
};

/// Coarse grid maximum (ties broken by lowest row-major index) followed by
/// refine_iters rounds of cyclic coordinate descent with golden-section
/// line searches. The reported margin never falls below any evaluated grid
/// point.
MaxViolationResult maximize_violation(const Evaluator& target,
                                      const std::vector<AxisRange>& ranges,
                                      std::size_t refine_iters);

}
