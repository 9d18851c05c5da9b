#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>

namespace wignerlab::quad {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance
/// abs_tol. Throws QuadratureError once max_nodes function evaluations
/// have been spent without convergence.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol,
                        std::size_t max_nodes = 20'000'000);

}
