#pragma once

#include <cstddef>
#include <cstdint>

#include "wignerlab/wigner.hpp"

namespace wignerlab::qft {

/// Decaying pseudoscalar: mass M and asymptotic width Gamma0 = g^2 M / 8 pi,
/// natural units.
struct QftParams {
  double mass;
  double gamma0;

  /// Throws std::invalid_argument unless M > 0, 0 < Gamma0 and
  /// Gamma0/M <= max_ratio.
  static QftParams make(double mass, double gamma0, double max_ratio = 1e-3);
};

struct TimeWindow {
  double t_i;
  double t_f;
};

/// Dimensionless finite-time factor of the decay rate, x = M tau:
///   1 + si(x)/pi + sin(x)/(pi x^2) + cos(x)/(pi x).
/// -> 1 as x -> inf, ~ 1/2 + 2/(pi x) as x -> 0+. Throws for x <= 0.
double rate_bracket(double x);

/// W^(1)(theta_ab, tau) = (Gamma0/2) * bracket(M tau) * sin^2(theta_ab/2).
double decay_rate(double theta_ab, double tau, const QftParams& qp);

struct PerturbativityCheck {
  bool ok;          // rate_ok && window_ok
  bool rate_ok;     // W^(1)/M <= bound
  bool window_ok;   // 10 <= M tau <= 0.1 M/Gamma0
  double ratio;     // W^(1)(tau)/M with the angular factor dropped
};

PerturbativityCheck perturbativity_ok(const QftParams& qp, double tau,
                                      double bound = 1e-2);

/// Adaptive quadrature of decay_rate over the window, relative error
/// <= rel_tol. Warns (returns normally) outside the plateau; throws
/// std::invalid_argument for a malformed window.
double integrated_probability(double theta_ab, const TimeWindow& win,
                              const QftParams& qp, double rel_tol = 1e-8);

/// (t/t0) sin^2(theta_ba/2) <= sin^2(theta_ca/2) + sin^2(theta_bc/2).
/// Throws std::domain_error for t_over_t0 < 1.
InequalityReport ratio_inequality(double t_over_t0, double theta_ba,
                                  double theta_ca, double theta_bc,
                                  double tol = default_tolerance);

struct RegionFraction {
  double fraction;
  double std_error;
  std::size_t violated;
  std::size_t samples;
};

/// Monte Carlo fraction of the angle cube [0,pi]^3 violating the ratio
/// inequality. Counter-based sampling: deterministic per seed, independent
/// of worker count. Throws std::invalid_argument for samples < 1e4.
RegionFraction violation_region_fraction(double t_over_t0,
                                         std::size_t samples,
                                         std::uint64_t seed);

/// Serial reference of violation_region_fraction; identical results.
RegionFraction violation_region_fraction_reference(double t_over_t0,
                                                   std::size_t samples,
                                                   std::uint64_t seed);

}
