#include "wignerlab/qft.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>

#include "wignerlab/quad.hpp"
#include "wignerlab/rng.hpp"
#include "wignerlab/specfun.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wignerlab::qft {

namespace {

constexpr double pi = std::numbers::pi;

double sin2_half(double theta) {
  const double s = std::sin(0.5 * theta);
  return s * s;
}

}  // namespace

QftParams QftParams::make(double mass, double gamma0, double max_ratio) {
  if (!(mass > 0.0)) throw std::invalid_argument("QftParams: mass must be > 0");
  if (!(gamma0 > 0.0))
    throw std::invalid_argument("QftParams: gamma0 must be > 0");
  if (gamma0 / mass > max_ratio)
    throw std::invalid_argument(
        "QftParams: gamma0/mass exceeds the narrow-width limit");
  return {mass, gamma0};
}

double rate_bracket(double x) {
  if (!(x > 0.0)) throw std::domain_error("rate_bracket: x must be > 0");
  return 1.0 + specfun::si(x) / pi + std::sin(x) / (pi * x * x) +
         std::cos(x) / (pi * x);
}

double decay_rate(double theta_ab, double tau, const QftParams& qp) {
  if (!(tau > 0.0)) throw std::domain_error("decay_rate: tau must be > 0");
  return 0.5 * qp.gamma0 * rate_bracket(qp.mass * tau) * sin2_half(theta_ab);
}

PerturbativityCheck perturbativity_ok(const QftParams& qp, double tau,
                                      double bound) {
  if (!(tau > 0.0))
    throw std::domain_error("perturbativity_ok: tau must be > 0");
  const double x = qp.mass * tau;
  const double ratio = 0.5 * (qp.gamma0 / qp.mass) * rate_bracket(x);
  const bool rate_ok = ratio <= bound;
  const bool window_ok = x >= 10.0 && x <= 0.1 * qp.mass / qp.gamma0;
  return {rate_ok && window_ok, rate_ok, window_ok, ratio};
}

double integrated_probability(double theta_ab, const TimeWindow& win,
                              const QftParams& qp, double rel_tol) {
  if (!(win.t_i > 0.0) || !(win.t_f >= win.t_i))
    throw std::invalid_argument(
        "integrated_probability: window must satisfy 0 < t_i <= t_f");
  if (win.t_f == win.t_i) return 0.0;
  if (!perturbativity_ok(qp, win.t_i).window_ok ||
      !perturbativity_ok(qp, win.t_f).window_ok)
    std::cerr << "integrated_probability: window extends outside the "
                 "perturbative plateau\n";
  const auto f = [&](double tau) { return decay_rate(theta_ab, tau, qp); };
  // Plateau estimate fixes the absolute tolerance for the requested
  // relative error.
  const double rough =
      (win.t_f - win.t_i) * 0.5 * qp.gamma0 * sin2_half(theta_ab);
  const double abs_tol = rel_tol * std::max(rough, 1e-300);
  return quad::adaptive_simpson(f, win.t_i, win.t_f, abs_tol);
}

InequalityReport ratio_inequality(double t_over_t0, double theta_ba,
                                  double theta_ca, double theta_bc,
                                  double tol) {
  if (!(t_over_t0 >= 1.0))
    throw std::domain_error("ratio_inequality: t/t0 must be >= 1");
  const double lhs = t_over_t0 * sin2_half(theta_ba);
  const double rhs = sin2_half(theta_ca) + sin2_half(theta_bc);
  return make_report(lhs, rhs, tol);
}

namespace {

bool sample_violates(double t_over_t0, std::uint64_t seed,
                     std::uint64_t index) {
  CounterRng rng(seed, index);
  const double ba = pi * rng.uniform();
  const double ca = pi * rng.uniform();
  const double bc = pi * rng.uniform();
  return t_over_t0 * sin2_half(ba) - (sin2_half(ca) + sin2_half(bc)) >
         default_tolerance;
}

RegionFraction fraction_common(double t_over_t0, std::size_t samples,
                               std::uint64_t seed, bool parallel) {
  if (!(t_over_t0 >= 1.0))
    throw std::domain_error("violation_region_fraction: t/t0 must be >= 1");
  if (samples < 10'000)
    throw std::invalid_argument(
        "violation_region_fraction: need at least 1e4 samples");
  long long hits = 0;
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for reduction(+ : hits) schedule(static)
    for (long long i = 0; i < static_cast<long long>(samples); ++i)
      hits += sample_violates(t_over_t0, seed, static_cast<std::uint64_t>(i));
  } else
#endif
  {
    (void)parallel;
    for (std::size_t i = 0; i < samples; ++i)
      hits += sample_violates(t_over_t0, seed, i);
  }
  const double f = static_cast<double>(hits) / static_cast<double>(samples);
  const double se = std::sqrt(f * (1.0 - f) / static_cast<double>(samples));
  return {f, se, static_cast<std::size_t>(hits), samples};
}

}  // namespace

RegionFraction violation_region_fraction(double t_over_t0, std::size_t samples,
                                         std::uint64_t seed) {
  return fraction_common(t_over_t0, samples, seed, true);
}

RegionFraction violation_region_fraction_reference(double t_over_t0,
                                                   std::size_t samples,
                                                   std::uint64_t seed) {
  return fraction_common(t_over_t0, samples, seed, false);
}

}
