#include "wignerlab/spin.hpp"

#include <cmath>
#include <stdexcept>

#include "wignerlab/specfun.hpp"

namespace wignerlab::spin {

namespace {

double sin2(double x) {
  const double s = std::sin(x);
  return s * s;
}

double cos2(double x) {
  const double c = std::cos(x);
  return c * c;
}

}  // namespace

FieldProbabilities probabilities_in_field(const SpinScenarioParams& p) {
  const double wt2 = 2.0 * p.omega_t;
  return {
      0.5 * sin2(0.5 * p.theta_ba + wt2),
      0.5 * cos2(0.5 * p.theta_ca + wt2),
      // theta_cb = -theta_bc; cos^2 is even
      0.5 * cos2(-0.5 * p.theta_bc - wt2),
  };
}

InequalityReport model_inequality(const SpinScenarioParams& p, double tol) {
  const double lhs = sin2(0.5 * p.theta_ba + 2.0 * p.omega_t);
  const double rhs =
      2.0 * sin2(p.omega_t) +
      std::cos(2.0 * p.omega_t) *
          (sin2(0.5 * p.theta_ca) + sin2(0.5 * p.theta_bc));
  return make_report(lhs, rhs, tol);
}

DynamicOperands assemble_dynamic_operands(const SpinScenarioParams& p) {
  using enum Sign;
  DynamicOperands ops;
  // Singlet t0 probabilities: 1/2 sin^2 for opposite-parity sign pairs of
  // each axis difference, 1/2 cos^2 otherwise.
  const auto fill_pair = [&](AxisPair pair, double theta) {
    ops.table.w(pair, plus, plus) = 0.5 * sin2(0.5 * theta);
    ops.table.w(pair, minus, minus) = 0.5 * sin2(0.5 * theta);
    ops.table.w(pair, plus, minus) = 0.5 * cos2(0.5 * theta);
    ops.table.w(pair, minus, plus) = 0.5 * cos2(0.5 * theta);
  };
  fill_pair(AxisPair::ab, p.theta_ba);
  fill_pair(AxisPair::cb, p.theta_bc);
  fill_pair(AxisPair::ac, p.theta_ca);
  const double c2 = cos2(p.omega_t);
  const double s2 = sin2(p.omega_t);
  ops.trans = {c2, s2, c2, s2};
  ops.lhs = 0.5 * sin2(0.5 * p.theta_ba + 2.0 * p.omega_t);
  return ops;
}

InequalityReport averaged_inequality(const SpinScenarioParams& p,
                                     const ResolutionParams& r, double tol) {
  if (!(r.delta >= 0.0))
    throw std::domain_error("averaged_inequality: delta must be >= 0");
  using specfun::sinc;
  const double T = r.common_time;
  const double lhs =
      sinc(2.0 * r.delta) *
      (std::cos(2.0 * r.delta) * (sin2(0.5 * p.theta_ba + 2.0 * T) - 0.5) +
       1.0 - 2.0 * sin2(T) -
       std::cos(2.0 * T) * (sin2(0.5 * p.theta_ca) + sin2(0.5 * p.theta_bc)));
  return make_report(lhs, 0.5, tol);
}

double kappa(double delta) {
  return specfun::sinc(2.0 * delta) *
             ((7.0 / 16.0) * std::cos(2.0 * delta) + 5.0 / 8.0) -
         0.5;
}

double delta_threshold() {
  // Scan [1e-6, 2] for the first sign change, then bisect.
  constexpr int scan_steps = 2000;
  double lo = 1e-6;
  double f_lo = kappa(lo);
  double hi = 0.0, f_hi = 0.0;
  bool bracketed = false;
  for (int i = 1; i <= scan_steps; ++i) {
    const double x = 1e-6 + (2.0 - 1e-6) * i / scan_steps;
    const double fx = kappa(x);
    if (f_lo > 0.0 && fx <= 0.0) {
      hi = x;
      f_hi = fx;
      bracketed = true;
      break;
    }
    lo = x;
    f_lo = fx;
  }
  if (!bracketed)
    throw std::runtime_error("delta_threshold: root not bracketed in [1e-6, 2]");
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    const double fm = kappa(mid);
    if (fm > 0.0) {
      lo = mid;
      f_lo = fm;
    } else {
      hi = mid;
      f_hi = fm;
    }
  }
  (void)f_lo;
  (void)f_hi;
  return 0.5 * (lo + hi);
}

double resolution_bound(double omega) {
  if (!(omega > 0.0))
    throw std::domain_error("resolution_bound: omega must be > 0");
  return 1.7 / omega;
}

double larmor_omega(double b_tesla, double mass_kg, double charge_coulomb) {
  if (!(mass_kg > 0.0))
    throw std::domain_error("larmor_omega: mass must be > 0");
  return charge_coulomb * b_tesla / (2.0 * mass_kg);
}

SpinScenarioParams symmetric_family(double theta) {
  return {2.0 * theta, theta, theta, 0.5 * theta};
}

double max_violation_angle() { return 0.5 * std::acos(0.25); }

}
