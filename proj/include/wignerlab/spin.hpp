#pragma once

#include "wignerlab/wigner.hpp"

namespace wignerlab::spin {

/// Angle differences between the three coplanar analyzers plus the
/// dimensionless precession phase omega*t. The tie theta_ba =
/// theta_bc + theta_ca is not enforced; callers may explore freely.
struct SpinScenarioParams {
  double theta_ba = 0.0;
  double theta_ca = 0.0;
  double theta_bc = 0.0;
  double omega_t = 0.0;
};

/// Finite time resolution of the measuring device: half-window delta
/// (2*delta = omega*dt) around the dimensionless common time T.
struct ResolutionParams {
  double delta = 0.0;
  double common_time = 0.0;
};

struct FieldProbabilities {
  double w_ab;  // w(a+,b+,t) = 1/2 sin^2(theta_ba/2 + 2wt)
  double w_ac;  // w(a-,c+,t) = 1/2 cos^2(theta_ca/2 + 2wt)
  double w_cb;  // w(c+,b-,t) = 1/2 cos^2(theta_cb/2 - 2wt)
};

FieldProbabilities probabilities_in_field(const SpinScenarioParams& p);

/// The scenario's model inequality:
///   sin^2(theta_ba/2 + 2wt) <= 2 sin^2(wt)
///     + cos(2wt) [sin^2(theta_ca/2) + sin^2(theta_bc/2)].
InequalityReport model_inequality(const SpinScenarioParams& p,
                                  double tol = default_tolerance);

struct DynamicOperands {
  JointProbabilityTable table;  // t0 probabilities
  TransitionTable trans;        // (cos^2 wt, sin^2 wt, cos^2 wt, sin^2 wt)
  double lhs;                   // w(a+,b+,t)
};

/// Operands that, fed to dynamic_wigner, reproduce model_inequality
/// margins scaled by the common 1/2 factor.
DynamicOperands assemble_dynamic_operands(const SpinScenarioParams& p);

/// Window-averaged inequality; margin of the closed sinc form against 1/2.
/// Angles come from p, the common time from r. Throws std::domain_error
/// for r.delta < 0.
InequalityReport averaged_inequality(const SpinScenarioParams& p,
                                     const ResolutionParams& r,
                                     double tol = default_tolerance);

/// Violation rate at the maximal-violation configuration as a function of
/// the dimensionless resolution:
///   K(delta) = sinc(2 delta) (7/16 cos(2 delta) + 5/8) - 1/2.
/// Exact coefficients; K(0) = 9/16.
double kappa(double delta);

/// Smallest positive root of kappa, by bracket scan + bisection to 1e-10.
double delta_threshold();

/// Detector time-resolution bound dt <= 1.7/omega, seconds for omega in 1/s.
/// Throws std::domain_error for omega <= 0.
double resolution_bound(double omega);

/// Larmor frequency q B / (2 m) in SI units.
double larmor_omega(double b_tesla, double mass_kg, double charge_coulomb);

inline constexpr double elementary_charge_c = 1.602176634e-19;
inline constexpr double electron_mass_kg = 9.1093837015e-31;
inline constexpr double proton_mass_kg = 1.67262192369e-27;

/// One-parameter family theta_bc = theta_ca = theta, theta_ba = 2 theta,
/// omega_t = theta/2 along which the 9/16 maximum lies.
SpinScenarioParams symmetric_family(double theta);

/// arccos(1/4)/2, the family's maximal-violation angle.
double max_violation_angle();

}
