#pragma once

#include <complex>

#include "wignerlab/wigner.hpp"

namespace wignerlab::meson {

using Complex = std::complex<double>;

/// Open-system two-state parameters: widths and masses of the light/heavy
/// eigenstates, mixing coefficients p, q with |p|^2 + |q|^2 = 1, and the
/// non-physical CP phase alpha. hbar = c = 1.
struct MesonParams {
  double gamma_l;
  double gamma_h;
  double m_l;
  double m_h;
  Complex p;
  Complex q;
  double alpha;

  double gamma() const { return 0.5 * (gamma_h + gamma_l); }
  double dgamma() const { return gamma_h - gamma_l; }
  double dm() const { return m_h - m_l; }
  Complex p_tilde() const { return p * std::polar(1.0, alpha); }

  /// Validating constructor. Throws std::invalid_argument on broken
  /// normalization or non-positive widths.
  static MesonParams make(double gamma_l, double gamma_h, double m_l,
                          double m_h, Complex p, Complex q, double alpha);

  /// q/p = exp(i alpha), |p|^2 = |q|^2 = 1/2, in units of the mean width:
  /// gamma_{L,H} = gamma -+ dgamma/2, m_{L,H} = -+ dm/2.
  static MesonParams symmetric(double gamma, double dgamma, double dm,
                               double alpha);
};

/// Interference amplitudes (exp(-i E_H t) +- exp(-i E_L t))/2.
/// Throw std::domain_error for t < 0.
Complex g_plus(double t, const MesonParams& mp);
Complex g_minus(double t, const MesonParams& mp);

/// The closed-form t0 probabilities of the static inequality.
struct StaticProbabilities {
  double b1_bbar;  // 1/4 (|p~|^2 + |q|^2)
  double b1_b;     // 1/4 (|p~|^2 + |q|^2)
  double b1_bh;    // 1/4 |p~ - q|^2
  double b2_bh;    // 1/4 |p~ + q|^2
  double bh_bbar;  // 1/2 |p~|^2
  double bh_b;     // 1/2 |q|^2
};

StaticProbabilities static_probabilities(const MesonParams& mp);

/// Which flavour outcome plays the role of b+.
enum class Orientation { bbar_plus, b_plus };

/// Static Wigner inequality in the flavour/CP/mass directions; reduces to
/// ||p~|^2 - |q|^2| <= |p~ - q|^2 and is never violated.
InequalityReport static_inequality(const MesonParams& mp, Orientation o,
                                   double tol = default_tolerance);

struct DynamicProbabilities {
  double b1_to_b1;      // exp(-Gamma t) exp(-dGamma t/2)
  double b2_to_b1;      // 0
  double bbar_to_bbar;  // |g+|^2
  double b_to_bbar;     // |g-|^2
  double pair_b1_bbar;  // w(B1^(2), Bbar^(1), t) = 1/4 exp(-2 Gamma t)
};

/// Requires q/p on the unit circle within qp_tol; throws
/// std::invalid_argument with a diagnostic otherwise, std::domain_error
/// for t < 0.
DynamicProbabilities dynamic_probabilities(double t, const MesonParams& mp,
                                           double qp_tol = 0.01);

/// Full 12-entry t0 table in the a -> (B1,B2), b -> (Bbar,B),
/// c -> (BH,BL) correspondence.
JointProbabilityTable t0_table(const MesonParams& mp);

/// Assembles the dynamical inequality operands and evaluates them; the
/// margin has the sign of 1 - exp(-dGamma t).
InequalityReport dynamic_inequality(double t, const MesonParams& mp,
                                    double tol = default_tolerance);

/// Closed-form reduction of the assembled inequality:
/// rhs/lhs = (1 + exp(-dGamma t))/2.
double dynamic_rhs_over_lhs(double t, const MesonParams& mp);

/// Measured |q/p| band, used only for the input-validation diagnostic.
inline constexpr double qp_modulus_measured = 1.0017;
inline constexpr double qp_modulus_measured_err = 0.0017;

}
