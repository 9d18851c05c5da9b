#include "wignerlab/meson.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wignerlab::meson {

MesonParams MesonParams::make(double gamma_l, double gamma_h, double m_l,
                              double m_h, Complex p, Complex q, double alpha) {
  if (!(gamma_l > 0.0) || !(gamma_h > 0.0))
    throw std::invalid_argument("MesonParams: widths must be positive");
  if (std::fabs(std::norm(p) + std::norm(q) - 1.0) > 1e-12)
    throw std::invalid_argument("MesonParams: |p|^2 + |q|^2 must equal 1");
  return {gamma_l, gamma_h, m_l, m_h, p, q, alpha};
}

MesonParams MesonParams::symmetric(double gamma, double dgamma, double dm,
                                   double alpha) {
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  return make(gamma - 0.5 * dgamma, gamma + 0.5 * dgamma, -0.5 * dm, 0.5 * dm,
              inv_sqrt2, std::polar(inv_sqrt2, alpha), alpha);
}

namespace {

Complex heavy_amp(double t, const MesonParams& mp) {
  return std::exp(Complex(-0.5 * mp.gamma_h * t, -mp.m_h * t));
}

Complex light_amp(double t, const MesonParams& mp) {
  return std::exp(Complex(-0.5 * mp.gamma_l * t, -mp.m_l * t));
}

void require_nonnegative_time(double t, const char* who) {
  if (!(t >= 0.0)) throw std::domain_error(std::string(who) + ": t must be >= 0");
}

}  // namespace

Complex g_plus(double t, const MesonParams& mp) {
  require_nonnegative_time(t, "g_plus");
  return 0.5 * (heavy_amp(t, mp) + light_amp(t, mp));
}

Complex g_minus(double t, const MesonParams& mp) {
  require_nonnegative_time(t, "g_minus");
  return 0.5 * (heavy_amp(t, mp) - light_amp(t, mp));
}

StaticProbabilities static_probabilities(const MesonParams& mp) {
  const Complex pt = mp.p_tilde();
  const double pt2 = std::norm(pt);
  const double q2 = std::norm(mp.q);
  return {
      0.25 * (pt2 + q2),
      0.25 * (pt2 + q2),
      0.25 * std::norm(pt - mp.q),
      0.25 * std::norm(pt + mp.q),
      0.5 * pt2,
      0.5 * q2,
  };
}

InequalityReport static_inequality(const MesonParams& mp, Orientation o,
                                   double tol) {
  const StaticProbabilities w = static_probabilities(mp);
  // b+ -> Bbar: w(B1,Bbar) <= w(B1,BH) + w(BH,Bbar)
  // b+ -> B:    w(B1,B)    <= w(B1,BH) + w(BH,B)
  const double lhs = (o == Orientation::bbar_plus) ? w.b1_bbar : w.b1_b;
  const double rhs =
      w.b1_bh + ((o == Orientation::bbar_plus) ? w.bh_bbar : w.bh_b);
  return make_report(lhs, rhs, tol);
}

DynamicProbabilities dynamic_probabilities(double t, const MesonParams& mp,
                                           double qp_tol) {
  require_nonnegative_time(t, "dynamic_probabilities");
  const double qp_mod = std::abs(mp.q / mp.p);
  if (std::fabs(qp_mod - 1.0) > qp_tol) {
    std::ostringstream msg;
    msg << "dynamic_probabilities: |q/p| = " << qp_mod
        << " deviates from 1 beyond tolerance " << qp_tol
        << " (measured band " << qp_modulus_measured << " +- "
        << qp_modulus_measured_err << ")";
    throw std::invalid_argument(msg.str());
  }
  const double g = mp.gamma();
  const double dg = mp.dgamma();
  return {
      std::exp(-g * t) * std::exp(-0.5 * dg * t),
      0.0,
      std::norm(g_plus(t, mp)),
      std::norm(g_minus(t, mp)),
      0.25 * std::exp(-2.0 * g * t),
  };
}

JointProbabilityTable t0_table(const MesonParams& mp) {
  using enum Sign;
  const Complex pt = mp.p_tilde();
  const double pt2 = std::norm(pt);
  const double q2 = std::norm(mp.q);
  const double p2 = std::norm(mp.p);
  JointProbabilityTable t{};
  // a -> (B1, B2), b -> (Bbar, B), c -> (BH, BL)
  t.w(AxisPair::ab, plus, plus) = 0.25 * (pt2 + q2);   // (B1, Bbar)
  t.w(AxisPair::ab, plus, minus) = 0.25 * (pt2 + q2);  // (B1, B)
  t.w(AxisPair::ab, minus, plus) = 0.25 * (pt2 + q2);  // (B2, Bbar)
  t.w(AxisPair::ab, minus, minus) = 0.25 * (pt2 + q2); // (B2, B)
  t.w(AxisPair::cb, plus, plus) = 0.5 * pt2;           // (BH, Bbar)
  t.w(AxisPair::cb, plus, minus) = 0.5 * q2;           // (BH, B)
  t.w(AxisPair::cb, minus, plus) = 0.5 * p2;           // (BL, Bbar)
  t.w(AxisPair::cb, minus, minus) = 0.5 * q2;          // (BL, B)
  t.w(AxisPair::ac, plus, plus) = 0.25 * std::norm(pt - mp.q);   // (B1, BH)
  t.w(AxisPair::ac, plus, minus) = 0.25 * std::norm(pt + mp.q);  // (B1, BL)
  t.w(AxisPair::ac, minus, plus) = 0.25 * std::norm(pt + mp.q);  // (B2, BH)
  t.w(AxisPair::ac, minus, minus) = 0.25 * std::norm(pt - mp.q); // (B2, BL)
  return t;
}

InequalityReport dynamic_inequality(double t, const MesonParams& mp,
                                    double tol) {
  const DynamicProbabilities dyn = dynamic_probabilities(t, mp);
  const TransitionTable trans{dyn.b1_to_b1, dyn.b2_to_b1, dyn.bbar_to_bbar,
                              dyn.b_to_bbar};
  return dynamic_wigner(t0_table(mp), trans, dyn.pair_b1_bbar, tol);
}

double dynamic_rhs_over_lhs(double t, const MesonParams& mp) {
  return 0.5 * (1.0 + std::exp(-mp.dgamma() * t));
}

}
