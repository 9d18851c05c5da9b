#pragma once

namespace wignerlab::specfun {

/// sin(x)/x, continued through x = 0 by its even Taylor series.
/// Total on the reals; range [-0.2173, 1].
double sinc(double x);

/// Shifted sine integral si(x) = Si(x) - pi/2 = -int_x^inf sin(z)/z dz.
/// Power series for x <= si_switch, complex continued fraction above it.
/// Absolute error <= 1e-12 on [0, 1e4]. Throws std::domain_error for x < 0.
double si(double x);

/// Series/continued-fraction hand-over point for si().
inline constexpr double si_switch = 16.0;

/// Independent evaluation of si(x) by adaptive quadrature over [x, L]
/// plus an asymptotic tail at L. Guaranteed error <= tol. Test oracle;
/// shares no code path with si(). Throws if the node budget is exhausted.
double si_oracle(double x, double tol);

}
