#include "wignerlab/specfun.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "wignerlab/quad.hpp"

namespace wignerlab::specfun {

double sinc(double x) {
  // Even Taylor branch keeps full precision through the removable
  // singularity; at 1e-4 the truncation error is ~1e-28.
  if (std::fabs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

namespace {

constexpr long double pi_l = 3.14159265358979323846264338327950288L;

// Si(x) - pi/2 by the alternating power series
//   Si(x) = sum_k (-1)^k x^(2k+1) / ((2k+1)(2k+1)!).
// Accumulated in long double: near the hand-over point x = 16 the largest
// term is ~5e4, so double accumulation would lose ~1e-11 to cancellation.
double si_series(double x) {
  const long double xl = x;
  const long double x2 = xl * xl;
  long double term = xl;  // (-1)^k x^(2k+1) / (2k+1)!
  long double sum = 0.0L;
  for (int k = 0; k < 200; ++k) {
    const long double contrib = term / (2 * k + 1);
    sum += contrib;
    term *= -x2 / ((2.0L * k + 2.0L) * (2.0L * k + 3.0L));
    if (std::fabs((double)term) < 1e-22L * (1.0L + std::fabs((double)sum)))
      break;
  }
  return static_cast<double>(sum - pi_l / 2.0L);
}

// Modified Lentz continued fraction for E1(ix); yields si(x) = Im of
// exp(-ix) * CF directly. Converges rapidly for x > ~2.
double si_continued_fraction(double x) {
  using C = std::complex<double>;
  constexpr double tiny = 1e-290;
  C b(1.0, x);
  C c(1.0 / tiny, 0.0);
  C d = 1.0 / b;
  C h = d;
  for (int i = 1; i <= 300; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const C del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-17) break;
  }
  h *= C(std::cos(x), -std::sin(x));
  return h.imag();
}

// si(x) for large x from the auxiliary-function asymptotic series,
//   si(x) = -(f(x) cos x + g(x) sin x),
// truncation error < 4e-16 for x >= 100.
double si_asymptotic(double x) {
  const double ix2 = 1.0 / (x * x);
  const double f =
      (1.0 - ix2 * (2.0 - ix2 * (24.0 - ix2 * (720.0 - ix2 * 40320.0)))) / x;
  const double g =
      (1.0 - ix2 * (6.0 - ix2 * (120.0 - ix2 * (5040.0 - ix2 * 362880.0)))) *
      ix2;
  return -(f * std::cos(x) + g * std::sin(x));
}

}  // namespace

double si(double x) {
  if (!(x >= 0.0)) throw std::domain_error("si: x must be >= 0");
  if (x <= si_switch) return si_series(x);
  return si_continued_fraction(x);
}

double si_oracle(double x, double tol) {
  if (!(x >= 0.0)) throw std::domain_error("si_oracle: x must be >= 0");
  if (!(tol > 0.0)) throw std::domain_error("si_oracle: tol must be > 0");
  constexpr double tail_point = 100.0;
  if (x >= tail_point) return si_asymptotic(x);
  const double tail = si_asymptotic(tail_point);
  const auto integrand = [](double z) {
    if (z < 1e-8) return 1.0 - z * z / 6.0;
    return std::sin(z) / z;
  };
  const double integral =
      quad::adaptive_simpson(integrand, x, tail_point, 0.5 * tol);
  // si(x) = si(L) - int_x^L sin(z)/z dz
  return tail - integral;
}

}
