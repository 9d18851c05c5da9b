#include "wignerlab/qm2.hpp"

#include <cmath>

namespace wignerlab::qm2 {

double norm(const Spinor& s) {
  return std::sqrt(std::norm(s.up) + std::norm(s.down));
}

double norm(const PairState& psi) {
  double n2 = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) n2 += std::norm(psi.amp[i][j]);
  return std::sqrt(n2);
}

Complex inner(const Spinor& bra, const Spinor& ket) {
  return std::conj(bra.up) * ket.up + std::conj(bra.down) * ket.down;
}

Spinor spinor_plus(PolarAngle theta) {
  const double h = 0.5 * theta.radians;
  return {std::cos(h), std::sin(h)};
}

Spinor spinor_minus(PolarAngle theta) {
  const double h = 0.5 * theta.radians;
  return {-std::sin(h), std::cos(h)};
}

PairState singlet() {
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  PairState psi{};
  psi.amp[0][1] = inv_sqrt2;   // |up>^(2) |down>^(1)
  psi.amp[1][0] = -inv_sqrt2;  // -|down>^(2) |up>^(1)
  return psi;
}

namespace {

// Rotation advancing the analyzer angle by 2*phase in the (x,z) plane.
Spinor rotate(const Spinor& s, double phase) {
  const double c = std::cos(phase);
  const double sn = std::sin(phase);
  return {c * s.up - sn * s.down, sn * s.up + c * s.down};
}

}  // namespace

Spinor evolve_electron(const Spinor& s, double phase) {
  return rotate(s, phase);
}

Spinor evolve_positron(const Spinor& s, double phase) {
  return rotate(s, -phase);
}

PairState pair_state_at(double phase) {
  const PairState s0 = singlet();
  const double c = std::cos(phase);
  const double sn = std::sin(phase);
  // amp(t) = R_e(phase) amp(0) R_p(-phase)^T; both factors reduce to the
  // same real rotation here.
  PairState out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          const double re = (i == 0) ? (k == 0 ? c : -sn) : (k == 0 ? sn : c);
          const double rp = (j == 0) ? (l == 0 ? c : sn) : (l == 0 ? -sn : c);
          acc += re * rp * s0.amp[k][l];
        }
      out.amp[i][j] = acc;
    }
  return out;
}

double joint_probability(const PairState& state, const Spinor& proj2,
                         const Spinor& proj1) {
  const Complex c2[2] = {std::conj(proj2.up), std::conj(proj2.down)};
  const Complex c1[2] = {std::conj(proj1.up), std::conj(proj1.down)};
  Complex amp = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) amp += c2[i] * c1[j] * state.amp[i][j];
  return std::norm(amp);
}

double transition_probability(const Spinor& initial, double phase,
                              const Spinor& target) {
  return std::norm(inner(target, rotate(initial, phase)));
}

}
