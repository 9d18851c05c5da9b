#pragma once

#include <complex>

namespace wignerlab::qm2 {

using Complex = std::complex<double>;

/// Analyzer direction in the (x,z) plane, measured from the z axis.
struct PolarAngle {
  double radians = 0.0;
};

/// Two-level state in the z basis.
struct Spinor {
  Complex up;
  Complex down;
};

/// Bipartite amplitudes amp[s2][s1]; slot 2 is the fermion, slot 1 the
/// antifermion. Index 0 = up, 1 = down. Norm may be below 1 under
/// open-system evolution, never above it.
struct PairState {
  Complex amp[2][2];
};

double norm(const Spinor& s);
double norm(const PairState& psi);
Complex inner(const Spinor& bra, const Spinor& ket);

/// (+) spin eigenstate along theta: (cos t/2, sin t/2).
Spinor spinor_plus(PolarAngle theta);
/// (-) spin eigenstate along theta: (-sin t/2, cos t/2).
Spinor spinor_minus(PolarAngle theta);

/// Total-spin-zero pair: (|up>|down> - |down>|up>)/sqrt(2).
PairState singlet();

/// Precession about the field axis; the electron's analyzer angle advances
/// by +phase, the positron's by -phase.
Spinor evolve_electron(const Spinor& s, double phase);
Spinor evolve_positron(const Spinor& s, double phase);

/// Singlet prepared along z, both constituents precessed by phase = omega*t.
PairState pair_state_at(double phase);

/// Born probability |<proj2| <proj1| state>|^2.
double joint_probability(const PairState& state, const Spinor& proj2,
                         const Spinor& proj1);

/// |<target| U(phase) |initial>|^2 with U the electron precession rotation.
double transition_probability(const Spinor& initial, double phase,
                              const Spinor& target);

}
