#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>

namespace wignerlab {

enum class Sign : int { plus = 0, minus = 1 };

/// The three analyzer pairs entering the inequalities, in the fixed order
/// (a2,b1), (c2,b1), (a2,c1).
enum class AxisPair : int { ab = 0, cb = 1, ac = 2 };

/// Joint probabilities p[pair][s2*2+s1]. Entries must be >= -1e-12;
/// normalization is deliberately not assumed (norms may decay).
struct JointProbabilityTable {
  std::array<std::array<double, 4>, 3> p{};

  double& w(AxisPair pair, Sign s2, Sign s1) {
    return p[static_cast<int>(pair)]
            [static_cast<int>(s2) * 2 + static_cast<int>(s1)];
  }
  double w(AxisPair pair, Sign s2, Sign s1) const {
    return p[static_cast<int>(pair)]
            [static_cast<int>(s2) * 2 + static_cast<int>(s1)];
  }
};

/// Local single-particle transition probabilities between the preparation
/// time and the measurement time: w(a+(t0)->a+(t)), w(a-(t0)->a+(t)) and
/// the b-side analogues. Each in [0, 1].
struct TransitionTable {
  double a_pp = 1.0;
  double a_mp = 0.0;
  double b_pp = 1.0;
  double b_mp = 0.0;
};

struct InequalityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // lhs - rhs
  double tolerance = 0.0;
  bool violated = false;
};

inline constexpr double default_tolerance = 1e-9;

InequalityReport make_report(double lhs, double rhs,
                             double tol = default_tolerance);

/// Weights over the 8 anticorrelated outcome triples (alpha,beta,gamma),
/// the antifermion's signs along a, b, c; the fermion's signs are forced
/// opposite. Non-negative, summing to 1.
struct HiddenVariableModel {
  std::array<double, 8> weight{};

  static constexpr std::size_t index(Sign alpha, Sign beta, Sign gamma) {
    return static_cast<std::size_t>(alpha) * 4 +
           static_cast<std::size_t>(beta) * 2 + static_cast<std::size_t>(gamma);
  }
  static HiddenVariableModel uniform();
  static HiddenVariableModel point_mass(Sign alpha, Sign beta, Sign gamma);
  /// Throws std::invalid_argument unless weights are non-negative and
  /// sum to 1 within 1e-12.
  void validate() const;
};

/// Static Wigner inequality. Variant 0 is
///   w(a+,b+) <= w(c+,b+) + w(a+,c+),
/// variants 1..3 the forms with a and/or b reversed.
/// Throws std::out_of_range for variant > 3.
InequalityReport static_wigner(const JointProbabilityTable& table, int variant,
                               double tol = default_tolerance);

/// Dynamical inequality: lhs_prob = w(a+,b+,t) against the four-term
/// product sum built from trans and the t0 table. With identity
/// transitions (1,0,1,0) it reduces to static variant 0.
/// Throws std::domain_error on negative inputs.
InequalityReport dynamic_wigner(const JointProbabilityTable& t0_table,
                                const TransitionTable& trans, double lhs_prob,
                                double tol = default_tolerance);

/// Marginal joint probabilities induced by a hidden-variable model.
JointProbabilityTable lhv_table(const HiddenVariableModel& model);

/// The t0 table together with the locally evolved w(a+,b+,t), computed by
/// the factorized four-term sum.
std::pair<JointProbabilityTable, double> lhv_dynamic_operands(
    const HiddenVariableModel& model, const TransitionTable& trans);

struct FuzzSummary {
  std::size_t trials = 0;
  double max_margin = 0.0;   // over all 4 static variants and the dynamic form
  std::size_t worst_trial = 0;
  bool any_violation = false;  // max_margin > tolerance
  double tolerance = 0.0;
};

/// Randomized certification that no hidden-variable model violates any of
/// the inequalities: n seeded trials of random (model, transitions).
/// Deterministic for fixed (n, seed) independent of worker count.
/// Throws std::invalid_argument for n = 0.
FuzzSummary fuzz_lhv(std::size_t n, std::uint64_t seed,
                     double tol = 1e-12);

/// Serial reference of fuzz_lhv; must produce identical results.
FuzzSummary fuzz_lhv_reference(std::size_t n, std::uint64_t seed,
                               double tol = 1e-12);

/// Max margin of one (model, transitions) draw across all five forms.
double lhv_trial_margin(const HiddenVariableModel& model,
                        const TransitionTable& trans);

}
