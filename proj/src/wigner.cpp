#include "wignerlab/wigner.hpp"

#include <cmath>
#include <stdexcept>

#include "wignerlab/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wignerlab {

InequalityReport make_report(double lhs, double rhs, double tol) {
  InequalityReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = lhs - rhs;
  r.tolerance = tol;
  r.violated = r.margin > tol;
  return r;
}

HiddenVariableModel HiddenVariableModel::uniform() {
  HiddenVariableModel m;
  m.weight.fill(0.125);
  return m;
}

HiddenVariableModel HiddenVariableModel::point_mass(Sign alpha, Sign beta,
                                                    Sign gamma) {
  HiddenVariableModel m;
  m.weight.fill(0.0);
  m.weight[index(alpha, beta, gamma)] = 1.0;
  return m;
}

void HiddenVariableModel::validate() const {
  double sum = 0.0;
  for (double w : weight) {
    if (!(w >= 0.0))
      throw std::invalid_argument("HiddenVariableModel: negative weight");
    sum += w;
  }
  if (std::fabs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("HiddenVariableModel: weights must sum to 1");
}

InequalityReport static_wigner(const JointProbabilityTable& table, int variant,
                               double tol) {
  using enum Sign;
  double lhs, rhs;
  switch (variant) {
    case 0:
      lhs = table.w(AxisPair::ab, plus, plus);
      rhs = table.w(AxisPair::cb, plus, plus) + table.w(AxisPair::ac, plus, plus);
      break;
    case 1:
      lhs = table.w(AxisPair::ab, plus, minus);
      rhs = table.w(AxisPair::cb, plus, minus) + table.w(AxisPair::ac, plus, plus);
      break;
    case 2:
      lhs = table.w(AxisPair::ab, minus, plus);
      rhs = table.w(AxisPair::cb, plus, plus) + table.w(AxisPair::ac, minus, plus);
      break;
    case 3:
      lhs = table.w(AxisPair::ab, minus, minus);
      rhs = table.w(AxisPair::cb, plus, minus) + table.w(AxisPair::ac, minus, plus);
      break;
    default:
      throw std::out_of_range("static_wigner: variant must be 0..3");
  }
  return make_report(lhs, rhs, tol);
}

InequalityReport dynamic_wigner(const JointProbabilityTable& t0_table,
                                const TransitionTable& trans, double lhs_prob,
                                double tol) {
  using enum Sign;
  if (!(lhs_prob >= 0.0))
    throw std::domain_error("dynamic_wigner: lhs_prob must be >= 0");
  for (double v : {trans.a_pp, trans.a_mp, trans.b_pp, trans.b_mp})
    if (!(v >= 0.0))
      throw std::domain_error("dynamic_wigner: negative transition probability");
  const double b_sum = trans.b_pp + trans.b_mp;
  const double a_sum = trans.a_pp + trans.a_mp;
  const double rhs =
      trans.a_pp * b_sum * t0_table.w(AxisPair::ac, plus, plus) +
      trans.a_mp * b_sum * t0_table.w(AxisPair::ac, minus, plus) +
      trans.b_pp * a_sum * t0_table.w(AxisPair::cb, plus, plus) +
      trans.b_mp * a_sum * t0_table.w(AxisPair::cb, plus, minus);
  return make_report(lhs_prob, rhs, tol);
}

namespace {

Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

constexpr Sign signs[2] = {Sign::plus, Sign::minus};

}  // namespace

JointProbabilityTable lhv_table(const HiddenVariableModel& model) {
  using enum Sign;
  JointProbabilityTable t{};
  // (alpha, beta, gamma) are the antifermion's signs along (a, b, c); the
  // fermion's are the opposites.
  for (Sign s2 : signs)
    for (Sign s1 : signs) {
      double w_ab = 0.0, w_cb = 0.0, w_ac = 0.0;
      for (Sign free : signs) {
        w_ab += model.weight[HiddenVariableModel::index(flip(s2), s1, free)];
        w_cb += model.weight[HiddenVariableModel::index(free, s1, flip(s2))];
        w_ac += model.weight[HiddenVariableModel::index(flip(s2), free, s1)];
      }
      t.w(AxisPair::ab, s2, s1) = w_ab;
      t.w(AxisPair::cb, s2, s1) = w_cb;
      t.w(AxisPair::ac, s2, s1) = w_ac;
    }
  return t;
}

std::pair<JointProbabilityTable, double> lhv_dynamic_operands(
    const HiddenVariableModel& model, const TransitionTable& trans) {
  using enum Sign;
  JointProbabilityTable t = lhv_table(model);
  const double lhs =
      trans.a_pp * trans.b_pp * t.w(AxisPair::ab, plus, plus) +
      trans.a_mp * trans.b_pp * t.w(AxisPair::ab, minus, plus) +
      trans.a_pp * trans.b_mp * t.w(AxisPair::ab, plus, minus) +
      trans.a_mp * trans.b_mp * t.w(AxisPair::ab, minus, minus);
  return {t, lhs};
}

double lhv_trial_margin(const HiddenVariableModel& model,
                        const TransitionTable& trans) {
  const auto [table, lhs] = lhv_dynamic_operands(model, trans);
  double worst = dynamic_wigner(table, trans, lhs).margin;
  for (int v = 0; v < 4; ++v)
    worst = std::max(worst, static_wigner(table, v).margin);
  return worst;
}

namespace {

double fuzz_one_trial(std::uint64_t seed, std::uint64_t trial) {
  CounterRng rng(seed, trial);
  HiddenVariableModel model;
  double sum = 0.0;
  for (double& w : model.weight) {
    w = rng.uniform();
    sum += w;
  }
  for (double& w : model.weight) w /= sum;
  TransitionTable trans{rng.uniform(), rng.uniform(), rng.uniform(),
                        rng.uniform()};
  return lhv_trial_margin(model, trans);
}

FuzzSummary fuzz_common(std::size_t n, std::uint64_t seed, double tol,
                        bool parallel) {
  if (n < 1) throw std::invalid_argument("fuzz_lhv: n must be >= 1");
  double max_margin = -1e300;
  std::size_t worst = 0;

#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel
    {
      double local_max = -1e300;
      std::size_t local_worst = 0;
#pragma omp for nowait schedule(static)
      for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const double m = fuzz_one_trial(seed, static_cast<std::uint64_t>(i));
        if (m > local_max ||
            (m == local_max && static_cast<std::size_t>(i) < local_worst)) {
          local_max = m;
          local_worst = static_cast<std::size_t>(i);
        }
      }
#pragma omp critical
      {
        if (local_max > max_margin ||
            (local_max == max_margin && local_worst < worst)) {
          max_margin = local_max;
          worst = local_worst;
        }
      }
    }
  } else
#endif
  {
    (void)parallel;
    for (std::size_t i = 0; i < n; ++i) {
      const double m = fuzz_one_trial(seed, i);
      if (m > max_margin) {
        max_margin = m;
        worst = i;
      }
    }
  }

  FuzzSummary s;
  s.trials = n;
  s.max_margin = max_margin;
  s.worst_trial = worst;
  s.tolerance = tol;
  s.any_violation = max_margin > tol;
  return s;
}

}  // namespace

FuzzSummary fuzz_lhv(std::size_t n, std::uint64_t seed, double tol) {
  return fuzz_common(n, seed, tol, true);
}

FuzzSummary fuzz_lhv_reference(std::size_t n, std::uint64_t seed, double tol) {
  return fuzz_common(n, seed, tol, false);
}

}
