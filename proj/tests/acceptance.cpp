// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned; stated runtime limits are enforced.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <string>

#include "wignerlab/meson.hpp"
#include "wignerlab/qft.hpp"
#include "wignerlab/qm2.hpp"
#include "wignerlab/quad.hpp"
#include "wignerlab/rng.hpp"
#include "wignerlab/scan.hpp"
#include "wignerlab/specfun.hpp"
#include "wignerlab/spin.hpp"
#include "wignerlab/wigner.hpp"

namespace {

using namespace wignerlab;
constexpr double pi = std::numbers::pi;

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

void verdict(int number, const std::string& name, bool ok,
             const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", number,
              name.c_str(), detail.c_str());
  if (!ok) ++failures;
}

double sin2(double x) { return std::sin(x) * std::sin(x); }

void criterion_1() {
  const Timer timer;
  const auto rep = spin::model_inequality({2 * pi / 3, pi / 3, pi / 3, 0.0});
  const double ms = timer.ms();
  const bool ok = std::fabs(rep.lhs - 0.75) <= 1e-12 &&
                  std::fabs(rep.rhs - 0.5) <= 1e-12 &&
                  std::fabs(rep.margin - 0.25) <= 1e-12 && ms < 1.0;
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "lhs=%.15g rhs=%.15g margin=%.15g in %.3f ms", rep.lhs,
                rep.rhs, rep.margin, ms);
  verdict(1, "static maximal violation", ok, detail);
}

void criterion_2() {
  const auto rep =
      spin::model_inequality({4 * pi / 3, 2 * pi / 3, 2 * pi / 3, pi / 2});
  const double sum =
      sin2(2 * pi / 3) + sin2(pi / 3) + sin2(pi / 3);
  const bool ok = std::fabs(sum - 2.25) <= 1e-12 &&
                  std::fabs(rep.margin - 0.25) <= 1e-12;
  char detail[96];
  std::snprintf(detail, sizeof detail, "sum=%.15g margin=%.15g", sum,
                rep.margin);
  verdict(2, "symmetric-axes case", ok, detail);
}

void criterion_3() {
  const auto direct =
      spin::model_inequality(spin::symmetric_family(spin::max_violation_angle()));
  const Timer timer;
  const scan::Evaluator family = [](std::span<const double> p) {
    return spin::model_inequality(spin::symmetric_family(p[0]));
  };
  const auto opt =
      scan::maximize_violation(family, {{"theta", 0.0, pi / 2, 31}}, 60);
  const double ms = timer.ms();
  const bool ok = std::fabs(direct.margin - 0.5625) <= 1e-10 &&
                  std::fabs(opt.margin - 0.5625) <= 1e-9 && ms < 10'000.0;
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "direct=%.12g optimized=%.12g in %.0f ms", direct.margin,
                opt.margin, ms);
  verdict(3, "field-assisted maximum 9/16", ok, detail);
}

void criterion_4() {
  const double root = spin::delta_threshold();
  const double k0 = spin::kappa(0.0);
  const auto best = spin::symmetric_family(spin::max_violation_angle());
  double worst = 0.0;
  for (double delta = 0.02; delta <= 2.0; delta += 0.02) {
    const auto f = [&](double tau) {
      return sin2(0.5 * best.theta_ba + 2 * tau) - 2 * sin2(tau) -
             std::cos(2 * tau) *
                 (sin2(0.5 * best.theta_ca) + sin2(0.5 * best.theta_bc));
    };
    const double oracle = quad::adaptive_simpson(f, best.omega_t - delta,
                                                 best.omega_t + delta, 1e-12) /
                          (2 * delta);
    worst = std::max(worst, std::fabs(spin::kappa(delta) - oracle));
  }
  const bool ok = root >= 0.69 && root <= 0.70 &&
                  std::fabs(k0 - 0.5625) <= 1e-15 && worst <= 1e-9;
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "root=%.6f K(0)=%.16g max|K-oracle|=%.3g", root, k0, worst);
  verdict(4, "resolution threshold and K(delta) oracle", ok, detail);
}

void criterion_5() {
  const Timer timer;
  CounterRng rng(2024, 0);
  double worst = -1.0;
  // classical bound is a theorem on the physical ensemble |p| = |q| = 1/sqrt(2)
  const double r = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < 10'000; ++i) {
    const auto mp = meson::MesonParams::make(
        0.9, 1.1, -0.4, 0.4, std::polar(r, rng.uniform() * 2 * pi),
        std::polar(r, rng.uniform() * 2 * pi), rng.uniform() * 2 * pi);
    worst = std::max(worst,
                     meson::static_inequality(
                         mp, meson::Orientation::bbar_plus).margin);
    worst = std::max(
        worst,
        meson::static_inequality(mp, meson::Orientation::b_plus).margin);
  }
  const auto equal_case = meson::MesonParams::symmetric(1.0, 0.1, 0.5, 0.8);
  const double eq_margin =
      meson::static_inequality(equal_case, meson::Orientation::bbar_plus)
          .margin;
  const double ms = timer.ms();
  const bool ok = worst <= 1e-12 && std::fabs(eq_margin) <= 1e-12 &&
                  ms < 1000.0;
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "max margin=%.3g equality margin=%.3g in %.0f ms", worst,
                eq_margin, ms);
  verdict(5, "meson static theorem", ok, detail);
}

void criterion_6() {
  double worst_closed = 0.0, worst_alpha = 0.0;
  bool direction_ok = true;
  for (double gamma : {0.7, 1.0, 1.5})
    for (double dg : {-0.3, 0.0, 0.1, 0.4})
      for (double dm : {0.0, 0.77, 3.0})
        for (double t : {0.2, 1.0, 2.5}) {
          const auto mp = meson::MesonParams::symmetric(gamma, dg, dm, 0.6);
          const auto rep = meson::dynamic_inequality(t, mp);
          worst_closed = std::max(
              worst_closed, std::fabs(rep.rhs / rep.lhs -
                                      0.5 * (1.0 + std::exp(-dg * t))));
          if (rep.violated != (dg > 0.0)) direction_ok = false;
        }
  CounterRng rng(9, 0);
  const auto base = meson::MesonParams::symmetric(1.0, 0.2, 0.77, 0.0);
  const double ref = meson::dynamic_inequality(1.1, base).margin;
  for (int i = 0; i < 100; ++i) {
    const auto rot = meson::MesonParams::symmetric(1.0, 0.2, 0.77,
                                                   rng.uniform() * 2 * pi);
    worst_alpha = std::max(
        worst_alpha,
        std::fabs(meson::dynamic_inequality(1.1, rot).margin - ref));
  }
  const bool ok = worst_closed <= 1e-12 && direction_ok && worst_alpha <= 1e-12;
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "closed-form diff=%.3g alpha diff=%.3g direction %s",
                worst_closed, worst_alpha, direction_ok ? "ok" : "wrong");
  verdict(6, "meson dynamic reduction", ok, detail);
}

void criterion_7() {
  const Timer timer;
  const double small = 1e-4 * (qft::rate_bracket(1e-4) - 0.5);
  const double large = std::fabs(qft::rate_bracket(1e3) - 1.0);
  double worst_si = 0.0;
  for (double x = 1e-3; x <= 1e4; x *= 1.5)
    worst_si = std::max(
        worst_si, std::fabs(specfun::si(x) - specfun::si_oracle(x, 1e-12)));
  const double ms = timer.ms();
  const bool ok = std::fabs(small - 2.0 / pi) <= 1e-4 && large <= 2e-3 &&
                  worst_si <= 1e-11 && ms < 5000.0;
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "x(b-1/2)=%.6f |b(1e3)-1|=%.2g max|si-oracle|=%.3g in %.0f ms",
                small, large, worst_si, ms);
  verdict(7, "qft regimes", ok, detail);
}

void criterion_8() {
  const auto point = qft::ratio_inequality(1.0, 2 * pi / 3, pi / 3, pi / 3);
  const auto f1 = qft::violation_region_fraction(1.0, 1'000'000, 2024);
  const auto f2 = qft::violation_region_fraction(2.0, 1'000'000, 2024);
  const auto f4 = qft::violation_region_fraction(4.0, 1'000'000, 2024);
  const auto separated = [](const qft::RegionFraction& lo,
                            const qft::RegionFraction& hi) {
    return hi.fraction - lo.fraction >
           5.0 * std::sqrt(lo.std_error * lo.std_error +
                           hi.std_error * hi.std_error);
  };
  const bool ok = std::fabs(point.margin - 0.25) <= 1e-12 &&
                  separated(f1, f2) && separated(f2, f4);
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "margin=%.15g fractions=%.4f(%.1g) %.4f(%.1g) %.4f(%.1g)",
                point.margin, f1.fraction, f1.std_error, f2.fraction,
                f2.std_error, f4.fraction, f4.std_error);
  verdict(8, "ratio inequality and violating region", ok, detail);
}

void criterion_9() {
  const Timer timer;
  const auto summary = fuzz_lhv(100'000, 2024);
  double corner_worst = -1.0;
  for (int m = 0; m < 8; ++m) {
    const auto model = HiddenVariableModel::point_mass(
        static_cast<Sign>((m >> 2) & 1), static_cast<Sign>((m >> 1) & 1),
        static_cast<Sign>(m & 1));
    for (int t = 0; t < 16; ++t)
      corner_worst = std::max(
          corner_worst,
          lhv_trial_margin(model, {double((t >> 3) & 1), double((t >> 2) & 1),
                                   double((t >> 1) & 1), double(t & 1)}));
  }
  const double ms = timer.ms();
  const bool ok = !summary.any_violation && summary.max_margin <= 1e-12 &&
                  corner_worst <= 1e-12 && ms < 10'000.0;
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "fuzz max=%.3g corners max=%.3g in %.0f ms",
                summary.max_margin, corner_worst, ms);
  verdict(9, "classical soundness", ok, detail);
}

void criterion_10() {
  double worst_spin = 0.0;
  for (int ia = 0; ia < 20; ++ia)
    for (int ib = 0; ib < 20; ++ib)
      for (int ic = 0; ic < 20; ++ic)
        for (int it = 0; it < 20; ++it) {
          const double ta = ia * 2 * pi / 20, tb = ib * 2 * pi / 20,
                       tc = ic * 2 * pi / 20, wt = it * pi / 20;
          const auto w = spin::probabilities_in_field(
              {tb - ta, tc - ta, tb - tc, wt});
          const auto psi = qm2::pair_state_at(wt);
          worst_spin = std::max(
              worst_spin,
              std::fabs(w.w_ab - qm2::joint_probability(
                                     psi, qm2::spinor_plus({ta}),
                                     qm2::spinor_plus({tb}))));
          worst_spin = std::max(
              worst_spin,
              std::fabs(w.w_ac - qm2::joint_probability(
                                     psi, qm2::spinor_minus({ta}),
                                     qm2::spinor_plus({tc}))));
          worst_spin = std::max(
              worst_spin,
              std::fabs(w.w_cb - qm2::joint_probability(
                                     psi, qm2::spinor_plus({tc}),
                                     qm2::spinor_minus({tb}))));
        }

  // meson closed forms vs an amplitude oracle in the flavour basis
  using meson::Complex;
  const auto cdot = [](const Complex x[2], const Complex v[2]) {
    return std::conj(x[0]) * v[0] + std::conj(x[1]) * v[1];
  };
  double worst_meson = 0.0;
  for (double dg : {-0.2, 0.0, 0.3})
    for (double dm : {0.0, 0.77, 2.0})
      for (double t : {0.1, 0.8, 2.0}) {
        const auto mp = meson::MesonParams::symmetric(1.0, dg, dm, 0.7);
        const Complex gp = meson::g_plus(t, mp), gm = meson::g_minus(t, mp);
        const Complex e = std::polar(1.0, mp.alpha);
        const double rt2 = std::sqrt(2.0);
        // flavour-basis kets
        const Complex b1_ket[2] = {1.0 / rt2, -e / rt2};
        const Complex b2_ket[2] = {1.0 / rt2, e / rt2};
        const Complex bh_ket[2] = {mp.p, -mp.q};
        // evolved flavour states:
        // |B(t)> = (g+, -(q/p) g-), |Bbar(t)> = (-(p/q) g-, g+)
        const Complex b_t[2] = {gp, -(mp.q / mp.p) * gm};
        const Complex bbar_t[2] = {-(mp.p / mp.q) * gm, gp};
        const Complex b1_t[2] = {(b_t[0] - e * bbar_t[0]) / rt2,
                                 (b_t[1] - e * bbar_t[1]) / rt2};

        const auto w = meson::dynamic_probabilities(t, mp);
        worst_meson = std::max(
            worst_meson, std::fabs(w.b1_to_b1 - std::norm(cdot(b1_ket, b1_t))));
        worst_meson = std::max(
            worst_meson, std::fabs(w.b2_to_b1 - std::norm(cdot(b2_ket, b1_t))));
        worst_meson =
            std::max(worst_meson,
                     std::fabs(w.bbar_to_bbar - std::norm(bbar_t[1])));
        worst_meson = std::max(
            worst_meson, std::fabs(w.b_to_bbar - std::norm(bbar_t[0])));

        // pair probability on the antisymmetric flavour singlet, both
        // slots evolved independently
        const auto pair_prob = [&](const Complex x[2], const Complex y[2]) {
          const Complex amp = (cdot(x, b_t) * cdot(y, bbar_t) -
                               cdot(x, bbar_t) * cdot(y, b_t)) /
                              rt2;
          return std::norm(amp);
        };
        const Complex bbar_ket[2] = {0.0, 1.0};
        worst_meson = std::max(
            worst_meson,
            std::fabs(w.pair_b1_bbar - pair_prob(b1_ket, bbar_ket)));

        const auto ws = meson::static_probabilities(mp);
        const Complex id_b[2] = {1.0, 0.0};
        const Complex id_bbar[2] = {0.0, 1.0};
        // t = 0 closed forms against the same oracle with frozen evolution
        const Complex b0[2] = {1.0, 0.0}, bbar0[2] = {0.0, 1.0};
        const auto pair_prob0 = [&](const Complex x[2], const Complex y[2]) {
          const Complex amp = (cdot(x, b0) * cdot(y, bbar0) -
                               cdot(x, bbar0) * cdot(y, b0)) /
                              rt2;
          return std::norm(amp);
        };
        worst_meson = std::max(
            worst_meson, std::fabs(ws.b1_bh - pair_prob0(b1_ket, bh_ket)));
        worst_meson = std::max(
            worst_meson, std::fabs(ws.b2_bh - pair_prob0(b2_ket, bh_ket)));
        worst_meson = std::max(
            worst_meson, std::fabs(ws.bh_bbar - pair_prob0(bh_ket, id_bbar)));
        worst_meson = std::max(
            worst_meson, std::fabs(ws.bh_b - pair_prob0(bh_ket, id_b)));
      }

  const bool ok = worst_spin <= 1e-12 && worst_meson <= 1e-12;
  char detail[96];
  std::snprintf(detail, sizeof detail, "spin diff=%.3g meson diff=%.3g",
                worst_spin, worst_meson);
  verdict(10, "cross-oracle coherence", ok, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
