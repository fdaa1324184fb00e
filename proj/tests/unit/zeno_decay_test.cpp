#include "zenosq/zeno_decay.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "zenosq/errors.hpp"
#include "zenosq/scenarios.hpp"

namespace zenosq {
namespace {

// Reference rates from an independent 30-digit lobe-by-lobe quadrature with
// an averaged 1/w^2 tail (tau = 1, omega_q = 1).
constexpr double kLowFreqNormalized = 5.1226751351e-4;
constexpr double kLowFreqUnnormalized = 8.3254135469e-4;
constexpr double kHydrogenNormalized = 1.8425103493e-8;
constexpr double kHydrogenUnnormalized = 9.9521129178e-8;

FilterSpec filter(SincConvention c, double tau = 1.0) { return {tau, 1.0, c}; }

TEST(GammaCavity, ResonantAndDetuned) {
  SqueezedFrame f;
  f.g_s = 0.02;
  f.delta_q = 0.4;
  f.delta_s = 0.4;
  EXPECT_NEAR(gamma_cavity(f, 2.0), 0.02 * 0.02 * 2.0, 1e-18);
  f.delta_s = 0.4 + std::numbers::pi;  // first zero for tau = 2
  EXPECT_NEAR(gamma_cavity(f, 2.0), 0.0, 1e-20);
  f.delta_s = 1.4;
  EXPECT_NEAR(gamma_cavity(f, 1.0, SincConvention::kNormalized),
              0.0004 * 0.405284734569351, 1e-16);
}

TEST(GammaCavityUndriven, ReferenceChoice) {
  SqueezedFrame f;
  f.delta_q = 0.2;
  f.delta_c = 0.2 + std::numbers::pi;
  EXPECT_DOUBLE_EQ(gamma_cavity_undriven(f, 1e-3, 1.0, UndrivenReference::kResonant), 1e-6);
  const double detuned =
      gamma_cavity_undriven(f, 1e-3, 1.0, UndrivenReference::kDetuned);
  const double s = std::sin(std::numbers::pi / 2) / (std::numbers::pi / 2);
  EXPECT_NEAR(detuned, 1e-6 * s * s, 1e-20);
}

TEST(GammaEnv, PresetSpectraAgreeWithReference) {
  const SpectralDensity lf = LowFrequency{1e-4, 0.05};
  const SpectralDensity hy = HydrogenLike{6.4e-9, 550.0};
  const auto check = [](const SpectralDensity& s, SincConvention c, double ref) {
    const EnvRate r = gamma_env(s, filter(c), 1e-10);
    EXPECT_NEAR(r.value / ref, 1.0, 2e-8);
    EXPECT_GT(r.abs_error, 0.0);
    EXPECT_LT(r.abs_error, 1e-8 * ref);
    EXPECT_GT(r.lobes_used, 1u);
  };
  check(lf, SincConvention::kNormalized, kLowFreqNormalized);
  check(lf, SincConvention::kUnnormalized, kLowFreqUnnormalized);
  check(hy, SincConvention::kNormalized, kHydrogenNormalized);
  check(hy, SincConvention::kUnnormalized, kHydrogenUnnormalized);
}

TEST(GammaEnv, WindowMatchesTrapezoidOracle) {
  const SpectralDensity lf = LowFrequency{1e-4, 0.05};
  const FilterSpec f = filter(SincConvention::kUnnormalized);
  const EnvRate window = gamma_env_window(lf, f, 20, 1e-12);
  const double hi = 1.0 + 20.0 * f.lobe_width();
  const double trap = oracle::trapezoid_rate(
      [](double w) { return oracle::low_frequency(1e-4, 0.05, w); }, 1.0, 1.0, false,
      0.0, hi, 2'000'001);
  EXPECT_NEAR(window.value / trap, 1.0, 1e-6);
}

TEST(GammaEnv, SingleResonantModeIsClosedForm) {
  const SpectralDensity comb = DiscreteComb{{{1.0, 0.03}}};
  const EnvRate r = gamma_env(comb, filter(SincConvention::kUnnormalized, 2.5));
  EXPECT_NEAR(r.value, 0.03 * 0.03 * 2.5, 1e-12 * 0.03 * 0.03 * 2.5);
  EXPECT_EQ(r.abs_error, 0.0);
}

TEST(GammaEnv, CombSumsModes) {
  const SpectralDensity comb = DiscreteComb{{{0.5, 0.1}, {1.0, 0.2}, {3.0, 0.1}}};
  const double expected = oracle::filter_weight(0.5, 1.0, 1.0, false) * 0.01 +
                          0.04 + oracle::filter_weight(3.0, 1.0, 1.0, false) * 0.01;
  EXPECT_NEAR(gamma_env(comb, filter(SincConvention::kUnnormalized)).value, expected,
              1e-16);
}

TEST(GammaEnv, ZeroSpectrumIsZero) {
  EXPECT_EQ(gamma_env(LowFrequency{0.0, 0.05}, filter(SincConvention::kNormalized)).value,
            0.0);
  EXPECT_EQ(gamma_env(DiscreteComb{}, filter(SincConvention::kNormalized)).value, 0.0);
}

TEST(GammaEnv, TabulatedTriangle) {
  // Triangle of height 1 on [0.5, 1.5]; its integral against tau sinc^2 with
  // tau tiny approaches tau * area = 0.5 tau.
  const SpectralDensity t = Tabulated{{{0.5, 0.0}, {1.0, 1.0}, {1.5, 0.0}}};
  const double tau = 1e-3;
  const EnvRate r = gamma_env(t, filter(SincConvention::kUnnormalized, tau), 1e-10);
  EXPECT_NEAR(r.value / (0.5 * tau), 1.0, 1e-6);
}

TEST(GammaEnv, TooFewLobesIsConvergenceError) {
  EXPECT_THROW(gamma_env(HydrogenLike{6.4e-9, 550.0}, filter(SincConvention::kNormalized),
                         1e-10, 5),
               ConvergenceError);
  EXPECT_THROW(gamma_env(LowFrequency{1e-4, 0.05}, filter(SincConvention::kNormalized), 2.0),
               DomainError);
}

TEST(DecayBreakdown, DriveOnAndOff) {
  const Scenario s = circuit_preset();
  const SqueezedFrame frame = squeezed_frame(s.lab);
  const DecayBreakdown on =
      decay_breakdown(frame, s.lab.g, s.spectrum, s.filter(), true);
  const DecayBreakdown off =
      decay_breakdown(frame, s.lab.g, s.spectrum, s.filter(), false);
  EXPECT_TRUE(on.drive_on);
  EXPECT_FALSE(off.drive_on);
  EXPECT_NEAR(on.gamma_c, 1e-6 * std::cosh(10.0) * std::cosh(10.0), 1e-9 * on.gamma_c);
  EXPECT_DOUBLE_EQ(off.gamma_c, 1e-6);
  EXPECT_EQ(on.gamma_e, off.gamma_e);
  EXPECT_DOUBLE_EQ(on.gamma_total, on.gamma_c + on.gamma_e);
  EXPECT_NEAR(on.gamma_e / kLowFreqNormalized, 1.0, 1e-7);
}

TEST(DecayBreakdown, EverythingZeroWithoutCouplings) {
  const DecayBreakdown b = decay_breakdown(squeezed_frame(LabFrameParams{}), 0.0,
                                           LowFrequency{0.0, 0.05}, FilterSpec{}, true);
  EXPECT_EQ(b.gamma_total, 0.0);
}

TEST(SurvivalProbability, ExponentialAtMeasurementTimes) {
  const SurvivalCurve c = survival_probability(1.213 / 2.0, MeasurementProtocol{2.0, 3});
  ASSERT_EQ(c.times.size(), 4u);
  EXPECT_EQ(c.probabilities[0], 1.0);
  EXPECT_NEAR(c.probabilities[1], 0.297304028138473, 1e-15);
  EXPECT_DOUBLE_EQ(c.times[3], 6.0);
  for (std::size_t m = 1; m < c.probabilities.size(); ++m) {
    EXPECT_LT(c.probabilities[m], c.probabilities[m - 1]);
  }
  EXPECT_THROW(survival_probability(-1.0, {}), DomainError);
  EXPECT_THROW(survival_probability(1.0, MeasurementProtocol{1.0, 0}), DomainError);
  EXPECT_THROW(survival_probability(1.0, MeasurementProtocol{0.0, 1}), DomainError);
}

SweepContext circuit_context(std::size_t workers) {
  const Scenario s = circuit_preset();
  SweepContext ctx;
  ctx.lab = s.lab;
  ctx.spectrum = s.spectrum;
  ctx.filter = s.filter();
  ctx.workers = workers;
  return ctx;
}

TEST(ParameterSweep, RowsFollowGridAndFlagInvalidPoints) {
  const std::vector<double> grid = {0.5, -1.0, 2.0, 0.0};
  const auto rows = parameter_sweep(SweepAxis::kSqueezing, grid, circuit_context(2));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_TRUE(rows[0].valid);
  EXPECT_FALSE(rows[1].valid);
  EXPECT_NE(rows[1].error.find("DomainError"), std::string::npos);
  EXPECT_TRUE(std::isnan(rows[1].gamma_c));
  EXPECT_TRUE(rows[2].valid);
  EXPECT_FALSE(rows[3].valid);
  EXPECT_DOUBLE_EQ(rows[2].value, 2.0);
  EXPECT_NEAR(rows[2].gamma_c_over_gamma_e * rows[2].gamma_e_over_gamma_c_wo,
              std::pow(std::cosh(2.0), 2), 1e-10 * std::pow(std::cosh(2.0), 2));
}

TEST(ParameterSweep, EmptyGrid) {
  EXPECT_TRUE(parameter_sweep(SweepAxis::kCoupling, {}, circuit_context(1)).empty());
}

TEST(ParameterSweep, TauAxisRecomputesEnvironment) {
  const std::vector<double> grid = {0.5, 1.0, 0.0};
  const auto rows = parameter_sweep(SweepAxis::kTau, grid, circuit_context(3));
  EXPECT_NE(rows[0].gamma_e, rows[1].gamma_e);
  EXPECT_NEAR(rows[1].gamma_e / kLowFreqNormalized, 1.0, 1e-7);
  EXPECT_FALSE(rows[2].valid);
}

TEST(ParameterSweep, DriveAxisPastThresholdIsInvalid) {
  SweepContext ctx = circuit_context(1);
  ctx.lab.threshold_gap.reset();
  const double dc = rotating_detunings(ctx.lab).delta_c;
  const std::vector<double> grid = {0.5 * dc, dc, 2.0 * dc};
  const auto rows = parameter_sweep(SweepAxis::kDrive, grid, ctx);
  EXPECT_TRUE(rows[0].valid);
  EXPECT_FALSE(rows[1].valid);
  EXPECT_FALSE(rows[2].valid);
}

TEST(ParameterSweep, SharedEnvironmentFailureMarksEveryRow) {
  SweepContext ctx = circuit_context(1);
  ctx.max_lobes = 2;
  ctx.spectrum = HydrogenLike{6.4e-9, 550.0};
  const std::vector<double> grid = {1e-6, 1e-5};
  for (const SweepRow& r : parameter_sweep(SweepAxis::kCoupling, grid, ctx)) {
    EXPECT_FALSE(r.valid);
    EXPECT_EQ(r.error.rfind("ConvergenceError", 0), 0u);
  }
}

TEST(ParameterSweep, IndependentOfWorkerCount) {
  std::vector<double> grid;
  for (int i = 0; i < 40; ++i) grid.push_back(0.05 + 0.3 * i);
  const auto serial = parameter_sweep(SweepAxis::kTau, grid, circuit_context(1));
  const auto threaded = parameter_sweep(SweepAxis::kTau, grid, circuit_context(8));
  ASSERT_EQ(serial.size(), threaded.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].gamma_e, threaded[i].gamma_e);
    EXPECT_EQ(serial[i].gamma_c, threaded[i].gamma_c);
  }
}

// Property: at resonance the ratio product is cosh^2(r_s), whatever the
// spectrum, coupling or interval.
TEST(RatioProperties, ProductIsCoshSquaredForRandomResonantSets) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> r(0.05, 10.0);
  std::uniform_real_distribution<double> log_g(-8.0, -2.0);
  std::uniform_real_distribution<double> tau(0.2, 5.0);
  std::uniform_real_distribution<double> log_chi(-6.0, -3.0);
  for (int trial = 0; trial < 60; ++trial) {
    Scenario s = circuit_preset();
    const double rs = r(rng);
    s.lab = resonant_lab(oracle::admissible_cavity(rs, unit(rng)), std::pow(10.0, log_g(rng)),
                         rs);
    s.protocol.tau = tau(rng);
    s.convention = trial % 2 ? SincConvention::kNormalized : SincConvention::kUnnormalized;
    if (trial % 3 == 0) {
      s.spectrum = HydrogenLike{std::pow(10.0, log_chi(rng)), 550.0};
    } else {
      s.spectrum = LowFrequency{std::pow(10.0, log_chi(rng)), 0.05};
    }
    const PaperRatios p = reproduce_paper_ratios(s);
    const double c = std::cosh(squeezed_frame(s.lab).r_s);
    ASSERT_NEAR(p.gamma_c_over_gamma_e * p.gamma_e_over_gamma_c_wo / (c * c), 1.0, 1e-10);
  }
}

// Property: gamma_env grows monotonically with the spectrum prefactor and is
// linear in it.
TEST(RatioProperties, EnvironmentRateIsLinearInPrefactor) {
  const FilterSpec f = filter(SincConvention::kNormalized, 0.7);
  const double base = gamma_env(LowFrequency{1e-4, 0.05}, f, 1e-10).value;
  for (double k : {0.5, 3.0, 40.0}) {
    EXPECT_NEAR(gamma_env(LowFrequency{k * 1e-4, 0.05}, f, 1e-10).value / (k * base), 1.0,
                1e-8);
  }
}

}  // namespace
}  // namespace zenosq
