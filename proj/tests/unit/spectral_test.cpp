#include "zenosq/spectral.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "zenosq/errors.hpp"

namespace zenosq {
namespace {

TEST(SpectralValue, HydrogenLikeMatchesFormula) {
  const SpectralDensity h = HydrogenLike{6.4e-9, 550.0};
  for (double w : {0.0, 1.0, 100.0, 550.0, 5000.0}) {
    EXPECT_NEAR(spectral_value(h, w), oracle::hydrogen(6.4e-9, 550.0, w),
                1e-15 * oracle::hydrogen(6.4e-9, 550.0, w) + 1e-300);
  }
  // G(omega_q) ~ eta / (1 + (1/550)^2)^4
  EXPECT_NEAR(spectral_value(h, 1.0), 6.4e-9 / std::pow(1.0 + 1.0 / 302500.0, 4), 1e-22);
}

TEST(SpectralValue, LowFrequencyMatchesFormula) {
  const SpectralDensity l = LowFrequency{1e-4, 0.05};
  EXPECT_NEAR(spectral_value(l, 1.0), 2e-4 / 1.0025, 1e-16);
  EXPECT_NEAR(spectral_value(l, 1.0), 1.99501246882793e-4, 1e-17);
  EXPECT_EQ(spectral_value(l, 0.0), 0.0);
  // Peak at lambda with value chi / lambda.
  EXPECT_NEAR(spectral_value(l, 0.05), 1e-4 / 0.05, 1e-15);
}

TEST(SpectralValue, NegativeFrequencyIsDomainError) {
  EXPECT_THROW(spectral_value(LowFrequency{1e-4, 0.05}, -0.1), DomainError);
}

TEST(SpectralValue, CombHasNoPointwiseValue) {
  const SpectralDensity c = DiscreteComb{{{1.0, 0.1}}};
  EXPECT_THROW(spectral_value(c, 1.0), VariantError);
  EXPECT_FALSE(is_continuum(c));
  EXPECT_TRUE(is_continuum(LowFrequency{}));
}

TEST(Tabulated, LinearInterpolationAndRange) {
  const SpectralDensity t = Tabulated{{{0.0, 0.0}, {1.0, 2.0}, {3.0, 0.0}}};
  EXPECT_DOUBLE_EQ(spectral_value(t, 0.5), 1.0);
  EXPECT_DOUBLE_EQ(spectral_value(t, 2.0), 1.0);
  EXPECT_DOUBLE_EQ(spectral_value(t, 3.0), 0.0);
  EXPECT_THROW(spectral_value(t, 3.5), RangeError);
}

TEST(Tabulated, ParsesCommentsAndRejectsGarbage) {
  std::istringstream good("# omega value\n0 0\n\n1.5 2e-3\n  2 1e-3\n");
  const Tabulated t = parse_tabulated(good);
  ASSERT_EQ(t.points.size(), 3u);
  EXPECT_DOUBLE_EQ(t.points[1].value, 2e-3);

  std::istringstream three_columns("0 0 1\n1 1 1\n");
  EXPECT_THROW(parse_tabulated(three_columns), FormatError);
  std::istringstream text("0 zero\n");
  EXPECT_THROW(parse_tabulated(text), FormatError);
  std::istringstream decreasing("1 0\n0 1\n");
  EXPECT_THROW(parse_tabulated(decreasing), DomainError);
  EXPECT_THROW(load_tabulated("/nonexistent/spectrum.txt"), FormatError);
}

TEST(Validate, RejectsNegativeParameters) {
  EXPECT_THROW(validate(HydrogenLike{-1.0, 1.0}), DomainError);
  EXPECT_THROW(validate(HydrogenLike{1.0, 0.0}), DomainError);
  EXPECT_THROW(validate(LowFrequency{1.0, 0.0}), DomainError);
  EXPECT_THROW(validate(DiscreteComb{{{1.0, 0.1}, {0.5, 0.1}}}), DomainError);
  EXPECT_NO_THROW(validate(DiscreteComb{}));
}

TEST(TailSup, BoundsTheDensityBeyondTheCut) {
  const SpectralDensity h = HydrogenLike{1.0, 550.0};
  const SpectralDensity l = LowFrequency{1e-4, 0.05};
  for (double a : {0.0, 0.01, 1.0, 100.0, 300.0, 2000.0}) {
    for (double w = a; w < a + 5000.0; w += 7.3) {
      ASSERT_LE(spectral_value(h, w), spectral_tail_sup(h, a) * (1.0 + 1e-12));
      ASSERT_LE(spectral_value(l, w), spectral_tail_sup(l, a) * (1.0 + 1e-12));
    }
  }
  const SpectralDensity t = Tabulated{{{0.0, 0.0}, {1.0, 2.0}, {3.0, 0.5}}};
  EXPECT_DOUBLE_EQ(spectral_tail_sup(t, 2.0), 1.25);
  EXPECT_EQ(spectral_tail_sup(t, 4.0), 0.0);
}

TEST(Sinc, ConventionsAndSmallArgument) {
  EXPECT_EQ(sinc(0.0), 1.0);
  EXPECT_NEAR(sinc(std::numbers::pi), 0.0, 1e-16);
  EXPECT_NEAR(sinc(1.0, SincConvention::kNormalized), 0.0, 1e-16);
  EXPECT_NEAR(sinc(0.5), std::sin(0.5) / 0.5, 1e-16);
  EXPECT_NEAR(sinc(1e-5), std::sin(1e-5) / 1e-5, 1e-15);
  // On the normalized main lobe at x = 1/2, sinc = 2/pi.
  const double s = sinc(0.5, SincConvention::kNormalized);
  EXPECT_NEAR(s * s, 0.405284734569351, 1e-15);
}

TEST(Filter, PeakAreaAndLobes) {
  const FilterSpec f{1.0, 1.0, SincConvention::kUnnormalized};
  EXPECT_NEAR(filter_value(f, 1.0), 1.0 / (2.0 * std::numbers::pi), 1e-16);
  EXPECT_NEAR(filter_value(f, 1.0 + 2.0 * std::numbers::pi), 0.0, 1e-18);
  EXPECT_DOUBLE_EQ(f.lobe_width(), 2.0 * std::numbers::pi);
  const FilterSpec n{0.5, 1.0, SincConvention::kNormalized};
  EXPECT_DOUBLE_EQ(n.lobe_width(), 4.0);
  EXPECT_NEAR(filter_value(n, 5.0), 0.0, 1e-18);
  EXPECT_THROW((FilterSpec{0.0, 1.0}.validate()), DomainError);
}

TEST(Filter, EnvelopeBoundsTheFilter) {
  for (auto conv : {SincConvention::kUnnormalized, SincConvention::kNormalized}) {
    const FilterSpec f{0.7, 1.0, conv};
    const double c = f.envelope_scale();
    for (double w = 1.01; w < 200.0; w += 0.0137) {
      const double x = c * (w - 1.0) * f.tau / 2.0;
      ASSERT_LE(filter_value(f, w), f.tau / (2.0 * std::numbers::pi) / (x * x) * (1 + 1e-12));
    }
  }
}

TEST(FilterLobes, TileTheRangeBetweenZeros) {
  const FilterSpec f{1.0, 1.0, SincConvention::kNormalized};
  const auto lobes = filter_lobes(f, 0.0, 3);
  // zeros at 3 and 5; right edge 7; main lobe [0, 3] since 1 - 2 < 0.
  ASSERT_EQ(lobes.size(), 3u);
  EXPECT_EQ(lobes.front().lo, 0.0);
  EXPECT_DOUBLE_EQ(lobes[0].hi, 3.0);
  EXPECT_DOUBLE_EQ(lobes[1].hi, 5.0);
  EXPECT_DOUBLE_EQ(lobes[2].hi, 7.0);
  for (std::size_t i = 1; i < lobes.size(); ++i) {
    EXPECT_EQ(lobes[i].lo, lobes[i - 1].hi);
  }
  const FilterSpec narrow{10.0, 1.0, SincConvention::kNormalized};
  const auto both = filter_lobes(narrow, 0.0, 2);
  // zeros at 0.6, 0.8, 1.2 and edge 1.4
  ASSERT_EQ(both.size(), 4u);
  EXPECT_NEAR(both[1].lo, 0.6, 1e-15);
  EXPECT_NEAR(both[2].lo, 0.8, 1e-15);
  EXPECT_NEAR(both[2].hi, 1.2, 1e-15);
}

TEST(DiscretizeBath, CellWeightsIntegrateTheDensity) {
  const SpectralDensity l = LowFrequency{1e-4, 0.05};
  const FilterSpec f{1.0, 1.0, SincConvention::kNormalized};
  const BathDiscretization bath = discretize_bath(l, f, 4, 50);
  EXPECT_EQ(bath.omega_lo, 0.0);
  EXPECT_DOUBLE_EQ(bath.omega_hi, 9.0);
  EXPECT_EQ(bath.modes.size(), 225u);
  EXPECT_DOUBLE_EQ(bath.omega_q, 1.0);
  // Total weight = integral of 2 chi w / (w^2 + lambda^2) = chi ln(1 + (9/lambda)^2)
  const double exact = 1e-4 * std::log(1.0 + 81.0 / 0.0025);
  EXPECT_NEAR(bath.total_weight(), exact, 1e-12 * exact);
  for (std::size_t k = 1; k < bath.modes.size(); ++k) {
    ASSERT_NEAR(bath.modes[k].omega - bath.modes[k - 1].omega, bath.delta_omega, 1e-12);
  }
}

TEST(DiscretizeBath, MidpointWeights) {
  const SpectralDensity h = HydrogenLike{1e-3, 550.0};
  const FilterSpec f{1.0, 1.0};
  const BathDiscretization bath = discretize_bath(h, f, 2, 10, CombWeighting::kMidpoint);
  for (const auto& m : bath.modes) {
    const double expected = oracle::hydrogen(1e-3, 550.0, m.omega) * bath.delta_omega;
    ASSERT_NEAR(m.coupling * m.coupling, expected, 1e-14 * expected);
  }
}

TEST(DiscretizeBath, RejectsCombsAndZeroCounts) {
  const FilterSpec f;
  EXPECT_THROW(discretize_bath(DiscreteComb{}, f, 2, 2), VariantError);
  EXPECT_THROW(discretize_bath(LowFrequency{}, f, 0, 2), DomainError);
}

}  // namespace
}  // namespace zenosq
