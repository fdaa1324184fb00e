#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <variant>
#include <vector>

namespace zenosq {

// G(w) = eta * w / [1 + (w / omega_s)^2]^4, an atomic transition with a
// high-frequency form-factor cutoff.
struct HydrogenLike {
  double eta = 0.0;
  double omega_s = 1.0;
  bool operator==(const HydrogenLike&) const = default;
};

// G(w) = 2 chi w / (w^2 + lambda^2) in units of omega_q: intrinsic
// low-frequency noise of a superconducting circuit.
struct LowFrequency {
  double chi = 0.0;
  double lambda = 1.0;
  bool operator==(const LowFrequency&) const = default;
};

struct SpectralPoint {
  double omega = 0.0;
  double value = 0.0;
  bool operator==(const SpectralPoint&) const = default;
};

// Piecewise-linear density through the given points.
struct Tabulated {
  std::vector<SpectralPoint> points;
  bool operator==(const Tabulated&) const = default;
};

struct CombMode {
  double omega = 0.0;
  double coupling = 0.0;  // f_k
  bool operator==(const CombMode&) const = default;
};

// Finite set of bath modes, G(w) = sum_k f_k^2 delta(w - w_k).
struct DiscreteComb {
  std::vector<CombMode> modes;
  bool operator==(const DiscreteComb&) const = default;
};

using SpectralDensity =
    std::variant<HydrogenLike, LowFrequency, Tabulated, DiscreteComb>;

// Throws DomainError when parameters break the variant's invariants.
void validate(const SpectralDensity& spec);

bool is_continuum(const SpectralDensity& spec);

// Density at omega. RangeError outside a table, VariantError for combs.
double spectral_value(const SpectralDensity& spec, double omega);

// Upper bound of G on [omega, inf) for continuum variants. Tables vanish past
// their last point.
double spectral_tail_sup(const SpectralDensity& spec, double omega);

// Two whitespace-separated columns (omega value); '#' starts a comment line.
Tabulated parse_tabulated(std::istream& in);
Tabulated load_tabulated(const std::filesystem::path& path);

enum class SincConvention {
  kUnnormalized,  // sin(x) / x
  kNormalized,    // sin(pi x) / (pi x)
};

double sinc(double x, SincConvention convention = SincConvention::kUnnormalized);

// F(w) = (tau / 2 pi) sinc^2[(w - omega_q) tau / 2].
struct FilterSpec {
  double tau = 1.0;
  double omega_q = 1.0;
  SincConvention convention = SincConvention::kUnnormalized;

  void validate() const;
  // Spacing of the filter zeros: 2 pi / tau, or 2 / tau when normalized.
  double lobe_width() const;
  // c such that F(w) <= (tau / 2 pi) / (c (w - omega_q) tau / 2)^2.
  double envelope_scale() const;

  bool operator==(const FilterSpec&) const = default;
};

double filter_value(const FilterSpec& filter, double omega);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool operator==(const Interval&) const = default;
};

// Panels covering [omega_min, omega_q + max_lobes * lobe_width] split at the
// filter zeros omega_q +- n * lobe_width (n = 1..max_lobes) that lie inside.
std::vector<Interval> filter_lobes(const FilterSpec& filter, double omega_min,
                                   std::size_t max_lobes);

enum class CombWeighting {
  kCellIntegral,  // f_k^2 = integral of G over the cell
  kMidpoint,      // f_k^2 = G(omega_k) * delta_omega
};

struct BathDiscretization {
  std::vector<CombMode> modes;
  double omega_lo = 0.0;
  double omega_hi = 0.0;
  double delta_omega = 0.0;
  // Transition frequency the comb was built around; bath phases in the
  // oracle evolve with w_k - omega_q.
  double omega_q = 1.0;

  DiscreteComb comb() const { return DiscreteComb{modes}; }
  double total_weight() const;  // sum f_k^2
};

// Uniform midpoint grid over [max(0, omega_q - L W), omega_q + L W] with
// modes_per_lobe cells per lobe width W.
BathDiscretization discretize_bath(
    const SpectralDensity& spec, const FilterSpec& filter,
    std::size_t lobes_each_side, std::size_t modes_per_lobe,
    CombWeighting weighting = CombWeighting::kCellIntegral);

}  // namespace zenosq
