#include "zenosq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "zenosq/errors.hpp"
#include "zenosq/quadrature.hpp"

namespace zenosq {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double hydrogen_value(const HydrogenLike& h, double omega) {
  const double u = omega / h.omega_s;
  const double d = 1.0 + u * u;
  const double d2 = d * d;
  return h.eta * omega / (d2 * d2);
}

double low_frequency_value(const LowFrequency& l, double omega) {
  return 2.0 * l.chi * omega / (omega * omega + l.lambda * l.lambda);
}

double table_value(const Tabulated& t, double omega) {
  const auto& pts = t.points;
  auto upper = std::upper_bound(
      pts.begin(), pts.end(), omega,
      [](double w, const SpectralPoint& p) { return w < p.omega; });
  if (upper == pts.begin()) return pts.front().value;  // omega == first
  if (upper == pts.end()) return pts.back().value;     // omega == last
  const SpectralPoint& a = *(upper - 1);
  const SpectralPoint& b = *upper;
  const double s = (omega - a.omega) / (b.omega - a.omega);
  return a.value + s * (b.value - a.value);
}

bool in_table(const Tabulated& t, double omega) {
  return omega >= t.points.front().omega && omega <= t.points.back().omega;
}

// Continuum density, treating a table as zero outside its support.
double density_or_zero(const SpectralDensity& spec, double omega) {
  if (const auto* t = std::get_if<Tabulated>(&spec)) {
    return in_table(*t, omega) ? table_value(*t, omega) : 0.0;
  }
  return spectral_value(spec, omega);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

void validate(const SpectralDensity& spec) {
  std::visit(
      Overloaded{
          [](const HydrogenLike& h) {
            require(std::isfinite(h.eta) && h.eta >= 0.0, "eta must be >= 0");
            require(std::isfinite(h.omega_s) && h.omega_s > 0.0,
                    "omega_s must be > 0");
          },
          [](const LowFrequency& l) {
            require(std::isfinite(l.chi) && l.chi >= 0.0, "chi must be >= 0");
            require(std::isfinite(l.lambda) && l.lambda > 0.0,
                    "lambda must be > 0");
          },
          [](const Tabulated& t) {
            require(t.points.size() >= 2, "table needs at least two points");
            for (std::size_t i = 0; i < t.points.size(); ++i) {
              const auto& p = t.points[i];
              require(std::isfinite(p.omega) && p.omega >= 0.0,
                      "table frequencies must be >= 0");
              require(std::isfinite(p.value) && p.value >= 0.0,
                      "table values must be >= 0");
              if (i > 0) {
                require(p.omega > t.points[i - 1].omega,
                        "table frequencies must be strictly increasing");
              }
            }
          },
          [](const DiscreteComb& c) {
            for (std::size_t i = 0; i < c.modes.size(); ++i) {
              const auto& m = c.modes[i];
              require(std::isfinite(m.omega) && m.omega >= 0.0,
                      "comb frequencies must be >= 0");
              require(std::isfinite(m.coupling) && m.coupling >= 0.0,
                      "comb couplings must be >= 0");
              if (i > 0) {
                require(m.omega > c.modes[i - 1].omega,
                        "comb frequencies must be strictly increasing");
              }
            }
          },
      },
      spec);
}

bool is_continuum(const SpectralDensity& spec) {
  return !std::holds_alternative<DiscreteComb>(spec);
}

double spectral_value(const SpectralDensity& spec, double omega) {
  if (!(omega >= 0.0)) {
    throw DomainError("spectral density evaluated at negative frequency");
  }
  return std::visit(
      Overloaded{
          [&](const HydrogenLike& h) { return hydrogen_value(h, omega); },
          [&](const LowFrequency& l) { return low_frequency_value(l, omega); },
          [&](const Tabulated& t) {
            if (!in_table(t, omega)) {
              throw RangeError("omega=" + std::to_string(omega) +
                               " outside tabulated range");
            }
            return table_value(t, omega);
          },
          [](const DiscreteComb&) -> double {
            throw VariantError(
                "a discrete comb has no pointwise density; integrate it "
                "in closed form");
          },
      },
      spec);
}

double spectral_tail_sup(const SpectralDensity& spec, double omega) {
  omega = std::max(omega, 0.0);
  return std::visit(
      Overloaded{
          [&](const HydrogenLike& h) {
            const double peak = h.omega_s / std::sqrt(7.0);
            return hydrogen_value(h, std::max(omega, peak));
          },
          [&](const LowFrequency& l) {
            return low_frequency_value(l, std::max(omega, l.lambda));
          },
          [&](const Tabulated& t) {
            if (omega > t.points.back().omega) return 0.0;
            double sup = in_table(t, omega) ? table_value(t, omega) : 0.0;
            for (const auto& p : t.points) {
              if (p.omega >= omega) sup = std::max(sup, p.value);
            }
            return sup;
          },
          [](const DiscreteComb&) -> double {
            throw VariantError("tail bound is defined for continuum spectra only");
          },
      },
      spec);
}

Tabulated parse_tabulated(std::istream& in) {
  Tabulated table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    SpectralPoint p;
    std::string extra;
    if (!(fields >> p.omega >> p.value) || (fields >> extra)) {
      throw FormatError("tabulated spectrum line " + std::to_string(line_no) +
                        ": expected two numeric columns");
    }
    table.points.push_back(p);
  }
  validate(SpectralDensity{table});
  return table;
}

Tabulated load_tabulated(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw FormatError("cannot open tabulated spectrum '" + path.string() + "'");
  }
  return parse_tabulated(in);
}

double sinc(double x, SincConvention convention) {
  if (convention == SincConvention::kNormalized) x *= std::numbers::pi;
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

void FilterSpec::validate() const {
  if (!std::isfinite(tau) || !(tau > 0.0)) {
    throw DomainError("measurement interval tau must be > 0");
  }
  if (!std::isfinite(omega_q) || omega_q < 0.0) {
    throw DomainError("filter center omega_q must be >= 0");
  }
}

double FilterSpec::lobe_width() const {
  return convention == SincConvention::kNormalized ? 2.0 / tau
                                                   : 2.0 * std::numbers::pi / tau;
}

double FilterSpec::envelope_scale() const {
  return convention == SincConvention::kNormalized ? std::numbers::pi : 1.0;
}

double filter_value(const FilterSpec& filter, double omega) {
  const double s = sinc(0.5 * (omega - filter.omega_q) * filter.tau,
                        filter.convention);
  return filter.tau / (2.0 * std::numbers::pi) * s * s;
}

std::vector<Interval> filter_lobes(const FilterSpec& filter, double omega_min,
                                   std::size_t max_lobes) {
  filter.validate();
  max_lobes = std::max<std::size_t>(max_lobes, 1);
  const double width = filter.lobe_width();
  const double right_edge =
      filter.omega_q + static_cast<double>(max_lobes) * width;
  std::vector<Interval> out;
  if (!(omega_min < right_edge)) return out;

  std::vector<double> cuts;
  for (std::size_t n = max_lobes; n >= 1; --n) {
    const double zero = filter.omega_q - static_cast<double>(n) * width;
    if (zero > omega_min) cuts.push_back(zero);
  }
  for (std::size_t n = 1; n < max_lobes; ++n) {
    const double zero = filter.omega_q + static_cast<double>(n) * width;
    if (zero > omega_min) cuts.push_back(zero);
  }
  cuts.push_back(right_edge);

  double lo = omega_min;
  for (double cut : cuts) {
    out.push_back({lo, cut});
    lo = cut;
  }
  return out;
}

double BathDiscretization::total_weight() const {
  double sum = 0.0;
  for (const auto& m : modes) sum += m.coupling * m.coupling;
  return sum;
}

BathDiscretization discretize_bath(const SpectralDensity& spec,
                                   const FilterSpec& filter,
                                   std::size_t lobes_each_side,
                                   std::size_t modes_per_lobe,
                                   CombWeighting weighting) {
  if (!is_continuum(spec)) {
    throw VariantError("only continuum spectra can be discretized");
  }
  validate(spec);
  filter.validate();
  if (lobes_each_side < 1 || modes_per_lobe < 1) {
    throw DomainError("discretization counts must be >= 1");
  }
  const double width = filter.lobe_width();
  const double reach = static_cast<double>(lobes_each_side) * width;
  BathDiscretization bath;
  bath.omega_lo = std::max(0.0, filter.omega_q - reach);
  bath.omega_hi = filter.omega_q + reach;
  bath.omega_q = filter.omega_q;
  const auto cells = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(
             (bath.omega_hi - bath.omega_lo) / width *
             static_cast<double>(modes_per_lobe))));
  bath.delta_omega = (bath.omega_hi - bath.omega_lo) / static_cast<double>(cells);
  bath.modes.reserve(cells);

  auto density = [&](double w) { return density_or_zero(spec, w); };
  for (std::size_t k = 0; k < cells; ++k) {
    const double a = bath.omega_lo + static_cast<double>(k) * bath.delta_omega;
    const double b = (k + 1 == cells)
                         ? bath.omega_hi
                         : bath.omega_lo + static_cast<double>(k + 1) * bath.delta_omega;
    const double center = 0.5 * (a + b);
    double weight = 0.0;
    if (weighting == CombWeighting::kMidpoint) {
      weight = density(center) * bath.delta_omega;
    } else {
      weight = quadrature::integrate_adaptive(density, a, b, 1e-12, 0.0).value;
    }
    bath.modes.push_back({center, std::sqrt(std::max(weight, 0.0))});
  }
  return bath;
}

}  // namespace zenosq
