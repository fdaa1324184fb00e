#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace zenosq::quadrature {

struct Estimate {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t evaluations = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule; nodes on [0, 1],
// symmetric about 0. Odd indices are the Gauss nodes.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

}  // namespace detail

// Single Gauss-Kronrod 7/15 panel on [a, b] with the QUADPACK error
// heuristic.
template <typename F>
Estimate gauss_kronrod15(F&& f, double a, double b) {
  using detail::kGaussWeights;
  using detail::kKronrodNodes;
  using detail::kKronrodWeights;
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double abs_half = std::abs(half);

  const double f_center = f(center);
  double kronrod = f_center * kKronrodWeights[7];
  double gauss = f_center * kGaussWeights[3];
  double abs_sum = std::abs(kronrod);
  std::array<double, 7> f_left{};
  std::array<double, 7> f_right{};
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    f_left[j] = f(center - dx);
    f_right[j] = f(center + dx);
    const double pair = f_left[j] + f_right[j];
    kronrod += kKronrodWeights[j] * pair;
    abs_sum += kKronrodWeights[j] * (std::abs(f_left[j]) + std::abs(f_right[j]));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[7] * std::abs(f_center - mean);
  for (std::size_t j = 0; j < 7; ++j) {
    asc += kKronrodWeights[j] *
           (std::abs(f_left[j] - mean) + std::abs(f_right[j] - mean));
  }

  Estimate out;
  out.value = kronrod * half;
  out.evaluations = 15;
  asc *= abs_half;
  abs_sum *= abs_half;
  double err = std::abs((kronrod - gauss) * half);
  if (asc != 0.0 && err != 0.0) {
    err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  }
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  constexpr double kTiny = std::numeric_limits<double>::min();
  if (abs_sum > kTiny / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * abs_sum, err);
  }
  out.abs_error = err;
  return out;
}

// Globally adaptive bisection: repeatedly split the panel with the largest
// error estimate until the summed error meets max(abs_tol, rel_tol*|I|) or the
// panel budget runs out.
template <typename F>
Estimate integrate_adaptive(F&& f, double a, double b, double rel_tol,
                            double abs_tol, std::size_t max_panels = 2000) {
  struct Panel {
    double a;
    double b;
    Estimate est;
    bool operator<(const Panel& other) const {
      return est.abs_error < other.est.abs_error;
    }
  };
  if (a == b) return {};

  std::priority_queue<Panel> panels;
  Panel first{a, b, gauss_kronrod15(f, a, b)};
  double value = first.est.value;
  double error = first.est.abs_error;
  std::size_t evaluations = first.est.evaluations;
  panels.push(first);

  while (error > std::max(abs_tol, rel_tol * std::abs(value)) &&
         panels.size() < max_panels) {
    Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;  // panel at float resolution
    panels.pop();
    Panel left{worst.a, mid, gauss_kronrod15(f, worst.a, mid)};
    Panel right{mid, worst.b, gauss_kronrod15(f, mid, worst.b)};
    evaluations += 30;
    value += left.est.value + right.est.value - worst.est.value;
    error += left.est.abs_error + right.est.abs_error - worst.est.abs_error;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum from the panels to shed the drift of incremental updates.
  value = 0.0;
  error = 0.0;
  std::vector<Panel> ordered;
  ordered.reserve(panels.size());
  while (!panels.empty()) {
    ordered.push_back(panels.top());
    panels.pop();
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  for (const Panel& p : ordered) {
    value += p.est.value;
    error += p.est.abs_error;
  }
  return {value, error, evaluations};
}

}  // namespace zenosq::quadrature
