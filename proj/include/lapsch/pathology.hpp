#pragma once

// The inverse transform of e^{-s^2/4}/s, i.e. the ground-state harmonic
// transform obtained with v0 = v0' = 0 assumed. Its truncated Bromwich
// integral v_gamma(xi) oscillates with wavelength 2 pi / gamma and amplitude
// of order e^{gamma^2/4} / gamma^2; everything here works with the rescaled
// g = gamma^2 e^{-gamma^2/4} v_gamma(xi).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <vector>

#include "lapsch/error.hpp"
#include "lapsch/parallel.hpp"
#include "lapsch/quadrature.hpp"
#include "lapsch/rational.hpp"
#include "lapsch/specfun.hpp"
#include "lapsch/transforms.hpp"

namespace lapsch {

/// g = gamma^2 e^{-gamma^2/4} v_gamma(xi).
inline double vtw_gamma_rescaled(double xi, double gamma, std::size_t budget = point_budget()) {
  const auto b = tw_limit_invert(xi, gamma, budget);
  // b.exponent == gamma^2/4 exactly, so the rescaling is a plain factor.
  return gamma * gamma * b.mantissa;
}

struct PathologyProfile {
  double gamma = 0.0;
  std::vector<double> xi_grid;
  std::vector<double> rescaled_values;  // g on xi_grid
  double plateau_estimate = 0.0;        // mean |g| over the first extrema
  std::size_t extrema_used = 0;
  double wavelength_estimate = 0.0;     // twice the mean zero-crossing spacing
  std::size_t zero_crossings = 0;
};

namespace detail {

// Maximizes |f| on [lo, hi] by golden-section search.
template <typename F>
double golden_max_abs(F&& f, double lo, double hi, int iterations = 40) {
  constexpr double r = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - r * (b - a), x2 = a + r * (b - a);
  double f1 = std::abs(f(x1)), f2 = std::abs(f(x2));
  for (int i = 0; i < iterations; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + r * (b - a);
      f2 = std::abs(f(x2));
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - r * (b - a);
      f1 = std::abs(f(x1));
    }
  }
  return std::max(f1, f2);
}

// Root of f in [a, b] given f(a) f(b) < 0, by a few Illinois false-position steps.
template <typename F>
double refine_root(F&& f, double a, double fa, double b, double fb, int iterations = 4) {
  int side = 0;
  double c = a;
  for (int i = 0; i < iterations; ++i) {
    c = (a * fb - b * fa) / (fb - fa);
    const double fc = f(c);
    if (fc == 0.0) return c;
    if ((fc > 0) == (fb > 0)) {
      b = c;
      fb = fc;
      if (side == -1) fa *= 0.5;
      side = -1;
    } else {
      a = c;
      fa = fc;
      if (side == 1) fb *= 0.5;
      side = 1;
    }
  }
  return (a * fb - b * fa) / (fb - fa);
}

inline void check_gamma(double gamma) {
  if (!(gamma >= 10.0 && gamma <= 1000.0)) {
    std::ostringstream os;
    os << "gamma must lie in [10, 1000] (gamma = " << gamma << ")";
    throw domain_error(os.str());
  }
}

}  // namespace detail

/// Samples g on xi = 0, d, 2d, ... up to xi_max_over_gamma * gamma with
/// d = (2 pi / gamma) / samples_per_wavelength, then estimates the plateau
/// from the first 10 extrema and the wavelength from zero crossings.
inline PathologyProfile profile(double gamma, double xi_max_over_gamma, int samples_per_wavelength,
                                std::size_t budget = point_budget()) {
  detail::check_gamma(gamma);
  if (samples_per_wavelength < 8) throw domain_error("profile requires at least 8 samples per wavelength");
  if (!(xi_max_over_gamma > 0.0)) throw domain_error("profile requires xi_max_over_gamma > 0");

  const double d = 2.0 * std::numbers::pi / gamma / samples_per_wavelength;
  const double count = std::floor(xi_max_over_gamma * gamma / d) + 1.0;
  if (count > static_cast<double>(budget)) {
    std::ostringstream os;
    os << "profile grid of " << count << " points exceeds the point budget " << budget;
    throw budget_exceeded(os.str());
  }

  PathologyProfile out;
  out.gamma = gamma;
  out.xi_grid.resize(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < out.xi_grid.size(); ++i) out.xi_grid[i] = d * static_cast<double>(i);
  const auto g = [gamma, budget](double xi) { return vtw_gamma_rescaled(xi, gamma, budget); };
  out.rescaled_values = parallel_map(out.xi_grid, g);

  const auto& xs = out.xi_grid;
  const auto& ys = out.rescaled_values;
  double peak_sum = 0.0;
  for (std::size_t i = 1; i + 1 < ys.size() && out.extrema_used < 10; ++i) {
    const bool is_max = ys[i] > ys[i - 1] && ys[i] >= ys[i + 1];
    const bool is_min = ys[i] < ys[i - 1] && ys[i] <= ys[i + 1];
    if (!is_max && !is_min) continue;
    peak_sum += detail::golden_max_abs(g, xs[i - 1], xs[i + 1]);
    ++out.extrema_used;
  }
  if (out.extrema_used) out.plateau_estimate = peak_sum / static_cast<double>(out.extrema_used);

  std::vector<double> crossings;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (ys[i] == 0.0) {
      crossings.push_back(xs[i]);
      continue;
    }
    if (i + 1 < ys.size() && ys[i + 1] != 0.0 && (ys[i] > 0) != (ys[i + 1] > 0))
      crossings.push_back(detail::refine_root(g, xs[i], ys[i], xs[i + 1], ys[i + 1]));
  }
  out.zero_crossings = crossings.size();
  if (crossings.size() >= 2)
    out.wavelength_estimate = 2.0 * (crossings.back() - crossings.front()) / static_cast<double>(crossings.size() - 1);
  return out;
}

/// Local maximum of |g| within one half-wavelength window centred on each
/// xi = z * gamma.
inline std::vector<double> envelope_decay(double gamma, const std::vector<double>& xi_over_gamma,
                                          std::size_t budget = point_budget()) {
  detail::check_gamma(gamma);
  for (double z : xi_over_gamma)
    if (!(z > 0.0 && z <= 2.0)) throw domain_error("envelope_decay grid values must lie in (0, 2]");
  const double half_period = std::numbers::pi / gamma;  // period of |sin(gamma xi)|
  const auto g = [gamma, budget](double xi) { return vtw_gamma_rescaled(xi, gamma, budget); };
  return parallel_map(xi_over_gamma, [&](double z) {
    const double centre = z * gamma;
    const double lo = std::max(0.0, centre - 0.5 * half_period);
    const double hi = lo + half_period;
    constexpr int samples = 16;
    int best = 0;
    double best_val = -1.0;
    for (int i = 0; i <= samples; ++i) {
      const double v = std::abs(g(lo + (hi - lo) * i / samples));
      if (v > best_val) {
        best_val = v;
        best = i;
      }
    }
    const double step = (hi - lo) / samples;
    const double a = std::max(0.0, lo + step * (best - 1));
    const double b = lo + step * (best + 1);
    return std::max(best_val, detail::golden_max_abs(g, a, b));
  });
}

using MomentRational = Rational<std::int64_t>;

/// v_hom is the inverse of e^{-s^2/4}/s, i.e. the ground state with v0 = v0' = 0.
/// Closed form of int_0^inf xi^p [v_hom(xi) - 1] d xi:
/// 0 for even p, (-1)^{(p-1)/2} p!! / ((p+1) 2^{(p+1)/2}) for odd p.
inline MomentRational tw_deviation_moment(unsigned p) {
  if (p % 2 == 0) return MomentRational(0);
  const auto sign = ((p - 1) / 2) % 2 ? -1 : 1;
  const auto den = static_cast<std::int64_t>(p + 1) * (std::int64_t{1} << ((p + 1) / 2));
  return MomentRational(sign * static_cast<std::int64_t>(double_factorial(p)), den);
}

/// The same moments read off the Taylor coefficients of s^{-1}(e^{-s^2/4} - 1)
/// through F(s) = sum (-1)^p M_p s^p / p!, in exact arithmetic.
inline MomentRational tw_deviation_moment_from_series(unsigned p, unsigned order) {
  if (order < p) throw std::invalid_argument("tw_deviation_moment_from_series requires order >= p");
  // Taylor coefficients of exp(q(s)), q = -s^2/4, from m e_m = sum_k k q_k e_{m-k}.
  const std::vector<MomentRational> q{MomentRational(0), MomentRational(0), MomentRational(-1, 4)};
  std::vector<MomentRational> e(order + 2, MomentRational(0));
  e[0] = MomentRational(1);
  for (std::size_t m = 1; m < e.size(); ++m) {
    MomentRational acc(0);
    for (std::size_t k = 1; k <= m && k < q.size(); ++k)
      acc = acc + MomentRational(static_cast<std::int64_t>(k)) * q[k] * e[m - k];
    e[m] = acc / MomentRational(static_cast<std::int64_t>(m));
  }
  // s^{-1}(e(s) - 1): the coefficient of s^p is e_{p+1}.
  MomentRational factorial(1);
  for (unsigned j = 2; j <= p; ++j) factorial = factorial * MomentRational(j);
  const MomentRational sign(p % 2 ? -1 : 1);
  return sign * factorial * e[p + 1];
}

}  // namespace lapsch
