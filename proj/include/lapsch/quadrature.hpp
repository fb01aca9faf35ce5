#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <limits>
#include <string>

namespace lapsch {

inline constexpr std::size_t default_point_budget = 10'000'000;

/// Quadrature point cap; `BROMWICH_POINT_BUDGET` overrides the default.
inline std::size_t point_budget() {
  if (const char* env = std::getenv("BROMWICH_POINT_BUDGET")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  return default_point_budget;
}

/// Running sum of values v_i * exp(e_i) kept as mantissa * exp(exponent),
/// rescaling whenever a larger exponent arrives.
class ScaledSum {
 public:
  void add(double value, double exponent) {
    if (value == 0.0) return;
    if (exponent > exponent_) {
      sum_ = sum_ * std::exp(exponent_ - exponent) + value;
      exponent_ = exponent;
    } else {
      sum_ += value * std::exp(exponent - exponent_);
    }
  }
  double mantissa() const noexcept { return sum_; }
  double exponent() const noexcept { return std::isfinite(exponent_) ? exponent_ : 0.0; }

 private:
  double sum_ = 0.0;
  double exponent_ = -std::numeric_limits<double>::infinity();
};

/// Number of Simpson intervals for step h on [lo, hi]: even, at least 2, at most
/// the (even part of the) budget.
inline std::size_t simpson_intervals(double lo, double hi, double h, std::size_t budget) {
  const double raw = std::ceil((hi - lo) / h);
  std::size_t n = raw >= static_cast<double>(budget) ? budget : static_cast<std::size_t>(raw);
  n = std::max<std::size_t>(n, 2);
  if (n % 2) n = (n + 1 <= budget) ? n + 1 : n - 1;
  return std::max<std::size_t>(n, 2);
}

/// Composite Simpson rule of f over [lo, hi] with n (even) intervals, where
/// f(y, exponent&) returns a mantissa and writes its log-scale exponent.
template <typename Integrand>
ScaledSum simpson_scaled(Integrand&& f, double lo, double hi, std::size_t n) {
  const double h = (hi - lo) / static_cast<double>(n);
  ScaledSum acc;
  for (std::size_t i = 0; i <= n; ++i) {
    const double y = (i == n) ? hi : lo + h * static_cast<double>(i);
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    double e = 0.0;
    const double v = f(y, e);
    acc.add(w * h / 3.0 * v, e);
  }
  return acc;
}

}  // namespace lapsch
