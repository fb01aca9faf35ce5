#pragma once

// Laplace transform pair on the PolyExp class
//
//     f(xi) = sum c xi^k e^{-b xi}  +  sum d delta^{(k)}(xi)
//
// forward transform, residue inversion, truncated Bromwich inversion and the
// moment expansion F(s) = sum_p (-1)^p M_p s^p / p!.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "lapsch/error.hpp"
#include "lapsch/quadrature.hpp"
#include "lapsch/sdomain.hpp"

namespace lapsch {

/// coeff * xi^power * exp(-decay * xi)
struct SmoothTerm {
  double coeff = 0.0;
  int power = 0;
  double decay = 0.0;
};

/// coeff * delta^{(order)}(xi)
struct DeltaTerm {
  double coeff = 0.0;
  int order = 0;
};

class PolyExp {
 public:
  PolyExp() = default;
  explicit PolyExp(std::vector<SmoothTerm> smooth, std::vector<DeltaTerm> delta = {})
      : smooth_(std::move(smooth)), delta_(std::move(delta)) {
    normalize();
  }

  /// sum_k c_k xi^k from ascending coefficients.
  static PolyExp polynomial(const std::vector<double>& c) {
    std::vector<SmoothTerm> t;
    for (std::size_t k = 0; k < c.size(); ++k) t.push_back({c[k], static_cast<int>(k), 0.0});
    return PolyExp(std::move(t));
  }

  const std::vector<SmoothTerm>& smooth_terms() const noexcept { return smooth_; }
  const std::vector<DeltaTerm>& distributional_terms() const noexcept { return delta_; }
  bool has_distributional() const noexcept { return !delta_.empty(); }
  bool is_zero() const noexcept { return smooth_.empty() && delta_.empty(); }

  /// True when every smooth term is a pure power (no exponential factor).
  bool is_polynomial() const noexcept {
    return std::all_of(smooth_.begin(), smooth_.end(), [](const SmoothTerm& t) { return t.decay == 0.0; });
  }

  /// Pointwise value of the smooth part. Distributional terms are never
  /// evaluated; callers check has_distributional() when that matters.
  double operator()(double xi) const {
    double acc = 0.0;
    for (const auto& t : smooth_) acc += t.coeff * std::pow(xi, t.power) * std::exp(-t.decay * xi);
    return acc;
  }

  PolyExp derivative() const {
    std::vector<SmoothTerm> out;
    for (const auto& t : smooth_) {
      if (t.power > 0) out.push_back({t.coeff * t.power, t.power - 1, t.decay});
      if (t.decay != 0.0) out.push_back({-t.decay * t.coeff, t.power, t.decay});
    }
    std::vector<DeltaTerm> d;
    for (const auto& t : delta_) d.push_back({t.coeff, t.order + 1});
    return PolyExp(std::move(out), std::move(d));
  }

  friend PolyExp operator+(const PolyExp& a, const PolyExp& b) {
    auto s = a.smooth_;
    s.insert(s.end(), b.smooth_.begin(), b.smooth_.end());
    auto d = a.delta_;
    d.insert(d.end(), b.delta_.begin(), b.delta_.end());
    return PolyExp(std::move(s), std::move(d));
  }
  friend PolyExp operator*(double k, const PolyExp& f) {
    auto s = f.smooth_;
    for (auto& t : s) t.coeff *= k;
    auto d = f.delta_;
    for (auto& t : d) t.coeff *= k;
    return PolyExp(std::move(s), std::move(d));
  }
  friend PolyExp operator-(const PolyExp& a, const PolyExp& b) { return a + (-1.0) * b; }

 private:
  void normalize() {
    std::sort(smooth_.begin(), smooth_.end(), [](const SmoothTerm& x, const SmoothTerm& y) {
      if (std::abs(x.decay - y.decay) > same_value_tol) return x.decay < y.decay;
      return x.power < y.power;
    });
    std::vector<SmoothTerm> s;
    for (const auto& t : smooth_) {
      if (!s.empty() && s.back().power == t.power && std::abs(s.back().decay - t.decay) <= same_value_tol)
        s.back().coeff += t.coeff;
      else
        s.push_back(t);
    }
    std::erase_if(s, [](const SmoothTerm& t) { return std::abs(t.coeff) < drop_tol; });
    smooth_ = std::move(s);

    std::sort(delta_.begin(), delta_.end(), [](const DeltaTerm& x, const DeltaTerm& y) { return x.order < y.order; });
    std::vector<DeltaTerm> d;
    for (const auto& t : delta_) {
      if (!d.empty() && d.back().order == t.order)
        d.back().coeff += t.coeff;
      else
        d.push_back(t);
    }
    std::erase_if(d, [](const DeltaTerm& t) { return std::abs(t.coeff) < drop_tol; });
    delta_ = std::move(d);
  }

  std::vector<SmoothTerm> smooth_;
  std::vector<DeltaTerm> delta_;
};

namespace detail {

inline double factorial(int k) {
  double r = 1.0;
  for (int j = 2; j <= k; ++j) r *= j;
  return r;
}

}  // namespace detail

/// Exact transform, term by term: xi^k e^{-b xi} -> k! / (s + b)^{k+1}.
inline SDomainFn forward_laplace(const PolyExp& f) {
  if (f.has_distributional()) throw unsupported_input("forward_laplace: distributional terms are not transformed");
  std::vector<GeneralTerm> terms;
  for (const auto& t : f.smooth_terms())
    terms.emplace_back(t.coeff * detail::factorial(t.power),
                       std::vector<Factor>{{-t.decay, -static_cast<double>(t.power) - 1.0}});
  return SDomainFn(std::move(terms));
}

/// Inverse transform of a rational F by summing residues of e^{s xi} F(s).
///
/// A pole a of order m contributes e^{a xi} sum_k g_{m-1-k} xi^k / k!, where
/// g is the Taylor series of (s - a)^m F(s) about a. Nonnegative powers s^k
/// have no residue; they invert to delta^{(k)}(xi) and are kept as such.
inline PolyExp inverse_by_residues(const SDomainFn& F) {
  if (!F.is_rational())
    throw not_invertible("inverse_by_residues: F is not rational; use bromwich_invert for essential singularities");
  std::vector<SmoothTerm> smooth;
  std::vector<DeltaTerm> delta;
  for (const auto& t : F.terms()) {
    for (std::size_t j = 0; j < t.factors().size(); ++j) {
      const auto& fac = t.factors()[j];
      if (fac.exponent >= 0) continue;
      const int m = static_cast<int>(std::llround(-fac.exponent));
      const auto g = detail::regular_part_at_pole(t, j, static_cast<std::size_t>(m));
      for (int k = 0; k < m; ++k)
        smooth.push_back({g[static_cast<std::size_t>(m - 1 - k)] / detail::factorial(k), k, -fac.pole});
    }
    const auto poly = detail::polynomial_part(t);
    for (std::size_t k = 0; k < poly.size(); ++k) delta.push_back({poly[k], static_cast<int>(k)});
  }
  return PolyExp(std::move(smooth), std::move(delta));
}

/// Truncated Bromwich integral f_gamma(xi) = mantissa * exp(exponent).
struct BromwichSample {
  double mantissa = 0.0;
  double exponent = 0.0;

  double value() const { return mantissa * std::exp(exponent); }
  double log_abs() const { return std::log(std::abs(mantissa)) + exponent; }
};

/// f_gamma(xi) = (1/2 pi i) int_{a - i gamma}^{a + i gamma} e^{s xi} F(s) ds.
///
/// With s = a + iy and F real on the real axis this is
/// (1/pi) int_0^gamma Re[e^{s xi} F(s)] dy, integrated by composite Simpson
/// with step min(2 pi / (40 max(xi, 1)), 1 / (5 gamma)). The integrand is
/// carried in log scale so e^{y^2/4}-type growth cannot overflow.
inline BromwichSample bromwich_invert(const SDomainFn& F, double xi, double a, double gamma,
                                      std::size_t budget = point_budget()) {
  if (!(gamma > 0.0)) throw domain_error("bromwich_invert requires gamma > 0");
  if (!(xi >= 0.0)) throw domain_error("bromwich_invert requires xi >= 0");
  const double right = F.rightmost_singularity();
  if (!(a > right)) {
    std::ostringstream os;
    os << "Bromwich line Re(s) = " << a << " does not lie right of the singularity at s = " << right;
    throw contour_through_pole(os.str());
  }
  const double h = std::min(2.0 * std::numbers::pi / (40.0 * std::max(xi, 1.0)), 1.0 / (5.0 * gamma));
  const std::size_t n = simpson_intervals(0.0, gamma, h, budget);
  const auto integrand = [&](double y, double& e) {
    const auto v = evaluate_scaled(F, cplx{a, y});
    e = v.exponent + a * xi;
    return (v.mantissa * std::polar(1.0, y * xi)).real();
  };
  const auto acc = simpson_scaled(integrand, 0.0, gamma, n);
  return {acc.mantissa() / std::numbers::pi, acc.exponent()};
}

/// The a -> 0+ limit of the truncated inverse of e^{-s^2/4}/s:
///
///     (1/pi) int_0^gamma e^{y^2/4} sin(y xi) / y dy,
///
/// returned with exponent gamma^2/4 folded out, so the mantissa is
/// (1/pi) int e^{(y^2 - gamma^2)/4} sin(y xi)/y dy. Only y within the layer
/// where e^{(y^2-gamma^2)/4} > e^{-80} is integrated; the rest is below double
/// resolution of the result.
inline BromwichSample tw_limit_invert(double xi, double gamma, std::size_t budget = point_budget()) {
  if (!(gamma > 0.0)) throw domain_error("tw_limit_invert requires gamma > 0");
  if (!(xi >= 0.0)) throw domain_error("tw_limit_invert requires xi >= 0");
  constexpr double log_cut = 80.0;
  const double lo = std::sqrt(std::max(0.0, gamma * gamma - 4.0 * log_cut));
  double h = 1.0 / (5.0 * gamma);
  if (xi > 0.0) h = std::min(h, 2.0 * std::numbers::pi / (20.0 * xi));
  const std::size_t n = simpson_intervals(lo, gamma, h, budget);
  const double step = (gamma - lo) / static_cast<double>(n);
  double sum = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    const double y = (i == n) ? gamma : lo + step * static_cast<double>(i);
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    const double sinc = y == 0.0 ? xi : std::sin(y * xi) / y;
    sum += w * std::exp((y - gamma) * (y + gamma) / 4.0) * sinc;
  }
  return {sum * step / 3.0 / std::numbers::pi, gamma * gamma / 4.0};
}

/// M_p for p = 0..max_p; std::nullopt marks a divergent moment.
struct MomentVector {
  std::vector<std::optional<double>> values;

  bool any_divergent() const noexcept {
    return std::any_of(values.begin(), values.end(), [](const auto& v) { return !v.has_value(); });
  }
};

/// Closed-form moments int_0^inf xi^p f(xi) d xi = sum c (p+k)! / b^{p+k+1}.
inline MomentVector moments(const PolyExp& f, int max_p) {
  if (f.has_distributional()) throw unsupported_input("moments: distributional terms present");
  MomentVector out;
  const bool divergent =
      std::any_of(f.smooth_terms().begin(), f.smooth_terms().end(), [](const SmoothTerm& t) { return !(t.decay > 0.0); });
  for (int p = 0; p <= max_p; ++p) {
    if (divergent) {
      out.values.emplace_back(std::nullopt);
      continue;
    }
    double m = 0.0;
    for (const auto& t : f.smooth_terms()) {
      // k!/b^{k+1} * prod_{j=1..p} (k+j)/b
      double v = detail::factorial(t.power) / std::pow(t.decay, t.power + 1);
      for (int j = 1; j <= p; ++j) v *= static_cast<double>(t.power + j) / t.decay;
      m += t.coeff * v;
    }
    out.values.emplace_back(m);
  }
  return out;
}

/// Taylor series about s = 0 with coefficients (-1)^p M_p / p!.
inline LaurentSeries series_from_moments(const MomentVector& m) {
  LaurentSeries out;
  out.point = ExpansionPoint::zero;
  double pf = 1.0;
  for (std::size_t p = 0; p < m.values.size(); ++p) {
    if (p > 0) pf *= static_cast<double>(p);
    if (!m.values[p]) {
      std::ostringstream os;
      os << "moment M_" << p << " diverges";
      throw divergent_moment(os.str());
    }
    out.coeffs.push_back((p % 2 ? -1.0 : 1.0) * *m.values[p] / pf);
  }
  return out;
}

}  // namespace lapsch
