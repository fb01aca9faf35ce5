#pragma once

// Algebra of s-domain functions: finite sums of
//
//     coeff * prod_i (s - a_i)^{p_i} * exp(q(s))
//
// with real pole locations a_i, real exponents p_i and a real polynomial q.
// The class is closed under addition, scaling, multiplication and
// differentiation, which is all the transformed oscillator equations need.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lapsch/error.hpp"

namespace lapsch {

using cplx = std::complex<double>;

/// Tolerance used to decide that two pole locations, exponents or
/// polynomial coefficients are the same number.
inline constexpr double same_value_tol = 1e-12;
/// Terms whose combined coefficient falls below this are dropped.
inline constexpr double drop_tol = 1e-14;

inline bool is_integer_exponent(double p) noexcept {
  return std::abs(p - std::round(p)) <= same_value_tol;
}

namespace detail {

inline cplx ipow(cplx base, long long e) {
  const bool invert = e < 0;
  unsigned long long n = invert ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  cplx result{1.0, 0.0};
  while (n != 0) {
    if (n & 1ULL) result *= base;
    base *= base;
    n >>= 1ULL;
  }
  return invert ? 1.0 / result : result;
}

inline double ipow(double base, long long e) {
  const bool invert = e < 0;
  unsigned long long n = invert ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  double result = 1.0;
  while (n != 0) {
    if (n & 1ULL) result *= base;
    base *= base;
    n >>= 1ULL;
  }
  return invert ? 1.0 / result : result;
}

inline std::vector<double> trimmed(std::vector<double> c) {
  while (!c.empty() && std::abs(c.back()) <= same_value_tol) c.pop_back();
  return c;
}

// Coefficients of (1 + scale*x)^p up to x^{n-1}.
inline std::vector<double> binomial_series(double p, double scale, std::size_t n) {
  std::vector<double> c(n, 0.0);
  if (n == 0) return c;
  c[0] = 1.0;
  for (std::size_t j = 0; j + 1 < n; ++j) c[j + 1] = c[j] * (p - static_cast<double>(j)) / static_cast<double>(j + 1) * scale;
  return c;
}

// Taylor coefficients of exp(q(s)) about s = 0 for q with q(0) = 0, via
// m e_m = sum_k k q_k e_{m-k}.
inline std::vector<double> exp_poly_series(const std::vector<double>& q, std::size_t n) {
  std::vector<double> e(n, 0.0);
  if (n == 0) return e;
  e[0] = 1.0;
  for (std::size_t m = 1; m < n; ++m) {
    double acc = 0.0;
    for (std::size_t k = 1; k <= m && k < q.size(); ++k) acc += static_cast<double>(k) * q[k] * e[m - k];
    e[m] = acc / static_cast<double>(m);
  }
  return e;
}

inline std::vector<double> series_mul(const std::vector<double>& a, const std::vector<double>& b, std::size_t n) {
  std::vector<double> c(n, 0.0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

}  // namespace detail

/// One factor (s - pole)^exponent.
struct Factor {
  double pole = 0.0;
  double exponent = 0.0;
};

/// coeff * prod (s - a_i)^{p_i} * exp(q(s)).
///
/// Normal form: factors sorted by pole, duplicate poles merged, zero
/// exponents removed; a constant term of q is folded into the coefficient.
class GeneralTerm {
 public:
  GeneralTerm() = default;
  explicit GeneralTerm(double coeff, std::vector<Factor> factors = {}, std::vector<double> exp_poly = {})
      : coeff_(coeff), factors_(std::move(factors)), exp_poly_(std::move(exp_poly)) {
    normalize();
  }

  double coeff() const noexcept { return coeff_; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }
  /// Ascending coefficients of q(s); q(0) is always zero after normalization.
  const std::vector<double>& exp_poly() const noexcept { return exp_poly_; }

  bool has_exp_poly() const noexcept { return !exp_poly_.empty(); }

  /// Sum of all exponents; the power of s governing behaviour at infinity.
  double total_exponent() const noexcept {
    double p = 0.0;
    for (const auto& f : factors_) p += f.exponent;
    return p;
  }

  bool same_shape(const GeneralTerm& o) const noexcept {
    if (factors_.size() != o.factors_.size() || exp_poly_.size() != o.exp_poly_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (std::abs(factors_[i].pole - o.factors_[i].pole) > same_value_tol) return false;
      if (std::abs(factors_[i].exponent - o.factors_[i].exponent) > same_value_tol) return false;
    }
    for (std::size_t i = 0; i < exp_poly_.size(); ++i)
      if (std::abs(exp_poly_[i] - o.exp_poly_[i]) > same_value_tol) return false;
    return true;
  }

  /// Strict weak order on shapes, used to keep SDomainFn terms sorted.
  bool shape_less(const GeneralTerm& o) const noexcept {
    if (factors_.size() != o.factors_.size()) return factors_.size() < o.factors_.size();
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (std::abs(factors_[i].pole - o.factors_[i].pole) > same_value_tol) return factors_[i].pole < o.factors_[i].pole;
      if (std::abs(factors_[i].exponent - o.factors_[i].exponent) > same_value_tol)
        return factors_[i].exponent < o.factors_[i].exponent;
    }
    if (exp_poly_.size() != o.exp_poly_.size()) return exp_poly_.size() < o.exp_poly_.size();
    for (std::size_t i = 0; i < exp_poly_.size(); ++i)
      if (std::abs(exp_poly_[i] - o.exp_poly_[i]) > same_value_tol) return exp_poly_[i] < o.exp_poly_[i];
    return false;
  }

  GeneralTerm with_coeff(double c) const {
    GeneralTerm t = *this;
    t.coeff_ = c;
    return t;
  }

  friend GeneralTerm operator*(const GeneralTerm& a, const GeneralTerm& b) {
    std::vector<Factor> f = a.factors_;
    f.insert(f.end(), b.factors_.begin(), b.factors_.end());
    std::vector<double> q(std::max(a.exp_poly_.size(), b.exp_poly_.size()), 0.0);
    for (std::size_t i = 0; i < a.exp_poly_.size(); ++i) q[i] += a.exp_poly_[i];
    for (std::size_t i = 0; i < b.exp_poly_.size(); ++i) q[i] += b.exp_poly_[i];
    return GeneralTerm(a.coeff_ * b.coeff_, std::move(f), std::move(q));
  }

 private:
  void normalize() {
    std::sort(factors_.begin(), factors_.end(), [](const Factor& x, const Factor& y) { return x.pole < y.pole; });
    std::vector<Factor> merged;
    for (const auto& f : factors_) {
      if (!merged.empty() && std::abs(merged.back().pole - f.pole) <= same_value_tol)
        merged.back().exponent += f.exponent;
      else
        merged.push_back(f);
    }
    std::erase_if(merged, [](const Factor& f) { return std::abs(f.exponent) <= same_value_tol; });
    for (auto& f : merged)
      if (is_integer_exponent(f.exponent)) f.exponent = std::round(f.exponent);
    factors_ = std::move(merged);

    if (!exp_poly_.empty()) {
      coeff_ *= std::exp(exp_poly_[0]);
      exp_poly_[0] = 0.0;
    }
    exp_poly_ = detail::trimmed(std::move(exp_poly_));
  }

  double coeff_ = 0.0;
  std::vector<Factor> factors_;
  std::vector<double> exp_poly_;
};

/// A finite linear combination of GeneralTerms. Immutable value type.
class SDomainFn {
 public:
  SDomainFn() = default;
  SDomainFn(GeneralTerm t) : terms_{std::move(t)} { normalize(); }  // NOLINT(implicit)
  explicit SDomainFn(std::vector<GeneralTerm> terms) : terms_(std::move(terms)) { normalize(); }

  static SDomainFn constant(double c) { return SDomainFn(GeneralTerm(c)); }
  /// coeff * (s - pole)^exponent
  static SDomainFn power(double pole, double exponent, double coeff = 1.0) {
    return SDomainFn(GeneralTerm(coeff, {{pole, exponent}}));
  }
  /// coeff * s^k
  static SDomainFn monomial(int k, double coeff = 1.0) { return power(0.0, k, coeff); }
  /// coeff * exp(q(s))
  static SDomainFn exponential(std::vector<double> q, double coeff = 1.0) {
    return SDomainFn(GeneralTerm(coeff, {}, std::move(q)));
  }
  /// Polynomial sum_k c_k s^k from ascending coefficients.
  static SDomainFn polynomial(const std::vector<double>& c) {
    std::vector<GeneralTerm> t;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0.0) t.emplace_back(c[k], std::vector<Factor>{{0.0, static_cast<double>(k)}});
    return SDomainFn(std::move(t));
  }

  const std::vector<GeneralTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// True when every exponent is an integer and no exponential factor is present.
  bool is_rational() const noexcept {
    for (const auto& t : terms_) {
      if (t.has_exp_poly()) return false;
      for (const auto& f : t.factors())
        if (!is_integer_exponent(f.exponent)) return false;
    }
    return true;
  }

  /// Rightmost real singularity (pole or branch point), or -infinity for entire functions.
  double rightmost_singularity() const noexcept {
    double r = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms_)
      for (const auto& f : t.factors())
        if (f.exponent < 0 || !is_integer_exponent(f.exponent)) r = std::max(r, f.pole);
    return r;
  }

  friend SDomainFn operator+(const SDomainFn& a, const SDomainFn& b) {
    std::vector<GeneralTerm> t = a.terms_;
    t.insert(t.end(), b.terms_.begin(), b.terms_.end());
    return SDomainFn(std::move(t));
  }
  friend SDomainFn operator*(double k, const SDomainFn& f) {
    std::vector<GeneralTerm> t;
    t.reserve(f.terms_.size());
    for (const auto& term : f.terms_) t.push_back(term.with_coeff(k * term.coeff()));
    return SDomainFn(std::move(t));
  }
  friend SDomainFn operator*(const SDomainFn& f, double k) { return k * f; }
  friend SDomainFn operator-(const SDomainFn& a, const SDomainFn& b) { return a + (-1.0) * b; }
  friend SDomainFn operator*(const SDomainFn& a, const SDomainFn& b) {
    std::vector<GeneralTerm> t;
    t.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) t.push_back(x * y);
    return SDomainFn(std::move(t));
  }

  SDomainFn times_s() const { return *this * monomial(1); }

 private:
  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const GeneralTerm& x, const GeneralTerm& y) { return x.shape_less(y); });
    std::vector<GeneralTerm> merged;
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().same_shape(t))
        merged.back() = merged.back().with_coeff(merged.back().coeff() + t.coeff());
      else
        merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const GeneralTerm& t) { return std::abs(t.coeff()) < drop_tol; });
    terms_ = std::move(merged);
  }

  std::vector<GeneralTerm> terms_;
};

/// Exact derivative by logarithmic differentiation of every term:
/// term' = term * (sum_i p_i / (s - a_i) + q'(s)).
inline SDomainFn differentiate(const SDomainFn& f) {
  std::vector<GeneralTerm> out;
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < t.factors().size(); ++i) {
      auto factors = t.factors();
      const double p = factors[i].exponent;
      factors[i].exponent = p - 1.0;
      out.emplace_back(t.coeff() * p, std::move(factors), t.exp_poly());
    }
    const auto& q = t.exp_poly();
    for (std::size_t k = 1; k < q.size(); ++k) {
      if (q[k] == 0.0) continue;
      auto factors = t.factors();
      factors.push_back({0.0, static_cast<double>(k - 1)});
      out.emplace_back(t.coeff() * static_cast<double>(k) * q[k], std::move(factors), q);
    }
  }
  return SDomainFn(std::move(out));
}

namespace detail {

inline cplx eval_poly(const std::vector<double>& c, cplx s) {
  cplx acc{0.0, 0.0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * s + *it;
  return acc;
}

inline void check_factor_domain(const Factor& f, cplx d) {
  if (d == cplx{0.0, 0.0} && f.exponent < 0) {
    std::ostringstream os;
    os << "evaluation at pole s = " << f.pole;
    throw pole_evaluation(os.str());
  }
  if (!is_integer_exponent(f.exponent) && d.real() <= 0.0 && d != cplx{0.0, 0.0}) {
    std::ostringstream os;
    os << "non-integer power (s - " << f.pole << ")^" << f.exponent << " evaluated left of its branch point";
    throw branch_domain(os.str());
  }
}

}  // namespace detail

/// Direct evaluation. Non-integer powers use the principal branch and are only
/// defined for Re(s) > pole.
inline cplx evaluate(const SDomainFn& f, cplx s) {
  cplx total{0.0, 0.0};
  for (const auto& t : f.terms()) {
    cplx v{t.coeff(), 0.0};
    for (const auto& fac : t.factors()) {
      const cplx d = s - fac.pole;
      detail::check_factor_domain(fac, d);
      if (is_integer_exponent(fac.exponent))
        v *= detail::ipow(d, std::llround(fac.exponent));
      else
        v *= (d == cplx{0.0, 0.0}) ? cplx{0.0, 0.0} : std::exp(fac.exponent * std::log(d));
    }
    if (t.has_exp_poly()) v *= std::exp(detail::eval_poly(t.exp_poly(), s));
    total += v;
  }
  return total;
}

/// Real-axis evaluation; returns the real part (imaginary part vanishes for real s
/// inside the domain).
inline double evaluate(const SDomainFn& f, double s) { return evaluate(f, cplx{s, 0.0}).real(); }

/// A complex number represented as mantissa * exp(exponent).
struct ScaledComplex {
  cplx mantissa{0.0, 0.0};
  double exponent = 0.0;
};

/// Overflow-safe evaluation: terms are combined in log space around the
/// largest term magnitude.
inline ScaledComplex evaluate_scaled(const SDomainFn& f, cplx s) {
  std::vector<std::pair<double, double>> log_phase;
  log_phase.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    double lm = std::log(std::abs(t.coeff()));
    double ph = t.coeff() < 0 ? std::numbers::pi : 0.0;
    bool vanishes = false;
    for (const auto& fac : t.factors()) {
      const cplx d = s - fac.pole;
      detail::check_factor_domain(fac, d);
      if (d == cplx{0.0, 0.0}) {
        vanishes = true;
        break;
      }
      lm += fac.exponent * std::log(std::abs(d));
      ph += fac.exponent * std::arg(d);
    }
    if (vanishes) continue;
    if (t.has_exp_poly()) {
      const cplx q = detail::eval_poly(t.exp_poly(), s);
      lm += q.real();
      ph += q.imag();
    }
    log_phase.emplace_back(lm, ph);
  }
  ScaledComplex out;
  if (log_phase.empty()) return out;
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& [lm, ph] : log_phase) top = std::max(top, lm);
  for (const auto& [lm, ph] : log_phase) out.mantissa += std::polar(std::exp(lm - top), ph);
  out.exponent = top;
  return out;
}

enum class ExpansionPoint { zero, infinity };

/// Truncated Laurent series sum_k c_k s^k over a contiguous window of powers.
///
/// About zero the window is exact below `min_power` (coefficients there are
/// zero) and unknown above `max_power()`. About infinity it is exact above
/// `max_power()` and unknown below `min_power`.
struct LaurentSeries {
  ExpansionPoint point = ExpansionPoint::zero;
  int min_power = 0;
  std::vector<double> coeffs;

  int max_power() const noexcept { return min_power + static_cast<int>(coeffs.size()) - 1; }

  double coefficient(int power) const {
    if (power >= min_power && power <= max_power()) return coeffs[static_cast<std::size_t>(power - min_power)];
    const bool truncated_side = point == ExpansionPoint::zero ? power > max_power() : power < min_power;
    if (truncated_side) throw std::out_of_range("coefficient beyond truncation order");
    return 0.0;
  }

  cplx partial_sum(cplx s) const {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0.0) acc += coeffs[i] * detail::ipow(s, min_power + static_cast<long long>(i));
    return acc;
  }
};

/// The finite sum held by a series, as an s-domain function.
inline SDomainFn to_sdomain(const LaurentSeries& ls) {
  std::vector<GeneralTerm> t;
  for (std::size_t i = 0; i < ls.coeffs.size(); ++i)
    if (ls.coeffs[i] != 0.0)
      t.emplace_back(ls.coeffs[i], std::vector<Factor>{{0.0, static_cast<double>(ls.min_power + static_cast<int>(i))}});
  return SDomainFn(std::move(t));
}

namespace detail {

struct TermSeries {
  int lead = 0;                 // power of s carried by series[0]
  std::vector<double> series;   // about zero: ascending from lead; about infinity: descending from lead
};

inline TermSeries term_series_at_zero(const GeneralTerm& t, std::size_t n) {
  TermSeries out;
  std::vector<double> acc{t.coeff()};
  acc.resize(n, 0.0);
  for (const auto& f : t.factors()) {
    if (std::abs(f.pole) <= same_value_tol) {
      if (!is_integer_exponent(f.exponent)) throw not_expandable("non-integer power of s has no Laurent series about 0");
      out.lead += static_cast<int>(std::llround(f.exponent));
      continue;
    }
    double base;
    if (is_integer_exponent(f.exponent)) {
      base = ipow(-f.pole, std::llround(f.exponent));
    } else {
      if (f.pole > 0) throw not_expandable("branch point right of s = 0; (s - a)^p is not real near 0");
      base = std::pow(-f.pole, f.exponent);
    }
    auto b = binomial_series(f.exponent, -1.0 / f.pole, n);
    for (auto& x : b) x *= base;
    acc = series_mul(acc, b, n);
  }
  if (t.has_exp_poly()) acc = series_mul(acc, exp_poly_series(t.exp_poly(), n), n);
  out.series = std::move(acc);
  return out;
}

inline TermSeries term_series_at_infinity(const GeneralTerm& t, std::size_t n) {
  if (t.has_exp_poly()) throw not_expandable("exponential of a polynomial has an essential singularity at infinity");
  const double total = t.total_exponent();
  if (!is_integer_exponent(total)) throw not_expandable("non-integer total power has no Laurent series about infinity");
  TermSeries out;
  out.lead = static_cast<int>(std::llround(total));
  std::vector<double> acc{t.coeff()};
  acc.resize(n, 0.0);
  for (const auto& f : t.factors()) {
    if (std::abs(f.pole) <= same_value_tol) continue;
    acc = series_mul(acc, binomial_series(f.exponent, -f.pole, n), n);
  }
  out.series = std::move(acc);
  return out;
}

}  // namespace detail

/// Laurent expansion of f keeping `order` consecutive coefficients, starting
/// from the leading power (lowest about zero, highest about infinity).
inline LaurentSeries laurent_expand(const SDomainFn& f, int order, ExpansionPoint point = ExpansionPoint::zero) {
  if (order < 0) throw std::invalid_argument("laurent_expand: negative order");
  LaurentSeries out;
  out.point = point;
  if (f.is_zero() || order == 0) return out;
  const auto n = static_cast<std::size_t>(order);

  std::vector<detail::TermSeries> per_term;
  per_term.reserve(f.terms().size());
  for (const auto& t : f.terms())
    per_term.push_back(point == ExpansionPoint::zero ? detail::term_series_at_zero(t, n)
                                                     : detail::term_series_at_infinity(t, n));

  out.coeffs.assign(n, 0.0);
  if (point == ExpansionPoint::zero) {
    int lead = per_term.front().lead;
    for (const auto& ts : per_term) lead = std::min(lead, ts.lead);
    out.min_power = lead;
    for (const auto& ts : per_term)
      for (std::size_t j = 0; j < ts.series.size(); ++j) {
        const int idx = ts.lead - lead + static_cast<int>(j);
        if (idx < order) out.coeffs[static_cast<std::size_t>(idx)] += ts.series[j];
      }
  } else {
    int lead = per_term.front().lead;
    for (const auto& ts : per_term) lead = std::max(lead, ts.lead);
    out.min_power = lead - order + 1;
    for (const auto& ts : per_term)
      for (std::size_t j = 0; j < ts.series.size(); ++j) {
        const int power = ts.lead - static_cast<int>(j);
        if (power >= out.min_power) out.coeffs[static_cast<std::size_t>(power - out.min_power)] += ts.series[j];
      }
  }
  return out;
}

namespace detail {

inline void require_rational(const SDomainFn& f, const char* who) {
  if (!f.is_rational()) throw not_invertible(std::string(who) + ": function is not rational in s");
}

// Taylor coefficients about s = a_j (index j into t.factors()) of
// coeff * prod_{i != j} (s - a_i)^{p_i}, up to t^{n-1}.
inline std::vector<double> regular_part_at_pole(const GeneralTerm& t, std::size_t j, std::size_t n) {
  std::vector<double> acc{t.coeff()};
  acc.resize(n, 0.0);
  const double aj = t.factors()[j].pole;
  for (std::size_t i = 0; i < t.factors().size(); ++i) {
    if (i == j) continue;
    const auto& f = t.factors()[i];
    const double delta = aj - f.pole;
    const auto e = std::llround(f.exponent);
    auto b = binomial_series(f.exponent, 1.0 / delta, n);
    const double base = ipow(delta, e);
    for (auto& x : b) x *= base;
    acc = series_mul(acc, b, n);
  }
  return acc;
}

// Nonnegative-power part of a rational term, ascending coefficients.
inline std::vector<double> polynomial_part(const GeneralTerm& t) {
  const auto lead = std::llround(t.total_exponent());
  if (lead < 0) return {};
  const auto ts = term_series_at_infinity(t, static_cast<std::size_t>(lead + 1));
  std::vector<double> c(static_cast<std::size_t>(lead + 1), 0.0);
  for (std::size_t k = 0; k < ts.series.size(); ++k) c[static_cast<std::size_t>(lead) - k] = ts.series[k];
  return c;
}

}  // namespace detail

/// Partial-fraction form of a rational function: a sum of terms c (s - a)^{-k}
/// plus a polynomial in s.
inline SDomainFn partial_fractions(const SDomainFn& f) {
  detail::require_rational(f, "partial_fractions");
  std::vector<GeneralTerm> out;
  for (const auto& t : f.terms()) {
    for (std::size_t j = 0; j < t.factors().size(); ++j) {
      const auto& fac = t.factors()[j];
      if (fac.exponent >= 0) continue;
      const auto m = static_cast<std::size_t>(std::llround(-fac.exponent));
      const auto g = detail::regular_part_at_pole(t, j, m);
      for (std::size_t k = 0; k < m; ++k)
        out.emplace_back(g[k], std::vector<Factor>{{fac.pole, static_cast<double>(k) - static_cast<double>(m)}});
    }
    const auto poly = detail::polynomial_part(t);
    for (std::size_t k = 0; k < poly.size(); ++k)
      out.emplace_back(poly[k], std::vector<Factor>{{0.0, static_cast<double>(k)}});
  }
  return SDomainFn(std::move(out));
}

namespace detail {

inline std::string format_number(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace detail

/// Human-readable rendering, e.g. "4*(s+0.5)^-1 - (s+0.5)^-2".
inline std::string to_string(const GeneralTerm& t) {
  std::ostringstream os;
  os << detail::format_number(t.coeff());
  for (const auto& f : t.factors()) {
    os << "*(s";
    if (f.pole != 0.0) os << (f.pole > 0 ? "-" : "+") << detail::format_number(std::abs(f.pole));
    os << ")^" << detail::format_number(f.exponent);
  }
  if (t.has_exp_poly()) {
    os << "*exp(";
    bool first = true;
    for (std::size_t k = 1; k < t.exp_poly().size(); ++k) {
      const double q = t.exp_poly()[k];
      if (q == 0.0) continue;
      if (!first) os << (q < 0 ? " - " : " + ");
      else if (q < 0) os << "-";
      os << detail::format_number(std::abs(q)) << "*s^" << k;
      first = false;
    }
    os << ")";
  }
  return os.str();
}

inline std::string to_string(const SDomainFn& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.terms().size(); ++i) {
    if (i) out += " + ";
    out += to_string(f.terms()[i]);
  }
  return out;
}

}  // namespace lapsch
