#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "lapsch/error.hpp"
#include "lapsch/sdomain.hpp"

namespace lapsch {

/// Dense univariate polynomial, ascending coefficients, trailing zeros trimmed.
template <typename T = double>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  const std::vector<T>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
  T coefficient(std::size_t k) const noexcept { return k < c_.size() ? c_[k] : T{}; }

  T operator()(T x) const {
    T acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<T>(k) * c_[k];
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T{});
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(T s, const Polynomial& p) {
    std::vector<T> r = p.c_;
    for (auto& x : r) x *= s;
    return Polynomial(std::move(r));
  }
  /// Multiplication by the monomial x.
  Polynomial shifted() const {
    std::vector<T> r(c_.size() + 1, T{});
    for (std::size_t k = 0; k < c_.size(); ++k) r[k + 1] = c_[k];
    return Polynomial(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T{}) c_.pop_back();
  }
  std::vector<T> c_;
};

using PolynomialR = Polynomial<double>;

/// Physicists' Hermite polynomial from H_{n+1} = 2x H_n - 2n H_{n-1}.
template <typename T = double>
Polynomial<T> hermite(unsigned n) {
  Polynomial<T> prev(std::vector<T>{T{1}});
  if (n == 0) return prev;
  Polynomial<T> cur(std::vector<T>{T{0}, T{2}});
  for (unsigned k = 1; k < n; ++k) {
    Polynomial<T> next = T{2} * cur.shifted() + (-T{2} * static_cast<T>(k)) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// p!! with 0!! = 1!! = 1.
constexpr std::uint64_t double_factorial(unsigned p) noexcept {
  std::uint64_t r = 1;
  for (unsigned k = p; k > 1; k -= 2) r *= k;
  return r;
}

/// Coefficients c_j of k_l(s) = e^{-s} sum_j c_j s^{-j-1},
/// c_j = (l+j)! / (j! (l-j)! 2^j).
inline std::vector<double> mod_sph_bessel_k_coeffs(unsigned l) {
  std::vector<double> c(l + 1);
  double cj = 1.0;  // j = 0
  for (unsigned j = 0; j <= l; ++j) {
    c[j] = cj;
    // ratio c_{j+1}/c_j = (l+j+1)(l-j) / ((j+1) * 2)
    cj *= static_cast<double>(l + j + 1) * static_cast<double>(l - j) / (2.0 * static_cast<double>(j + 1));
  }
  return c;
}

/// Modified spherical Bessel function of the second kind in the convention
/// k_0(s) = e^{-s}/s (no pi/2 prefactor).
inline double mod_sph_bessel_k(unsigned l, double s) {
  if (!(s > 0.0)) throw domain_error("mod_sph_bessel_k requires s > 0");
  const auto c = mod_sph_bessel_k_coeffs(l);
  double sum = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) sum = sum / s + *it;
  return std::exp(-s) / s * sum;
}

/// The same k_l as an s-domain function: sum_j c_j s^{-j-1} e^{-s}.
inline SDomainFn mod_sph_bessel_k_sdomain(unsigned l) {
  const auto c = mod_sph_bessel_k_coeffs(l);
  std::vector<GeneralTerm> terms;
  for (unsigned j = 0; j <= l; ++j)
    terms.emplace_back(c[j], std::vector<Factor>{{0.0, -static_cast<double>(j) - 1.0}}, std::vector<double>{0.0, -1.0});
  return SDomainFn(std::move(terms));
}

}  // namespace lapsch
