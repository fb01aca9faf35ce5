#pragma once

#include <concepts>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace lapsch {

/// Exact fraction over a fixed-width signed integer. Arithmetic throws
/// std::overflow_error instead of wrapping.
template <std::signed_integral Int = std::int64_t>
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(Int num) : num_(num) {}  // NOLINT(implicit)
  Rational(Int num, Int den) : num_(num), den_(den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    reduce();
  }

  constexpr Int num() const noexcept { return num_; }
  constexpr Int den() const noexcept { return den_; }
  constexpr double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  constexpr bool is_zero() const noexcept { return num_ == 0; }
  constexpr int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const Int g = std::gcd(a.den_, b.den_);
    const Int da = b.den_ / g, db = a.den_ / g;
    return Rational(add(mul(a.num_, da), mul(b.num_, db)), mul(a.den_, da));
  }
  friend Rational operator-(const Rational& a) { return Rational(mul(a.num_, Int{-1}), a.den_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    const Int g1 = std::gcd(a.num_, b.den_), g2 = std::gcd(b.num_, a.den_);
    const Int n1 = g1 ? a.num_ / g1 : a.num_, d2 = g1 ? b.den_ / g1 : b.den_;
    const Int n2 = g2 ? b.num_ / g2 : b.num_, d1 = g2 ? a.den_ / g2 : a.den_;
    return Rational(mul(n1, n2), mul(d1, d2));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return a * Rational(b.den_, b.num_);
  }
  friend bool operator==(const Rational& a, const Rational& b) noexcept { return a.num_ == b.num_ && a.den_ == b.den_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

 private:
  static Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rational: multiplication overflow");
    return r;
  }
  static Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rational: addition overflow");
    return r;
  }
  void reduce() {
    if (den_ < 0) {
      num_ = mul(num_, Int{-1});
      den_ = mul(den_, Int{-1});
    }
    const Int g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace lapsch
