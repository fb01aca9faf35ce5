#pragma once

// Harmonic, Morse and modified Poschl-Teller oscillators solved through the
// Laplace transform of the reduced wavefunction v(xi).
//
//   kind        xi                 v(xi)                        energy parameter
//   harmonic    sqrt(m w / hb) x   e^{xi^2/2} psi               n = E/(hb w) - 1/2
//   Morse       2c e^{-alpha x}    xi^{n-c+1/2} psi             n = c - 1/2 - sqrt(-2mE)/(alpha hb)
//   PT          tanh(alpha x)      (1-xi^2)^{-mu/2} psi         mu = sqrt(-2mE)/(alpha hb)

#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lapsch/error.hpp"
#include "lapsch/sdomain.hpp"
#include "lapsch/specfun.hpp"
#include "lapsch/transforms.hpp"

namespace lapsch {

enum class OscillatorKind { harmonic, morse, poschl_teller };

inline std::string to_string(OscillatorKind k) {
  switch (k) {
    case OscillatorKind::harmonic: return "harmonic";
    case OscillatorKind::morse: return "morse";
    case OscillatorKind::poschl_teller: return "poschl-teller";
  }
  return "?";
}

/// Dimensionful parameters, only needed to map between x and xi.
struct PhysicalParams {
  double mass = 1.0;
  double omega = 1.0;  // harmonic
  double alpha = 1.0;  // Morse, Poschl-Teller
  double hbar = 1.0;
};

class Oscillator {
 public:
  static Oscillator harmonic(std::optional<PhysicalParams> phys = std::nullopt) {
    return Oscillator(OscillatorKind::harmonic, 0.0, phys);
  }
  static Oscillator morse(double c, std::optional<PhysicalParams> phys = std::nullopt) {
    if (!(c > 0.0)) throw domain_error("Morse requires c > 0");
    return Oscillator(OscillatorKind::morse, c, phys);
  }
  static Oscillator poschl_teller(double ell, std::optional<PhysicalParams> phys = std::nullopt) {
    if (!(ell > 0.0)) throw domain_error("Poschl-Teller requires l > 0");
    return Oscillator(OscillatorKind::poschl_teller, ell, phys);
  }
  /// Morse well U = A (e^{-2 alpha x} - 2 e^{-alpha x}); c = sqrt(2 m A) / (alpha hbar).
  static Oscillator morse_from_depth(double depth, PhysicalParams phys) {
    return morse(std::sqrt(2.0 * phys.mass * depth) / (phys.alpha * phys.hbar), phys);
  }
  /// U = -A sech^2(alpha x); l = (sqrt(1 + 8 m A / (alpha hbar)^2) - 1) / 2.
  static Oscillator poschl_teller_from_depth(double depth, PhysicalParams phys) {
    const double ah = phys.alpha * phys.hbar;
    return poschl_teller(0.5 * (std::sqrt(1.0 + 8.0 * phys.mass * depth / (ah * ah)) - 1.0), phys);
  }

  OscillatorKind kind() const noexcept { return kind_; }
  /// c for Morse, l for Poschl-Teller, 0 for harmonic.
  double strength() const noexcept { return strength_; }
  double c() const noexcept { return strength_; }
  double ell() const noexcept { return strength_; }
  const std::optional<PhysicalParams>& physical() const noexcept { return phys_; }

 private:
  Oscillator(OscillatorKind k, double strength, std::optional<PhysicalParams> phys)
      : kind_(k), strength_(strength), phys_(phys) {}

  OscillatorKind kind_;
  double strength_;
  std::optional<PhysicalParams> phys_;
};

/// One stationary state in the reduced variables.
struct BoundState {
  int quantum_number = 0;
  double energy_param = 0.0;  // n for harmonic/Morse, mu for Poschl-Teller
  PolyExp v;                  // v(xi)
  SDomainFn V;                // L[v](s)
  double v0 = 0.0;            // v(0)
  double v0prime = 0.0;       // v'(0)
};

/// Transformed equation  A2 V'' + A1 V' + A0 V + B0 v0 + B1 v0' = 0.
struct SOdeSpec {
  SDomainFn second, first, zeroth;
  SDomainFn v0_coeff, v0prime_coeff;
};

namespace detail {

inline const PhysicalParams& require_physical(const Oscillator& osc) {
  if (!osc.physical()) throw domain_error("physical parameters are required to map between x and xi");
  return *osc.physical();
}

}  // namespace detail

inline double scale_to_xi(const Oscillator& osc, double x) {
  const auto& p = detail::require_physical(osc);
  switch (osc.kind()) {
    case OscillatorKind::harmonic: return std::sqrt(p.mass * p.omega / p.hbar) * x;
    case OscillatorKind::morse: return 2.0 * osc.c() * std::exp(-p.alpha * x);
    case OscillatorKind::poschl_teller: return std::tanh(p.alpha * x);
  }
  return 0.0;
}

inline double scale_from_xi(const Oscillator& osc, double xi) {
  const auto& p = detail::require_physical(osc);
  switch (osc.kind()) {
    case OscillatorKind::harmonic: return xi / std::sqrt(p.mass * p.omega / p.hbar);
    case OscillatorKind::morse:
      if (!(xi > 0.0)) throw domain_error("Morse xi must be positive");
      return -std::log(xi / (2.0 * osc.c())) / p.alpha;
    case OscillatorKind::poschl_teller:
      if (!(std::abs(xi) < 1.0)) throw domain_error("Poschl-Teller xi must satisfy |xi| < 1");
      return std::atanh(xi) / p.alpha;
  }
  return 0.0;
}

/// Left-hand side of the xi-domain equation for state.v with the state's
/// energy parameter.
inline double xi_ode_residual(const Oscillator& osc, const BoundState& state, double xi) {
  const auto d1 = state.v.derivative();
  const auto d2 = d1.derivative();
  const double v = state.v(xi), vp = d1(xi), vpp = d2(xi);
  const double e = state.energy_param;
  switch (osc.kind()) {
    case OscillatorKind::harmonic: return vpp - 2.0 * xi * vp + 2.0 * e * v;
    case OscillatorKind::morse: return xi * vpp + 2.0 * (osc.c() - e) * vp + (osc.c() - xi / 4.0) * v;
    case OscillatorKind::poschl_teller: {
      const double l = osc.ell();
      return (1.0 - xi * xi) * vpp - 2.0 * (e + 1.0) * xi * vp + (l * (l + 1.0) - e * (e + 1.0)) * v;
    }
  }
  return 0.0;
}

/// Coefficients of the transformed equation for energy parameter n (or mu).
inline SOdeSpec s_ode_spec(const Oscillator& osc, double energy_param) {
  const double e = energy_param;
  const auto s = SDomainFn::monomial(1);
  SOdeSpec spec;
  switch (osc.kind()) {
    case OscillatorKind::harmonic:
      // 2s V' + (s^2 + 2n + 2) V - v0 s - v0' = 0
      spec.first = 2.0 * s;
      spec.zeroth = SDomainFn::polynomial({2.0 * e + 2.0, 0.0, 1.0});
      spec.v0_coeff = -1.0 * s;
      spec.v0prime_coeff = SDomainFn::constant(-1.0);
      break;
    case OscillatorKind::morse: {
      // (1/4 - s^2) V' + [c + 2(c-n-1) s] V - [2(c-n) - 1] v0 = 0
      const double c = osc.c();
      spec.first = SDomainFn::polynomial({0.25, 0.0, -1.0});
      spec.zeroth = SDomainFn::polynomial({c, 2.0 * (c - e - 1.0)});
      spec.v0_coeff = SDomainFn::constant(-(2.0 * (c - e) - 1.0));
      break;
    }
    case OscillatorKind::poschl_teller: {
      // -s^2 V'' + 2(mu-1) s V' + [(l+mu)(l+1-mu) + s^2] V - v0 s - v0' = 0
      const double l = osc.ell();
      spec.second = SDomainFn::monomial(2, -1.0);
      spec.first = 2.0 * (e - 1.0) * s;
      spec.zeroth = SDomainFn::polynomial({(l + e) * (l + 1.0 - e), 0.0, 1.0});
      spec.v0_coeff = -1.0 * s;
      spec.v0prime_coeff = SDomainFn::constant(-1.0);
      break;
    }
  }
  return spec;
}

/// Residual of the transformed equation at real s.
inline double s_ode_residual(const Oscillator& osc, const SDomainFn& V, double v0, double v0prime, double s,
                             double energy_param) {
  const auto spec = s_ode_spec(osc, energy_param);
  const auto dV = differentiate(V);
  double r = evaluate(spec.first, s) * evaluate(dV, s) + evaluate(spec.zeroth, s) * evaluate(V, s);
  if (!spec.second.is_zero()) r += evaluate(spec.second, s) * evaluate(differentiate(dV), s);
  if (!spec.v0_coeff.is_zero()) r += evaluate(spec.v0_coeff, s) * v0;
  if (!spec.v0prime_coeff.is_zero()) r += evaluate(spec.v0prime_coeff, s) * v0prime;
  return r;
}

/// Coefficients V_k of V(s) = sum_k V_k s^{-(k+1)} from V_{k+2} = -2(n-k) V_k,
/// seeded with V_0 = v0, V_1 = v0'. Returned about infinity, k = 0..kmax.
inline LaurentSeries harmonic_recurrence(double n, double v0, double v0prime, int kmax) {
  if (kmax < 2) throw std::invalid_argument("harmonic_recurrence requires kmax >= 2");
  std::vector<double> V(static_cast<std::size_t>(kmax) + 1, 0.0);
  V[0] = v0;
  V[1] = v0prime;
  for (int k = 0; k + 2 <= kmax; ++k)
    V[static_cast<std::size_t>(k) + 2] = -2.0 * (n - k) * V[static_cast<std::size_t>(k)];
  LaurentSeries out;
  out.point = ExpansionPoint::infinity;
  out.min_power = -(kmax + 1);
  out.coeffs.assign(V.rbegin(), V.rend());
  return out;
}

/// V_k of a recurrence series (coefficient of s^{-(k+1)}).
inline double recurrence_coefficient(const LaurentSeries& series, int k) { return series.coefficient(-(k + 1)); }

/// True when both parity chains of the recurrence have reached zero inside the window.
inline bool recurrence_terminates(const LaurentSeries& series) {
  const int kmax = -series.min_power - 1;
  return recurrence_coefficient(series, kmax) == 0.0 && recurrence_coefficient(series, kmax - 1) == 0.0;
}

/// Allowed quantum numbers; the harmonic ladder is truncated to `harmonic_limit` entries.
inline std::vector<int> quantize(const Oscillator& osc, int harmonic_limit = 11) {
  std::vector<int> out;
  switch (osc.kind()) {
    case OscillatorKind::harmonic:
      for (int n = 0; n < harmonic_limit; ++n) out.push_back(n);
      break;
    case OscillatorKind::morse:
      for (int n = 0; n < osc.c() - 0.5; ++n) out.push_back(n);
      break;
    case OscillatorKind::poschl_teller:
      for (int n = 0; osc.ell() - n > 0.0; ++n) out.push_back(n);
      break;
  }
  if (out.empty()) {
    std::ostringstream os;
    os << "no bound states: Morse requires c > 1/2 (c = " << osc.c() << ")";
    throw no_bound_states(os.str());
  }
  return out;
}

namespace detail {

inline void require_allowed(const Oscillator& osc, int n) {
  std::ostringstream os;
  if (n < 0) {
    os << "quantum number must be nonnegative (n = " << n << ")";
    throw invalid_quantum_number(os.str());
  }
  switch (osc.kind()) {
    case OscillatorKind::harmonic: return;
    case OscillatorKind::morse:
      if (!(n < osc.c() - 0.5)) {
        os << "Morse requires n < c - 1/2 (n = " << n << ", c = " << osc.c() << ")";
        throw invalid_quantum_number(os.str());
      }
      return;
    case OscillatorKind::poschl_teller:
      if (!(osc.ell() - n > 0.0)) {
        os << "Poschl-Teller requires mu = l - n > 0 (n = " << n << ", l = " << osc.ell() << ")";
        throw invalid_quantum_number(os.str());
      }
      return;
  }
}

inline void require_tabulated(const Oscillator& osc, int n) {
  if (osc.kind() != OscillatorKind::harmonic && n > 1) {
    std::ostringstream os;
    os << to_string(osc.kind()) << " states are only available for n = 0, 1 (n = " << n << ")";
    throw unsupported_excitation(os.str());
  }
}

}  // namespace detail

/// Dimensionless energy: E/(hbar omega) for harmonic, E 2m/(alpha hbar)^2 otherwise.
inline double eigenenergy(const Oscillator& osc, int n) {
  detail::require_allowed(osc, n);
  switch (osc.kind()) {
    case OscillatorKind::harmonic: return n + 0.5;
    case OscillatorKind::morse: {
      const double mu = osc.c() - 0.5 - n;
      return -mu * mu;
    }
    case OscillatorKind::poschl_teller: {
      const double mu = osc.ell() - n;
      return -mu * mu;
    }
  }
  return 0.0;
}

inline std::string energy_unit(OscillatorKind k) {
  return k == OscillatorKind::harmonic ? "hbar*omega" : "alpha^2*hbar^2/(2m)";
}

/// Energy parameter entering the reduced equations: n, or mu = l - n for Poschl-Teller.
inline double energy_parameter(const Oscillator& osc, int n) {
  return osc.kind() == OscillatorKind::poschl_teller ? osc.ell() - n : static_cast<double>(n);
}

namespace detail {

inline BoundState make_state(int n, double e, PolyExp v) {
  BoundState st;
  st.quantum_number = n;
  st.energy_param = e;
  st.V = forward_laplace(v);
  st.v0 = v(0.0);
  st.v0prime = v.derivative()(0.0);
  st.v = std::move(v);
  return st;
}

}  // namespace detail

/// Physical solution for quantum number n (unnormalized).
///
/// Harmonic states of any n come out of the terminating recurrence seeded
/// with (v0, v0') = (1, 0) for even n and (0, 1) for odd n, inverted by
/// residues. Morse and Poschl-Teller states are available for n = 0, 1.
inline BoundState eigenstate(const Oscillator& osc, int n) {
  detail::require_allowed(osc, n);
  detail::require_tabulated(osc, n);
  switch (osc.kind()) {
    case OscillatorKind::harmonic: {
      const bool even = n % 2 == 0;
      const auto series = harmonic_recurrence(n, even ? 1.0 : 0.0, even ? 0.0 : 1.0, n + 2);
      return detail::make_state(n, n, inverse_by_residues(to_sdomain(series)));
    }
    case OscillatorKind::morse: {
      if (n == 0) return detail::make_state(0, 0.0, PolyExp({{1.0, 0, 0.5}}));
      const double c = osc.c();
      return detail::make_state(1, 1.0, PolyExp({{2.0 * c - 2.0, 0, 0.5}, {-1.0, 1, 0.5}}));
    }
    case OscillatorKind::poschl_teller: {
      const double mu = osc.ell() - n;
      return detail::make_state(n, mu, PolyExp({{1.0, n, 0.0}}));
    }
  }
  throw std::logic_error("unreachable");
}

/// psi(x), unnormalized, recovered from v(xi).
inline double wavefunction(const Oscillator& osc, const BoundState& state, double x) {
  const double xi = scale_to_xi(osc, x);
  const double v = state.v(xi);
  switch (osc.kind()) {
    case OscillatorKind::harmonic: return std::exp(-0.5 * xi * xi) * v;
    case OscillatorKind::morse:
      return std::pow(xi, osc.c() - state.energy_param - 0.5) * v;
    case OscillatorKind::poschl_teller:
      // v is a polynomial of definite parity, so evaluating it at xi < 0
      // gives psi(-x) = (-1)^n psi(x).
      return std::pow(1.0 - xi * xi, 0.5 * state.energy_param) * v;
  }
  return 0.0;
}

/// Factor N such that N psi has unit L2 norm over x. Trapezoid rule on a grid
/// that is widened until |psi|^2 at both ends is below 1e-12 of its peak.
inline double l2_normalization(const Oscillator& osc, const BoundState& state, std::size_t points = 20001) {
  detail::require_physical(osc);
  const auto psi2 = [&](double x) {
    const double p = wavefunction(osc, state, x);
    return p * p;
  };
  double lo = -1.0, hi = 1.0;
  for (int iter = 0; iter < 60; ++iter) {
    double peak = 0.0;
    for (std::size_t i = 0; i <= 200; ++i) peak = std::max(peak, psi2(lo + (hi - lo) * static_cast<double>(i) / 200.0));
    const bool lo_ok = psi2(lo) <= 1e-12 * peak;
    const bool hi_ok = psi2(hi) <= 1e-12 * peak;
    if (lo_ok && hi_ok) break;
    if (!lo_ok) lo *= 1.5;
    if (!hi_ok) hi *= 1.5;
  }
  const double h = (hi - lo) / static_cast<double>(points - 1);
  double sum = 0.5 * (psi2(lo) + psi2(hi));
  for (std::size_t i = 1; i + 1 < points; ++i) sum += psi2(lo + h * static_cast<double>(i));
  return 1.0 / std::sqrt(sum * h);
}

/// The s-domain functions obtained when v0 = v0' = 0 is assumed.
///
/// Harmonic e^{-s^2/4} s^{-1-n}; Morse (s-1/2)^{2c-1-n} (s+1/2)^{-1-n};
/// Poschl-Teller s^{l-n} k_l(s), which needs integer l for the closed form of k_l.
inline SDomainFn tw_transform(const Oscillator& osc, int n) {
  detail::require_allowed(osc, n);
  if (n > 1) {
    std::ostringstream os;
    os << "the v0 = v0' = 0 transform is only tabulated for n = 0, 1 (n = " << n << ")";
    throw unsupported_excitation(os.str());
  }
  switch (osc.kind()) {
    case OscillatorKind::harmonic:
      return SDomainFn(GeneralTerm(1.0, {{0.0, -1.0 - n}}, {0.0, 0.0, -0.25}));
    case OscillatorKind::morse: {
      const double c = osc.c();
      return SDomainFn(GeneralTerm(1.0, {{0.5, 2.0 * c - 1.0 - n}, {-0.5, -1.0 - n}}));
    }
    case OscillatorKind::poschl_teller: {
      const double l = osc.ell();
      if (!is_integer_exponent(l))
        throw domain_error("s^l k_l(s) is only available in closed form for integer l");
      const auto k = mod_sph_bessel_k_sdomain(static_cast<unsigned>(std::llround(l)));
      return SDomainFn::monomial(static_cast<int>(std::llround(l)) - n) * k;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace lapsch
