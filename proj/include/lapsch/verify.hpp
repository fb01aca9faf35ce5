#pragma once

// Self-check suite run by `lapsch verify`: residuals of the transformed
// equations, the v0 = v0' = 0 dichotomy, moment identities, recurrence
// behaviour and transform round trips. Each check is named so that a
// failing run points at the violated identity.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lapsch/oscillators.hpp"
#include "lapsch/pathology.hpp"
#include "lapsch/sdomain.hpp"
#include "lapsch/specfun.hpp"
#include "lapsch/transforms.hpp"

namespace lapsch {

struct CheckResult {
  std::string name;
  bool passed = false;
  double metric = 0.0;  // worst value of the quantity the check bounds
  std::string detail;
};

struct VerifyOptions {
  double morse_c = 3.0;
  double pt_ell = 2.0;
  std::string check_prefix;                  // run only checks whose name starts with this
  std::optional<OscillatorKind> oscillator;  // restrict per-state checks
  std::optional<int> quantum_number;         // restrict per-state checks
  double perturb_v0 = 0.0;                   // added to v0 in the s-residual of the true V
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// One row of the ground/first-excited table: the tabulated transform and
/// boundary data, kept independent of the eigenstate construction.
struct TabulatedRow {
  Oscillator osc;
  int n = 0;
  SDomainFn V;
  double v0 = 0.0;
  double v0prime = 0.0;

  std::string label() const {
    std::ostringstream os;
    os << to_string(osc.kind());
    if (osc.kind() == OscillatorKind::morse) os << "(c=" << osc.c() << ")";
    if (osc.kind() == OscillatorKind::poschl_teller) os << "(l=" << osc.ell() << ")";
    os << "/n=" << n;
    return os.str();
  }
};

inline std::vector<TabulatedRow> tabulated_rows(double c, double ell) {
  const auto h = Oscillator::harmonic();
  const auto m = Oscillator::morse(c);
  const auto pt = Oscillator::poschl_teller(ell);
  std::vector<TabulatedRow> rows;
  rows.push_back({h, 0, SDomainFn::power(0.0, -1.0), 1.0, 0.0});
  rows.push_back({h, 1, SDomainFn::power(0.0, -2.0), 0.0, 1.0});
  rows.push_back({m, 0, SDomainFn::power(-0.5, -1.0), 1.0, -0.5});
  if (c > 1.5)
    rows.push_back({m, 1, SDomainFn::power(-0.5, -1.0, 2.0 * c - 2.0) - SDomainFn::power(-0.5, -2.0), 2.0 * c - 2.0, -c});
  rows.push_back({pt, 0, SDomainFn::power(0.0, -1.0), 1.0, 0.0});
  if (ell > 1.0) rows.push_back({pt, 1, SDomainFn::power(0.0, -2.0), 0.0, 1.0});
  return rows;
}

/// Real sample points right of every singularity of the tabulated functions.
inline std::vector<double> s_sample_points(std::size_t count = 20) {
  std::vector<double> s(count);
  for (std::size_t i = 0; i < count; ++i) s[i] = 0.6 + 0.2 * static_cast<double>(i);
  return s;
}

inline std::vector<double> xi_sample_points(std::size_t count = 20) {
  std::vector<double> x(count);
  for (std::size_t i = 0; i < count; ++i) x[i] = 0.05 + 0.2 * static_cast<double>(i);
  return x;
}

/// Largest |coefficient| left after subtracting b from a (0 when equal term by term).
inline double term_difference(const SDomainFn& a, const SDomainFn& b) {
  double worst = 0.0;
  for (const auto& t : (a - b).terms()) worst = std::max(worst, std::abs(t.coeff()));
  return worst;
}

namespace detail {

inline bool row_selected(const TabulatedRow& r, const VerifyOptions& o) {
  if (o.oscillator && r.osc.kind() != *o.oscillator) return false;
  if (o.quantum_number && r.n != *o.quantum_number) return false;
  return true;
}

inline CheckResult guarded(const std::string& name, const std::function<CheckResult()>& body) {
  try {
    auto r = body();
    r.name = name;
    return r;
  } catch (const std::exception& e) {
    return {name, false, 0.0, std::string("exception: ") + e.what()};
  }
}

inline std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace detail

inline CheckResult check_table_row(const TabulatedRow& row) {
  const auto st = eigenstate(row.osc, row.n);
  const double dv = term_difference(st.V, row.V);
  const double db = std::max(std::abs(st.v0 - row.v0), std::abs(st.v0prime - row.v0prime));
  CheckResult r;
  r.metric = std::max(dv, db);
  r.passed = dv <= 1e-12 && db <= 1e-12;
  r.detail = "V = " + to_string(st.V) + "; (v0, v0') = (" + detail::fmt(st.v0) + ", " + detail::fmt(st.v0prime) + ")";
  return r;
}

inline CheckResult check_xi_residual(const TabulatedRow& row) {
  const auto st = eigenstate(row.osc, row.n);
  double worst = 0.0;
  for (double xi : xi_sample_points()) {
    const double scale = std::max(1.0, std::abs(st.v(xi)));
    worst = std::max(worst, std::abs(xi_ode_residual(row.osc, st, xi)) / scale);
  }
  return {"", worst <= 1e-10, worst, "max relative residual " + detail::fmt(worst)};
}

inline CheckResult check_s_residual(const TabulatedRow& row, double perturb_v0) {
  const auto st = eigenstate(row.osc, row.n);
  double worst = 0.0;
  for (double s : s_sample_points())
    worst = std::max(worst, std::abs(s_ode_residual(row.osc, st.V, st.v0 + perturb_v0, st.v0prime, s, st.energy_param)));
  return {"", worst <= 1e-10, worst, "max |residual| " + detail::fmt(worst)};
}

/// Homogeneous residual of the v0 = v0' = 0 transform must vanish, and with
/// the true boundary data it must not.
inline CheckResult check_tw_residual(const TabulatedRow& row) {
  const auto st = eigenstate(row.osc, row.n);
  const auto tw = tw_transform(row.osc, row.n);
  double homogeneous = 0.0, true_data_min = std::numeric_limits<double>::infinity();
  for (double s : s_sample_points()) {
    homogeneous = std::max(homogeneous, std::abs(s_ode_residual(row.osc, tw, 0.0, 0.0, s, st.energy_param)));
    true_data_min =
        std::min(true_data_min, std::abs(s_ode_residual(row.osc, tw, st.v0, st.v0prime, s, st.energy_param)));
  }
  CheckResult r;
  r.metric = homogeneous;
  r.passed = homogeneous <= 1e-8 && true_data_min >= 0.1;
  r.detail = "homogeneous (v0 = v0' = 0): max |residual| " + detail::fmt(homogeneous) +
             (homogeneous <= 1e-8 ? " [pass]" : " [FAIL]") + "; true (v0, v0'): min |residual| " +
             detail::fmt(true_data_min) + (true_data_min >= 0.1 ? " [nonzero, as expected]" : " [FAIL: vanishes]");
  return r;
}

/// Residue inversion of the terminated recurrence series is a multiple of H_n.
inline CheckResult check_hermite_equivalence(int n_max = 10) {
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const bool even = n % 2 == 0;
    const auto series = harmonic_recurrence(n, even ? 1.0 : 0.0, even ? 0.0 : 1.0, n + 2);
    const auto v = inverse_by_residues(to_sdomain(series));
    const auto H = hermite(static_cast<unsigned>(n));
    std::vector<double> coeff(static_cast<std::size_t>(n) + 1, 0.0);
    for (const auto& t : v.smooth_terms()) coeff[static_cast<std::size_t>(t.power)] += t.coeff;
    double ratio_min = std::numeric_limits<double>::infinity(), ratio_max = -ratio_min;
    for (int k = 0; k <= n; ++k) {
      const double h = H.coefficient(static_cast<std::size_t>(k));
      const double c = coeff[static_cast<std::size_t>(k)];
      if (h == 0.0) {
        worst = std::max(worst, std::abs(c));
        continue;
      }
      ratio_min = std::min(ratio_min, c / h);
      ratio_max = std::max(ratio_max, c / h);
    }
    worst = std::max(worst, (ratio_max - ratio_min) / std::abs(ratio_max));
  }
  return {"", worst <= 1e-9, worst, "max relative coefficient-ratio spread " + detail::fmt(worst)};
}

inline CheckResult check_recurrence_dichotomy() {
  bool ok = true;
  std::ostringstream os;
  for (int n = 0; n <= 10; ++n) {
    const bool even = n % 2 == 0;
    const auto good = harmonic_recurrence(n, even ? 1.0 : 0.0, even ? 0.0 : 1.0, 40);
    const auto bad = harmonic_recurrence(n, even ? 0.0 : 1.0, even ? 1.0 : 0.0, 40);
    if (!recurrence_terminates(good) || recurrence_terminates(bad)) {
      ok = false;
      os << "parity failure at n=" << n << "; ";
    }
  }
  const auto generic = harmonic_recurrence(0.5, 1.0, 0.0, 202);
  const double ratio = recurrence_coefficient(generic, 202) / recurrence_coefficient(generic, 200);
  const double rel = std::abs(ratio - 400.0) / 400.0;
  if (recurrence_terminates(generic) || rel > 0.05) ok = false;
  os << "n=0.5: V_202/V_200 = " << ratio << " (2k = 400, relative deviation " << detail::fmt(rel) << ")";
  return {"", ok, rel, os.str()};
}

inline CheckResult check_morse_moments() {
  double worst = 0.0;
  for (double c : {2.1, 3.0, 5.0}) {
    const PolyExp v({{2.0 * c - 2.0, 0, 0.5}, {-1.0, 1, 0.5}});
    const auto m = moments(v, 10);
    double pf = 1.0;
    for (int p = 0; p <= 10; ++p) {
      if (p > 0) pf *= p;
      const double expected = std::ldexp(1.0, p + 2) * pf * (c - 2.0 - p);
      worst = std::max(worst, std::abs(*m.values[static_cast<std::size_t>(p)] - expected) / std::max(1.0, std::abs(expected)));
    }
  }
  return {"", worst <= 1e-10, worst, "max relative deviation from 2^{p+2} p! (c-2-p): " + detail::fmt(worst)};
}

/// Moment series against the Taylor expansion of the closed-form transform.
inline CheckResult check_moment_series_consistency() {
  double worst = 0.0;
  for (double c : {2.1, 3.0, 5.0}) {
    const PolyExp v({{2.0 * c - 2.0, 0, 0.5}, {-1.0, 1, 0.5}});
    const auto from_moments = series_from_moments(moments(v, 8));
    const auto closed = SDomainFn::power(-0.5, -1.0, 2.0 * c - 2.0) - SDomainFn::power(-0.5, -2.0);
    const auto taylor = laurent_expand(closed, 9);
    for (int p = 0; p <= 8; ++p) {
      const double a = from_moments.coefficient(p), b = taylor.coefficient(p);
      worst = std::max(worst, std::abs(a - b) / std::max(1e-300, std::max(std::abs(a), std::abs(b))));
    }
  }
  return {"", worst <= 1e-9, worst, "max relative mismatch " + detail::fmt(worst)};
}

inline CheckResult check_tw_deviation_moments(unsigned p_max = 15) {
  bool ok = true;
  std::ostringstream os;
  int last_sign = 0;
  for (unsigned p = 0; p <= p_max; ++p) {
    const auto closed = tw_deviation_moment(p);
    const auto series = tw_deviation_moment_from_series(p, p);
    if (!(closed == series)) {
      ok = false;
      os << "M_" << p << ": " << closed << " vs " << series << "; ";
    }
    if (p % 2 == 0 && !closed.is_zero()) ok = false;
    if (p % 2 == 1) {
      if (last_sign != 0 && closed.sign() != -last_sign) ok = false;
      last_sign = closed.sign();
    }
  }
  os << "closed form and series agree exactly for p <= " << p_max;
  return {"", ok, 0.0, os.str()};
}

/// inverse_by_residues(forward_laplace(f)) == f for pseudo-random decaying PolyExp.
inline CheckResult check_residue_round_trip(int trials = 100) {
  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0), decay(0.1, 3.0);
  std::uniform_int_distribution<int> power(0, 4), count(1, 4);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    std::vector<SmoothTerm> terms;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) terms.push_back({coeff(rng), power(rng), decay(rng)});
    const PolyExp f(terms);
    const auto back = inverse_by_residues(forward_laplace(f));
    const auto diff = back - f;
    for (const auto& d : diff.smooth_terms()) worst = std::max(worst, std::abs(d.coeff));
    if (back.has_distributional()) worst = std::max(worst, 1.0);
  }
  return {"", worst <= 1e-10, worst, "max coefficient mismatch " + detail::fmt(worst)};
}

inline CheckResult check_delta_inverse() {
  const auto f = inverse_by_residues(SDomainFn::constant(1.0));
  const bool ok = f.smooth_terms().empty() && f.distributional_terms().size() == 1 &&
                  f.distributional_terms()[0].order == 0 && f.distributional_terms()[0].coeff == 1.0;
  return {"", ok, 0.0, ok ? "L^-1[1] = delta(xi)" : "L^-1[1] is not a pure delta"};
}

inline CheckResult check_bromwich_sanity() {
  double worst = 0.0;
  for (double xi : {0.5, 1.0, 2.0}) {
    worst = std::max(worst, std::abs(bromwich_invert(SDomainFn::power(0.0, -1.0), xi, 0.1, 400.0).value() - 1.0));
    worst = std::max(worst, std::abs(bromwich_invert(SDomainFn::power(-0.5, -1.0), xi, 0.1, 400.0).value() -
                                     std::exp(-0.5 * xi)));
  }
  return {"", worst <= 1e-3, worst, "max |f_400 - f| " + detail::fmt(worst)};
}

inline VerifyReport run_verification(const VerifyOptions& opt = {}) {
  VerifyReport report;
  const auto wanted = [&](const std::string& name) { return name.rfind(opt.check_prefix, 0) == 0; };
  const auto add = [&](const std::string& name, const std::function<CheckResult()>& body) {
    if (wanted(name)) report.checks.push_back(detail::guarded(name, body));
  };

  const auto rows = tabulated_rows(opt.morse_c, opt.pt_ell);
  for (const auto& row : rows) {
    if (!detail::row_selected(row, opt)) continue;
    add("tabulated/" + row.label(), [&] { return check_table_row(row); });
    add("xi-residual/" + row.label(), [&] { return check_xi_residual(row); });
    add("s-residual/" + row.label(), [&] { return check_s_residual(row, opt.perturb_v0); });
    // s^l k_l(s) has a closed form only for integer l.
    if (row.osc.kind() != OscillatorKind::poschl_teller || is_integer_exponent(row.osc.ell()))
      add("tw-residual/" + row.label(), [&] { return check_tw_residual(row); });
  }
  add("hermite-equivalence", [] { return check_hermite_equivalence(); });
  add("recurrence-dichotomy", [] { return check_recurrence_dichotomy(); });
  add("morse-moments", [] { return check_morse_moments(); });
  add("moment-series-consistency", [] { return check_moment_series_consistency(); });
  add("tw-deviation-moments", [] { return check_tw_deviation_moments(); });
  add("residue-round-trip", [] { return check_residue_round_trip(); });
  add("delta-inverse", [] { return check_delta_inverse(); });
  add("bromwich-sanity", [] { return check_bromwich_sanity(); });
  return report;
}

}  // namespace lapsch
