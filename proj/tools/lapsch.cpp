// lapsch: solve the harmonic, Morse and Poschl-Teller oscillators by Laplace
// transform, run the self-check suite, and reproduce the oscillation profile
// of the inverse transform of e^{-s^2/4}/s.
//
// Exit codes: 0 success, 1 verification failure, 2 bad input, 3 empty result set.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lapsch/lapsch.hpp"
#include "lapsch/report.hpp"

namespace {

namespace fs = std::filesystem;
using namespace lapsch;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_bad_input = 2;
constexpr int exit_empty = 3;

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OscillatorArgs {
  std::string kind = "harmonic";
  std::optional<double> c;
  std::optional<double> ell;
  double mass = 1.0, omega = 1.0, alpha = 1.0, hbar = 1.0;
};

void add_oscillator_options(CLI::App* cmd, OscillatorArgs& a, bool with_physical) {
  cmd->add_option("--oscillator", a.kind, "harmonic | morse | poschl-teller (alias pt)");
  cmd->add_option("--c", a.c, "Morse strength c = sqrt(2mA)/(alpha hbar)");
  cmd->add_option("--ell", a.ell, "Poschl-Teller strength l");
  if (with_physical) {
    cmd->add_option("--mass", a.mass, "particle mass (for psi(x) output)");
    cmd->add_option("--omega", a.omega, "harmonic angular frequency");
    cmd->add_option("--alpha", a.alpha, "Morse / Poschl-Teller inverse range");
    cmd->add_option("--hbar", a.hbar, "reduced Planck constant");
  }
}

OscillatorKind parse_kind(const std::string& s) {
  if (s == "harmonic") return OscillatorKind::harmonic;
  if (s == "morse") return OscillatorKind::morse;
  if (s == "poschl-teller" || s == "pt" || s == "poschl_teller") return OscillatorKind::poschl_teller;
  throw BadInput("unknown oscillator '" + s + "' (expected harmonic, morse or poschl-teller)");
}

Oscillator make_oscillator(const OscillatorArgs& a) {
  const PhysicalParams phys{a.mass, a.omega, a.alpha, a.hbar};
  if (!(a.mass > 0 && a.omega > 0 && a.alpha > 0 && a.hbar > 0))
    throw BadInput("physical parameters must be positive");
  switch (parse_kind(a.kind)) {
    case OscillatorKind::harmonic: return Oscillator::harmonic(phys);
    case OscillatorKind::morse:
      if (!a.c) throw BadInput("Morse requires --c");
      if (!(*a.c > 0)) throw BadInput("Morse requires c > 0");
      return Oscillator::morse(*a.c, phys);
    case OscillatorKind::poschl_teller:
      if (!a.ell) throw BadInput("Poschl-Teller requires --ell");
      if (!(*a.ell > 0)) throw BadInput("Poschl-Teller requires l > 0");
      return Oscillator::poschl_teller(*a.ell, phys);
  }
  throw BadInput("unreachable");
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw BadInput("cannot open '" + path.string() + "' for writing");
  out << text;
}

std::vector<double> parse_gamma_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double g = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(g);
    } catch (const std::exception&) {
      throw BadInput("cannot parse gamma value '" + item + "'");
    }
  }
  if (out.empty()) throw BadInput("empty --gamma list");
  for (double g : out)
    if (!(g >= 10.0 && g <= 1000.0)) throw BadInput("gamma must lie in [10, 1000]");
  return out;
}

std::string gamma_tag(double g) {
  std::ostringstream os;
  os << g;
  return os.str();
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  OscillatorArgs osc;
  std::optional<int> n;
  int max_n = 3;
  std::string out;
  std::string psi_csv;
  std::optional<double> x_min, x_max;
  int x_points = 201;
};

json state_json(const Oscillator& osc, int n) {
  const std::string eunit = energy_unit(osc.kind());
  const bool pt = osc.kind() == OscillatorKind::poschl_teller;
  json j = {{"quantum_number", n},
            {"quantum_number_unit", "dimensionless"},
            {"energy", eigenenergy(osc, n)},
            {"energy_unit", eunit},
            {"energy_parameter_symbol", pt ? "mu" : "n"},
            {"energy_parameter", energy_parameter(osc, n)},
            {"energy_parameter_unit", "dimensionless"}};
  try {
    const auto st = eigenstate(osc, n);
    j["v"] = to_json(st.v);
    j["V"] = to_json(st.V);
    j["v0"] = st.v0;
    j["v0_unit"] = "dimensionless";
    j["v0prime"] = st.v0prime;
    j["v0prime_unit"] = "dimensionless";
  } catch (const unsupported_excitation& e) {
    j["v"] = nullptr;
    j["V"] = nullptr;
    j["note"] = e.what();
  }
  return j;
}

int cmd_solve(const SolveArgs& a) {
  const auto osc = make_oscillator(a.osc);
  std::vector<int> ns;
  if (a.n) {
    eigenenergy(osc, *a.n);  // validates the quantum number
    ns.push_back(*a.n);
  } else {
    ns = quantize(osc, a.max_n + 1);
  }

  json osc_j = {{"kind", to_string(osc.kind())}};
  if (osc.kind() == OscillatorKind::morse) osc_j["c"] = osc.c(), osc_j["c_unit"] = "dimensionless";
  if (osc.kind() == OscillatorKind::poschl_teller) osc_j["ell"] = osc.ell(), osc_j["ell_unit"] = "dimensionless";
  json states = json::array();
  for (int n : ns) states.push_back(state_json(osc, n));
  const json doc = {{"oscillator", osc_j}, {"states", states}};

  if (a.out.empty())
    std::cout << doc.dump(2) << '\n';
  else
    write_text(a.out, doc.dump(2) + "\n");

  if (!a.psi_csv.empty()) {
    const double span = osc.kind() == OscillatorKind::harmonic ? 5.0 : 5.0 / osc.physical()->alpha;
    double lo = a.x_min.value_or(osc.kind() == OscillatorKind::morse ? -2.0 / osc.physical()->alpha : -span);
    double hi = a.x_max.value_or(osc.kind() == OscillatorKind::morse ? 8.0 / osc.physical()->alpha : span);
    if (!(hi > lo) || a.x_points < 2) throw BadInput("psi grid requires x-max > x-min and at least 2 points");
    std::vector<BoundState> sts;
    std::ostringstream csv;
    csv << "x,xi";
    for (int n : ns) {
      try {
        sts.push_back(eigenstate(osc, n));
        csv << ",psi_n" << n;
      } catch (const unsupported_excitation&) {
      }
    }
    csv << '\n';
    for (int i = 0; i < a.x_points; ++i) {
      const double x = lo + (hi - lo) * i / (a.x_points - 1);
      csv << csv_number(x) << ',' << csv_number(scale_to_xi(osc, x));
      for (const auto& st : sts) csv << ',' << csv_number(wavefunction(osc, st, x));
      csv << '\n';
    }
    write_text(a.psi_csv, csv.str());
  }
  return exit_ok;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  OscillatorArgs osc;
  bool oscillator_given = false;
  std::optional<int> n;
  std::string check;
  double perturb_v0 = 0.0;
  std::string out;
};

int cmd_verify(const VerifyArgs& a) {
  VerifyOptions opt;
  opt.morse_c = a.osc.c.value_or(3.0);
  opt.pt_ell = a.osc.ell.value_or(2.0);
  if (!(opt.morse_c > 0)) throw BadInput("Morse requires c > 0");
  if (!(opt.pt_ell > 0)) throw BadInput("Poschl-Teller requires l > 0");
  opt.check_prefix = a.check;
  if (a.oscillator_given) opt.oscillator = parse_kind(a.osc.kind);
  opt.quantum_number = a.n;
  opt.perturb_v0 = a.perturb_v0;

  const auto report = run_verification(opt);
  if (report.checks.empty()) throw BadInput("no verification check matches the selection");
  const auto doc = to_json(report);
  if (a.out.empty())
    std::cout << doc.dump(2) << '\n';
  else
    write_text(a.out, doc.dump(2) + "\n");
  for (const auto& c : report.checks) std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  return report.all_passed() ? exit_ok : exit_verify_failed;
}

// ---------------------------------------------------------------- pathology

struct PathologyArgs {
  std::string gamma = "50,100,200";
  std::string fig;
  double oscillations = 5.0;
  std::optional<double> xi_over_gamma_max;
  std::optional<int> samples_per_wavelength;
  std::string out_dir = ".";
  std::string prefix = "pathology";
};

PlotPanel panel_a(const std::vector<PathologyProfile>& ps) {
  PlotPanel p{"(a) rescaled v_gamma vs gamma xi / 2pi", "gamma xi / 2 pi", "gamma^2 exp(-gamma^2/4) v_gamma", {}};
  for (const auto& pr : ps) {
    PlotSeries s{"gamma = " + gamma_tag(pr.gamma), {}, pr.rescaled_values};
    for (double xi : pr.xi_grid) s.x.push_back(pr.gamma * xi / (2.0 * std::numbers::pi));
    p.series.push_back(std::move(s));
  }
  return p;
}

PlotPanel panel_b(const std::vector<PathologyProfile>& ps) {
  PlotPanel p{"(b) |rescaled v_gamma| vs xi / gamma", "xi / gamma", "gamma^2 exp(-gamma^2/4) |v_gamma|", {}};
  for (const auto& pr : ps) {
    PlotSeries s{"gamma = " + gamma_tag(pr.gamma), {}, {}};
    for (std::size_t i = 0; i < pr.xi_grid.size(); ++i) {
      s.x.push_back(pr.xi_grid[i] / pr.gamma);
      s.y.push_back(std::abs(pr.rescaled_values[i]));
    }
    p.series.push_back(std::move(s));
  }
  return p;
}

void print_estimates(const PathologyProfile& p) {
  std::cout << "gamma=" << gamma_tag(p.gamma) << " plateau=" << p.plateau_estimate << " (extrema " << p.extrema_used
            << ", 191/300=" << 191.0 / 300.0 << ") wavelength*gamma/2pi="
            << p.wavelength_estimate * p.gamma / (2.0 * std::numbers::pi) << " points=" << p.xi_grid.size() << '\n';
}

std::vector<PathologyProfile> run_profiles(const std::vector<double>& gammas, const std::vector<double>& z_max, int spw,
                                           const fs::path& dir, const std::string& prefix) {
  std::vector<PathologyProfile> out;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    out.push_back(profile(gammas[i], z_max[i], spw));
    std::ostringstream csv;
    write_profile_csv(csv, out.back());
    write_text(dir / (prefix + "_gamma" + gamma_tag(gammas[i]) + ".csv"), csv.str());
    print_estimates(out.back());
  }
  return out;
}

int cmd_pathology(const PathologyArgs& a) {
  const auto gammas = parse_gamma_list(a.gamma);
  if (!a.fig.empty() && a.fig != "a" && a.fig != "b") throw BadInput("--fig must be 'a' or 'b'");
  if (!(a.oscillations > 0)) throw BadInput("--oscillations must be positive");
  const bool fig_b = a.fig == "b";
  const int spw = a.samples_per_wavelength.value_or(fig_b ? 8 : 32);
  if (spw < 8) throw BadInput("--samples-per-wavelength must be at least 8");
  const double zb = a.xi_over_gamma_max.value_or(1.0);
  if (fig_b && !(zb > 0.0 && zb <= 2.0)) throw BadInput("--xi-over-gamma-max must lie in (0, 2]");

  std::vector<double> z_max;
  for (double g : gammas) z_max.push_back(fig_b ? zb : a.oscillations * 2.0 * std::numbers::pi / (g * g));
  const auto profiles = run_profiles(gammas, z_max, spw, a.out_dir, a.prefix);

  std::vector<PlotPanel> panels;
  if (a.fig != "b") panels.push_back(panel_a(profiles));
  if (a.fig != "a") panels.push_back(panel_b(profiles));
  std::ostringstream svg;
  write_svg(svg, panels);
  write_text(fs::path(a.out_dir) / (a.prefix + ".svg"), svg.str());
  return exit_ok;
}

// ---------------------------------------------------------------- figure

int cmd_figure(const std::string& out_dir) {
  const fs::path dir(out_dir);
  const std::vector<double> gammas{50.0, 100.0, 200.0};

  std::cout << "figure (a): first 5 oscillations\n";
  std::vector<double> za;
  for (double g : gammas) za.push_back(5.0 * 2.0 * std::numbers::pi / (g * g));
  const auto pa = run_profiles(gammas, za, 32, dir, "fig1a");
  std::ostringstream svg_a;
  write_svg(svg_a, {panel_a(pa)});
  write_text(dir / "fig1a.svg", svg_a.str());

  std::cout << "figure (b): gamma = 50, 100, 200 up to xi/gamma = 2, 1, 0.5\n";
  const auto pb = run_profiles(gammas, {2.0, 1.0, 0.5}, 8, dir, "fig1b");
  std::ostringstream svg_b;
  write_svg(svg_b, {panel_b(pb)});
  write_text(dir / "fig1b.svg", svg_b.str());
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplace-transform solutions of the stationary Schrodinger equation for three oscillators"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "quantize and construct eigenstates; JSON on stdout or --out");
  add_oscillator_options(solve_cmd, solve.osc, true);
  solve_cmd->add_option("--n", solve.n, "single quantum number");
  solve_cmd->add_option("--max-n", solve.max_n, "largest harmonic quantum number listed when --n is absent");
  solve_cmd->add_option("--out", solve.out, "write JSON here instead of stdout");
  solve_cmd->add_option("--psi-csv", solve.psi_csv, "write psi(x) of the listed states to this CSV");
  solve_cmd->add_option("--x-min", solve.x_min, "psi grid start");
  solve_cmd->add_option("--x-max", solve.x_max, "psi grid end");
  solve_cmd->add_option("--x-points", solve.x_points, "psi grid size");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run the self-check suite; JSON report, exit 1 on failure");
  auto* verify_osc = verify_cmd->add_option("--oscillator", verify.osc.kind, "restrict per-state checks");
  verify_cmd->add_option("--c", verify.osc.c, "Morse c used by the checks (default 3)");
  verify_cmd->add_option("--ell", verify.osc.ell, "Poschl-Teller l used by the checks (default 2)");
  verify_cmd->add_option("--n", verify.n, "restrict per-state checks to this quantum number");
  verify_cmd->add_option("--check", verify.check, "run only checks whose name starts with this prefix");
  verify_cmd->add_option("--perturb-v0", verify.perturb_v0, "offset added to v0 in the s-domain residual check");
  verify_cmd->add_option("--out", verify.out, "write JSON here instead of stdout");

  PathologyArgs path;
  auto* path_cmd = app.add_subcommand("pathology", "profile of the rescaled inverse of exp(-s^2/4)/s");
  path_cmd->add_option("--gamma", path.gamma, "comma-separated truncation heights in [10, 1000]");
  path_cmd->add_option("--fig", path.fig, "a: g vs gamma xi/2pi; b: |g| vs xi/gamma");
  path_cmd->add_option("--oscillations", path.oscillations, "number of oscillations sampled for panel a");
  path_cmd->add_option("--xi-over-gamma-max", path.xi_over_gamma_max, "range of panel b (default 1)");
  path_cmd->add_option("--samples-per-wavelength", path.samples_per_wavelength, "grid density (>= 8)");
  path_cmd->add_option("--out-dir", path.out_dir, "directory for CSV and SVG output");
  path_cmd->add_option("--prefix", path.prefix, "file name prefix");

  std::string figure_dir = ".";
  auto* figure_cmd = app.add_subcommand("figure", "write both oscillation-profile figures with their CSV data");
  figure_cmd->add_option("--out-dir", figure_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_bad_input;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve);
    if (*verify_cmd) {
      verify.oscillator_given = verify_osc->count() > 0;
      return cmd_verify(verify);
    }
    if (*path_cmd) return cmd_pathology(path);
    if (*figure_cmd) return cmd_figure(figure_dir);
  } catch (const no_bound_states& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_empty;
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_bad_input;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_bad_input;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_bad_input;
  }
  return exit_bad_input;
}
