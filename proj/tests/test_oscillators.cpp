#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "lapsch/oscillators.hpp"
#include "lapsch/parallel.hpp"

using namespace lapsch;
using Catch::Approx;

namespace {

bool same_terms(const SDomainFn& a, const SDomainFn& b, double tol = 1e-12) {
  for (const auto& t : (a - b).terms())
    if (std::abs(t.coeff()) > tol) return false;
  return true;
}

std::vector<double> s_points(double lo) {
  std::vector<double> out;
  for (int i = 0; i < 20; ++i) out.push_back(lo + 0.1 + 0.2 * i);
  return out;
}

}  // namespace

TEST_CASE("oscillator construction", "[oscillators]") {
  CHECK(Oscillator::morse(3.0).c() == 3.0);
  CHECK_THROWS_AS(Oscillator::morse(0.0), domain_error);
  CHECK_THROWS_AS(Oscillator::poschl_teller(-1.0), domain_error);
  CHECK(to_string(OscillatorKind::poschl_teller) == "poschl-teller");
  // depth A with 2m = alpha = hbar = 1: c = sqrt(2 m A)/(alpha hbar), l(l+1) = 2 m A/(alpha hbar)^2
  const PhysicalParams p{0.5, 1.0, 1.0, 1.0};
  CHECK(Oscillator::morse_from_depth(9.0, p).c() == Approx(3.0));
  CHECK(Oscillator::poschl_teller_from_depth(6.0, p).ell() == Approx(2.0));
}

TEST_CASE("scaling to xi", "[oscillators]") {
  CHECK(scale_to_xi(Oscillator::harmonic(PhysicalParams{}), 2.0) == 2.0);
  CHECK(scale_to_xi(Oscillator::morse(3.0, PhysicalParams{}), 0.0) == 6.0);
  CHECK(scale_to_xi(Oscillator::poschl_teller(2.0, PhysicalParams{}), 40.0) == Approx(1.0));
  CHECK_THROWS_AS(scale_to_xi(Oscillator::harmonic(), 1.0), domain_error);
  const auto m = Oscillator::morse(3.0, PhysicalParams{1.0, 1.0, 1.7, 1.0});
  CHECK(scale_from_xi(m, scale_to_xi(m, 0.37)) == Approx(0.37));
  CHECK_THROWS_AS(scale_from_xi(m, -1.0), domain_error);
}

TEST_CASE("quantize and eigenenergy", "[oscillators]") {
  CHECK(quantize(Oscillator::morse(3.0)) == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(quantize(Oscillator::morse(0.4)), no_bound_states);
  CHECK(quantize(Oscillator::poschl_teller(2.0)) == std::vector<int>{0, 1});
  CHECK(quantize(Oscillator::poschl_teller(2.5)) == std::vector<int>{0, 1, 2});
  CHECK(quantize(Oscillator::harmonic(), 4) == std::vector<int>{0, 1, 2, 3});

  CHECK(eigenenergy(Oscillator::harmonic(), 0) == 0.5);
  CHECK(eigenenergy(Oscillator::morse(3.0), 0) == -6.25);
  CHECK(eigenenergy(Oscillator::poschl_teller(2.0), 1) == -1.0);
  CHECK(energy_parameter(Oscillator::poschl_teller(2.0), 1) == 1.0);

  CHECK_THROWS_AS(eigenenergy(Oscillator::morse(3.0), 3), invalid_quantum_number);
  CHECK_THROWS_AS(eigenenergy(Oscillator::poschl_teller(2.0), 2), invalid_quantum_number);
  CHECK_THROWS_AS(eigenenergy(Oscillator::harmonic(), -1), invalid_quantum_number);
  CHECK_THROWS_WITH(eigenenergy(Oscillator::morse(3.0), 3), Catch::Matchers::ContainsSubstring("n < c - 1/2"));
}

TEST_CASE("property: energies increase with n", "[oscillators][property]") {
  for (const auto& osc : {Oscillator::harmonic(), Oscillator::morse(5.3), Oscillator::poschl_teller(4.2),
                          Oscillator::morse(0.9), Oscillator::poschl_teller(0.3)}) {
    const auto ns = quantize(osc);
    for (std::size_t i = 1; i < ns.size(); ++i) CHECK(eigenenergy(osc, ns[i]) > eigenenergy(osc, ns[i - 1]));
  }
}

TEST_CASE("eigenstates reproduce the tabulated solutions", "[oscillators]") {
  SECTION("harmonic n = 1") {
    const auto st = eigenstate(Oscillator::harmonic(), 1);
    CHECK(same_terms(st.V, SDomainFn::monomial(-2)));
    CHECK(st.v(2.5) == Approx(2.5));
    CHECK(st.v0 == 0.0);
    CHECK(st.v0prime == 1.0);
  }
  SECTION("Morse n = 0") {
    const auto st = eigenstate(Oscillator::morse(3.0), 0);
    CHECK(same_terms(st.V, SDomainFn::power(-0.5, -1)));
    CHECK(st.v0 == 1.0);
    CHECK(st.v0prime == -0.5);
  }
  SECTION("Morse n = 1") {
    const double c = 3.0;
    const auto st = eigenstate(Oscillator::morse(c), 1);
    CHECK(st.v(1.0) == Approx(3.0 * std::exp(-0.5)));
    CHECK(st.v0 == Approx(2 * c - 2));
    CHECK(st.v0prime == Approx(-c));
  }
  SECTION("Poschl-Teller") {
    const auto st0 = eigenstate(Oscillator::poschl_teller(2.0), 0);
    const auto st1 = eigenstate(Oscillator::poschl_teller(2.0), 1);
    CHECK(same_terms(st0.V, SDomainFn::monomial(-1)));
    CHECK(same_terms(st1.V, SDomainFn::monomial(-2)));
    CHECK(st1.energy_param == 1.0);
  }
  SECTION("harmonic n = 2 from the recurrence") {
    const auto st = eigenstate(Oscillator::harmonic(), 2);
    CHECK(same_terms(st.V, SDomainFn::monomial(-1) - SDomainFn::monomial(-3, 4.0)));
    for (double xi : {0.0, 0.8, 1.9}) CHECK(st.v(xi) == Approx(-0.5 * hermite(2)(xi)));
  }
  SECTION("limits on excitations") {
    CHECK_THROWS_AS(eigenstate(Oscillator::morse(5.0), 2), unsupported_excitation);
    CHECK_THROWS_AS(eigenstate(Oscillator::poschl_teller(4.0), 2), unsupported_excitation);
    CHECK_NOTHROW(eigenstate(Oscillator::harmonic(), 9));
  }
}

TEST_CASE("xi-domain residual", "[oscillators]") {
  const auto h0 = eigenstate(Oscillator::harmonic(), 0);
  CHECK(xi_ode_residual(Oscillator::harmonic(), h0, 0.7) == 0.0);
  auto wrong = h0;
  wrong.energy_param = 1.0;
  CHECK(xi_ode_residual(Oscillator::harmonic(), wrong, 1.0) == Approx(2.0));

  const auto m1 = eigenstate(Oscillator::morse(3.0), 1);
  CHECK(std::abs(xi_ode_residual(Oscillator::morse(3.0), m1, 2.0)) <= 1e-12);

  const std::vector<Oscillator> oscs{Oscillator::harmonic(), Oscillator::morse(3.7), Oscillator::poschl_teller(2.6)};
  for (const auto& osc : oscs)
    for (int n : {0, 1}) {
      const auto st = eigenstate(osc, n);
      for (int i = 0; i < 20; ++i) {
        const double xi = 0.05 + 0.045 * i;
        const double scale = std::max(1.0, std::abs(st.v(xi)));
        CHECK(std::abs(xi_ode_residual(osc, st, xi)) <= 1e-10 * scale);
      }
    }
  for (int n = 2; n <= 10; ++n) {
    const auto st = eigenstate(Oscillator::harmonic(), n);
    for (double xi : {0.1, 0.9, 2.3})
      CHECK(std::abs(xi_ode_residual(Oscillator::harmonic(), st, xi)) <=
            1e-10 * std::max(1.0, std::abs(st.v(xi)) * std::pow(2.0, n)));
  }
}

TEST_CASE("s-domain residual", "[oscillators]") {
  const auto h = Oscillator::harmonic();
  CHECK(s_ode_residual(h, SDomainFn::monomial(-1), 1.0, 0.0, 2.0, 0.0) == Approx(0.0).margin(1e-15));
  const auto tw = tw_transform(h, 0);
  CHECK(s_ode_residual(h, tw, 0.0, 0.0, 2.0, 0.0) == Approx(0.0).margin(1e-15));
  CHECK(s_ode_residual(h, tw, 1.0, 0.0, 2.0, 0.0) == Approx(-2.0));

  const std::vector<Oscillator> oscs{Oscillator::harmonic(), Oscillator::morse(3.0), Oscillator::morse(2.2),
                                     Oscillator::poschl_teller(2.0), Oscillator::poschl_teller(3.0)};
  for (const auto& osc : oscs)
    for (int n : {0, 1}) {
      const auto st = eigenstate(osc, n);
      const auto V_tw = tw_transform(osc, n);
      double max_true = 0.0, max_hom = 0.0, min_tw_true = 1e300;
      for (double s : s_points(0.5)) {
        max_true = std::max(max_true, std::abs(s_ode_residual(osc, st.V, st.v0, st.v0prime, s, st.energy_param)));
        max_hom = std::max(max_hom, std::abs(s_ode_residual(osc, V_tw, 0.0, 0.0, s, st.energy_param)));
        min_tw_true =
            std::min(min_tw_true, std::abs(s_ode_residual(osc, V_tw, st.v0, st.v0prime, s, st.energy_param)));
      }
      INFO(to_string(osc.kind()) << " n=" << n);
      CHECK(max_true <= 1e-10);
      CHECK(max_hom <= 1e-8 * std::max(1.0, std::abs(evaluate(V_tw, 4.0))));
      CHECK(min_tw_true >= 0.1);
    }
}

TEST_CASE("tw_transform shapes", "[oscillators]") {
  const auto h0 = tw_transform(Oscillator::harmonic(), 0);
  REQUIRE(h0.terms().size() == 1);
  CHECK(h0.terms()[0].exp_poly() == std::vector<double>{0.0, 0.0, -0.25});
  const auto m1 = tw_transform(Oscillator::morse(3.0), 1);
  CHECK(same_terms(m1, SDomainFn::power(0.5, 4.0) * SDomainFn::power(-0.5, -2)));
  const auto p0 = tw_transform(Oscillator::poschl_teller(2.0), 0);
  for (double s : {0.7, 3.0}) CHECK(evaluate(p0, s) == Approx(s * s * mod_sph_bessel_k(2, s)));
  CHECK_THROWS_AS(tw_transform(Oscillator::poschl_teller(2.5), 0), domain_error);
  CHECK_THROWS_AS(tw_transform(Oscillator::harmonic(), 2), unsupported_excitation);
}

TEST_CASE("harmonic recurrence", "[oscillators]") {
  SECTION("n = 2 terminates after two steps") {
    const auto r = harmonic_recurrence(2, 1.0, 0.0, 8);
    CHECK(recurrence_coefficient(r, 0) == 1.0);
    CHECK(recurrence_coefficient(r, 2) == -4.0);
    CHECK(recurrence_coefficient(r, 4) == 0.0);
    CHECK(recurrence_terminates(r));
    CHECK(same_terms(to_sdomain(r), SDomainFn::monomial(-1) - SDomainFn::monomial(-3, 4.0)));
  }
  SECTION("n = 1 with the odd seed") {
    const auto r = harmonic_recurrence(1, 0.0, 1.0, 8);
    CHECK(same_terms(to_sdomain(r), SDomainFn::monomial(-2)));
  }
  SECTION("wrong parity seed does not terminate") {
    CHECK_FALSE(recurrence_terminates(harmonic_recurrence(2, 0.0, 1.0, 30)));
    CHECK_FALSE(recurrence_terminates(harmonic_recurrence(3, 1.0, 0.0, 30)));
  }
  SECTION("non-integer n grows like 2k") {
    const auto r = harmonic_recurrence(0.5, 1.0, 0.0, 202);
    CHECK_FALSE(recurrence_terminates(r));
    const double ratio = recurrence_coefficient(r, 202) / recurrence_coefficient(r, 200);
    CHECK(std::abs(ratio - 400.0) / 400.0 <= 0.05);
  }
  CHECK_THROWS_AS(harmonic_recurrence(1, 0.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("property: recurrence inverts to Hermite polynomials", "[oscillators][property]") {
  for (int n = 0; n <= 10; ++n) {
    const auto v = eigenstate(Oscillator::harmonic(), n).v;
    const auto H = hermite(static_cast<unsigned>(n));
    const double ratio = v(1.3) / H(1.3);
    for (double xi : {-2.0, -0.4, 0.25, 0.9, 2.7})
      CHECK(v(xi) == Approx(ratio * H(xi)).epsilon(1e-9).margin(1e-9 * std::abs(ratio) * std::pow(2.0, n)));
  }
}

TEST_CASE("wavefunctions", "[oscillators]") {
  const PhysicalParams p{};
  const auto h = Oscillator::harmonic(p);
  CHECK(wavefunction(h, eigenstate(h, 0), 0.0) == 1.0);
  CHECK(std::abs(wavefunction(h, eigenstate(h, 1), 12.0)) < 1e-25);
  const auto pt = Oscillator::poschl_teller(2.0, p);
  CHECK(wavefunction(pt, eigenstate(pt, 0), 0.0) == 1.0);
  CHECK(wavefunction(pt, eigenstate(pt, 1), -0.8) == Approx(-wavefunction(pt, eigenstate(pt, 1), 0.8)));
  const auto m = Oscillator::morse(3.0, p);
  CHECK(std::abs(wavefunction(m, eigenstate(m, 0), 30.0)) < 1e-20);
  CHECK(std::abs(wavefunction(m, eigenstate(m, 0), -4.0)) < 1e-20);

  // harmonic ground state normalization: pi^{-1/4}
  CHECK(l2_normalization(h, eigenstate(h, 0)) == Approx(std::pow(std::numbers::pi, -0.25)).epsilon(1e-8));
  // normalized Morse state integrates to one
  const auto st = eigenstate(m, 1);
  const double N = l2_normalization(m, st);
  double acc = 0.0;
  const int K = 40000;
  const double lo = -6.0, hi = 40.0, dx = (hi - lo) / K;
  for (int i = 0; i <= K; ++i) {
    const double psi = N * wavefunction(m, st, lo + i * dx);
    acc += (i == 0 || i == K ? 0.5 : 1.0) * psi * psi;
  }
  CHECK(acc * dx == Approx(1.0).epsilon(1e-6));
}

TEST_CASE("parallel_map preserves order and propagates errors", "[oscillators][concurrency]") {
  std::vector<int> ns;
  for (int n = 0; n <= 10; ++n) ns.push_back(n);
  const auto osc = Oscillator::harmonic();
  const auto energies = parallel_map(ns, [&](int n) { return eigenenergy(osc, n); });
  for (std::size_t i = 0; i < ns.size(); ++i) CHECK(energies[i] == ns[i] + 0.5);
  const auto morse = Oscillator::morse(3.0);
  CHECK_THROWS_AS(parallel_map(ns, [&](int n) { return eigenenergy(morse, n); }), invalid_quantum_number);
}
