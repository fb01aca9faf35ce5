#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <thread>
#include <vector>

#include "lapsch/sdomain.hpp"

using namespace lapsch;
using Catch::Approx;

namespace {

SDomainFn tw_ground() { return SDomainFn::exponential({0.0, 0.0, -0.25}) * SDomainFn::monomial(-1); }

SDomainFn morse_first(double c) { return SDomainFn::power(-0.5, -1, 2 * c - 2) - SDomainFn::power(-0.5, -2); }

// Structural equality: same shapes, coefficients within tol.
bool same_terms(const SDomainFn& a, const SDomainFn& b, double tol = 1e-12) {
  const auto diff = a - b;
  for (const auto& t : diff.terms())
    if (std::abs(t.coeff()) > tol) return false;
  return true;
}

double rel_err(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("construction normalizes factors", "[sdomain]") {
  const GeneralTerm t(2.0, {{1.0, 1.0}, {-0.5, -1.0}, {1.0, -1.0}, {0.0, 0.0}});
  REQUIRE(t.factors().size() == 1);
  CHECK(t.factors()[0].pole == -0.5);
  CHECK(t.factors()[0].exponent == -1.0);

  const auto f = SDomainFn::monomial(-1, 3.0) - SDomainFn::monomial(-1, 3.0);
  CHECK(f.is_zero());

  const auto g = SDomainFn::exponential({std::log(2.0), 0.0, -1.0});
  REQUIRE(g.terms().size() == 1);
  CHECK(g.terms()[0].coeff() == Approx(2.0));
  CHECK(g.terms()[0].exp_poly().size() == 3);

  // sorted factor list
  const GeneralTerm u(1.0, {{2.0, -1.0}, {-3.0, -2.0}, {0.5, 1.5}});
  REQUIRE(u.factors().size() == 3);
  CHECK(u.factors()[0].pole < u.factors()[1].pole);
  CHECK(u.factors()[1].pole < u.factors()[2].pole);
}

TEST_CASE("rationality and rightmost singularity", "[sdomain]") {
  CHECK(morse_first(3).is_rational());
  CHECK_FALSE(tw_ground().is_rational());
  CHECK_FALSE(SDomainFn::power(0.5, 3.5).is_rational());
  CHECK(morse_first(3).rightmost_singularity() == -0.5);
  CHECK((SDomainFn::power(0.5, 4.0) * SDomainFn::power(-0.5, -1)).rightmost_singularity() == -0.5);
  CHECK(SDomainFn::power(0.5, 4.5).rightmost_singularity() == 0.5);
}

TEST_CASE("differentiate", "[sdomain]") {
  SECTION("power rule") {
    CHECK(same_terms(differentiate(SDomainFn::monomial(-1)), SDomainFn::monomial(-2, -1.0)));
    CHECK(same_terms(differentiate(SDomainFn::power(-0.5, -2)), SDomainFn::power(-0.5, -3, -2.0)));
  }
  SECTION("product with a Gaussian factor") {
    const auto expected = tw_ground() * SDomainFn::monomial(1, -0.5) - SDomainFn::exponential({0, 0, -0.25}) * SDomainFn::monomial(-2);
    CHECK(same_terms(differentiate(tw_ground()), expected));
  }
  SECTION("constants vanish") { CHECK(differentiate(SDomainFn::constant(4.0)).is_zero()); }
}

TEST_CASE("evaluate", "[sdomain]") {
  CHECK(evaluate(SDomainFn::monomial(-1), 2.0) == Approx(0.5));
  CHECK(evaluate(tw_ground(), 2.0) == Approx(std::exp(-1.0) / 2).epsilon(1e-14));
  CHECK_THROWS_AS(evaluate(SDomainFn::power(-0.5, -1), -0.5), pole_evaluation);
  CHECK_THROWS_AS(evaluate(SDomainFn::power(0.5, 1.5), 0.25), branch_domain);
  CHECK(evaluate(SDomainFn::power(0.5, 1.5), 1.5) == Approx(1.0));
  // integer exponents are fine anywhere except poles
  CHECK(evaluate(SDomainFn::power(0.5, 3), -0.5) == Approx(-1.0));
  const auto z = evaluate(SDomainFn::monomial(-1), cplx{0.0, 2.0});
  CHECK(z.imag() == Approx(-0.5));
}

TEST_CASE("evaluate_scaled tracks huge exponents", "[sdomain]") {
  const auto f = tw_ground();
  const cplx s{0.0, 900.0};
  const auto v = evaluate_scaled(f, s);
  // e^{-s^2/4} = e^{900^2/4}, far beyond double range
  CHECK(std::isfinite(std::abs(v.mantissa)));
  CHECK(std::log(std::abs(v.mantissa)) + v.exponent == Approx(900.0 * 900.0 / 4 - std::log(900.0)).epsilon(1e-14));
  const auto w = evaluate_scaled(f, cplx{2.0, 0.0});
  CHECK((w.mantissa * std::exp(w.exponent)).real() == Approx(std::exp(-1.0) / 2));
}

TEST_CASE("laurent_expand", "[sdomain]") {
  SECTION("Gaussian over s about zero") {
    const auto ls = laurent_expand(tw_ground(), 5);
    CHECK(ls.min_power == -1);
    CHECK(ls.coefficient(-1) == Approx(1.0));
    CHECK(ls.coefficient(0) == 0.0);
    CHECK(ls.coefficient(1) == Approx(-0.25));
    CHECK(ls.coefficient(3) == Approx(1.0 / 32));
    CHECK(ls.coefficient(-5) == 0.0);
    CHECK_THROWS_AS(ls.coefficient(10), std::out_of_range);
  }
  SECTION("series coefficients match k-th term 1/((-4)^k k!)") {
    const auto ls = laurent_expand(tw_ground(), 13);
    double fact = 1.0;
    for (int k = 1; k <= 6; ++k) {
      fact *= k;
      CHECK(ls.coefficient(2 * k - 1) == Approx(1.0 / (std::pow(-4.0, k) * fact)).epsilon(1e-13));
    }
  }
  SECTION("1/s is its own expansion") {
    const auto ls = laurent_expand(SDomainFn::monomial(-1), 4);
    CHECK(ls.coefficient(-1) == 1.0);
    for (int k = 0; k <= 2; ++k) CHECK(ls.coefficient(k) == 0.0);
  }
  SECTION("Morse first excited about zero") {
    // (2c-2)/(s+1/2) - 1/(s+1/2)^2 = 4[(c-2)/(1+2s) + 2s/(1+2s)^2] ... for c = 3: 4 - 16 s^2 + ...
    const auto ls = laurent_expand(morse_first(3), 3);
    CHECK(ls.coefficient(0) == Approx(4.0));
    CHECK(ls.coefficient(1) == Approx(0.0).margin(1e-12));
    CHECK(ls.coefficient(2) == Approx(-16.0));
    // independent oracle: geometric series of 1/(1+2s) and its square
    const double c = 2.7;
    const auto lc = laurent_expand(morse_first(c), 8);
    for (int p = 0; p < 8; ++p) {
      const double geo = std::pow(-2.0, p);
      const double sq = (p + 1) * std::pow(-2.0, p);
      CHECK(lc.coefficient(p) == Approx((2 * c - 2) * 2 * geo - 4 * sq).epsilon(1e-12));
    }
  }
  SECTION("about infinity") {
    const auto ls = laurent_expand(SDomainFn::power(-0.5, -1), 4, ExpansionPoint::infinity);
    // 1/(s+1/2) = s^-1 - 0.5 s^-2 + 0.25 s^-3 - ...
    CHECK(ls.coefficient(-1) == Approx(1.0));
    CHECK(ls.coefficient(-2) == Approx(-0.5));
    CHECK(ls.coefficient(-3) == Approx(0.25));
    CHECK(ls.coefficient(2) == 0.0);
  }
  SECTION("unsupported shapes") {
    CHECK_THROWS_AS(laurent_expand(SDomainFn::power(0.0, 0.5), 3), not_expandable);
    CHECK_THROWS_AS(laurent_expand(tw_ground(), 3, ExpansionPoint::infinity), not_expandable);
  }
}

TEST_CASE("partial_fractions", "[sdomain]") {
  const auto f = SDomainFn::power(-1.0, -2) * SDomainFn::power(2.0, -1) * SDomainFn::monomial(1, 3.0);
  const auto pf = partial_fractions(f);
  for (const auto& t : pf.terms()) CHECK(t.factors().size() <= 1);
  for (double s : {0.3, 3.5, -4.0}) CHECK(evaluate(pf, s) == Approx(evaluate(f, s)).epsilon(1e-12));
  CHECK_THROWS_AS(partial_fractions(tw_ground()), not_invertible);
  // improper rational: polynomial part survives
  const auto g = SDomainFn::power(1.0, 2) * SDomainFn::power(-1.0, -1);
  const auto pg = partial_fractions(g);
  for (double s : {0.3, 3.5}) CHECK(evaluate(pg, s) == Approx(evaluate(g, s)).epsilon(1e-12));
}

TEST_CASE("property: differentiation is linear", "[sdomain][property]") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const auto f = tw_ground() + SDomainFn::power(-1.0, -2, 0.3);
  const auto g = morse_first(3.4) * SDomainFn::power(0.5, 2.4);
  for (int i = 0; i < 10; ++i) {
    const double alpha = u(rng), beta = u(rng);
    const double s = 0.6 + 2.0 * std::abs(u(rng));
    const auto lhs = evaluate(differentiate(f * alpha + g * beta), s);
    const auto rhs = alpha * evaluate(differentiate(f), s) + beta * evaluate(differentiate(g), s);
    CHECK(lhs == Approx(rhs).epsilon(1e-12).margin(1e-12));
  }
}

TEST_CASE("property: derivative matches finite differences", "[sdomain][property]") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.7, 4.0);
  const std::vector<SDomainFn> fs{tw_ground(), morse_first(3), SDomainFn::power(0.5, 4.0) * SDomainFn::power(-0.5, -1),
                                  SDomainFn::power(0.5, 2.3) * SDomainFn::power(-0.5, -2)};
  for (const auto& f : fs) {
    const auto df = differentiate(f);
    for (int i = 0; i < 10; ++i) {
      const double s = u(rng), h = 1e-5;
      const double fd = (evaluate(f, s + h) - evaluate(f, s - h)) / (2 * h);
      CHECK(evaluate(df, s) == Approx(fd).epsilon(1e-6).margin(1e-9));
    }
  }
}

TEST_CASE("property: partial-fraction round trip", "[sdomain][property]") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> pole(-3.0, 3.0), coef(-2.0, 2.0), pt(-5.0, 5.0);
  std::uniform_int_distribution<int> mult(1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    SDomainFn f = SDomainFn::constant(coef(rng));
    const int factors = 1 + trial % 3;
    for (int j = 0; j < factors; ++j) f = f * SDomainFn::power(std::round(pole(rng) * 4) / 4, -mult(rng));
    const auto pf = partial_fractions(f);
    for (int i = 0; i < 10; ++i) {
      const cplx s{pt(rng), pt(rng)};
      CHECK(rel_err(evaluate(pf, s), evaluate(f, s)) <= 1e-10);
    }
  }
}

TEST_CASE("to_string renders readable terms", "[sdomain]") {
  CHECK(to_string(SDomainFn::monomial(-2)) == "1*(s)^-2");
  CHECK(to_string(SDomainFn()) == "0");
}

TEST_CASE("values are safe to share between threads", "[sdomain][concurrency]") {
  const auto f = tw_ground() + morse_first(3);
  std::vector<double> out(8);
  std::vector<std::thread> ts;
  for (int i = 0; i < 8; ++i)
    ts.emplace_back([&, i] { out[static_cast<std::size_t>(i)] = evaluate(differentiate(f), 1.0 + i); });
  for (auto& t : ts) t.join();
  for (int i = 0; i < 8; ++i) CHECK(out[static_cast<std::size_t>(i)] == evaluate(differentiate(f), 1.0 + i));
}
