#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "sbound/errors.hpp"
#include "sbound/specfun.hpp"

using namespace sbound;
using std::numbers::pi;

namespace {

// Borwein's alternating-series algorithm for zeta; independent of the
// Euler-Maclaurin path. Good to ~1e-13 for |Im s| <= 20.
cplx borwein_zeta(cplx s, int n = 60) {
  std::vector<long double> d(n + 1);
  long double term = 1.0L / n;  // (n+i-1)! 4^i / ((n-i)! (2i)!) at i = 0 is 1/n
  long double acc = term;
  d[0] = n * acc;
  for (int i = 1; i <= n; ++i) {
    term *= 4.0L * (n + i - 1) * (n - i + 1) / ((2.0L * i - 1) * (2.0L * i));
    acc += term;
    d[i] = n * acc;
  }
  std::complex<long double> sum = 0.0L;
  const std::complex<long double> sl(s.real(), s.imag());
  for (int k = 0; k < n; ++k) {
    const long double sign = (k % 2 == 0) ? 1.0L : -1.0L;
    sum += sign * (d[k] - d[n]) * std::exp(-sl * std::log(static_cast<long double>(k + 1)));
  }
  const std::complex<long double> denom = d[n] * (1.0L - std::exp((1.0L - sl) * std::log(2.0L)));
  const std::complex<long double> z = -sum / denom;
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

double theta_asymptotic(double t) {
  return t / 2.0 * std::log(t / (2.0 * pi)) - t / 2.0 - pi / 8.0 + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t * t);
}

}  // namespace

TEST_CASE("zeta_real: closed forms and frozen values") {
  CHECK(std::abs(zeta_real(2.0) - pi * pi / 6.0) < 1e-12);
  CHECK(std::abs(zeta_real(4.0) - std::pow(pi, 4) / 90.0) < 1e-12);
  CHECK(std::abs(zeta_real(1.5) - 2.612375348685488) < 1e-12);
  CHECK(std::abs(zeta_real(3.0) - 1.2020569031595943) < 1e-12);
  CHECK(std::abs(zeta_real(1.1) - 10.584448464950801) < 1e-11);
  CHECK(std::abs(zeta_real(1.25) - 4.595111825842941) < 1e-12);
}

TEST_CASE("zeta_real agrees with the alternating-series oracle") {
  for (double sigma : {1.05, 1.3, 1.5, 2.0, 3.0, 7.5}) {
    CAPTURE(sigma);
    CHECK(std::abs(zeta_real(sigma) - borwein_zeta({sigma, 0.0}).real()) < 1e-11);
  }
}

TEST_CASE("zeta_real: doubling terms_hint changes the value by less than abs_tol") {
  for (double sigma : {1.01, 1.5, 2.5}) {
    const EvalAccuracy base{1e-12, 16};
    const EvalAccuracy doubled{1e-12, 32};
    CHECK(std::abs(zeta_real(sigma, base) - zeta_real(sigma, doubled)) < 1e-12);
  }
}

TEST_CASE("zeta_real: errors") {
  CHECK_THROWS_AS(zeta_real(1.0), DomainError);
  CHECK_THROWS_AS(zeta_real(0.5), DomainError);
  CHECK_THROWS_AS(zeta_real(2.0, {0.0, std::nullopt}), DomainError);
  CHECK_THROWS_AS(zeta_real(1.5, {1e-320, std::nullopt}), AccuracyError);
}

TEST_CASE("zeta_complex: special points") {
  // Default accuracy is 1e-6 for complex arguments.
  CHECK(std::abs(zeta_complex({2.0, 0.0}) - zeta_real(2.0)) < 1e-6);
  CHECK(std::abs(zeta_complex({2.0, 0.0}, {1e-13, std::nullopt}) - zeta_real(2.0)) < 1e-12);
  CHECK(std::abs(zeta_complex({0.0, 0.0}) - cplx{-0.5, 0.0}) < 1e-10);
  CHECK(std::abs(zeta_complex({0.5, 14.134725})) < 1e-4);
  CHECK(std::abs(zeta_complex({0.5, 0.0}, {1e-12, std::nullopt}).real() + 1.4603545088095868) < 1e-11);
}

TEST_CASE("zeta_complex: frozen high-precision values") {
  const EvalAccuracy tight{1e-12, std::nullopt};
  CHECK(std::abs(zeta_complex({-0.3, 7.5}, tight) - cplx{1.1453922401182943, 0.6111042429762815}) < 1e-11);
  CHECK(std::abs(zeta_complex({0.7, -1234.5}, tight) - cplx{1.1900402077371078, 0.2916472851243843}) < 1e-10);
  CHECK(std::abs(zeta_complex({3.0, 2000.0}, tight) - cplx{0.8990416968741864, 0.1004778834414639}) < 1e-10);
}

TEST_CASE("zeta_complex agrees with the alternating-series oracle on random points") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> sig(-0.9, 3.0);
  std::uniform_real_distribution<double> tt(-20.0, 20.0);
  for (int i = 0; i < 50; ++i) {
    const cplx s{sig(rng), tt(rng)};
    if (std::abs(s - 1.0) < 0.1) continue;
    CAPTURE(s);
    CHECK(std::abs(zeta_complex(s, {1e-12, std::nullopt}) - borwein_zeta(s)) < 1e-9);
  }
}

TEST_CASE("zeta_complex: conjugate symmetry") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> sig(-0.9, 2.5);
  std::uniform_real_distribution<double> tt(0.5, 800.0);
  for (int i = 0; i < 40; ++i) {
    const cplx s{sig(rng), tt(rng)};
    const EvalAccuracy acc{1e-11, std::nullopt};
    CHECK(std::abs(zeta_complex(std::conj(s), acc) - std::conj(zeta_complex(s, acc))) < 1e-10);
  }
}

TEST_CASE("zeta_complex: domain errors") {
  CHECK_THROWS_AS(zeta_complex({1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(zeta_complex({1.0 + 1e-12, 0.0}), DomainError);
  CHECK_THROWS_AS(zeta_complex({-1.0, 5.0}), DomainError);
}

TEST_CASE("log_gamma: closed forms") {
  CHECK(std::abs(log_gamma({1.0, 0.0})) < 1e-14);
  CHECK(std::abs(log_gamma({0.5, 0.0}).real() - 0.5723649429247001) < 1e-13);
  CHECK(std::abs(log_gamma({5.0, 0.0}).real() - std::log(24.0)) < 1e-13);
  CHECK(std::abs(log_gamma({5.0, 0.0}).imag()) < 1e-15);
}

TEST_CASE("log_gamma: continuous branch against frozen values") {
  CHECK(std::abs(log_gamma({0.3, 0.7}) - cplx{-0.09317031249813418, -1.2239573657136887}) < 1e-12);
  CHECK(std::abs(log_gamma({2.5, -300.0}) - cplx{-458.9123806672212, -1414.2698073159716}) < 1e-10);
  CHECK(std::abs(log_gamma({0.25, 1000.0}) - cplx{-1571.604327073625, 5907.362590317105}) < 1e-9);
}

TEST_CASE("log_gamma: recurrence log Gamma(z+1) = log Gamma(z) + log z") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> re(0.05, 30.0);
  std::uniform_real_distribution<double> im(-200.0, 200.0);
  for (int i = 0; i < 50; ++i) {
    const cplx z{re(rng), im(rng)};
    const cplx lhs = log_gamma(z + 1.0);
    const cplx rhs = log_gamma(z) + std::log(z);
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("log_gamma and log_abs_gamma: domain and reflection") {
  CHECK_THROWS_AS(log_gamma({0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(log_gamma({-0.5, 0.0}), DomainError);
  // Gamma(-1/2) = -2 sqrt(pi)
  CHECK(std::abs(log_abs_gamma({-0.5, 0.0}) - std::log(2.0 * std::sqrt(pi))) < 1e-13);
  // |Gamma(iy)|^2 = pi / (y sinh(pi y))
  const double y = 3.0;
  CHECK(std::abs(log_abs_gamma({0.0, y}) - 0.5 * std::log(pi / (y * std::sinh(pi * y)))) < 1e-12);
}

TEST_CASE("theta_rs: values and the first positive zero") {
  CHECK(std::abs(theta_rs(100.0) - 87.97216523178722) < 1e-10);
  CHECK(std::abs(theta_rs(1000.0) - 2034.5464280380316) < 1e-9);
  CHECK(std::abs(theta_rs(3.0) + 2.994564696010825) < 1e-10);
  CHECK(std::abs(theta_rs(50.0) - 26.46136607016141) < 1e-10);

  // Bisection oracle for the root near 17.85.
  double lo = 17.0;
  double hi = 19.0;
  REQUIRE(theta_rs(lo) < 0.0);
  REQUIRE(theta_rs(hi) > 0.0);
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (theta_rs(mid) < 0.0 ? lo : hi) = mid;
  }
  CHECK(std::abs(lo - 17.8455995404) < 1e-8);
  CHECK_THROWS_AS(theta_rs(0.5), DomainError);
}

TEST_CASE("theta_rs: exact agrees with the asymptotic series for t >= 50") {
  for (double t = 50.0; t <= 5000.0; t *= 1.37) {
    CAPTURE(t);
    CHECK(std::abs(theta_rs(t) - theta_asymptotic(t)) < 1e-6);
  }
}

TEST_CASE("rs_correction C0 matches its closed form away from removable singularities") {
  for (double p = 0.003; p < 1.0; p += 0.0173) {
    const double c = std::cos(2.0 * pi * p);
    if (std::abs(c) < 0.05) continue;
    const double direct = std::cos(2.0 * pi * (p * p - p - 1.0 / 16.0)) / c;
    CHECK(std::abs(detail::rs_correction(0, p) - direct) < 1e-13);
  }
  CHECK_THROWS_AS(detail::rs_correction(3, 0.5), DomainError);
}

TEST_CASE("z_function: value at 0 and first sign change") {
  CHECK(std::abs(z_function(0.0) + 1.4603545088095868) < 1e-6);
  CHECK(z_function(14.13) * z_function(14.14) < 0.0);
  CHECK_THROWS_AS(z_function(-1.0), DomainError);
}

TEST_CASE("z_function: exp(i theta) zeta(1/2 + it) is real") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> tt(0.0, 500.0);
  for (int i = 0; i < 20; ++i) {
    const double t = tt(rng);
    const cplx rotated = std::polar(1.0, detail::theta_rs_any(t)) * zeta_complex({0.5, t}, {1e-11, std::nullopt});
    CHECK(std::abs(rotated.imag()) < 1e-8);
  }
}

TEST_CASE("z_function: |Z(t)| = |zeta(1/2 + it)| on [1, 500]") {
  for (int i = 0; i < 100; ++i) {
    const double t = 1.0 + 499.0 * (i + 0.5) / 100.0;
    const double tol = 1e-6 + (t >= kRiemannSiegelSwitch ? 1e-4 * std::pow(t, -0.75) : 0.0);
    CAPTURE(t);
    CHECK(std::abs(std::abs(z_function(t)) - std::abs(zeta_complex({0.5, t}, {1e-10, std::nullopt}))) < tol);
  }
}

TEST_CASE("z_function: Riemann-Siegel error stays below 1e-4 t^{-3/4}") {
  struct Ref {
    double t;
    double z;
  };
  for (const Ref r : {Ref{250.0, -0.9186334183561524}, Ref{1000.5, 2.5492611355555556},
                      Ref{4321.1, 0.1159532469812585}}) {
    CAPTURE(r.t);
    CHECK(std::abs(z_function(r.t) - r.z) < 1e-4 * std::pow(r.t, -0.75));
  }
}
