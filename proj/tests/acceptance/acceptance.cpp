// One line per acceptance criterion; exit status is the number of failures.

#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "sbound/critline.hpp"
#include "sbound/optimize.hpp"
#include "sbound/reference.hpp"
#include "sbound/sbounds.hpp"
#include "sbound/specfun.hpp"
#include "sbound/stripbounds.hpp"
#include "sbound/verify.hpp"

using namespace sbound;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Tolerances, pinned.
constexpr double kRosserBTol = 5e-4;
constexpr double kRosserTotalTol = 5e-3;
constexpr double kLimitTolConvexity = 5e-4;
constexpr double kLimitTolChengGraham = 5e-4;
constexpr double kLimitTolHuxley = 1e-3;
constexpr double kPrintedBTol = 5e-4;
constexpr double kZeta2Tol = 1e-12;
constexpr double kZeta15Tol = 1e-9;
constexpr double kFirstZeroTol = 1e-4;
constexpr double kEndpointRelTol = 1e-12;

Outcome rosser_column() {
  double worst_b = 0.0, worst_total = 0.0;
  for (const auto& row : reference::comparison_table()) {
    const LinearBound r = rosser_bound(row.t0);
    worst_b = std::max(worst_b, std::abs(r.b() - row.rosser_b));
    worst_total = std::max(worst_total, std::abs(r.value_at(row.t0) - row.rosser_total));
  }
  return {worst_b <= kRosserBTol && worst_total <= kRosserTotalTol,
          fmt("8 rows, max |db| = %.2e (tol %.0e), max |dtotal| = %.2e (tol %.0e)", worst_b, kRosserBTol,
              worst_total, kRosserTotalTol)};
}

Outcome asymptotic_coefficients() {
  const double conv = theorem_b_coeff_b_limit(0.25);
  const double cg = theorem_b_coeff_b_limit(1.0 / 6.0);
  const double hux = theorem_b_coeff_b_limit(reference::kHuxleyTheta);
  const bool ok = std::abs(conv - 0.11480) <= kLimitTolConvexity && std::abs(cg - 0.10275) <= kLimitTolChengGraham &&
                  std::abs(hux - 0.10122) <= kLimitTolHuxley && hux <= reference::kHuxleyB;
  return {ok, fmt("theta=1/4: %.6f (printed %.3f), theta=1/6: %.6f (printed < %.4f), theta=32/205: %.6f (<= %.4f)",
                  conv, reference::kConvexityLimitB, cg, reference::kChengGrahamLimitB, hux, reference::kHuxleyB)};
}

Outcome printed_b_reachable() {
  int reached = 0;
  double worst = 0.0;
  for (const auto& row : reference::comparison_table()) {
    const auto eta = eta_for_coeff_b(row.conv_b, 0.25);
    if (eta) {
      const double err = std::abs(theorem_b_coeff_b(*eta, 0.25) - row.conv_b);
      worst = std::max(worst, err);
      reached += err <= kPrintedBTol;
    }
    for (int i = 0; i < kDeltaGridPoints; ++i) {
      const double delta = kMinDelta + (kMaxChengGrahamDelta - kMinDelta) * i / (kDeltaGridPoints - 1);
      const auto e = eta_for_coeff_b(row.subconv_b, 1.0 / 6.0 + delta);
      if (!e) continue;
      const double err = std::abs(theorem_b_coeff_b(*e, 1.0 / 6.0 + delta) - row.subconv_b);
      if (err <= kPrintedBTol) {
        worst = std::max(worst, err);
        ++reached;
        break;
      }
    }
  }
  return {reached == 16, fmt("%d/16 printed b values reached, max |db| = %.2e (tol %.0e)", reached, worst, kPrintedBTol)};
}

Outcome table_totals() {
  const auto heights = default_table_heights();
  const auto rows = build_table(heights);
  bool ok = rows.size() == 8;
  double worst_conv = 0.0, worst_sub = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    ok = ok && r.published.has_value();
    if (r.published) {
      worst_conv = std::max(worst_conv, std::abs(r.conv_total - r.published->conv_total));
      worst_sub = std::max(worst_sub, std::abs(r.subconv_total - r.published->subconv_total));
    }
    if (i > 0)
      ok = ok && r.rosser_total > rows[i - 1].rosser_total && r.conv_total > rows[i - 1].conv_total &&
           r.subconv_total > rows[i - 1].subconv_total;
  }
  return {ok, fmt("%zu rows compared, totals monotone; max |dtotal| vs printed: convexity %.3f, subconvexity %.3f",
                  rows.size(), worst_conv, worst_sub)};
}

Outcome crossover() {
  const double tstar = crossover_height(1e20, 1e32);
  const double l = std::log10(tstar);
  return {l >= 24.0 && l <= 28.0,
          fmt("log10 T* = %.3f, printed threshold log10 = %.0f, window [24, 28]", l, reference::kCrossoverLog10)};
}

Outcome method_a_never_wins() {
  double worst_gap = INFINITY;
  for (int j = 1; j <= 20; ++j) {
    const double eta = 0.025 * j;
    double slope = INFINITY;
    for (int i = 0; i < 50; ++i) {
      const double r = 1.01 + 0.98 * i / 49.0;
      const double s = method_a_coeffs(r, 0.25, eta, reference::kTheorem1T0).slope();
      if (s > 0.0) slope = std::min(slope, s);
    }
    worst_gap = std::min(worst_gap, slope - theorem_b_coeff_b(eta, 0.25));
  }
  return {worst_gap >= 0.0, fmt("50 r x 20 eta grid at theta=1/4: min(slope_A - b) = %.4f", worst_gap)};
}

Outcome special_functions() {
  const double z2 = zeta_real(2.0);
  const double z15 = zeta_real(1.5);
  const auto scan = scan_zeros(1000.0);
  const double first = scan.sign_change_ordinates.empty() ? 0.0 : scan.sign_change_ordinates[0];
  int n100 = 0;
  for (double g : scan.sign_change_ordinates) n100 += g <= 100.0;
  const bool ok = std::abs(z2 - pi * pi / 6.0) <= kZeta2Tol && std::abs(z15 - 2.612375348685) <= kZeta15Tol &&
                  std::abs(first - 14.134725) <= kFirstZeroTol && n100 == 29 && scan.zero_count == 649;
  return {ok, fmt("zeta(2) err %.1e, zeta(1.5) = %.12f, gamma_1 = %.6f, N(100) = %d, N(1000) = %d",
                  std::abs(z2 - pi * pi / 6.0), z15, first, n100, scan.zero_count)};
}

Outcome empirical_bounds() {
  const std::vector<LinearBound> bounds{rosser_bound(3.0), theorem_b_bound({0.351, 3.001, make_convexity()})};
  const auto report = check_bounds_empirically(4.0, 1000.0, bounds, 2000);
  return {report.passed() && report.samples == 2000,
          fmt("2000 samples on [4, 1000], max |S| = %.4f at t = %.3f, violations = %zu, min margins %.3f / %.3f",
              report.max_abs_s, report.argmax_t, report.violations.size(), report.checks[0].min_margin,
              report.checks[1].min_margin)};
}

Outcome lemma_suite() {
  const auto report = check_lemmas(500, 42);
  std::string detail = "seed 42, 500 samples:";
  bool ok = report.passed();
  for (const auto& f : report.families) {
    ok = ok && f.worst_margin >= 0.0;
    detail += fmt(" %s %d/%d (min margin %.2e)", f.name.c_str(), f.samples - f.failures, f.samples, f.worst_margin);
  }
  return {ok, detail};
}

Outcome endpoint_identities() {
  double worst = 0.0;
  const auto cert = make_convexity();
  for (double eta : {0.01, 0.1, 0.25, 0.4, 0.5}) {
    for (double t : {1.1e3, 1e4, 1e6, 1e10, 1e20}) {
      const StripBoundParams p(eta, 1e3, cert);
      const double right = strip_bound_right(p, {1.0 + eta, t});
      const double right_expected = p.C1() * zeta_real(1.0 + eta);
      const double left = strip_bound_left(p, {0.5, t});
      const double left_expected = cert.B() * std::pow(p.C2() * t, cert.theta());
      worst = std::max({worst, std::abs(right / right_expected - 1.0), std::abs(left / left_expected - 1.0)});
    }
  }
  return {worst <= kEndpointRelTol, fmt("5x5 (eta, t) grid, max relative error %.2e (tol %.0e)", worst, kEndpointRelTol)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"rosser column reproduction", rosser_column},
      {"asymptotic coefficients", asymptotic_coefficients},
      {"printed b values reachable", printed_b_reachable},
      {"optimized totals report", table_totals},
      {"subconvexity crossover", crossover},
      {"small-radius method at theta = 1/4", method_a_never_wins},
      {"special functions", special_functions},
      {"empirical bound validity", empirical_bounds},
      {"domination suite", lemma_suite},
      {"strip endpoint identities", endpoint_identities},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
