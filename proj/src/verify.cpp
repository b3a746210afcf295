#include "sbound/verify.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "sbound/critline.hpp"
#include "sbound/errors.hpp"
#include "sbound/optimize.hpp"
#include "sbound/specfun.hpp"
#include "sbound/stripbounds.hpp"

namespace sbound {
namespace {

using std::numbers::pi;

constexpr EvalAccuracy kScanAccuracy{1e-8, std::nullopt};
constexpr EvalAccuracy kCheckAccuracy{1e-10, std::nullopt};
constexpr double kDriftCheckEvery = 10.0;

double z_at(double t) { return z_function(t, kScanAccuracy); }

std::vector<double> sample_grid(std::span<const double> ts) {
  std::vector<double> out(ts.size());
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t chunks = std::min<std::size_t>(hw, std::max<std::size_t>(1, ts.size() / 256));
  const std::size_t per = (ts.size() + chunks - 1) / chunks;
  std::vector<std::future<void>> jobs;
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = c * per;
    const std::size_t end = std::min(ts.size(), begin + per);
    if (begin >= end) break;
    jobs.push_back(std::async(std::launch::async, [&, begin, end] {
      for (std::size_t i = begin; i < end; ++i) out[i] = z_at(ts[i]);
    }));
  }
  for (auto& j : jobs) j.get();
  return out;
}

// Bisects a sign change of Z on [lo, hi] down to kOrdinateTolerance.
double bisect(double lo, double hi, double z_lo) {
  for (int iter = 0; hi - lo > kOrdinateTolerance; ++iter) {
    if (iter > 200) throw AccuracyError("scan_zeros: bisection stalled");
    const double mid = 0.5 * (lo + hi);
    const double z_mid = z_at(mid);
    if (!std::isfinite(z_mid)) throw AccuracyError("scan_zeros: non-finite Z during refinement");
    if (z_mid == 0.0) return mid;
    if ((z_mid < 0.0) == (z_lo < 0.0)) {
      lo = mid;
      z_lo = z_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : rng_(seed) {}
  double operator()(double lo, double hi) {
    const double u = static_cast<double>(rng_() >> 11) * 0x1p-53;
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 rng_;
};

struct FamilyTally {
  LemmaFamilyResult result;

  explicit FamilyTally(std::string name)
      : result{std::move(name), 0, 0, std::numeric_limits<double>::infinity(), 0.0, 0.0} {}

  void add(double margin, double sigma, double t) {
    ++result.samples;
    if (margin < 0.0 || !std::isfinite(margin)) ++result.failures;
    if (margin < result.worst_margin || !std::isfinite(margin)) {
      result.worst_margin = margin;
      result.worst_sigma = sigma;
      result.worst_t = t;
    }
  }
};

}  // namespace

ZeroScanResult scan_zeros(double t_max, double grid_step) {
  if (!(t_max > 0.0 && t_max <= kMaxScanHeight)) throw DomainError("scan_zeros: t_max must lie in (0, 5000]");
  if (!(grid_step > 0.0 && grid_step <= 1.0)) throw DomainError("scan_zeros: grid_step must lie in (0, 1]");

  const auto intervals = static_cast<std::size_t>(std::ceil(t_max / grid_step));
  std::vector<double> ts(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) ts[i] = std::min(t_max, static_cast<double>(i) * grid_step);
  const std::vector<double> zs = sample_grid(ts);

  ZeroScanResult result{t_max, 0, {}, {}};
  auto& ords = result.sign_change_ordinates;

  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const double za = zs[i];
    const double zb = zs[i + 1];
    if (zb == 0.0) {
      ords.push_back(ts[i + 1]);
      continue;
    }
    if (za == 0.0) continue;
    if ((za < 0.0) != (zb < 0.0)) {
      ords.push_back(bisect(ts[i], ts[i + 1], za));
      continue;
    }
    // Probe a local minimum of |Z| for a pair of zeros the grid stepped over.
    if (i == 0 || i + 2 >= ts.size()) continue;
    const double zl = zs[i - 1];
    if ((zl < 0.0) != (za < 0.0) || zl == 0.0) continue;
    if (!(std::abs(za) < std::abs(zl) && std::abs(za) <= std::abs(zb))) continue;
    const double sign = za < 0.0 ? -1.0 : 1.0;
    const ScalarMinimum dip =
        golden_section_minimize([&](double t) { return sign * z_at(t); }, ts[i - 1], ts[i + 1], 1e-8);
    if (dip.fx < 0.0) {
      // Two sign changes hidden between ts[i-1] and ts[i+1].
      ords.push_back(bisect(ts[i - 1], dip.x, zl));
      ords.push_back(bisect(dip.x, ts[i + 1], sign * dip.fx));
    } else if (dip.fx < kLehmerThreshold) {
      result.suspicious_gaps.push_back({ts[i - 1], ts[i + 1], "|Z| dips below 1e-3 without a sign change"});
    }
  }
  std::sort(ords.begin(), ords.end());
  ords.erase(std::unique(ords.begin(), ords.end(),
                         [](double a, double b) { return std::abs(a - b) <= kOrdinateTolerance; }),
             ords.end());
  result.zero_count = static_cast<int>(ords.size());

  // Zero-count drift against the smooth main term.
  double prev = 0.0;
  for (double T = kDriftCheckEvery;; T += kDriftCheckEvery) {
    T = std::min(T, t_max);
    if (T >= 1.0) {
      const auto count = std::upper_bound(ords.begin(), ords.end(), T) - ords.begin();
      const double expected = std::round(theta_rs(T) / pi + 1.0);
      if (std::abs(static_cast<double>(count) - expected) >= 2.0)
        result.suspicious_gaps.push_back({prev, T, "zero count drifts from theta/pi + 1 by >= 2"});
    }
    prev = T;
    if (T >= t_max) break;
  }
  return result;
}

SEvaluation s_of_t(double t, const ZeroScanResult& scan) {
  if (!(t >= 3.0 && t <= kMaxScanHeight)) throw DomainError("s_of_t: t must lie in [3, 5000]");
  if (!(t <= scan.t_max)) throw DomainError("s_of_t: scan does not cover t");
  const auto& ords = scan.sign_change_ordinates;
  const auto below = std::lower_bound(ords.begin(), ords.end(), t - kOrdinateTolerance) - ords.begin();
  const auto upto = std::upper_bound(ords.begin(), ords.end(), t + kOrdinateTolerance) - ords.begin();
  double n = static_cast<double>(std::upper_bound(ords.begin(), ords.end(), t) - ords.begin());
  if (upto > below) n = static_cast<double>(below) + 0.5 * static_cast<double>(upto - below);
  const double theta_over_pi = theta_rs(t) / pi;
  return {t, n, theta_over_pi, n - 1.0 - theta_over_pi};
}

EmpiricalBoundReport check_bounds_empirically(double t_lo, double t_hi, std::span<const LinearBound> bounds,
                                              int samples) {
  if (!(t_hi <= kMaxScanHeight)) throw DomainError("check_bounds_empirically: t_hi must be <= 5000");
  return check_bounds_empirically(t_lo, t_hi, bounds, samples, scan_zeros(t_hi));
}

EmpiricalBoundReport check_bounds_empirically(double t_lo, double t_hi, std::span<const LinearBound> bounds,
                                              int samples, const ZeroScanResult& scan) {
  if (!(t_lo >= 3.0 && t_lo < t_hi && t_hi <= kMaxScanHeight))
    throw DomainError("check_bounds_empirically: need 3 <= t_lo < t_hi <= 5000");
  if (samples < 1) throw DomainError("check_bounds_empirically: samples must be positive");
  for (const auto& b : bounds)
    if (!(b.t0() <= t_lo)) throw DomainError("check_bounds_empirically: every bound needs t0 <= t_lo");

  EmpiricalBoundReport report{t_lo, t_hi, samples, 0.0, t_lo, {}, {}};
  for (const auto& b : bounds)
    report.checks.push_back({b, std::numeric_limits<double>::infinity(), t_lo, 0});

  const auto& ords = scan.sign_change_ordinates;
  const double step = (t_hi - t_lo) / samples;
  for (int i = 0; i < samples; ++i) {
    double t = t_lo + (i + 0.5) * step;
    // Keep clear of ordinates so the one-sided value is reported.
    const auto it = std::lower_bound(ords.begin(), ords.end(), t - kOrdinateTolerance);
    if (it != ords.end() && std::abs(*it - t) <= kOrdinateTolerance) t = *it + 2.0 * kOrdinateTolerance;

    const double s = s_of_t(t, scan).s_of_t;
    if (std::abs(s) > report.max_abs_s) {
      report.max_abs_s = std::abs(s);
      report.argmax_t = t;
    }
    for (std::size_t k = 0; k < bounds.size(); ++k) {
      const double value = bounds[k].value_at(t);
      const double margin = value - std::abs(s);
      auto& check = report.checks[k];
      if (margin < check.min_margin) {
        check.min_margin = margin;
        check.argmin_t = t;
      }
      if (margin < 0.0) {
        ++check.violations;
        report.violations.push_back({k, t, s, value});
      }
    }
  }
  return report;
}

bool LemmaReport::passed() const {
  return std::all_of(families.begin(), families.end(), [](const auto& f) { return f.passed(); });
}

LemmaReport check_lemmas(int samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("check_lemmas: samples must be >= 1");
  Uniform uniform(seed);
  LemmaReport report{seed, samples, {}};

  FamilyTally gamma("gamma_ratio");
  // s = 1/2 is the equality case.
  gamma.add(gamma_ratio_bound({0.5, 0.0}) - gamma_ratio_exact({0.5, 0.0}), 0.5, 0.0);
  for (int i = 1; i < samples; ++i) {
    const double sigma = uniform(-0.5, 0.5);
    const double t = uniform(1.0, 100.0) * (uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0);
    const cplx s{sigma, t};
    gamma.add(gamma_ratio_bound(s) - gamma_ratio_exact(s), sigma, t);
  }

  FamilyTally right("strip_right");
  FamilyTally left("strip_left");
  constexpr double kStripT0 = 100.0;
  for (int i = 0; i < samples; ++i) {
    const double eta = uniform(0.01, 0.5);
    const CriticalLineBound cert =
        (i % 2 == 0) ? make_convexity() : make_cheng_graham(uniform(1e-3, kMaxChengGrahamDelta));
    const StripBoundParams params(eta, kStripT0, cert);
    const double t = uniform(kStripT0, 4.0 * kStripT0);
    if (t <= kStripT0) continue;
    const double sr = uniform(0.5, 1.0 + eta);
    right.add(strip_bound_right(params, {sr, t}) - std::abs(zeta_complex({sr, t}, kCheckAccuracy)), sr, t);
    const double sl = uniform(-eta, 0.5);
    left.add(strip_bound_left(params, {sl, t}) - std::abs(zeta_complex({sl, t}, kCheckAccuracy)), sl, t);
  }

  FamilyTally euler("euler_product");
  for (int i = 0; i < samples; ++i) {
    const double sigma = uniform(1.01, 3.0);
    const double t = uniform(0.0, 1000.0);
    const double lower = zeta_real(2.0 * sigma) / zeta_real(sigma);
    euler.add(std::abs(zeta_complex({sigma, t}, kCheckAccuracy)) - lower, sigma, t);
  }

  FamilyTally cg("cheng_graham");
  for (int i = 0; i < samples; ++i) {
    double t = uniform(std::numbers::e, 2000.0);
    if (t <= std::numbers::e) t = 2000.0;
    cg.add(cheng_graham_raw(t) - std::abs(zeta_complex({0.5, t}, kCheckAccuracy)), 0.5, t);
  }

  report.families = {gamma.result, right.result, left.result, euler.result, cg.result};
  return report;
}

}  // namespace sbound
