#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sbound/sbounds.hpp"

namespace sbound {

inline constexpr double kMaxScanHeight = 5000.0;
inline constexpr double kDefaultGridStep = 0.05;
inline constexpr double kOrdinateTolerance = 1e-6;
inline constexpr double kLehmerThreshold = 1e-3;

struct SuspiciousInterval {
  double lo;
  double hi;
  std::string reason;
};

struct ZeroScanResult {
  double t_max;
  int zero_count;
  std::vector<double> sign_change_ordinates;  // strictly increasing
  std::vector<SuspiciousInterval> suspicious_gaps;
};

/// Locates sign changes of Z(t) on (0, t_max].
///
/// Z is sampled on a uniform grid (sub-ranges evaluated concurrently), sign
/// changes are bisected to 1e-6, and local minima of |Z| are probed for a
/// hidden pair of zeros. Near-misses below 1e-3 and zero-count drift are
/// reported in suspicious_gaps.
ZeroScanResult scan_zeros(double t_max, double grid_step = kDefaultGridStep);

struct SEvaluation {
  double t;
  double n_of_t;  // half-integer at a scanned ordinate
  double theta_over_pi;
  double s_of_t;
};

/// S(t) = N(t) - 1 - theta(t)/pi from a zero scan covering t.
SEvaluation s_of_t(double t, const ZeroScanResult& scan);

struct BoundCheck {
  LinearBound bound;
  double min_margin;  // min over samples of bound(t) - |S(t)|
  double argmin_t;
  int violations;
};

struct BoundViolation {
  std::size_t bound_index;
  double t;
  double s;
  double bound_value;
};

struct EmpiricalBoundReport {
  double t_lo;
  double t_hi;
  int samples;
  double max_abs_s;
  double argmax_t;
  std::vector<BoundCheck> checks;
  std::vector<BoundViolation> violations;

  bool passed() const { return violations.empty(); }
};

/// Evaluates |S(t)| against each bound at `samples` evenly spaced heights.
EmpiricalBoundReport check_bounds_empirically(double t_lo, double t_hi, std::span<const LinearBound> bounds,
                                              int samples);

/// As above, reusing an existing scan that covers t_hi.
EmpiricalBoundReport check_bounds_empirically(double t_lo, double t_hi, std::span<const LinearBound> bounds,
                                              int samples, const ZeroScanResult& scan);

struct LemmaFamilyResult {
  std::string name;
  int samples;
  int failures;
  double worst_margin;
  double worst_sigma;
  double worst_t;

  bool passed() const { return failures == 0; }
};

struct LemmaReport {
  std::uint64_t seed;
  int samples;
  std::vector<LemmaFamilyResult> families;

  bool passed() const;
};

/// Random domination checks: gamma ratio, both strip bounds, the
/// Euler-product lower bound for sigma > 1, and the raw Cheng-Graham bound.
LemmaReport check_lemmas(int samples, std::uint64_t seed);

}  // namespace sbound
