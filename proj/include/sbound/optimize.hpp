#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sbound/critline.hpp"
#include "sbound/reference.hpp"
#include "sbound/sbounds.hpp"

namespace sbound {

struct ScalarMinimum {
  double x;
  double fx;
  int evaluations;
};

/// Golden-section search for a minimum of f on [lo, hi], stopping once the
/// bracket is narrower than x_tol.
ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                      double x_tol = 1e-10);

inline constexpr double kMinEta = 1e-6;
inline constexpr double kMinDelta = 1e-6;
inline constexpr int kEtaGridPoints = 200;
inline constexpr int kDeltaGridPoints = 64;

struct OptimizationResult {
  double t0;
  CertKind mode;
  double best_eta;
  std::optional<double> best_delta;
  LinearBound bound;
  double total_at_t0;
  int evaluations;
};

/// Minimizes a + b log t0 over eta (and delta for ChengGraham mode).
/// Custom mode is rejected here; use minimize_bound_for_cert.
OptimizationResult minimize_bound(double t0, CertKind mode);

/// Minimizes a + b log t0 over eta for a fixed certificate with a prefactor.
OptimizationResult minimize_bound_for_cert(double t0, const CriticalLineBound& cert);

/// Margin by which the Cheng-Graham optimum's b must undercut the convexity
/// optimum's b to count as overtaking it.
inline constexpr double kCrossoverMargin = 1e-6;

/// Whether the subconvexity-optimized b is below the convexity-optimized b at t0.
bool subconvexity_wins(double t0);

/// Height where the subconvexity-optimized b first drops below the
/// convexity-optimized b, by bisection on log t0 to relative tolerance 1e-3.
double crossover_height(double lo, double hi);

struct TableRow {
  double t0;
  double rosser_b;
  double rosser_total;
  double conv_b;
  double conv_total;
  double subconv_b;
  double subconv_total;
  double conv_eta;
  double subconv_eta;
  double subconv_delta;
  std::optional<reference::TableRow> published;
};

/// The eight heights of the published comparison table.
std::vector<double> default_table_heights();

/// One row per height; rows are computed concurrently.
std::vector<TableRow> build_table(std::span<const double> t0_list);

}  // namespace sbound
