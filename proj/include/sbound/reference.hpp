#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace sbound::reference {

/// One printed row of the published comparison table.
struct TableRow {
  double t0;
  double rosser_b;
  double rosser_total;
  double conv_b;
  double conv_total;
  double subconv_b;
  double subconv_total;
};

std::span<const TableRow> comparison_table();

/// Row whose t0 matches to 1e-9 relative, if any.
std::optional<TableRow> find_row(double t0);

inline constexpr std::string_view kTableCitation = "Published comparison of Rosser, convexity and subconvexity bounds on S(t)";
inline constexpr std::string_view kTheoremBCitation = "|S(T)| <= a + b log T for T > T0 > 3, with b from eta and theta";
inline constexpr std::string_view kRosserCitation = "Rosser: |S(T)| <= 1.588 + {0.137 + 0.443 loglog T0/log T0} log T";
inline constexpr std::string_view kOptimumCitation = "Optimized a + b log T0 over the free parameters";
inline constexpr std::string_view kCrossoverCitation = "Published claim: subconvexity b overtakes convexity b only when T0 > 10^26";
inline constexpr std::string_view kRosserValidityCitation = "Rosser's bound holds for all T >= 3";
inline constexpr std::string_view kLemmaCitation =
    "Gamma-ratio bound, strip bounds on both sides of 1/2, Euler-product lower bound, "
    "Cheng-Graham |zeta(1/2+it)| <= 3 t^{1/6} log t";

// Scalar reference values.
inline constexpr double kTheorem1A = 1.998;
inline constexpr double kTheorem1B = 0.17;
inline constexpr double kTheorem1T0 = 1e10;
inline constexpr double kCrossoverLog10 = 26.0;
inline constexpr double kHuxleyTheta = 32.0 / 205.0;
inline constexpr double kHuxleyB = 0.1013;
inline constexpr double kConvexityLimitB = 0.115;
inline constexpr double kChengGrahamLimitB = 0.1027;
inline constexpr double kMethodAThetaThreshold = 1.0 / 50.0;

}  // namespace sbound::reference
