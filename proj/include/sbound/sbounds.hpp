#pragma once

#include <optional>
#include <string>

#include "sbound/critline.hpp"

namespace sbound {

/// Free parameters of the r = 2 (reflected) bound.
struct BoundParams {
  double eta;
  double t0;
  CriticalLineBound cert;

  /// Throws DomainError unless 0 < eta <= 1/2 and t0 > 3.
  void validate() const;
};

enum class BoundMethod { TheoremB, Rosser, MethodA };

std::string to_string(BoundMethod method);

/// |S(T)| <= a + b log T for T >= t0.
class LinearBound {
 public:
  LinearBound(double a, double b, double t0, BoundMethod method, std::optional<double> r = std::nullopt);

  double a() const { return a_; }
  double b() const { return b_; }
  double t0() const { return t0_; }
  BoundMethod method() const { return method_; }
  /// Jensen radius for MethodA bounds.
  std::optional<double> r() const { return r_; }

  /// a + b log T; refuses T < t0.
  double value_at(double T) const;

 private:
  double a_;
  double b_;
  double t0_;
  BoundMethod method_;
  std::optional<double> r_;
};

/// Coefficient of log T:
/// [2 theta (1 + pi/3 - sqrt3) + (eta + 1/2)(sqrt3 - pi/3)] / (2 pi log 2).
double theorem_b_coeff_b(double eta, double theta);

/// The eta -> 0+ limit of theorem_b_coeff_b.
double theorem_b_coeff_b_limit(double theta);

/// The eta that gives coefficient `b` at this theta; empty if it falls outside (0, 1/2].
std::optional<double> eta_for_coeff_b(double b, double theta);

/// 1.85 log zeta(1+eta) + 0.71 log B - 0.58 + 1/t0.
double theorem_b_coeff_a(const BoundParams& params);

LinearBound theorem_b_bound(const BoundParams& params);

/// a = 1.588, b = 0.137 + 0.443 log log t0 / log t0, for t0 >= 3.
LinearBound rosser_bound(double t0);

/// Coefficients a1..a5 of the small-circle (r < 2) bound.
struct MethodACoeffs {
  double r;
  double a1, a2, a3, a4, a5;
  double theta;
  double eta;
  double t0;

  /// a5 / (pi log r), the coefficient of log T.
  double slope() const;
};

MethodACoeffs method_a_coeffs(double r, double theta, double eta, double t0);

/// (2/pi) log zeta(1+eta)
///   + [a1 + a2 log B + a3 * 9/(2 t0^2) + a4 log zeta(1+eta) + a5 log T] / (pi log r).
double method_a_bound(const MethodACoeffs& coeffs, double B, double T);

/// The same bound as a LinearBound in log T.
LinearBound method_a_linear(const MethodACoeffs& coeffs, double B);

}  // namespace sbound
