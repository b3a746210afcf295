#include "sbound/sbounds.hpp"

#include <cmath>
#include <numbers>

#include "sbound/errors.hpp"
#include "sbound/specfun.hpp"

namespace sbound {
namespace {

using std::numbers::pi;
using std::numbers::sqrt3;

constexpr double kThetaSlack = 1e-15;

// 1 + pi/3 - sqrt3 and sqrt3 - pi/3
constexpr double kThetaWeight = 1.0 + pi / 3.0 - sqrt3;
constexpr double kEtaWeight = sqrt3 - pi / 3.0;

double b_denominator() { return 2.0 * pi * std::log(2.0); }

void check_theta(double theta, const char* who) {
  if (!(theta > 0.0 && theta <= 0.25 + kThetaSlack)) throw DomainError(std::string(who) + ": theta must lie in (0, 1/4]");
}

void check_eta(double eta, const char* who) {
  if (!(eta > 0.0 && eta <= 0.5)) throw DomainError(std::string(who) + ": eta must lie in (0, 1/2]");
}

}  // namespace

void BoundParams::validate() const {
  check_eta(eta, "BoundParams");
  if (!(t0 > 3.0)) throw DomainError("BoundParams: t0 must exceed 3");
}

std::string to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::TheoremB:
      return "theorem-b";
    case BoundMethod::Rosser:
      return "rosser";
    case BoundMethod::MethodA:
      return "method-a";
  }
  return "unknown";
}

LinearBound::LinearBound(double a, double b, double t0, BoundMethod method, std::optional<double> r)
    : a_(a), b_(b), t0_(t0), method_(method), r_(r) {
  if (!(b > 0.0)) throw DomainError("LinearBound: b must be positive");
  if (!std::isfinite(a)) throw DomainError("LinearBound: a must be finite");
}

double LinearBound::value_at(double T) const {
  if (!(T >= t0_)) throw DomainError("LinearBound::value_at: T below t0");
  return a_ + b_ * std::log(T);
}

double theorem_b_coeff_b(double eta, double theta) {
  check_eta(eta, "theorem_b_coeff_b");
  check_theta(theta, "theorem_b_coeff_b");
  return (2.0 * theta * kThetaWeight + (eta + 0.5) * kEtaWeight) / b_denominator();
}

double theorem_b_coeff_b_limit(double theta) {
  check_theta(theta, "theorem_b_coeff_b_limit");
  return (2.0 * theta * kThetaWeight + 0.5 * kEtaWeight) / b_denominator();
}

std::optional<double> eta_for_coeff_b(double b, double theta) {
  check_theta(theta, "eta_for_coeff_b");
  const double eta = (b * b_denominator() - 2.0 * theta * kThetaWeight) / kEtaWeight - 0.5;
  if (!(eta > 0.0 && eta <= 0.5)) return std::nullopt;
  return eta;
}

double theorem_b_coeff_a(const BoundParams& params) {
  params.validate();
  const double B = params.cert.B();
  return 1.85 * std::log(zeta_real(1.0 + params.eta)) + 0.71 * std::log(B) - 0.58 + 1.0 / params.t0;
}

LinearBound theorem_b_bound(const BoundParams& params) {
  const double a = theorem_b_coeff_a(params);
  const double b = theorem_b_coeff_b(params.eta, params.cert.theta());
  return {a, b, params.t0, BoundMethod::TheoremB};
}

LinearBound rosser_bound(double t0) {
  if (!(t0 >= 3.0)) throw DomainError("rosser_bound: t0 must be >= 3");
  const double L = std::log(t0);
  return {1.588, 0.137 + 0.443 * std::log(L) / L, t0, BoundMethod::Rosser};
}

double MethodACoeffs::slope() const { return a5 / (pi * std::log(r)); }

MethodACoeffs method_a_coeffs(double r, double theta, double eta, double t0) {
  if (!(r > 1.0 && r < 2.0)) throw DomainError("method_a_coeffs: r must lie in (1, 2)");
  check_theta(theta, "method_a_coeffs");
  check_eta(eta, "method_a_coeffs");
  if (!(t0 > std::numbers::e)) throw DomainError("method_a_coeffs: t0 must exceed e");

  const double asin_r = std::asin(1.0 / r);
  const double chord = r * std::sqrt(1.0 - 1.0 / (r * r));
  const double lens = asin_r - pi / 2.0 + chord;
  const double tilt = 0.5 + eta - 2.0 * theta;

  MethodACoeffs c{};
  c.r = r;
  c.theta = theta;
  c.eta = eta;
  c.t0 = t0;
  // Grouping kept as typeset, including (1/2 log 2pi)(pi/2).
  c.a1 = 3.0 * pi / (8.0 * t0) - (0.5 * std::log(2.0 * pi)) * (pi / 2.0) - asin_r + chord;
  c.a2 = 2.0 * (pi / 2.0 - asin_r) - 3.0 * chord + r;
  c.a3 = r * theta * (2.0 - std::sqrt(1.0 - 1.0 / (r * r))) + asin_r + tilt * lens;
  c.a4 = 3.0 * pi / 2.0 - asin_r + 2.0 * chord + 1.0 - r;
  c.a5 = r * theta + tilt * lens;
  return c;
}

double method_a_bound(const MethodACoeffs& coeffs, double B, double T) {
  if (!(B > 0.0)) throw DomainError("method_a_bound: B must be positive");
  if (!(T > coeffs.t0)) throw DomainError("method_a_bound: T must exceed t0");
  const double log_zeta = std::log(zeta_real(1.0 + coeffs.eta));
  const double numer = coeffs.a1 + coeffs.a2 * std::log(B) + coeffs.a3 * 9.0 / (2.0 * coeffs.t0 * coeffs.t0) +
                       coeffs.a4 * log_zeta + coeffs.a5 * std::log(T);
  return 2.0 / pi * log_zeta + numer / (pi * std::log(coeffs.r));
}

LinearBound method_a_linear(const MethodACoeffs& coeffs, double B) {
  if (!(B > 0.0)) throw DomainError("method_a_linear: B must be positive");
  const double log_zeta = std::log(zeta_real(1.0 + coeffs.eta));
  const double denom = pi * std::log(coeffs.r);
  const double a = 2.0 / pi * log_zeta +
                   (coeffs.a1 + coeffs.a2 * std::log(B) + coeffs.a3 * 9.0 / (2.0 * coeffs.t0 * coeffs.t0) +
                    coeffs.a4 * log_zeta) /
                       denom;
  return {a, coeffs.a5 / denom, coeffs.t0, BoundMethod::MethodA, coeffs.r};
}

}  // namespace sbound
