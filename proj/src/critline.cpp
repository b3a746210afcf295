#include "sbound/critline.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "sbound/errors.hpp"

namespace sbound {

std::string to_string(CertKind kind) {
  switch (kind) {
    case CertKind::Convexity:
      return "convexity";
    case CertKind::ChengGraham:
      return "cheng-graham";
    case CertKind::Custom:
      return "custom";
  }
  return "unknown";
}

double CriticalLineBound::B() const {
  if (!prefactor_) throw DomainError("certificate is coefficient-only (no prefactor B)");
  return *prefactor_;
}

double CriticalLineBound::bound_at(double t) const {
  return B() * std::pow(std::hypot(1.5, t), theta_);
}

std::string CriticalLineBound::label() const {
  std::ostringstream os;
  os << to_string(kind_);
  if (delta_) os << "(delta=" << *delta_ << ")";
  return os.str();
}

double cheng_graham_raw(double t) {
  if (!(t > std::numbers::e)) throw DomainError("cheng_graham_raw: t must exceed e");
  return 3.0 * std::pow(t, 1.0 / 6.0) * std::log(t);
}

CriticalLineBound make_cheng_graham(double delta) {
  if (!(delta > 0.0 && delta <= kMaxChengGrahamDelta))
    throw DomainError("make_cheng_graham: delta must lie in (0, 1/12]");
  return {CertKind::ChengGraham, 3.0 / (delta * std::numbers::e), 1.0 / 6.0 + delta, delta};
}

CriticalLineBound make_convexity() {
  return {CertKind::Convexity, kConvexityPrefactor, 0.25, std::nullopt};
}

CriticalLineBound make_custom(std::optional<double> B, double theta) {
  if (!(theta > 0.0 && theta <= 0.25)) throw DomainError("make_custom: theta must lie in (0, 1/4]");
  if (B && !(*B > 0.0)) throw DomainError("make_custom: B must be positive");
  return {CertKind::Custom, B, theta, std::nullopt};
}

}  // namespace sbound
