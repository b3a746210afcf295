#pragma once

#include <optional>
#include <string>

namespace sbound {

enum class CertKind { Convexity, ChengGraham, Custom };

std::string to_string(CertKind kind);

/// A growth certificate |zeta(1/2 + it)| <= B |s + 1|^theta on the critical line.
///
/// Coefficient-only certificates carry theta without a prefactor; they feed
/// the log T coefficient of the S(T) bounds but not the constant term.
class CriticalLineBound {
 public:
  CertKind kind() const { return kind_; }
  double theta() const { return theta_; }
  double valid_from() const { return valid_from_; }
  std::optional<double> delta() const { return delta_; }
  bool coefficient_only() const { return !prefactor_; }
  std::optional<double> prefactor() const { return prefactor_; }

  /// The prefactor B; throws DomainError for a coefficient-only certificate.
  double B() const;

  /// B |3/2 + it|^theta.
  double bound_at(double t) const;

  std::string label() const;

 private:
  CriticalLineBound(CertKind kind, std::optional<double> prefactor, double theta,
                    std::optional<double> delta)
      : kind_(kind), prefactor_(prefactor), theta_(theta), delta_(delta) {}

  friend CriticalLineBound make_cheng_graham(double delta);
  friend CriticalLineBound make_convexity();
  friend CriticalLineBound make_custom(std::optional<double> B, double theta);

  CertKind kind_;
  std::optional<double> prefactor_;
  double theta_;
  std::optional<double> delta_;
  double valid_from_ = 0.0;
};

/// 3 t^{1/6} log t, valid for t > e.
double cheng_graham_raw(double t);

/// theta = 1/6 + delta with B = 3/(delta e), from log t <= t^delta/(delta e).
CriticalLineBound make_cheng_graham(double delta);

/// theta = 1/4, B = 2.53.
CriticalLineBound make_convexity();

CriticalLineBound make_custom(std::optional<double> B, double theta);

inline constexpr double kConvexityPrefactor = 2.53;
inline constexpr double kMaxChengGrahamDelta = 1.0 / 12.0;

}  // namespace sbound
