#pragma once

#include <complex>

#include "sbound/critline.hpp"

namespace sbound {

/// Hypothesis |f(s)| <= prefactor * |Q + s|^exponent on Re(s) = sigma.
struct LineBoundSpec {
  double sigma;
  double prefactor;
  double exponent;
};

/// Explicit Phragmen-Lindelof interpolation between two line bounds.
///
/// Requires left.sigma < right.sigma, left.exponent >= right.exponent and
/// left.sigma <= Re(s) <= right.sigma.
double pl_interpolate(const LineBoundSpec& left, const LineBoundSpec& right, double Q,
                      std::complex<double> s);

/// (|1 + s| / 2)^{1/2 - sigma}, an upper bound for |Gamma(1/2 - s/2) / Gamma(s/2)|
/// on -1/2 <= sigma <= 1/2.
double gamma_ratio_bound(std::complex<double> s);

/// |Gamma(1/2 - s/2) / Gamma(s/2)| evaluated from log-gamma.
double gamma_ratio_exact(std::complex<double> s);

/// How the zeta(1+eta) factor enters the right-of-half strip bound.
enum class RightStripForm {
  Endpoint,  ///< zeta(1+eta)^{sigma-1/2}; reproduces |zeta(1+eta+it)| <= zeta(1+eta)
  Verbatim,  ///< (log zeta(1+eta))^{sigma-1/2} as typeset
};

/// Parameters of the strip bounds: eta in (0, 1/2], t0 > e, a critical-line certificate.
class StripBoundParams {
 public:
  StripBoundParams(double eta, double t0, CriticalLineBound cert,
                   RightStripForm form = RightStripForm::Endpoint);

  double eta() const { return eta_; }
  double t0() const { return t0_; }
  const CriticalLineBound& cert() const { return cert_; }
  RightStripForm form() const { return form_; }

  /// sqrt(1 + ((2 + eta)/t0)^2); absorbs |s - 1| -> |s + 1| -> t.
  double C1() const;
  /// sqrt(1 + 1/t0^2); absorbs |s + 1| -> t.
  double C2() const;
  /// zeta(1 + eta), cached at construction.
  double zeta_one_plus_eta() const { return zeta1_; }

 private:
  double eta_;
  double t0_;
  CriticalLineBound cert_;
  RightStripForm form_;
  double zeta1_;
};

/// (|s + 1| / 2pi)^{1/2 + eta} zeta(1 + eta) on Re(s) = -eta, Im(s) >= t0.
double reflected_line_bound(const StripBoundParams& params, std::complex<double> s);

/// Bound for |zeta(s)| on 1/2 <= sigma <= 1 + eta, t > t0.
double strip_bound_right(const StripBoundParams& params, std::complex<double> s);

/// Bound for |zeta(s)| on -eta <= sigma <= 1/2, t > t0.
double strip_bound_left(const StripBoundParams& params, std::complex<double> s);

}  // namespace sbound
