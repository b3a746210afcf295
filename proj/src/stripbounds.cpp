#include "sbound/stripbounds.hpp"

#include <cmath>
#include <numbers>

#include "sbound/errors.hpp"
#include "sbound/specfun.hpp"

namespace sbound {
namespace {

using std::numbers::pi;

constexpr double kEdgeSlack = 1e-12;

void require_upper_half(const StripBoundParams& params, std::complex<double> s) {
  if (!(s.imag() > params.t0())) throw DomainError("strip bound: Im(s) must exceed t0");
}

}  // namespace

double pl_interpolate(const LineBoundSpec& left, const LineBoundSpec& right, double Q,
                      std::complex<double> s) {
  if (!(left.sigma < right.sigma)) throw DomainError("pl_interpolate: need left.sigma < right.sigma");
  if (!(left.exponent >= right.exponent)) throw DomainError("pl_interpolate: need alpha >= beta");
  if (!(left.prefactor > 0.0 && right.prefactor > 0.0)) throw DomainError("pl_interpolate: prefactors must be positive");
  if (!(left.exponent >= 0.0 && right.exponent >= 0.0)) throw DomainError("pl_interpolate: exponents must be >= 0");
  const double sigma = s.real();
  if (sigma < left.sigma - kEdgeSlack || sigma > right.sigma + kEdgeSlack)
    throw DomainError("pl_interpolate: Re(s) outside the strip");
  const double modulus = std::abs(Q + s);
  if (!(modulus > 0.0)) throw DomainError("pl_interpolate: |Q + s| must be positive");

  const double width = right.sigma - left.sigma;
  const double wl = (right.sigma - sigma) / width;
  const double wr = (sigma - left.sigma) / width;
  return std::exp(wl * std::log(left.prefactor) + wr * std::log(right.prefactor) +
                  (left.exponent * wl + right.exponent * wr) * std::log(modulus));
}

double gamma_ratio_bound(std::complex<double> s) {
  const double sigma = s.real();
  if (!(sigma >= -0.5 && sigma <= 0.5)) throw DomainError("gamma_ratio_bound: need -1/2 <= Re(s) <= 1/2");
  return std::pow(std::abs(1.0 + s) / 2.0, 0.5 - sigma);
}

double gamma_ratio_exact(std::complex<double> s) {
  return std::exp(log_abs_gamma(0.5 - 0.5 * s) - log_abs_gamma(0.5 * s));
}

StripBoundParams::StripBoundParams(double eta, double t0, CriticalLineBound cert, RightStripForm form)
    : eta_(eta), t0_(t0), cert_(std::move(cert)), form_(form), zeta1_(0.0) {
  if (!(eta > 0.0 && eta <= 0.5)) throw DomainError("StripBoundParams: eta must lie in (0, 1/2]");
  if (!(t0 > std::numbers::e)) throw DomainError("StripBoundParams: t0 must exceed e");
  zeta1_ = zeta_real(1.0 + eta);
}

double StripBoundParams::C1() const {
  const double r = (2.0 + eta_) / t0_;
  return std::sqrt(1.0 + r * r);
}

double StripBoundParams::C2() const { return std::sqrt(1.0 + 1.0 / (t0_ * t0_)); }

double reflected_line_bound(const StripBoundParams& params, std::complex<double> s) {
  if (std::abs(s.real() + params.eta()) > kEdgeSlack) throw DomainError("reflected_line_bound: need Re(s) = -eta");
  if (!(s.imag() >= params.t0())) throw DomainError("reflected_line_bound: need Im(s) >= t0");
  return std::pow(std::abs(s + 1.0) / (2.0 * pi), 0.5 + params.eta()) * params.zeta_one_plus_eta();
}

double strip_bound_right(const StripBoundParams& params, std::complex<double> s) {
  const double eta = params.eta();
  const double sigma = s.real();
  if (sigma < 0.5 - kEdgeSlack || sigma > 1.0 + eta + kEdgeSlack)
    throw DomainError("strip_bound_right: need 1/2 <= Re(s) <= 1 + eta");
  require_upper_half(params, s);
  const double B = params.cert().B();
  const double theta = params.cert().theta();
  const double t = s.imag();
  const double lever = 1.0 + eta - sigma;
  const double zeta_factor = params.form() == RightStripForm::Endpoint
                                 ? params.zeta_one_plus_eta()
                                 : std::log(params.zeta_one_plus_eta());
  const double log_inner = (theta * lever + 0.5 + eta) * std::log(params.C1()) + lever * std::log(B) +
                           (sigma - 0.5) * std::log(zeta_factor) + theta * lever * std::log(t);
  return std::exp(log_inner / (0.5 + eta));
}

double strip_bound_left(const StripBoundParams& params, std::complex<double> s) {
  const double eta = params.eta();
  const double sigma = s.real();
  if (sigma < -eta - kEdgeSlack || sigma > 0.5 + kEdgeSlack)
    throw DomainError("strip_bound_left: need -eta <= Re(s) <= 1/2");
  require_upper_half(params, s);
  const double B = params.cert().B();
  const double theta = params.cert().theta();
  const double t = s.imag();
  const double half_eta = 0.5 + eta;
  const double log_inner =
      (0.5 - sigma) * (std::log(params.zeta_one_plus_eta()) - half_eta * std::log(2.0 * pi)) +
      (sigma + eta) * std::log(B) +
      (half_eta * (0.5 - sigma) + theta * (sigma + eta)) * std::log(params.C2() * t);
  return std::exp(log_inner / half_eta);
}

}  // namespace sbound
