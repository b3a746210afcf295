#pragma once

#include <complex>
#include <optional>

namespace sbound {

using cplx = std::complex<double>;

/// Target accuracy for a series evaluation.
///
/// `terms_hint` seeds the number of directly summed terms in the
/// Euler-Maclaurin evaluation; the routine still grows it until the
/// remainder bound meets `abs_tol`.
struct EvalAccuracy {
  double abs_tol = 1e-12;
  std::optional<int> terms_hint = std::nullopt;
};

inline constexpr EvalAccuracy kRealZetaAccuracy{1e-12, std::nullopt};
inline constexpr EvalAccuracy kComplexZetaAccuracy{1e-6, std::nullopt};

/// zeta(sigma) for real sigma > 1.
double zeta_real(double sigma, EvalAccuracy acc = kRealZetaAccuracy);

/// zeta(s) for Re(s) > -1, s away from the pole.
cplx zeta_complex(cplx s, EvalAccuracy acc = kComplexZetaAccuracy);

/// Continuous branch of log Gamma(z) for Re(z) > 0 (real on the positive axis).
cplx log_gamma(cplx z);

/// log|Gamma(z)| anywhere off the poles; reflects for Re(z) <= 0.
double log_abs_gamma(cplx z);

/// Riemann-Siegel theta, Im log Gamma(1/4 + it/2) - (t/2) log pi, for t >= 1.
double theta_rs(double t);

/// Hardy's Z(t) = exp(i theta(t)) zeta(1/2 + it).
///
/// Below t = 200 it is evaluated from zeta_complex; above, from the
/// Riemann-Siegel main sum with the C0, C1, C2 correction terms.
double z_function(double t, EvalAccuracy acc = kComplexZetaAccuracy);

/// Height at which z_function switches to the Riemann-Siegel formula.
inline constexpr double kRiemannSiegelSwitch = 200.0;

namespace detail {
// theta without the t >= 1 precondition; z_function needs it near t = 0.
double theta_rs_any(double t);
// Riemann-Siegel correction C_k(p), k in {0, 1, 2}, for fractional part p.
double rs_correction(int k, double p);
}  // namespace detail

}  // namespace sbound
