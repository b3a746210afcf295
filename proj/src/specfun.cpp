#include "sbound/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "sbound/errors.hpp"

namespace sbound {
namespace {

using std::numbers::pi;

// B_{2k} / (2k)! for k = 1..15.
constexpr std::array<double, 15> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
    854513.0 / 138.0 / 1.1240007277776077e21,
    -236364091.0 / 2730.0 / 6.204484017332394e23,
    8553103.0 / 6.0 / 4.0329146112660565e26,
    -23749461029.0 / 870.0 / 3.0488834461171387e29,
    8615841276005.0 / 14322.0 / 2.6525285981219107e32,
};

// B_{2k} / (2k (2k - 1)) for the Stirling series, k = 1..10.
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

// Taylor coefficients of C0 = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p)
// in powers of z^2, z = 1 - 2p.
constexpr std::array<double, 20> kC0Series = {
    0.38268343236508977173,  0.43724046807752044936,  0.13237657548034352333,
    -0.01360502604767418865, -0.01356762197010358089, -0.00162372532314446528,
    0.00029705353733379691,  0.00007943300879521470,  0.00000046556124614505,
    -0.00000143272516309551, -0.00000010354847112313, 0.00000001235792708386,
    0.00000000178810838580,  -0.00000000003391414390, -0.00000000001632663390,
    -0.00000000000037851093, 0.00000000000009327423,  0.00000000000000522184,
    -0.00000000000000033507, -0.00000000000000003412,
};

constexpr int kMaxDirectTerms = 1 << 22;

double real_part(double x) { return x; }
double real_part(cplx z) { return z.real(); }

double power_neg(double n, double s) { return std::pow(n, -s); }
cplx power_neg(double n, cplx s) { return std::exp(-s * std::log(n)); }

// Euler-Maclaurin with `n` - 1 direct terms. Returns false when the
// Bernoulli tail cannot reach `tol` at this n.
template <class T>
bool euler_maclaurin(T s, int n, double tol, T& out) {
  const double sigma = real_part(s);
  T head{0.0};
  for (int k = 1; k < n; ++k) head += power_neg(static_cast<double>(k), s);

  const double nd = static_cast<double>(n);
  const T n_pow = power_neg(nd, s);  // N^{-s}
  T sum = head + n_pow * nd / (s - 1.0) + 0.5 * n_pow;

  // term_k = B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
  T rising = s;
  T scale = n_pow / nd;
  for (std::size_t k = 0; k + 1 < kBernoulliOverFactorial.size(); ++k) {
    const T term = kBernoulliOverFactorial[k] * rising * scale;
    sum += term;
    const double m = 2.0 * static_cast<double>(k + 1);
    rising *= (s + (m - 1.0)) * (s + m);
    scale /= nd * nd;
    const T next = kBernoulliOverFactorial[k + 1] * rising * scale;
    const double bound = std::abs(s + (m + 1.0)) / (sigma + m + 1.0) * std::abs(next);
    if (bound < tol) {
      out = sum;
      return true;
    }
    if (std::abs(next) > std::abs(term)) break;
  }
  return false;
}

template <class T>
T zeta_em(T s, const EvalAccuracy& acc) {
  if (!(acc.abs_tol > 0.0)) throw DomainError("zeta: abs_tol must be positive");
  if (acc.terms_hint && *acc.terms_hint < 1) throw DomainError("zeta: terms_hint must be positive");
  int n = static_cast<int>(std::ceil((std::abs(s) + 20.0) / (2.0 * pi))) + 2;
  n = std::max(n, 8);
  if (acc.terms_hint) n = std::max(n, *acc.terms_hint);
  T out{};
  while (n <= kMaxDirectTerms) {
    if (euler_maclaurin(s, n, acc.abs_tol, out)) return out;
    n *= 2;
  }
  throw AccuracyError("zeta: Euler-Maclaurin remainder cannot meet abs_tol");
}

cplx stirling(cplx z) {
  cplx acc = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi);
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx p = inv;
  for (double c : kStirling) {
    acc += c * p;
    p *= inv2;
  }
  return acc;
}

// d^m/dz^m of the C0 series.
double c0_derivative(double z, int m) {
  double total = 0.0;
  for (std::size_t j = 0; j < kC0Series.size(); ++j) {
    const int power = 2 * static_cast<int>(j);
    if (power < m) continue;
    double factor = 1.0;
    for (int i = 0; i < m; ++i) factor *= power - i;
    total += kC0Series[j] * factor * std::pow(z, power - m);
  }
  return total;
}

double riemann_siegel(double t) {
  const double a = std::sqrt(t / (2.0 * pi));
  const auto n_terms = static_cast<long>(std::floor(a));
  const double p = a - static_cast<double>(n_terms);
  const double theta = detail::theta_rs_any(t);
  double main = 0.0;
  for (long n = 1; n <= n_terms; ++n) {
    const double nd = static_cast<double>(n);
    main += std::cos(theta - t * std::log(nd)) / std::sqrt(nd);
  }
  main *= 2.0;
  const double u = 1.0 / a;
  const double corr =
      detail::rs_correction(0, p) + u * (detail::rs_correction(1, p) + u * detail::rs_correction(2, p));
  const double sign = (n_terms % 2 == 1) ? 1.0 : -1.0;  // (-1)^{N-1}
  return main + sign * std::sqrt(u) * corr;
}

}  // namespace

double zeta_real(double sigma, EvalAccuracy acc) {
  if (!(sigma > 1.0)) throw DomainError("zeta_real: sigma must exceed 1");
  return zeta_em<double>(sigma, acc);
}

cplx zeta_complex(cplx s, EvalAccuracy acc) {
  if (!(s.real() > -1.0)) throw DomainError("zeta_complex: Re(s) must exceed -1");
  if (std::abs(s - 1.0) <= 1e-9) throw DomainError("zeta_complex: too close to the pole at s = 1");
  return zeta_em<cplx>(s, acc);
}

cplx log_gamma(cplx z) {
  if (!(z.real() > 0.0)) throw DomainError("log_gamma: Re(z) must be positive");
  cplx shift{0.0};
  while (std::abs(z) < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

double log_abs_gamma(cplx z) {
  if (z.real() > 0.0) return log_gamma(z).real();
  // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
  const double y = std::abs(pi * z.imag());
  double log_sin;
  if (y < 300.0) {
    const double m = std::abs(std::sin(pi * z));
    if (m == 0.0) throw DomainError("log_abs_gamma: pole");
    log_sin = std::log(m);
  } else {
    log_sin = y - std::log(2.0);
  }
  return std::log(pi) - log_sin - log_gamma(1.0 - z).real();
}

double detail::theta_rs_any(double t) {
  return log_gamma(cplx{0.25, 0.5 * t}).imag() - 0.5 * t * std::log(pi);
}

double theta_rs(double t) {
  if (!(t >= 1.0)) throw DomainError("theta_rs: t must be >= 1");
  return detail::theta_rs_any(t);
}

double detail::rs_correction(int k, double p) {
  const double z = 1.0 - 2.0 * p;
  switch (k) {
    case 0:
      return c0_derivative(z, 0);
    case 1:
      return c0_derivative(z, 3) / (12.0 * pi * pi);
    case 2:
      return c0_derivative(z, 6) / (288.0 * std::pow(pi, 4)) + c0_derivative(z, 2) / (16.0 * pi * pi);
    default:
      throw DomainError("rs_correction: k must be 0, 1 or 2");
  }
}

double z_function(double t, EvalAccuracy acc) {
  if (!(t >= 0.0)) throw DomainError("z_function: t must be >= 0");
  if (t >= kRiemannSiegelSwitch) return riemann_siegel(t);
  const cplx rotated = std::polar(1.0, detail::theta_rs_any(t)) * zeta_complex(cplx{0.5, t}, acc);
  return rotated.real();
}

}  // namespace sbound
