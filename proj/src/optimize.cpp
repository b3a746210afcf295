#include "sbound/optimize.hpp"

#include <cmath>
#include <future>
#include <limits>

#include "sbound/errors.hpp"

namespace sbound {
namespace {

constexpr double kInvPhi = 0.6180339887498948482;  // (sqrt5 - 1) / 2
constexpr double kGridAgreement = 1e-6;

struct EtaSearch {
  double eta;
  double total;
  int evaluations;
};

EtaSearch search_eta(double t0, const CriticalLineBound& cert) {
  const double log_t0 = std::log(t0);
  int evaluations = 0;
  auto total = [&](double eta) {
    ++evaluations;
    const BoundParams params{eta, t0, cert};
    return theorem_b_coeff_a(params) + theorem_b_coeff_b(eta, cert.theta()) * log_t0;
  };

  // Coarse pre-scan guards against a non-unimodal objective.
  double grid_eta = kMinEta;
  double grid_total = std::numeric_limits<double>::infinity();
  const double step = (0.5 - kMinEta) / (kEtaGridPoints - 1);
  for (int i = 0; i < kEtaGridPoints; ++i) {
    const double eta = (i + 1 == kEtaGridPoints) ? 0.5 : kMinEta + i * step;
    const double v = total(eta);
    if (v < grid_total) {
      grid_total = v;
      grid_eta = eta;
    }
  }

  ScalarMinimum best = golden_section_minimize(total, kMinEta, 0.5);
  if (grid_total < best.fx - kGridAgreement) {
    const double lo = std::max(kMinEta, grid_eta - step);
    const double hi = std::min(0.5, grid_eta + step);
    best = golden_section_minimize(total, lo, hi);
    if (grid_total < best.fx) best = {grid_eta, grid_total, 0};
  }
  // Endpoints are not probed by golden-section.
  for (double edge : {kMinEta, 0.5}) {
    const double v = total(edge);
    if (v < best.fx) best = {edge, v, 0};
  }
  return {best.x, best.fx, evaluations};
}

OptimizationResult make_result(double t0, CertKind mode, const CriticalLineBound& cert, const EtaSearch& s,
                               int evaluations) {
  const BoundParams params{s.eta, t0, cert};
  const LinearBound bound = theorem_b_bound(params);
  return {t0, mode, s.eta, cert.delta(), bound, bound.a() + bound.b() * std::log(t0), evaluations};
}

}  // namespace

ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                      double x_tol) {
  if (!(lo < hi)) throw DomainError("golden_section_minimize: need lo < hi");
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int evaluations = 2;
  while (b - a > x_tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
    ++evaluations;
  }
  return fc < fd ? ScalarMinimum{c, fc, evaluations} : ScalarMinimum{d, fd, evaluations};
}

OptimizationResult minimize_bound_for_cert(double t0, const CriticalLineBound& cert) {
  if (!(t0 > 3.0)) throw DomainError("minimize_bound: t0 must exceed 3");
  cert.B();  // throws for coefficient-only certificates
  const EtaSearch s = search_eta(t0, cert);
  return make_result(t0, cert.kind(), cert, s, s.evaluations);
}

OptimizationResult minimize_bound(double t0, CertKind mode) {
  if (!(t0 > 3.0)) throw DomainError("minimize_bound: t0 must exceed 3");
  switch (mode) {
    case CertKind::Convexity:
      return minimize_bound_for_cert(t0, make_convexity());
    case CertKind::ChengGraham: {
      const double log_lo = std::log(kMinDelta);
      const double log_hi = std::log(kMaxChengGrahamDelta);
      std::optional<OptimizationResult> best;
      int evaluations = 0;
      for (int i = 0; i < kDeltaGridPoints; ++i) {
        const double delta = (i + 1 == kDeltaGridPoints)
                                 ? kMaxChengGrahamDelta
                                 : std::exp(log_lo + (log_hi - log_lo) * i / (kDeltaGridPoints - 1));
        const CriticalLineBound cert = make_cheng_graham(delta);
        const EtaSearch s = search_eta(t0, cert);
        evaluations += s.evaluations;
        if (!best || s.total < best->total_at_t0) best = make_result(t0, mode, cert, s, 0);
      }
      best->evaluations = evaluations;
      return *best;
    }
    case CertKind::Custom:
      break;
  }
  throw DomainError("minimize_bound: custom mode needs an explicit certificate");
}

bool subconvexity_wins(double t0) {
  const double conv_b = minimize_bound(t0, CertKind::Convexity).bound.b();
  const double sub_b = minimize_bound(t0, CertKind::ChengGraham).bound.b();
  return sub_b < conv_b - kCrossoverMargin;
}

double crossover_height(double lo, double hi) {
  if (!(lo > 3.0 && lo < hi)) throw DomainError("crossover_height: need 3 < lo < hi");
  if (subconvexity_wins(lo) || !subconvexity_wins(hi))
    throw NoSignChangeError("crossover_height: subconvexity does not overtake convexity inside the bracket");
  double log_lo = std::log(lo);
  double log_hi = std::log(hi);
  const double tol = std::log1p(1e-3);
  while (log_hi - log_lo > tol) {
    const double mid = 0.5 * (log_lo + log_hi);
    if (subconvexity_wins(std::exp(mid)))
      log_hi = mid;
    else
      log_lo = mid;
  }
  return std::exp(log_hi);
}

std::vector<double> default_table_heights() {
  std::vector<double> heights;
  for (const auto& row : reference::comparison_table()) heights.push_back(row.t0);
  return heights;
}

std::vector<TableRow> build_table(std::span<const double> t0_list) {
  for (double t0 : t0_list)
    if (!(t0 > 3.0)) throw DomainError("build_table: every t0 must exceed 3");

  std::vector<std::future<TableRow>> pending;
  pending.reserve(t0_list.size());
  for (double t0 : t0_list) {
    pending.push_back(std::async(std::launch::async, [t0] {
      const LinearBound rosser = rosser_bound(t0);
      const OptimizationResult conv = minimize_bound(t0, CertKind::Convexity);
      const OptimizationResult sub = minimize_bound(t0, CertKind::ChengGraham);
      return TableRow{t0,
                      rosser.b(),
                      rosser.value_at(t0),
                      conv.bound.b(),
                      conv.total_at_t0,
                      sub.bound.b(),
                      sub.total_at_t0,
                      conv.best_eta,
                      sub.best_eta,
                      sub.best_delta.value_or(0.0),
                      reference::find_row(t0)};
    }));
  }
  std::vector<TableRow> rows;
  rows.reserve(pending.size());
  for (auto& f : pending) rows.push_back(f.get());
  return rows;
}

}  // namespace sbound
