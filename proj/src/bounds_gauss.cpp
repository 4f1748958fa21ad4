#include "ratelab/bounds_gauss.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ratelab/optimizer.hpp"

namespace ratelab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNoiseLo = 1e-4;
constexpr double kNoiseHi = 1e4;

double branch1(const GaussianRelayParams& p, const ProPoint& t) {
  return gauss_c(t.alpha * p.s13() + t.alpha * p.s12() / (1.0 + t.nprime)) +
         gauss_c(p.s12() * t.beta * (1.0 - t.alpha) / (t.alpha * p.s12() + 1.0));
}

double branch2(const GaussianRelayParams& p, const ProPoint& t) {
  double coh = 2.0 * std::sqrt((1.0 - t.alpha) * (1.0 - t.beta) *
                               (1.0 - t.gamma) * p.s13() * p.s23());
  return gauss_c(coh + p.s13() + p.s23()) - gauss_c(1.0 / t.nprime);
}

// Infinite compression-noise limit of the two branches.
double limit_objective(const GaussianRelayParams& p, double alpha, double beta,
                       double gamma) {
  double b1 = gauss_c(alpha * p.s13()) +
              gauss_c(p.s12() * beta * (1.0 - alpha) / (alpha * p.s12() + 1.0));
  double coh = 2.0 * std::sqrt((1.0 - alpha) * (1.0 - beta) * (1.0 - gamma) *
                               p.s13() * p.s23());
  double b2 = gauss_c(coh + p.s13() + p.s23());
  return std::min(b1, b2);
}

// The two branches are monotone in the compression noise (the first falls,
// the second rises), so their crossing maximizes the min for fixed mixing
// parameters.  Equating 4^branch1 = 4^branch2 is linear in the noise:
//   M(1+A)(t+1) + MB = (1+K)t
// with A = alpha*s13, B = alpha*s12, K the second branch's full SNR, and
// M = 4^(decode-layer rate).  No finite crossing means the first branch never
// rises above the second, so the best noise saturates at the search ceiling.
double crossing_noise(const GaussianRelayParams& p, const ProPoint& t) {
  const double a_snr = t.alpha * p.s13();
  const double b_snr = t.alpha * p.s12();
  const double coh = 2.0 * std::sqrt((1.0 - t.alpha) * (1.0 - t.beta) *
                                     (1.0 - t.gamma) * p.s13() * p.s23());
  const double k_snr = coh + p.s13() + p.s23();
  const double m =
      1.0 + p.s12() * t.beta * (1.0 - t.alpha) / (t.alpha * p.s12() + 1.0);
  const double denom = (1.0 + k_snr) - m * (1.0 + a_snr);
  if (denom <= 0.0) return kNoiseHi;
  const double cross = m * (1.0 + a_snr + b_snr) / denom;
  return std::min(kNoiseHi, std::max(kNoiseLo, cross));
}

using ThresholdFn = double (*)(const GaussianRelayParams&, const ProPoint&);

double no_threshold(const GaussianRelayParams&, const ProPoint&) { return kNoiseLo; }

double pro2_threshold_pt(const GaussianRelayParams& p, const ProPoint& t) {
  return pro2_nprime_threshold(p, t.alpha, t.gamma);
}

double ce_threshold_pt(const GaussianRelayParams& p, const ProPoint& t) {
  return ce_nprime_threshold(p, t.alpha, t.beta, t.gamma);
}

ProResult run_layered(const GaussianRelayParams& p, ThresholdFn threshold,
                      bool constrained, const LayeredSearch& search) {
  SearchConfig cfg;
  cfg.dims = {{0.0, 1.0, false},
              {0.0, 1.0, false},
              {0.0, 1.0, false},
              {kNoiseLo, kNoiseHi, true}};
  cfg.parallel = search.parallel;
  cfg.grid_points = search.grid_points;
  cfg.refine_iters = search.refine_iters;

  auto as_point = [](const std::vector<double>& x) {
    return ProPoint{x[0], x[1], x[2], x[3]};
  };
  auto objective = [&](const std::vector<double>& x) {
    return pro_objective(p, as_point(x));
  };
  auto feasible = [&](const std::vector<double>& x) {
    if (!constrained) return true;
    return x[3] >= threshold(p, as_point(x));
  };
  cfg.extra_probes = [&](const std::vector<double>& x) {
    ProPoint t = as_point(x);
    double cross = crossing_noise(p, t);
    std::vector<std::vector<double>> probes;
    probes.push_back({x[0], x[1], x[2], cross});
    if (constrained) {
      double thr = threshold(p, t);
      if (std::isfinite(thr)) {
        probes.push_back({x[0], x[1], x[2], thr});
        probes.push_back({x[0], x[1], x[2], std::max(thr, cross)});
      }
    }
    return probes;
  };

  SearchResult sr = maximize(objective, feasible, cfg);
  ProResult res;
  res.evaluations = sr.evaluations;
  if (sr.found) {
    res.found = true;
    res.rate = sr.value;
    res.point = as_point(sr.point);
    res.required_feedback_rate =
        gauss_c((1.0 + res.point.alpha * p.s12()) / res.point.nprime);
    return res;
  }

  // No admissible finite compression noise anywhere: maximize the
  // infinite-noise limit of the objective instead and flag it.
  SearchConfig lim;
  lim.dims = {{0.0, 1.0, false}, {0.0, 1.0, false}, {0.0, 1.0, false}};
  lim.parallel = search.parallel;
  lim.grid_points = search.grid_points;
  lim.refine_iters = search.refine_iters;
  SearchResult ls = maximize(
      [&](const std::vector<double>& x) {
        return limit_objective(p, x[0], x[1], x[2]);
      },
      [](const std::vector<double>&) { return true; }, lim);
  res.evaluations += ls.evaluations;
  res.found = ls.found;
  res.limit_regime = true;
  res.rate = ls.value;
  res.point = ProPoint{ls.point[0], ls.point[1], ls.point[2], kInf};
  res.required_feedback_rate = 0.0;
  return res;
}

}  // namespace

GaussianRelayParams GaussianRelayParams::line_geometry(double d) {
  if (d == 0.0 || d == 1.0)
    throw std::invalid_argument("line geometry needs d != 0 and d != 1");
  GaussianRelayParams p;
  p.g12 = 1.0 / std::abs(d);
  p.g13 = 1.0;
  p.g23 = 1.0 / std::abs(1.0 - d);
  p.g21 = 1.0 / std::abs(1.0 - d);
  p.p1 = 5.0;
  p.p2 = 1.0;
  return p;
}

GaussianRelayParams GaussianRelayParams::power_sweep_geometry(double pw) {
  if (!(pw > 0.0)) throw std::invalid_argument("power must be positive");
  GaussianRelayParams p;
  p.g12 = p.g13 = p.g21 = 1.0;
  p.g23 = 0.7;
  p.p1 = p.p2 = pw;
  return p;
}

double pro_objective(const GaussianRelayParams& p, const ProPoint& pt) {
  return std::min(branch1(p, pt), branch2(p, pt));
}

double pro2_nprime_threshold(const GaussianRelayParams& p, double alpha,
                             double gamma) {
  double denom = gamma * p.s21();
  if (denom <= 0.0) return kInf;
  return (1.0 + alpha * p.s12()) / denom;
}

double ce_nprime_threshold(const GaussianRelayParams& p, double alpha,
                           double beta, double gamma) {
  // Exact evaluation of the combined-scheme compression constraint
  //   I(Yh2; Y2 | U2, X2, Y3) <= I(X2; Y3 | V2)
  // under the layered signal structure: the left side is
  // C((alpha*s12 + alpha*s13 + 1) / (N' * (alpha*s13 + 1))) and the right side
  // is C(gamma*s23 / ((beta - alpha*beta + alpha)*s13 + 1)).  At the pure
  // compress-forward corner (alpha = gamma = 1) the threshold reduces to the
  // classical optimum (s12 + s13 + 1) / s23, so that scheme stays reachable.
  double denom = gamma * p.s23() * (alpha * p.s13() + 1.0);
  if (denom <= 0.0) return kInf;
  return (alpha * (p.s12() + p.s13()) + 1.0) *
         ((beta - alpha * beta + alpha) * p.s13() + 1.0) / denom;
}

ProResult eval_pro1(const GaussianRelayParams& p, const LayeredSearch& search) {
  return run_layered(p, no_threshold, false, search);
}

ProResult eval_pro2(const GaussianRelayParams& p, const LayeredSearch& search) {
  return run_layered(p, pro2_threshold_pt, true, search);
}

ProResult eval_ce(const GaussianRelayParams& p, const LayeredSearch& search) {
  return run_layered(p, ce_threshold_pt, true, search);
}

ProResult eval_pro1(const GaussianRelayParams& p, bool parallel) {
  return eval_pro1(p, LayeredSearch{parallel});
}

ProResult eval_pro2(const GaussianRelayParams& p, bool parallel) {
  return eval_pro2(p, LayeredSearch{parallel});
}

ProResult eval_ce(const GaussianRelayParams& p, bool parallel) {
  return eval_ce(p, LayeredSearch{parallel});
}

double eval_nnc_gauss(const GaussianRelayParams& p) {
  return gauss_c(p.s13() + p.s12() * p.s23() /
                               (p.s13() + p.s12() + p.s23() + 1.0));
}

DdfGaussResult eval_ddf_gauss(const GaussianRelayParams& p) {
  const double s12 = p.s12(), s13 = p.s13(), s23 = p.s23();
  auto b1 = [&](double rho) { return gauss_c(s12 * (1.0 - rho * rho)); };
  auto b2 = [&](double rho) {
    return gauss_c(s13 + s23 + 2.0 * rho * std::sqrt(s13 * s23));
  };
  DdfGaussResult r;
  if (b1(0.0) <= b2(0.0)) {
    r.rho = 0.0;
    r.rate = b1(0.0);
    return r;
  }
  double lo = 0.0, hi = 1.0;  // b1 falls, b2 rises: bracket the crossing
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (b1(mid) > b2(mid) ? lo : hi) = mid;
  }
  r.rho = 0.5 * (lo + hi);
  r.rate = std::min(b1(r.rho), b2(r.rho));
  return r;
}

AfGaussResult eval_af_gauss(const GaussianRelayParams& p) {
  const double power = p.p1, s13 = p.s13();
  auto rate_at = [&](double a) {
    double amp = std::sqrt(2.0 * p.p2 / (2.0 * a * s13 * s13 + 1.0));
    double mix = std::sqrt((1.0 - a) / a) + p.g12 * p.g23 * amp;
    double snr =
        2.0 * a * power * (1.0 + mix * mix / (1.0 + p.g23 * p.g23 * amp * amp));
    return 0.5 * gauss_c(snr);
  };
  SearchConfig cfg;
  cfg.dims = {{1e-9, 1.0, false}};
  SearchResult sr = maximize([&](const std::vector<double>& x) { return rate_at(x[0]); },
                             [](const std::vector<double>&) { return true; }, cfg);
  return AfGaussResult{sr.value, sr.point[0]};
}

ConditionReport check_condition_enh(const GaussianRelayParams& p) {
  const double s12 = p.s12(), s13 = p.s13(), s23 = p.s23(), s21 = p.s21();
  const int g = 33;
  double margin = kInf;
  for (int i = 0; i < g; ++i) {
    double alpha = static_cast<double>(i) / (g - 1);
    double lhs = (1.0 + alpha * s12) / (s21 * (alpha * (s13 + s23) + 1.0));
    for (int j = 0; j < g; ++j) {
      double beta = static_cast<double>(j) / (g - 1);
      double rhs = ((beta - alpha * beta + alpha) * s13 + 1.0) /
                   (s23 * (alpha * s13 + 1.0));
      double gap = rhs - lhs;
      if (std::isnan(gap)) return ConditionReport{false, gap};
      margin = std::min(margin, gap);
    }
  }
  return ConditionReport{margin > 0.0, margin};
}

GaussCovariance layered_scheme_covariance(const GaussianRelayParams& p,
                                          const ProPoint& pt) {
  if (!(pt.nprime > 0.0) || !std::isfinite(pt.nprime))
    throw std::invalid_argument("covariance needs a finite positive noise");
  const double a = std::sqrt((1.0 - pt.alpha) * (1.0 - pt.beta));
  const double c = std::sqrt((1.0 - pt.gamma) * p.p2 / p.p1);
  // Independent sources: V2, W0, W1, W2, Z1, Z2, Z3, Z'.
  const double src_var[8] = {p.p1,
                             (1.0 - pt.alpha) * pt.beta * p.p1,
                             pt.alpha * p.p1,
                             pt.gamma * p.p2,
                             1.0,
                             1.0,
                             1.0,
                             pt.nprime};
  // Rows: V2, U2, X1, X2, Y1, Y2, Y3, Yh2 as linear maps of the sources.
  const double mix[8][8] = {
      {1, 0, 0, 0, 0, 0, 0, 0},
      {a, 1, 0, 0, 0, 0, 0, 0},
      {a, 1, 1, 0, 0, 0, 0, 0},
      {c, 0, 0, 1, 0, 0, 0, 0},
      {c * p.g21, 0, 0, p.g21, 1, 0, 0, 0},
      {a * p.g12, p.g12, p.g12, 0, 0, 1, 0, 0},
      {a * p.g13 + c * p.g23, p.g13, p.g13, p.g23, 0, 0, 1, 0},
      {a * p.g12, p.g12, p.g12, 0, 0, 1, 0, 1}};
  Eigen::MatrixXd sigma(8, 8);
  for (int r = 0; r < 8; ++r)
    for (int s = 0; s < 8; ++s) {
      double acc = 0.0;
      for (int k = 0; k < 8; ++k) acc += mix[r][k] * mix[s][k] * src_var[k];
      sigma(r, s) = acc;
    }
  return GaussCovariance({"V2", "U2", "X1", "X2", "Y1", "Y2", "Y3", "Yh2"},
                         sigma);
}

}  // namespace ratelab
