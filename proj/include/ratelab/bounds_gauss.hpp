#pragma once

#include <cstddef>

#include "ratelab/gauss.hpp"

namespace ratelab {

// Scalar Gaussian relay: source node 1, relay node 2, receiver node 3, with
// the source also observing Y1 = g21*X2 + Z1.  All rates in bits.
struct GaussianRelayParams {
  double g12 = 1.0, g13 = 1.0, g21 = 1.0, g23 = 1.0;
  double p1 = 1.0, p2 = 1.0;

  double s12() const { return g12 * g12 * p1; }
  double s13() const { return g13 * g13 * p1; }
  double s23() const { return g23 * g23 * p2; }
  double s21() const { return g21 * g21 * p2; }

  // Geometry used by the reference table: relay on a line at distance d from
  // the source, unit source-receiver distance, P1 = 5, P2 = 1.
  static GaussianRelayParams line_geometry(double d);
  // Geometry used by the power sweep: unit gains except g23 = 0.7, P1=P2=P.
  static GaussianRelayParams power_sweep_geometry(double p);
};

// Operating point of the layered compress/decode scheme.
struct ProPoint {
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
  double nprime = 1.0;  // compression noise variance
};

// min of the two branch expressions at one operating point.
double pro_objective(const GaussianRelayParams& p, const ProPoint& pt);
// Smallest admissible compression noise when the description is recovered
// from the source's own observation (+inf when gamma*s21 == 0).
double pro2_nprime_threshold(const GaussianRelayParams& p, double alpha,
                             double gamma);
// Smallest admissible compression noise under the classical hybrid scheme
// where the receiver recovers the description (+inf when the denominator
// vanishes).
double ce_nprime_threshold(const GaussianRelayParams& p, double alpha,
                           double beta, double gamma);

struct ProResult {
  bool found = false;
  double rate = 0.0;
  ProPoint point;
  // True when no finite compression noise was admissible and the search fell
  // back to the infinite-noise limit of the objective.
  bool limit_regime = false;
  // Feedback capacity the chosen point consumes (feedback scheme only).
  double required_feedback_rate = 0.0;
  std::size_t evaluations = 0;
};

// Search-effort knobs for the layered-scheme maximizations.
struct LayeredSearch {
  bool parallel = false;
  int grid_points = 33;   // coarse samples per search dimension
  int refine_iters = 60;  // pattern refinement sweeps
};

// Feedback scheme: the description rides on the feedback link, so the noise
// variance is unconstrained.
ProResult eval_pro1(const GaussianRelayParams& p, const LayeredSearch& search);
ProResult eval_pro1(const GaussianRelayParams& p, bool parallel = false);
// No-feedback scheme: the source decodes the description from Y1.
ProResult eval_pro2(const GaussianRelayParams& p, const LayeredSearch& search);
ProResult eval_pro2(const GaussianRelayParams& p, bool parallel = false);
// Classical hybrid lower bound: the receiver recovers the description.
ProResult eval_ce(const GaussianRelayParams& p, const LayeredSearch& search);
ProResult eval_ce(const GaussianRelayParams& p, bool parallel = false);

// Noisy network coding with a Gaussian quantizer, optimized in closed form.
double eval_nnc_gauss(const GaussianRelayParams& p);

struct DdfGaussResult {
  double rate = 0.0;
  double rho = 0.0;  // correlation between the two inputs at the optimum
};
// Decode-forward with coherent combining, optimized over the correlation.
DdfGaussResult eval_ddf_gauss(const GaussianRelayParams& p);

struct AfGaussResult {
  double rate = 0.0;
  double alpha = 0.0;
};
// Two-symbol amplify-forward rate (time-shared); uses p1 as the common power.
AfGaussResult eval_af_gauss(const GaussianRelayParams& p);

struct ConditionReport {
  bool holds = false;
  double margin = 0.0;  // min over the scan of (rhs - lhs); NaN-safe
};
// Checks the strict sufficient condition under which the no-feedback scheme
// dominates the classical hybrid bound for every operating point.
ConditionReport check_condition_enh(const GaussianRelayParams& p);

// Covariance of the jointly Gaussian variables
// (V2, U2, X1, X2, Y1, Y2, Y3, Yh2) induced by the layered scheme's linear
// test channels at the given operating point.  Used to cross-check every
// closed form above against generic log-det mutual information.
GaussCovariance layered_scheme_covariance(const GaussianRelayParams& p,
                                          const ProPoint& pt);

}  // namespace ratelab
