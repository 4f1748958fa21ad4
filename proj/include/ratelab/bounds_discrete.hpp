#pragma once

#include <string>
#include <vector>

#include "ratelab/network.hpp"

namespace ratelab {

// One side condition attached to a bound evaluation: a resource that must
// cover a requirement (e.g. a feedback link capacity covering the rate a
// compression description needs, or a decode-budget inequality).
struct ConstraintStatus {
  std::string label;
  double required = 0.0;
  double available = 0.0;
  bool satisfied = true;
  // available - required; +inf when the resource is unlimited.
  double slack = 0.0;
};

inline constexpr double kConstraintTol = 1e-12;

// Result of evaluating one achievable-rate expression for a fixed network
// and input distribution.
struct BoundResult {
  double rate = 0.0;      // max(raw_rate, 0)
  double raw_rate = 0.0;  // the exact minimum over constraints, may be < 0
  int binding_receiver = 0;
  std::string binding_cut;    // label of the minimizing node subset, "" if n/a
  std::string binding_label;  // which expression bound: "a", "b", "c1".."c5", ""
  bool feasible = true;       // all side conditions satisfied
  std::vector<ConstraintStatus> feasibility;
  std::string note;
};

// Cut-set style evaluators over an exact joint distribution.  Each one
// validates the factorization against its pattern (throws ValidationError on
// a mismatch), assembles the joint, and minimizes its rate expression over
// node subsets and receivers.
BoundResult eval_nnc(const DiscreteNetwork& net, const FactoredDistribution& fd);
BoundResult eval_thm1(const DiscreteNetwork& net, const FactoredDistribution& fd);
BoundResult eval_thm2(const DiscreteNetwork& net, const FactoredDistribution& fd);
BoundResult eval_thm3(const DiscreteNetwork& net, const FactoredDistribution& fd);
// decode_set: nodes in [2:n] whose layered descriptions the source tracks.
BoundResult eval_thm4(const DiscreteNetwork& net, const FactoredDistribution& fd,
                      const std::vector<int>& decode_set);
// Sequential decode-forward.  ordering: a permutation of [2:n]; decoding at
// node k may rely on descriptions of nodes earlier in the ordering.
BoundResult eval_ddf(const DiscreteNetwork& net, const FactoredDistribution& fd,
                     const std::vector<int>& ordering);
// Convenience: natural ordering 2..n.
BoundResult eval_ddf(const DiscreteNetwork& net, const FactoredDistribution& fd);
// Tries every ordering (n <= 6) and returns the best; the winning ordering is
// stored in *best_ordering when non-null and echoed in the result note.
BoundResult eval_ddf_best(const DiscreteNetwork& net, const FactoredDistribution& fd,
                          std::vector<int>* best_ordering = nullptr);

// Specialized closed-form evaluators used as independent cross-checks of the
// general cut-set machinery on small topologies.

// Three nodes: source 1, compressing relay 2 with a feedback link, receiver 3.
BoundResult eval_relay_cf_fb(const DiscreteNetwork& net, const FactoredDistribution& fd);
// Same topology, relay both decodes a layer and compresses.
BoundResult eval_relay_cfdf_fb(const DiscreteNetwork& net, const FactoredDistribution& fd);
// Four nodes: source 1, relays 2 and 3, receiver 4; relays have feedback.
BoundResult eval_diamond_fb(const DiscreteNetwork& net, const FactoredDistribution& fd);
// Same topology without feedback (no compression descriptions).
BoundResult eval_diamond_nofb(const DiscreteNetwork& net, const FactoredDistribution& fd);

}  // namespace ratelab
