#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace ratelab {

struct SearchDim {
  double lo = 0.0;
  double hi = 1.0;
  bool log_scale = false;  // sample/step geometrically; requires lo > 0
};

struct SearchConfig {
  std::vector<SearchDim> dims;
  int grid_points = 33;   // coarse samples per dimension
  int refine_iters = 60;  // compass refinement sweeps
  double shrink = 0.5;    // step shrink factor when a sweep stalls
  double tol = 1e-5;      // stop once all relative steps fall below this
  bool parallel = false;  // evaluate grid chunks on multiple threads
  // Invoked for every evaluated point; returns extra candidate points to try
  // (e.g. projections onto a constraint boundary).  Coordinates outside the
  // box are clamped.
  std::function<std::vector<std::vector<double>>(const std::vector<double>&)>
      extra_probes;
};

struct SearchResult {
  bool found = false;  // false when no feasible point was ever seen
  double value = 0.0;
  std::vector<double> point;
  std::size_t evaluations = 0;
};

// Deterministic box-constrained maximization: full grid scan followed by
// compass pattern refinement.  Infeasible points are rejected.  Ties are
// broken toward the lexicographically smaller point, and the reduction order
// is fixed, so the result is bit-identical with parallel on or off.
SearchResult maximize(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::function<bool(const std::vector<double>&)>& feasible,
    const SearchConfig& cfg);

}  // namespace ratelab
