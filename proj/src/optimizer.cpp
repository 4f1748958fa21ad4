#include "ratelab/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace ratelab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct Candidate {
  double value = kNegInf;
  std::vector<double> point;

  bool better_than(const Candidate& o) const {
    if (value != o.value) return value > o.value;
    return point < o.point;  // deterministic tie-break
  }
};

struct Engine {
  const std::function<double(const std::vector<double>&)>& objective;
  const std::function<bool(const std::vector<double>&)>& feasible;
  const SearchConfig& cfg;
  std::size_t evaluations = 0;

  double eval(const std::vector<double>& x) {
    ++evaluations;
    if (!feasible(x)) return kNegInf;
    double v = objective(x);
    return std::isnan(v) ? kNegInf : v;
  }

  std::vector<double> clamp(std::vector<double> x) const {
    for (std::size_t d = 0; d < cfg.dims.size(); ++d)
      x[d] = std::min(cfg.dims[d].hi, std::max(cfg.dims[d].lo, x[d]));
    return x;
  }

  // A base point plus whatever extra probes it spawns, evaluated in order.
  void fold_with_probes(const std::vector<double>& base, Candidate* best) {
    Candidate c{eval(base), base};
    if (c.value != kNegInf && c.better_than(*best)) *best = c;
    if (!cfg.extra_probes) return;
    for (auto& p : cfg.extra_probes(base)) {
      if (p.size() != cfg.dims.size()) continue;
      std::vector<double> q = clamp(std::move(p));
      Candidate e{eval(q), std::move(q)};
      if (e.value != kNegInf && e.better_than(*best)) *best = e;
    }
  }
};

double grid_coord(const SearchDim& dim, int i, int g) {
  if (g <= 1 || dim.hi <= dim.lo) return dim.lo;
  double t = static_cast<double>(i) / static_cast<double>(g - 1);
  if (dim.log_scale)
    return std::exp(std::log(dim.lo) + t * (std::log(dim.hi) - std::log(dim.lo)));
  return dim.lo + t * (dim.hi - dim.lo);
}

}  // namespace

SearchResult maximize(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::function<bool(const std::vector<double>&)>& feasible,
    const SearchConfig& cfg) {
  if (cfg.dims.empty()) throw std::invalid_argument("maximize: no dimensions");
  if (cfg.grid_points < 2) throw std::invalid_argument("maximize: grid_points < 2");
  if (!(cfg.shrink > 0.0 && cfg.shrink < 1.0))
    throw std::invalid_argument("maximize: shrink must lie in (0,1)");
  for (const auto& d : cfg.dims) {
    if (!(d.lo <= d.hi)) throw std::invalid_argument("maximize: lo > hi");
    if (d.log_scale && !(d.lo > 0.0))
      throw std::invalid_argument("maximize: log scale needs lo > 0");
  }

  Engine eng{objective, feasible, cfg};
  const std::size_t nd = cfg.dims.size();
  const int g = cfg.grid_points;

  // Precompute per-dimension grids.
  std::vector<std::vector<double>> axes(nd);
  for (std::size_t d = 0; d < nd; ++d) {
    int gd = cfg.dims[d].hi > cfg.dims[d].lo ? g : 1;
    for (int i = 0; i < gd; ++i) axes[d].push_back(grid_coord(cfg.dims[d], i, gd));
  }
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.size();

  auto point_at = [&](std::size_t idx) {
    std::vector<double> x(nd);
    for (std::size_t d = nd; d-- > 0;) {
      x[d] = axes[d][idx % axes[d].size()];
      idx /= axes[d].size();
    }
    return x;
  };

  Candidate best;
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t chunk =
      cfg.parallel ? std::max<std::size_t>(hw * 1024, 4096) : total;

  for (std::size_t begin = 0; begin < total; begin += chunk) {
    const std::size_t end = std::min(total, begin + chunk);
    if (!cfg.parallel || end - begin < 2 * hw) {
      for (std::size_t i = begin; i < end; ++i)
        eng.fold_with_probes(point_at(i), &best);
      continue;
    }
    // Parallel: evaluate per-index sub-results, then fold in index order so
    // the outcome matches the sequential pass bit for bit.
    std::vector<Candidate> sub(end - begin);
    std::vector<std::size_t> sub_evals(hw, 0);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < hw; ++t)
      pool.emplace_back([&, t]() {
        Engine local{objective, feasible, cfg};
        for (std::size_t i = begin + t; i < end; i += hw) {
          Candidate c;
          local.fold_with_probes(point_at(i), &c);
          sub[i - begin] = std::move(c);
        }
        sub_evals[t] = local.evaluations;
      });
    for (auto& th : pool) th.join();
    for (std::size_t e : sub_evals) eng.evaluations += e;
    for (std::size_t i = 0; i < sub.size(); ++i)
      if (sub[i].value != kNegInf && sub[i].better_than(best)) best = sub[i];
  }

  if (best.value == kNegInf) return SearchResult{};  // nothing feasible

  // Compass refinement around the incumbent.  Steps live in the dimension's
  // own scale: additive for linear axes, additive in log-space otherwise.
  std::vector<double> step(nd, 0.0), span(nd, 0.0);
  for (std::size_t d = 0; d < nd; ++d) {
    const auto& dim = cfg.dims[d];
    if (dim.hi <= dim.lo) continue;
    span[d] = dim.log_scale ? std::log(dim.hi) - std::log(dim.lo)
                            : dim.hi - dim.lo;
    step[d] = span[d] / static_cast<double>(std::max(1, g - 1));
  }

  for (int it = 0; it < cfg.refine_iters; ++it) {
    Candidate trial = best;
    for (std::size_t d = 0; d < nd; ++d) {
      if (step[d] <= 0.0) continue;
      for (int sgn : {-1, +1}) {
        std::vector<double> x = best.point;
        x[d] = cfg.dims[d].log_scale
                   ? std::exp(std::log(x[d]) + sgn * step[d])
                   : x[d] + sgn * step[d];
        eng.fold_with_probes(eng.clamp(std::move(x)), &trial);
      }
    }
    if (trial.better_than(best)) {
      best = trial;
    } else {
      double rel = 0.0;
      for (std::size_t d = 0; d < nd; ++d) {
        step[d] *= cfg.shrink;
        if (span[d] > 0.0) rel = std::max(rel, step[d] / span[d]);
      }
      if (rel < cfg.tol) break;
    }
  }

  SearchResult res;
  res.found = true;
  res.value = best.value;
  res.point = best.point;
  res.evaluations = eng.evaluations;
  return res;
}

}  // namespace ratelab
