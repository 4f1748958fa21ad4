#pragma once
// Network description types: node roles, cut enumeration, the discrete
// memoryless channel table, and factored input/auxiliary distributions.
//
// Node 1 is always the transmitter.  Every other node is either a relay or a
// receiver.  Variable names follow a fixed convention so files, factors and
// evaluators agree:
//   Xk  channel input of node k          Yk   channel output at node k
//   Uk  auxiliary of node k              Vk   second-layer auxiliary of node k
//   Yhk compression variable of node k   U0/V0 shared auxiliaries
// Absent variables are modeled with alphabet size 1, never by omission, so a
// single evaluator handles every degenerate specialization.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratelab/pmf.hpp"

namespace ratelab {

// Thrown when an input violates a structural contract (factorization pattern,
// normalization, role consistency).  The CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

enum class VarTag { X, Y, Yhat, U, V, U0, V0 };

struct ParsedName {
  VarTag tag;
  int node;  // 0 for the shared U0/V0
};

// Parses "X3", "Yh2", "U0", ...; throws ValidationError on anything else.
ParsedName parse_var_name(const std::string& name);

std::string xvar(int k);
std::string yvar(int k);
std::string yhvar(int k);
std::string uvar(int k);
std::string vvar(int k);

struct NodeRoles {
  int n = 0;                            // node count, nodes are 1..n
  std::vector<int> relays;              // sorted subset of [2:n]
  std::map<int, double> feedback_rates; // node -> bits/use; +inf = perfect

  std::vector<int> receivers() const;   // [2:n] \ relays, never empty
  bool is_relay(int k) const;
  double feedback_rate(int k) const;    // 0 when absent from the map
  void validate() const;
};

// A cut is a subset T of [2:n]; its complement must contain a receiver.
struct CutSet {
  std::vector<int> members;  // sorted
  std::string label() const; // "{2,3}", "{}"
};

// All admissible cuts including the empty one, excluding [2:n] itself and any
// T whose complement misses every receiver.  Deterministic order: increasing
// bitmask with node k on bit k-2, i.e. {}, {2}, {3}, {2,3}, {4}, ...
std::vector<CutSet> enumerate_cuts(const NodeRoles& roles);

struct DiscreteNetwork {
  NodeRoles roles;
  std::vector<int> in_size;   // |X_k|, index k-1
  std::vector<int> out_size;  // |Y_k|, index k-1
  // p(y1..yn | x1..xn), row-major over (x1..xn, y1..yn), yn varies fastest.
  std::vector<double> channel;

  std::size_t x_cells() const;
  std::size_t y_cells() const;
  void validate() const;  // each conditional slice sums to 1 within kSumTol
};

// One conditional factor p(target | given).  Table is row-major over
// (given..., target) with the target varying fastest.
struct Factor {
  std::string target;
  int size = 1;
  std::vector<std::string> given;
  std::vector<double> table;
};

struct FactoredDistribution {
  std::vector<Factor> factors;

  const Factor* find(const std::string& target) const;
  int var_size(const std::string& name, const DiscreteNetwork& net) const;
};

// Multiplies the factors and the channel law into the full joint pmf over
// every declared variable.  Factor order is the definition order; a factor
// may condition only on earlier factor targets, except Yh factors, which may
// also condition on channel outputs.  Every X1..Xn must be defined.
JointPmf build_joint(const DiscreteNetwork& net, const FactoredDistribution& fd);

enum class Pattern { thm1, thm2, thm3, thm4, nnc, ddf };

Pattern pattern_from_string(const std::string& s);  // also maps bound aliases
std::string to_string(Pattern p);

struct PatternReport {
  bool ok = true;
  std::string offending;  // first offending factor target
  std::string reason;
};

// Checks that fd has the factorization shape the pattern demands.  The shape
// is enforced, never inferred: a factor's effective conditioning set (size-1
// variables dropped) must be inside the pattern's allowed set, and variables
// foreign to the pattern must be degenerate.
PatternReport validate_factorization(const DiscreteNetwork& net,
                                     const FactoredDistribution& fd,
                                     Pattern pattern);

}  // namespace ratelab
