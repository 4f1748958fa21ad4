#pragma once
// Dense joint probability mass functions over named finite variables.
//
// A JointPmf stores p(v1, ..., vk) as a single row-major table (the last
// variable varies fastest).  Alphabet size 1 is legal and models an absent
// auxiliary variable: a size-1 variable contributes nothing to any entropy,
// which lets one evaluator code path cover every specialization of a bound.

#include <cstddef>
#include <string>
#include <vector>

namespace ratelab {

struct Var {
  std::string name;
  int size = 1;  // alphabet cardinality, >= 1
};

// A set of variable names.  Kept as a vector so iteration stays deterministic;
// helpers below treat it as a set (no duplicates).
using VarSet = std::vector<std::string>;

VarSet vs_union(const VarSet& a, const VarSet& b);
VarSet vs_minus(const VarSet& a, const VarSet& b);
bool vs_contains(const VarSet& s, const std::string& name);

inline constexpr std::size_t kMaxCells = std::size_t{1} << 24;
inline constexpr double kSumTol = 1e-9;    // normalization slack for tables
inline constexpr double kNegMiTol = 1e-9;  // round-off window clamped to 0

class JointPmf {
 public:
  JointPmf();  // zero variables, one cell holding probability 1
  JointPmf(std::vector<Var> vars, std::vector<double> table);

  const std::vector<Var>& vars() const { return vars_; }
  const std::vector<double>& table() const { return table_; }
  std::size_t cells() const { return table_.size(); }

  int var_index(const std::string& name) const;  // -1 when absent
  bool has(const std::string& name) const { return var_index(name) >= 0; }

  // Marginal over `keep`; result variables stay in this pmf's order, so two
  // calls with permuted `keep` produce bit-identical tables.
  JointPmf marginal(const VarSet& keep) const;

  // H(a) in bits, 0 log 0 := 0.  H({}) = 0.
  double entropy(const VarSet& a) const;

  // I(a;b|c) in bits via the pointwise plug-in sum
  //   sum p(abc) log2[ p(abc) p(c) / (p(ac) p(bc)) ].
  // a and b must be nonempty and a, b, c pairwise disjoint.  Round-off can
  // push the sum slightly negative: values in [-kNegMiTol, 0) clamp to 0,
  // anything below that window is an error.
  double cond_mutual_info(const VarSet& a, const VarSet& b,
                          const VarSet& c = {}) const;

 private:
  std::vector<Var> vars_;
  std::vector<double> table_;
  std::vector<std::size_t> stride_;

  // Maps names to indices, rejecting unknowns and duplicates.
  std::vector<int> indices_of(const VarSet& names) const;
};

}  // namespace ratelab
