#include "ratelab/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ratelab {

VarSet vs_union(const VarSet& a, const VarSet& b) {
  VarSet out = a;
  for (const auto& n : b)
    if (!vs_contains(out, n)) out.push_back(n);
  return out;
}

VarSet vs_minus(const VarSet& a, const VarSet& b) {
  VarSet out;
  for (const auto& n : a)
    if (!vs_contains(b, n)) out.push_back(n);
  return out;
}

bool vs_contains(const VarSet& s, const std::string& name) {
  return std::find(s.begin(), s.end(), name) != s.end();
}

JointPmf::JointPmf() : table_(1, 1.0) {}

JointPmf::JointPmf(std::vector<Var> vars, std::vector<double> table)
    : vars_(std::move(vars)), table_(std::move(table)) {
  std::size_t n = 1;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw std::invalid_argument("pmf: empty variable name");
    if (v.size < 1) throw std::invalid_argument("pmf: alphabet size < 1: " + v.name);
    if (n > kMaxCells / static_cast<std::size_t>(v.size))
      throw std::invalid_argument("pmf: state space exceeds 2^24 cells");
    n *= static_cast<std::size_t>(v.size);
  }
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i].name == vars_[j].name)
        throw std::invalid_argument("pmf: duplicate variable " + vars_[i].name);
  if (table_.size() != n)
    throw std::invalid_argument("pmf: table has " + std::to_string(table_.size()) +
                                " cells, expected " + std::to_string(n));
  double sum = 0.0;
  for (double p : table_) {
    if (!(p >= 0.0))  // also rejects NaN
      throw std::invalid_argument("pmf: negative or non-finite entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumTol)
    throw std::invalid_argument("pmf: entries sum to " + std::to_string(sum));

  stride_.assign(vars_.size(), 1);
  for (int i = static_cast<int>(vars_.size()) - 2; i >= 0; --i)
    stride_[i] = stride_[i + 1] * static_cast<std::size_t>(vars_[i + 1].size);
}

int JointPmf::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return static_cast<int>(i);
  return -1;
}

std::vector<int> JointPmf::indices_of(const VarSet& names) const {
  std::vector<int> idx;
  idx.reserve(names.size());
  for (const auto& n : names) {
    int i = var_index(n);
    if (i < 0) throw std::invalid_argument("pmf: unknown variable " + n);
    if (std::find(idx.begin(), idx.end(), i) != idx.end())
      throw std::invalid_argument("pmf: duplicate variable " + n);
    idx.push_back(i);
  }
  return idx;
}

JointPmf JointPmf::marginal(const VarSet& keep) const {
  std::vector<int> idx = indices_of(keep);
  std::vector<char> keep_mask(vars_.size(), 0);
  for (int i : idx) keep_mask[static_cast<std::size_t>(i)] = 1;

  std::vector<Var> out_vars;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (keep_mask[i]) out_vars.push_back(vars_[i]);

  std::vector<std::size_t> out_stride(vars_.size(), 0);
  std::size_t acc = 1;
  for (int i = static_cast<int>(vars_.size()) - 1; i >= 0; --i) {
    if (!keep_mask[static_cast<std::size_t>(i)]) continue;
    out_stride[static_cast<std::size_t>(i)] = acc;
    acc *= static_cast<std::size_t>(vars_[static_cast<std::size_t>(i)].size);
  }

  std::vector<double> out(acc, 0.0);
  for (std::size_t s = 0; s < table_.size(); ++s) {
    std::size_t t = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (!keep_mask[i]) continue;
      std::size_t sym = (s / stride_[i]) % static_cast<std::size_t>(vars_[i].size);
      t += sym * out_stride[i];
    }
    out[t] += table_[s];
  }
  return JointPmf(std::move(out_vars), std::move(out));
}

double JointPmf::entropy(const VarSet& a) const {
  JointPmf m = marginal(a);
  double h = 0.0;
  for (double p : m.table_)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

double JointPmf::cond_mutual_info(const VarSet& a, const VarSet& b,
                                  const VarSet& c) const {
  if (a.empty() || b.empty())
    throw std::invalid_argument("cond_mutual_info: empty argument set");
  for (const auto& n : a)
    if (vs_contains(b, n) || vs_contains(c, n))
      throw std::invalid_argument("cond_mutual_info: sets overlap at " + n);
  for (const auto& n : b)
    if (vs_contains(c, n))
      throw std::invalid_argument("cond_mutual_info: sets overlap at " + n);

  JointPmf m = marginal(vs_union(vs_union(a, b), c));

  // Strides into the ac / bc / c marginal tables, aligned to m's variables.
  auto sub_strides = [&m](const VarSet& keep, std::size_t* n_out) {
    std::vector<std::size_t> st(m.vars_.size(), 0);
    std::vector<char> mask(m.vars_.size(), 0);
    for (std::size_t i = 0; i < m.vars_.size(); ++i)
      if (vs_contains(keep, m.vars_[i].name)) mask[i] = 1;
    std::size_t acc = 1;
    for (int i = static_cast<int>(m.vars_.size()) - 1; i >= 0; --i) {
      if (!mask[static_cast<std::size_t>(i)]) continue;
      st[static_cast<std::size_t>(i)] = acc;
      acc *= static_cast<std::size_t>(m.vars_[static_cast<std::size_t>(i)].size);
    }
    *n_out = acc;
    return st;
  };

  const VarSet ac = vs_union(a, c), bc = vs_union(b, c);
  std::size_t n_ac = 0, n_bc = 0, n_c = 0;
  std::vector<std::size_t> st_ac = sub_strides(ac, &n_ac);
  std::vector<std::size_t> st_bc = sub_strides(bc, &n_bc);
  std::vector<std::size_t> st_c = sub_strides(c, &n_c);

  std::vector<double> p_ac(n_ac, 0.0), p_bc(n_bc, 0.0), p_c(n_c, 0.0);
  std::vector<std::size_t> i_ac(m.table_.size()), i_bc(m.table_.size()),
      i_c(m.table_.size());
  for (std::size_t s = 0; s < m.table_.size(); ++s) {
    std::size_t ta = 0, tb = 0, tc = 0;
    for (std::size_t i = 0; i < m.vars_.size(); ++i) {
      std::size_t sym = (s / m.stride_[i]) % static_cast<std::size_t>(m.vars_[i].size);
      ta += sym * st_ac[i];
      tb += sym * st_bc[i];
      tc += sym * st_c[i];
    }
    i_ac[s] = ta;
    i_bc[s] = tb;
    i_c[s] = tc;
    p_ac[ta] += m.table_[s];
    p_bc[tb] += m.table_[s];
    p_c[tc] += m.table_[s];
  }

  double mi = 0.0;
  for (std::size_t s = 0; s < m.table_.size(); ++s) {
    double p = m.table_[s];
    if (p <= 0.0) continue;
    mi += p * std::log2((p * p_c[i_c[s]]) / (p_ac[i_ac[s]] * p_bc[i_bc[s]]));
  }
  if (mi < 0.0) {
    if (mi < -kNegMiTol)
      throw std::domain_error("cond_mutual_info: negative beyond round-off: " +
                              std::to_string(mi));
    mi = 0.0;
  }
  return mi;
}

}  // namespace ratelab
