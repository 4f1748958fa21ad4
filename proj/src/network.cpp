#include "ratelab/network.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace ratelab {

namespace {

bool parse_node(const std::string& s, std::size_t pos, int* out) {
  if (pos >= s.size()) return false;
  for (std::size_t i = pos; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  if (s[pos] == '0' && s.size() > pos + 1) return false;  // no leading zeros
  *out = std::atoi(s.c_str() + pos);
  return true;
}

}  // namespace

ParsedName parse_var_name(const std::string& name) {
  int k = 0;
  if (name == "U0") return {VarTag::U0, 0};
  if (name == "V0") return {VarTag::V0, 0};
  if (name.size() >= 3 && name[0] == 'Y' && name[1] == 'h' &&
      parse_node(name, 2, &k) && k >= 2)
    return {VarTag::Yhat, k};
  if (name.size() >= 2 && parse_node(name, 1, &k)) {
    switch (name[0]) {
      case 'X':
        if (k >= 1) return {VarTag::X, k};
        break;
      case 'Y':
        if (k >= 1) return {VarTag::Y, k};
        break;
      case 'U':
        if (k >= 2) return {VarTag::U, k};
        break;
      case 'V':
        if (k >= 2) return {VarTag::V, k};
        break;
      default:
        break;
    }
  }
  throw ValidationError("unrecognized variable name: " + name);
}

std::string xvar(int k) { return "X" + std::to_string(k); }
std::string yvar(int k) { return "Y" + std::to_string(k); }
std::string yhvar(int k) { return "Yh" + std::to_string(k); }
std::string uvar(int k) { return "U" + std::to_string(k); }
std::string vvar(int k) { return "V" + std::to_string(k); }

std::vector<int> NodeRoles::receivers() const {
  std::vector<int> out;
  for (int k = 2; k <= n; ++k)
    if (!is_relay(k)) out.push_back(k);
  return out;
}

bool NodeRoles::is_relay(int k) const {
  return std::find(relays.begin(), relays.end(), k) != relays.end();
}

double NodeRoles::feedback_rate(int k) const {
  auto it = feedback_rates.find(k);
  return it == feedback_rates.end() ? 0.0 : it->second;
}

void NodeRoles::validate() const {
  if (n < 3) throw ValidationError("roles: need at least 3 nodes");
  if (n > 24) throw ValidationError("roles: node count too large");
  if (!std::is_sorted(relays.begin(), relays.end()))
    throw ValidationError("roles: relay list must be sorted");
  for (std::size_t i = 0; i + 1 < relays.size(); ++i)
    if (relays[i] == relays[i + 1])
      throw ValidationError("roles: duplicate relay " + std::to_string(relays[i]));
  for (int r : relays)
    if (r < 2 || r > n)
      throw ValidationError("roles: relay outside [2:n]: " + std::to_string(r));
  if (receivers().empty())
    throw ValidationError("roles: receiver set is empty");
  for (const auto& [k, rate] : feedback_rates) {
    if (k < 2 || k > n)
      throw ValidationError("roles: feedback node outside [2:n]");
    if (std::isnan(rate) || rate < 0.0)
      throw ValidationError("roles: feedback rate must be >= 0 or inf");
  }
}

std::string CutSet::label() const {
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(members[i]);
  }
  return s + "}";
}

std::vector<CutSet> enumerate_cuts(const NodeRoles& roles) {
  roles.validate();
  const int m = roles.n - 1;  // candidate nodes 2..n
  const unsigned full = (1u << m) - 1u;
  const std::vector<int> rcv = roles.receivers();
  std::vector<CutSet> cuts;
  for (unsigned mask = 0; mask <= full; ++mask) {
    if (mask == full) continue;  // T must be a strict subset of [2:n]
    bool complement_has_receiver = false;
    for (int d : rcv)
      if (!(mask & (1u << (d - 2)))) {
        complement_has_receiver = true;
        break;
      }
    if (!complement_has_receiver) continue;
    CutSet t;
    for (int k = 2; k <= roles.n; ++k)
      if (mask & (1u << (k - 2))) t.members.push_back(k);
    cuts.push_back(std::move(t));
  }
  return cuts;
}

std::size_t DiscreteNetwork::x_cells() const {
  std::size_t n = 1;
  for (int s : in_size) n *= static_cast<std::size_t>(s);
  return n;
}

std::size_t DiscreteNetwork::y_cells() const {
  std::size_t n = 1;
  for (int s : out_size) n *= static_cast<std::size_t>(s);
  return n;
}

void DiscreteNetwork::validate() const {
  roles.validate();
  if (static_cast<int>(in_size.size()) != roles.n ||
      static_cast<int>(out_size.size()) != roles.n)
    throw ValidationError("network: alphabet lists must cover all nodes");
  for (int s : in_size)
    if (s < 1) throw ValidationError("network: input alphabet size < 1");
  for (int s : out_size)
    if (s < 1) throw ValidationError("network: output alphabet size < 1");
  const std::size_t nx = x_cells(), ny = y_cells();
  if (nx > kMaxCells || ny > kMaxCells || nx * ny > kMaxCells)
    throw ValidationError("network: channel table exceeds 2^24 cells");
  if (channel.size() != nx * ny)
    throw ValidationError("network: channel has " + std::to_string(channel.size()) +
                          " cells, expected " + std::to_string(nx * ny));
  for (std::size_t x = 0; x < nx; ++x) {
    double sum = 0.0;
    for (std::size_t y = 0; y < ny; ++y) {
      double p = channel[x * ny + y];
      if (!(p >= 0.0))
        throw ValidationError("network: negative or non-finite channel entry");
      sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTol)
      throw ValidationError("network: channel slice x=" + std::to_string(x) +
                            " sums to " + std::to_string(sum));
  }
}

const Factor* FactoredDistribution::find(const std::string& target) const {
  for (const auto& f : factors)
    if (f.target == target) return &f;
  return nullptr;
}

int FactoredDistribution::var_size(const std::string& name,
                                   const DiscreteNetwork& net) const {
  ParsedName p = parse_var_name(name);
  if (p.tag == VarTag::Y) {
    if (p.node < 1 || p.node > net.roles.n)
      throw ValidationError("unknown channel output " + name);
    return net.out_size[static_cast<std::size_t>(p.node - 1)];
  }
  const Factor* f = find(name);
  if (!f) throw ValidationError("variable " + name + " is not defined by any factor");
  return f->size;
}

namespace {

void check_factor_table(const Factor& f, const std::vector<int>& given_sizes) {
  if (f.size < 1) throw ValidationError("factor " + f.target + ": size < 1");
  std::size_t rows = 1;
  for (int s : given_sizes) rows *= static_cast<std::size_t>(s);
  if (f.table.size() != rows * static_cast<std::size_t>(f.size))
    throw ValidationError("factor " + f.target + ": table has " +
                          std::to_string(f.table.size()) + " cells, expected " +
                          std::to_string(rows * static_cast<std::size_t>(f.size)));
  for (std::size_t r = 0; r < rows; ++r) {
    double sum = 0.0;
    for (int t = 0; t < f.size; ++t) {
      double p = f.table[r * static_cast<std::size_t>(f.size) +
                         static_cast<std::size_t>(t)];
      if (!(p >= 0.0))
        throw ValidationError("factor " + f.target + ": negative entry");
      sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTol)
      throw ValidationError("factor " + f.target + ": row " + std::to_string(r) +
                            " sums to " + std::to_string(sum));
  }
}

struct Builder {
  std::vector<Var> vars;
  std::vector<double> table{1.0};

  std::size_t stride_of(const std::string& name) const {
    std::size_t st = 1;
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
      if (it->name == name) return st;
      st *= static_cast<std::size_t>(it->size);
    }
    throw ValidationError("factor references undefined variable " + name);
  }

  int size_of(const std::string& name) const {
    for (const auto& v : vars)
      if (v.name == name) return v.size;
    throw ValidationError("factor references undefined variable " + name);
  }

  void guard_growth(std::size_t mult) {
    if (table.size() > kMaxCells / mult)
      throw ValidationError("joint pmf exceeds 2^24 cells");
  }

  // Appends f.target as the new fastest axis.
  void multiply(const Factor& f) {
    std::vector<std::size_t> gstride;
    std::vector<int> gsize;
    for (const auto& g : f.given) {
      gstride.push_back(stride_of(g));
      gsize.push_back(size_of(g));
    }
    check_factor_table(f, gsize);
    guard_growth(static_cast<std::size_t>(f.size));
    std::vector<double> out(table.size() * static_cast<std::size_t>(f.size));
    for (std::size_t s = 0; s < table.size(); ++s) {
      std::size_t row = 0;
      for (std::size_t i = 0; i < gstride.size(); ++i) {
        std::size_t sym = (s / gstride[i]) % static_cast<std::size_t>(gsize[i]);
        row = row * static_cast<std::size_t>(gsize[i]) + sym;
      }
      const double* cond = f.table.data() + row * static_cast<std::size_t>(f.size);
      double* dst = out.data() + s * static_cast<std::size_t>(f.size);
      for (int t = 0; t < f.size; ++t) dst[t] = table[s] * cond[t];
    }
    vars.push_back(Var{f.target, f.size});
    table = std::move(out);
  }

  // Appends Y1..Yn as one block conditioned on X1..Xn.
  void multiply_channel(const DiscreteNetwork& net) {
    const std::size_t ny = net.y_cells();
    std::vector<std::size_t> xstride;
    for (int k = 1; k <= net.roles.n; ++k) xstride.push_back(stride_of(xvar(k)));
    guard_growth(ny);
    std::vector<double> out(table.size() * ny);
    for (std::size_t s = 0; s < table.size(); ++s) {
      std::size_t xrow = 0;
      for (int k = 0; k < net.roles.n; ++k) {
        std::size_t sym = (s / xstride[static_cast<std::size_t>(k)]) %
                          static_cast<std::size_t>(net.in_size[static_cast<std::size_t>(k)]);
        xrow = xrow * static_cast<std::size_t>(net.in_size[static_cast<std::size_t>(k)]) + sym;
      }
      const double* cond = net.channel.data() + xrow * ny;
      double* dst = out.data() + s * ny;
      for (std::size_t y = 0; y < ny; ++y) dst[y] = table[s] * cond[y];
    }
    for (int k = 1; k <= net.roles.n; ++k)
      vars.push_back(Var{yvar(k), net.out_size[static_cast<std::size_t>(k - 1)]});
    table = std::move(out);
  }
};

}  // namespace

JointPmf build_joint(const DiscreteNetwork& net, const FactoredDistribution& fd) {
  net.validate();

  std::vector<const Factor*> pre, post;  // before / after the channel
  for (const auto& f : fd.factors) {
    ParsedName p = parse_var_name(f.target);
    if (p.tag == VarTag::Y)
      throw ValidationError("factor " + f.target + ": channel outputs come from the channel");
    if (p.node > net.roles.n)
      throw ValidationError("factor " + f.target + ": node outside the network");
    if (p.tag == VarTag::X &&
        f.size != net.in_size[static_cast<std::size_t>(p.node - 1)])
      throw ValidationError("factor " + f.target + ": size disagrees with input alphabet");
    (p.tag == VarTag::Yhat ? post : pre).push_back(&f);
  }
  for (std::size_t i = 0; i < fd.factors.size(); ++i)
    for (std::size_t j = i + 1; j < fd.factors.size(); ++j)
      if (fd.factors[i].target == fd.factors[j].target)
        throw ValidationError("variable " + fd.factors[i].target + " defined twice");
  for (int k = 1; k <= net.roles.n; ++k)
    if (!fd.find(xvar(k)))
      throw ValidationError("no factor defines " + xvar(k));

  Builder b;
  for (const Factor* f : pre) {
    for (const auto& g : f->given)
      if (parse_var_name(g).tag == VarTag::Y)
        throw ValidationError("factor " + f->target +
                              " conditions on a channel output before the channel acts");
    b.multiply(*f);
  }
  b.multiply_channel(net);
  for (const Factor* f : post) b.multiply(*f);
  return JointPmf(std::move(b.vars), std::move(b.table));
}

Pattern pattern_from_string(const std::string& s) {
  if (s == "thm1") return Pattern::thm1;
  if (s == "thm2") return Pattern::thm2;
  if (s == "thm3") return Pattern::thm3;
  if (s == "thm4") return Pattern::thm4;
  if (s == "nnc") return Pattern::nnc;
  if (s == "ddf") return Pattern::ddf;
  throw ValidationError("unknown factorization pattern: " + s);
}

std::string to_string(Pattern p) {
  switch (p) {
    case Pattern::thm1: return "thm1";
    case Pattern::thm2: return "thm2";
    case Pattern::thm3: return "thm3";
    case Pattern::thm4: return "thm4";
    case Pattern::nnc: return "nnc";
    case Pattern::ddf: return "ddf";
  }
  return "?";
}

namespace {

// Allowed effective conditioning set for a factor under a pattern, or
// nullopt-like flag when the variable must be degenerate under that pattern.
struct Allowed {
  bool foreign = false;  // must have alphabet size 1
  VarSet set;
};

Allowed allowed_given(const DiscreteNetwork& net, const FactoredDistribution& fd,
                      Pattern pat, const ParsedName& p) {
  const NodeRoles& roles = net.roles;
  const bool relay = p.node >= 2 && roles.is_relay(p.node);
  VarSet x_others, u_relays, v_all;
  for (int k = 2; k <= roles.n; ++k) {
    x_others.push_back(xvar(k));
    v_all.push_back(vvar(k));
    if (roles.is_relay(k)) u_relays.push_back(uvar(k));
  }

  Allowed out;
  switch (pat) {
    case Pattern::nnc:
      if (p.tag == VarTag::X) return out;  // fully product inputs
      if (p.tag == VarTag::Yhat) {
        out.set = {xvar(p.node), yvar(p.node)};
        return out;
      }
      break;
    case Pattern::thm1:
      if (p.tag == VarTag::X) {
        if (p.node == 1) out.set = x_others;
        return out;
      }
      if (p.tag == VarTag::Yhat) {
        out.set = {xvar(p.node), yvar(p.node)};
        return out;
      }
      break;
    case Pattern::thm2:
      if (p.tag == VarTag::X) {
        if (p.node == 1) out.set = vs_union(x_others, u_relays);
        else if (relay) out.set = {uvar(p.node)};
        return out;
      }
      if (p.tag == VarTag::U && relay) {
        out.set = {xvar(p.node)};
        return out;
      }
      if (p.tag == VarTag::Yhat) {
        out.set = relay ? VarSet{uvar(p.node), xvar(p.node), yvar(p.node)}
                        : VarSet{xvar(p.node), yvar(p.node)};
        return out;
      }
      break;
    case Pattern::thm3:
      if (p.tag == VarTag::V0) return out;
      if (p.tag == VarTag::U0) {
        out.set = {"V0"};
        return out;
      }
      if (p.tag == VarTag::X) {
        if (p.node == 1)
          out.set = vs_union(VarSet{"V0", "U0"}, vs_union(x_others, u_relays));
        else if (relay)
          out.set = {"V0"};
        return out;
      }
      if (p.tag == VarTag::U && relay) {
        out.set = {"V0", "U0", xvar(p.node)};
        return out;
      }
      if (p.tag == VarTag::Yhat) {
        out.set = relay ? VarSet{"V0", "U0", uvar(p.node), xvar(p.node), yvar(p.node)}
                        : VarSet{xvar(p.node), yvar(p.node)};
        return out;
      }
      break;
    case Pattern::thm4:
      if (p.tag == VarTag::V && p.node >= 2) return out;
      if (p.tag == VarTag::X) {
        if (p.node == 1) out.set = vs_union(v_all, u_relays);
        else out.set = {vvar(p.node)};
        return out;
      }
      if (p.tag == VarTag::U && p.node >= 2) {
        out.set = {vvar(p.node)};
        return out;
      }
      if (p.tag == VarTag::Yhat) {
        out.set = relay ? VarSet{uvar(p.node), vvar(p.node), xvar(p.node), yvar(p.node)}
                        : VarSet{vvar(p.node), xvar(p.node), yvar(p.node)};
        return out;
      }
      break;
    case Pattern::ddf:
      if (p.tag == VarTag::X) {
        if (p.node == 1) out.set = x_others;
        return out;
      }
      if (p.tag == VarTag::U && p.node >= 2) {
        for (int k = 1; k <= roles.n; ++k) out.set.push_back(xvar(k));
        // earlier U targets in definition order
        for (const auto& f : fd.factors) {
          if (f.target == uvar(p.node)) break;
          ParsedName q = parse_var_name(f.target);
          if (q.tag == VarTag::U && q.node >= 2) out.set.push_back(f.target);
        }
        return out;
      }
      break;
  }
  out.foreign = true;
  return out;
}

}  // namespace

PatternReport validate_factorization(const DiscreteNetwork& net,
                                     const FactoredDistribution& fd,
                                     Pattern pattern) {
  net.validate();
  for (const auto& f : fd.factors) {
    ParsedName p = parse_var_name(f.target);
    if (p.tag == VarTag::Y)
      return {false, f.target, "channel outputs are not factor targets"};
    if (f.size == 1) continue;  // degenerate variables impose nothing
    Allowed al = allowed_given(net, fd, pattern, p);
    if (al.foreign)
      return {false, f.target,
              "variable is foreign to pattern " + to_string(pattern) +
                  " and must be degenerate"};
    for (const auto& g : f.given) {
      if (fd.var_size(g, net) == 1) continue;  // vacuous conditioning
      if (!vs_contains(al.set, g))
        return {false, f.target,
                "pattern " + to_string(pattern) + " forbids conditioning on " + g};
    }
  }
  return {};
}

}  // namespace ratelab
