#include "ratelab/bounds_discrete.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

namespace ratelab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<int> iu(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> iinter(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) out.push_back(x);
  return out;
}

std::vector<int> idiff(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) out.push_back(x);
  return out;
}

std::string label_of(const std::vector<int>& members) {
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(members[i]);
  }
  return s + "}";
}

struct Ctx {
  const DiscreteNetwork& net;
  JointPmf joint;
  std::vector<int> relays, receivers, all2n, all1n;
  std::vector<CutSet> cuts;

  Ctx(const DiscreteNetwork& n, const FactoredDistribution& fd, Pattern pat)
      : net(n) {
    PatternReport rep = validate_factorization(n, fd, pat);
    if (!rep.ok)
      throw ValidationError("factor " + rep.offending + ": " + rep.reason);
    joint = build_joint(n, fd);
    relays = n.roles.relays;
    receivers = n.roles.receivers();
    for (int k = 1; k <= n.roles.n; ++k) all1n.push_back(k);
    for (int k = 2; k <= n.roles.n; ++k) all2n.push_back(k);
    cuts = enumerate_cuts(n.roles);
  }

  void require(const VarSet& names) const {
    for (const auto& v : names)
      if (!joint.has(v))
        throw ValidationError("evaluator needs a factor for " + v +
                              " (use alphabet size 1 when unused)");
  }

  // Conditional mutual information with set-union semantics: variables in c
  // are removed from a and b first, and an empty side yields 0.
  double mi(VarSet a, VarSet b, VarSet c = {}) const {
    c = vs_union({}, c);
    a = vs_minus(vs_union({}, a), c);
    b = vs_minus(vs_union({}, b), c);
    if (a.empty() || b.empty()) return 0.0;
    return joint.cond_mutual_info(a, b, c);
  }

  VarSet Xs(const std::vector<int>& s) const {
    VarSet v;
    for (int k : s) v.push_back(xvar(k));
    return v;
  }
  VarSet Ys(const std::vector<int>& s) const {
    VarSet v;
    for (int k : s) v.push_back(yvar(k));
    return v;
  }
  VarSet Yhs(const std::vector<int>& s) const {
    VarSet v;
    for (int k : s) v.push_back(yhvar(k));
    return v;
  }
  VarSet Us(const std::vector<int>& s) const {
    VarSet v;
    for (int k : s) v.push_back(uvar(k));
    return v;
  }
  VarSet Vs(const std::vector<int>& s) const {
    VarSet v;
    for (int k : s) v.push_back(vvar(k));
    return v;
  }
};

struct MinTrack {
  double best = kInf;
  int receiver = 0;
  std::string cut, label;

  void offer(double v, int d, const std::string& c, const std::string& l) {
    if (v < best) {
      best = v;
      receiver = d;
      cut = c;
      label = l;
    }
  }
};

void finish(BoundResult* r, const MinTrack& m) {
  r->raw_rate = m.best;
  r->rate = std::max(m.best, 0.0);
  r->binding_receiver = m.receiver;
  r->binding_cut = m.cut;
  r->binding_label = m.label;
  r->feasible = true;
  for (const auto& c : r->feasibility)
    if (!c.satisfied) r->feasible = false;
}

void add_feedback_constraint(BoundResult* r, const NodeRoles& roles, int k,
                             double required) {
  ConstraintStatus c;
  c.label = "fb:" + std::to_string(k);
  c.required = required;
  c.available = roles.feedback_rate(k);
  c.satisfied = c.available >= required - kConstraintTol;
  c.slack = c.available - required;
  r->feasibility.push_back(c);
}

double min_over_relays(const Ctx& cx, const std::function<double(int)>& f) {
  if (cx.relays.empty()) return 0.0;
  double m = kInf;
  for (int r : cx.relays) m = std::min(m, f(r));
  return m;
}

void check_topology(const NodeRoles& roles, int n, const std::vector<int>& relays,
                    const char* what) {
  if (roles.n != n || roles.relays != relays)
    throw ValidationError(std::string(what) + ": network topology mismatch");
}

}  // namespace

BoundResult eval_nnc(const DiscreteNetwork& net, const FactoredDistribution& fd) {
  Ctx cx(net, fd, Pattern::nnc);
  cx.require(cx.Yhs(cx.all2n));
  BoundResult res;
  MinTrack m;
  for (const auto& T : cx.cuts) {
    std::vector<int> Tc = idiff(cx.all2n, T.members);
    for (int d : iinter(Tc, cx.receivers)) {
      double v = cx.mi(vs_union({xvar(1)}, cx.Xs(T.members)),
                       vs_union(cx.Yhs(Tc), {yvar(d)}), cx.Xs(Tc)) -
                 cx.mi(cx.Yhs(T.members), cx.Ys(T.members),
                       vs_union(vs_union(cx.Xs(cx.all1n), {yvar(d)}), cx.Yhs(Tc)));
      m.offer(v, d, T.label(), "a");
    }
  }
  finish(&res, m);
  return res;
}

BoundResult eval_thm1(const DiscreteNetwork& net, const FactoredDistribution& fd) {
  Ctx cx(net, fd, Pattern::thm1);
  cx.require(cx.Yhs(cx.all2n));
  BoundResult res;
  MinTrack m;
  for (const auto& T : cx.cuts) {
    std::vector<int> Tc = idiff(cx.all2n, T.members);
    for (int d : iinter(Tc, cx.receivers)) {
      double v = cx.mi(vs_union({xvar(1)}, cx.Xs(T.members)),
                       vs_union(cx.Yhs(Tc), {yvar(d)}), cx.Xs(Tc)) -
                 cx.mi(cx.Yhs(T.members), cx.Ys(T.members),
                       vs_union(vs_union(cx.Xs(cx.all1n), {yvar(d)}), cx.Yhs(Tc)));
      m.offer(v, d, T.label(), "a");
    }
  }
  for (int k : cx.all2n)
    add_feedback_constraint(&res, net.roles, k,
                            cx.mi({yhvar(k)}, {yvar(k)}, {xvar(k)}));
  finish(&res, m);
  return res;
}

BoundResult eval_thm2(const DiscreteNetwork& net, const FactoredDistribution& fd) {
  Ctx cx(net, fd, Pattern::thm2);
  cx.require(vs_union(cx.Yhs(cx.all2n), cx.Us(cx.all2n)));
  BoundResult res;
  MinTrack m;
  const double df_floor = min_over_relays(
      cx, [&](int r) { return cx.mi({uvar(r)}, {yvar(r)}, {xvar(r)}); });
  for (const auto& T : cx.cuts) {
    std::vector<int> Tc = idiff(cx.all2n, T.members);
    std::vector<int> TR = iu(T.members, cx.relays);
    std::vector<int> TcD = iinter(Tc, cx.receivers);
    for (int d : TcD) {
      double a =
          cx.mi(vs_union(vs_union({xvar(1)}, cx.Xs(T.members)), cx.Us(T.members)),
                vs_union(cx.Yhs(Tc), {yvar(d)}),
                vs_union(cx.Xs(Tc), cx.Us(Tc))) -
          cx.mi(cx.Yhs(T.members), cx.Ys(T.members),
                vs_union(vs_union(cx.Us(cx.all2n), cx.Xs(cx.all1n)),
                         vs_union(cx.Yhs(Tc), {yvar(d)}))) +
          df_floor;
      m.offer(a, d, T.label(), "a");
      double b = cx.mi(vs_union(vs_union({xvar(1)}, cx.Xs(TR)), cx.Us(cx.relays)),
                       vs_union(cx.Yhs(TcD), {yvar(d)}), cx.Xs(TcD)) -
                 cx.mi(cx.Yhs(TR), cx.Ys(TR),
                       vs_union(vs_union(cx.Us(cx.all2n), cx.Xs(cx.all1n)),
                                vs_union(cx.Yhs(TcD), {yvar(d)})));
      m.offer(b, d, T.label(), "b");
    }
  }
  for (int k : cx.all2n) {
    double req = net.roles.is_relay(k)
                     ? cx.mi({yhvar(k)}, {yvar(k)}, {xvar(k), uvar(k)})
                     : cx.mi({yhvar(k)}, {yvar(k)}, {xvar(k)});
    add_feedback_constraint(&res, net.roles, k, req);
  }
  finish(&res, m);
  return res;
}

BoundResult eval_thm3(const DiscreteNetwork& net, const FactoredDistribution& fd) {
  Ctx cx(net, fd, Pattern::thm3);
  cx.require(vs_union(vs_union(cx.Yhs(cx.all2n), cx.Us(cx.all2n)), {"V0", "U0"}));
  BoundResult res;
  MinTrack m;
  const double common_floor = min_over_relays(
      cx, [&](int r) { return cx.mi({"U0"}, {yvar(r)}, {"V0", xvar(r)}); });
  for (const auto& T : cx.cuts) {
    std::vector<int> Tc = idiff(cx.all2n, T.members);
    std::vector<int> TR = iu(T.members, cx.relays);
    std::vector<int> TcD = iinter(Tc, cx.receivers);
    for (int d : TcD) {
      double a =
          cx.mi(vs_union(vs_union({xvar(1)}, cx.Xs(T.members)), cx.Us(T.members)),
                vs_union(cx.Yhs(Tc), {yvar(d)}),
                vs_union({"V0", "U0"}, vs_union(cx.Xs(Tc), cx.Us(Tc)))) +
          common_floor -
          cx.mi(cx.Yhs(T.members), cx.Ys(T.members),
                vs_union(vs_union({"V0", "U0"}, cx.Us(cx.all2n)),
                         vs_union(cx.Xs(cx.all1n),
                                  vs_union(cx.Yhs(Tc), {yvar(d)}))));
      for (int r : iinter(Tc, cx.relays))
        a += cx.mi({uvar(r)}, {yvar(r)}, {"U0", "V0", xvar(r)});
      m.offer(a, d, T.label(), "a");
      double b = cx.mi(vs_union(vs_union({"V0", "U0", xvar(1)}, cx.Xs(TR)),
                                cx.Us(cx.relays)),
                       vs_union(cx.Yhs(TcD), {yvar(d)}), cx.Xs(TcD)) -
                 cx.mi(cx.Yhs(TR), cx.Ys(TR),
                       vs_union(vs_union({"V0", "U0"}, cx.Us(cx.all2n)),
                                vs_union(cx.Xs(cx.all1n),
                                         vs_union(cx.Yhs(TcD), {yvar(d)}))));
      m.offer(b, d, T.label(), "b");
    }
  }
  for (int k : cx.all2n) {
    double req =
        net.roles.is_relay(k)
            ? cx.mi({yhvar(k)}, {yvar(k)}, {"V0", "U0", xvar(k), uvar(k)})
            : cx.mi({yhvar(k)}, {yvar(k)}, {xvar(k)});
    add_feedback_constraint(&res, net.roles, k, req);
  }
  finish(&res, m);
  return res;
}

BoundResult eval_thm4(const DiscreteNetwork& net, const FactoredDistribution& fd,
                      const std::vector<int>& decode_set) {
  Ctx cx(net, fd, Pattern::thm4);
  cx.require(vs_union(vs_union(cx.Yhs(cx.all2n), cx.Us(cx.all2n)),
                      cx.Vs(cx.all2n)));
  std::vector<int> A = iu(decode_set, {});
  for (int k : A)
    if (k < 2 || k > net.roles.n)
      throw ValidationError("decode set contains node " + std::to_string(k) +
                            " outside [2:n]");
  // The source may track only the layered descriptions of nodes in the
  // decode set.
  const Factor* x1 = fd.find(xvar(1));
  for (const auto& g : x1->given) {
    if (fd.var_size(g, net) == 1) continue;
    ParsedName p = parse_var_name(g);
    bool ok = (p.tag == VarTag::V || p.tag == VarTag::U) &&
              std::find(A.begin(), A.end(), p.node) != A.end();
    if (!ok)
      throw ValidationError("factor X1 conditions on " + g +
                            " which the decode set does not cover");
  }

  BoundResult res;
  MinTrack m;
  const double df_floor = min_over_relays(
      cx, [&](int r) { return cx.mi({uvar(r)}, {yvar(r)}, {xvar(r), vvar(r)}); });
  for (const auto& T : cx.cuts) {
    std::vector<int> Tc = idiff(cx.all2n, T.members);
    std::vector<int> TR = iu(T.members, cx.relays);
    std::vector<int> TcD = iinter(Tc, cx.receivers);
    for (int d : TcD) {
      double a =
          cx.mi(vs_union(vs_union({xvar(1)}, cx.Xs(T.members)),
                         vs_union(cx.Us(T.members), cx.Vs(T.members))),
                vs_union(cx.Yhs(Tc), {yvar(d)}),
                vs_union(cx.Us(Tc), vs_union(cx.Vs(Tc), cx.Xs(Tc)))) -
          cx.mi(cx.Yhs(T.members), cx.Ys(T.members),
                vs_union(vs_union(cx.Us(cx.all2n), cx.Vs(cx.all2n)),
                         vs_union(cx.Xs(cx.all1n),
                                  vs_union(cx.Yhs(Tc), {yvar(d)})))) +
          df_floor;
      m.offer(a, d, T.label(), "a");
      double b = cx.mi(vs_union(vs_union({xvar(1)}, cx.Vs(TR)),
                                vs_union(cx.Us(cx.relays), cx.Xs(TR))),
                       vs_union(cx.Yhs(TcD), {yvar(d)}),
                       vs_union(cx.Vs(TcD), cx.Xs(TcD))) -
                 cx.mi(cx.Yhs(TR), cx.Ys(TR),
                       vs_union(vs_union(cx.Vs(cx.all2n), cx.Xs(cx.all1n)),
                                vs_union(cx.Us(cx.all2n),
                                         vs_union(cx.Yhs(TcD), {yvar(d)}))));
      m.offer(b, d, T.label(), "b");
    }
  }

  // Decode-budget conditions: the source must be able to recover the tracked
  // descriptions from its own channel output.
  std::set<std::vector<int>> seen;
  for (const auto& T : cx.cuts) {
    std::vector<int> TA = iinter(T.members, A);
    if (!seen.insert(TA).second) continue;
    double lhs = 0.0;
    for (int r : iinter(TA, cx.relays))
      lhs += cx.mi({yhvar(r)}, {yvar(r)}, {uvar(r), vvar(r), xvar(r)});
    for (int j : iinter(TA, cx.receivers))
      lhs += cx.mi({yhvar(j)}, {yvar(j)}, {vvar(j), xvar(j)});
    double rhs = cx.mi(cx.Xs(TA), {yvar(1)},
                       vs_union(vs_union(cx.Us(A), cx.Vs(A)),
                                vs_union(cx.Xs(idiff(A, TA)), {xvar(1)})));
    ConstraintStatus c;
    c.label = "decode:" + label_of(TA);
    c.required = lhs;
    c.available = rhs;
    c.satisfied = rhs >= lhs - kConstraintTol;
    c.slack = rhs - lhs;
    res.feasibility.push_back(c);
  }
  finish(&res, m);
  return res;
}

BoundResult eval_ddf(const DiscreteNetwork& net, const FactoredDistribution& fd,
                     const std::vector<int>& ordering) {
  Ctx cx(net, fd, Pattern::ddf);
  cx.require(cx.Us(cx.all2n));
  if (iu(ordering, {}) != cx.all2n)
    throw ValidationError("ordering must be a permutation of [2:n]");
  std::vector<int> pos(static_cast<std::size_t>(net.roles.n) + 1, 0);
  for (std::size_t i = 0; i < ordering.size(); ++i)
    pos[static_cast<std::size_t>(ordering[i])] = static_cast<int>(i);

  BoundResult res;
  MinTrack m;
  for (const auto& T : cx.cuts) {
    std::vector<int> Tc = idiff(cx.all2n, T.members);
    for (int d : iinter(Tc, cx.receivers)) {
      double v = cx.mi(vs_union({xvar(1)}, cx.Xs(T.members)),
                       vs_union(cx.Us(Tc), {yvar(d)}), cx.Xs(Tc));
      for (int k : Tc) {
        std::vector<int> earlier;
        for (int j : Tc)
          if (pos[static_cast<std::size_t>(j)] < pos[static_cast<std::size_t>(k)])
            earlier.push_back(j);
        v -= cx.mi({uvar(k)}, vs_union(cx.Us(earlier), cx.Xs(cx.all1n)),
                   {xvar(k), yvar(k)});
      }
      m.offer(v, d, T.label(), "a");
    }
  }
  finish(&res, m);
  std::string ord = "ordering=";
  for (std::size_t i = 0; i < ordering.size(); ++i)
    ord += (i ? "," : "") + std::to_string(ordering[i]);
  res.note = ord;
  return res;
}

BoundResult eval_ddf(const DiscreteNetwork& net, const FactoredDistribution& fd) {
  std::vector<int> ordering;
  for (int k = 2; k <= net.roles.n; ++k) ordering.push_back(k);
  return eval_ddf(net, fd, ordering);
}

BoundResult eval_ddf_best(const DiscreteNetwork& net, const FactoredDistribution& fd,
                          std::vector<int>* best_ordering) {
  if (net.roles.n > 6)
    throw ValidationError("ordering search supported only up to 6 nodes");
  std::vector<int> ordering;
  for (int k = 2; k <= net.roles.n; ++k) ordering.push_back(k);
  BoundResult best;
  std::vector<int> best_ord;
  bool first = true;
  do {
    BoundResult r = eval_ddf(net, fd, ordering);
    if (first || r.raw_rate > best.raw_rate) {
      best = r;
      best_ord = ordering;
      first = false;
    }
  } while (std::next_permutation(ordering.begin(), ordering.end()));
  if (best_ordering) *best_ordering = best_ord;
  return best;
}

BoundResult eval_relay_cf_fb(const DiscreteNetwork& net,
                             const FactoredDistribution& fd) {
  check_topology(net.roles, 3, {2}, "compress-forward relay evaluator");
  Ctx cx(net, fd, Pattern::thm1);
  cx.require({yhvar(2)});
  BoundResult res;
  MinTrack m;
  m.offer(cx.mi({"X1"}, {"Yh2", "Y3"}, {"X2"}), 3, "{}", "c1");
  m.offer(cx.mi({"X1", "X2"}, {"Y3"}) -
              cx.mi({"Yh2"}, {"Y2"}, {"X1", "X2", "Y3"}),
          3, "{2}", "c2");
  add_feedback_constraint(&res, net.roles, 2, cx.mi({"Yh2"}, {"Y2"}, {"X2"}));
  finish(&res, m);
  return res;
}

BoundResult eval_relay_cfdf_fb(const DiscreteNetwork& net,
                               const FactoredDistribution& fd) {
  check_topology(net.roles, 3, {2}, "hybrid relay evaluator");
  Ctx cx(net, fd, Pattern::thm2);
  cx.require({yhvar(2), uvar(2)});
  BoundResult res;
  MinTrack m;
  m.offer(cx.mi({"X1"}, {"Yh2", "Y3"}, {"U2", "X2"}) +
              cx.mi({"U2"}, {"Y2"}, {"X2"}),
          3, "{}", "c1");
  m.offer(cx.mi({"X1", "X2"}, {"Y3"}) -
              cx.mi({"Yh2"}, {"Y2"}, {"U2", "X1", "X2", "Y3"}),
          3, "{2}", "c2");
  add_feedback_constraint(&res, net.roles, 2,
                          cx.mi({"Yh2"}, {"Y2"}, {"X2", "U2"}));
  finish(&res, m);
  return res;
}

BoundResult eval_diamond_fb(const DiscreteNetwork& net,
                            const FactoredDistribution& fd) {
  check_topology(net.roles, 4, {2, 3}, "diamond evaluator");
  Ctx cx(net, fd, Pattern::thm3);
  cx.require({yhvar(2), yhvar(3), uvar(2), uvar(3), "V0", "U0"});
  BoundResult res;
  MinTrack m;
  const double m0 = std::min(cx.mi({"U0"}, {"Y2"}, {"V0", "X2"}),
                             cx.mi({"U0"}, {"Y3"}, {"V0", "X3"}));
  m.offer(cx.mi({"X1", "X2", "X3"}, {"Y4"}) -
              cx.mi({"Yh2", "Yh3"}, {"Y2", "Y3"},
                    {"V0", "U0", "U2", "U3", "X1", "X2", "X3", "Y4"}),
          4, "{2,3}", "c1");
  m.offer(cx.mi({"X1", "X2", "U2"}, {"Yh3", "Y4"}, {"V0", "U0", "X3", "U3"}) +
              cx.mi({"U3"}, {"Y3"}, {"V0", "U0", "X3"}) + m0 -
              cx.mi({"Yh2"}, {"Y2"},
                    {"V0", "U0", "U2", "U3", "X1", "X2", "X3", "Yh3", "Y4"}),
          4, "{2}", "c2");
  m.offer(cx.mi({"X1", "X3", "U3"}, {"Yh2", "Y4"}, {"V0", "U0", "X2", "U2"}) +
              cx.mi({"U2"}, {"Y2"}, {"V0", "U0", "X2"}) + m0 -
              cx.mi({"Yh3"}, {"Y3"},
                    {"V0", "U0", "U2", "U3", "X1", "X2", "X3", "Yh2", "Y4"}),
          4, "{3}", "c3");
  m.offer(cx.mi({"X1", "X2", "X3", "U2", "U3"}, {"Y4"}, {"V0", "U0"}) + m0 -
              cx.mi({"Yh2", "Yh3"}, {"Y2", "Y3"},
                    {"V0", "U0", "U2", "U3", "X1", "X2", "X3", "Y4"}),
          4, "{2,3}", "c4");
  m.offer(cx.mi({"X1"}, {"Yh2", "Yh3", "Y4"},
                {"V0", "U0", "X2", "X3", "U2", "U3"}) +
              cx.mi({"U2"}, {"Y2"}, {"U0", "V0", "X2"}) +
              cx.mi({"U3"}, {"Y3"}, {"U0", "V0", "X3"}) + m0,
          4, "{}", "c5");
  for (int r : {2, 3})
    add_feedback_constraint(
        &res, net.roles, r,
        cx.mi({yhvar(r)}, {yvar(r)}, {"V0", "U0", xvar(r), uvar(r)}));
  finish(&res, m);
  return res;
}

BoundResult eval_diamond_nofb(const DiscreteNetwork& net,
                              const FactoredDistribution& fd) {
  check_topology(net.roles, 4, {2, 3}, "diamond evaluator");
  Ctx cx(net, fd, Pattern::thm3);
  cx.require({uvar(2), uvar(3), "V0", "U0"});
  if ((cx.joint.has("Yh2") && fd.var_size("Yh2", net) != 1) ||
      (cx.joint.has("Yh3") && fd.var_size("Yh3", net) != 1))
    throw ValidationError(
        "the no-feedback diamond evaluator admits no compression variables");
  BoundResult res;
  MinTrack m;
  const double m0 = std::min(cx.mi({"U0"}, {"Y2"}, {"V0", "X2"}),
                             cx.mi({"U0"}, {"Y3"}, {"V0", "X3"}));
  m.offer(cx.mi({"X1", "X2", "X3"}, {"Y4"}), 4, "{2,3}", "c1");
  m.offer(m0 + cx.mi({"U3"}, {"Y3"}, {"V0", "U0", "X3"}) +
              cx.mi({"X1", "X2", "U2"}, {"Y4"}, {"V0", "U0", "X3", "U3"}),
          4, "{2}", "c2");
  m.offer(m0 + cx.mi({"U2"}, {"Y2"}, {"V0", "U0", "X2"}) +
              cx.mi({"X1", "X3", "U3"}, {"Y4"}, {"V0", "U0", "X2", "U2"}),
          4, "{3}", "c3");
  m.offer(m0 + cx.mi({"X1", "X2", "X3", "U2", "U3"}, {"Y4"}, {"V0", "U0"}), 4,
          "{2,3}", "c4");
  m.offer(m0 + cx.mi({"U2"}, {"Y2"}, {"U0", "V0", "X2"}) +
              cx.mi({"U3"}, {"Y3"}, {"U0", "V0", "X3"}) +
              cx.mi({"X1"}, {"Y4"}, {"V0", "U0", "X2", "X3", "U2", "U3"}),
          4, "{}", "c5");
  finish(&res, m);
  return res;
}

}  // namespace ratelab
