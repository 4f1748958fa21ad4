// ratelab: exact rate bounds for small multicast/relay networks, plus the
// Gaussian relay comparison table and sweeps.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ratelab/bounds_discrete.hpp"
#include "ratelab/bounds_gauss.hpp"
#include "ratelab/netfile.hpp"
#include "ratelab/table1.hpp"

namespace {

using namespace ratelab;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size())
      throw ValidationError("bad integer list element '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

int run_table1(bool verify, const LayeredSearch& search,
               const std::string& out_path) {
  std::vector<Table1Row> rows;
  for (const auto& ref : table1_reference())
    rows.push_back(compute_table1_row(ref.d, search));
  emit(format_table1_csv(rows), out_path);

  const Table1Tolerance tol;
  bool ok = true;
  const char* names[5] = {"R_NNC", "R_DDF", "R_CE", "R_Pro1", "R_Pro2"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Table1Row& ref = table1_reference()[i];
    double got[5] = {rows[i].nnc, rows[i].ddf, rows[i].ce, rows[i].pro1,
                     rows[i].pro2};
    double want[5] = {ref.nnc, ref.ddf, ref.ce, ref.pro1, ref.pro2};
    double tols[5] = {tol.nnc, tol.ddf, tol.ce, tol.pro1, tol.pro2};
    for (int c = 0; c < 5; ++c) {
      double dev = std::abs(got[c] - want[c]);
      bool pass = dev <= tols[c];
      ok = ok && pass;
      std::fprintf(stderr, "table1 d=%.2f %-6s computed=%.6f reference=%.4f |dev|=%.2e tol=%.0e %s\n",
                   rows[i].d, names[c], got[c], want[c], dev, tols[c],
                   pass ? "ok" : "FAIL");
    }
  }
  if (verify && !ok) {
    std::fprintf(stderr, "table1 verification failed\n");
    return 2;
  }
  return 0;
}

int run_sweep(const std::string& var, double from, double to, double step,
              bool with_af, const LayeredSearch& search,
              const std::string& out_path) {
  if (var != "p" && var != "d")
    throw ValidationError("sweep variable must be 'p' or 'd'");
  if (!(step > 0.0) || to < from)
    throw ValidationError("sweep needs step > 0 and to >= from");
  if (with_af)
    std::fprintf(stderr,
                 "note: amplify-forward uses a two-symbol time-shared scheme; "
                 "its rate is not directly comparable to the other columns "
                 "and is excluded from the monotonicity check\n");

  std::string csv = var + ",R_NNC,R_DDF,R_CE,R_Pro1,R_Pro2";
  if (with_af) csv += ",R_AF";
  csv += "\n";
  std::vector<std::vector<double>> cols(6);
  for (double v = from; v <= to + 1e-12; v += step) {
    GaussianRelayParams p = (var == "p")
                                ? GaussianRelayParams::power_sweep_geometry(v)
                                : GaussianRelayParams::line_geometry(v);
    double nnc = eval_nnc_gauss(p);
    double ddf = eval_ddf_gauss(p).rate;
    double ce = eval_ce(p, search).rate;
    double pro1 = eval_pro1(p, search).rate;
    double pro2 = eval_pro2(p, search).rate;
    cols[0].push_back(nnc);
    cols[1].push_back(ddf);
    cols[2].push_back(ce);
    cols[3].push_back(pro1);
    cols[4].push_back(pro2);
    csv += fmt(v) + "," + fmt(nnc) + "," + fmt(ddf) + "," + fmt(ce) + "," +
           fmt(pro1) + "," + fmt(pro2);
    if (with_af) csv += "," + fmt(eval_af_gauss(p).rate);
    csv += "\n";
  }
  emit(csv, out_path);

  if (var == "p") {
    const char* names[5] = {"R_NNC", "R_DDF", "R_CE", "R_Pro1", "R_Pro2"};
    for (int c = 0; c < 5; ++c)
      for (std::size_t i = 1; i < cols[c].size(); ++i)
        if (cols[c][i] < cols[c][i - 1] - 1e-9) {
          std::fprintf(stderr,
                       "monotonicity violation: %s drops from %.9f to %.9f "
                       "between rows %zu and %zu\n",
                       names[c], cols[c][i - 1], cols[c][i], i - 1, i);
          return 1;
        }
  }
  return 0;
}

std::string feasibility_text(const BoundResult& r) {
  std::string s;
  for (const auto& c : r.feasibility) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "  %-12s required=%.9f available=%s slack=%s %s\n",
                  c.label.c_str(), c.required,
                  std::isinf(c.available) ? "inf" : fmt(c.available).c_str(),
                  std::isinf(c.slack) ? "inf" : fmt(c.slack).c_str(),
                  c.satisfied ? "ok" : "VIOLATED");
    s += buf;
  }
  return s;
}

int run_discrete(const std::string& net_path, const std::string& fd_path,
                 const std::string& theorem, const std::string& decode_set,
                 bool decode_set_given, const std::string& ordering,
                 bool best_ordering, bool perfect_feedback, bool csv,
                 const std::string& out_path) {
  DiscreteNetwork net = load_network(net_path);
  FactoredDistribution fd = load_factors(fd_path);
  if (perfect_feedback)
    for (int k = 2; k <= net.roles.n; ++k)
      net.roles.feedback_rates[k] = std::numeric_limits<double>::infinity();

  BoundResult r;
  if (theorem == "thm1") {
    r = eval_thm1(net, fd);
  } else if (theorem == "thm2") {
    r = eval_thm2(net, fd);
  } else if (theorem == "thm3") {
    r = eval_thm3(net, fd);
  } else if (theorem == "thm4") {
    std::vector<int> a;
    if (decode_set_given) {
      a = parse_int_list(decode_set);
    } else {
      for (int k = 2; k <= net.roles.n; ++k) a.push_back(k);
    }
    r = eval_thm4(net, fd, a);
  } else if (theorem == "nnc") {
    r = eval_nnc(net, fd);
  } else if (theorem == "ddf") {
    if (best_ordering) {
      r = eval_ddf_best(net, fd);
    } else if (!ordering.empty()) {
      r = eval_ddf(net, fd, parse_int_list(ordering));
    } else {
      r = eval_ddf(net, fd);
    }
  } else if (theorem == "diamond-fb") {
    r = eval_diamond_fb(net, fd);
  } else if (theorem == "diamond-nofb") {
    r = eval_diamond_nofb(net, fd);
  } else {
    throw ValidationError("unknown theorem token '" + theorem + "'");
  }

  std::string text;
  char buf[256];
  if (csv) {
    text = "theorem,rate,raw_rate,feasible,binding_receiver,binding_cut,binding_label\n";
    std::snprintf(buf, sizeof buf, "%s,%.9f,%.9f,%d,%d,\"%s\",%s\n",
                  theorem.c_str(), r.rate, r.raw_rate, r.feasible ? 1 : 0,
                  r.binding_receiver, r.binding_cut.c_str(),
                  r.binding_label.c_str());
    text += buf;
  } else {
    std::snprintf(buf, sizeof buf,
                  "theorem: %s\nrate: %.9f\nraw_rate: %.9f\n"
                  "binding: receiver %d, cut %s, expression %s\nfeasible: %s\n",
                  theorem.c_str(), r.rate, r.raw_rate, r.binding_receiver,
                  r.binding_cut.c_str(), r.binding_label.c_str(),
                  r.feasible ? "yes" : "no");
    text = buf;
    if (!r.feasibility.empty()) text += "constraints:\n" + feasibility_text(r);
    if (!r.note.empty()) text += "note: " + r.note + "\n";
  }
  emit(text, out_path);
  return r.feasible ? 0 : 3;
}

int run_check_condition(bool d_given, double d, bool power_given, double power,
                        const std::vector<double>& gains) {
  GaussianRelayParams p;
  if (d_given) {
    p = GaussianRelayParams::line_geometry(d);
  } else if (power_given) {
    p = GaussianRelayParams::power_sweep_geometry(power);
  } else {
    p.g12 = gains[0];
    p.g13 = gains[1];
    p.g21 = gains[2];
    p.g23 = gains[3];
    p.p1 = gains[4];
    p.p2 = gains[5];
  }
  ConditionReport rep = check_condition_enh(p);
  std::printf("condition holds: %s\nmargin: %.9g\n", rep.holds ? "yes" : "no",
              rep.margin);
  return rep.holds ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ratelab: achievable-rate laboratory for relay and multicast networks"};
  app.require_subcommand(1);

  // table1
  auto* t1 = app.add_subcommand(
      "table1", "Compute the Gaussian relay comparison table as CSV");
  bool t1_verify = false, t1_parallel = false;
  int t1_grid = 33, t1_refine = 60;
  std::string t1_out;
  t1->add_flag("--verify", t1_verify,
               "exit 2 unless every cell matches the built-in reference");
  t1->add_flag("--parallel", t1_parallel, "evaluate search grids on all cores");
  t1->add_option("--grid", t1_grid, "coarse search samples per dimension");
  t1->add_option("--refine", t1_refine, "local refinement sweeps");
  t1->add_option("--out", t1_out, "write CSV here instead of stdout");

  // sweep
  auto* sw = app.add_subcommand("sweep",
                                "Sweep the Gaussian relay bounds over power "
                                "(--var p) or relay position (--var d)");
  std::string sw_var = "p", sw_out;
  double sw_from = std::nan(""), sw_to = std::nan(""), sw_step = std::nan("");
  bool sw_af = false, sw_parallel = false;
  int sw_grid = 33, sw_refine = 60;
  sw->add_option("--var", sw_var, "sweep variable: p (power) or d (position)");
  sw->add_option("--from", sw_from, "first value");
  sw->add_option("--to", sw_to, "last value");
  sw->add_option("--step", sw_step, "increment");
  sw->add_flag("--af", sw_af, "append the amplify-forward column");
  sw->add_flag("--parallel", sw_parallel, "evaluate search grids on all cores");
  sw->add_option("--grid", sw_grid, "coarse search samples per dimension");
  sw->add_option("--refine", sw_refine, "local refinement sweeps");
  sw->add_option("--out", sw_out, "write CSV here instead of stdout");

  // discrete
  auto* di = app.add_subcommand(
      "discrete", "Evaluate one lower bound on a discrete network");
  std::string di_net, di_fd, di_thm, di_decode, di_ordering, di_out;
  bool di_best = false, di_perfect = false, di_csv = false;
  di->add_option("--network", di_net, "network description file")->required();
  di->add_option("--factors", di_fd, "factored distribution file")->required();
  di->add_option("--theorem", di_thm,
                 "thm1|thm2|thm3|thm4|nnc|ddf|diamond-fb|diamond-nofb")
      ->required();
  auto* di_decode_opt = di->add_option(
      "--decode-set", di_decode,
      "thm4: comma-separated nodes whose descriptions the source decodes "
      "(default: all of [2:n]; pass '' for the empty set)");
  di->add_option("--ordering", di_ordering,
                 "ddf: comma-separated decoding order of [2:n]");
  di->add_flag("--best-ordering", di_best, "ddf: try every ordering");
  di->add_flag("--perfect-feedback", di_perfect,
               "treat every feedback link as unlimited");
  di->add_flag("--csv", di_csv, "machine-readable one-row CSV");
  di->add_option("--out", di_out, "write the report here instead of stdout");

  // check-condition
  auto* cc = app.add_subcommand(
      "check-condition",
      "Check the strict dominance condition for the Gaussian relay");
  double cc_d = 0.0, cc_power = 0.0;
  double cc_g12 = 1, cc_g13 = 1, cc_g21 = 1, cc_g23 = 1, cc_p1 = 1, cc_p2 = 1;
  auto* cc_dopt = cc->add_option("--d", cc_d, "use the line geometry at d");
  auto* cc_popt =
      cc->add_option("--power", cc_power, "use the power-sweep geometry at P");
  cc->add_option("--g12", cc_g12, "gain source->relay");
  cc->add_option("--g13", cc_g13, "gain source->receiver");
  cc->add_option("--g21", cc_g21, "gain relay->source");
  cc->add_option("--g23", cc_g23, "gain relay->receiver");
  cc->add_option("--p1", cc_p1, "source power");
  cc->add_option("--p2", cc_p2, "relay power");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  auto search_of = [](bool parallel, int grid, int refine) {
    if (grid < 2)
      throw ValidationError("--grid needs at least 2 samples per dimension");
    if (refine < 0) throw ValidationError("--refine must be >= 0");
    return LayeredSearch{parallel, grid, refine};
  };

  try {
    if (t1->parsed())
      return run_table1(t1_verify, search_of(t1_parallel, t1_grid, t1_refine),
                        t1_out);
    if (sw->parsed()) {
      bool is_p = sw_var == "p";
      if (std::isnan(sw_from)) sw_from = is_p ? 0.5 : 0.73;
      if (std::isnan(sw_to)) sw_to = is_p ? 10.0 : 0.76;
      if (std::isnan(sw_step)) sw_step = is_p ? 0.5 : 0.005;
      return run_sweep(sw_var, sw_from, sw_to, sw_step, sw_af,
                       search_of(sw_parallel, sw_grid, sw_refine), sw_out);
    }
    if (di->parsed())
      return run_discrete(di_net, di_fd, di_thm, di_decode,
                          di_decode_opt->count() > 0, di_ordering, di_best,
                          di_perfect, di_csv, di_out);
    if (cc->parsed())
      return run_check_condition(cc_dopt->count() > 0, cc_d,
                                 cc_popt->count() > 0, cc_power,
                                 {cc_g12, cc_g13, cc_g21, cc_g23, cc_p1, cc_p2});
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
