#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "ratelab/bounds_discrete.hpp"
#include "ratelab/netfile.hpp"
#include "test_fixtures.hpp"

#ifndef RATELAB_BIN
#error "RATELAB_BIN must be defined by the build"
#endif
#ifndef FIXTURE_DIR
#error "FIXTURE_DIR must be defined by the build"
#endif

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  static int counter = 0;
  std::string so = "rl_cli_out_" + std::to_string(counter) + ".txt";
  std::string se = "rl_cli_err_" + std::to_string(counter) + ".txt";
  ++counter;
  std::string cmd = std::string("\"") + RATELAB_BIN + "\" " + args + " >" + so +
                    " 2>" + se;
  int st = std::system(cmd.c_str());
  RunResult r;
  r.code = (st == -1) ? -1 : WEXITSTATUS(st);
  r.out = slurp(so);
  r.err = slurp(se);
  std::remove(so.c_str());
  std::remove(se.c_str());
  return r;
}

std::string fixture(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

// Extracts the value following "key:" on its own line.
double parse_field(const std::string& text, const std::string& key) {
  auto pos = text.find(key + ":");
  REQUIRE(pos != std::string::npos);
  return std::strtod(text.c_str() + pos + key.size() + 1, nullptr);
}

std::string first_line(const std::string& text) {
  auto nl = text.find('\n');
  return nl == std::string::npos ? text : text.substr(0, nl);
}

}  // namespace

TEST_CASE("discrete evaluation matches the in-process library result") {
  RunResult r = run("discrete --network " + fixture("relay_bsc.net") +
                    " --factors " + fixture("relay_bsc_thm1.fd") +
                    " --theorem thm1");
  CHECK(r.code == 0);
  double cli_rate = parse_field(r.out, "rate");

  ratelab::DiscreteNetwork net = ratelab::load_network(fixture("relay_bsc.net"));
  ratelab::FactoredDistribution fd =
      ratelab::load_factors(fixture("relay_bsc_thm1.fd"));
  ratelab::BoundResult lib = ratelab::eval_relay_cf_fb(net, fd);
  CHECK(std::abs(cli_rate - lib.rate) <= 1e-9);
  CHECK(r.out.find("feasible: yes") != std::string::npos);
  CHECK(r.out.find("fb:2") != std::string::npos);
}

TEST_CASE("shipped diamond fixture works with both the general and the "
          "dedicated evaluator") {
  std::string base = "discrete --network " + fixture("diamond.net") +
                     " --factors " + fixture("diamond_thm3.fd") +
                     " --theorem ";
  RunResult general = run(base + "thm3");
  RunResult dedicated = run(base + "diamond-fb");
  CHECK(general.code == 0);
  CHECK(dedicated.code == 0);
  CHECK(std::abs(parse_field(general.out, "rate") -
                 parse_field(dedicated.out, "rate")) <= 1e-9);
}

TEST_CASE("discrete csv output carries the same result") {
  RunResult r = run("discrete --network " + fixture("relay_bsc.net") +
                    " --factors " + fixture("relay_bsc_thm1.fd") +
                    " --theorem thm1 --csv");
  CHECK(r.code == 0);
  CHECK(first_line(r.out) ==
        "theorem,rate,raw_rate,feasible,binding_receiver,binding_cut,"
        "binding_label");
  CHECK(r.out.find("thm1,") != std::string::npos);
  CHECK(r.out.find("\"{") != std::string::npos);  // quoted cut label
}

TEST_CASE("exit codes distinguish failure classes") {
  // Unknown subcommand: usage error.
  CHECK(run("frobnicate").code == 1);
  // Unreadable input: validation error.
  CHECK(run("discrete --network rl_no_such_file.net --factors " +
            fixture("relay_bsc_thm1.fd") + " --theorem thm1")
            .code == 2);
  // Unknown theorem token: validation error.
  CHECK(run("discrete --network " + fixture("relay_bsc.net") + " --factors " +
            fixture("relay_bsc_thm1.fd") + " --theorem thm9")
            .code == 2);

  // Feedback budget too small for the fixture's compression: infeasible.
  ratelab::DiscreteNetwork net = ratelab::load_network(fixture("relay_bsc.net"));
  net.roles.feedback_rates[2] = 0.01;
  ratelab::save_network(net, "rl_cli_tight.net");
  RunResult r = run("discrete --network rl_cli_tight.net --factors " +
                    fixture("relay_bsc_thm1.fd") + " --theorem thm1");
  CHECK(r.code == 3);
  CHECK(r.out.find("feasible: no") != std::string::npos);
  CHECK(r.out.find("VIOLATED") != std::string::npos);

  // The same run under a perfect-feedback override becomes feasible.
  RunResult rp = run("discrete --network rl_cli_tight.net --factors " +
                     fixture("relay_bsc_thm1.fd") +
                     " --theorem thm1 --perfect-feedback");
  CHECK(rp.code == 0);
  std::remove("rl_cli_tight.net");
}

TEST_CASE("per-node-layer theorem over the command line") {
  // A network where the source hears the relay, and a matching distribution.
  ratelab::DiscreteNetwork net = tfx::relay_net(0.1, 0.1, /*y1_noise=*/0.2);
  ratelab::save_network(net, "rl_cli_t4.net");
  ratelab::FactoredDistribution fd = tfx::relay_thm4_fd(net, 2025u);
  ratelab::save_factors(fd, "rl_cli_t4.fd");

  RunResult r = run(
      "discrete --network rl_cli_t4.net --factors rl_cli_t4.fd --theorem thm4 "
      "--decode-set 2");
  ratelab::BoundResult lib = ratelab::eval_thm4(net, fd, {2});
  CHECK(r.code == (lib.feasible ? 0 : 3));
  CHECK(std::abs(parse_field(r.out, "rate") - lib.rate) <= 1e-9);
  CHECK(r.out.find("decode:{2}") != std::string::npos);

  // An empty decode set forbids the source's factor from tracking node 2.
  RunResult re = run(
      "discrete --network rl_cli_t4.net --factors rl_cli_t4.fd --theorem thm4 "
      "--decode-set ''");
  CHECK(re.code == 2);
  std::remove("rl_cli_t4.net");
  std::remove("rl_cli_t4.fd");
}

TEST_CASE("decode-forward ordering flags") {
  ratelab::DiscreteNetwork net = tfx::diamond_net();
  ratelab::save_network(net, "rl_cli_dd.net");
  ratelab::FactoredDistribution fd = tfx::diamond_ddf_fd(net, 99u);
  ratelab::save_factors(fd, "rl_cli_dd.fd");

  RunResult r1 = run(
      "discrete --network rl_cli_dd.net --factors rl_cli_dd.fd --theorem ddf "
      "--ordering 3,2,4");
  ratelab::BoundResult lib = ratelab::eval_ddf(net, fd, {3, 2, 4});
  CHECK(std::abs(parse_field(r1.out, "rate") - lib.rate) <= 1e-9);
  CHECK(r1.out.find("ordering=3,2,4") != std::string::npos);

  RunResult rb = run(
      "discrete --network rl_cli_dd.net --factors rl_cli_dd.fd --theorem ddf "
      "--best-ordering");
  ratelab::BoundResult best = ratelab::eval_ddf_best(net, fd);
  CHECK(std::abs(parse_field(rb.out, "rate") - best.rate) <= 1e-9);
  std::remove("rl_cli_dd.net");
  std::remove("rl_cli_dd.fd");
}

TEST_CASE("reference table verification and csv shape") {
  RunResult r = run("table1 --verify --out rl_cli_table1.csv");
  CHECK(r.code == 0);
  std::string csv = slurp("rl_cli_table1.csv");
  CHECK(first_line(csv) == "d,R_NNC,R_DDF,R_CE,R_Pro1,R_Pro2");
  int lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 5);  // header + four distances
  CHECK(csv.find("0.730000") != std::string::npos);
  CHECK(r.err.find("ok") != std::string::npos);
  std::remove("rl_cli_table1.csv");
}

TEST_CASE("power sweep is monotone and optionally appends the amplify column") {
  RunResult r = run("sweep --var p --from 0.5 --to 1.5 --step 0.5");
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "p,R_NNC,R_DDF,R_CE,R_Pro1,R_Pro2");

  RunResult ra = run("sweep --var p --from 0.5 --to 1.0 --step 0.5 --af");
  CHECK(ra.code == 0);
  CHECK(first_line(ra.out) == "p,R_NNC,R_DDF,R_CE,R_Pro1,R_Pro2,R_AF");
  CHECK(ra.err.find("excluded from the monotonicity check") !=
        std::string::npos);
}

TEST_CASE("distance sweep emits one row per step") {
  RunResult r = run("sweep --var d --from 0.73 --to 0.74 --step 0.005");
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "d,R_NNC,R_DDF,R_CE,R_Pro1,R_Pro2");
  int lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 4);  // header + 0.730, 0.735, 0.740
}

TEST_CASE("condition checker reports and exits by outcome") {
  RunResult no = run("check-condition --d 0.75");
  CHECK(no.code == 3);
  CHECK(no.out.find("condition holds: no") != std::string::npos);

  RunResult yes = run(
      "check-condition --g12 1 --g13 3.1622776601683795 "
      "--g21 3.1622776601683795 --g23 1 --p1 1 --p2 1");
  CHECK(yes.code == 0);
  CHECK(yes.out.find("condition holds: yes") != std::string::npos);
  double margin = parse_field(yes.out, "margin");
  CHECK(margin > 0.5);
  CHECK(margin < 1.5);
}
