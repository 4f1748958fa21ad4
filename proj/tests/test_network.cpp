#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "ratelab/network.hpp"
#include "test_fixtures.hpp"

using namespace ratelab;

namespace {

std::vector<std::string> cut_labels(const NodeRoles& roles) {
  std::vector<std::string> out;
  for (const auto& c : enumerate_cuts(roles)) out.push_back(c.label());
  return out;
}

}  // namespace

TEST_CASE("variable-name parsing") {
  CHECK(parse_var_name("X3").tag == VarTag::X);
  CHECK(parse_var_name("X3").node == 3);
  CHECK(parse_var_name("Yh12").tag == VarTag::Yhat);
  CHECK(parse_var_name("Yh12").node == 12);
  CHECK(parse_var_name("U0").tag == VarTag::U0);
  CHECK(parse_var_name("V0").tag == VarTag::V0);
  CHECK(parse_var_name("Y2").tag == VarTag::Y);
  CHECK(parse_var_name("V5").tag == VarTag::V);
  CHECK_THROWS_AS(parse_var_name("Q2"), ValidationError);
  CHECK_THROWS_AS(parse_var_name("X"), ValidationError);
  CHECK_THROWS_AS(parse_var_name("X-1"), ValidationError);
  CHECK_THROWS_AS(parse_var_name("Y0"), ValidationError);
  CHECK(xvar(2) == "X2");
  CHECK(yhvar(4) == "Yh4");
}

TEST_CASE("cut enumeration: diamond with one receiver") {
  NodeRoles r;
  r.n = 4;
  r.relays = {2, 3};
  auto labels = cut_labels(r);
  REQUIRE(labels.size() == 4);
  CHECK(labels[0] == "{}");
  CHECK(labels[1] == "{2}");
  CHECK(labels[2] == "{3}");
  CHECK(labels[3] == "{2,3}");
}

TEST_CASE("cut enumeration: one relay, two receivers") {
  NodeRoles r;
  r.n = 4;
  r.relays = {2};
  auto labels = cut_labels(r);
  // Every T except those whose complement has no receiver; {3,4} and beyond
  // removed because [2:4] \ T must still contain node 3 or node 4.
  REQUIRE(labels.size() == 6);
  CHECK(labels[0] == "{}");
  CHECK(labels[1] == "{2}");
  CHECK(labels[2] == "{3}");
  CHECK(labels[3] == "{2,3}");
  CHECK(labels[4] == "{4}");
  CHECK(labels[5] == "{2,4}");
}

TEST_CASE("role validation") {
  NodeRoles r;
  r.n = 2;
  r.relays = {2};  // no receiver left
  CHECK_THROWS_AS(r.validate(), ValidationError);
  r.n = 3;
  CHECK_NOTHROW(r.validate());
  CHECK(r.is_relay(2));
  CHECK(!r.is_relay(3));
  CHECK(r.receivers() == std::vector<int>{3});
  CHECK(r.feedback_rate(2) == 0.0);
  r.relays = {1};
  CHECK_THROWS_AS(r.validate(), ValidationError);
  r.relays = {5};
  CHECK_THROWS_AS(r.validate(), ValidationError);
}

TEST_CASE("channel validation catches bad conditional rows") {
  DiscreteNetwork net = tfx::relay_net();
  CHECK_NOTHROW(net.validate());
  net.channel[0] += 0.5;
  CHECK_THROWS_AS(net.validate(), ValidationError);
  net = tfx::relay_net();
  net.channel.pop_back();
  CHECK_THROWS_AS(net.validate(), ValidationError);
}

TEST_CASE("build_joint recovers declared input marginals") {
  DiscreteNetwork net = tfx::relay_net();
  FactoredDistribution fd;
  fd.factors.push_back(Factor{"X2", 2, {}, {0.6, 0.4}});
  fd.factors.push_back(Factor{"X3", 1, {}, {1.0}});
  fd.factors.push_back(Factor{"X1", 2, {"X2"}, {0.7, 0.3, 0.2, 0.8}});
  JointPmf j = build_joint(net, fd);

  JointPmf mx2 = j.marginal({"X2"});
  CHECK(std::abs(mx2.table()[0] - 0.6) <= 1e-12);
  CHECK(std::abs(mx2.table()[1] - 0.4) <= 1e-12);
  // P(X1=0) = 0.6*0.7 + 0.4*0.2 = 0.5.
  JointPmf mx1 = j.marginal({"X1"});
  CHECK(std::abs(mx1.table()[0] - 0.5) <= 1e-12);
  // Channel law: P(Y2 = X1) = 0.9 regardless of inputs.
  double iy = j.cond_mutual_info({"X1"}, {"Y2"});
  CHECK(iy > 0.0);
}

TEST_CASE("relay channel with uniform independent inputs hits the frozen rate") {
  DiscreteNetwork net = tfx::relay_net();  // Y3 = BSC_0.1(X1 xor X2)
  FactoredDistribution fd;
  fd.factors.push_back(Factor{"X2", 2, {}, {0.5, 0.5}});
  fd.factors.push_back(Factor{"X3", 1, {}, {1.0}});
  fd.factors.push_back(Factor{"X1", 2, {}, {0.5, 0.5}});
  JointPmf j = build_joint(net, fd);
  // Given X2, the X1 -> Y3 link is a crossover-0.1 binary symmetric channel
  // with uniform input: I = 1 - h2(0.1).
  CHECK(std::abs(j.cond_mutual_info({"X1"}, {"Y3"}, {"X2"}) -
                 0.5310044064107188) <= 1e-9);
  // Unconditioned, Y3 is pure noise to X1 because X2 scrambles it.
  CHECK(std::abs(j.cond_mutual_info({"X1"}, {"Y3"})) <= 1e-12);
  CHECK(std::abs(j.cond_mutual_info({"X1"}, {"Y2"}) -
                 0.5310044064107188) <= 1e-9);
}

TEST_CASE("build_joint error paths") {
  DiscreteNetwork net = tfx::relay_net();
  FactoredDistribution fd;
  fd.factors.push_back(Factor{"X2", 2, {}, {0.5, 0.5}});
  // Missing X1 and X3.
  CHECK_THROWS_AS(build_joint(net, fd), ValidationError);

  fd.factors.push_back(Factor{"X3", 1, {}, {1.0}});
  fd.factors.push_back(Factor{"X1", 2, {"Yh2"}, {0.5, 0.5}});
  // X1 conditions on a factor defined later.
  CHECK_THROWS_AS(build_joint(net, fd), ValidationError);

  fd.factors.pop_back();
  fd.factors.push_back(Factor{"X1", 2, {}, {0.6, 0.6}});  // not normalized
  CHECK_THROWS_AS(build_joint(net, fd), ValidationError);

  fd.factors.pop_back();
  fd.factors.push_back(Factor{"X1", 3, {}, {1.0 / 3, 1.0 / 3, 1.0 / 3}});
  // Declared alphabet exceeds the channel input alphabet.
  CHECK_THROWS_AS(build_joint(net, fd), ValidationError);

  fd.factors.pop_back();
  fd.factors.push_back(Factor{"X1", 2, {}, {0.5, 0.5}});
  fd.factors.push_back(Factor{"Yh2", 2, {"Y2"}, {0.8, 0.2, 0.2, 0.8}});
  CHECK_NOTHROW(build_joint(net, fd));  // Yh may condition on channel outputs

  fd.factors.push_back(Factor{"X1", 2, {}, {0.5, 0.5}});
  CHECK_THROWS_AS(build_joint(net, fd), ValidationError);  // duplicate target
}

TEST_CASE("factorization patterns accept their shapes and reject others") {
  DiscreteNetwork net = tfx::relay_net();

  // Compress-forward shape: X1 may depend on other inputs.
  FactoredDistribution fd1 = tfx::relay_chain_fd(net, 11, /*x1_product=*/false);
  CHECK(validate_factorization(net, fd1, Pattern::thm1).ok);
  CHECK(validate_factorization(net, fd1, Pattern::thm2).ok);
  CHECK(validate_factorization(net, fd1, Pattern::thm3).ok);

  // Product-input shape additionally passes the nnc pattern.
  FactoredDistribution fd0 = tfx::relay_chain_fd(net, 12, /*x1_product=*/true);
  CHECK(validate_factorization(net, fd0, Pattern::nnc).ok);
  // Correlated X1 violates nnc.
  PatternReport bad = validate_factorization(net, fd1, Pattern::nnc);
  CHECK(!bad.ok);
  CHECK(bad.offending == "X1");

  // A nondegenerate layer variable is foreign to the compress-forward shape.
  FactoredDistribution fdu = tfx::relay_hybrid_fd(net, 13);
  PatternReport r1 = validate_factorization(net, fdu, Pattern::thm1);
  CHECK(!r1.ok);
  CHECK(r1.offending == "U2");
  CHECK(validate_factorization(net, fdu, Pattern::thm2).ok);

  // Degenerate foreign variables are skipped, not rejected.
  CHECK(validate_factorization(net, fd1, Pattern::thm2).ok);

  // Compression factor conditioned on a foreign input is rejected.
  FactoredDistribution fdx = fd1;
  for (auto& f : fdx.factors)
    if (f.target == "Yh2") {
      f.given = {"X3", "Y2"};  // wrong node's input (degenerate here, so ok)
    }
  CHECK(validate_factorization(net, fdx, Pattern::thm1).ok);
  for (auto& f : fdx.factors)
    if (f.target == "Yh2") {
      f.given = {"X1", "Y2"};
      f.table = {0.8, 0.2, 0.2, 0.8, 0.3, 0.7, 0.7, 0.3};
    }
  PatternReport r2 = validate_factorization(net, fdx, Pattern::thm1);
  CHECK(!r2.ok);
  CHECK(r2.offending == "Yh2");
}

TEST_CASE("pattern names round-trip") {
  CHECK(pattern_from_string("thm1") == Pattern::thm1);
  CHECK(pattern_from_string("thm4") == Pattern::thm4);
  CHECK(pattern_from_string("nnc") == Pattern::nnc);
  CHECK(pattern_from_string("ddf") == Pattern::ddf);
  CHECK(to_string(Pattern::thm3) == "thm3");
  CHECK_THROWS_AS(pattern_from_string("bogus"), ValidationError);
}
