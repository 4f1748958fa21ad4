#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "ratelab/pmf.hpp"

using ratelab::JointPmf;
using ratelab::Var;
using ratelab::VarSet;

namespace {

JointPmf random_joint(std::mt19937& rng, std::vector<Var> vars) {
  std::size_t cells = 1;
  for (const auto& v : vars) cells *= static_cast<std::size_t>(v.size);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  std::vector<double> t(cells);
  double sum = 0.0;
  for (auto& x : t) sum += (x = u(rng));
  for (auto& x : t) x /= sum;
  return JointPmf(std::move(vars), std::move(t));
}

}  // namespace

TEST_CASE("binary symmetric joint reproduces its frozen information values") {
  // X uniform, Y = X through a crossover-0.11 binary symmetric channel.
  JointPmf j({{"X", 2}, {"Y", 2}}, {0.445, 0.055, 0.055, 0.445});
  CHECK(std::abs(j.cond_mutual_info({"X"}, {"Y"}) - 0.500084041835472) <= 1e-9);
  CHECK(std::abs(j.entropy({"Y"}) - 1.0) <= 1e-12);
  CHECK(std::abs(j.entropy({"X"}) - 1.0) <= 1e-12);
  // H(X,Y) = H(X) + H(Y|X) = 1 + h2(0.11).
  CHECK(std::abs(j.entropy({"X", "Y"}) - 1.499915958164528) <= 1e-9);
}

TEST_CASE("marginals sum out the dropped variables and keep storage order") {
  JointPmf j({{"A", 2}, {"B", 2}}, {0.1, 0.2, 0.3, 0.4});
  JointPmf ma = j.marginal({"A"});
  REQUIRE(ma.vars().size() == 1);
  CHECK(ma.table()[0] == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(ma.table()[1] == doctest::Approx(0.7).epsilon(1e-15));

  std::mt19937 rng(7);
  JointPmf k = random_joint(rng, {{"A", 2}, {"B", 3}, {"C", 2}});
  JointPmf m1 = k.marginal({"A", "C"});
  JointPmf m2 = k.marginal({"C", "A"});  // permuted request, same result
  REQUIRE(m1.table().size() == m2.table().size());
  for (std::size_t i = 0; i < m1.table().size(); ++i)
    CHECK(m1.table()[i] == m2.table()[i]);
  CHECK(m1.vars()[0].name == "A");
  CHECK(m1.vars()[1].name == "C");
}

TEST_CASE("information identities hold across 1000 random three-variable joints") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 1000; ++trial) {
    JointPmf j = random_joint(rng, {{"A", 2}, {"B", 3}, {"C", 2}});
    double iab_c = j.cond_mutual_info({"A"}, {"B"}, {"C"});
    double iba_c = j.cond_mutual_info({"B"}, {"A"}, {"C"});
    double ia_bc = j.cond_mutual_info({"A"}, {"B", "C"});
    double ia_c = j.cond_mutual_info({"A"}, {"C"});

    // Symmetry, nonnegativity, chain rule.
    CHECK(std::abs(iab_c - iba_c) <= 1e-10);
    CHECK(iab_c >= 0.0);
    CHECK(ia_bc >= 0.0);
    CHECK(std::abs(ia_bc - (ia_c + iab_c)) <= 1e-10);

    // Entropy expansion: I(A;B|C) = H(A,C) + H(B,C) - H(A,B,C) - H(C).
    double viaH = j.entropy({"A", "C"}) + j.entropy({"B", "C"}) -
                  j.entropy({"A", "B", "C"}) - j.entropy({"C"});
    CHECK(std::abs(iab_c - viaH) <= 1e-10);
  }
}

TEST_CASE("size-1 variables are informationally invisible") {
  std::mt19937 rng(99);
  JointPmf base = random_joint(rng, {{"A", 2}, {"B", 2}});
  // Embed the same table with a constant Z appended.
  std::vector<double> t = base.table();
  JointPmf j({{"A", 2}, {"B", 2}, {"Z", 1}}, t);
  CHECK(j.entropy({"A", "Z"}) == base.entropy({"A"}));
  CHECK(j.entropy({"Z"}) == 0.0);
  CHECK(std::abs(j.cond_mutual_info({"A"}, {"B"}, {"Z"}) -
                 base.cond_mutual_info({"A"}, {"B"})) <= 1e-12);
}

TEST_CASE("constructor and query validation reject malformed input") {
  CHECK_THROWS_AS(JointPmf({{"A", 2}}, {0.6, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(JointPmf({{"A", 2}}, {0.5, 0.5, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(JointPmf({{"A", 0}}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(JointPmf({{"A", 2}, {"A", 2}}, {0.25, 0.25, 0.25, 0.25}),
                  std::invalid_argument);
  CHECK_THROWS_AS(JointPmf({{"A", 2}}, {-0.5, 1.5}), std::invalid_argument);

  JointPmf j({{"A", 2}, {"B", 2}}, {0.25, 0.25, 0.25, 0.25});
  CHECK_THROWS_AS(j.cond_mutual_info({"A"}, {"A"}), std::invalid_argument);
  CHECK_THROWS_AS(j.cond_mutual_info({"A"}, {"B"}, {"B"}), std::invalid_argument);
  CHECK_THROWS_AS(j.cond_mutual_info({}, {"B"}), std::invalid_argument);
  CHECK_THROWS_AS(j.entropy({"Q"}), std::invalid_argument);
  CHECK_THROWS_AS(j.marginal({"A", "A"}), std::invalid_argument);
}

TEST_CASE("variable-set helpers behave as sets") {
  VarSet u = ratelab::vs_union({"A", "B"}, {"B", "C"});
  CHECK(u.size() == 3);
  CHECK(ratelab::vs_contains(u, "A"));
  CHECK(ratelab::vs_contains(u, "B"));
  CHECK(ratelab::vs_contains(u, "C"));
  VarSet m = ratelab::vs_minus({"A", "B", "C"}, {"B"});
  CHECK(m.size() == 2);
  CHECK(!ratelab::vs_contains(m, "B"));
  CHECK(!ratelab::vs_contains({}, "A"));
}

TEST_CASE("default pmf is the empty product") {
  JointPmf j;
  CHECK(j.cells() == 1);
  CHECK(j.entropy({}) == 0.0);
}
