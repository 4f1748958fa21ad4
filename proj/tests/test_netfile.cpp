#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "ratelab/netfile.hpp"

using namespace ratelab;

#ifndef FIXTURE_DIR
#error "FIXTURE_DIR must be defined by the build"
#endif

namespace {

std::string fixture(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string tmp_path(const std::string& stem) {
  return std::string("rl_netfile_") + stem;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("network files round-trip byte-identically") {
  for (const char* name : {"relay_bsc.net", "diamond.net"}) {
    DiscreteNetwork n1 = load_network(fixture(name));
    std::string p1 = tmp_path(std::string(name) + ".1");
    std::string p2 = tmp_path(std::string(name) + ".2");
    save_network(n1, p1);
    DiscreteNetwork n2 = load_network(p1);
    save_network(n2, p2);
    CHECK(slurp(p1) == slurp(p2));
    std::remove(p1.c_str());
    std::remove(p2.c_str());
  }
}

TEST_CASE("factor files round-trip byte-identically") {
  for (const char* name : {"relay_bsc_thm1.fd", "diamond_thm3.fd"}) {
    FactoredDistribution f1 = load_factors(fixture(name));
    std::string p1 = tmp_path(std::string(name) + ".1");
    std::string p2 = tmp_path(std::string(name) + ".2");
    save_factors(f1, p1);
    FactoredDistribution f2 = load_factors(p1);
    save_factors(f2, p2);
    CHECK(slurp(p1) == slurp(p2));
    std::remove(p1.c_str());
    std::remove(p2.c_str());
  }
}

TEST_CASE("loaded relay network matches its declared contents") {
  DiscreteNetwork net = load_network(fixture("relay_bsc.net"));
  CHECK(net.roles.n == 3);
  REQUIRE(net.roles.relays.size() == 1);
  CHECK(net.roles.relays[0] == 2);
  CHECK(net.roles.feedback_rate(2) == 0.25);
  CHECK(net.in_size == std::vector<int>{2, 2, 1});
  CHECK(net.out_size == std::vector<int>{1, 2, 2});
  REQUIRE(net.channel.size() == 16);
  // First row: x1=0, x2=0 -> P(y2=0,y3=0) = 0.9*0.9.
  CHECK(std::abs(net.channel[0] - 0.81) <= 1e-15);
  CHECK(std::abs(net.channel[3] - 0.01) <= 1e-15);
  CHECK_NOTHROW(net.validate());
}

TEST_CASE("loaded diamond factors match their declared contents") {
  FactoredDistribution fd = load_factors(fixture("diamond_thm3.fd"));
  const Factor* v0 = fd.find("V0");
  REQUIRE(v0 != nullptr);
  CHECK(v0->size == 2);
  CHECK(v0->given.empty());
  CHECK(std::abs(v0->table[0] - 0.5) <= 1e-15);
  const Factor* yh2 = fd.find("Yh2");
  REQUIRE(yh2 != nullptr);
  REQUIRE(yh2->given.size() == 1);
  CHECK(yh2->given[0] == "Y2");
  CHECK(fd.find("Q77") == nullptr);
}

TEST_CASE("perfect feedback round-trips through the inf token") {
  DiscreteNetwork net = load_network(fixture("relay_bsc.net"));
  net.roles.feedback_rates[2] = std::numeric_limits<double>::infinity();
  std::string p1 = tmp_path("inf.net");
  save_network(net, p1);
  DiscreteNetwork n2 = load_network(p1);
  CHECK(std::isinf(n2.roles.feedback_rate(2)));
  std::remove(p1.c_str());
}

TEST_CASE("malformed network files are rejected") {
  struct Case {
    const char* stem;
    const char* text;
  };
  const Case cases[] = {
      {"missing_nodes", "relays 2\n"},
      {"bad_count",
       "nodes 3\nrelays 2\ninput_alphabets 2 2 1\noutput_alphabets 1 2 2\n"
       "channel 0.5 0.5\n"},
      {"bad_receivers",
       "nodes 3\nrelays 2\nreceivers 2\ninput_alphabets 2 2 1\n"
       "output_alphabets 1 2 2\nchannel 1 1 1 1\n"},
      {"channel_before_alphabets",
       "nodes 3\nrelays 2\nchannel 1 1 1 1\ninput_alphabets 2 2 1\n"
       "output_alphabets 1 2 2\n"},
      {"unknown_keyword", "nodes 3\nrelays 2\nwidgets 4\n"},
      {"bad_rate", "nodes 3\nrelays 2\nfeedback_rate 2 soon\n"},
  };
  for (const auto& c : cases) {
    std::string p = tmp_path(std::string(c.stem) + ".net");
    write_text(p, c.text);
    CHECK_THROWS_AS(load_network(p), ValidationError);
    std::remove(p.c_str());
  }
  CHECK_THROWS_AS(load_network("rl_netfile_does_not_exist.net"),
                  ValidationError);
}

TEST_CASE("malformed factor files are rejected") {
  struct Case {
    const char* stem;
    const char* text;
  };
  const Case cases[] = {
      {"no_colon", "factor X1 2 | \n0.5 0.5\n"},
      {"bad_size", "factor X1 0 | : 1\n"},
      {"bad_name", "factor Q1 2 | : 0.5 0.5\n"},
      {"junk", "fact X1 2 | : 0.5 0.5\n"},
      {"short_table", "factor X1 2 | : 0.5\n"},
  };
  for (const auto& c : cases) {
    std::string p = tmp_path(std::string(c.stem) + ".fd");
    write_text(p, c.text);
    CHECK_THROWS_AS(load_factors(p), ValidationError);
    std::remove(p.c_str());
  }
}
