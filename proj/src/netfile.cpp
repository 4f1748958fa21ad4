#include "ratelab/netfile.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace ratelab {

namespace {

std::vector<std::string> tokenize(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

struct TokenStream {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  std::string file;

  bool done() const { return pos >= tokens.size(); }
  const std::string& peek() const {
    static const std::string empty;
    return done() ? empty : tokens[pos];
  }
  std::string next(const char* what) {
    if (done()) throw ValidationError(file + ": expected " + what + ", got end of file");
    return tokens[pos++];
  }

  bool peek_is_number() const {
    if (done()) return false;
    const std::string& t = tokens[pos];
    char* end = nullptr;
    std::strtod(t.c_str(), &end);
    return end == t.c_str() + t.size() && !t.empty();
  }

  double next_double(const char* what) {
    std::string t = next(what);
    if (t == "inf" || t == "Inf" || t == "INF")
      return std::numeric_limits<double>::infinity();
    char* end = nullptr;
    double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size())
      throw ValidationError(file + ": expected " + what + ", got '" + t + "'");
    return v;
  }

  int next_int(const char* what) {
    double v = next_double(what);
    int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
      throw ValidationError(file + ": expected integer " + what);
    return i;
  }
};

std::string fmt_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_table(std::ofstream& out, const std::vector<double>& t, std::size_t per_line) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    out << fmt_double(t[i]);
    out << ((i + 1) % per_line == 0 || i + 1 == t.size() ? '\n' : ' ');
  }
}

}  // namespace

DiscreteNetwork load_network(const std::string& path) {
  TokenStream ts{tokenize(path), 0, path};
  DiscreteNetwork net;
  bool have_nodes = false, have_in = false, have_out = false, have_channel = false;
  std::vector<int> receivers_claimed;
  bool have_receivers = false;

  while (!ts.done()) {
    std::string kw = ts.next("keyword");
    if (kw == "nodes") {
      net.roles.n = ts.next_int("node count");
      have_nodes = true;
    } else if (kw == "relays") {
      while (ts.peek_is_number()) net.roles.relays.push_back(ts.next_int("relay"));
    } else if (kw == "receivers") {
      have_receivers = true;
      while (ts.peek_is_number()) receivers_claimed.push_back(ts.next_int("receiver"));
    } else if (kw == "feedback_rate") {
      int node = ts.next_int("feedback node");
      double rate = ts.next_double("feedback rate");
      net.roles.feedback_rates[node] = rate;
    } else if (kw == "input_alphabets") {
      if (!have_nodes) throw ValidationError(path + ": nodes must precede input_alphabets");
      for (int k = 0; k < net.roles.n; ++k)
        net.in_size.push_back(ts.next_int("input alphabet size"));
      have_in = true;
    } else if (kw == "output_alphabets") {
      if (!have_nodes) throw ValidationError(path + ": nodes must precede output_alphabets");
      for (int k = 0; k < net.roles.n; ++k)
        net.out_size.push_back(ts.next_int("output alphabet size"));
      have_out = true;
    } else if (kw == "channel") {
      if (!have_in || !have_out)
        throw ValidationError(path + ": alphabets must precede channel");
      std::size_t count = net.x_cells() * net.y_cells();
      for (std::size_t i = 0; i < count; ++i)
        net.channel.push_back(ts.next_double("channel probability"));
      have_channel = true;
    } else {
      throw ValidationError(path + ": unknown keyword '" + kw + "'");
    }
  }
  if (!have_nodes || !have_in || !have_out || !have_channel)
    throw ValidationError(path + ": incomplete network description");
  if (have_receivers && receivers_claimed != net.roles.receivers())
    throw ValidationError(path + ": receiver list must equal [2:n] minus relays");
  net.validate();
  return net;
}

void save_network(const DiscreteNetwork& net, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << "nodes " << net.roles.n << "\n";
  out << "relays";
  for (int r : net.roles.relays) out << " " << r;
  out << "\n";
  out << "receivers";
  for (int d : net.roles.receivers()) out << " " << d;
  out << "\n";
  for (const auto& [k, rate] : net.roles.feedback_rates)
    out << "feedback_rate " << k << " " << fmt_double(rate) << "\n";
  out << "input_alphabets";
  for (int s : net.in_size) out << " " << s;
  out << "\n";
  out << "output_alphabets";
  for (int s : net.out_size) out << " " << s;
  out << "\n";
  out << "channel\n";
  write_table(out, net.channel, net.y_cells());
  if (!out) throw ValidationError("failed writing " + path);
}

FactoredDistribution load_factors(const std::string& path) {
  TokenStream ts{tokenize(path), 0, path};
  FactoredDistribution fd;
  while (!ts.done()) {
    std::string kw = ts.next("'factor'");
    if (kw != "factor")
      throw ValidationError(path + ": expected 'factor', got '" + kw + "'");
    Factor f;
    f.target = ts.next("factor name");
    parse_var_name(f.target);  // reject junk early
    f.size = ts.next_int("alphabet size");
    if (f.size < 1)
      throw ValidationError(path + ": factor " + f.target + " has alphabet size " +
                            std::to_string(f.size));
    if (ts.next("'|'") != "|")
      throw ValidationError(path + ": expected '|' after factor size");
    for (std::string t = ts.next("given name or ':'"); t != ":";
         t = ts.next("given name or ':'")) {
      parse_var_name(t);
      f.given.push_back(t);
    }
    while (!ts.done() && ts.peek() != "factor")
      f.table.push_back(ts.next_double("probability"));
    if (f.table.empty() ||
        f.table.size() % static_cast<std::size_t>(f.size) != 0)
      throw ValidationError(path + ": factor " + f.target + " table has " +
                            std::to_string(f.table.size()) +
                            " entries, not a positive multiple of its size");
    fd.factors.push_back(std::move(f));
  }
  return fd;
}

void save_factors(const FactoredDistribution& fd, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  for (const auto& f : fd.factors) {
    out << "factor " << f.target << " " << f.size << " |";
    for (const auto& g : f.given) out << " " << g;
    out << " :\n";
    write_table(out, f.table, static_cast<std::size_t>(f.size));
  }
  if (!out) throw ValidationError("failed writing " + path);
}

}  // namespace ratelab
