#pragma once

#include <string>

#include "ratelab/network.hpp"

namespace ratelab {

// Plain-text formats.  Tokens are whitespace-separated; '#' starts a comment
// running to end of line.  Writers emit doubles with enough digits (%.17g)
// that load -> save -> load -> save reproduces a byte-identical file.
//
// Network file:
//   nodes <n>
//   relays <k> ...                 # terminated by the next keyword
//   receivers <k> ...              # optional; must equal [2:n] \ relays
//   feedback_rate <node> <rate|inf>
//   input_alphabets <n ints>
//   output_alphabets <n ints>
//   channel <x_cells*y_cells doubles>   # alphabets must come first
//
// Factors file (definition order is evaluation order):
//   factor <name> <size> | <given names...> : <table doubles...>

DiscreteNetwork load_network(const std::string& path);
void save_network(const DiscreteNetwork& net, const std::string& path);

FactoredDistribution load_factors(const std::string& path);
void save_factors(const FactoredDistribution& fd, const std::string& path);

}  // namespace ratelab
