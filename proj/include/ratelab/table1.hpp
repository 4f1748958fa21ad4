#pragma once

#include <string>
#include <vector>

#include "ratelab/bounds_gauss.hpp"

namespace ratelab {

// One row of the relay-on-a-line comparison table: the five lower bounds at
// relay position d (P1 = 5, P2 = 1).
struct Table1Row {
  double d = 0.0;
  double nnc = 0.0, ddf = 0.0, ce = 0.0, pro1 = 0.0, pro2 = 0.0;
};

// Per-column absolute tolerances for matching the reference values.
struct Table1Tolerance {
  double nnc = 1e-4;
  double ddf = 1e-3;
  double ce = 3e-3;
  double pro1 = 5e-3;
  double pro2 = 3e-3;
};

// The published reference values this tool reproduces.
const std::vector<Table1Row>& table1_reference();

Table1Row compute_table1_row(double d, const LayeredSearch& search);
Table1Row compute_table1_row(double d, bool parallel = false);

// CSV with header "d,R_NNC,R_DDF,R_CE,R_Pro1,R_Pro2", %.6f cells, LF endings.
std::string format_table1_csv(const std::vector<Table1Row>& rows);

}  // namespace ratelab
