#include "ratelab/table1.hpp"

#include <cstdio>

namespace ratelab {

const std::vector<Table1Row>& table1_reference() {
  static const std::vector<Table1Row> ref = {
      {0.73, 1.6908, 1.6881, 1.6927, 1.7069, 1.6996},
      {0.74, 1.6971, 1.6703, 1.6971, 1.7111, 1.7032},
      {0.75, 1.7033, 1.6529, 1.7033, 1.7153, 1.7077},
      {0.76, 1.7094, 1.6358, 1.7094, 1.7195, 1.7129},
  };
  return ref;
}

Table1Row compute_table1_row(double d, const LayeredSearch& search) {
  GaussianRelayParams p = GaussianRelayParams::line_geometry(d);
  Table1Row row;
  row.d = d;
  row.nnc = eval_nnc_gauss(p);
  row.ddf = eval_ddf_gauss(p).rate;
  row.ce = eval_ce(p, search).rate;
  row.pro1 = eval_pro1(p, search).rate;
  row.pro2 = eval_pro2(p, search).rate;
  return row;
}

Table1Row compute_table1_row(double d, bool parallel) {
  return compute_table1_row(d, LayeredSearch{parallel});
}

std::string format_table1_csv(const std::vector<Table1Row>& rows) {
  std::string out = "d,R_NNC,R_DDF,R_CE,R_Pro1,R_Pro2\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n", r.d,
                  r.nnc, r.ddf, r.ce, r.pro1, r.pro2);
    out += buf;
  }
  return out;
}

}  // namespace ratelab
