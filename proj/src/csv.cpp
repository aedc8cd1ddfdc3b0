#include "qfrenet/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace qfrenet {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

namespace {

void append_field(std::string& row, double value) {
  if (!std::isnan(value)) row += format_double(value);
  row += ',';
}

}  // namespace

std::string trajectory_csv(const std::vector<FrenetSample>& samples) {
  std::string out =
      "t,s,v,v_dot,ax,ay,az,kappa2_bloch,kappa2_expect,kappa2_projector,"
      "tau2_expect,tau2_residual\n";
  for (const FrenetSample& sm : samples) {
    std::string row;
    append_field(row, sm.t);
    append_field(row, sm.s);
    append_field(row, sm.v);
    append_field(row, sm.v_dot);
    append_field(row, sm.bloch.x());
    append_field(row, sm.bloch.y());
    append_field(row, sm.bloch.z());
    append_field(row, sm.kappa2_bloch);
    append_field(row, sm.kappa2_expect);
    append_field(row, sm.kappa2_projector);
    append_field(row, sm.tau2_expect);
    append_field(row, sm.tau2_residual);
    row.back() = '\n';  // replace trailing comma
    out += row;
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace qfrenet
