#include "hyct/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace hyct {

std::string format_g17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string join_csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  out += '\n';
  return out;
}

namespace {

std::ofstream open_or_throw(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  return os;
}

}  // namespace

void write_state_csv(const StateField& state, const std::string& path) {
  std::ofstream os = open_or_throw(path);
  std::vector<std::string> header{"x"};
  for (int i = 0; i < state.n; ++i) header.push_back("w" + std::to_string(i + 1));
  os << join_csv_row(header);
  for (int j = 0; j <= state.nx; ++j) {
    std::vector<std::string> row{format_g17(static_cast<double>(j) / state.nx)};
    for (int i = 0; i < state.n; ++i) row.push_back(format_g17(state.at(i, j)));
    os << join_csv_row(row);
  }
}

void write_control_csv(const ControlSignal& control, const std::string& path) {
  std::ofstream os = open_or_throw(path);
  std::vector<std::string> header{"t"};
  for (int q = 0; q < control.m; ++q) header.push_back("W" + std::to_string(q + 1));
  os << join_csv_row(header);
  for (int l = 0; l <= control.nt; ++l) {
    std::vector<std::string> row{
        format_g17(control.horizon * static_cast<double>(l) / control.nt)};
    for (int q = 0; q < control.m; ++q) row.push_back(format_g17(control.at(q, l)));
    os << join_csv_row(row);
  }
}

void write_trajectory_csv(const Trajectory& trajectory, const std::string& path) {
  std::ofstream os = open_or_throw(path);
  os << join_csv_row({"t", "x", "component", "value"});
  for (const StateField& frame : trajectory.frames)
    for (int i = 0; i < frame.n; ++i)
      for (int j = 0; j <= frame.nx; ++j)
        os << join_csv_row({format_g17(frame.time), format_g17(static_cast<double>(j) / frame.nx),
                            std::to_string(i + 1), format_g17(frame.at(i, j))});
}

}  // namespace hyct
