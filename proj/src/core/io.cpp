// Copyright (c) 2026 The conslaw authors.
// SPDX-License-Identifier: Apache-2.0

#include "io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace conslaw {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

// Parses "key=value" tokens from a "# ..." header line.
double header_value(const std::string& line, const std::string& key) {
  const std::string needle = key + "=";
  const auto pos = line.find(needle);
  if (pos == std::string::npos) throw ConfigError("CSV header: missing " + key);
  return std::strtod(line.c_str() + pos + needle.size(), nullptr);
}

std::vector<double> parse_row(const std::string& line) {
  std::vector<double> out;
  const char* p = line.c_str();
  char* end = nullptr;
  while (*p) {
    const double v = std::strtod(p, &end);
    if (end == p) break;
    out.push_back(v);
    p = end;
    while (*p == ',' || *p == ' ' || *p == '\t') ++p;
  }
  return out;
}

}  // namespace

std::string grid_to_csv(const SolutionGrid& grid) {
  std::string out;
  out += "# dx=" + format_g17(grid.disc.dx) + " dt=" + format_g17(grid.disc.dt) +
         " n_cells=" + std::to_string(grid.disc.n_cells) +
         " n_steps=" + std::to_string(grid.disc.n_steps) +
         " x_origin=" + format_g17(grid.disc.x_origin) + "\n";
  for (int n = 0; n < grid.n_rows(); ++n) {
    const auto r = grid.row(n);
    for (int j = 0; j < grid.disc.n_cells; ++j) {
      if (j) out += ',';
      out += format_g17(r[j]);
    }
    out += '\n';
  }
  return out;
}

SolutionGrid grid_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.empty() || line[0] != '#')
    throw ConfigError("grid CSV: missing header line");
  const double dx = header_value(line, "dx");
  const double dt = header_value(line, "dt");
  const int n_cells = static_cast<int>(header_value(line, "n_cells"));
  const int n_steps = static_cast<int>(header_value(line, "n_steps"));
  const double x_origin = header_value(line, "x_origin");
  SolutionGrid grid(Discretization::create(dx, dt, n_cells, n_steps, x_origin));
  int n = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (n > n_steps) throw ConfigError("grid CSV: more rows than n_steps+1");
    const auto row = parse_row(line);
    if (static_cast<int>(row.size()) != n_cells)
      throw ConfigError("grid CSV: row " + std::to_string(n) + " has wrong width");
    std::copy(row.begin(), row.end(), grid.row(n).begin());
    ++n;
  }
  if (n != n_steps + 1) throw ConfigError("grid CSV: expected n_steps+1 rows");
  return grid;
}

std::string trace_to_csv(const BoundaryTrace& trace) {
  std::string out =
      "# n_steps=" + std::to_string(trace.n_steps) + " width=" + std::to_string(trace.width) + "\n";
  for (int n = 0; n < trace.n_steps; ++n) {
    const auto l = trace.left_at(n);
    const auto r = trace.right_at(n);
    for (int k = 0; k < trace.width; ++k) {
      if (k) out += ',';
      out += format_g17(l[k]);
    }
    for (int k = 0; k < trace.width; ++k) {
      out += ',';
      out += format_g17(r[k]);
    }
    out += '\n';
  }
  return out;
}

BoundaryTrace trace_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.empty() || line[0] != '#')
    throw ConfigError("trace CSV: missing header line");
  const int n_steps = static_cast<int>(header_value(line, "n_steps"));
  const int width = static_cast<int>(header_value(line, "width"));
  BoundaryTrace trace(width, n_steps);
  int n = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (n >= n_steps) throw ConfigError("trace CSV: more rows than n_steps");
    const auto row = parse_row(line);
    if (static_cast<int>(row.size()) != 2 * width)
      throw ConfigError("trace CSV: row " + std::to_string(n) + " has wrong width");
    std::copy(row.begin(), row.begin() + width, trace.left_at(n).begin());
    std::copy(row.begin() + width, row.end(), trace.right_at(n).begin());
    ++n;
  }
  if (n != n_steps) throw ConfigError("trace CSV: expected n_steps rows");
  return trace;
}

void save_grid_pgm(const SolutionGrid& grid, double u_max, const std::string& path) {
  if (!(u_max > 0.0)) throw ConfigError("save_grid_pgm: u_max must be > 0");
  std::string out = "P5\n" + std::to_string(grid.disc.n_cells) + " " +
                    std::to_string(grid.n_rows()) + "\n255\n";
  out.reserve(out.size() + grid.values.size());
  for (double v : grid.values) {
    const double t = std::clamp(v / u_max, 0.0, 1.0);
    out.push_back(static_cast<char>(static_cast<unsigned char>(std::lround(t * 255.0))));
  }
  write_text_file(path, out);

  nlohmann::json axes{{"dx", grid.disc.dx},
                      {"dt", grid.disc.dt},
                      {"n_cells", grid.disc.n_cells},
                      {"n_steps", grid.disc.n_steps},
                      {"x_origin", grid.disc.x_origin},
                      {"u_max", u_max},
                      {"rows", "timesteps, top row is t=0"},
                      {"columns", "cells, left column is x_origin"}};
  write_text_file(path + ".json", axes.dump(2) + "\n");
}

void save_grid_csv(const SolutionGrid& grid, const std::string& path) {
  write_text_file(path, grid_to_csv(grid));
}

SolutionGrid load_grid_csv(const std::string& path) { return grid_from_csv(read_text_file(path)); }

void save_trace_csv(const BoundaryTrace& trace, const std::string& path) {
  write_text_file(path, trace_to_csv(trace));
}

BoundaryTrace load_trace_csv(const std::string& path) {
  return trace_from_csv(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write file: " + path);
  out << content;
  if (!out) throw ConfigError("write failed: " + path);
}

}  // namespace conslaw
