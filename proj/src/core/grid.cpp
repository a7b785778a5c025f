// Copyright (c) 2026 The conslaw authors.
// SPDX-License-Identifier: Apache-2.0

#include "grid.hpp"

#include <algorithm>
#include <cmath>

namespace conslaw {

Discretization Discretization::create(double dx, double dt, int n_cells, int n_steps,
                                      double x_origin) {
  Discretization d;
  d.dx = dx;
  d.dt = dt;
  d.n_cells = n_cells;
  d.n_steps = n_steps;
  d.x_origin = x_origin;
  d.cfl_ratio = dt / dx;
  d.validate();
  return d;
}

void Discretization::validate() const {
  if (!(dx > 0.0)) throw ConfigError("Discretization: dx must be > 0");
  if (!(dt > 0.0)) throw ConfigError("Discretization: dt must be > 0");
  if (n_cells < 1) throw ConfigError("Discretization: n_cells must be >= 1");
  if (n_steps < 0) throw ConfigError("Discretization: n_steps must be >= 0");
  const double ratio = dt / dx;
  if (std::abs(cfl_ratio - ratio) > 1e-15 * std::abs(ratio))
    throw ConfigError("Discretization: cfl_ratio disagrees with dt/dx");
}

void BoundaryTrace::validate(double u_max) const {
  if (left.size() != static_cast<std::size_t>(width) * n_steps ||
      right.size() != static_cast<std::size_t>(width) * n_steps)
    throw ConfigError("BoundaryTrace: storage does not match width * n_steps");
  for (double v : left)
    if (!(v >= 0.0 && v <= u_max)) throw DomainError("BoundaryTrace: left value outside [0, u_max]");
  for (double v : right)
    if (!(v >= 0.0 && v <= u_max)) throw DomainError("BoundaryTrace: right value outside [0, u_max]");
}

BoundaryTrace BoundaryTrace::constant(int width, int n_steps, double left_value,
                                      double right_value) {
  BoundaryTrace tr(width, n_steps);
  std::fill(tr.left.begin(), tr.left.end(), left_value);
  std::fill(tr.right.begin(), tr.right.end(), right_value);
  return tr;
}

std::vector<double> cell_average_project(std::span<const double> breakpoints,
                                         std::span<const double> values,
                                         const Discretization& disc, double domain_left) {
  if (breakpoints.size() != values.size() + 1 || values.empty())
    throw ConfigError("cell_average_project: need n+1 breakpoints for n values");
  const double window_right = domain_left + disc.n_cells * disc.dx;
  if (breakpoints.front() > domain_left + 1e-12 * disc.dx ||
      breakpoints.back() < window_right - 1e-12 * disc.dx)
    throw DomainError("cell_average_project: profile does not cover the window");

  std::vector<double> out(disc.n_cells, 0.0);
  // Sweep segments once; both cell edges and breakpoints are sorted.
  std::size_t seg = 0;
  for (int j = 0; j < disc.n_cells; ++j) {
    const double lo = domain_left + j * disc.dx;
    const double hi = lo + disc.dx;
    while (seg + 1 < values.size() && breakpoints[seg + 1] <= lo) ++seg;
    double acc = 0.0;
    std::size_t s = seg;
    double cursor = lo;
    while (cursor < hi) {
      const double seg_end = (s + 1 < breakpoints.size()) ? breakpoints[s + 1] : hi;
      const double upto = std::min(hi, std::max(seg_end, cursor));
      acc += values[std::min(s, values.size() - 1)] * (upto - cursor);
      cursor = upto;
      if (cursor < hi) ++s;
    }
    out[j] = acc / disc.dx;
  }
  return out;
}

double total_mass(std::span<const double> field, double dx) {
  double sum = 0.0;
  for (double v : field) sum += v;
  return dx * sum;
}

double total_variation(std::span<const double> field) {
  double tv = 0.0;
  for (std::size_t j = 0; j + 1 < field.size(); ++j) tv += std::abs(field[j + 1] - field[j]);
  return tv;
}

}  // namespace conslaw
