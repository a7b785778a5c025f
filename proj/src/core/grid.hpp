// Copyright (c) 2026 The conslaw authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "common.hpp"

namespace conslaw {

// Uniform space-time mesh. Cell j covers [x_origin + j*dx, x_origin + (j+1)*dx),
// timestep n sits at t = n*dt. cfl_ratio is stored redundantly and must equal
// dt/dx to 1e-15 relative.
struct Discretization {
  double dx = 0.0;
  double dt = 0.0;
  int n_cells = 0;
  int n_steps = 0;
  double x_origin = 0.0;
  double cfl_ratio = 0.0;

  static Discretization create(double dx, double dt, int n_cells, int n_steps,
                               double x_origin = 0.0);
  void validate() const;

  double cell_left(int j) const { return x_origin + j * dx; }
  double cell_center(int j) const { return x_origin + (j + 0.5) * dx; }
  double domain_right() const { return x_origin + n_cells * dx; }
  double horizon() const { return n_steps * dt; }
};

// Dense piecewise-constant solution, row-major by timestep:
// values[n*n_cells + j] is the cell average in cell j at time n*dt.
struct SolutionGrid {
  Discretization disc;
  std::vector<double> values;

  SolutionGrid() = default;
  explicit SolutionGrid(const Discretization& d)
      : disc(d), values(static_cast<std::size_t>(d.n_steps + 1) * d.n_cells, 0.0) {}

  int n_rows() const { return disc.n_steps + 1; }
  std::span<double> row(int n) {
    return {values.data() + static_cast<std::size_t>(n) * disc.n_cells,
            static_cast<std::size_t>(disc.n_cells)};
  }
  std::span<const double> row(int n) const {
    return {values.data() + static_cast<std::size_t>(n) * disc.n_cells,
            static_cast<std::size_t>(disc.n_cells)};
  }
  double at(int n, int j) const { return values[static_cast<std::size_t>(n) * disc.n_cells + j]; }
  double& at(int n, int j) { return values[static_cast<std::size_t>(n) * disc.n_cells + j]; }
};

// Ghost-cell values supplied per timestep, one vector of `width` values per
// side. Entries are stored in left-to-right spatial order on both sides:
//   left_at(n)[k]  is ghost cell  -width+k      (k = width-1 is adjacent to cell 0)
//   right_at(n)[k] is ghost cell  n_cells+k     (k = 0 is adjacent to the last cell)
// Rows exist for steps 0 .. n_steps-1 (the final row never feeds a step).
struct BoundaryTrace {
  int width = 0;
  int n_steps = 0;
  std::vector<double> left;
  std::vector<double> right;

  BoundaryTrace() = default;
  BoundaryTrace(int width_, int n_steps_)
      : width(width_),
        n_steps(n_steps_),
        left(static_cast<std::size_t>(width_) * n_steps_, 0.0),
        right(static_cast<std::size_t>(width_) * n_steps_, 0.0) {}

  std::span<double> left_at(int n) {
    return {left.data() + static_cast<std::size_t>(n) * width, static_cast<std::size_t>(width)};
  }
  std::span<const double> left_at(int n) const {
    return {left.data() + static_cast<std::size_t>(n) * width, static_cast<std::size_t>(width)};
  }
  std::span<double> right_at(int n) {
    return {right.data() + static_cast<std::size_t>(n) * width, static_cast<std::size_t>(width)};
  }
  std::span<const double> right_at(int n) const {
    return {right.data() + static_cast<std::size_t>(n) * width, static_cast<std::size_t>(width)};
  }

  void validate(double u_max) const;

  // Constant-in-time trace built from two fixed ghost vectors (training-style
  // boundary data where waves never reach the domain edge).
  static BoundaryTrace constant(int width, int n_steps, double left_value, double right_value);
};

// Cell averages of a piecewise-constant profile. `breakpoints` has one more
// entry than `values`; value i holds on [breakpoints[i], breakpoints[i+1]).
// The profile must cover the whole window; partial-overlap cells get the
// length-weighted mean, computed analytically.
std::vector<double> cell_average_project(std::span<const double> breakpoints,
                                         std::span<const double> values,
                                         const Discretization& disc, double domain_left);

double total_mass(std::span<const double> field, double dx);

// Discrete total variation, sum of |field[j+1] - field[j]|.
double total_variation(std::span<const double> field);

}  // namespace conslaw
