// Copyright (c) 2026 The conslaw authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flux_models.hpp"
#include "grid.hpp"

namespace conslaw {

// Piecewise-constant initial condition: values[i] holds on
// [breakpoints[i], breakpoints[i+1]).
struct PiecewiseConstantIC {
  std::vector<double> breakpoints;
  std::vector<double> values;

  void validate(double u_max) const;
  double value_at(double x) const;
  double domain_left() const { return breakpoints.front(); }
  double domain_right() const { return breakpoints.back(); }

  static PiecewiseConstantIC from_json(const std::string& json_text);
  std::string to_json() const;
};

// Entropy solution of a single Riemann problem with jump at x0, evaluated at
// (t, x). Exactly on a shock line the right state is returned. For Burgers the
// shock / rarefaction roles are swapped relative to the concave LWR families.
double riemann_solution(const FluxModel& model, double rho_left, double rho_right, double x0,
                        double t, double x);

// Exact solver for piecewise-constant initial data. The solution at (t, x) is
// the density of the minimizing per-segment Moskowitz component. Burgers is
// handled by reflecting the density (u -> u_max - u), which turns the convex
// flux into a concave one; callers see the original variables.
class LaxHopfSolver {
 public:
  LaxHopfSolver(const FluxModel& model, PiecewiseConstantIC ic);

  double density_at(double t, double x) const;

  struct Component {
    double moskowitz;
    double density;
  };
  // Component i of the (possibly reflected) concave problem; empty when x
  // falls outside the segment's influence cone [x_i + t*w, x_{i+1} + t*v_max].
  std::optional<Component> component(int i, double t, double x) const;

  int n_segments() const { return static_cast<int>(seg_values_.size()); }
  bool reflected() const { return reflected_; }

 private:
  double flux(double rho) const;
  double flux_prime(double rho) const;
  double conj_argmax(double u) const;
  double legendre(double u) const;

  const FluxModel model_;
  bool reflected_ = false;
  double u_max_ = 0.0;
  WaveSpeedBounds bounds_{};
  std::vector<double> breaks_;
  std::vector<double> seg_values_;  // effective (reflected for Burgers) densities
  std::vector<double> offsets_;     // b_i, keeps the initial Moskowitz data continuous
};

// Lax-Hopf point evaluation (convenience wrapper over LaxHopfSolver).
double lax_hopf_point(const FluxModel& model, const PiecewiseConstantIC& ic, double t, double x);

// Moskowitz component of the paper's three-branch formula. Concave families
// only; Burgers has no concave Moskowitz potential in the original variables.
std::optional<LaxHopfSolver::Component> moskowitz_component(const FluxModel& model, int segment,
                                                            const PiecewiseConstantIC& ic,
                                                            double t, double x);

struct ExactSolution {
  SolutionGrid grid;
  BoundaryTrace trace;
};

// Cell-averaged exact solution on the window [window_left, window_left +
// n_cells*dx] plus the ghost-cell trace of the requested width. Row 0 is the
// analytic projection of the IC; later rows use a 5-point Gauss-Legendre
// average of lax_hopf_point per cell. The IC is auto-extended with its edge
// values so that boundary data never influences the window.
ExactSolution exact_grid(const FluxModel& model, const PiecewiseConstantIC& ic,
                         const Discretization& disc, double window_left, int ghost_width = 1);

}  // namespace conslaw
