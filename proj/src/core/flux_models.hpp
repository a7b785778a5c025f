// Copyright (c) 2026 The conslaw authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "common.hpp"

namespace conslaw {

enum class FluxFamily {
  Greenshields,
  TriangularSym,
  TriangularSkw,
  Trapezoidal,
  Greenberg,
  Underwood,
  Burgers,
};

const char* family_name(FluxFamily family);
FluxFamily family_from_name(const std::string& name);

// One-sided evaluation at kinks of the piecewise-linear families. A
// deterministic choice here keeps Godunov / Riemann case logic reproducible.
enum class Side { Left, Right };

struct WaveSpeedBounds {
  double min_speed = 0.0;  // backward wave speed (w, <= 0 for the LWR families)
  double max_speed = 0.0;  // forward wave speed (may be +inf for Greenberg)
};

// A parametrized physical flux f(rho). All six LWR families map density in
// [0, rho_max] to flow; Burgers uses f(u) = u^2/2 on [0, u_max].
class FluxModel {
 public:
  static FluxModel defaults(FluxFamily family);
  static FluxModel from_json(const std::string& json_text);
  std::string to_json() const;

  FluxFamily family() const { return family_; }

  // Working density bound: rho_max, or the Underwood cap, or Burgers' u_max.
  double u_max() const { return u_max_; }

  double flux_value(double rho) const;
  // Natural extension of the closed form outside [0, u_max]; used by the
  // fundamental-diagram calibration objective, never by the solvers.
  double flux_value_extended(double rho) const;

  double flux_derivative(double rho, Side side = Side::Left) const;

  struct CriticalDensity {
    double lo = 0.0;
    double hi = 0.0;  // lo == hi except for the trapezoidal transition region
  };
  CriticalDensity critical_density() const;

  // Density at which f attains its maximum on [0, u_max]. For the sloped
  // trapezoidal plateau this is rho_c2 (s > 0) or rho_c1 (s <= 0); case logic
  // in Godunov / Engquist-Osher needs the true argmax, not the interval.
  double flux_argmax() const;
  double max_flow() const { return flux_value(flux_argmax()); }

  // sup of |f'| over [lo, hi]. Greenberg's derivative diverges at rho = 0, so
  // queries touching 0 are floored at rho_floor * rho_max (default 1e-3).
  double max_wave_speed(double lo, double hi) const;
  WaveSpeedBounds wave_speed_bounds() const;

  // R(u) = sup_{rho in [0, u_max]} (f(rho) - u * rho), and its derivative
  // R'(u) = -argmax. Closed form for Greenshields / Triangular / Trapezoidal /
  // Burgers; Greenberg and Underwood solve the stationarity condition by
  // bisection to 1e-12.
  double legendre_transform(double u) const;
  double legendre_derivative(double u, Side side = Side::Left) const;
  // The maximizer rho*(u) itself; also serves as (f')^{-1} for rarefactions.
  double conjugate_argmax(double u, Side side = Side::Left) const;

  // Parameters (members are family-dependent; unused ones stay at 0).
  double v_max = 0.0;
  double rho_max = 0.0;
  double w = 0.0;
  double rho_c1 = 0.0;
  double rho_c2 = 0.0;
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double rho_cap = 0.0;    // Underwood working cap
  double rho_floor = 0.0;  // Greenberg wave-speed floor, fraction of rho_max

  double trapezoid_slope() const;  // transition slope s

  void validate() const;

 private:
  explicit FluxModel(FluxFamily family) : family_(family) {}
  void finalize();  // computes u_max_, validates
  void check_domain(double rho) const;

  FluxFamily family_;
  double u_max_ = 0.0;
};

}  // namespace conslaw
