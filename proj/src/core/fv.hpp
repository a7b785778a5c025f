// Copyright (c) 2026 The conslaw authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <span>
#include <string>
#include <vector>

#include "flux_models.hpp"
#include "grid.hpp"

namespace conslaw {

enum class Scheme { Godunov, LaxFriedrichs, EngquistOsher, ENO3, WENO5 };
enum class LxfSpeedMode { GlobalSup, MeshRatio };
enum class ClipMode { None, Box };

Scheme scheme_from_name(const std::string& name);  // godunov|lxf|eo|eno3|weno5
const char* scheme_name(Scheme scheme);

struct NumericalFluxSpec {
  Scheme scheme = Scheme::Godunov;
  FluxModel model;
  LxfSpeedMode lxf_speed_mode = LxfSpeedMode::GlobalSup;

  explicit NumericalFluxSpec(FluxModel m, Scheme s = Scheme::Godunov,
                             LxfSpeedMode mode = LxfSpeedMode::GlobalSup)
      : scheme(s), model(std::move(m)), lxf_speed_mode(mode) {}

  int ghost_need() const { return (scheme == Scheme::ENO3 || scheme == Scheme::WENO5) ? 3 : 1; }
  bool uses_rk3() const { return scheme == Scheme::ENO3 || scheme == Scheme::WENO5; }
  double lxf_speed(const Discretization& disc) const;
};

double godunov_flux(const FluxModel& model, double u_left, double u_right);
double engquist_osher_flux(const FluxModel& model, double u_left, double u_right);
// speed c is sup|f'| (GlobalSup) or dx/dt (MeshRatio); see lxf_speed().
double lax_friedrichs_flux(const FluxModel& model, double speed, double u_left, double u_right);
double lax_friedrichs_flux(const NumericalFluxSpec& spec, const Discretization& disc,
                           double u_left, double u_right);

// Numerical Lipschitz constant of the Lax-Friedrichs flux on [0,u_max]^2
// (diagnostic; sampled max l1 gradient).
double lxf_lipschitz_diagnostic(const FluxModel& model, double speed, int samples = 256);

// Fifth-order weighted reconstruction from the 6-cell window around an
// interface (cells j-2..j+3 for interface j+1/2). Returns the left- and
// right-biased interface values.
struct InterfaceStates {
  double left = 0.0;
  double right = 0.0;
};
InterfaceStates weno5_interface_states(std::span<const double> window6);
// Third-order reconstruction choosing one stencil by hierarchically smallest
// divided differences.
InterfaceStates eno3_interface_states(std::span<const double> window6);

// Per-step conservation bookkeeping. For the RK3 schemes the boundary fluxes
// and clip deltas are the stage combination actually applied to the state.
struct StepLedger {
  double mass_before = 0.0;
  double mass_after = 0.0;
  double flux_left = 0.0;   // time-averaged boundary flux at the left edge
  double flux_right = 0.0;  // and at the right edge
  double clip_mass = 0.0;   // mass added by clipping, dx * sum(post - pre)
};

// One forward-Euler step of the conservative update with an arbitrary
// pairwise flux. Ghost values are single cells on each side. Records the
// boundary fluxes and the clip mass delta (in units of the state, not dx).
template <class FluxFn>
void pairwise_euler_step(std::span<const double> state, FluxFn&& flux, double ghost_left,
                         double ghost_right, double lambda, ClipMode clip, double u_max,
                         std::span<double> out, double* flux_left = nullptr,
                         double* flux_right = nullptr, double* clip_sum = nullptr) {
  const int n = static_cast<int>(state.size());
  double f_prev = flux(ghost_left, state[0]);
  if (flux_left) *flux_left = f_prev;
  double clip_acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const double f_next = (j + 1 < n) ? flux(state[j], state[j + 1]) : flux(state[j], ghost_right);
    double v = state[j] + lambda * (f_prev - f_next);
    if (clip == ClipMode::Box) {
      const double clipped = std::clamp(v, 0.0, u_max);
      clip_acc += clipped - v;
      v = clipped;
    }
    out[j] = v;
    f_prev = f_next;
  }
  if (flux_right) *flux_right = f_prev;
  if (clip_sum) *clip_sum = clip_acc;
}

// One forward-Euler step of the selected scheme. First-order fluxes act on
// neighbor cells; ENO3/WENO5 reconstruct interface states and feed them to
// the Godunov flux. Ghost spans must provide ghost_need() cells per side in
// left-to-right order. CFL is checked: warn at the boundary, fail above
// 1 + 1e-9.
std::vector<double> fv_step(std::span<const double> state, const NumericalFluxSpec& spec,
                            std::span<const double> ghosts_left,
                            std::span<const double> ghosts_right, const Discretization& disc,
                            ClipMode clip, StepLedger* ledger = nullptr,
                            bool* cfl_warning = nullptr);

struct RolloutResult {
  SolutionGrid grid;
  std::vector<StepLedger> ledger;
  bool cfl_warning = false;
};

// Autoregressive rollout: row 0 is the initial field, each later row is one
// step. First-order schemes advance with forward Euler; ENO3/WENO5 use SSP-RK3
// with the same ghost values for all three stages of a step.
RolloutResult fv_rollout(std::span<const double> ic_field, const NumericalFluxSpec& spec,
                         const BoundaryTrace& trace, const Discretization& disc, ClipMode clip);

}  // namespace conslaw
