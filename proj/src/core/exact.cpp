// Copyright (c) 2026 The conslaw authors.
// SPDX-License-Identifier: Apache-2.0

#include "exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "parallel.hpp"

namespace conslaw {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// 5-point Gauss-Legendre rule on [-1, 1].
constexpr double kGaussNode[5] = {-0.90617984593866396, -0.53846931010568311, 0.0,
                                  0.53846931010568311, 0.90617984593866396};
constexpr double kGaussWeight[5] = {0.23692688505618909, 0.47862867049936647,
                                    0.56888888888888889, 0.47862867049936647,
                                    0.23692688505618909};
}  // namespace

void PiecewiseConstantIC::validate(double u_max) const {
  if (breakpoints.size() != values.size() + 1 || values.empty())
    throw ConfigError("PiecewiseConstantIC: need n+1 breakpoints for n >= 1 values");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (!(breakpoints[i] < breakpoints[i + 1]))
      throw ConfigError("PiecewiseConstantIC: breakpoints must be strictly increasing");
  for (double v : values)
    if (!(v >= 0.0 && v <= u_max))
      throw DomainError("PiecewiseConstantIC: value outside [0, u_max]");
}

double PiecewiseConstantIC::value_at(double x) const {
  if (x < breakpoints.front() || x >= breakpoints.back())
    throw DomainError("PiecewiseConstantIC: x outside the covered domain");
  const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - breakpoints.begin()) - 1;
  return values[std::min(i, values.size() - 1)];
}

PiecewiseConstantIC PiecewiseConstantIC::from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("IC JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("breakpoints") || !j.contains("values"))
    throw ConfigError("IC JSON: expected {\"breakpoints\": [...], \"values\": [...]}");
  PiecewiseConstantIC ic;
  ic.breakpoints = j.at("breakpoints").get<std::vector<double>>();
  ic.values = j.at("values").get<std::vector<double>>();
  if (ic.breakpoints.size() != ic.values.size() + 1 || ic.values.empty())
    throw ConfigError("IC JSON: need n+1 breakpoints for n >= 1 values");
  return ic;
}

std::string PiecewiseConstantIC::to_json() const {
  return nlohmann::json{{"breakpoints", breakpoints}, {"values", values}}.dump();
}

double riemann_solution(const FluxModel& model, double rho_left, double rho_right, double x0,
                        double t, double x) {
  if (!(t > 0.0)) throw DomainError("riemann_solution: t must be > 0");
  if (rho_left == rho_right) return rho_left;
  const double xi = (x - x0) / t;

  if (model.family() == FluxFamily::Burgers) {
    if (rho_left > rho_right) {  // shock
      const double s =
          (model.flux_value(rho_right) - model.flux_value(rho_left)) / (rho_right - rho_left);
      return xi < s ? rho_left : rho_right;
    }
    // rarefaction: f'(u) = u, fan value is xi clamped between the states
    return std::clamp(xi, rho_left, rho_right);
  }

  if (rho_left < rho_right) {  // LWR shock (density increases across the jump)
    const double s =
        (model.flux_value(rho_right) - model.flux_value(rho_left)) / (rho_right - rho_left);
    return xi < s ? rho_left : rho_right;
  }
  // Rarefaction. The conjugate argmax is (f')^{-1}; clamping to [rho_right,
  // rho_left] reproduces the constant edge states, including at flux kinks.
  return std::clamp(model.conjugate_argmax(xi), rho_right, rho_left);
}

LaxHopfSolver::LaxHopfSolver(const FluxModel& model, PiecewiseConstantIC ic)
    : model_(model), breaks_(std::move(ic.breakpoints)), seg_values_(std::move(ic.values)) {
  if (breaks_.size() != seg_values_.size() + 1 || seg_values_.empty())
    throw ConfigError("LaxHopfSolver: malformed IC");
  u_max_ = model_.u_max();
  reflected_ = model_.family() == FluxFamily::Burgers;
  for (double v : seg_values_)
    if (!(v >= 0.0 && v <= u_max_)) throw DomainError("LaxHopfSolver: IC value outside [0, u_max]");
  if (reflected_)
    for (double& v : seg_values_) v = u_max_ - v;
  bounds_ = reflected_ ? WaveSpeedBounds{0.0, u_max_} : model_.wave_speed_bounds();

  offsets_.resize(seg_values_.size());
  double integral = 0.0;  // running integral of the effective density from the left edge
  for (std::size_t i = 0; i < seg_values_.size(); ++i) {
    offsets_[i] = seg_values_[i] * breaks_[i] - integral;
    integral += (breaks_[i + 1] - breaks_[i]) * seg_values_[i];
  }
}

double LaxHopfSolver::flux(double rho) const {
  if (reflected_) return u_max_ * rho - 0.5 * rho * rho;
  return model_.flux_value(rho);
}

double LaxHopfSolver::flux_prime(double rho) const {
  if (reflected_) return u_max_ - rho;
  return model_.flux_derivative(rho, Side::Left);
}

double LaxHopfSolver::conj_argmax(double u) const {
  if (reflected_) return std::clamp(u_max_ - u, 0.0, u_max_);
  return model_.conjugate_argmax(u, Side::Left);
}

double LaxHopfSolver::legendre(double u) const {
  const double r = conj_argmax(u);
  return flux(r) - u * r;
}

std::optional<LaxHopfSolver::Component> LaxHopfSolver::component(int i, double t, double x) const {
  if (i < 0 || i >= n_segments()) throw ConfigError("LaxHopfSolver: segment index out of range");
  if (!(t > 0.0)) throw DomainError("LaxHopfSolver::component: t must be > 0");
  const double xl = breaks_[i];
  const double xr = breaks_[i + 1];
  // Influence cone of the segment; the printed inequality in the source
  // formula is sign-ambiguous for w < 0, we use [x_i + t*w, x_{i+1} + t*v].
  if (x < xl + t * bounds_.min_speed || x > xr + t * bounds_.max_speed) return std::nullopt;

  const double rho0 = seg_values_[i];
  const double b = offsets_[i];
  const double fp = flux_prime(rho0);
  Component out{};
  if (x < xl + t * fp) {  // fan emanating from the left endpoint
    const double u = (x - xl) / t;
    out.moskowitz = t * legendre(u) - rho0 * xl + b;
    out.density = conj_argmax(u);
  } else if (x <= xr + t * fp) {  // affine transport of the segment data
    out.moskowitz = t * flux(rho0) - rho0 * x + b;
    out.density = rho0;
  } else {  // fan emanating from the right endpoint
    const double u = (x - xr) / t;
    out.moskowitz = t * legendre(u) - rho0 * xr + b;
    out.density = conj_argmax(u);
  }
  return out;
}

double LaxHopfSolver::density_at(double t, double x) const {
  if (t < 0.0) throw DomainError("LaxHopfSolver: t must be >= 0");
  if (t == 0.0) {
    if (x < breaks_.front() || x >= breaks_.back())
      throw DomainError("LaxHopfSolver: x outside the IC domain; widen the initial condition");
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    const std::size_t i =
        std::min(static_cast<std::size_t>(it - breaks_.begin()) - 1, seg_values_.size() - 1);
    return reflected_ ? u_max_ - seg_values_[i] : seg_values_[i];
  }

  // Index bounds of the segments whose influence cones cover x.
  const int n = n_segments();
  int j_lo = 0;
  if (std::isfinite(bounds_.max_speed)) {
    const double reach = x - bounds_.max_speed * t;
    // smallest i with x_{i+1} >= reach
    const auto it = std::lower_bound(breaks_.begin() + 1, breaks_.end(), reach);
    j_lo = static_cast<int>(it - breaks_.begin()) - 1;
    if (j_lo < 0) j_lo = 0;
  }
  const double reach_up = x - bounds_.min_speed * t;
  const auto itu = std::upper_bound(breaks_.begin(), breaks_.end(), reach_up);
  int j_hi = static_cast<int>(itu - breaks_.begin()) - 1;
  if (j_hi > n - 1) j_hi = n - 1;

  if (j_lo >= n || j_hi < 0 || j_lo > j_hi)
    throw DomainError("LaxHopfSolver: point outside the covered cone; widen the initial condition");

  double best = kInf;
  double rho = 0.0;
  bool found = false;
  for (int i = j_lo; i <= j_hi; ++i) {
    const auto c = component(i, t, x);
    if (!c) continue;
    // <= prefers the later segment on exact ties, matching the right-state
    // convention on shock lines.
    if (c->moskowitz <= best) {
      best = c->moskowitz;
      rho = c->density;
      found = true;
    }
  }
  if (!found)
    throw DomainError("LaxHopfSolver: point outside the covered cone; widen the initial condition");
  return reflected_ ? u_max_ - rho : rho;
}

double lax_hopf_point(const FluxModel& model, const PiecewiseConstantIC& ic, double t, double x) {
  return LaxHopfSolver(model, ic).density_at(t, x);
}

std::optional<LaxHopfSolver::Component> moskowitz_component(const FluxModel& model, int segment,
                                                            const PiecewiseConstantIC& ic,
                                                            double t, double x) {
  if (model.family() == FluxFamily::Burgers)
    throw DomainError(
        "moskowitz_component: Burgers has no concave Moskowitz potential; use lax_hopf_point");
  return LaxHopfSolver(model, ic).component(segment, t, x);
}

ExactSolution exact_grid(const FluxModel& model, const PiecewiseConstantIC& ic,
                         const Discretization& disc, double window_left, int ghost_width) {
  if (ghost_width < 0) throw ConfigError("exact_grid: ghost_width must be >= 0");
  ic.validate(model.u_max());

  const double horizon = disc.horizon();
  const WaveSpeedBounds bounds =
      model.family() == FluxFamily::Burgers ? WaveSpeedBounds{0.0, model.u_max()}
                                            : model.wave_speed_bounds();
  const double margin = (ghost_width + 1) * disc.dx;
  const double need_left = window_left - bounds.max_speed * horizon - margin;
  const double need_right =
      window_left + disc.n_cells * disc.dx - std::min(bounds.min_speed, 0.0) * horizon + margin;

  PiecewiseConstantIC ext = ic;
  if (ext.breakpoints.front() > need_left) {
    ext.breakpoints.insert(ext.breakpoints.begin(), need_left);
    ext.values.insert(ext.values.begin(), ext.values.front());
  }
  if (ext.breakpoints.back() < need_right) {
    ext.breakpoints.push_back(need_right);
    ext.values.push_back(ext.values.back());
  }

  const LaxHopfSolver solver(model, ext);

  SolutionGrid grid(disc);
  BoundaryTrace trace(ghost_width, disc.n_steps);

  // Row 0 plus its ghosts: analytic projection of the (extended) IC.
  {
    const Discretization wide = Discretization::create(
        disc.dx, disc.dt, disc.n_cells + 2 * ghost_width, disc.n_steps,
        window_left - ghost_width * disc.dx);
    const auto row0 =
        cell_average_project(ext.breakpoints, ext.values, wide, wide.x_origin);
    std::copy(row0.begin() + ghost_width, row0.begin() + ghost_width + disc.n_cells,
              grid.row(0).begin());
    if (ghost_width > 0 && disc.n_steps > 0) {
      std::copy(row0.begin(), row0.begin() + ghost_width, trace.left_at(0).begin());
      std::copy(row0.end() - ghost_width, row0.end(), trace.right_at(0).begin());
    }
  }

  // Later rows: 5-point Gauss-Legendre cell averages of the point solution.
  parallel_for(static_cast<std::size_t>(disc.n_steps), [&](std::size_t step) {
    const int n = static_cast<int>(step) + 1;
    const double t = n * disc.dt;
    auto cell_average = [&](double left_edge) {
      double acc = 0.0;
      for (int q = 0; q < 5; ++q)
        acc += kGaussWeight[q] * solver.density_at(t, left_edge + 0.5 * disc.dx * (1.0 + kGaussNode[q]));
      return 0.5 * acc;
    };
    auto row = grid.row(n);
    for (int j = 0; j < disc.n_cells; ++j) row[j] = cell_average(window_left + j * disc.dx);
    if (n < disc.n_steps && ghost_width > 0) {
      auto gl = trace.left_at(n);
      auto gr = trace.right_at(n);
      for (int k = 0; k < ghost_width; ++k) {
        gl[k] = cell_average(window_left - (ghost_width - k) * disc.dx);
        gr[k] = cell_average(window_left + (disc.n_cells + k) * disc.dx);
      }
    }
  });

  return {std::move(grid), std::move(trace)};
}

}  // namespace conslaw
