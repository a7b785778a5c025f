// Copyright (c) 2026 The conslaw authors.
// SPDX-License-Identifier: Apache-2.0

#include "flux_models.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

namespace conslaw {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

const char* family_name(FluxFamily family) {
  switch (family) {
    case FluxFamily::Greenshields: return "greenshields";
    case FluxFamily::TriangularSym: return "triangular_sym";
    case FluxFamily::TriangularSkw: return "triangular_skw";
    case FluxFamily::Trapezoidal: return "trapezoidal";
    case FluxFamily::Greenberg: return "greenberg";
    case FluxFamily::Underwood: return "underwood";
    case FluxFamily::Burgers: return "burgers";
  }
  throw ConfigError("family_name: bad enum value");
}

FluxFamily family_from_name(const std::string& name) {
  for (FluxFamily f : {FluxFamily::Greenshields, FluxFamily::TriangularSym,
                       FluxFamily::TriangularSkw, FluxFamily::Trapezoidal, FluxFamily::Greenberg,
                       FluxFamily::Underwood, FluxFamily::Burgers})
    if (name == family_name(f)) return f;
  throw ConfigError("unknown flux family: " + name);
}

FluxModel FluxModel::defaults(FluxFamily family) {
  FluxModel m(family);
  switch (family) {
    case FluxFamily::Greenshields:
      m.v_max = 1.0;
      m.rho_max = 1.0;
      break;
    case FluxFamily::TriangularSym:
      m.v_max = 1.0;
      m.w = -1.0;
      m.rho_max = 1.0;
      break;
    case FluxFamily::TriangularSkw:
      m.v_max = 2.0;
      m.w = -1.0;
      m.rho_max = 1.0;
      break;
    case FluxFamily::Trapezoidal:
      m.v_max = 1.0;
      m.w = -1.5;
      m.rho_c1 = 0.2;
      m.rho_c2 = 0.8;
      m.rho_max = 1.0;
      break;
    case FluxFamily::Greenberg:
      m.c0 = 2.0;
      m.rho_max = 1.0;
      m.rho_floor = 1e-3;
      break;
    case FluxFamily::Underwood:
      m.c1 = 0.25;
      m.c2 = 1.0;
      m.rho_cap = 1.0;
      m.rho_max = kInf;
      break;
    case FluxFamily::Burgers:
      m.rho_max = 1.0;  // holds u_max for Burgers
      break;
  }
  m.finalize();
  return m;
}

void FluxModel::finalize() {
  u_max_ = (family_ == FluxFamily::Underwood) ? rho_cap : rho_max;
  validate();
}

void FluxModel::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0)) throw ConfigError(std::string("FluxModel: ") + name + " must be > 0");
  };
  switch (family_) {
    case FluxFamily::Greenshields:
      positive(v_max, "v_max");
      positive(rho_max, "rho_max");
      break;
    case FluxFamily::TriangularSym:
    case FluxFamily::TriangularSkw:
      positive(v_max, "v_max");
      positive(rho_max, "rho_max");
      if (!(w < 0.0)) throw ConfigError("FluxModel: w must be < 0");
      break;
    case FluxFamily::Trapezoidal: {
      positive(v_max, "v_max");
      positive(rho_max, "rho_max");
      if (!(w < 0.0)) throw ConfigError("FluxModel: w must be < 0");
      if (!(0.0 < rho_c1 && rho_c1 < rho_c2 && rho_c2 < rho_max))
        throw ConfigError("FluxModel: need 0 < rho_c1 < rho_c2 < rho_max");
      const double s = trapezoid_slope();
      if (!(s <= v_max + 1e-12 && s >= w - 1e-12))
        throw ConfigError("FluxModel: trapezoidal transition slope must lie in [w, v_max]");
      break;
    }
    case FluxFamily::Greenberg:
      positive(c0, "c0");
      positive(rho_max, "rho_max");
      if (!(rho_floor > 0.0 && rho_floor < 1.0))
        throw ConfigError("FluxModel: rho_floor must be in (0, 1)");
      break;
    case FluxFamily::Underwood:
      positive(c1, "c1");
      positive(c2, "c2");
      positive(rho_cap, "rho_cap");
      // Concavity holds on [0, 2/c2] only; the cap must stay inside it.
      if (rho_cap > 2.0 / c2 + 1e-12)
        throw ConfigError("FluxModel: Underwood rho_cap must be <= 2/c2 (concave range)");
      break;
    case FluxFamily::Burgers:
      positive(rho_max, "u_max");
      break;
  }
}

double FluxModel::trapezoid_slope() const {
  return (w * (rho_c2 - rho_max) - v_max * rho_c1) / (rho_c2 - rho_c1);
}

void FluxModel::check_domain(double rho) const {
  if (!(rho >= 0.0))
    throw DomainError(std::string(family_name(family_)) + ": density " + std::to_string(rho) +
                      " below lower bound 0");
  if (!(rho <= u_max_))
    throw DomainError(std::string(family_name(family_)) + ": density " + std::to_string(rho) +
                      " above upper bound " + std::to_string(u_max_));
}

double FluxModel::flux_value(double rho) const {
  check_domain(rho);
  return flux_value_extended(rho);
}

double FluxModel::flux_value_extended(double rho) const {
  switch (family_) {
    case FluxFamily::Greenshields:
      return v_max * rho * (1.0 - rho / rho_max);
    case FluxFamily::TriangularSym:
    case FluxFamily::TriangularSkw: {
      const double rc = critical_density().lo;
      return rho <= rc ? v_max * rho : w * (rho - rho_max);
    }
    case FluxFamily::Trapezoidal: {
      if (rho <= rho_c1) return v_max * rho;
      if (rho <= rho_c2) return v_max * rho_c1 + trapezoid_slope() * (rho - rho_c1);
      return w * (rho - rho_max);
    }
    case FluxFamily::Greenberg:
      if (rho <= 0.0) return 0.0;  // limit value
      return c0 * rho * std::log(rho_max / rho);
    case FluxFamily::Underwood:
      return c1 * rho * std::exp(-c2 * rho + 1.0);
    case FluxFamily::Burgers:
      return 0.5 * rho * rho;
  }
  throw ConfigError("flux_value: bad family");
}

double FluxModel::flux_derivative(double rho, Side side) const {
  check_domain(rho);
  switch (family_) {
    case FluxFamily::Greenshields:
      return v_max * (1.0 - 2.0 * rho / rho_max);
    case FluxFamily::TriangularSym:
    case FluxFamily::TriangularSkw: {
      const double rc = critical_density().lo;
      if (rho < rc) return v_max;
      if (rho > rc) return w;
      return side == Side::Left ? v_max : w;
    }
    case FluxFamily::Trapezoidal: {
      const double s = trapezoid_slope();
      if (rho < rho_c1) return v_max;
      if (rho == rho_c1) return side == Side::Left ? v_max : s;
      if (rho < rho_c2) return s;
      if (rho == rho_c2) return side == Side::Left ? s : w;
      return w;
    }
    case FluxFamily::Greenberg:
      if (rho <= 0.0) return kInf;
      return c0 * (std::log(rho_max / rho) - 1.0);
    case FluxFamily::Underwood:
      return c1 * std::exp(-c2 * rho + 1.0) * (1.0 - c2 * rho);
    case FluxFamily::Burgers:
      return rho;
  }
  throw ConfigError("flux_derivative: bad family");
}

FluxModel::CriticalDensity FluxModel::critical_density() const {
  switch (family_) {
    case FluxFamily::Greenshields:
      return {rho_max / 2.0, rho_max / 2.0};
    case FluxFamily::TriangularSym:
    case FluxFamily::TriangularSkw: {
      const double rc = rho_max * w / (w - v_max);
      return {rc, rc};
    }
    case FluxFamily::Trapezoidal:
      return {rho_c1, rho_c2};
    case FluxFamily::Greenberg: {
      const double rc = rho_max / std::exp(1.0);
      return {rc, rc};
    }
    case FluxFamily::Underwood: {
      const double rc = std::min(1.0 / c2, rho_cap);
      return {rc, rc};
    }
    case FluxFamily::Burgers:
      throw DomainError("critical_density: unsupported for the convex Burgers flux");
  }
  throw ConfigError("critical_density: bad family");
}

double FluxModel::flux_argmax() const {
  if (family_ == FluxFamily::Trapezoidal) return trapezoid_slope() > 0.0 ? rho_c2 : rho_c1;
  return critical_density().lo;
}

double FluxModel::max_wave_speed(double lo, double hi) const {
  if (!(lo <= hi)) throw DomainError("max_wave_speed: lo must be <= hi");
  check_domain(lo);
  check_domain(hi);
  if (family_ == FluxFamily::Greenberg) lo = std::max(lo, rho_floor * rho_max);

  double best = 0.0;
  auto consider = [&](double rho) {
    if (rho < lo || rho > hi) return;
    for (Side s : {Side::Left, Side::Right}) {
      const double d = std::abs(flux_derivative(rho, s));
      if (d > best) best = d;
    }
  };
  consider(lo);
  consider(hi);
  switch (family_) {
    case FluxFamily::TriangularSym:
    case FluxFamily::TriangularSkw:
      consider(critical_density().lo);
      break;
    case FluxFamily::Trapezoidal:
      consider(rho_c1);
      consider(rho_c2);
      break;
    case FluxFamily::Underwood:
      consider(std::min(2.0 / c2, u_max_));
      break;
    default:
      break;  // |f'| is monotone or piecewise-monotone with extremes at endpoints
  }
  return best;
}

WaveSpeedBounds FluxModel::wave_speed_bounds() const {
  switch (family_) {
    case FluxFamily::Greenshields:
      return {-v_max, v_max};
    case FluxFamily::TriangularSym:
    case FluxFamily::TriangularSkw:
    case FluxFamily::Trapezoidal:
      return {w, v_max};
    case FluxFamily::Greenberg:
      return {-c0, flux_derivative(rho_floor * rho_max)};
    case FluxFamily::Underwood:
      return {flux_derivative(rho_cap), c1 * std::exp(1.0)};
    case FluxFamily::Burgers:
      return {0.0, rho_max};
  }
  throw ConfigError("wave_speed_bounds: bad family");
}

double FluxModel::conjugate_argmax(double u, Side side) const {
  switch (family_) {
    case FluxFamily::Greenshields: {
      const double r = rho_max * (v_max - u) / (2.0 * v_max);
      return std::min(std::max(r, 0.0), rho_max);
    }
    case FluxFamily::TriangularSym:
    case FluxFamily::TriangularSkw: {
      const double rc = critical_density().lo;
      if (u > v_max) return 0.0;
      if (u == v_max) return side == Side::Left ? rc : 0.0;
      if (u < w) return rho_max;
      if (u == w) return side == Side::Left ? rho_max : rc;
      return rc;
    }
    case FluxFamily::Trapezoidal: {
      const double s = trapezoid_slope();
      if (u > v_max) return 0.0;
      if (u == v_max) return side == Side::Left ? rho_c1 : 0.0;
      if (u > s) return rho_c1;
      if (u == s) return side == Side::Left ? rho_c2 : rho_c1;
      if (u > w) return rho_c2;
      if (u == w) return side == Side::Left ? rho_max : rho_c2;
      return rho_max;
    }
    case FluxFamily::Greenberg: {
      // Stationarity f'(rho) = u is monotone in log(rho); bisect there.
      if (u <= -c0) return rho_max;
      const double t_root = std::log(rho_max) - 1.0 - u / c0;
      double t_lo = t_root - 1.0;  // f'(exp(t_lo)) = u + c0 > u
      double t_hi = t_root + 1.0;  // f'(exp(t_hi)) = u - c0 < u
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (t_lo + t_hi);
        if (c0 * (std::log(rho_max) - mid - 1.0) > u)
          t_lo = mid;
        else
          t_hi = mid;
      }
      return std::min(std::exp(0.5 * (t_lo + t_hi)), rho_max);
    }
    case FluxFamily::Underwood: {
      if (u >= flux_derivative(0.0)) return 0.0;
      if (u <= flux_derivative(rho_cap)) return rho_cap;
      double lo = 0.0, hi = rho_cap;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (flux_derivative(mid) > u)
          lo = mid;
        else
          hi = mid;
      }
      return 0.5 * (lo + hi);
    }
    case FluxFamily::Burgers: {
      // Convex flux: the sup of f(rho) - u rho sits at an endpoint.
      const double at_cap = flux_value(rho_max) - u * rho_max;
      if (at_cap > 0.0) return rho_max;
      if (at_cap < 0.0) return 0.0;
      return side == Side::Left ? rho_max : 0.0;
    }
  }
  throw ConfigError("conjugate_argmax: bad family");
}

namespace {

// Domain of the conjugate: the true wave-speed range. Greenberg's forward
// speed is unbounded (its reported bound is floored for CFL purposes only).
bool in_speed_range(const FluxModel& m, double u) {
  const WaveSpeedBounds b = m.wave_speed_bounds();
  const double hi = m.family() == FluxFamily::Greenberg ? kInf : b.max_speed;
  return u >= b.min_speed - 1e-12 && u <= hi + 1e-12;
}

}  // namespace

double FluxModel::legendre_transform(double u) const {
  if (!in_speed_range(*this, u))
    throw DomainError("legendre_transform: u outside wave-speed range [w, v_max]");
  const double r = conjugate_argmax(u);
  return flux_value(r) - u * r;
}

double FluxModel::legendre_derivative(double u, Side side) const {
  if (!in_speed_range(*this, u))
    throw DomainError("legendre_derivative: u outside wave-speed range [w, v_max]");
  return -conjugate_argmax(u, side);
}

namespace {

struct ParamSpec {
  const char* name;
  double FluxModel::* member;
};

// Accepted JSON parameter names per family ("u_max" maps onto rho_max for
// Burgers). Anything else is rejected.
std::vector<ParamSpec> params_for(FluxFamily family) {
  switch (family) {
    case FluxFamily::Greenshields:
      return {{"v_max", &FluxModel::v_max}, {"rho_max", &FluxModel::rho_max}};
    case FluxFamily::TriangularSym:
    case FluxFamily::TriangularSkw:
      return {{"v_max", &FluxModel::v_max},
              {"rho_max", &FluxModel::rho_max},
              {"w", &FluxModel::w}};
    case FluxFamily::Trapezoidal:
      return {{"v_max", &FluxModel::v_max},
              {"rho_max", &FluxModel::rho_max},
              {"w", &FluxModel::w},
              {"rho_c1", &FluxModel::rho_c1},
              {"rho_c2", &FluxModel::rho_c2}};
    case FluxFamily::Greenberg:
      return {{"c0", &FluxModel::c0},
              {"rho_max", &FluxModel::rho_max},
              {"rho_floor", &FluxModel::rho_floor}};
    case FluxFamily::Underwood:
      return {{"c1", &FluxModel::c1}, {"c2", &FluxModel::c2}, {"rho_cap", &FluxModel::rho_cap}};
    case FluxFamily::Burgers:
      return {{"u_max", &FluxModel::rho_max}};
  }
  throw ConfigError("params_for: bad family");
}

}  // namespace

FluxModel FluxModel::from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("FluxModel JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("family"))
    throw ConfigError("FluxModel JSON: expected {\"family\": ..., \"params\": {...}}");
  FluxModel m = defaults(family_from_name(j.at("family").get<std::string>()));
  if (j.contains("params")) {
    const auto& params = j.at("params");
    if (!params.is_object()) throw ConfigError("FluxModel JSON: params must be an object");
    const auto spec = params_for(m.family_);
    for (auto it = params.begin(); it != params.end(); ++it) {
      bool known = false;
      for (const auto& p : spec) {
        if (it.key() == p.name) {
          if (!it.value().is_number())
            throw ConfigError("FluxModel JSON: param " + it.key() + " must be a number");
          m.*(p.member) = it.value().get<double>();
          known = true;
          break;
        }
      }
      if (!known)
        throw ConfigError("FluxModel JSON: unknown param \"" + it.key() + "\" for family " +
                          family_name(m.family_));
    }
  }
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "family" && it.key() != "params")
      throw ConfigError("FluxModel JSON: unknown field \"" + it.key() + "\"");
  m.finalize();
  return m;
}

std::string FluxModel::to_json() const {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& p : params_for(family_)) params[p.name] = this->*(p.member);
  nlohmann::json j{{"family", family_name(family_)}, {"params", params}};
  return j.dump();
}

}  // namespace conslaw
