// Copyright (c) 2026 The conslaw authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <string>

#include "core/flux_models.hpp"
#include "core/rng.hpp"

using namespace conslaw;

namespace {

const FluxFamily kAllFamilies[] = {
    FluxFamily::Greenshields, FluxFamily::TriangularSym, FluxFamily::TriangularSkw,
    FluxFamily::Trapezoidal,  FluxFamily::Greenberg,     FluxFamily::Underwood,
    FluxFamily::Burgers,
};

// Kink densities where one-sided derivatives differ; FD checks stay away.
bool near_kink(const FluxModel& m, double rho, double h) {
  auto close = [&](double k) { return std::abs(rho - k) < 64.0 * h; };
  switch (m.family()) {
    case FluxFamily::TriangularSym:
    case FluxFamily::TriangularSkw:
      return close(m.critical_density().lo);
    case FluxFamily::Trapezoidal:
      return close(m.rho_c1) || close(m.rho_c2);
    default:
      return false;
  }
}

// Random parameter draw that keeps every family valid.
FluxModel random_model(FluxFamily family, Rng& rng) {
  FluxModel m = FluxModel::defaults(family);
  switch (family) {
    case FluxFamily::Greenshields:
      m.v_max = rng.uniform(0.5, 2.0);
      m.rho_max = rng.uniform(0.5, 2.0);
      break;
    case FluxFamily::TriangularSym:
    case FluxFamily::TriangularSkw:
      m.v_max = rng.uniform(0.5, 2.5);
      m.w = -rng.uniform(0.5, 2.0);
      m.rho_max = rng.uniform(0.5, 2.0);
      break;
    case FluxFamily::Trapezoidal: {
      // resample until the transition slope keeps the flux concave
      for (;;) {
        m.v_max = rng.uniform(0.5, 2.0);
        m.w = -rng.uniform(0.5, 2.0);
        m.rho_max = rng.uniform(0.8, 2.0);
        m.rho_c1 = m.rho_max * rng.uniform(0.1, 0.4);
        m.rho_c2 = m.rho_max * rng.uniform(0.5, 0.9);
        const double s = m.trapezoid_slope();
        if (s <= m.v_max && s >= m.w) break;
      }
      break;
    }
    case FluxFamily::Greenberg:
      m.c0 = rng.uniform(0.5, 3.0);
      m.rho_max = rng.uniform(0.5, 2.0);
      break;
    case FluxFamily::Underwood:
      m.c1 = rng.uniform(0.1, 0.5);
      m.c2 = rng.uniform(0.5, 1.5);
      m.rho_cap = std::min(1.5 / m.c2, rng.uniform(0.5, 1.5));
      break;
    case FluxFamily::Burgers:
      m.rho_max = rng.uniform(0.5, 2.0);
      break;
  }
  m.validate();
  return m;
}

}  // namespace

TEST_CASE("flux values match the closed forms") {
  const auto gs = FluxModel::defaults(FluxFamily::Greenshields);
  CHECK(gs.flux_value(0.5) == doctest::Approx(0.25).epsilon(1e-15));

  const auto burgers = FluxModel::defaults(FluxFamily::Burgers);
  CHECK(burgers.flux_value(1.0) == doctest::Approx(0.5).epsilon(1e-15));

  for (FluxFamily fam : kAllFamilies) {
    const auto m = FluxModel::defaults(fam);
    CHECK(m.flux_value(0.0) == 0.0);
  }
  // f vanishes at rho_max for the families with a finite jam density.
  for (FluxFamily fam : {FluxFamily::Greenshields, FluxFamily::TriangularSym,
                         FluxFamily::TriangularSkw, FluxFamily::Trapezoidal,
                         FluxFamily::Greenberg}) {
    const auto m = FluxModel::defaults(fam);
    CHECK(m.flux_value(m.rho_max) == doctest::Approx(0.0).epsilon(1e-15));
  }
}

TEST_CASE("flux domain errors name the violated bound") {
  const auto gs = FluxModel::defaults(FluxFamily::Greenshields);
  auto message_of = [&](double rho) {
    try {
      gs.flux_value(rho);
    } catch (const DomainError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message_of(-0.1).find("below lower bound") != std::string::npos);
  CHECK(message_of(1.1).find("above upper bound") != std::string::npos);
}

TEST_CASE("flux derivatives: closed forms and one-sided kinks") {
  const auto gs = FluxModel::defaults(FluxFamily::Greenshields);
  CHECK(gs.flux_derivative(0.0) == doctest::Approx(1.0));

  const auto burgers = FluxModel::defaults(FluxFamily::Burgers);
  CHECK(burgers.flux_derivative(0.7) == doctest::Approx(0.7));

  const auto tri = FluxModel::defaults(FluxFamily::TriangularSym);
  const double rc = tri.critical_density().lo;
  CHECK(rc == doctest::Approx(0.5));
  CHECK(tri.flux_derivative(rc - 1e-12) == doctest::Approx(1.0));
  CHECK(tri.flux_derivative(rc + 1e-12) == doctest::Approx(-1.0));
  CHECK(tri.flux_derivative(rc, Side::Left) == 1.0);
  CHECK(tri.flux_derivative(rc, Side::Right) == -1.0);
}

TEST_CASE("critical densities") {
  CHECK(FluxModel::defaults(FluxFamily::Greenshields).critical_density().lo ==
        doctest::Approx(0.5));
  CHECK(FluxModel::defaults(FluxFamily::TriangularSym).critical_density().lo ==
        doctest::Approx(0.5));
  CHECK(FluxModel::defaults(FluxFamily::TriangularSkw).critical_density().lo ==
        doctest::Approx(1.0 / 3.0));
  const auto trap = FluxModel::defaults(FluxFamily::Trapezoidal);
  CHECK(trap.critical_density().lo == doctest::Approx(0.2));
  CHECK(trap.critical_density().hi == doctest::Approx(0.8));
  // Default trapezoid has an upward-sloping transition, so the flux argmax
  // sits at rho_c2.
  CHECK(trap.trapezoid_slope() == doctest::Approx(1.0 / 6.0));
  CHECK(trap.flux_argmax() == doctest::Approx(0.8));
  CHECK_THROWS_AS(FluxModel::defaults(FluxFamily::Burgers).critical_density(), DomainError);
}

TEST_CASE("max wave speeds") {
  const auto gs = FluxModel::defaults(FluxFamily::Greenshields);
  CHECK(gs.max_wave_speed(0.0, 1.0) == doctest::Approx(1.0));
  const auto burgers = FluxModel::defaults(FluxFamily::Burgers);
  CHECK(burgers.max_wave_speed(0.0, 1.0) == doctest::Approx(1.0));
  const auto skw = FluxModel::defaults(FluxFamily::TriangularSkw);
  CHECK(skw.max_wave_speed(0.0, 1.0) == doctest::Approx(2.0));
  // Greenberg's speed diverges at rho = 0; queries are floored.
  const auto gb = FluxModel::defaults(FluxFamily::Greenberg);
  const double capped = gb.max_wave_speed(0.0, 1.0);
  CHECK(std::isfinite(capped));
  CHECK(capped == doctest::Approx(gb.flux_derivative(1e-3)));
}

TEST_CASE("derivatives match central finite differences at smooth points") {
  Rng rng(20260811);
  const double h = 1e-7;
  int checked = 0;
  while (checked < 1000) {
    const FluxFamily fam = kAllFamilies[rng.below(7)];
    const auto m = random_model(fam, rng);
    const double rho = rng.uniform(2.0 * h, m.u_max() - 2.0 * h);
    if (near_kink(m, rho, h)) continue;
    if (fam == FluxFamily::Greenberg && rho < 1e-2) continue;  // log slope too steep for h
    const double fd = (m.flux_value(rho + h) - m.flux_value(rho - h)) / (2.0 * h);
    CHECK(std::abs(m.flux_derivative(rho) - fd) <= 1e-6);
    ++checked;
  }
}

TEST_CASE("concavity of the six LWR families") {
  Rng rng(31);
  for (FluxFamily fam : kAllFamilies) {
    if (fam == FluxFamily::Burgers) continue;
    for (int trial = 0; trial < 200; ++trial) {
      const auto m = random_model(fam, rng);
      const double a = rng.uniform(0.0, m.u_max());
      const double b = rng.uniform(0.0, m.u_max());
      const double lam = rng.uniform();
      const double mid = lam * a + (1.0 - lam) * b;
      CHECK(m.flux_value(mid) >=
            lam * m.flux_value(a) + (1.0 - lam) * m.flux_value(b) - 1e-12);
    }
  }
}

TEST_CASE("legendre transform: closed-form spot values") {
  const auto gs = FluxModel::defaults(FluxFamily::Greenshields);
  CHECK(gs.legendre_transform(0.0) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(gs.legendre_derivative(0.0) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(gs.legendre_derivative(gs.v_max) == doctest::Approx(0.0));
  CHECK(gs.legendre_derivative(-gs.v_max) == doctest::Approx(-1.0));

  const auto tri = FluxModel::defaults(FluxFamily::TriangularSym);
  CHECK(tri.legendre_transform(tri.v_max) == doctest::Approx(0.0));

  // sup attained at rho_max (where f vanishes) when u equals the backward speed
  for (FluxFamily fam : {FluxFamily::Greenshields, FluxFamily::TriangularSym,
                         FluxFamily::TriangularSkw, FluxFamily::Trapezoidal,
                         FluxFamily::Greenberg}) {
    const auto m = FluxModel::defaults(fam);
    const double w = m.wave_speed_bounds().min_speed;
    CHECK(m.legendre_transform(w) == doctest::Approx(-w * m.rho_max).epsilon(1e-10));
  }

  CHECK_THROWS_AS(gs.legendre_transform(2.0), DomainError);
  CHECK_THROWS_AS(gs.legendre_derivative(-2.0), DomainError);
}

TEST_CASE("legendre transform: envelope identity and sup property") {
  Rng rng(42);
  for (FluxFamily fam : kAllFamilies) {
    const auto m = FluxModel::defaults(fam);
    const auto b = m.wave_speed_bounds();
    const double hi = std::isfinite(b.max_speed) ? b.max_speed : 25.0;
    for (int trial = 0; trial < 200; ++trial) {
      const double u = rng.uniform(b.min_speed, hi);
      const double r = m.conjugate_argmax(u);
      const double R = m.legendre_transform(u);
      CHECK(std::abs(R + u * r - m.flux_value(r)) <= 1e-10);
      const double rho = rng.uniform(0.0, m.u_max());
      CHECK(R >= m.flux_value(rho) - u * rho - 1e-10);
    }
  }
}

TEST_CASE("model JSON round-trip rejects unknown params") {
  const auto trap = FluxModel::defaults(FluxFamily::Trapezoidal);
  const auto back = FluxModel::from_json(trap.to_json());
  CHECK(back.family() == FluxFamily::Trapezoidal);
  CHECK(back.w == trap.w);
  CHECK(back.rho_c1 == trap.rho_c1);

  CHECK_THROWS_AS(FluxModel::from_json(R"({"family":"greenshields","params":{"bogus":1}})"),
                  ConfigError);
  CHECK_THROWS_AS(FluxModel::from_json(R"({"family":"martian"})"), ConfigError);
  const auto burgers =
      FluxModel::from_json(R"({"family":"burgers","params":{"u_max":2.0}})");
  CHECK(burgers.u_max() == doctest::Approx(2.0));
}

TEST_CASE("trapezoidal parameter ordering is enforced") {
  auto m = FluxModel::defaults(FluxFamily::Trapezoidal);
  m.rho_c1 = 0.9;
  CHECK_THROWS_AS(m.validate(), ConfigError);
}
