// Copyright (c) 2026 The conslaw authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "core/grid.hpp"
#include "core/io.hpp"
#include "core/rng.hpp"

using namespace conslaw;

TEST_CASE("discretization stores a consistent cfl ratio") {
  const auto d = Discretization::create(5e-3, 5e-4, 200, 1000, 0.0);
  CHECK(d.cfl_ratio == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(d.domain_right() == doctest::Approx(1.0));
  CHECK_THROWS_AS(Discretization::create(-1.0, 1.0, 4, 4, 0.0), ConfigError);
  CHECK_THROWS_AS(Discretization::create(1.0, 0.0, 4, 4, 0.0), ConfigError);

  Discretization bad = d;
  bad.cfl_ratio = 0.1000001;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("cell_average_project: constant and aligned step") {
  const auto d = Discretization::create(0.25, 0.025, 4, 0, 0.0);
  const double bk_const[] = {0.0, 1.0};
  const double v_const[] = {0.3};
  auto cells = cell_average_project(bk_const, v_const, d, 0.0);
  for (double c : cells) CHECK(c == doctest::Approx(0.3).epsilon(1e-15));

  const double bk_step[] = {0.0, 0.5, 1.0};
  const double v_step[] = {1.0, 0.0};
  cells = cell_average_project(bk_step, v_step, d, 0.0);
  CHECK(cells[0] == 1.0);
  CHECK(cells[1] == 1.0);
  CHECK(cells[2] == 0.0);
  CHECK(cells[3] == 0.0);
}

TEST_CASE("cell_average_project: midpoint breakpoint gets the length-weighted mean") {
  const auto d = Discretization::create(1.0, 0.1, 3, 0, 0.0);
  const double bk[] = {0.0, 1.5, 3.0};
  const double v[] = {1.0, 0.0};
  const auto cells = cell_average_project(bk, v, d, 0.0);
  CHECK(cells[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(cells[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(cells[2] == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("cell_average_project requires full coverage") {
  const auto d = Discretization::create(1.0, 0.1, 3, 0, 0.0);
  const double bk[] = {0.0, 2.0};
  const double v[] = {1.0};
  CHECK_THROWS_AS(cell_average_project(bk, v, d, 0.0), DomainError);
}

TEST_CASE("projection preserves mass and does not create variation") {
  Rng rng(1234);
  for (int trial = 0; trial < 50; ++trial) {
    const int pieces = 2 + static_cast<int>(rng.below(8));
    std::vector<double> bk{0.0};
    for (int i = 0; i < pieces; ++i) bk.push_back(bk.back() + 0.05 + rng.uniform());
    std::vector<double> vals;
    for (int i = 0; i < pieces; ++i) vals.push_back(rng.uniform());
    const int n_cells = 1 + static_cast<int>(rng.below(40));
    const double span = bk.back() - bk.front();
    const double dx = span / n_cells;
    const auto d = Discretization::create(dx, 0.1 * dx, n_cells, 0, 0.0);
    const auto cells = cell_average_project(bk, vals, d, bk.front());

    double exact_integral = 0.0;
    for (int i = 0; i < pieces; ++i) exact_integral += vals[i] * (bk[i + 1] - bk[i]);
    CHECK(total_mass(cells, dx) == doctest::Approx(exact_integral).epsilon(1e-12));

    std::vector<double> piece_vals(vals.begin(), vals.end());
    CHECK(total_variation(cells) <= total_variation(piece_vals) + 1e-12);
  }
}

TEST_CASE("total_mass basics") {
  const double f1[] = {1.0, 1.0, 1.0};
  CHECK(total_mass(f1, 0.5) == doctest::Approx(1.5));
  CHECK(total_mass({}, 1.0) == 0.0);
  const double f2[] = {0.2, 0.8};
  CHECK(total_mass(f2, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("total_variation basics and shift invariance") {
  const double constant[] = {0.4, 0.4, 0.4};
  CHECK(total_variation(constant) == 0.0);
  const double spike[] = {0.0, 1.0, 0.0};
  CHECK(total_variation(spike) == doctest::Approx(2.0));
  const double monotone[] = {0.0, 0.3, 0.9};
  CHECK(total_variation(monotone) == doctest::Approx(0.9));

  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> f;
    for (int i = 0; i < 17; ++i) f.push_back(rng.uniform());
    std::vector<double> g = f;
    const double c = rng.uniform(-3.0, 3.0);
    for (double& v : g) v += c;
    CHECK(total_variation(f) == doctest::Approx(total_variation(g)).epsilon(1e-12));
  }
}

TEST_CASE("solution grid CSV round-trip") {
  SolutionGrid grid(Discretization::create(0.5, 0.05, 3, 2, -1.0));
  Rng rng(9);
  for (double& v : grid.values) v = rng.uniform();
  const auto text = grid_to_csv(grid);
  CHECK(text.rfind("# dx=0.5 dt=0.05", 0) == 0);
  const auto back = grid_from_csv(text);
  CHECK(back.disc.n_cells == 3);
  CHECK(back.disc.n_steps == 2);
  CHECK(back.disc.x_origin == -1.0);
  for (std::size_t i = 0; i < grid.values.size(); ++i) CHECK(back.values[i] == grid.values[i]);
}

TEST_CASE("boundary trace CSV round-trip and validation") {
  BoundaryTrace tr(2, 3);
  Rng rng(5);
  for (double& v : tr.left) v = rng.uniform();
  for (double& v : tr.right) v = rng.uniform();
  const auto back = trace_from_csv(trace_to_csv(tr));
  CHECK(back.width == 2);
  CHECK(back.n_steps == 3);
  for (std::size_t i = 0; i < tr.left.size(); ++i) {
    CHECK(back.left[i] == tr.left[i]);
    CHECK(back.right[i] == tr.right[i]);
  }
  tr.left[0] = 1.5;
  CHECK_THROWS_AS(tr.validate(1.0), DomainError);
}
