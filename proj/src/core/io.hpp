// Copyright (c) 2026 The conslaw authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "grid.hpp"

namespace conslaw {

// SolutionGrid CSV format:
//   # dx=<v> dt=<v> n_cells=<v> n_steps=<v> x_origin=<v>
// followed by one row per timestep, comma-separated, 17 significant digits.
std::string grid_to_csv(const SolutionGrid& grid);
SolutionGrid grid_from_csv(const std::string& text);
void save_grid_csv(const SolutionGrid& grid, const std::string& path);
SolutionGrid load_grid_csv(const std::string& path);

// BoundaryTrace CSV format:
//   # n_steps=<v> width=<v>
// then per step one line: width left ghosts, width right ghosts (left-to-right
// spatial order on both sides).
std::string trace_to_csv(const BoundaryTrace& trace);
BoundaryTrace trace_from_csv(const std::string& text);
void save_trace_csv(const BoundaryTrace& trace, const std::string& path);
BoundaryTrace load_trace_csv(const std::string& path);

// 8-bit binary PGM heatmap with a linear [0, u_max] gray map; row n of the
// image is timestep n (top row = t = 0). A sidecar `<path>.json` records the
// axes so external tooling can label plots.
void save_grid_pgm(const SolutionGrid& grid, double u_max, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// printf("%.17g") formatting used by every text emitter.
std::string format_g17(double v);

}  // namespace conslaw
