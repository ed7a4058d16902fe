// Copyright 2026 The rnnbp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cases.hpp"
#include "network.hpp"
#include "solver.hpp"

namespace rnnbp {

constexpr int kDefaultTestPoints = 10000;

struct L2Error {
  double value = 0.0;
  /// The exact solution vanished on every point; `value` is the absolute
  /// l2 norm of the error instead.
  bool absolute = false;
};

/// sqrt(sum |u_hat - u|^2) / sqrt(sum |u|^2) over `pts`.
L2Error relative_l2(const Solution& sol, const ScalarField& exact, const std::vector<Point>& pts);

/// Architecture in the usual notation: input 2, hidden widths, output 1.
/// hidden_widths() drops the trailing output width.
struct RunSettings {
  std::string case_id = "p1.1";
  std::optional<int> k;
  Method method = Method::Rnn;
  int N = 16;
  std::vector<int> architecture = {2, 100, 300, 1};
  InitKind init = InitKind::FanInUniform;
  double rm = 1.0;
  std::uint64_t seed = 0;
  double rcond = kDefaultRcond;
  int n_test = kDefaultTestPoints;

  std::vector<int> hidden_widths() const;
};

/// Parses "2,100,300,1" (commas, spaces or semicolons); the last entry must
/// be the output width 1.
std::vector<int> parse_architecture(const std::string& s);
std::string format_architecture(const std::vector<int>& arch, char sep = ';');

struct RunRecord {
  std::string case_id;
  Method method = Method::Rnn;
  Pde pde = Pde::Poisson;
  int N = 0;
  int M = 0;
  std::vector<int> architecture;
  InitKind init = InitKind::FanInUniform;
  double rm = 0.0;
  std::string seed;  // decimal seed, or "median" for aggregated rows
  double rcond = 0.0;
  double rel_l2 = 0.0;
  double residual = 0.0;
  int rank = 0;
  double time_ms = 0.0;
};

struct CaseRun {
  Solution solution;
  RunRecord record;
};

/// Builds the net and collocation set, solves, and measures the relative l2
/// error on test_grid(domain, n_test).
CaseRun run_case_full(const ExampleCase& c, const RunSettings& s);
RunRecord run_case(const ExampleCase& c, const RunSettings& s);

struct SweepSettings {
  RunSettings base;
  std::vector<Method> methods;
  std::vector<int> Ns;
  std::vector<int> Ms;   // replaces the last hidden width; empty keeps the base architecture
  std::vector<double> rms;  // empty keeps base.rm
  std::vector<std::uint64_t> seeds;
};

/// Runs the Cartesian product of settings. Per setting: one row per seed
/// followed by one median row.
std::vector<RunRecord> sweep(const SweepSettings& s);

const char* csv_header();
/// Floats are written in shortest round-trip form. With include_timing off
/// the time_ms field is left empty so output is reproducible byte for byte.
void write_csv_row(std::ostream& os, const RunRecord& r, bool include_timing = true);
std::string to_csv(const std::vector<RunRecord>& records, bool include_timing = true);

struct HeatmapStats {
  double max_error = 0.0;
  Point argmax;
  int resolution = 0;
};

/// Samples |u_hat - u| on a resolution x resolution grid over the bounding
/// box of the closed domain. Writes a binary PGM scaled to the maximum (points
/// outside a disk are background, value 0) and a companion CSV next to it
/// (same path with extension .csv).
HeatmapStats write_heatmap(const Solution& sol, const ScalarField& exact, int resolution, const std::string& path);

/// Absolute error on the heatmap grid, row-major from the top row; NaN
/// outside the domain.
std::vector<double> error_field(const Solution& sol, const ScalarField& exact, int resolution);

/// prefix.net.json, prefix.points.csv, prefix.system.csv, prefix.solution.csv
void write_debug_dump(const ExampleCase& c, const RunSettings& s, const std::string& prefix);

}  // namespace rnnbp
