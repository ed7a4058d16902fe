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

#include "harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace rnnbp {
namespace {

std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream os(path, mode);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  return os;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Grid node (row from the top, column from the left); edges are hit exactly.
Point grid_node(const Domain& d, int resolution, int row, int col) {
  const double x = col == resolution - 1 ? d.xmax() : d.xmin() + (d.xmax() - d.xmin()) * col / (resolution - 1);
  const double y = row == resolution - 1 ? d.ymin() : d.ymax() - (d.ymax() - d.ymin()) * row / (resolution - 1);
  return {x, y};
}

std::string companion_csv(const std::string& path) {
  std::filesystem::path p(path);
  if (p.extension() == ".csv") return p.replace_extension(".err.csv").string();
  return p.replace_extension(".csv").string();
}

}  // namespace

L2Error relative_l2(const Solution& sol, const ScalarField& exact, const std::vector<Point>& pts) {
  if (pts.empty()) throw std::invalid_argument("relative_l2: no test points");
  double num = 0.0, den = 0.0;
  for (const Point& p : pts) {
    const double u = exact.value(p.x, p.y);
    const double e = sol.value(p.x, p.y) - u;
    num += e * e;
    den += u * u;
  }
  if (den == 0.0) return {std::sqrt(num), true};
  return {std::sqrt(num) / std::sqrt(den), false};
}

std::vector<int> RunSettings::hidden_widths() const {
  if (architecture.size() < 3 || architecture.back() != 1)
    throw std::invalid_argument("architecture must read [2, hidden..., 1]");
  return {architecture.begin(), architecture.end() - 1};
}

std::vector<int> parse_architecture(const std::string& s) {
  std::vector<int> out;
  std::string tok;
  for (char ch : s) {
    if (ch == ',' || ch == ';' || ch == ' ' || ch == '[' || ch == ']') {
      if (!tok.empty()) out.push_back(std::stoi(tok));
      tok.clear();
    } else {
      tok.push_back(ch);
    }
  }
  if (!tok.empty()) out.push_back(std::stoi(tok));
  if (out.size() < 3 || out.front() != 2 || out.back() != 1)
    throw std::invalid_argument("architecture '" + s + "' must read 2,hidden...,1");
  return out;
}

std::string format_architecture(const std::vector<int>& arch, char sep) {
  std::string s;
  for (std::size_t i = 0; i < arch.size(); ++i) {
    if (i) s.push_back(sep);
    s += std::to_string(arch[i]);
  }
  return s;
}

CaseRun run_case_full(const ExampleCase& c, const RunSettings& s) {
  if (!c.supports(s.method))
    throw std::domain_error("case " + c.id + " does not support method " + to_string(s.method));
  const auto t0 = std::chrono::steady_clock::now();
  const FeatureNet net = FeatureNet::build(s.hidden_widths(), s.init, s.rm, s.seed);
  const CollocationSet colloc = collocate(c.domain, s.N);
  Solution sol = solve(c.problem(s.method), net, colloc, s.rcond);
  const L2Error err = relative_l2(sol, c.exact, test_grid(c.domain, s.n_test));

  RunRecord r;
  r.case_id = c.id;
  r.method = s.method;
  r.pde = c.pde;
  r.N = s.N;
  r.M = net.feature_count();
  r.architecture = s.architecture;
  r.init = s.init;
  r.rm = s.init == InitKind::UniformRm ? s.rm : 0.0;
  r.seed = std::to_string(s.seed);
  r.rcond = s.rcond;
  r.rel_l2 = err.value;
  r.residual = sol.diagnostics().residual;
  r.rank = sol.diagnostics().rank;
  r.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return {std::move(sol), std::move(r)};
}

RunRecord run_case(const ExampleCase& c, const RunSettings& s) { return run_case_full(c, s).record; }

std::vector<RunRecord> sweep(const SweepSettings& s) {
  if (s.methods.empty() || s.Ns.empty() || s.seeds.empty()) throw std::invalid_argument("sweep: empty grid");
  const ExampleCase c = make_case(s.base.case_id, s.base.k);
  const std::vector<int> Ms = s.Ms.empty() ? std::vector<int>{s.base.hidden_widths().back()} : s.Ms;
  const std::vector<double> rms = s.rms.empty() ? std::vector<double>{s.base.rm} : s.rms;
  std::vector<RunRecord> out;
  for (Method m : s.methods)
    for (int N : s.Ns)
      for (int M : Ms)
        for (double rm : rms) {
          RunSettings rs = s.base;
          rs.method = m;
          rs.N = N;
          rs.rm = rm;
          rs.architecture[rs.architecture.size() - 2] = M;
          std::vector<RunRecord> group;
          for (std::uint64_t seed : s.seeds) {
            rs.seed = seed;
            group.push_back(run_case(c, rs));
          }
          RunRecord med = group.front();
          med.seed = "median";
          std::vector<double> e, res, rk, t;
          for (const auto& g : group) {
            e.push_back(g.rel_l2);
            res.push_back(g.residual);
            rk.push_back(g.rank);
            t.push_back(g.time_ms);
          }
          med.rel_l2 = median(e);
          med.residual = median(res);
          med.rank = static_cast<int>(std::lround(median(rk)));
          med.time_ms = median(t);
          out.insert(out.end(), group.begin(), group.end());
          out.push_back(med);
        }
  return out;
}

const char* csv_header() { return "case,method,pde,N,M,widths,init,rm,seed,rcond,rel_l2,residual,rank,time_ms"; }

void write_csv_row(std::ostream& os, const RunRecord& r, bool include_timing) {
  os << r.case_id << ',' << to_string(r.method) << ',' << to_string(r.pde) << ',' << r.N << ',' << r.M << ','
     << format_architecture(r.architecture) << ',' << to_string(r.init) << ',' << fmt_double(r.rm) << ',' << r.seed
     << ',' << fmt_double(r.rcond) << ',' << fmt_double(r.rel_l2) << ',' << fmt_double(r.residual) << ',' << r.rank
     << ',';
  if (include_timing) os << fmt_double(r.time_ms);
  os << '\n';
}

std::string to_csv(const std::vector<RunRecord>& records, bool include_timing) {
  std::ostringstream os;
  os << csv_header() << '\n';
  for (const auto& r : records) write_csv_row(os, r, include_timing);
  return os.str();
}

std::vector<double> error_field(const Solution& sol, const ScalarField& exact, int resolution) {
  if (resolution < 16) throw std::invalid_argument("heatmap resolution must be >= 16");
  const Domain& d = sol.spec().domain;
  std::vector<double> field(static_cast<std::size_t>(resolution) * resolution);
  for (int row = 0; row < resolution; ++row)
    for (int col = 0; col < resolution; ++col) {
      const Point p = grid_node(d, resolution, row, col);
      double& e = field[static_cast<std::size_t>(row) * resolution + col];
      if (!d.contains_closed(p)) {
        e = std::numeric_limits<double>::quiet_NaN();
        continue;
      }
      e = std::abs(sol.value(p.x, p.y) - exact.value(p.x, p.y));
    }
  return field;
}

HeatmapStats write_heatmap(const Solution& sol, const ScalarField& exact, int resolution, const std::string& path) {
  const std::vector<double> field = error_field(sol, exact, resolution);
  const Domain& d = sol.spec().domain;
  auto coord = [&](int row, int col) { return grid_node(d, resolution, row, col); };
  HeatmapStats st;
  st.resolution = resolution;
  for (int row = 0; row < resolution; ++row)
    for (int col = 0; col < resolution; ++col) {
      const double e = field[static_cast<std::size_t>(row) * resolution + col];
      if (!std::isnan(e) && e > st.max_error) {
        st.max_error = e;
        st.argmax = coord(row, col);
      }
    }

  std::ofstream pgm = open_out(path, std::ios::out | std::ios::binary);
  pgm << "P5\n" << resolution << ' ' << resolution << "\n255\n";
  for (double e : field) {
    unsigned char px = 0;
    if (!std::isnan(e) && st.max_error > 0.0)
      px = static_cast<unsigned char>(std::lround(255.0 * std::min(1.0, e / st.max_error)));
    pgm.put(static_cast<char>(px));
  }
  if (!pgm) throw std::runtime_error("failed writing '" + path + "'");

  std::ofstream csv = open_out(companion_csv(path));
  csv << "# max_abs_error=" << fmt_double(st.max_error) << " resolution=" << resolution << '\n';
  csv << "x,y,abs_error\n";
  for (int row = 0; row < resolution; ++row)
    for (int col = 0; col < resolution; ++col) {
      const double e = field[static_cast<std::size_t>(row) * resolution + col];
      if (std::isnan(e)) continue;
      const Point p = coord(row, col);
      csv << fmt_double(p.x) << ',' << fmt_double(p.y) << ',' << fmt_double(e) << '\n';
    }
  return st;
}

void write_debug_dump(const ExampleCase& c, const RunSettings& s, const std::string& prefix) {
  if (!c.supports(s.method))
    throw std::domain_error("case " + c.id + " does not support method " + to_string(s.method));
  const FeatureNet net = FeatureNet::build(s.hidden_widths(), s.init, s.rm, s.seed);
  const CollocationSet colloc = collocate(c.domain, s.N);
  const ProblemSpec spec = c.problem(s.method);
  std::optional<BoundaryLift> lift;
  if (s.method == Method::RnnBp) lift = build_lift(spec);
  const LinearSystem sys = assemble(spec, net, colloc, lift ? &*lift : nullptr);
  const LstsqResult res = lstsq(sys.matrix, sys.rhs, s.rcond);

  {
    std::ofstream os = open_out(prefix + ".net.json");
    os << net.to_json().dump() << '\n';
  }
  {
    std::ofstream os = open_out(prefix + ".points.csv");
    write_points_csv(os, colloc);
  }
  {
    std::ofstream os = open_out(prefix + ".system.csv");
    write_system_csv(os, sys);
  }
  std::ofstream os = open_out(prefix + ".solution.csv");
  const Diagnostics& dg = res.diagnostics;
  os << "# case=" << c.id << " method=" << to_string(s.method) << " N=" << s.N
     << " widths=" << format_architecture(s.architecture) << " init=" << to_string(s.init) << " rm=" << fmt_double(s.rm)
     << " seed=" << s.seed << " rcond=" << fmt_double(s.rcond) << " collocation=cell-centred\n";
  os << "# rank=" << dg.rank << " sigma_max=" << fmt_double(dg.sigma_max)
     << " sigma_min_retained=" << fmt_double(dg.sigma_min_retained) << " residual=" << fmt_double(dg.residual)
     << '\n';
  os << "j,omega\n";
  for (Eigen::Index j = 0; j < res.omega.size(); ++j) os << j << ',' << fmt_double(res.omega(j)) << '\n';
}

}  // namespace rnnbp
