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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "harness.hpp"
#include "test_support.hpp"

namespace rnnbp {
namespace {

using std::numbers::pi;
namespace fs = std::filesystem;

fs::path scratch_dir() {
  const fs::path d = fs::temp_directory_path() / ("rnnbp_harness_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  fs::create_directories(d);
  return d;
}

// A one-feature network whose feature is identically 1: sin(0*x + 0*y + pi/2).
FeatureNet constant_feature_net() {
  return FeatureNet::from_parameters({Eigen::MatrixXd::Zero(1, 2)}, {Eigen::VectorXd::Constant(1, pi / 2)});
}

TEST(RelativeL2, ExactGivesZeroAndDoubleGivesOne) {
  const FeatureNet net = FeatureNet::build({2, 8, 3}, InitKind::UniformRm, 1.0, 1);
  const ScalarField phi0 =
      ScalarField::from_callable([net](double x, double y, int d) { return net.feature_jets(x, y, d)[0]; });
  const ProblemSpec spec = manufactured_problem(Pde::Poisson, Method::Rnn, Domain::unit_square(), phi0);
  const auto pts = test_grid(Domain::unit_square(), 400);
  const Solution same(spec, net, Eigen::VectorXd::Unit(3, 0), std::nullopt, {});
  const Solution twice(spec, net, 2.0 * Eigen::VectorXd::Unit(3, 0), std::nullopt, {});
  EXPECT_EQ(relative_l2(same, phi0, pts).value, 0.0);
  EXPECT_NEAR(relative_l2(twice, phi0, pts).value, 1.0, 1e-15);
  EXPECT_FALSE(relative_l2(twice, phi0, pts).absolute);
}

TEST(RelativeL2, ConstantOffset) {
  const double eps = 3e-4;
  const ScalarField one = ScalarField::from_expression([](const auto& x, const auto&) { return x * 0.0 + 1.0; });
  const ProblemSpec spec = manufactured_problem(Pde::Poisson, Method::Rnn, Domain::unit_square(), one);
  const Solution sol(spec, constant_feature_net(), Eigen::VectorXd::Constant(1, 1.0 + eps), std::nullopt, {});
  EXPECT_NEAR(relative_l2(sol, one, test_grid(Domain::unit_square(), 100)).value, eps, 1e-15);
}

TEST(RelativeL2, ZeroExactFallsBackToAbsolute) {
  const ProblemSpec spec = manufactured_problem(Pde::Poisson, Method::Rnn, Domain::unit_square(), ScalarField::zero());
  const Solution sol(spec, constant_feature_net(), Eigen::VectorXd::Constant(1, 0.5), std::nullopt, {});
  const auto err = relative_l2(sol, ScalarField::zero(), test_grid(Domain::unit_square(), 4));
  EXPECT_TRUE(err.absolute);
  EXPECT_DOUBLE_EQ(err.value, 1.0);  // sqrt(4 * 0.25)
  EXPECT_THROW(relative_l2(sol, ScalarField::zero(), {}), std::invalid_argument);
}

TEST(Architecture, ParseAndFormat) {
  EXPECT_EQ(parse_architecture("2,100,300,1"), (std::vector<int>{2, 100, 300, 1}));
  EXPECT_EQ(parse_architecture("[2, 100, 100, 200, 1]"), (std::vector<int>{2, 100, 100, 200, 1}));
  EXPECT_EQ(format_architecture({2, 100, 300, 1}), "2;100;300;1");
  EXPECT_THROW(parse_architecture("2,100,300"), std::invalid_argument);
  EXPECT_THROW(parse_architecture("3,100,1"), std::invalid_argument);
  EXPECT_THROW(parse_architecture("2,1"), std::invalid_argument);
  RunSettings s;
  EXPECT_EQ(s.hidden_widths(), (std::vector<int>{2, 100, 300}));
}

TEST(Cases, RegistryHoldsTheTenExamples) {
  const auto& reg = case_registry();
  std::vector<std::string> ids;
  for (const auto& c : reg) ids.push_back(c.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"p1.1", "p1.2", "p1.3", "p1.4", "b2.1", "b2.2", "b2.3", "b2.4", "b2.5",
                                           "b2.6"}));
  EXPECT_THROW(make_case("p9.9"), std::out_of_range);
  for (const char* disk : {"p1.4", "b2.6"}) {
    const ExampleCase c = make_case(disk);
    EXPECT_FALSE(c.supports(Method::RnnBp));
    EXPECT_TRUE(c.supports(Method::Rnn));
    EXPECT_TRUE(c.supports(Method::RnnScaling));
    EXPECT_FALSE(c.domain.is_rect());
  }
  EXPECT_EQ(make_case("p1.3").k, 1);
  EXPECT_EQ(make_case("b2.4").k, 3);
  EXPECT_EQ(make_case("b2.4", 5).k, 5);
}

TEST(Cases, ExactSolutionsMatchClosedForms) {
  const double x = 0.37, y = 0.81;
  auto cosine_pair = [](double t) { return 2 * std::cos(1.5 * pi * t + 0.4 * pi) + 1.5 * std::cos(3 * pi * t - 0.2 * pi); };
  auto poly_trig = [&](int k) { return std::pow(x, 10) + std::pow(y, 10) + std::pow(x, k) * std::sin(y) + std::pow(y, k) * std::cos(x); };
  struct {
    const char* id;
    double want;
  } rows[] = {
      {"p1.1", std::sin(2 * pi * x) * std::sin(2 * pi * y)},
      {"p1.2", -cosine_pair(x) * cosine_pair(y)},
      {"p1.3", poly_trig(1)},
      {"p1.4", std::pow(x, 4) + std::pow(y, 4)},
      {"b2.1", std::sin(pi * x) * std::sin(pi * y)},
      {"b2.2", std::sin(2 * pi * x) * std::sin(2 * pi * y)},
      {"b2.3", std::exp(x * x + y * y + x * y)},
      {"b2.4", poly_trig(3)},
      {"b2.5", -cosine_pair(x) * cosine_pair(y)},
      {"b2.6", std::pow(x, 4) + std::pow(y, 4)},
  };
  for (const auto& r : rows) EXPECT_NEAR(make_case(r.id).exact.value(x, y), r.want, 1e-13) << r.id;
  EXPECT_NEAR(make_case("p1.3", 2).exact.value(x, y), poly_trig(2), 1e-13);
}

TEST(Cases, DomainsMatchExamples) {
  EXPECT_EQ(make_case("p1.2").domain.xmax(), 2.0);
  EXPECT_EQ(make_case("b2.5").domain.ymax(), 2.0);
  EXPECT_EQ(make_case("b2.3").domain.xmax(), 1.0);
  EXPECT_EQ(make_case("p1.4").domain.radius(), 1.0);
}

// The sources are derived with jets; check them against finite differences of
// the exact solution.
TEST(Cases, SourcesMatchFiniteDifferences) {
  testing::Rng rng(3);
  for (const auto& info : case_registry()) {
    const ExampleCase c = make_case(info.id);
    const ProblemSpec spec = c.problem(c.methods.front());
    const testing::Fn2 u = [&](double x, double y) { return c.exact.value(x, y); };
    for (int t = 0; t < 4; ++t) {
      const double x = c.domain.center().x + rng.uniform(-0.4, 0.4), y = c.domain.center().y + rng.uniform(-0.4, 0.4);
      double want;
      if (c.pde == Pde::Poisson) {
        const double h = testing::fd_step(2);
        want = -(testing::fd_derivative(u, x, y, 2, 0, h) + testing::fd_derivative(u, x, y, 0, 2, h));
      } else {
        const double h = testing::fd_step(4);
        want = testing::fd_derivative(u, x, y, 4, 0, h) + 2 * testing::fd_derivative(u, x, y, 2, 2, h) +
               testing::fd_derivative(u, x, y, 0, 4, h);
      }
      const double tol = c.pde == Pde::Poisson ? 1e-6 : 1e-4;
      EXPECT_LE(testing::rel_err(spec.source.value(x, y), want), tol) << info.id;
    }
  }
}

TEST(Cases, ManufacturedConsistencyForEveryCaseAndMethod) {
  const FeatureNet net = FeatureNet::build({2, 20, 30}, InitKind::UniformRm, 1.0, 0);
  for (const auto& info : case_registry()) {
    const ExampleCase c = make_case(info.id);
    const CollocationSet colloc = collocate(c.domain, 8);
    for (Method m : c.methods) {
      const ProblemSpec spec = c.problem(m);
      const auto lift = m == Method::RnnBp ? std::optional(build_lift(spec)) : std::nullopt;
      const LinearSystem sys = assemble(spec, net, colloc, lift ? &*lift : nullptr);
      EXPECT_LE(exact_rhs_defect(spec, sys, lift ? &*lift : nullptr), 1e-8) << info.id << " " << to_string(m);
    }
  }
}

RunSettings settings(const std::string& id, Method m, int N, std::vector<int> arch, InitKind init) {
  RunSettings s;
  s.case_id = id;
  s.method = m;
  s.N = N;
  s.architecture = std::move(arch);
  s.init = init;
  return s;
}

TEST(RunCase, PoissonPolynomialTrigIsExactWithBoundaryProcessing) {
  const auto s = settings("p1.3", Method::RnnBp, 12, {2, 100, 300, 1}, InitKind::UniformRm);
  const RunRecord r = run_case(make_case("p1.3"), s);
  EXPECT_LE(r.rel_l2, 1e-12);
  EXPECT_EQ(r.M, 300);
  EXPECT_EQ(r.pde, Pde::Poisson);
}

TEST(RunCase, BiharmonicPolynomialTrigIsExactWithBoundaryProcessing) {
  const auto s = settings("b2.4", Method::RnnBp, 12, {2, 100, 300, 1}, InitKind::UniformRm);
  EXPECT_LE(run_case(make_case("b2.4"), s).rel_l2, 1e-12);
}

TEST(RunCase, BiharmonicSineWithBoundaryProcessing) {
  const auto s = settings("b2.1", Method::RnnBp, 16, {2, 100, 250, 1}, InitKind::FanInUniform);
  EXPECT_LE(run_case(make_case("b2.1"), s).rel_l2, 1e-12);
}

TEST(RunCase, UnderResolvedRnnHasLargeError) {
  const auto s = settings("p1.1", Method::Rnn, 8, {2, 100, 50, 1}, InitKind::FanInUniform);
  EXPECT_GE(run_case(make_case("p1.1"), s).rel_l2, 0.1);
}

TEST(RunCase, RejectsBoundaryProcessingOnDisk) {
  const auto s = settings("p1.4", Method::RnnBp, 8, {2, 20, 1}, InitKind::FanInUniform);
  EXPECT_THROW(run_case(make_case("p1.4"), s), std::domain_error);
}

SweepSettings small_sweep() {
  SweepSettings sw;
  sw.base = settings("p1.1", Method::Rnn, 4, {2, 20, 10, 1}, InitKind::UniformRm);
  sw.methods = {Method::Rnn, Method::RnnScaling, Method::RnnBp};
  sw.Ns = {4, 6};
  sw.Ms = {10, 15};
  sw.seeds = {0};
  return sw;
}

TEST(Sweep, RowCountAndMedians) {
  const auto rows = sweep(small_sweep());
  ASSERT_EQ(rows.size(), 24u);
  int medians = 0;
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i].seed == "median") {
      ++medians;
      EXPECT_EQ(rows[i].rel_l2, rows[i - 1].rel_l2);  // one seed: median is that run
    }
  EXPECT_EQ(medians, 12);
}

TEST(Sweep, MedianOfOddSeedCount) {
  SweepSettings sw = small_sweep();
  sw.methods = {Method::Rnn};
  sw.Ns = {4};
  sw.Ms = {10};
  sw.seeds = {0, 1, 2};
  const auto rows = sweep(sw);
  ASSERT_EQ(rows.size(), 4u);
  std::vector<double> e = {rows[0].rel_l2, rows[1].rel_l2, rows[2].rel_l2};
  std::sort(e.begin(), e.end());
  EXPECT_EQ(rows[3].rel_l2, e[1]);
}

TEST(Sweep, CsvIsReproducibleWithoutTiming) {
  const std::string a = to_csv(sweep(small_sweep()), false);
  const std::string b = to_csv(sweep(small_sweep()), false);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.substr(0, a.find('\n')), "case,method,pde,N,M,widths,init,rm,seed,rcond,rel_l2,residual,rank,time_ms");
}

TEST(Csv, RoundTripsFloats) {
  RunRecord r;
  r.case_id = "b2.2";
  r.method = Method::RnnScaling;
  r.pde = Pde::Biharmonic;
  r.N = 32;
  r.M = 300;
  r.architecture = {2, 100, 300, 1};
  r.init = InitKind::UniformRm;
  r.rm = 1.0;
  r.seed = "4";
  r.rcond = 1e-15;
  r.rel_l2 = 0.1 + 0.2;
  r.residual = 1.0 / 3.0;
  r.rank = 287;
  r.time_ms = 12.5;
  std::ostringstream os;
  write_csv_row(os, r);
  std::string line = os.str();
  EXPECT_EQ(line.back(), '\n');
  std::vector<std::string> f;
  std::stringstream ss(line.substr(0, line.size() - 1));
  for (std::string tok; std::getline(ss, tok, ',');) f.push_back(tok);
  ASSERT_EQ(f.size(), 14u);
  EXPECT_EQ(f[0], "b2.2");
  EXPECT_EQ(f[1], "scaling");
  EXPECT_EQ(f[2], "biharmonic");
  EXPECT_EQ(f[5], "2;100;300;1");
  EXPECT_EQ(f[6], "uniform");
  EXPECT_EQ(std::stod(f[10]), r.rel_l2);
  EXPECT_EQ(std::stod(f[11]), r.residual);
  EXPECT_EQ(f[12], "287");
  std::ostringstream untimed;
  write_csv_row(untimed, r, false);
  EXPECT_EQ(untimed.str().substr(untimed.str().size() - 2), ",\n");
}

TEST(Heatmap, ExactFieldIsBlack) {
  const fs::path dir = scratch_dir();
  const ScalarField one = ScalarField::from_expression([](const auto& x, const auto&) { return x * 0.0 + 1.0; });
  const ProblemSpec spec = manufactured_problem(Pde::Poisson, Method::Rnn, Domain::unit_square(), one);
  const Solution sol(spec, constant_feature_net(), Eigen::VectorXd::Constant(1, 1.0), std::nullopt, {});
  const auto path = (dir / "exact.pgm").string();
  const HeatmapStats st = write_heatmap(sol, one, 16, path);
  EXPECT_EQ(st.max_error, 0.0);
  std::ifstream in(path, std::ios::binary);
  std::string magic;
  int w, h, maxv;
  in >> magic >> w >> h >> maxv;
  in.get();
  EXPECT_EQ(magic, "P5");
  EXPECT_EQ(w, 16);
  EXPECT_EQ(h, 16);
  std::string pix((std::istreambuf_iterator<char>(in)), {});
  ASSERT_EQ(pix.size(), 256u);
  for (char c : pix) EXPECT_EQ(c, 0);
  std::ifstream csv((dir / "exact.csv").string());
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header.rfind("# max_abs_error=0", 0), 0u);
  EXPECT_THROW(write_heatmap(sol, one, 8, path), std::invalid_argument);
  EXPECT_THROW(write_heatmap(sol, one, 16, (dir / "missing" / "x.pgm").string()), std::runtime_error);
  fs::remove_all(dir);
}

double boundary_distance(const Domain& d, Point p) { return -d.signed_distance(p); }

TEST(Heatmap, PlainRnnErrorPeaksNearBoundary) {
  const ExampleCase c = make_case("p1.1");
  const auto run = run_case_full(c, settings("p1.1", Method::Rnn, 32, {2, 100, 300, 1}, InitKind::FanInUniform));
  const int res = 100;
  const auto field = error_field(run.solution, c.exact, res);
  size_t arg = 0;
  for (size_t i = 0; i < field.size(); ++i)
    if (field[i] > field[arg]) arg = i;
  const int row = static_cast<int>(arg) / res, col = static_cast<int>(arg) % res;
  const int pixels_from_edge = std::min({row, col, res - 1 - row, res - 1 - col});
  EXPECT_LE(pixels_from_edge, 3);
}

TEST(Heatmap, BoundaryProcessingIsExactOnBoundaryPixels) {
  const ExampleCase c = make_case("b2.1");
  const auto run = run_case_full(c, settings("b2.1", Method::RnnBp, 16, {2, 100, 250, 1}, InitKind::FanInUniform));
  const int res = 64;
  const auto field = error_field(run.solution, c.exact, res);
  double edge = 0, inner = 0;
  for (int r = 0; r < res; ++r)
    for (int k = 0; k < res; ++k) {
      const double e = field[static_cast<size_t>(r * res + k)];
      if (r == 0 || k == 0 || r == res - 1 || k == res - 1)
        edge = std::max(edge, e);
      else
        inner = std::max(inner, e);
    }
  EXPECT_GT(inner, 0.0);
  EXPECT_LE(edge, 1e-11 * std::max(inner, 1e-300) + 1e-300);
}

TEST(Heatmap, DiskBackgroundIsNan) {
  const ExampleCase c = make_case("p1.4");
  const auto run = run_case_full(c, settings("p1.4", Method::Rnn, 8, {2, 20, 30, 1}, InitKind::FanInUniform));
  const auto field = error_field(run.solution, c.exact, 16);
  EXPECT_TRUE(std::isnan(field[0]));                  // corner of the bounding box
  EXPECT_FALSE(std::isnan(field[8 * 16 + 8]));        // near the centre
  (void)boundary_distance;
}

TEST(DebugDump, WritesAllArtifacts) {
  const fs::path dir = scratch_dir();
  const std::string prefix = (dir / "run").string();
  write_debug_dump(make_case("p1.1"), settings("p1.1", Method::RnnBp, 4, {2, 10, 8, 1}, InitKind::UniformRm), prefix);
  for (const char* ext : {".net.json", ".points.csv", ".system.csv", ".solution.csv"})
    EXPECT_TRUE(fs::exists(prefix + ext)) << ext;
  const auto net = FeatureNet::from_json(nlohmann::json::parse(std::ifstream(prefix + ".net.json")));
  EXPECT_EQ(net.feature_count(), 8);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace rnnbp
