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
#include <numbers>
#include <stdexcept>

#include "boundary.hpp"
#include "field.hpp"
#include "test_support.hpp"

namespace rnnbp {
namespace {

using std::numbers::pi;
using testing::Rng;

constexpr double kTol = 1e-12;

// Derivative of a univariate jet basis function at t.
template <class Pick>
std::pair<double, double> value_and_slope(Pick pick, double t) {
  const Jet1 j = pick(basis_hermite(Jet1::seed(t, 1.0, 1)));
  return {j.derivative(0), j.derivative(1)};
}

TEST(Basis, HermiteCardinality) {
  auto h0 = [](const auto& b) { return b.h0; };
  auto h1 = [](const auto& b) { return b.h1; };
  auto g0 = [](const auto& b) { return b.g0; };
  auto g1 = [](const auto& b) { return b.g1; };
  using P = std::pair<double, double>;
  EXPECT_EQ(value_and_slope(h0, 0), P(1, 0));
  EXPECT_EQ(value_and_slope(h0, 1), P(0, 0));
  EXPECT_EQ(value_and_slope(h1, 0), P(0, 0));
  EXPECT_EQ(value_and_slope(h1, 1), P(1, 0));
  EXPECT_EQ(value_and_slope(g0, 0), P(0, 1));
  EXPECT_EQ(value_and_slope(g0, 1), P(0, 0));
  EXPECT_EQ(value_and_slope(g1, 0), P(0, 0));
  EXPECT_EQ(value_and_slope(g1, 1), P(0, 1));
}

TEST(Basis, LagrangeCardinality) {
  const auto b0 = basis_lagrange(0.0), b1 = basis_lagrange(1.0);
  EXPECT_EQ(b0.l0, 1.0);
  EXPECT_EQ(b0.l1, 0.0);
  EXPECT_EQ(b1.l0, 0.0);
  EXPECT_EQ(b1.l1, 1.0);
}

TEST(Basis, PartitionOfUnityAsJets) {
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const double x = rng.uniform(-0.5, 1.5), y = rng.uniform(-0.5, 1.5);
    const Jet2 xi = jet_seed(x, y, Var::X, 4) * 0.7 + jet_seed(x, y, Var::Y, 4) * 0.2;
    const auto l = basis_lagrange(xi);
    const auto h = basis_hermite(xi);
    const Jet2 sl = l.l0 + l.l1, sh = h.h0 + h.h1;
    EXPECT_NEAR(sl.value(), 1.0, kTol);
    EXPECT_NEAR(sh.value(), 1.0, kTol);
    for (int k = 1; k < 15; ++k) {
      EXPECT_NEAR(sl.coeffs()[k], 0.0, kTol);
      EXPECT_NEAR(sh.coeffs()[k], 0.0, kTol);
    }
  }
}

TEST(Bump, CentreValue) {
  EXPECT_DOUBLE_EQ(bump(BoundaryKind::Dirichlet, Domain::unit_square(), 0.5, 0.5, 2).value(), 0.0625);
  EXPECT_DOUBLE_EQ(bump(BoundaryKind::Clamped, Domain::unit_square(), 0.5, 0.5, 4).value(), 0.0625 * 0.0625);
}

TEST(Bump, ClampedVanishesWithNormalDerivative) {
  Rng rng(3);
  const Domain dom = Domain::rect(-1, 2, 0.5, 1.5);
  for (int t = 0; t < 200; ++t) {
    const double s = rng.uniform(0, 1);
    const double xs = -1 + 3 * s, ys = 0.5 + s;
    struct {
      double x, y, nx, ny;
    } pts[] = {{-1, ys, -1, 0}, {2, ys, 1, 0}, {xs, 0.5, 0, -1}, {xs, 1.5, 0, 1}};
    for (auto p : pts) {
      const Jet2 b = bump(BoundaryKind::Clamped, dom, p.x, p.y, 4);
      EXPECT_NEAR(b.value(), 0.0, 1e-15);
      EXPECT_NEAR(normal_derivative(b, p.nx, p.ny), 0.0, 1e-15);
      EXPECT_NEAR(bump(BoundaryKind::Dirichlet, dom, p.x, p.y, 2).value(), 0.0, 1e-15);
    }
  }
}

TEST(Bump, PositiveInside) {
  Rng rng(4);
  for (int t = 0; t < 1000; ++t) {
    const double x = rng.uniform(0, 1), y = rng.uniform(0, 1);
    if (x == 0 || y == 0) continue;
    EXPECT_GT(bump(BoundaryKind::Dirichlet, Domain::unit_square(), x, y, 2).value(), 0.0);
  }
}

TEST(Bump, PhysicalDerivativesOnStretchedRectangle) {
  // B = (x-a)(b-x)(y-c)(d-y) / ((b-a)^2 (d-c)^2)
  const Domain dom = Domain::rect(0, 2, -1, 3);
  const double x = 0.7, y = 0.4;
  const Jet2 b = bump(BoundaryKind::Dirichlet, dom, x, y, 4);
  const Jet2 X = jet_seed(x, y, Var::X, 4), Y = jet_seed(x, y, Var::Y, 4);
  const Jet2 want = X * (2.0 - X) * (Y + 1.0) * (3.0 - Y) / 64.0;
  for (int k = 0; k < 15; ++k) EXPECT_NEAR(b.coeffs()[k], want.coeffs()[k], 1e-15);
}

TEST(CornerInterpolant, BilinearReproducesXY) {
  const auto u = ScalarField::from_expression([](const auto& x, const auto& y) { return x * y; });
  const BoundaryLift lift = BoundaryLift::from_field(BoundaryKind::Dirichlet, Domain::unit_square(), u);
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const double x = rng.uniform(0, 1), y = rng.uniform(0, 1);
    const Jet2 p = lift.corner(x, y, 4), e = u.jet(x, y, 4);
    for (int k = 0; k < 15; ++k) EXPECT_NEAR(p.coeffs()[k], e.coeffs()[k], kTol);
  }
}

TEST(CornerInterpolant, HermiteMatchesCornerData) {
  const auto u = ScalarField::from_expression([](const auto& x, const auto& y) { return ipow(x, 3) * ipow(y, 3); });
  for (const Domain& dom : {Domain::unit_square(), Domain::rect(1, 2, -1, 0.5)}) {
    const BoundaryLift lift = BoundaryLift::from_field(BoundaryKind::Clamped, dom, u);
    for (double x : {dom.xmin(), dom.xmax()})
      for (double y : {dom.ymin(), dom.ymax()}) {
        const Jet2 p = lift.corner(x, y, 2), e = u.jet(x, y, 2);
        for (auto [i, j] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}})
          EXPECT_NEAR(extract_derivative(p, i, j), extract_derivative(e, i, j),
                      kTol * std::max(1.0, std::abs(extract_derivative(e, i, j))));
      }
  }
}

TEST(CornerInterpolant, ZeroCornerDataGivesZero) {
  // sin^2(pi x) sin^2(pi y) has vanishing value, slopes and cross derivative at every corner.
  const auto u = ScalarField::from_expression(
      [](const auto& x, const auto& y) { return ipow(sin(pi * x), 2) * ipow(sin(pi * y), 2); });
  for (auto kind : {BoundaryKind::Dirichlet, BoundaryKind::Clamped}) {
    const BoundaryLift lift = BoundaryLift::from_field(kind, Domain::unit_square(), u);
    for (double x : {0.1, 0.5, 0.93})
      for (double y : {0.0, 0.3, 1.0})
        for (double c : lift.corner(x, y, 4).coeffs()) EXPECT_NEAR(c, 0.0, 1e-14);
  }
}

TEST(EdgeBlend, MatchesTraceWhenCornersVanish) {
  const auto u = ScalarField::from_expression(
      [](const auto& x, const auto& y) { return (1.0 + x) * sin(pi * y) + y * (1.0 - y) * exp(x); });
  const BoundaryLift lift = BoundaryLift::from_field(BoundaryKind::Dirichlet, Domain::unit_square(), u);
  for (int k = 0; k < 50; ++k) {
    const double y = (k + 0.5) / 50;
    EXPECT_NEAR(lift.edge_blend(0, y, 2).value(), u.value(0, y), kTol);
    EXPECT_NEAR(lift.corner(0, y, 2).value(), 0.0, kTol);
  }
}

TEST(EdgeBlend, ClampedNormalSlopeMatchesCorrectedTrace) {
  const auto u = ScalarField::from_expression(
      [](const auto& x, const auto& y) { return exp(x * x + y * y + x * y) + x * sin(2.0 * y); });
  const BoundaryLift lift = BoundaryLift::from_field(BoundaryKind::Clamped, Domain::unit_square(), u);
  for (int k = 0; k < 50; ++k) {
    const double s = (k + 0.5) / 50;
    EXPECT_NEAR(lift.edge_blend(0, s, 4).coeff(1, 0), lift.corrected_slope(0, s, 1).value(), kTol);
    EXPECT_NEAR(lift.edge_blend(1, s, 4).coeff(1, 0), lift.corrected_slope(1, s, 1).value(), kTol);
    EXPECT_NEAR(lift.edge_blend(s, 0, 4).coeff(0, 1), lift.corrected_slope(2, s, 1).value(), kTol);
    EXPECT_NEAR(lift.edge_blend(s, 1, 4).coeff(0, 1), lift.corrected_slope(3, s, 1).value(), kTol);
  }
  EXPECT_THROW(BoundaryLift::from_field(BoundaryKind::Dirichlet, Domain::unit_square(), u).corrected_slope(0, 0.5, 1),
               std::logic_error);
}

TEST(EdgeBlend, ZeroTracesGiveZero) {
  for (auto kind : {BoundaryKind::Dirichlet, BoundaryKind::Clamped}) {
    const BoundaryLift lift = BoundaryLift::from_field(kind, Domain::unit_square(), ScalarField::zero());
    for (double c : lift.edge_blend(0.3, 0.6, 4).coeffs()) EXPECT_EQ(c, 0.0);
    for (double c : lift.lift(0.9, 0.1, 4).coeffs()) EXPECT_EQ(c, 0.0);
  }
}

TEST(Lift, ReproducesProductFormDirichlet) {
  const auto u = ScalarField::from_expression([](const auto& x, const auto& y) { return x * sin(y); });
  const BoundaryLift lift = BoundaryLift::from_field(BoundaryKind::Dirichlet, Domain::unit_square(), u);
  Rng rng(6);
  for (int t = 0; t < 1000; ++t) {
    const double x = rng.uniform(0, 1), y = rng.uniform(0, 1);
    const Jet2 g = lift.lift(x, y, 4), e = u.jet(x, y, 4);
    for (int k = 0; k < 15; ++k) ASSERT_NEAR(g.coeffs()[k], e.coeffs()[k], kTol);
  }
}

TEST(Lift, ReproducesProductFormClamped) {
  const auto u = ScalarField::from_expression([](const auto& x, const auto& y) { return ipow(x, 3) * sin(y); });
  const BoundaryLift lift = BoundaryLift::from_field(BoundaryKind::Clamped, Domain::unit_square(), u);
  Rng rng(7);
  for (int t = 0; t < 1000; ++t) {
    const double x = rng.uniform(0, 1), y = rng.uniform(0, 1);
    const Jet2 g = lift.lift(x, y, 4), e = u.jet(x, y, 4);
    for (int k = 0; k < 15; ++k) ASSERT_NEAR(g.coeffs()[k], e.coeffs()[k], kTol);
  }
}

// u = f1(x) p1(y) + f2(y) p2(x) with random low-degree p and transcendental f.
TEST(LiftProperty, ReproductionOnRectangles) {
  Rng rng(8);
  for (int trial = 0; trial < 12; ++trial) {
    const auto kind = trial % 2 ? BoundaryKind::Clamped : BoundaryKind::Dirichlet;
    const int deg = kind == BoundaryKind::Clamped ? 3 : 1;
    double p1[4] = {}, p2[4] = {};
    for (int k = 0; k <= deg; ++k) {
      p1[k] = rng.uniform(-1, 1);
      p2[k] = rng.uniform(-1, 1);
    }
    const double w1 = rng.uniform(0.5, 3), w2 = rng.uniform(0.5, 3);
    const auto u = ScalarField::from_expression([=](const auto& x, const auto& y) {
      auto poly = [&](const double* c, const auto& t) { return c[0] + t * (c[1] + t * (c[2] + t * c[3])); };
      return sin(w1 * x) * poly(p1, y) + exp(0.3 * y) * cos(w2 * y) * poly(p2, x);
    });
    const double a = rng.uniform(-1, 0.5), c = rng.uniform(-1, 0.5);
    const Domain dom = Domain::rect(a, a + rng.uniform(0.5, 2), c, c + rng.uniform(0.5, 2));
    const BoundaryLift lift = BoundaryLift::from_field(kind, dom, u);
    for (int t = 0; t < 100; ++t) {
      const double x = rng.uniform(dom.xmin(), dom.xmax()), y = rng.uniform(dom.ymin(), dom.ymax());
      const Jet2 g = lift.lift(x, y, 4), e = u.jet(x, y, 4);
      for (int k = 0; k < 15; ++k)
        ASSERT_NEAR(g.coeffs()[k], e.coeffs()[k], 1e-11 * std::max(1.0, std::abs(e.coeffs()[k]))) << trial;
    }
  }
}

TEST(LiftProperty, CorrectedTracesVanishAtEndpoints) {
  Rng rng(9);
  for (int trial = 0; trial < 6; ++trial) {
    const double w = rng.uniform(0.5, 2.5), v = rng.uniform(-1, 1);
    const auto u = ScalarField::from_expression(
        [=](const auto& x, const auto& y) { return exp(v * x * y) * cos(w * x + y) + ipow(x, 4) * y; });
    const Domain dom = Domain::rect(0, rng.uniform(0.5, 2), 0, rng.uniform(0.5, 2));
    for (auto kind : {BoundaryKind::Dirichlet, BoundaryKind::Clamped}) {
      const BoundaryLift lift = BoundaryLift::from_field(kind, dom, u);
      for (int e = 0; e < 4; ++e)
        for (double s : {0.0, 1.0}) {
          const Jet1 t = lift.corrected_value(e, s, 1);
          EXPECT_NEAR(t.value(), 0.0, 1e-11);
          if (kind == BoundaryKind::Clamped) {
            EXPECT_NEAR(t.derivative(1), 0.0, 1e-11);
            const Jet1 h = lift.corrected_slope(e, s, 1);
            EXPECT_NEAR(h.value(), 0.0, 1e-11);
            EXPECT_NEAR(h.derivative(1), 0.0, 1e-11);
          }
        }
    }
  }
}

TEST(LiftProperty, BoundaryDataOnStretchedRectangle) {
  const auto u = ScalarField::from_expression([](const auto& x, const auto& y) {
    return -(2.0 * cos(1.5 * pi * x + 0.4 * pi) + 1.5 * cos(3.0 * pi * x - 0.2 * pi)) *
           (2.0 * cos(1.5 * pi * y + 0.4 * pi) + 1.5 * cos(3.0 * pi * y - 0.2 * pi));
  });
  const Domain dom = Domain::rect(0, 2, 0, 2);
  const BoundaryLift lift = BoundaryLift::from_field(BoundaryKind::Clamped, dom, u);
  for (int k = 0; k <= 40; ++k) {
    const double s = 2.0 * k / 40;
    for (auto [x, y, nx, ny] : {std::array{0.0, s, -1.0, 0.0}, {2.0, s, 1.0, 0.0}, {s, 0.0, 0.0, -1.0}, {s, 2.0, 0.0, 1.0}}) {
      const Jet2 g = lift.lift(x, y, 1), e = u.jet(x, y, 1);
      EXPECT_NEAR(g.value(), e.value(), 1e-11);
      EXPECT_NEAR(normal_derivative(g, nx, ny), normal_derivative(e, nx, ny), 1e-10);
    }
  }
}

TEST(Traces, CompatibleAtCorners) {
  const auto u = ScalarField::from_expression([](const auto& x, const auto& y) { return exp(x * x + y * y + x * y); });
  for (auto kind : {BoundaryKind::Dirichlet, BoundaryKind::Clamped}) {
    const EdgeTraces tr = traces_from_field(u, Domain::rect(0, 1.5, -0.5, 1), kind);
    EXPECT_LT(trace_compatibility_defect(tr, kind), 1e-12);
  }
}

TEST(Traces, CallableFieldsSupportDirichletOnly) {
  const auto u = ScalarField::from_callable([](double x, double y, int degree) {
    return sin(jet_seed(x, y, Var::X, degree)) * jet_seed(x, y, Var::Y, degree);
  });
  const BoundaryLift lift = BoundaryLift::from_field(BoundaryKind::Dirichlet, Domain::unit_square(), u);
  EXPECT_NEAR(lift.lift(1.0, 0.4, 2).value(), std::sin(1.0) * 0.4, kTol);
  EXPECT_NEAR(lift.lift(0.3, 0.4, 2).value(), std::sin(0.3) * 0.4, kTol);
  EXPECT_THROW(traces_from_field(u, Domain::unit_square(), BoundaryKind::Clamped), std::invalid_argument);
}

TEST(Traces, RawTracesDriveTheLift) {
  // u = x + 2y supplied edge by edge in the unit parameter.
  EdgeTraces tr;
  tr.value[0] = [](double s, int d) { return Jet1::seed(2 * s, 2.0, d); };
  tr.value[1] = [](double s, int d) { return Jet1::seed(1 + 2 * s, 2.0, d); };
  tr.value[2] = [](double s, int d) { return Jet1::seed(s, 1.0, d); };
  tr.value[3] = [](double s, int d) { return Jet1::seed(2 + s, 1.0, d); };
  const BoundaryLift lift(BoundaryKind::Dirichlet, Domain::unit_square(), tr);
  EXPECT_NEAR(lift.lift(0.3, 0.8, 2).value(), 1.9, kTol);
  EXPECT_NEAR(laplacian(lift.lift(0.3, 0.8, 2)), 0.0, kTol);
}

TEST(Lift, RejectsDisk) {
  EXPECT_THROW(BoundaryLift::from_field(BoundaryKind::Dirichlet, Domain::disk(0, 0, 1), ScalarField::zero()),
               std::domain_error);
  EXPECT_THROW(bump(BoundaryKind::Dirichlet, Domain::disk(0, 0, 1), 0, 0, 2), std::domain_error);
}

}  // namespace
}  // namespace rnnbp
