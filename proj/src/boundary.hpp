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

// Boundary processing on rectangles: the lifted field
//   u_hat = B * (omega . phi) + g_D,   g_D = s + P,
// where B vanishes on the boundary (with its normal derivative for clamped
// data), P interpolates corner data, and s blends the corner-corrected edge
// traces. All pieces are evaluated on the unit square (xi, eta) and mapped to
// physical coordinates by the chain rule.

#pragma once

#include <array>
#include <functional>
#include <optional>

#include "field.hpp"
#include "geometry.hpp"
#include "jet.hpp"

namespace rnnbp {

enum class BoundaryKind { Dirichlet, Clamped };

template <class J>
struct LagrangeBasis {
  J l0, l1;
};

template <class J>
struct HermiteBasis {
  J h0, h1, g0, g1;
};

/// l0 = 1 - t, l1 = t.
template <class J>
LagrangeBasis<J> basis_lagrange(const J& t) {
  return {1.0 - t, t};
}

/// H0 = (1-t)^2 (1+2t), H1 = t^2 (3-2t), G0 = t (1-t)^2, G1 = t^2 (t-1).
template <class J>
HermiteBasis<J> basis_hermite(const J& t) {
  const J om = 1.0 - t;
  const J om2 = om * om;
  const J t2 = t * t;
  return {om2 * (1.0 + 2.0 * t), t2 * (3.0 - 2.0 * t), t * om2, t2 * (t - 1.0)};
}

/// xi(1-xi) eta(1-eta) for Dirichlet data, its square for clamped data, in
/// unit-mapped coordinates of the rectangle.
Jet2 bump(BoundaryKind kind, const Domain& rect, double x, double y, int degree);

/// Edge index: 0 = left (xi=0), 1 = right (xi=1), 2 = bottom (eta=0), 3 = top (eta=1).
/// Traces are functions of the unit edge parameter s in [0,1]:
///   value[0](s) = u(0,s)   value[1](s) = u(1,s)   value[2](s) = u(s,0)   value[3](s) = u(s,1)
///   slope[0](s) = u_xi(0,s) slope[1](s) = u_xi(1,s) slope[2](s) = u_eta(s,0) slope[3](s) = u_eta(s,1)
/// each returned as a univariate jet in s of the requested degree.
using TraceFn = std::function<Jet1(double s, int degree)>;

struct EdgeTraces {
  std::array<TraceFn, 4> value;
  std::array<TraceFn, 4> slope;
};

/// Extracts traces from an exact solution given in physical coordinates.
/// Slope traces need a field built from an expression.
EdgeTraces traces_from_field(const ScalarField& u, const Domain& rect, BoundaryKind kind);

/// Corner (x_i, y_j) of the unit square is [i][j].
struct CornerData {
  std::array<std::array<double, 2>, 2> u{};
  std::array<std::array<double, 2>, 2> ux{};
  std::array<std::array<double, 2>, 2> uy{};
  std::array<std::array<double, 2>, 2> uxy{};
  bool has_derivatives = false;
};

CornerData corner_data_from_traces(const EdgeTraces& traces, BoundaryKind kind);

/// Largest mismatch between traces that meet at a corner (values, and for
/// clamped data slopes and the cross derivative).
double trace_compatibility_defect(const EdgeTraces& traces, BoundaryKind kind);

class BoundaryLift {
 public:
  BoundaryLift(BoundaryKind kind, const Domain& rect, EdgeTraces traces);
  BoundaryLift(BoundaryKind kind, const Domain& rect, EdgeTraces traces, const CornerData& corners);

  static BoundaryLift from_field(BoundaryKind kind, const Domain& rect, const ScalarField& u);

  BoundaryKind kind() const { return kind_; }
  const Domain& domain() const { return rect_; }
  const CornerData& corners() const { return corners_; }

  Jet2 bump(double x, double y, int degree) const;
  /// Corner interpolant P: bilinear (Dirichlet) or bicubic Hermite (clamped).
  Jet2 corner(double x, double y, int degree) const;
  /// Edge blend s of the corner-corrected traces.
  Jet2 edge_blend(double x, double y, int degree) const;
  /// g_D = s + P.
  Jet2 lift(double x, double y, int degree) const;

  /// Corner-corrected traces t~_i and h~_i on the unit edge parameter.
  Jet1 corrected_value(int edge, double s, int degree) const;
  Jet1 corrected_slope(int edge, double s, int degree) const;

 private:
  Jet2 corner_unit(double xi, double eta, int degree) const;
  Jet2 blend_unit(double xi, double eta, int degree) const;
  Jet2 to_physical(Jet2 unit) const;
  double xi(double x) const { return (x - rect_.xmin()) / (rect_.xmax() - rect_.xmin()); }
  double eta(double y) const { return (y - rect_.ymin()) / (rect_.ymax() - rect_.ymin()); }
  // P and its transverse derivative along an edge, as jets in the edge parameter.
  Jet1 corner_along(int edge, double s, int degree, bool transverse) const;

  BoundaryKind kind_;
  Domain rect_;
  EdgeTraces traces_;
  CornerData corners_;
  // Corner matrix K with P = bx(xi)^T K by(eta); 2x2 or 4x4 in basis order
  // [l0 l1] or [H0 H1 G0 G1].
  std::array<std::array<double, 4>, 4> k_{};
};

}  // namespace rnnbp
