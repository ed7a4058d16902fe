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

#include "boundary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rnnbp {
namespace {

// Basis in the order used by the corner matrix: [l0 l1] or [H0 H1 G0 G1].
template <class J>
int basis_vector(BoundaryKind kind, const J& t, std::array<J, 4>& out) {
  if (kind == BoundaryKind::Dirichlet) {
    auto b = basis_lagrange(t);
    out = {b.l0, b.l1, t * 0.0, t * 0.0};
    return 2;
  }
  auto b = basis_hermite(t);
  out = {b.h0, b.h1, b.g0, b.g1};
  return 4;
}

Jet2 embed_along_y(const Jet1& j, int degree) {
  Jet2 r(degree);
  for (int k = 0; k <= degree; ++k) r.set_coeff(0, k, j[k]);
  return r;
}

Jet2 embed_along_x(const Jet1& j, int degree) {
  Jet2 r(degree);
  for (int k = 0; k <= degree; ++k) r.set_coeff(k, 0, j[k]);
  return r;
}

void require_rect(const Domain& d) {
  if (!d.is_rect()) throw std::domain_error("boundary processing is only defined on rectangles");
}

Jet1 truncate(const Jet1& j, int degree) {
  Jet1 r(degree);
  for (int k = 0; k <= std::min(degree, j.degree()); ++k) r[k] = j[k];
  return r;
}

}  // namespace

Jet2 bump(BoundaryKind kind, const Domain& rect, double x, double y, int degree) {
  require_rect(rect);
  const double w = rect.xmax() - rect.xmin(), h = rect.ymax() - rect.ymin();
  const double xi = (x - rect.xmin()) / w, eta = (y - rect.ymin()) / h;
  const Jet2 X = jet_seed(xi, eta, Var::X, degree);
  const Jet2 Y = jet_seed(xi, eta, Var::Y, degree);
  Jet2 b = X * (1.0 - X) * (Y * (1.0 - Y));
  if (kind == BoundaryKind::Clamped) b = b * b;
  auto c = b.coeffs();
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j) c[Jet2::index(i, j)] /= std::pow(w, i) * std::pow(h, j);
  return b;
}

EdgeTraces traces_from_field(const ScalarField& u, const Domain& rect, BoundaryKind kind) {
  require_rect(rect);
  const double a = rect.xmin(), c = rect.ymin();
  const double w = rect.xmax() - a, h = rect.ymax() - c;
  EdgeTraces t;
  if (!u.composable()) {
    if (kind == BoundaryKind::Clamped)
      throw std::invalid_argument("clamped traces need a field built from an expression");
    // Tangential expansion straight from the point jet; enough for values.
    for (int e = 0; e < 4; ++e) {
      t.value[e] = [u, e, a, c, w, h](double s, int degree) {
        const bool vertical = e < 2;
        const double x = vertical ? a + (e == 0 ? 0.0 : w) : a + w * s;
        const double y = vertical ? c + h * s : c + (e == 2 ? 0.0 : h);
        const Jet2 j = u.jet(x, y, 4);
        Jet1 r(degree);
        const double scale = vertical ? h : w;
        for (int k = 0; k <= degree; ++k) r[k] = (vertical ? j.coeff(0, k) : j.coeff(k, 0)) * std::pow(scale, k);
        return r;
      };
    }
    return t;
  }
  for (int e = 0; e < 4; ++e) {
    auto eval = [u, e, a, c, w, h](double s, int degree) {
      const bool vertical = e < 2;
      EdgeJet X, Y;
      if (vertical) {
        X = {Jet1::constant(a + (e == 0 ? 0.0 : w), degree), Jet1::constant(w, degree)};
        Y = {Jet1::seed(c + h * s, h, degree), Jet1(degree)};
      } else {
        X = {Jet1::seed(a + w * s, w, degree), Jet1(degree)};
        Y = {Jet1::constant(c + (e == 2 ? 0.0 : h), degree), Jet1::constant(h, degree)};
      }
      return u.compose_edge(X, Y);
    };
    t.value[e] = [eval](double s, int degree) { return eval(s, degree).re; };
    t.slope[e] = [eval](double s, int degree) { return eval(s, degree).du; };
  }
  return t;
}

CornerData corner_data_from_traces(const EdgeTraces& t, BoundaryKind kind) {
  for (const auto& f : t.value)
    if (!f) throw std::invalid_argument("missing edge value trace");
  CornerData cd;
  for (int j = 0; j < 2; ++j) {
    cd.u[0][j] = t.value[0](j, 1).value();
    cd.u[1][j] = t.value[1](j, 1).value();
  }
  if (kind == BoundaryKind::Clamped) {
    for (const auto& f : t.slope)
      if (!f) throw std::invalid_argument("missing edge slope trace");
    for (int i = 0; i < 2; ++i) {
      cd.ux[0][i] = t.slope[0](i, 1).value();
      cd.ux[1][i] = t.slope[1](i, 1).value();
      const Jet1 bottom = t.slope[2](i, 1), top = t.slope[3](i, 1);
      cd.uy[i][0] = bottom.value();
      cd.uy[i][1] = top.value();
      cd.uxy[i][0] = bottom.derivative(1);
      cd.uxy[i][1] = top.derivative(1);
    }
    cd.has_derivatives = true;
  }
  return cd;
}

double trace_compatibility_defect(const EdgeTraces& t, BoundaryKind kind) {
  double defect = 0.0;
  // corner (i, j): vertical edge i at s=j, horizontal edge 2+j at s=i
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Jet1 v = t.value[i](j, 1), hz = t.value[2 + j](i, 1);
      defect = std::max(defect, std::abs(v.value() - hz.value()));
      if (kind == BoundaryKind::Clamped) {
        const Jet1 sv = t.slope[i](j, 1), sh = t.slope[2 + j](i, 1);
        defect = std::max(defect, std::abs(sv.value() - hz.derivative(1)));   // u_xi
        defect = std::max(defect, std::abs(sh.value() - v.derivative(1)));    // u_eta
        defect = std::max(defect, std::abs(sv.derivative(1) - sh.derivative(1)));  // u_xi_eta
      }
    }
  return defect;
}

BoundaryLift::BoundaryLift(BoundaryKind kind, const Domain& rect, EdgeTraces traces)
    : BoundaryLift(kind, rect, traces, corner_data_from_traces(traces, kind)) {}

BoundaryLift::BoundaryLift(BoundaryKind kind, const Domain& rect, EdgeTraces traces, const CornerData& corners)
    : kind_(kind), rect_(rect), traces_(std::move(traces)), corners_(corners) {
  require_rect(rect_);
  for (const auto& f : traces_.value)
    if (!f) throw std::invalid_argument("missing edge value trace");
  if (kind_ == BoundaryKind::Clamped) {
    if (!corners_.has_derivatives) throw std::invalid_argument("clamped lift needs corner derivative data");
    for (const auto& f : traces_.slope)
      if (!f) throw std::invalid_argument("missing edge slope trace");
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      k_[i][j] = corners_.u[i][j];
      k_[i][2 + j] = corners_.uy[i][j];
      k_[2 + i][j] = corners_.ux[i][j];
      k_[2 + i][2 + j] = corners_.uxy[i][j];
    }
}

BoundaryLift BoundaryLift::from_field(BoundaryKind kind, const Domain& rect, const ScalarField& u) {
  return BoundaryLift(kind, rect, traces_from_field(u, rect, kind));
}

Jet2 BoundaryLift::to_physical(Jet2 unit) const {
  const double w = rect_.xmax() - rect_.xmin(), h = rect_.ymax() - rect_.ymin();
  const int d = unit.degree();
  auto c = unit.coeffs();
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) c[Jet2::index(i, j)] /= std::pow(w, i) * std::pow(h, j);
  return unit;
}

Jet2 BoundaryLift::bump(double x, double y, int degree) const { return rnnbp::bump(kind_, rect_, x, y, degree); }

Jet2 BoundaryLift::corner_unit(double xi, double eta, int degree) const {
  std::array<Jet2, 4> bx{Jet2(degree), Jet2(degree), Jet2(degree), Jet2(degree)}, by = bx;
  const int n = basis_vector(kind_, jet_seed(xi, eta, Var::X, degree), bx);
  basis_vector(kind_, jet_seed(xi, eta, Var::Y, degree), by);
  Jet2 p(degree);
  for (int i = 0; i < n; ++i) {
    Jet2 row(degree);
    for (int j = 0; j < n; ++j) row += k_[i][j] * by[j];
    p += bx[i] * row;
  }
  return p;
}

Jet1 BoundaryLift::corner_along(int edge, double s, int degree, bool transverse) const {
  const double f = edge % 2;
  std::array<Jet1, 4> fixed{Jet1(1), Jet1(1), Jet1(1), Jet1(1)};
  std::array<Jet1, 4> along{Jet1(degree), Jet1(degree), Jet1(degree), Jet1(degree)};
  const int n = basis_vector(kind_, Jet1::seed(f, 1.0, 1), fixed);
  basis_vector(kind_, Jet1::seed(s, 1.0, degree), along);
  std::array<double, 4> w{};
  for (int i = 0; i < n; ++i) w[i] = transverse ? fixed[i].derivative(1) : fixed[i].value();
  Jet1 r(degree);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (edge < 2)
        r += along[j] * (w[i] * k_[i][j]);
      else
        r += along[i] * (k_[i][j] * w[j]);
    }
  return r;
}

Jet1 BoundaryLift::corrected_value(int edge, double s, int degree) const {
  if (edge < 0 || edge > 3) throw std::out_of_range("edge index");
  return truncate(traces_.value[edge](s, degree), degree) - corner_along(edge, s, degree, false);
}

Jet1 BoundaryLift::corrected_slope(int edge, double s, int degree) const {
  if (edge < 0 || edge > 3) throw std::out_of_range("edge index");
  if (kind_ != BoundaryKind::Clamped) throw std::logic_error("slope traces only exist for clamped data");
  return truncate(traces_.slope[edge](s, degree), degree) - corner_along(edge, s, degree, true);
}

Jet2 BoundaryLift::blend_unit(double xi, double eta, int degree) const {
  std::array<Jet2, 4> bx{Jet2(degree), Jet2(degree), Jet2(degree), Jet2(degree)}, by = bx;
  basis_vector(kind_, jet_seed(xi, eta, Var::X, degree), bx);
  basis_vector(kind_, jet_seed(xi, eta, Var::Y, degree), by);
  Jet2 s = bx[0] * embed_along_y(corrected_value(0, eta, degree), degree) +
           bx[1] * embed_along_y(corrected_value(1, eta, degree), degree) +
           by[0] * embed_along_x(corrected_value(2, xi, degree), degree) +
           by[1] * embed_along_x(corrected_value(3, xi, degree), degree);
  if (kind_ == BoundaryKind::Clamped) {
    s += bx[2] * embed_along_y(corrected_slope(0, eta, degree), degree);
    s += bx[3] * embed_along_y(corrected_slope(1, eta, degree), degree);
    s += by[2] * embed_along_x(corrected_slope(2, xi, degree), degree);
    s += by[3] * embed_along_x(corrected_slope(3, xi, degree), degree);
  }
  return s;
}

Jet2 BoundaryLift::corner(double x, double y, int degree) const {
  return to_physical(corner_unit(xi(x), eta(y), degree));
}

Jet2 BoundaryLift::edge_blend(double x, double y, int degree) const {
  return to_physical(blend_unit(xi(x), eta(y), degree));
}

Jet2 BoundaryLift::lift(double x, double y, int degree) const {
  const double a = xi(x), b = eta(y);
  return to_physical(blend_unit(a, b, degree) + corner_unit(a, b, degree));
}

}  // namespace rnnbp
