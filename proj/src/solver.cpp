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

#include "solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include <lapacke.h>

namespace rnnbp {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int interior_degree(Pde pde) { return pde == Pde::Poisson ? 2 : 4; }

Jet2 row_to_jet(const Eigen::MatrixXd& m, Eigen::Index r, int degree) {
  Jet2 j(degree);
  auto c = j.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = m(r, static_cast<Eigen::Index>(i));
  return j;
}

double row_scale(const ProblemSpec& spec, RowKind kind, int N) {
  if (spec.method != Method::RnnScaling) return 1.0;
  const double n = N;
  switch (kind) {
    case RowKind::Interior:
      return std::pow(n, -(spec.pde == Pde::Poisson ? spec.scaling.poisson_interior
                                                    : spec.scaling.biharmonic_interior));
    case RowKind::Neumann:
      return std::pow(n, -spec.scaling.biharmonic_neumann);
    case RowKind::Dirichlet:
      return 1.0;
  }
  return 1.0;
}

double interior_operator(Pde pde, const Jet2& j) { return pde == Pde::Poisson ? -laplacian(j) : biharmonic(j); }

void validate_spec(const ProblemSpec& spec) {
  if (!spec.source) throw std::invalid_argument("problem has no source term");
  if (spec.method == Method::RnnBp) {
    if (!spec.domain.is_rect()) throw std::domain_error("RNN-BP requires a rectangular domain");
    if (!spec.traces && !spec.exact) throw std::invalid_argument("RNN-BP needs edge traces or an exact solution");
    return;
  }
  if (!spec.boundary_value) throw std::invalid_argument("problem has no boundary data");
  if (spec.pde == Pde::Biharmonic && !spec.boundary_normal)
    throw std::invalid_argument("clamped problem needs normal-derivative data");
}

}  // namespace

std::string to_string(Pde pde) { return pde == Pde::Poisson ? "poisson" : "biharmonic"; }

std::string to_string(Method m) {
  switch (m) {
    case Method::Rnn:
      return "rnn";
    case Method::RnnScaling:
      return "scaling";
    case Method::RnnBp:
      return "bp";
  }
  return "?";
}

Method method_from_string(const std::string& s) {
  if (s == "rnn") return Method::Rnn;
  if (s == "scaling" || s == "rnn-scaling") return Method::RnnScaling;
  if (s == "bp" || s == "rnn-bp") return Method::RnnBp;
  throw std::invalid_argument("unknown method '" + s + "' (expected rnn, scaling or bp)");
}

std::string to_string(RowKind k) {
  switch (k) {
    case RowKind::Interior:
      return "interior";
    case RowKind::Dirichlet:
      return "dirichlet";
    case RowKind::Neumann:
      return "neumann";
  }
  return "?";
}

BoundaryKind boundary_kind(Pde pde) { return pde == Pde::Poisson ? BoundaryKind::Dirichlet : BoundaryKind::Clamped; }

ProblemSpec manufactured_problem(Pde pde, Method method, const Domain& domain, const ScalarField& exact) {
  ProblemSpec spec;
  spec.pde = pde;
  spec.method = method;
  spec.domain = domain;
  spec.exact = exact;
  if (pde == Pde::Poisson) {
    spec.source = ScalarField::from_callable([exact](double x, double y, int degree) {
      return Jet2::constant(-laplacian(exact.jet(x, y, 2)), degree);
    });
  } else {
    spec.source = ScalarField::from_callable([exact](double x, double y, int degree) {
      return Jet2::constant(biharmonic(exact.jet(x, y, 4)), degree);
    });
  }
  spec.boundary_value = exact;
  spec.boundary_normal = [exact](double x, double y, double nx, double ny) {
    return normal_derivative(exact.jet(x, y, 1), nx, ny);
  };
  return spec;
}

BoundaryLift build_lift(const ProblemSpec& spec) {
  if (!spec.domain.is_rect()) throw std::domain_error("RNN-BP requires a rectangular domain");
  const BoundaryKind kind = boundary_kind(spec.pde);
  if (spec.traces) return BoundaryLift(kind, spec.domain, *spec.traces);
  if (spec.exact) return BoundaryLift::from_field(kind, spec.domain, *spec.exact);
  throw std::invalid_argument("RNN-BP needs edge traces or an exact solution");
}

double apply_row_operator(const ProblemSpec& spec, const RowTag& tag, const Jet2& field) {
  switch (tag.kind) {
    case RowKind::Interior:
      return tag.scale * interior_operator(spec.pde, field);
    case RowKind::Dirichlet:
      return tag.scale * field.value();
    case RowKind::Neumann:
      return tag.scale * normal_derivative(field, tag.normal.x, tag.normal.y);
  }
  return 0.0;
}

LinearSystem assemble(const ProblemSpec& spec, const FeatureNet& net, const CollocationSet& colloc) {
  if (spec.method == Method::RnnBp) {
    const BoundaryLift lift = build_lift(spec);
    return assemble(spec, net, colloc, &lift);
  }
  return assemble(spec, net, colloc, nullptr);
}

LinearSystem assemble(const ProblemSpec& spec, const FeatureNet& net, const CollocationSet& colloc,
                      const BoundaryLift* lift) {
  validate_spec(spec);
  const bool bp = spec.method == Method::RnnBp;
  if (bp && !lift) throw std::invalid_argument("RNN-BP assembly needs a boundary lift");
  if (colloc.interior.empty()) throw std::invalid_argument("collocation set has no interior points");

  std::vector<RowTag> tags;
  for (const Point& p : colloc.interior) tags.push_back({RowKind::Interior, row_scale(spec, RowKind::Interior, colloc.N), p, {}});
  if (!bp) {
    for (const auto& b : colloc.boundary)
      tags.push_back({RowKind::Dirichlet, row_scale(spec, RowKind::Dirichlet, colloc.N), b.p, b.normal});
    if (spec.pde == Pde::Biharmonic)
      for (const auto& b : colloc.boundary)
        tags.push_back({RowKind::Neumann, row_scale(spec, RowKind::Neumann, colloc.N), b.p, b.normal});
  }

  const Eigen::Index rows = static_cast<Eigen::Index>(tags.size());
  const int M = net.feature_count();
  LinearSystem sys;
  sys.matrix.resize(rows, M);
  sys.rhs.resize(rows);

  const int deg = interior_degree(spec.pde);
  const std::size_t n_int = colloc.interior.size();
  for (std::size_t r = 0; r < n_int; ++r) {
    const RowTag& tag = tags[r];
    const Point p = tag.point;
    const Eigen::MatrixXd phi = net.feature_jet_matrix(p.x, p.y, deg);
    const Eigen::Index row = static_cast<Eigen::Index>(r);
    if (bp) {
      const Jet2 b = lift->bump(p.x, p.y, deg);
      for (int j = 0; j < M; ++j) sys.matrix(row, j) = apply_row_operator(spec, tag, b * row_to_jet(phi, j, deg));
      const double lifted = interior_operator(spec.pde, lift->lift(p.x, p.y, deg));
      sys.rhs(row) = tag.scale * (spec.source.value(p.x, p.y) - lifted);
    } else {
      for (int j = 0; j < M; ++j) sys.matrix(row, j) = apply_row_operator(spec, tag, row_to_jet(phi, j, deg));
      sys.rhs(row) = tag.scale * spec.source.value(p.x, p.y);
    }
  }

  if (!bp) {
    const std::size_t nb = colloc.boundary.size();
    for (std::size_t k = 0; k < nb; ++k) {
      const auto& b = colloc.boundary[k];
      const Eigen::MatrixXd phi = net.feature_jet_matrix(b.p.x, b.p.y, 1);
      const Eigen::Index dir = static_cast<Eigen::Index>(n_int + k);
      const RowTag& dtag = tags[static_cast<std::size_t>(dir)];
      for (int j = 0; j < M; ++j) sys.matrix(dir, j) = dtag.scale * phi(j, 0);
      sys.rhs(dir) = dtag.scale * spec.boundary_value.value(b.p.x, b.p.y);
      if (spec.pde == Pde::Biharmonic) {
        const Eigen::Index neu = static_cast<Eigen::Index>(n_int + nb + k);
        const RowTag& ntag = tags[static_cast<std::size_t>(neu)];
        for (int j = 0; j < M; ++j)
          sys.matrix(neu, j) = ntag.scale * (phi(j, Jet2::index(1, 0)) * b.normal.x + phi(j, Jet2::index(0, 1)) * b.normal.y);
        sys.rhs(neu) = ntag.scale * spec.boundary_normal(b.p.x, b.p.y, b.normal.x, b.normal.y);
      }
    }
  }
  sys.tags = std::move(tags);
  return sys;
}

LstsqResult lstsq(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, double rcond) {
  if (a.rows() < 1 || a.cols() < 1) throw std::invalid_argument("lstsq: empty matrix");
  if (a.rows() != b.size()) throw std::invalid_argument("lstsq: rhs length does not match matrix rows");
  if (!(rcond > 0.0 && rcond < 1.0)) throw std::invalid_argument("lstsq: rcond must lie in (0, 1)");
  if (!a.allFinite() || !b.allFinite()) throw NumericError("lstsq: non-finite entries in the system");

  const auto t0 = Clock::now();
  const lapack_int m = static_cast<lapack_int>(a.rows()), n = static_cast<lapack_int>(a.cols());
  Eigen::MatrixXd work = a;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(std::max(m, n));
  rhs.head(m) = b;
  Eigen::VectorXd sv(std::min(m, n));
  lapack_int rank = 0;
  const lapack_int info = LAPACKE_dgelsd(LAPACK_COL_MAJOR, m, n, 1, work.data(), m, rhs.data(), std::max(m, n),
                                         sv.data(), rcond, &rank);
  if (info != 0) throw NumericError("lstsq: SVD did not converge (info " + std::to_string(info) + ")");

  LstsqResult res;
  res.omega = rhs.head(n);
  auto& d = res.diagnostics;
  d.rank = static_cast<int>(rank);
  d.sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  d.sigma_min_retained = rank > 0 ? sv(rank - 1) : 0.0;
  d.residual = (a * res.omega - b).norm();
  d.solve_ms = ms_since(t0);
  return res;
}

Solution::Solution(ProblemSpec spec, FeatureNet net, Eigen::VectorXd omega, std::optional<BoundaryLift> lift,
                   Diagnostics diagnostics)
    : spec_(std::move(spec)),
      net_(std::move(net)),
      omega_(std::move(omega)),
      lift_(std::move(lift)),
      diag_(diagnostics) {
  if (omega_.size() != net_.feature_count()) throw std::invalid_argument("omega length must equal feature count");
  if (!omega_.allFinite()) throw NumericError("solution weights are not finite");
  if (spec_.method == Method::RnnBp && !lift_) throw std::invalid_argument("RNN-BP solution needs its lift");
}

Jet2 Solution::eval(double x, double y, int degree) const {
  const Eigen::MatrixXd phi = net_.feature_jet_matrix(x, y, degree);
  const Eigen::VectorXd c = phi.transpose() * omega_;
  Jet2 j(degree);
  auto cj = j.coeffs();
  for (std::size_t i = 0; i < cj.size(); ++i) cj[i] = c(static_cast<Eigen::Index>(i));
  if (!lift_) return j;
  return lift_->bump(x, y, degree) * j + lift_->lift(x, y, degree);
}

double Solution::value(double x, double y) const {
  const double v = net_.features(x, y).dot(omega_);
  if (!lift_) return v;
  return lift_->bump(x, y, 1).value() * v + lift_->lift(x, y, 1).value();
}

Solution solve(const ProblemSpec& spec, const FeatureNet& net, const CollocationSet& colloc, double rcond) {
  const auto t0 = Clock::now();
  std::optional<BoundaryLift> lift;
  if (spec.method == Method::RnnBp) lift = build_lift(spec);
  const LinearSystem sys = assemble(spec, net, colloc, lift ? &*lift : nullptr);
  const double assembly_ms = ms_since(t0);
  LstsqResult res = lstsq(sys.matrix, sys.rhs, rcond);
  res.diagnostics.assembly_ms = assembly_ms;
  return Solution(spec, net, std::move(res.omega), std::move(lift), res.diagnostics);
}

double exact_rhs_defect(const ProblemSpec& spec, const LinearSystem& sys, const BoundaryLift* lift) {
  if (!spec.exact) throw std::invalid_argument("consistency check needs an exact solution");
  if (spec.method == Method::RnnBp && !lift) throw std::invalid_argument("RNN-BP consistency check needs the lift");
  const int deg = interior_degree(spec.pde);
  double defect = 0.0, scale = 0.0;
  for (std::size_t r = 0; r < sys.tags.size(); ++r) {
    const RowTag& tag = sys.tags[r];
    Jet2 u = spec.exact->jet(tag.point.x, tag.point.y, deg);
    if (spec.method == Method::RnnBp) u -= lift->lift(tag.point.x, tag.point.y, deg);
    const double rhs = sys.rhs(static_cast<Eigen::Index>(r));
    defect = std::max(defect, std::abs(apply_row_operator(spec, tag, u) - rhs));
    scale = std::max(scale, std::abs(rhs));
    if (tag.kind == RowKind::Interior)
      scale = std::max(scale, tag.scale * std::abs(spec.source.value(tag.point.x, tag.point.y)));
  }
  return scale > 0.0 ? defect / scale : defect;
}

void write_system_csv(std::ostream& os, const LinearSystem& sys) {
  os.precision(17);
  os << "tag,scale,x,y,rhs";
  for (Eigen::Index j = 0; j < sys.matrix.cols(); ++j) os << ",a" << j;
  os << '\n';
  for (Eigen::Index r = 0; r < sys.matrix.rows(); ++r) {
    const RowTag& t = sys.tags[static_cast<std::size_t>(r)];
    os << to_string(t.kind) << ',' << t.scale << ',' << t.point.x << ',' << t.point.y << ',' << sys.rhs(r);
    for (Eigen::Index j = 0; j < sys.matrix.cols(); ++j) os << ',' << sys.matrix(r, j);
    os << '\n';
  }
}

}  // namespace rnnbp
