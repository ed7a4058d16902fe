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

#include <functional>
#include <ostream>
#include <stdexcept>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "boundary.hpp"
#include "field.hpp"
#include "geometry.hpp"
#include "network.hpp"

namespace rnnbp {

enum class Pde { Poisson, Biharmonic };
enum class Method { Rnn, RnnScaling, RnnBp };

std::string to_string(Pde pde);
std::string to_string(Method m);
Method method_from_string(const std::string& s);

/// Interior (and Neumann) rows of the scaled variant are multiplied by
/// N^-exponent. Defaults: 1/N^2 for Poisson, 1/N^4 and 1/N for biharmonic.
struct ScalingExponents {
  double poisson_interior = 2.0;
  double biharmonic_interior = 4.0;
  double biharmonic_neumann = 1.0;
};

/// Outward normal derivative data g2(x, y; n).
using NormalDataFn = std::function<double(double x, double y, double nx, double ny)>;

/// -Lap u = f with u = g, or Lap^2 u = f with u = g1 and du/dn = g2.
struct ProblemSpec {
  Pde pde = Pde::Poisson;
  Method method = Method::Rnn;
  Domain domain = Domain::unit_square();
  ScalarField source;
  ScalarField boundary_value;
  NormalDataFn boundary_normal;
  /// Raw edge traces for the boundary lift when no exact solution is known.
  std::optional<EdgeTraces> traces;
  std::optional<ScalarField> exact;
  ScalingExponents scaling;
};

/// Derives source and boundary data from an exact solution via jets.
ProblemSpec manufactured_problem(Pde pde, Method method, const Domain& domain, const ScalarField& exact);

BoundaryKind boundary_kind(Pde pde);

/// Builds the boundary lift for RNN-BP (rectangles only).
BoundaryLift build_lift(const ProblemSpec& spec);

enum class RowKind { Interior, Dirichlet, Neumann };
std::string to_string(RowKind k);

struct RowTag {
  RowKind kind;
  double scale;
  Point point;
  Point normal;  // zero for interior rows
};

struct LinearSystem {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd rhs;
  std::vector<RowTag> tags;
};

struct Diagnostics {
  int rank = 0;
  double sigma_max = 0.0;
  double sigma_min_retained = 0.0;
  double residual = 0.0;
  double assembly_ms = 0.0;
  double solve_ms = 0.0;
};

LinearSystem assemble(const ProblemSpec& spec, const FeatureNet& net, const CollocationSet& colloc);
LinearSystem assemble(const ProblemSpec& spec, const FeatureNet& net, const CollocationSet& colloc,
                      const BoundaryLift* lift);

/// Scaled row operator applied to the jet of a field at the row's point:
/// -Lap or Lap^2 for interior rows, the value for Dirichlet rows, the outward
/// normal derivative for Neumann rows. For RNN-BP the caller passes B * phi.
double apply_row_operator(const ProblemSpec& spec, const RowTag& tag, const Jet2& field);

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LstsqResult {
  Eigen::VectorXd omega;
  Diagnostics diagnostics;
};

constexpr double kDefaultRcond = 1e-15;

/// Minimum-norm least squares through the SVD, discarding singular values
/// below rcond * sigma_max.
LstsqResult lstsq(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, double rcond = kDefaultRcond);

class Solution {
 public:
  Solution(ProblemSpec spec, FeatureNet net, Eigen::VectorXd omega, std::optional<BoundaryLift> lift,
           Diagnostics diagnostics);

  const ProblemSpec& spec() const { return spec_; }
  const FeatureNet& net() const { return net_; }
  const Eigen::VectorXd& omega() const { return omega_; }
  const std::optional<BoundaryLift>& lift() const { return lift_; }
  const Diagnostics& diagnostics() const { return diag_; }

  Jet2 eval(double x, double y, int degree) const;
  double value(double x, double y) const;

 private:
  ProblemSpec spec_;
  FeatureNet net_;
  Eigen::VectorXd omega_;
  std::optional<BoundaryLift> lift_;
  Diagnostics diag_;
};

Solution solve(const ProblemSpec& spec, const FeatureNet& net, const CollocationSet& colloc,
               double rcond = kDefaultRcond);

/// Manufactured-solution consistency: largest |op(u_exact) - rhs| over rows,
/// relative to the largest |rhs| or scaled source value (the latter keeps the
/// ratio meaningful when the lift already reproduces u and the rhs cancels).
/// For RNN-BP the operator acts on u_exact - g_D.
double exact_rhs_defect(const ProblemSpec& spec, const LinearSystem& sys, const BoundaryLift* lift);

/// Writes matrix, rhs and row tags (tag,scale,x,y,rhs,a_0..a_{M-1}).
void write_system_csv(std::ostream& os, const LinearSystem& sys);

}  // namespace rnnbp
