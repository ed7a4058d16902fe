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

#include "field.hpp"

#include <stdexcept>

namespace rnnbp {

ScalarField ScalarField::from_callable(PointFn fn) {
  if (!fn) throw std::invalid_argument("empty scalar field callback");
  ScalarField f;
  f.point_ = std::move(fn);
  return f;
}

ScalarField ScalarField::zero() {
  return from_expression([](const auto& x, const auto&) { return x * 0.0; });
}

Jet2 ScalarField::jet(double x, double y, int degree) const {
  if (compose_) return compose_(jet_seed(x, y, Var::X, degree), jet_seed(x, y, Var::Y, degree));
  if (point_) {
    Jet2 j = point_(x, y, degree);
    if (j.degree() != degree) throw std::invalid_argument("scalar field returned a jet of the wrong degree");
    return j;
  }
  throw std::logic_error("evaluating an empty scalar field");
}

double ScalarField::value(double x, double y) const {
  if (value_) return value_(x, y);
  return jet(x, y, 1).value();
}

Jet2 ScalarField::compose(const Jet2& x, const Jet2& y) const {
  if (!compose_) throw std::logic_error("scalar field does not support jet composition");
  return compose_(x, y);
}

EdgeJet ScalarField::compose_edge(const EdgeJet& x, const EdgeJet& y) const {
  if (!edge_) throw std::logic_error("scalar field does not support edge-trace extraction");
  return edge_(x, y);
}

}  // namespace rnnbp
