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
#include <memory>

#include "jet.hpp"

namespace rnnbp {

using EdgeJet = Dual<Jet1>;

/// A scalar function of (x, y) that can be expanded as a jet at any point.
///
/// Fields built from a generic expression can also be composed with
/// arbitrary jet arguments, which is how edge traces and their transverse
/// derivatives are extracted for the boundary lift. Fields built from a plain
/// callback only support point expansions.
class ScalarField {
 public:
  using PointFn = std::function<Jet2(double x, double y, int degree)>;

  ScalarField() = default;

  static ScalarField from_callable(PointFn fn);

  /// `expr` is a generic callable (auto x, auto y) -> same type, written with
  /// +, -, *, sin, cos, exp and ipow. It is instantiated for double, Jet2
  /// and EdgeJet.
  template <class F>
  static ScalarField from_expression(F expr) {
    ScalarField f;
    f.value_ = [expr](double x, double y) { return expr(x, y); };
    f.compose_ = [expr](const Jet2& x, const Jet2& y) { return expr(x, y); };
    f.edge_ = [expr](const EdgeJet& x, const EdgeJet& y) { return expr(x, y); };
    return f;
  }

  static ScalarField zero();

  explicit operator bool() const { return static_cast<bool>(point_) || static_cast<bool>(compose_); }

  Jet2 jet(double x, double y, int degree) const;
  double value(double x, double y) const;

  bool composable() const { return static_cast<bool>(compose_); }
  Jet2 compose(const Jet2& x, const Jet2& y) const;
  EdgeJet compose_edge(const EdgeJet& x, const EdgeJet& y) const;

 private:
  PointFn point_;
  std::function<double(double, double)> value_;
  std::function<Jet2(const Jet2&, const Jet2&)> compose_;
  std::function<EdgeJet(const EdgeJet&, const EdgeJet&)> edge_;
};

}  // namespace rnnbp
