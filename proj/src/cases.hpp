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

#include <optional>
#include <string>
#include <vector>

#include "field.hpp"
#include "geometry.hpp"
#include "solver.hpp"

namespace rnnbp {

/// A manufactured test problem: the exact solution fixes the source term and
/// all boundary data.
struct ExampleCase {
  std::string id;
  std::string description;
  Pde pde = Pde::Poisson;
  Domain domain = Domain::unit_square();
  ScalarField exact;
  std::optional<int> k;  // exponent parameter, when the case has one
  std::vector<Method> methods;

  bool supports(Method m) const;
  ProblemSpec problem(Method m) const;
};

struct CaseInfo {
  std::string id;
  std::string description;
  Pde pde;
  bool has_k;
  int default_k;
};

/// p1.1-p1.4 (Poisson) and b2.1-b2.6 (biharmonic).
const std::vector<CaseInfo>& case_registry();

/// Throws std::out_of_range for unknown ids; `k` is ignored for cases
/// without an exponent parameter.
ExampleCase make_case(const std::string& id, std::optional<int> k = std::nullopt);

}  // namespace rnnbp
