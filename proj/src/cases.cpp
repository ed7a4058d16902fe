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

#include "cases.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace rnnbp {
namespace {

constexpr double kPi = std::numbers::pi;

// Product of two cosine pairs used on (0,2)^2.
template <class T>
T cosine_pair(const T& t) {
  return 2.0 * cos(1.5 * kPi * t + 0.4 * kPi) + 1.5 * cos(3.0 * kPi * t - 0.2 * kPi);
}

ScalarField polynomial_trig(int k) {
  return ScalarField::from_expression([k](const auto& x, const auto& y) {
    return ipow(x, 10) + ipow(y, 10) + ipow(x, k) * sin(y) + ipow(y, k) * cos(x);
  });
}

const std::vector<Method> kAllMethods = {Method::Rnn, Method::RnnScaling, Method::RnnBp};
const std::vector<Method> kDiskMethods = {Method::Rnn, Method::RnnScaling};

}  // namespace

bool ExampleCase::supports(Method m) const { return std::find(methods.begin(), methods.end(), m) != methods.end(); }

ProblemSpec ExampleCase::problem(Method m) const {
  if (!supports(m)) throw std::domain_error("case " + id + " does not support method " + to_string(m));
  return manufactured_problem(pde, m, domain, exact);
}

const std::vector<CaseInfo>& case_registry() {
  static const std::vector<CaseInfo> reg = {
      {"p1.1", "Poisson, sin(2 pi x) sin(2 pi y) on (0,1)^2", Pde::Poisson, false, 0},
      {"p1.2", "Poisson, product of cosine pairs on (0,2)^2", Pde::Poisson, false, 0},
      {"p1.3", "Poisson, x^10 + y^10 + x^k sin y + y^k cos x on (0,1)^2", Pde::Poisson, true, 1},
      {"p1.4", "Poisson, x^4 + y^4 on the unit disk", Pde::Poisson, false, 0},
      {"b2.1", "biharmonic, sin(pi x) sin(pi y) on (0,1)^2", Pde::Biharmonic, false, 0},
      {"b2.2", "biharmonic, sin(2 pi x) sin(2 pi y) on (0,1)^2", Pde::Biharmonic, false, 0},
      {"b2.3", "biharmonic, exp(x^2 + y^2 + xy) on (0,1)^2", Pde::Biharmonic, false, 0},
      {"b2.4", "biharmonic, x^10 + y^10 + x^k sin y + y^k cos x on (0,1)^2", Pde::Biharmonic, true, 3},
      {"b2.5", "biharmonic, product of cosine pairs on (0,2)^2", Pde::Biharmonic, false, 0},
      {"b2.6", "biharmonic, x^4 + y^4 on the unit disk", Pde::Biharmonic, false, 0},
  };
  return reg;
}

ExampleCase make_case(const std::string& id, std::optional<int> k) {
  const auto& reg = case_registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const CaseInfo& c) { return c.id == id; });
  if (it == reg.end()) throw std::out_of_range("unknown case '" + id + "'");

  ExampleCase c;
  c.id = it->id;
  c.description = it->description;
  c.pde = it->pde;
  c.methods = kAllMethods;
  if (it->has_k) {
    c.k = k.value_or(it->default_k);
    if (*c.k < 0) throw std::invalid_argument("exponent k must be non-negative");
  }

  const std::string tail = id.substr(1);
  if (tail == "1.1" || tail == "2.2") {
    c.exact = ScalarField::from_expression(
        [](const auto& x, const auto& y) { return sin(2.0 * kPi * x) * sin(2.0 * kPi * y); });
  } else if (tail == "1.2" || tail == "2.5") {
    c.domain = Domain::rect(0.0, 2.0, 0.0, 2.0);
    c.exact = ScalarField::from_expression(
        [](const auto& x, const auto& y) { return -1.0 * (cosine_pair(x) * cosine_pair(y)); });
  } else if (tail == "1.3" || tail == "2.4") {
    c.exact = polynomial_trig(*c.k);
  } else if (tail == "1.4" || tail == "2.6") {
    c.domain = Domain::disk(0.0, 0.0, 1.0);
    c.methods = kDiskMethods;
    c.exact = ScalarField::from_expression([](const auto& x, const auto& y) { return ipow(x, 4) + ipow(y, 4); });
  } else if (tail == "2.1") {
    c.exact =
        ScalarField::from_expression([](const auto& x, const auto& y) { return sin(kPi * x) * sin(kPi * y); });
  } else if (tail == "2.3") {
    c.exact = ScalarField::from_expression([](const auto& x, const auto& y) { return exp(x * x + y * y + x * y); });
  }
  return c;
}

}  // namespace rnnbp
