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

#include "jet.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace rnnbp {
namespace {

struct MulTerm {
  int a, b, out;
};

// Index triples (a, b, out) with deg(a) + deg(b) <= degree, for each degree.
std::vector<MulTerm> build_mul_table(int degree) {
  std::vector<MulTerm> t;
  for (int i1 = 0; i1 <= degree; ++i1)
    for (int j1 = 0; i1 + j1 <= degree; ++j1)
      for (int i2 = 0; i1 + j1 + i2 <= degree; ++i2)
        for (int j2 = 0; i1 + j1 + i2 + j2 <= degree; ++j2)
          t.push_back({Jet2::index(i1, j1), Jet2::index(i2, j2), Jet2::index(i1 + i2, j1 + j2)});
  return t;
}

const std::vector<MulTerm>& mul_table(int degree) {
  static const std::array<std::vector<MulTerm>, Jet2::kMaxDegree + 1> tables = {
      std::vector<MulTerm>{}, build_mul_table(1), build_mul_table(2), build_mul_table(3), build_mul_table(4)};
  return tables[static_cast<std::size_t>(degree)];
}

void require_same_degree(int a, int b) {
  if (a != b)
    throw std::invalid_argument("jet degree mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

constexpr std::array<double, 5> kInvFactorial = {1.0, 1.0, 1.0 / 2.0, 1.0 / 6.0, 1.0 / 24.0};
constexpr std::array<double, 5> kFactorial = {1.0, 1.0, 2.0, 6.0, 24.0};

}  // namespace

Jet2::Jet2(int degree) : degree_(degree) {
  if (!supported_degree(degree))
    throw std::invalid_argument("unsupported jet degree " + std::to_string(degree) + " (expected 1, 2 or 4)");
}

Jet2 Jet2::constant(double value, int degree) {
  Jet2 j(degree);
  j.c_[0] = value;
  return j;
}

double Jet2::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i + j > degree_)
    throw std::out_of_range("jet coefficient (" + std::to_string(i) + "," + std::to_string(j) +
                            ") exceeds degree " + std::to_string(degree_));
  return c_[static_cast<std::size_t>(index(i, j))];
}

void Jet2::set_coeff(int i, int j, double v) {
  if (i < 0 || j < 0 || i + j > degree_)
    throw std::out_of_range("jet coefficient (" + std::to_string(i) + "," + std::to_string(j) +
                            ") exceeds degree " + std::to_string(degree_));
  c_[static_cast<std::size_t>(index(i, j))] = v;
}

Jet2& Jet2::operator+=(const Jet2& o) {
  require_same_degree(degree_, o.degree_);
  for (int k = 0; k < size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& o) {
  require_same_degree(degree_, o.degree_);
  for (int k = 0; k < size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Jet2& Jet2::operator*=(const Jet2& o) { return *this = *this * o; }

Jet2& Jet2::operator*=(double k) {
  for (int i = 0; i < size(); ++i) c_[i] *= k;
  return *this;
}

Jet2 Jet2::operator-() const {
  Jet2 r = *this;
  for (int i = 0; i < size(); ++i) r.c_[i] = -r.c_[i];
  return r;
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
  require_same_degree(a.degree_, b.degree_);
  Jet2 r(a.degree_);
  for (const MulTerm& t : mul_table(a.degree_)) r.c_[t.out] += a.c_[t.a] * b.c_[t.b];
  return r;
}

Jet2 jet_seed(double x, double y, Var var, int degree, double value) {
  Jet2 j(degree);
  switch (var) {
    case Var::X:
      j.set_coeff(0, 0, x);
      j.set_coeff(1, 0, 1.0);
      break;
    case Var::Y:
      j.set_coeff(0, 0, y);
      j.set_coeff(0, 1, 1.0);
      break;
    case Var::Const:
      j.set_coeff(0, 0, value);
      break;
  }
  return j;
}

Jet2 compose(const Jet2& a, std::span<const double> derivs) {
  const int d = a.degree();
  if (static_cast<int>(derivs.size()) < d + 1)
    throw std::invalid_argument("compose: need derivatives up to the jet degree");
  Jet2 t = a;
  t.set_coeff(0, 0, 0.0);
  Jet2 r = Jet2::constant(derivs[0], d);
  Jet2 tk = t;
  for (int k = 1; k <= d; ++k) {
    if (k > 1) tk = tk * t;
    if (derivs[k] != 0.0) r += tk * (derivs[k] * kInvFactorial[k]);
  }
  return r;
}

Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  const std::array<double, 5> d = {s, c, -s, -c, s};
  return compose(a, d);
}

Jet2 cos(const Jet2& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  const std::array<double, 5> d = {c, -s, -c, s, c};
  return compose(a, d);
}

Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.value());
  const std::array<double, 5> d = {e, e, e, e, e};
  return compose(a, d);
}

double extract_derivative(const Jet2& a, int i, int j) {
  if (i < 0 || j < 0 || i + j > a.degree())
    throw std::invalid_argument("derivative order " + std::to_string(i + j) + " exceeds jet degree " +
                                std::to_string(a.degree()));
  return kFactorial[i] * kFactorial[j] * a.coeff(i, j);
}

double laplacian(const Jet2& a) { return extract_derivative(a, 2, 0) + extract_derivative(a, 0, 2); }

double biharmonic(const Jet2& a) {
  if (a.degree() != 4) throw std::invalid_argument("biharmonic needs a degree-4 jet");
  return extract_derivative(a, 4, 0) + 2.0 * extract_derivative(a, 2, 2) + extract_derivative(a, 0, 4);
}

std::pair<double, double> gradient(const Jet2& a) { return {a.coeff(1, 0), a.coeff(0, 1)}; }

double normal_derivative(const Jet2& a, double nx, double ny) { return a.coeff(1, 0) * nx + a.coeff(0, 1) * ny; }

// Jet1

Jet1::Jet1(int degree) : degree_(degree) {
  if (degree < 0 || degree > kMaxDegree)
    throw std::invalid_argument("unsupported univariate jet degree " + std::to_string(degree));
}

Jet1 Jet1::constant(double value, int degree) {
  Jet1 j(degree);
  j.c_[0] = value;
  return j;
}

Jet1 Jet1::seed(double value, double slope, int degree) {
  Jet1 j(degree);
  j.c_[0] = value;
  if (degree >= 1) j.c_[1] = slope;
  return j;
}

double Jet1::derivative(int k) const {
  if (k < 0 || k > degree_) throw std::invalid_argument("derivative order exceeds univariate jet degree");
  return kFactorial[k] * c_[k];
}

Jet1& Jet1::operator+=(const Jet1& o) {
  require_same_degree(degree_, o.degree_);
  for (int k = 0; k <= degree_; ++k) c_[k] += o.c_[k];
  return *this;
}

Jet1& Jet1::operator-=(const Jet1& o) {
  require_same_degree(degree_, o.degree_);
  for (int k = 0; k <= degree_; ++k) c_[k] -= o.c_[k];
  return *this;
}

Jet1& Jet1::operator*=(double k) {
  for (int i = 0; i <= degree_; ++i) c_[i] *= k;
  return *this;
}

Jet1 Jet1::operator-() const {
  Jet1 r = *this;
  for (int i = 0; i <= degree_; ++i) r.c_[i] = -r.c_[i];
  return r;
}

Jet1 operator*(const Jet1& a, const Jet1& b) {
  require_same_degree(a.degree_, b.degree_);
  Jet1 r(a.degree_);
  for (int i = 0; i <= a.degree_; ++i)
    for (int j = 0; i + j <= a.degree_; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  return r;
}

Jet1 compose(const Jet1& a, std::span<const double> derivs) {
  const int d = a.degree();
  if (static_cast<int>(derivs.size()) < d + 1)
    throw std::invalid_argument("compose: need derivatives up to the jet degree");
  Jet1 t = a;
  t[0] = 0.0;
  Jet1 r = Jet1::constant(derivs[0], d);
  Jet1 tk = t;
  for (int k = 1; k <= d; ++k) {
    if (k > 1) tk = tk * t;
    r += tk * (derivs[k] * kInvFactorial[k]);
  }
  return r;
}

Jet1 sin(const Jet1& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  const std::array<double, 5> d = {s, c, -s, -c, s};
  return compose(a, d);
}

Jet1 cos(const Jet1& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  const std::array<double, 5> d = {c, -s, -c, s, c};
  return compose(a, d);
}

Jet1 exp(const Jet1& a) {
  const double e = std::exp(a.value());
  const std::array<double, 5> d = {e, e, e, e, e};
  return compose(a, d);
}

}  // namespace rnnbp
