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

// Truncated Taylor arithmetic in one and two variables.
//
// Jet2 stores the germ sum c_ij dx^i dy^j for i + j <= degree in graded
// lexicographic order: (0,0), (1,0), (0,1), (2,0), (1,1), (0,2), ...
// Analytic functions are applied with the nilpotent split
//   f(a0 + t) = sum_k f^(k)(a0) / k! * t^k,   t = a - a0,
// which terminates at k = degree because t has no constant term. sin, cos and
// exp are provided; another function only needs its derivative sequence.

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>

namespace rnnbp {

// Expressions written inside this namespace resolve sin(double) etc. too.
using std::cos;
using std::exp;
using std::sin;

enum class Var { X, Y, Const };

class Jet2 {
 public:
  static constexpr int kMaxDegree = 4;
  static constexpr int kMaxSize = 15;

  /// Zero jet of the given degree. Throws std::invalid_argument unless the
  /// degree is 1, 2 or 4.
  explicit Jet2(int degree = 4);

  static Jet2 constant(double value, int degree);

  static constexpr int size_for(int degree) { return (degree + 1) * (degree + 2) / 2; }
  static constexpr int index(int i, int j) { return (i + j) * (i + j + 1) / 2 + j; }
  static bool supported_degree(int degree) { return degree == 1 || degree == 2 || degree == 4; }

  int degree() const { return degree_; }
  int size() const { return size_for(degree_); }

  double value() const { return c_[0]; }
  double coeff(int i, int j) const;
  void set_coeff(int i, int j, double v);

  std::span<const double> coeffs() const { return {c_.data(), static_cast<std::size_t>(size())}; }
  std::span<double> coeffs() { return {c_.data(), static_cast<std::size_t>(size())}; }

  Jet2& operator+=(const Jet2& o);
  Jet2& operator-=(const Jet2& o);
  Jet2& operator*=(const Jet2& o);
  Jet2& operator*=(double k);
  Jet2& operator+=(double k) {
    c_[0] += k;
    return *this;
  }
  Jet2& operator-=(double k) {
    c_[0] -= k;
    return *this;
  }

  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator*(const Jet2& a, const Jet2& b);
  friend Jet2 operator*(Jet2 a, double k) { return a *= k; }
  friend Jet2 operator*(double k, Jet2 a) { return a *= k; }
  friend Jet2 operator+(Jet2 a, double k) { return a += k; }
  friend Jet2 operator+(double k, Jet2 a) { return a += k; }
  friend Jet2 operator-(Jet2 a, double k) { return a -= k; }
  friend Jet2 operator-(double k, const Jet2& a) { return (-a) += k; }
  friend Jet2 operator/(Jet2 a, double k) { return a *= 1.0 / k; }
  Jet2 operator-() const;

 private:
  int degree_;
  std::array<double, kMaxSize> c_{};
};

/// Coordinate or constant germ at (x, y). For Var::Const the germ holds
/// `value`; x and y are ignored.
Jet2 jet_seed(double x, double y, Var var, int degree, double value = 0.0);

/// sum_k derivs[k] / k! * (a - a0)^k. derivs must hold f^(k)(a0) for
/// k = 0..a.degree().
Jet2 compose(const Jet2& a, std::span<const double> derivs);

Jet2 sin(const Jet2& a);
Jet2 cos(const Jet2& a);
Jet2 exp(const Jet2& a);

/// i! j! c_ij, the mixed partial d^(i+j) / dx^i dy^j at the expansion point.
double extract_derivative(const Jet2& a, int i, int j);
double laplacian(const Jet2& a);
double biharmonic(const Jet2& a);
std::pair<double, double> gradient(const Jet2& a);
double normal_derivative(const Jet2& a, double nx, double ny);

/// Univariate truncated Taylor polynomial, degree 0..4. Used for edge traces.
class Jet1 {
 public:
  static constexpr int kMaxDegree = 4;

  explicit Jet1(int degree = 4);
  static Jet1 constant(double value, int degree);
  /// value + slope * dt
  static Jet1 seed(double value, double slope, int degree);

  int degree() const { return degree_; }
  double operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  double& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  double value() const { return c_[0]; }
  /// k-th derivative at the expansion point.
  double derivative(int k) const;

  Jet1& operator+=(const Jet1& o);
  Jet1& operator-=(const Jet1& o);
  Jet1& operator*=(double k);
  Jet1& operator+=(double k) {
    c_[0] += k;
    return *this;
  }

  friend Jet1 operator+(Jet1 a, const Jet1& b) { return a += b; }
  friend Jet1 operator-(Jet1 a, const Jet1& b) { return a -= b; }
  friend Jet1 operator*(const Jet1& a, const Jet1& b);
  friend Jet1 operator*(Jet1 a, double k) { return a *= k; }
  friend Jet1 operator*(double k, Jet1 a) { return a *= k; }
  friend Jet1 operator+(Jet1 a, double k) { return a += k; }
  friend Jet1 operator+(double k, Jet1 a) { return a += k; }
  friend Jet1 operator-(Jet1 a, double k) { return a += -k; }
  friend Jet1 operator-(double k, const Jet1& a) { return (-a) += k; }
  friend Jet1 operator/(Jet1 a, double k) { return a *= 1.0 / k; }
  Jet1 operator-() const;

 private:
  int degree_;
  std::array<double, kMaxDegree + 1> c_{};
};

Jet1 compose(const Jet1& a, std::span<const double> derivs);
Jet1 sin(const Jet1& a);
Jet1 cos(const Jet1& a);
Jet1 exp(const Jet1& a);

/// First-order dual number over T: re + eps * du with eps^2 = 0. Dual<Jet1>
/// carries a field and its transverse derivative along an edge.
template <class T>
struct Dual {
  T re;
  T du;

  Dual& operator+=(const Dual& o) {
    re += o.re;
    du += o.du;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    re -= o.re;
    du -= o.du;
    return *this;
  }
  Dual& operator*=(double k) {
    re *= k;
    du *= k;
    return *this;
  }
  Dual& operator+=(double k) {
    re += k;
    return *this;
  }

  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(const Dual& a, const Dual& b) { return {a.re * b.re, a.re * b.du + a.du * b.re}; }
  friend Dual operator*(Dual a, double k) { return a *= k; }
  friend Dual operator*(double k, Dual a) { return a *= k; }
  friend Dual operator+(Dual a, double k) { return a += k; }
  friend Dual operator+(double k, Dual a) { return a += k; }
  friend Dual operator-(Dual a, double k) { return a += -k; }
  friend Dual operator-(double k, const Dual& a) { return (-a) += k; }
  friend Dual operator/(Dual a, double k) { return a *= 1.0 / k; }
  Dual operator-() const { return {-re, -du}; }
};

template <class T>
Dual<T> sin(const Dual<T>& a) {
  return {sin(a.re), cos(a.re) * a.du};
}
template <class T>
Dual<T> cos(const Dual<T>& a) {
  return {cos(a.re), -(sin(a.re) * a.du)};
}
template <class T>
Dual<T> exp(const Dual<T>& a) {
  T e = exp(a.re);
  return {e, e * a.du};
}

/// base^n for n >= 0 by repeated squaring; works for double and every jet type.
template <class T>
T ipow(const T& base, int n) {
  T result = base * 0.0 + 1.0;
  T b = base;
  while (n > 0) {
    if (n & 1) result = result * b;
    n >>= 1;
    if (n > 0) b = b * b;
  }
  return result;
}

}  // namespace rnnbp
