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

#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rnnbp {
namespace {

const double kGoldenAngle = std::numbers::pi * (3.0 - std::sqrt(5.0));

int ring_count(int m) { return std::max(1, static_cast<int>(std::lround(2.0 * std::numbers::pi * m))); }

int disk_boundary_count(int N) { return static_cast<int>(std::floor(2.0 * std::numbers::pi * N)); }

std::size_t disk_total(int N) {
  std::size_t n = 1 + static_cast<std::size_t>(disk_boundary_count(N));
  for (int m = 1; m < N; ++m) n += static_cast<std::size_t>(ring_count(m));
  return n;
}

}  // namespace

std::string to_string(Edge e) {
  switch (e) {
    case Edge::Left:
      return "left";
    case Edge::Right:
      return "right";
    case Edge::Bottom:
      return "bottom";
    case Edge::Top:
      return "top";
    case Edge::Circle:
      return "circle";
  }
  return "?";
}

Domain Domain::rect(double a, double b, double c, double d) {
  if (!(b > a) || !(d > c)) throw std::invalid_argument("rectangle needs b > a and d > c");
  Domain dom;
  dom.kind_ = DomainKind::Rect;
  dom.a_ = a;
  dom.b_ = b;
  dom.c_ = c;
  dom.d_ = d;
  dom.cx_ = 0.5 * (a + b);
  dom.cy_ = 0.5 * (c + d);
  return dom;
}

Domain Domain::disk(double cx, double cy, double r) {
  if (!(r > 0)) throw std::invalid_argument("disk radius must be positive");
  Domain dom;
  dom.kind_ = DomainKind::Disk;
  dom.cx_ = cx;
  dom.cy_ = cy;
  dom.r_ = r;
  dom.a_ = cx - r;
  dom.b_ = cx + r;
  dom.c_ = cy - r;
  dom.d_ = cy + r;
  return dom;
}

double Domain::signed_distance(Point p) const {
  if (kind_ == DomainKind::Disk) return std::hypot(p.x - cx_, p.y - cy_) - r_;
  const double dx = std::max(a_ - p.x, p.x - b_);
  const double dy = std::max(c_ - p.y, p.y - d_);
  if (dx <= 0 && dy <= 0) return std::max(dx, dy);
  return std::hypot(std::max(dx, 0.0), std::max(dy, 0.0));
}

CollocationSet rect_collocation(const Domain& rect, int N) {
  if (!rect.is_rect()) throw std::invalid_argument("rect_collocation needs a rectangle");
  if (N < 2) throw std::invalid_argument("collocation resolution N must be >= 2");
  const double a = rect.xmin(), b = rect.xmax(), c = rect.ymin(), d = rect.ymax();
  CollocationSet set;
  set.N = N;
  set.interior.reserve(static_cast<std::size_t>(N) * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      set.interior.push_back({a + (i + 0.5) / N * (b - a), c + (j + 0.5) / N * (d - c)});
  set.boundary.reserve(4 * static_cast<std::size_t>(N));
  for (int k = 0; k < N; ++k) set.boundary.push_back({{a, c + (k + 0.5) / N * (d - c)}, {-1, 0}, Edge::Left});
  for (int k = 0; k < N; ++k) set.boundary.push_back({{b, c + (k + 0.5) / N * (d - c)}, {1, 0}, Edge::Right});
  for (int k = 0; k < N; ++k) set.boundary.push_back({{a + (k + 0.5) / N * (b - a), c}, {0, -1}, Edge::Bottom});
  for (int k = 0; k < N; ++k) set.boundary.push_back({{a + (k + 0.5) / N * (b - a), d}, {0, 1}, Edge::Top});
  return set;
}

CollocationSet disk_collocation(const Domain& disk, int N) {
  if (disk.is_rect()) throw std::invalid_argument("disk_collocation needs a disk");
  if (N < 2) throw std::invalid_argument("collocation resolution N must be >= 2");
  const Point o = disk.center();
  const double r = disk.radius(), h = r / N;
  CollocationSet set;
  set.N = N;
  set.interior.push_back(o);
  for (int m = 1; m < N; ++m) {
    const int n = ring_count(m);
    const double rm = m * h, offset = std::fmod(m * kGoldenAngle, 2.0 * std::numbers::pi);
    for (int k = 0; k < n; ++k) {
      const double t = offset + 2.0 * std::numbers::pi * k / n;
      set.interior.push_back({o.x + rm * std::cos(t), o.y + rm * std::sin(t)});
    }
  }
  const int nb = disk_boundary_count(N);
  set.boundary.reserve(static_cast<std::size_t>(nb));
  for (int k = 0; k < nb; ++k) {
    const double t = 2.0 * std::numbers::pi * k / nb;
    const double nx = std::cos(t), ny = std::sin(t);
    set.boundary.push_back({{o.x + r * nx, o.y + r * ny}, {nx, ny}, Edge::Circle});
  }
  return set;
}

CollocationSet collocate(const Domain& domain, int N) {
  return domain.is_rect() ? rect_collocation(domain, N) : disk_collocation(domain, N);
}

std::vector<Point> test_grid(const Domain& domain, int n_test) {
  if (n_test < 4) throw std::invalid_argument("n_test must be >= 4");
  std::vector<Point> pts;
  if (domain.is_rect()) {
    const int n = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n_test)) - 1e-12));
    const double a = domain.xmin(), b = domain.xmax(), c = domain.ymin(), d = domain.ymax();
    pts.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        // Endpoints are assigned exactly so the closure includes the boundary.
        const double x = i == n - 1 ? b : a + (b - a) * i / (n - 1);
        const double y = j == n - 1 ? d : c + (d - c) * j / (n - 1);
        pts.push_back({x, y});
      }
    return pts;
  }
  int N = 2;
  while (disk_total(N) < static_cast<std::size_t>(n_test)) ++N;
  CollocationSet set = disk_collocation(domain, N);
  pts = std::move(set.interior);
  for (const auto& bp : set.boundary) pts.push_back(bp.p);
  return pts;
}

void write_points_csv(std::ostream& os, const CollocationSet& set) {
  os.precision(17);
  os << "x,y,kind,nx,ny,edge\n";
  for (const Point& p : set.interior) os << p.x << ',' << p.y << ",interior,0,0,\n";
  for (const auto& b : set.boundary)
    os << b.p.x << ',' << b.p.y << ",boundary," << b.normal.x << ',' << b.normal.y << ',' << to_string(b.edge)
       << '\n';
}

}  // namespace rnnbp
