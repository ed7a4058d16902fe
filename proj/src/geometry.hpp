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

#include <ostream>
#include <string>
#include <vector>

namespace rnnbp {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

enum class Edge { Left, Right, Bottom, Top, Circle };

std::string to_string(Edge e);

enum class DomainKind { Rect, Disk };

/// An axis-aligned rectangle (a,b) x (c,d) or a disk.
class Domain {
 public:
  static Domain rect(double a, double b, double c, double d);
  static Domain disk(double cx, double cy, double r);
  static Domain unit_square() { return rect(0.0, 1.0, 0.0, 1.0); }

  DomainKind kind() const { return kind_; }
  bool is_rect() const { return kind_ == DomainKind::Rect; }

  double xmin() const { return a_; }
  double xmax() const { return b_; }
  double ymin() const { return c_; }
  double ymax() const { return d_; }
  Point center() const { return {cx_, cy_}; }
  double radius() const { return r_; }

  /// Signed distance to the boundary, negative inside.
  double signed_distance(Point p) const;
  bool contains_closed(Point p, double tol = 1e-12) const { return signed_distance(p) <= tol; }

 private:
  DomainKind kind_ = DomainKind::Rect;
  double a_ = 0, b_ = 1, c_ = 0, d_ = 1;
  double cx_ = 0, cy_ = 0, r_ = 0;
};

struct BoundaryPoint {
  Point p;
  Point normal;  // outward, unit length
  Edge edge;
};

struct CollocationSet {
  std::vector<Point> interior;
  std::vector<BoundaryPoint> boundary;
  int N = 0;
};

/// N x N cell-centred interior grid and N cell-centred points per edge;
/// corners are never collocation points.
CollocationSet rect_collocation(const Domain& rect, int N);

/// h = r/N. floor(2 pi N) boundary points; interior is the centre plus rings
/// of radius m h (1 <= m < N) holding max(1, round(2 pi m)) points, each ring
/// rotated by m times the golden angle.
CollocationSet disk_collocation(const Domain& disk, int N);

CollocationSet collocate(const Domain& domain, int N);

/// Uniform points on the closed domain. Rectangles: ceil(sqrt(n))^2 tensor
/// grid including the boundary. Disks: the smallest ring construction whose
/// interior plus boundary count reaches n.
std::vector<Point> test_grid(const Domain& domain, int n_test);

/// Columns: x,y,kind,nx,ny,edge.
void write_points_csv(std::ostream& os, const CollocationSet& set);

}  // namespace rnnbp
