// Copyright 2026 The certilab Authors
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

// Lattice points of a disk and the positive vertices of their convex hull.
// These are the edge directions of every layered construction.

#ifndef CERTILAB_LATTICE_HPP_
#define CERTILAB_LATTICE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace certilab {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// A radius stored through its exact square, so r = sqrt(2) is representable.
class Radius {
 public:
  using Square = boost::rational<std::int64_t>;

  Radius() = default;
  static Radius of(std::int64_t r) { return Radius(Square(r * r)); }
  static Radius sqrt_of(Square r_squared) { return Radius(r_squared); }
  /// Parses "5", "sqrt(2)", "sqrt(7/2)" or "r2=7/2".
  static Radius parse(const std::string& text);

  const Square& squared() const noexcept { return squared_; }
  double value() const;
  /// Smallest integer s with s >= k * r, computed exactly.
  std::int64_t ceil_times(std::int64_t k) const;
  std::string to_string() const;

  friend bool operator==(const Radius&, const Radius&) = default;

 private:
  explicit Radius(Square squared);
  Square squared_{0};
};

/// Largest radius accepted by the enumeration routines.
inline constexpr std::int64_t kMaxLatticeRadius = 10000;

/// All integral points with x^2 + y^2 <= r^2, in (x, y) lexicographic order.
std::vector<LatticePoint> ball_points(const Radius& r);

/// Convex-hull vertices of ball_points(r) with x > 0 and y > 0, sorted by
/// increasing angle. Points in the relative interior of a hull edge are not
/// vertices.
std::vector<LatticePoint> hull_positive_vertices(const Radius& r);

}  // namespace certilab

#endif  // CERTILAB_LATTICE_HPP_
