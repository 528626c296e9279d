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

#include "certilab/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "certilab/error.hpp"

namespace certilab {
namespace {

using Square = Radius::Square;

std::int64_t floor_of(const Square& q) {
  std::int64_t f = q.numerator() / q.denominator();
  if (q.numerator() < 0 && f * q.denominator() != q.numerator()) --f;
  return f;
}

// floor(sqrt(v)) for v >= 0, exact.
std::int64_t isqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

__int128 cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return static_cast<__int128>(a.x - o.x) * (b.y - o.y) -
         static_cast<__int128>(a.y - o.y) * (b.x - o.x);
}

void check_cap(const Radius& r) {
  if (r.squared() > Square(kMaxLatticeRadius * kMaxLatticeRadius)) {
    throw ResourceError("radius exceeds the lattice cap of " +
                        std::to_string(kMaxLatticeRadius));
  }
}

}  // namespace

Radius::Radius(Square squared) : squared_(squared) {
  if (squared_ < Square(0)) throw ParameterError("radius squared must be nonnegative");
}

Radius Radius::parse(const std::string& text) {
  auto parse_rational = [&](const std::string& s) {
    std::istringstream in(s);
    std::int64_t num = 0, den = 1;
    char slash = 0;
    if (!(in >> num)) throw ParameterError("cannot parse radius '" + text + "'");
    if (in >> slash) {
      if (slash != '/' || !(in >> den) || den == 0) {
        throw ParameterError("cannot parse radius '" + text + "'");
      }
    }
    return Square(num, den);
  };
  if (text.rfind("sqrt(", 0) == 0 && text.back() == ')') {
    return sqrt_of(parse_rational(text.substr(5, text.size() - 6)));
  }
  if (text.rfind("r2=", 0) == 0) return sqrt_of(parse_rational(text.substr(3)));
  Square r = parse_rational(text);
  return Radius(r * r);
}

double Radius::value() const {
  return std::sqrt(static_cast<double>(squared_.numerator()) /
                   static_cast<double>(squared_.denominator()));
}

std::int64_t Radius::ceil_times(std::int64_t k) const {
  // Smallest s >= 0 with s^2 >= k^2 r^2.
  const Square target = squared_ * Square(k * k);
  std::int64_t s = isqrt(floor_of(target));
  while (Square(s * s) < target) ++s;
  return s;
}

std::string Radius::to_string() const {
  std::int64_t root = isqrt(squared_.numerator());
  std::int64_t droot = isqrt(squared_.denominator());
  if (root * root == squared_.numerator() && droot * droot == squared_.denominator()) {
    if (droot == 1) return std::to_string(root);
    return std::to_string(root) + "/" + std::to_string(droot);
  }
  std::string inner = std::to_string(squared_.numerator());
  if (squared_.denominator() != 1) inner += "/" + std::to_string(squared_.denominator());
  return "sqrt(" + inner + ")";
}

std::vector<LatticePoint> ball_points(const Radius& r) {
  check_cap(r);
  const std::int64_t bound = floor_of(r.squared());
  const std::int64_t rx = isqrt(bound);
  std::vector<LatticePoint> points;
  for (std::int64_t x = -rx; x <= rx; ++x) {
    const std::int64_t ymax = isqrt(bound - x * x);
    for (std::int64_t y = -ymax; y <= ymax; ++y) points.push_back({x, y});
  }
  return points;
}

std::vector<LatticePoint> hull_positive_vertices(const Radius& r) {
  check_cap(r);
  const std::int64_t bound = floor_of(r.squared());
  const std::int64_t rx = isqrt(bound);
  // Only the extreme point of each column can be a hull vertex.
  std::vector<LatticePoint> candidates;
  for (std::int64_t x = -rx; x <= rx; ++x) {
    const std::int64_t ymax = isqrt(bound - x * x);
    candidates.push_back({x, -ymax});
    if (ymax != 0) candidates.push_back({x, ymax});
  }
  std::sort(candidates.begin(), candidates.end());
  if (candidates.size() < 3) return {};

  // Andrew's monotone chain; collinear points are popped.
  std::vector<LatticePoint> hull(2 * candidates.size());
  std::size_t k = 0;
  for (const auto& p : candidates) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = candidates.size() - 1, lower = k + 1; i-- > 0;) {
    const auto& p = candidates[i];
    while (k >= lower && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);

  std::vector<LatticePoint> positive;
  for (const auto& p : hull) {
    if (p.x > 0 && p.y > 0) positive.push_back(p);
  }
  std::sort(positive.begin(), positive.end(),
            [](const LatticePoint& a, const LatticePoint& b) {
              return cross({0, 0}, a, b) > 0;
            });
  return positive;
}

}  // namespace certilab
