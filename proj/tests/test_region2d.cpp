// Copyright 2026 The SweepKernel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "sweepkernel/region2d.hpp"

using namespace sweepkernel;

namespace {
constexpr double kPi = 3.14159265358979323846;

FieldGrid sample(int n, double x0, double x1, double y0, double y1,
                 const std::function<double(double, double)>& f1,
                 const std::function<double(double, double)>& f2 = {}) {
  FieldGrid g;
  g.nx = g.ny = n;
  g.x0 = x0;
  g.x1 = x1;
  g.y0 = y0;
  g.y1 = y1;
  g.nfields = f2 ? 2 : 1;
  g.allocate();
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) {
      g.f1[size_t(j) * (n + 1) + i] = f1(g.x(i), g.y(j));
      if (f2) g.f2[size_t(j) * (n + 1) + i] = f2(g.x(i), g.y(j));
    }
  return g;
}

double chain_length(const Chain2D& c) {
  double L = 0;
  for (size_t i = 1; i < c.pts.size(); ++i)
    L += std::hypot(c.pts[i][0] - c.pts[i - 1][0], c.pts[i][1] - c.pts[i - 1][1]);
  return L;
}

double loop_signed_area(const std::vector<Chain2D>& chains, int loop) {
  double a = 0;
  for (const auto& c : chains) {
    if (c.loop != loop) continue;
    for (size_t i = 1; i < c.pts.size(); ++i)
      a += 0.5 * (c.pts[i - 1][0] * c.pts[i][1] - c.pts[i][0] * c.pts[i - 1][1]);
  }
  return a;
}

double tri_area_sum(const Region2D& r) {
  double a = 0;
  for (const auto& t : r.tris) {
    auto& p0 = r.tri_pts[t[0]];
    auto& p1 = r.tri_pts[t[1]];
    auto& p2 = r.tri_pts[t[2]];
    double s = 0.5 * ((p1[0] - p0[0]) * (p2[1] - p0[1]) -
                      (p2[0] - p0[0]) * (p1[1] - p0[1]));
    CHECK(s >= 0);  // counter-clockwise
    a += s;
  }
  return a;
}
}  // namespace

TEST_CASE("disk region") {
  auto disk = [](double x, double y) { return x * x + y * y - 1.0; };
  FieldGrid g = sample(64, -2, 2, -2, 2, disk);
  auto r = extract_region(g, {}, {});

  CHECK(r.n_components == 1);
  CHECK_FALSE(r.full_rectangle());
  CHECK(r.total_area() == doctest::Approx(kPi).epsilon(0.01));
  CHECK(tri_area_sum(r) == doctest::Approx(r.total_area()).epsilon(1e-9));

  REQUIRE(r.chains.size() >= 1);
  double L = 0;
  for (const auto& c : r.chains) {
    CHECK(c.label == ChainLabel::field1);
    // All boundary points sit on the circle (secant fallback refiner).
    for (auto& p : c.pts)
      CHECK(std::abs(std::hypot(p[0], p[1]) - 1.0) <= 2e-3);
    L += chain_length(c);
  }
  CHECK(L == doctest::Approx(2 * kPi).epsilon(0.01));
  // Region on the left means counter-clockwise for an outer loop.
  CHECK(loop_signed_area(r.chains, r.chains[0].loop) > 0);
}

TEST_CASE("full rectangle emits wall chains") {
  FieldGrid g = sample(8, 0, 1, 0, 2, [](double, double) { return -1.0; });
  auto r = extract_region(g, {}, {});
  CHECK(r.n_components == 1);
  CHECK(r.full_rectangle());
  CHECK(r.total_area() == doctest::Approx(2.0).epsilon(1e-12));

  bool lo = false, hi = false, ylo = false, yhi = false;
  for (const auto& c : r.chains) {
    CHECK(is_wall(c.label));
    if (c.label == ChainLabel::wall_xlo) lo = true;
    if (c.label == ChainLabel::wall_xhi) hi = true;
    if (c.label == ChainLabel::wall_ylo) ylo = true;
    if (c.label == ChainLabel::wall_yhi) yhi = true;
  }
  CHECK((lo && hi && ylo && yhi));
}

TEST_CASE("empty region") {
  FieldGrid g = sample(8, 0, 1, 0, 1, [](double, double) { return 1.0; });
  auto r = extract_region(g, {}, {});
  CHECK(r.n_components == 0);
  CHECK(r.chains.empty());
  CHECK(r.total_area() == 0.0);
}

TEST_CASE("two field sign difference strip") {
  // f1 <= 0 left of x=0.6, f2 <= 0 left of x=0.2: signs differ on the strip
  // 0.2 < x < 0.6. Both labels appear on the strip boundary.
  auto f1 = [](double x, double) { return x - 0.6; };
  auto f2 = [](double x, double) { return x - 0.2; };
  FieldGrid g = sample(32, 0, 1, 0, 1, f1, f2);
  auto r = extract_region(g, {}, {});

  CHECK(r.n_components == 1);
  CHECK(r.total_area() == doctest::Approx(0.4).epsilon(1e-6));

  bool saw1 = false, saw2 = false;
  for (const auto& c : r.chains) {
    if (c.label == ChainLabel::field1) {
      saw1 = true;
      for (auto& p : c.pts) CHECK(p[0] == doctest::Approx(0.6).epsilon(1e-9));
    }
    if (c.label == ChainLabel::field2) {
      saw2 = true;
      for (auto& p : c.pts) CHECK(p[0] == doctest::Approx(0.2).epsilon(1e-9));
    }
  }
  CHECK(saw1);
  CHECK(saw2);
}

TEST_CASE("annulus orients the hole clockwise") {
  auto ann = [](double x, double y) {
    double r = std::hypot(x, y);
    return std::max(r - 1.5, 0.7 - r);  // <= 0 on 0.7 <= r <= 1.5
  };
  FieldGrid g = sample(96, -2, 2, -2, 2, ann);
  auto r = extract_region(g, {}, {});
  CHECK(r.n_components == 1);
  CHECK(r.total_area() == doctest::Approx(kPi * (1.5 * 1.5 - 0.7 * 0.7)).epsilon(0.02));

  // Two loops: the outer positively oriented, the hole negatively.
  std::vector<int> loops;
  for (const auto& c : r.chains)
    if (std::find(loops.begin(), loops.end(), c.loop) == loops.end())
      loops.push_back(c.loop);
  REQUIRE(loops.size() == 2);
  double a0 = loop_signed_area(r.chains, loops[0]);
  double a1 = loop_signed_area(r.chains, loops[1]);
  CHECK(a0 * a1 < 0);
  CHECK(std::abs(std::abs(a0) - std::abs(a1)) > 0.1);  // different radii
}

TEST_CASE("crossings are refined through the callback") {
  auto f = [](double x, double) { return x * x - 0.3; };
  FieldGrid g = sample(16, 0, 1, 0, 1, f);
  CrossRefiner ref = [&](int, double ax, double ay, double bx, double by,
                         double, double) {
    // Solve along the segment exactly.
    (void)ay;
    (void)by;
    double target = std::sqrt(0.3);
    if (std::abs(bx - ax) < 1e-14) return 0.5;
    return (target - ax) / (bx - ax);
  };
  auto r = extract_region(g, {}, ref);
  for (const auto& c : r.chains)
    if (c.label == ChainLabel::field1)
      for (auto& p : c.pts)
        CHECK(p[0] == doctest::Approx(std::sqrt(0.3)).epsilon(1e-12));
}

TEST_CASE("two components are separated") {
  auto two = [](double x, double y) {
    double a = std::hypot(x + 1, y) - 0.5;
    double b = std::hypot(x - 1, y) - 0.5;
    return std::min(a, b);
  };
  FieldGrid g = sample(64, -2, 2, -1, 1, two);
  auto r = extract_region(g, {}, {});
  CHECK(r.n_components == 2);
  CHECK(r.area.size() == 2);
  CHECK(r.area[0] == doctest::Approx(kPi * 0.25).epsilon(0.02));
  CHECK(r.area[1] == doctest::Approx(kPi * 0.25).epsilon(0.02));
  for (const auto& c : r.chains) CHECK(c.component < 2);
  for (int tc : r.tri_component) CHECK(tc < 2);
}
