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

#include "sweepkernel/mesh_export.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace sweepkernel {
namespace {

struct FaceMesh {
  std::vector<Vec3> pts;
  std::vector<Vec3> normals;
  std::vector<std::array<int, 3>> tris;
};

// One round of 1-to-4 midpoint subdivision. Midpoints are shared between
// the two triangles of an interior edge, so the refined mesh stays closed
// wherever the input was.
void subdivide(FaceMesh& m) {
  std::map<std::pair<int, int>, int> mid;
  auto midpoint = [&](int a, int b) {
    auto key = std::minmax(a, b);
    auto it = mid.find(key);
    if (it != mid.end()) return it->second;
    int id = static_cast<int>(m.pts.size());
    m.pts.push_back(0.5 * (m.pts[a] + m.pts[b]));
    m.normals.push_back(normalized(m.normals[a] + m.normals[b]));
    mid.emplace(key, id);
    return id;
  };
  std::vector<std::array<int, 3>> fine;
  fine.reserve(4 * m.tris.size());
  for (const auto& t : m.tris) {
    int ab = midpoint(t[0], t[1]);
    int bc = midpoint(t[1], t[2]);
    int ca = midpoint(t[2], t[0]);
    fine.push_back({t[0], ab, ca});
    fine.push_back({ab, t[1], bc});
    fine.push_back({ca, bc, t[2]});
    fine.push_back({ab, bc, ca});
  }
  m.tris = std::move(fine);
}

}  // namespace

void write_obj(std::ostream& out, const SweptBrep& swept, int density) {
  char buf[128];
  int offset = 0;
  for (const SweptFace& f : swept.faces) {
    FaceMesh m{f.mesh_pts, f.mesh_normals, f.mesh_tris};
    for (int r = 0; r < density; ++r) subdivide(m);

    for (const Vec3& p : m.pts) {
      std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", p.x, p.y, p.z);
      out << buf;
    }
    for (const auto& t : m.tris) {
      int a = t[0], b = t[1], c = t[2];
      // Wind around the stored outward normal.
      Vec3 gn = cross(m.pts[b] - m.pts[a], m.pts[c] - m.pts[a]);
      if (dot(gn, m.normals[a] + m.normals[b] + m.normals[c]) < 0)
        std::swap(b, c);
      std::snprintf(buf, sizeof buf, "f %d %d %d\n", offset + a + 1,
                    offset + b + 1, offset + c + 1);
      out << buf;
    }
    offset += static_cast<int>(m.pts.size());
  }
}

}  // namespace sweepkernel
