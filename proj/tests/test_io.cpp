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

#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "sweepkernel/io_json.hpp"
#include "sweepkernel/mesh_export.hpp"
#include "sweepkernel/sweep.hpp"

namespace sweepkernel {
namespace {

using nlohmann::json;

void check_solid_roundtrip(const SolidBrep& solid) {
  json j = solid_to_json(solid);
  SolidBrep back = solid_from_json(j);
  CHECK(solid_to_json(back) == j);

  // The builder re-derives connectivity; it must land on the same sides.
  REQUIRE(back.edges.size() == solid.edges.size());
  for (size_t i = 0; i < solid.edges.size(); ++i) {
    CHECK(back.edges[i].left_face == solid.edges[i].left_face);
    CHECK(back.edges[i].right_face == solid.edges[i].right_face);
  }
  REQUIRE(back.coedges.size() == solid.coedges.size());
  for (size_t i = 0; i < solid.coedges.size(); ++i) {
    CHECK(back.coedges[i].side == solid.coedges[i].side);
    CHECK(back.coedges[i].w_s0 == solid.coedges[i].w_s0);
    CHECK(back.coedges[i].w_s1 == solid.coedges[i].w_s1);
  }
}

TEST_CASE("solid serialization round-trips every fixture exactly") {
  check_solid_roundtrip(fixtures::box({1, 1, 0}, {2, 2, 1}));
  check_solid_roundtrip(fixtures::ball({0, 0, 0}, 1));
  check_solid_roundtrip(fixtures::lens(1, 0.5));
  check_solid_roundtrip(fixtures::capsule(0.5, 0, 1));
  check_solid_roundtrip(fixtures::l_prism());
  check_solid_roundtrip(fixtures::pyramid());
  check_solid_roundtrip(fixtures::ridge_block(0.3));
}

TEST_CASE("trajectory serialization round-trips both motion kinds") {
  Trajectory screw = Trajectory::screw({1, 2, 3}, UnitVec3::of({0, 0, 1}),
                                       0.7853981633974483, 0.25, -1, 3);
  json js = trajectory_to_json(screw);
  Trajectory screw_back = trajectory_from_json(js);
  CHECK(trajectory_to_json(screw_back) == js);
  for (double t : {-1.0, 0.3, 2.9}) {
    MotionSample a = screw.eval(t), b = screw_back.eval(t);
    CHECK(a.A.m == b.A.m);
    CHECK(a.b.x == b.b.x);
    CHECK(a.db.z == b.db.z);
  }

  std::vector<double> times{0, 0.5, 1};
  std::vector<Quat> rots{{1, 0, 0, 0},
                         {0.9238795325112867, 0, 0, 0.3826834323650898},
                         {0.7071067811865476, 0, 0, 0.7071067811865476}};
  std::vector<Vec3> trans{{0, 0, 0}, {0.5, 0, 0.1}, {1, 0, 0}};
  Trajectory key = Trajectory::keyframed(times, rots, trans);
  json jk = trajectory_to_json(key);
  Trajectory key_back = trajectory_from_json(jk);
  CHECK(trajectory_to_json(key_back) == jk);
  for (double t : {0.0, 0.37, 1.0}) {
    MotionSample a = key.eval(t), b = key_back.eval(t);
    CHECK(a.A.m == b.A.m);
    CHECK(a.b.y == b.b.y);
  }

  CHECK_THROWS_AS(trajectory_from_json(json{{"kind", "helix"}}),
                  std::runtime_error);
}

TEST_CASE("swept boundary serialization round-trips a finished sweep") {
  SolidBrep solid = fixtures::box({0, 0, 0}, {1, 1, 1});
  Trajectory traj =
      Trajectory::screw({0, 0, 0}, UnitVec3::of({1, 0, 0}), 0, 2, 0, 1);
  Config cfg;
  SweptBrep swept = sweep(solid, traj, cfg);

  json j = swept_to_json(swept);
  SweptBrep back = swept_from_json(j);
  CHECK(swept_to_json(back) == j);

  REQUIRE(back.faces.size() == swept.faces.size());
  REQUIRE(back.faces[0].mesh_pts.size() == swept.faces[0].mesh_pts.size());
  for (size_t i = 0; i < swept.faces[0].mesh_pts.size(); ++i)
    CHECK(dist(back.faces[0].mesh_pts[i], swept.faces[0].mesh_pts[i]) == 0);
  CHECK(back.faces[0].mesh_tris == swept.faces[0].mesh_tris);
  CHECK(back.report.max_contact_residual ==
        swept.report.max_contact_residual);
  CHECK(back.report.adjacency.size() == swept.report.adjacency.size());
}

TEST_CASE("json files survive a save and load cycle") {
  json j = solid_to_json(fixtures::ball({0.25, -1, 3}, 0.75));
  std::string path = "io_test_tmp.json";
  save_json_file(path, j);
  CHECK(load_json_file(path) == j);
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_json_file("definitely_missing_file.json"),
                  std::runtime_error);
}

struct ObjData {
  std::vector<Vec3> pts;
  std::vector<std::array<long, 3>> tris;
  int foreign_records = 0;
};

ObjData parse_obj(const std::string& text) {
  ObjData d;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string tag;
    row >> tag;
    if (tag == "v") {
      Vec3 p;
      row >> p.x >> p.y >> p.z;
      d.pts.push_back(p);
    } else if (tag == "f") {
      std::array<long, 3> t{};
      row >> t[0] >> t[1] >> t[2];
      d.tris.push_back(t);
    } else {
      ++d.foreign_records;
    }
  }
  return d;
}

TEST_CASE("obj export emits closed counter-clockwise triangles") {
  SolidBrep solid = fixtures::box({1, 1, 0}, {2, 2, 1});
  Trajectory traj = Trajectory::screw({0, 0, 0}, UnitVec3::of({0, 0, 1}),
                                      1.5707963267948966, 0, 0, 1);
  Config cfg;
  SweptBrep swept = sweep(solid, traj, cfg);

  std::ostringstream out;
  write_obj(out, swept, 0);
  ObjData d = parse_obj(out.str());
  CHECK(d.foreign_records == 0);
  REQUIRE(!d.pts.empty());
  REQUIRE(!d.tris.empty());

  size_t n_stored = 0, n_tris = 0;
  std::vector<Vec3> normals;
  for (const SweptFace& f : swept.faces) {
    n_stored += f.mesh_pts.size();
    n_tris += f.mesh_tris.size();
    normals.insert(normals.end(), f.mesh_normals.begin(),
                   f.mesh_normals.end());
  }
  REQUIRE(d.pts.size() == n_stored);
  REQUIRE(d.tris.size() == n_tris);

  long ccw = 0, degenerate = 0;
  for (const auto& t : d.tris) {
    for (long idx : t) {
      REQUIRE(idx >= 1);
      REQUIRE(idx <= static_cast<long>(d.pts.size()));
    }
    const Vec3& a = d.pts[t[0] - 1];
    const Vec3& b = d.pts[t[1] - 1];
    const Vec3& c = d.pts[t[2] - 1];
    Vec3 gn = cross(b - a, c - a);
    Vec3 ref = normals[t[0] - 1] + normals[t[1] - 1] + normals[t[2] - 1];
    if (norm(gn) < 1e-14)
      ++degenerate;
    else if (dot(gn, ref) > 0)
      ++ccw;
  }
  // Winding must match the stored outward normals on effectively all
  // non-degenerate triangles.
  CHECK(ccw + degenerate >= d.tris.size());
  CHECK(1000 * ccw >= 999 * static_cast<long>(d.tris.size() - degenerate));
}

TEST_CASE("obj subdivision refines each triangle fourfold and stays sealed") {
  SolidBrep solid = fixtures::box({0, 0, 0}, {1, 1, 1});
  Trajectory traj =
      Trajectory::screw({0, 0, 0}, UnitVec3::of({1, 0, 0}), 0, 2, 0, 1);
  Config cfg;
  SweptBrep swept = sweep(solid, traj, cfg);

  std::ostringstream base, fine;
  write_obj(base, swept, 0);
  write_obj(fine, swept, 1);
  ObjData d0 = parse_obj(base.str());
  ObjData d1 = parse_obj(fine.str());
  CHECK(d1.tris.size() == 4 * d0.tris.size());

  // Within one face block every interior edge bounds exactly two triangles
  // after subdivision, so the sum of boundary edges stays that of the
  // stored mesh. Count undirected edge multiplicity.
  std::map<std::pair<long, long>, int> edge_count;
  for (const auto& t : d1.tris)
    for (int k = 0; k < 3; ++k) {
      long u = t[k], v = t[(k + 1) % 3];
      edge_count[std::minmax(u, v)]++;
    }
  for (const auto& [e, n] : edge_count) CHECK(n <= 2);
}

}  // namespace
}  // namespace sweepkernel
