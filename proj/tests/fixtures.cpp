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

#include "fixtures.hpp"

#include <cmath>
#include <map>
#include <utility>
#include <vector>

namespace sweepkernel::fixtures {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lazily created straight sharp edges between numbered vertices. Returns
// {edge id, sense} so a face loop can reuse an edge created by a neighbor.
struct EdgeCache {
  BrepBuilder* b;
  const std::vector<int>* verts;
  const std::vector<Vec3>* points;
  std::map<std::pair<int, int>, int> made;

  std::pair<int, int> get(int va, int vb, bool sharp = true) {
    auto it = made.find({va, vb});
    if (it != made.end()) return {it->second, +1};
    it = made.find({vb, va});
    if (it != made.end()) return {it->second, -1};
    const Vec3& pa = (*points)[va];
    const Vec3& pb = (*points)[vb];
    int c = b->add_curve(Curve3::make_line(pa, pb - pa));
    int e = b->add_edge(c, 0, 1, (*verts)[va], (*verts)[vb], sharp);
    made[{va, vb}] = e;
    return {e, +1};
  }
};

}  // namespace

SolidBrep box(const Vec3& lo, const Vec3& hi) {
  BrepBuilder b;
  std::vector<Vec3> pts(8);
  std::vector<int> vid(8);
  for (int i = 0; i < 8; ++i) {
    pts[i] = {i & 1 ? hi.x : lo.x, i & 2 ? hi.y : lo.y, i & 4 ? hi.z : lo.z};
    vid[i] = b.add_vertex(pts[i], true);
  }
  EdgeCache ec{&b, &vid, &pts, {}};

  struct FaceDef {
    std::array<int, 4> cycle;
    Surface chart;
    const char* name;
  };
  const FaceDef defs[6] = {
      {{1, 3, 7, 5},
       Surface::make_plane({hi.x, 0, 0}, {0, 1, 0}, {0, 0, 1},
                           {lo.y, hi.y, lo.z, hi.z}),
       "x+"},
      {{0, 4, 6, 2},
       Surface::make_plane({lo.x, 0, 0}, {0, 0, 1}, {0, 1, 0},
                           {lo.z, hi.z, lo.y, hi.y}),
       "x-"},
      {{2, 6, 7, 3},
       Surface::make_plane({0, hi.y, 0}, {0, 0, 1}, {1, 0, 0},
                           {lo.z, hi.z, lo.x, hi.x}),
       "y+"},
      {{0, 1, 5, 4},
       Surface::make_plane({0, lo.y, 0}, {1, 0, 0}, {0, 0, 1},
                           {lo.x, hi.x, lo.z, hi.z}),
       "y-"},
      {{4, 5, 7, 6},
       Surface::make_plane({0, 0, hi.z}, {1, 0, 0}, {0, 1, 0},
                           {lo.x, hi.x, lo.y, hi.y}),
       "z+"},
      {{0, 2, 3, 1},
       Surface::make_plane({0, 0, lo.z}, {0, 1, 0}, {1, 0, 0},
                           {lo.y, hi.y, lo.x, hi.x}),
       "z-"},
  };
  for (const FaceDef& fd : defs) {
    int f = b.add_face(b.add_surface(fd.chart), 1, fd.name);
    std::vector<std::pair<int, int>> loop;
    for (int k = 0; k < 4; ++k)
      loop.push_back(ec.get(fd.cycle[k], fd.cycle[(k + 1) % 4]));
    b.add_loop(f, loop);
  }
  return b.finish();
}

SolidBrep capsule(double r, double z0, double z1) {
  BrepBuilder b;
  const Vec3 ct{0, 0, z1};
  const Vec3 cb{0, 0, z0};

  int vt0 = b.add_vertex({r, 0, z1});
  int vt1 = b.add_vertex({-r, 0, z1});
  int vb0 = b.add_vertex({r, 0, z0});
  int vb1 = b.add_vertex({-r, 0, z0});
  int pt = b.add_vertex({0, 0, z1 + r});
  int pb = b.add_vertex({0, 0, z0 - r});

  int c_top = b.add_curve(Curve3::make_arc(ct, {0, 0, 1}, {1, 0, 0}, r, {0, 2 * kPi}));
  int c_bot = b.add_curve(Curve3::make_arc(cb, {0, 0, 1}, {1, 0, 0}, r, {0, 2 * kPi}));
  int c_v0 = b.add_curve(Curve3::make_line({r, 0, z0}, {0, 0, z1 - z0}));
  int c_v1 = b.add_curve(Curve3::make_line({-r, 0, z0}, {0, 0, z1 - z0}));
  // Meridians in the y=0 plane, parameterized by latitude.
  int c_mt0 = b.add_curve(Curve3::make_arc(ct, {0, -1, 0}, {1, 0, 0}, r, {0, kPi / 2}));
  int c_mt1 = b.add_curve(Curve3::make_arc(ct, {0, 1, 0}, {-1, 0, 0}, r, {0, kPi / 2}));
  int c_mb0 = b.add_curve(Curve3::make_arc(cb, {0, -1, 0}, {1, 0, 0}, r, {-kPi / 2, 0}));
  int c_mb1 = b.add_curve(Curve3::make_arc(cb, {0, 1, 0}, {-1, 0, 0}, r, {-kPi / 2, 0}));

  int et0 = b.add_edge(c_top, 0, kPi, vt0, vt1, false);
  int et1 = b.add_edge(c_top, kPi, 2 * kPi, vt1, vt0, false);
  int eb0 = b.add_edge(c_bot, 0, kPi, vb0, vb1, false);
  int eb1 = b.add_edge(c_bot, kPi, 2 * kPi, vb1, vb0, false);
  int ev0 = b.add_edge(c_v0, 0, 1, vb0, vt0, false);
  int ev1 = b.add_edge(c_v1, 0, 1, vb1, vt1, false);
  int emt0 = b.add_edge(c_mt0, 0, kPi / 2, vt0, pt, false);
  int emt1 = b.add_edge(c_mt1, 0, kPi / 2, vt1, pt, false);
  int emb0 = b.add_edge(c_mb0, -kPi / 2, 0, pb, vb0, false);
  int emb1 = b.add_edge(c_mb1, -kPi / 2, 0, pb, vb1, false);

  auto cyl_chart = [&](double u0, double u1) {
    Surface s = Surface::make_cylinder({0, 0, 0}, {0, 0, 1}, r, {u0, u1, z0, z1});
    s.ax = {1, 0, 0};
    s.ay = {0, 1, 0};
    return b.add_surface(s);
  };
  auto sph_chart = [&](const Vec3& c, double v_lo, double v_hi, double u0, double u1) {
    Surface s = Surface::make_sphere_band(c, r, v_lo, v_hi);
    s.domain[0] = u0;
    s.domain[1] = u1;
    return b.add_surface(s);
  };

  int f;
  f = b.add_face(cyl_chart(0, kPi), 1, "side_a");
  b.add_loop(f, {{eb0, +1}, {ev1, +1}, {et0, -1}, {ev0, -1}});
  f = b.add_face(cyl_chart(kPi, 2 * kPi), 1, "side_b");
  b.add_loop(f, {{eb1, +1}, {ev0, +1}, {et1, -1}, {ev1, -1}});
  f = b.add_face(sph_chart(ct, 0, kPi / 2, 0, kPi), 1, "cap_top_a");
  b.add_loop(f, {{et0, +1}, {emt1, +1}, {emt0, -1}});
  f = b.add_face(sph_chart(ct, 0, kPi / 2, kPi, 2 * kPi), 1, "cap_top_b");
  b.add_loop(f, {{et1, +1}, {emt0, +1}, {emt1, -1}});
  f = b.add_face(sph_chart(cb, -kPi / 2, 0, 0, kPi), 1, "cap_bot_a");
  b.add_loop(f, {{emb1, +1}, {eb0, -1}, {emb0, -1}});
  f = b.add_face(sph_chart(cb, -kPi / 2, 0, kPi, 2 * kPi), 1, "cap_bot_b");
  b.add_loop(f, {{emb0, +1}, {eb1, -1}, {emb1, -1}});
  return b.finish();
}

SolidBrep lens(double r, double d) {
  BrepBuilder b;
  const double rho = std::sqrt(r * r - d * d);
  const double vc = std::asin(d / r);
  const Vec3 cu{0, 0, -d};  // carrier center of the upper cap
  const Vec3 cl{0, 0, d};

  int va = b.add_vertex({0, rho, 0});
  int vb2 = b.add_vertex({0, -rho, 0});
  int pu = b.add_vertex({0, 0, r - d});
  int pl = b.add_vertex({0, 0, d - r});

  int c_circ = b.add_curve(
      Curve3::make_arc({0, 0, 0}, {0, 0, 1}, {1, 0, 0}, rho, {-kPi / 2, 3 * kPi / 2}));
  int c_mu1 = b.add_curve(Curve3::make_arc(cu, {1, 0, 0}, {0, 1, 0}, r, {vc, kPi / 2}));
  int c_mu2 = b.add_curve(Curve3::make_arc(cu, {-1, 0, 0}, {0, -1, 0}, r, {vc, kPi / 2}));
  int c_ml1 = b.add_curve(Curve3::make_arc(cl, {1, 0, 0}, {0, 1, 0}, r, {-kPi / 2, -vc}));
  int c_ml2 = b.add_curve(Curve3::make_arc(cl, {-1, 0, 0}, {0, -1, 0}, r, {-kPi / 2, -vc}));

  int arc1 = b.add_edge(c_circ, -kPi / 2, kPi / 2, vb2, va, true);
  int arc2 = b.add_edge(c_circ, kPi / 2, 3 * kPi / 2, va, vb2, true);
  int emu1 = b.add_edge(c_mu1, vc, kPi / 2, va, pu, false);
  int emu2 = b.add_edge(c_mu2, vc, kPi / 2, vb2, pu, false);
  int eml1 = b.add_edge(c_ml1, -kPi / 2, -vc, pl, va, false);
  int eml2 = b.add_edge(c_ml2, -kPi / 2, -vc, pl, vb2, false);

  auto cap_chart = [&](const Vec3& c, double v_lo, double v_hi, double u0, double u1) {
    Surface s = Surface::make_sphere_band(c, r, v_lo, v_hi);
    s.domain[0] = u0;
    s.domain[1] = u1;
    return b.add_surface(s);
  };

  int f;
  f = b.add_face(cap_chart(cu, vc, kPi / 2, -kPi / 2, kPi / 2), 1, "upper_a");
  b.add_loop(f, {{arc1, +1}, {emu1, +1}, {emu2, -1}});
  f = b.add_face(cap_chart(cu, vc, kPi / 2, kPi / 2, 3 * kPi / 2), 1, "upper_b");
  b.add_loop(f, {{arc2, +1}, {emu2, +1}, {emu1, -1}});
  f = b.add_face(cap_chart(cl, -kPi / 2, -vc, -kPi / 2, kPi / 2), 1, "lower_a");
  b.add_loop(f, {{eml1, +1}, {arc1, -1}, {eml2, -1}});
  f = b.add_face(cap_chart(cl, -kPi / 2, -vc, kPi / 2, 3 * kPi / 2), 1, "lower_b");
  b.add_loop(f, {{eml2, +1}, {arc2, -1}, {eml1, -1}});
  return b.finish();
}

SolidBrep ball(const Vec3& center, double r) {
  BrepBuilder b;
  int vpn = b.add_vertex(center + Vec3{0, 0, r});
  int vps = b.add_vertex(center - Vec3{0, 0, r});

  int c_m0 = b.add_curve(
      Curve3::make_arc(center, {0, -1, 0}, {1, 0, 0}, r, {-kPi / 2, kPi / 2}));
  int c_m1 = b.add_curve(
      Curve3::make_arc(center, {0, 1, 0}, {-1, 0, 0}, r, {-kPi / 2, kPi / 2}));
  int em0 = b.add_edge(c_m0, -kPi / 2, kPi / 2, vps, vpn, false);
  int em1 = b.add_edge(c_m1, -kPi / 2, kPi / 2, vps, vpn, false);

  auto half = [&](double u0, double u1) {
    Surface s = Surface::make_sphere_band(center, r, -kPi / 2, kPi / 2);
    s.domain[0] = u0;
    s.domain[1] = u1;
    return b.add_surface(s);
  };
  // Both poles are collapsed chart sides; each loop is the two meridians.
  int f = b.add_face(half(0, kPi), 1, "hemi_a");
  b.add_loop(f, {{em1, +1}, {em0, -1}});
  f = b.add_face(half(kPi, 2 * kPi), 1, "hemi_b");
  b.add_loop(f, {{em0, +1}, {em1, -1}});
  return b.finish();
}

SolidBrep l_prism() {
  BrepBuilder b;
  // Cross-section corners, counterclockwise, plus the split point S=(1,0).
  const Vec3 sect[7] = {{0, 0, 0}, {2, 0, 0}, {2, 1, 0}, {1, 1, 0},
                        {1, 2, 0}, {0, 2, 0}, {1, 0, 0}};
  std::vector<Vec3> pts(14);
  std::vector<int> vid(14);
  for (int i = 0; i < 7; ++i) {
    pts[i] = sect[i];
    pts[i + 7] = sect[i] + Vec3{0, 0, 1};
    // The re-entrant corner A3 joins four faces; it is still tagged sharp,
    // which validation must reject. The split point is not a corner at all.
    bool sharp = i != 6;
    vid[i] = b.add_vertex(pts[i], sharp);
    vid[i + 7] = b.add_vertex(pts[i + 7], sharp);
  }
  EdgeCache ec{&b, &vid, &pts, {}};
  auto E = [&](int a, int c) { return ec.get(a, c); };
  auto S = [&](int a, int c) { return ec.get(a, c, false); };  // smooth split

  auto plane = [&](const Vec3& o, const Vec3& ax, const Vec3& ay,
                   std::array<double, 4> dom) {
    return b.add_surface(Surface::make_plane(o, ax, ay, dom));
  };

  int f;
  // Bottom, split into [0,1]x[0,2] and [1,2]x[0,1]; the shared edge is smooth.
  f = b.add_face(plane({0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {0, 2, 0, 1}), 1, "bot_a");
  b.add_loop(f, {E(0, 5), E(5, 4), E(4, 3), S(3, 6), E(6, 0)});
  f = b.add_face(plane({0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {0, 1, 1, 2}), 1, "bot_b");
  b.add_loop(f, {S(6, 3), E(3, 2), E(2, 1), E(1, 6)});
  f = b.add_face(plane({0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {0, 1, 0, 2}), 1, "top_a");
  b.add_loop(f, {E(7, 13), S(13, 10), E(10, 11), E(11, 12), E(12, 7)});
  f = b.add_face(plane({0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {1, 2, 0, 1}), 1, "top_b");
  b.add_loop(f, {E(13, 8), E(8, 9), E(9, 10), S(10, 13)});
  f = b.add_face(plane({0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {0, 2, 0, 1}), 1, "y0");
  b.add_loop(f, {E(0, 6), E(6, 1), E(1, 8), E(8, 13), E(13, 7), E(7, 0)});
  f = b.add_face(plane({2, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 0, 1}), 1, "x2");
  b.add_loop(f, {E(1, 2), E(2, 9), E(9, 8), E(8, 1)});
  f = b.add_face(plane({0, 1, 0}, {0, 0, 1}, {1, 0, 0}, {0, 1, 1, 2}), 1, "y1_notch");
  b.add_loop(f, {E(2, 3), E(3, 10), E(10, 9), E(9, 2)});
  f = b.add_face(plane({1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 2, 0, 1}), 1, "x1_notch");
  b.add_loop(f, {E(3, 4), E(4, 11), E(11, 10), E(10, 3)});
  f = b.add_face(plane({0, 2, 0}, {0, 0, 1}, {1, 0, 0}, {0, 1, 0, 1}), 1, "y2");
  b.add_loop(f, {E(4, 5), E(5, 12), E(12, 11), E(11, 4)});
  f = b.add_face(plane({0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 0, 2}), 1, "x0");
  b.add_loop(f, {E(5, 0), E(0, 7), E(7, 12), E(12, 5)});
  return b.finish();
}

SolidBrep pyramid() {
  BrepBuilder b;
  const Vec3 apex{0, 0, 1.2};
  const Vec3 base[4] = {{-1, -1, 0}, {1, -1, 0}, {1, 1, 0}, {-1, 1, 0}};
  std::vector<Vec3> pts(5);
  std::vector<int> vid(5);
  for (int i = 0; i < 4; ++i) {
    pts[i] = base[i];
    vid[i] = b.add_vertex(base[i], true);
  }
  pts[4] = apex;
  vid[4] = b.add_vertex(apex, true);  // four faces meet here: must be rejected
  EdgeCache ec{&b, &vid, &pts, {}};

  int f = b.add_face(
      b.add_surface(Surface::make_plane({0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {-1, 1, -1, 1})),
      1, "base");
  b.add_loop(f, {ec.get(0, 3), ec.get(3, 2), ec.get(2, 1), ec.get(1, 0)});
  for (int i = 0; i < 4; ++i) {
    int j = (i + 1) % 4;
    // Chart plane through the slant face; the rectangular domain overhangs
    // the triangle, which validation tolerates (it samples the interior
    // via projection, not the chart corners).
    Vec3 ax = normalized(base[j] - base[i]);
    Vec3 mid = 0.5 * (base[i] + base[j]);
    Vec3 ay = normalized(apex - mid);
    char name[8] = {'s', 'l', 'a', 'n', 't', char('0' + i), 0, 0};
    int s = b.add_surface(Surface::make_plane(mid, ax, ay, {-1.5, 1.5, 0, 2}));
    f = b.add_face(s, 1, name);
    b.add_loop(f, {ec.get(i, j), ec.get(j, 4), ec.get(4, i)});
  }
  return b.finish();
}

SolidBrep ridge_block(double rise) {
  BrepBuilder b;
  const double h = 0.4;
  std::vector<Vec3> pts(8);
  std::vector<int> vid(8);
  const double xy[4][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  for (int i = 0; i < 4; ++i) {
    pts[i] = {xy[i][0], xy[i][1], 0};
    pts[i + 4] = {xy[i][0], xy[i][1], h};
    vid[i] = b.add_vertex(pts[i], true);
    vid[i + 4] = b.add_vertex(pts[i + 4], true);
  }
  EdgeCache ec{&b, &vid, &pts, {}};

  // Rim control rows stay at z=h so the patch boundary is straight and the
  // rim tangent plane is tilted only in the interior.
  std::vector<std::vector<Vec3>> net(4, std::vector<Vec3>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double z = (i == 1 || i == 2) && (j == 1 || j == 2) ? h + rise : h;
      net[i][j] = {i / 3.0, j / 3.0, z};
    }

  auto plane = [&](const Vec3& o, const Vec3& ax, const Vec3& ay,
                   std::array<double, 4> dom) {
    return b.add_surface(Surface::make_plane(o, ax, ay, dom));
  };
  int f;
  f = b.add_face(plane({0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {0, 1, 0, 1}), 1, "bottom");
  b.add_loop(f, {ec.get(0, 3), ec.get(3, 2), ec.get(2, 1), ec.get(1, 0)});
  f = b.add_face(plane({0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {0, 1, 0, h}), 1, "y0");
  b.add_loop(f, {ec.get(0, 1), ec.get(1, 5), ec.get(5, 4), ec.get(4, 0)});
  f = b.add_face(plane({1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 0, h}), 1, "x1");
  b.add_loop(f, {ec.get(1, 2), ec.get(2, 6), ec.get(6, 5), ec.get(5, 1)});
  f = b.add_face(plane({0, 1, 0}, {0, 0, 1}, {1, 0, 0}, {0, h, 0, 1}), 1, "y1");
  b.add_loop(f, {ec.get(2, 3), ec.get(3, 7), ec.get(7, 6), ec.get(6, 2)});
  f = b.add_face(plane({0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, h, 0, 1}), 1, "x0");
  b.add_loop(f, {ec.get(3, 0), ec.get(0, 4), ec.get(4, 7), ec.get(7, 3)});
  f = b.add_face(b.add_surface(Surface::make_bezier(net)), 1, "ridge");
  b.add_loop(f, {ec.get(4, 5), ec.get(5, 6), ec.get(6, 7), ec.get(7, 4)});
  return b.finish();
}

int face_named(const SolidBrep& s, const std::string& name) {
  for (const auto& f : s.faces)
    if (f.name == name) return f.id;
  return -1;
}

}  // namespace sweepkernel::fixtures
