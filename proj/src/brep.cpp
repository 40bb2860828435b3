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

#include "sweepkernel/brep.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace sweepkernel {

void SolidBrep::finalize() {
  vertex_edges.assign(vertices.size(), {});
  edge_coedges.assign(edges.size(), {});
  face_edges.assign(faces.size(), {});

  for (const Edge& e : edges) {
    if (e.start_vertex >= 0 && e.start_vertex < int(vertices.size()))
      vertex_edges[e.start_vertex].push_back(e.id);
    if (e.end_vertex >= 0 && e.end_vertex < int(vertices.size()) &&
        e.end_vertex != e.start_vertex)
      vertex_edges[e.end_vertex].push_back(e.id);
  }
  for (const Coedge& c : coedges) {
    if (c.edge >= 0 && c.edge < int(edges.size())) edge_coedges[c.edge].push_back(c.id);
  }
  for (Edge& e : edges) {
    e.left_face = e.right_face = -1;
    for (int cid : edge_coedges[e.id]) {
      const Coedge& c = coedges[cid];
      (c.sense > 0 ? e.left_face : e.right_face) = c.face;
    }
  }
  for (const Coedge& c : coedges) {
    if (c.face < 0 || c.face >= int(faces.size())) continue;
    auto& fe = face_edges[c.face];
    if (std::find(fe.begin(), fe.end(), c.edge) == fe.end()) fe.push_back(c.edge);
  }

  // Pcurve inference. Edges of the accepted class run along one side of the
  // face's rectangular chart; detect the side by projecting edge samples and
  // unwrapping periodic coordinates by continuity.
  for (Coedge& c : coedges) {
    if (c.edge < 0 || c.face < 0) continue;
    const Edge& e = edges[c.edge];
    const Surface& s = surfaces[faces[c.face].surface];
    const int K = 5;
    double us[K], vs[K];
    for (int k = 0; k < K; ++k) {
      double sp = e.s0 + (e.s1 - e.s0) * k / (K - 1);
      Surface::Projection pr = s.project(curves[e.curve].at(sp));
      us[k] = pr.u;
      vs[k] = pr.v;
      if (k > 0) {
        if (double P = s.period_u(); P > 0)
          us[k] += std::round((us[k - 1] - us[k]) / P) * P;
        if (double P = s.period_v(); P > 0)
          vs[k] += std::round((vs[k - 1] - vs[k]) / P) * P;
      }
    }
    auto spread = [K](const double* a) {
      auto [lo, hi] = std::minmax_element(a, a + K);
      return *hi - *lo;
    };
    bool u_runs = spread(us) >= spread(vs);
    const double* cc = u_runs ? vs : us;  // the held coordinate
    double mid = 0;
    for (int k = 0; k < K; ++k) mid += cc[k] / K;
    if (u_runs) {
      c.side = std::abs(mid - s.v0()) <= std::abs(mid - s.v1()) ? 0 : 2;
      c.w_s0 = us[0];
      c.w_s1 = us[K - 1];
    } else {
      c.side = std::abs(mid - s.u0()) <= std::abs(mid - s.u1()) ? 3 : 1;
      c.w_s0 = vs[0];
      c.w_s1 = vs[K - 1];
    }
    // A closed edge spanning the whole periodic side projects both ends to
    // the same value; restore the full turn with the sample direction.
    if (e.start_vertex == e.end_vertex) {
      double P = u_runs ? s.period_u() : s.period_v();
      if (P > 0 && std::abs(c.w_s1 - c.w_s0) < 0.5 * P)
        c.w_s1 = c.w_s0 + ((u_runs ? us[1] : vs[1]) >= c.w_s0 ? P : -P);
    }
  }
}

void SolidBrep::pcurve_point(int coedge, double s, double* u, double* v) const {
  const Coedge& c = coedges[coedge];
  const Edge& e = edges[c.edge];
  const Surface& sf = surfaces[faces[c.face].surface];
  double f = e.s1 == e.s0 ? 0.0 : (s - e.s0) / (e.s1 - e.s0);
  double w = c.w_s0 + f * (c.w_s1 - c.w_s0);
  switch (c.side) {
    case 0: *u = w; *v = sf.v0(); break;
    case 2: *u = w; *v = sf.v1(); break;
    case 3: *u = sf.u0(); *v = w; break;
    default: *u = sf.u1(); *v = w; break;
  }
}

int SolidBrep::edge_coedge_on(int edge, int side) const {
  int want = side == 0 ? 1 : -1;
  for (int cid : edge_coedges[edge])
    if (coedges[cid].sense == want) return cid;
  return -1;
}

Vec3 SolidBrep::edge_side_normal(int edge, int side, double s) const {
  int cid = edge_coedge_on(edge, side);
  double u, v;
  pcurve_point(cid, s, &u, &v);
  return face_normal(coedges[cid].face, u, v);
}

Vec3 SolidBrep::face_normal(int face, double u, double v) const {
  const Face& f = faces[face];
  Vec3 n = normalized(surfaces[f.surface].normal_raw(u, v));
  return n * double(f.outward_flag);
}

Vec3 SolidBrep::face_normal_near(int face, const Vec3& p) const {
  const Face& f = faces[face];
  Surface::Projection pr = surfaces[f.surface].project(p);
  return face_normal(face, pr.u, pr.v);
}

std::vector<int> SolidBrep::vertex_faces(int vertex) const {
  std::set<int> out;
  for (int eid : vertex_edges[vertex]) {
    const Edge& e = edges[eid];
    if (e.left_face >= 0) out.insert(e.left_face);
    if (e.right_face >= 0) out.insert(e.right_face);
  }
  return {out.begin(), out.end()};
}

bool SolidBrep::entities_touch(int kind_a, int a, int kind_b, int b) const {
  if (kind_a > kind_b) return entities_touch(kind_b, b, kind_a, a);
  if (kind_a == kind_b && a == b) return true;
  auto edge_has_vertex = [&](int e, int v) {
    return edges[e].start_vertex == v || edges[e].end_vertex == v;
  };
  auto face_has_vertex = [&](int f, int v) {
    for (int e : face_edges[f])
      if (edge_has_vertex(e, v)) return true;
    return false;
  };
  // Touching means intersecting closures: a shared vertex is enough.
  if (kind_a == 0 && kind_b == 0) {
    for (int e : face_edges[a]) {
      if (edges[e].left_face == b || edges[e].right_face == b) return true;
      if (face_has_vertex(b, edges[e].start_vertex) ||
          face_has_vertex(b, edges[e].end_vertex))
        return true;
    }
    return false;
  }
  if (kind_a == 0 && kind_b == 1) {
    if (edges[b].left_face == a || edges[b].right_face == a) return true;
    return face_has_vertex(a, edges[b].start_vertex) ||
           face_has_vertex(a, edges[b].end_vertex);
  }
  if (kind_a == 0 && kind_b == 2) {
    auto vf = vertex_faces(b);
    return std::find(vf.begin(), vf.end(), a) != vf.end();
  }
  if (kind_a == 1 && kind_b == 1) {
    const Edge& ea = edges[a];
    return edge_has_vertex(b, ea.start_vertex) || edge_has_vertex(b, ea.end_vertex);
  }
  if (kind_a == 1 && kind_b == 2) return edge_has_vertex(a, b);
  return false;  // vertex-vertex, distinct
}

void SolidBrep::bounding_sphere(Vec3* center, double* radius) const {
  // Centroid-of-samples center with a conservative radius; exactness is not
  // needed, only an enclosing sphere.
  std::vector<Vec3> pts;
  for (const Face& f : faces) {
    const Surface& s = surfaces[f.surface];
    const int k = 8;
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= k; ++j)
        pts.push_back(s.point(s.u0() + (s.u1() - s.u0()) * i / k,
                              s.v0() + (s.v1() - s.v0()) * j / k));
  }
  for (const Vertex& v : vertices) pts.push_back(v.point);
  Vec3 c;
  for (const Vec3& p : pts) c += p;
  if (!pts.empty()) c = c / double(pts.size());
  double r = 0;
  for (const Vec3& p : pts) r = std::max(r, dist(c, p));
  *center = c;
  *radius = r * 1.0001 + 1e-12;
}

int BrepBuilder::add_vertex(const Vec3& p, bool sharp) {
  Vertex v;
  v.id = int(solid.vertices.size());
  v.point = p;
  v.sharp = sharp;
  solid.vertices.push_back(v);
  return v.id;
}

int BrepBuilder::add_curve(const Curve3& c) {
  solid.curves.push_back(c);
  return int(solid.curves.size()) - 1;
}

int BrepBuilder::add_surface(const Surface& s) {
  solid.surfaces.push_back(s);
  return int(solid.surfaces.size()) - 1;
}

int BrepBuilder::add_edge(int curve, double s0, double s1, int v_start, int v_end,
                          bool sharp) {
  Edge e;
  e.id = int(solid.edges.size());
  e.curve = curve;
  e.s0 = s0;
  e.s1 = s1;
  e.start_vertex = v_start;
  e.end_vertex = v_end;
  e.sharp = sharp;
  solid.edges.push_back(e);
  return e.id;
}

int BrepBuilder::add_face(int surface, int outward_flag, const std::string& name) {
  Face f;
  f.id = int(solid.faces.size());
  f.surface = surface;
  f.outward_flag = outward_flag;
  f.name = name;
  solid.faces.push_back(f);
  return f.id;
}

int BrepBuilder::add_loop(int face, const std::vector<std::pair<int, int>>& ews) {
  Loop l;
  l.id = int(solid.loops.size());
  l.face = face;
  for (auto [eid, sense] : ews) {
    Coedge c;
    c.id = int(solid.coedges.size());
    c.edge = eid;
    c.face = face;
    c.loop = l.id;
    c.sense = sense;
    solid.coedges.push_back(c);
    l.coedges.push_back(c.id);
  }
  solid.loops.push_back(l);
  solid.faces[face].loops.push_back(l.id);
  return l.id;
}

SolidBrep BrepBuilder::finish() {
  solid.finalize();
  return solid;
}

}  // namespace sweepkernel
