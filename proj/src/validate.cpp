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

#include "sweepkernel/validate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sweepkernel {

namespace {

constexpr int kEdgeSamples = 16;

void add(ValidationReport& r, ViolationKind k, std::string msg) {
  r.violations.push_back({k, std::move(msg)});
}

std::string ent(const char* kind, int id) {
  std::ostringstream os;
  os << kind << " " << id;
  return os.str();
}

// Interior parameter samples, away from the boundary where poles and seams
// of the closed surfaces live.
double frac(int i, int n) { return (i + 0.5) / n; }

}  // namespace

bool ValidationReport::has_malformed() const {
  return std::any_of(violations.begin(), violations.end(), [](const Violation& v) {
    return v.kind == ViolationKind::malformed;
  });
}

bool ValidationReport::has_assumption() const {
  return std::any_of(violations.begin(), violations.end(), [](const Violation& v) {
    return v.kind == ViolationKind::assumption;
  });
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  if (violations.empty()) {
    os << "ok";
    return os.str();
  }
  os << violations.size() << " violation(s)";
  for (const Violation& v : violations) {
    os << "\n  ["
       << (v.kind == ViolationKind::malformed ? "malformed" : "assumption")
       << "] " << v.message;
  }
  return os.str();
}

EdgeFrame edge_frame(const SolidBrep& solid, int edge, double s) {
  const Edge& e = solid.edges[edge];
  EdgeFrame fr;
  CurveSample cs = solid.curves[e.curve].eval(s);
  fr.tangent = cs.d1;
  fr.n_left = solid.face_normal_near(e.left_face, cs.p);
  fr.n_right = solid.face_normal_near(e.right_face, cs.p);
  return fr;
}

EdgeConvexity edge_convexity(const SolidBrep& solid, int edge, double s,
                             const Tolerances& tol) {
  EdgeFrame fr = edge_frame(solid, edge, s);
  double c = dot(cross(fr.n_left, fr.n_right), fr.tangent);
  double scale = norm(fr.tangent);
  if (std::abs(c) <= tol.sharp * std::max(scale, 1e-300))
    return EdgeConvexity::smooth;
  return c > 0 ? EdgeConvexity::convex : EdgeConvexity::concave;
}

ValidationReport validate_solid(const SolidBrep& solid, const Tolerances& tol) {
  ValidationReport r;

  // Structural layer. Id ranges first; everything later trusts them.
  bool ids_ok = true;
  auto check_id = [&](int id, size_t n, const char* kind, const char* owner,
                      int owner_id) {
    if (id >= 0 && static_cast<size_t>(id) < n) return;
    add(r, ViolationKind::malformed,
        ent(owner, owner_id) + " references missing " + ent(kind, id));
    ids_ok = false;
  };
  for (const Edge& e : solid.edges) {
    check_id(e.curve, solid.curves.size(), "curve", "edge", e.id);
    check_id(e.start_vertex, solid.vertices.size(), "vertex", "edge", e.id);
    check_id(e.end_vertex, solid.vertices.size(), "vertex", "edge", e.id);
  }
  for (const Coedge& c : solid.coedges) {
    check_id(c.edge, solid.edges.size(), "edge", "coedge", c.id);
    check_id(c.face, solid.faces.size(), "face", "coedge", c.id);
  }
  for (const Face& f : solid.faces) {
    check_id(f.surface, solid.surfaces.size(), "surface", "face", f.id);
    if (f.loops.empty())
      add(r, ViolationKind::malformed, ent("face", f.id) + " has no loops");
  }
  if (!ids_ok) return r;

  // Closed shell: every edge bounds exactly two coedges of opposite sense.
  for (const Edge& e : solid.edges) {
    const auto& ces = solid.edge_coedges[e.id];
    if (ces.size() != 2) {
      add(r, ViolationKind::malformed,
          ent("edge", e.id) + " has " + std::to_string(ces.size()) +
              " coedges, expected 2");
      continue;
    }
    if (solid.coedges[ces[0]].sense == solid.coedges[ces[1]].sense)
      add(r, ViolationKind::malformed,
          ent("edge", e.id) + " coedges have equal sense");
  }

  // Edge endpoints must land on their vertices.
  for (const Edge& e : solid.edges) {
    const Curve3& c = solid.curves[e.curve];
    double d0 = dist(c.at(e.s0), solid.vertices[e.start_vertex].point);
    double d1 = dist(c.at(e.s1), solid.vertices[e.end_vertex].point);
    double tol_pt = tol.loop;
    if (d0 > tol_pt || d1 > tol_pt)
      add(r, ViolationKind::malformed,
          ent("edge", e.id) + " endpoints miss vertices by " +
              std::to_string(std::max(d0, d1)));
  }

  // Loops must chain head to tail and close.
  for (const Loop& lp : solid.loops) {
    if (lp.coedges.empty()) {
      add(r, ViolationKind::malformed, ent("loop", lp.id) + " is empty");
      continue;
    }
    const size_t n = lp.coedges.size();
    for (size_t i = 0; i < n; ++i) {
      const Coedge& a = solid.coedges[lp.coedges[i]];
      const Coedge& b = solid.coedges[lp.coedges[(i + 1) % n]];
      const Edge& ea = solid.edges[a.edge];
      const Edge& eb = solid.edges[b.edge];
      int head = a.sense > 0 ? ea.end_vertex : ea.start_vertex;
      int tail = b.sense > 0 ? eb.start_vertex : eb.end_vertex;
      if (head != tail) {
        add(r, ViolationKind::malformed,
            ent("loop", lp.id) + " breaks between coedges " +
                std::to_string(lp.coedges[i]) + " and " +
                std::to_string(lp.coedges[(i + 1) % n]));
        break;
      }
    }
  }
  if (r.has_malformed()) return r;

  // Assumption layer: geometry of the accepted class.

  // Surface charts must be immersed where faces use them; rank loss at an
  // interior sample is a degenerate chart we do not accept. Poles of closed
  // charts sit on the domain boundary and are skipped by construction.
  for (const Face& f : solid.faces) {
    const Surface& s = solid.surfaces[f.surface];
    bool degenerate = false;
    for (int i = 0; i < 4 && !degenerate; ++i) {
      for (int j = 0; j < 4 && !degenerate; ++j) {
        double u = s.u0() + frac(i, 4) * (s.u1() - s.u0());
        double v = s.v0() + frac(j, 4) * (s.v1() - s.v0());
        SurfaceSample ss = s.eval(u, v);
        double area2 = norm(cross(ss.su, ss.sv));
        double scale = std::max(norm(ss.su) * norm(ss.sv), 1e-300);
        if (area2 <= 1e-7 * scale) degenerate = true;
      }
    }
    if (degenerate)
      add(r, ViolationKind::assumption,
          ent("face", f.id) + " chart loses rank at an interior sample");
  }

  // Edge sharpness flags must match the dihedral geometry, and sharp edges
  // must be convex along their whole length.
  for (const Edge& e : solid.edges) {
    int n_convex = 0, n_concave = 0, n_smooth = 0;
    for (int i = 0; i < kEdgeSamples; ++i) {
      double s = e.s0 + frac(i, kEdgeSamples) * (e.s1 - e.s0);
      switch (edge_convexity(solid, e.id, s, tol)) {
        case EdgeConvexity::convex: ++n_convex; break;
        case EdgeConvexity::concave: ++n_concave; break;
        case EdgeConvexity::smooth: ++n_smooth; break;
      }
    }
    if (e.sharp) {
      if (n_concave > 0)
        add(r, ViolationKind::assumption,
            ent("edge", e.id) + " is sharp but concave at " +
                std::to_string(n_concave) + "/" +
                std::to_string(kEdgeSamples) + " samples");
      else if (n_convex == 0)
        add(r, ViolationKind::assumption,
            ent("edge", e.id) + " is flagged sharp but dihedral is smooth");
    } else {
      if (n_convex + n_concave > 0)
        add(r, ViolationKind::assumption,
            ent("edge", e.id) + " is flagged smooth but face normals split at " +
                std::to_string(n_convex + n_concave) + "/" +
                std::to_string(kEdgeSamples) + " samples");
    }
  }

  // Sharp vertices carry a corner cone: exactly three incident faces with
  // linearly independent outward normals. More faces, or dependent normals,
  // leave the class.
  for (const Vertex& v : solid.vertices) {
    auto faces = solid.vertex_faces(v.id);
    int sharp_incident = 0;
    for (int ce : solid.vertex_edges[v.id])
      if (solid.edges[ce].sharp) ++sharp_incident;
    if (v.sharp) {
      if (faces.size() != 3) {
        add(r, ViolationKind::assumption,
            ent("vertex", v.id) + " is sharp with " +
                std::to_string(faces.size()) + " incident faces, expected 3");
        continue;
      }
      Vec3 n0 = solid.face_normal_near(faces[0], v.point);
      Vec3 n1 = solid.face_normal_near(faces[1], v.point);
      Vec3 n2 = solid.face_normal_near(faces[2], v.point);
      if (std::abs(dot(cross(n0, n1), n2)) <= tol.sharp)
        add(r, ViolationKind::assumption,
            ent("vertex", v.id) + " corner normals are linearly dependent");
    } else if (sharp_incident >= 3) {
      add(r, ViolationKind::assumption,
          ent("vertex", v.id) + " joins " + std::to_string(sharp_incident) +
              " sharp edges but is not flagged sharp");
    }
  }

  return r;
}

}  // namespace sweepkernel
