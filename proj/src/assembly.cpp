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
//
// Boundary assembly. Every output boundary curve is produced exactly once
// by the entity best placed to refine it (its owner) and handed to both
// incident face pieces; orientation is decided on one designated side only
// and the partner co-edge always runs opposite. Loops then close by endpoint
// proximity: independent refinements of a shared junction solve the same
// one-dimensional root problems, so they agree far below tol.loop, and any
// orientation or ownership mistake surfaces as an open loop instead of a
// silently inverted shell.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "assembly_internal.hpp"
#include "sweepkernel/cones.hpp"
#include "sweepkernel/errors.hpp"
#include "sweepkernel/oracle.hpp"
#include "sweepkernel/rootfind.hpp"
#include "sweepkernel/validate.hpp"

namespace sweepkernel {
namespace detail {
namespace {

using Runs = std::vector<std::pair<double, double>>;

Runs runs_intersect(const Runs& a, const Runs& b) {
  Runs out;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    double lo = std::max(a[i].first, b[j].first);
    double hi = std::min(a[i].second, b[j].second);
    if (lo < hi) out.emplace_back(lo, hi);
    if (a[i].second < b[j].second)
      ++i;
    else
      ++j;
  }
  return out;
}

Runs runs_subtract(const Runs& a, const Runs& b) {
  Runs out;
  for (const auto& ra : a) {
    double cur = ra.first;
    for (const auto& rb : b) {
      if (rb.second <= cur || rb.first >= ra.second) continue;
      if (rb.first > cur) out.emplace_back(cur, rb.first);
      cur = std::max(cur, rb.second);
      if (cur >= ra.second) break;
    }
    if (cur < ra.second) out.emplace_back(cur, ra.second);
  }
  return out;
}

// Contact data of every input entity, computed up front.
struct ContactData {
  std::vector<char> has_funnel;
  std::vector<EdgeFunnel> funnels;
  std::vector<char> has_seam;
  std::vector<SeamScan> seams;
  std::vector<FaceSheet> sheets;
  std::vector<CapRegion> caps0, caps1;
  std::vector<char> has_vscan;
  std::vector<VertexScan> vscans;
};

ContactData compute_contacts(const SolidBrep& solid, const Trajectory& traj,
                             const Config& cfg) {
  ContactData cd;
  int ne = int(solid.edges.size());
  int nf = int(solid.faces.size());
  int nv = int(solid.vertices.size());
  cd.has_funnel.assign(ne, 0);
  cd.funnels.resize(ne);
  cd.has_seam.assign(ne, 0);
  cd.seams.resize(ne);
  cd.sheets.resize(nf);
  cd.caps0.resize(nf);
  cd.caps1.resize(nf);
  cd.has_vscan.assign(nv, 0);
  cd.vscans.resize(nv);

  for (int f = 0; f < nf; ++f) {
    cd.sheets[f] = compute_face_sheet(solid, f, traj, cfg);
    cd.caps0[f] = compute_cap_region(solid, f, true, traj, cfg);
    cd.caps1[f] = compute_cap_region(solid, f, false, traj, cfg);
  }
  for (int e = 0; e < ne; ++e) {
    if (solid.edges[e].sharp) {
      cd.funnels[e] = compute_edge_funnel(solid, e, traj, cfg);
      cd.has_funnel[e] = 1;
    } else {
      cd.seams[e] = scan_seam(solid, e, traj, cfg);
      cd.has_seam[e] = 1;
    }
  }
  for (int v = 0; v < nv; ++v) {
    if (!solid.vertices[v].sharp) continue;
    cd.vscans[v] = scan_vertex(solid, v, traj, cfg);
    cd.has_vscan[v] = 1;
  }
  return cd;
}

bool funnel_usable(const ContactData& cd, int edge) {
  return cd.has_funnel[edge] && !cd.funnels[edge].degenerate() &&
         !cd.funnels[edge].empty;
}

// Orientation of the funnel chart against the outward normal at (s, t). The
// sign flips only across singular points, so one well-conditioned sample per
// curve decides a whole co-edge.
double funnel_chart_dot(const SolidBrep& solid, int edge, double s, double t,
                        const Trajectory& traj) {
  MotionSample m = traj.eval(t);
  CurveSample cs = solid.curve_of(edge).eval(s);
  Vec3 sig_s = m.A * cs.d1;
  Vec3 sig_t = m.dA * cs.p + m.db;
  return dot(cross(sig_s, sig_t), funnel_normal(solid, edge, s, m));
}

std::vector<Vec3> edge_run_polyline(const SolidBrep& solid, int edge, double a,
                                    double b, const MotionSample& m,
                                    const Config& cfg) {
  const Edge& ed = solid.edges[edge];
  double ds = (ed.s1 - ed.s0) / cfg.grid.edge_ns;
  int n = std::clamp(int(std::ceil((b - a) / ds)), 1, 4 * cfg.grid.edge_ns);
  std::vector<Vec3> pts(n + 1);
  for (int k = 0; k <= n; ++k) {
    double s = a + (b - a) * k / n;
    pts[k] = m.A * solid.edge_point(edge, s) + m.b;
  }
  return pts;
}

double polyline_length(const std::vector<Vec3>& pts) {
  double len = 0;
  for (size_t k = 1; k < pts.size(); ++k) len += dist(pts[k - 1], pts[k]);
  return len;
}

int edge_between(const SolidBrep& solid, int vertex, int fa, int fb) {
  for (int e : solid.vertex_edges[vertex]) {
    const Edge& ed = solid.edges[e];
    if ((ed.left_face == fa && ed.right_face == fb) ||
        (ed.left_face == fb && ed.right_face == fa))
      return e;
  }
  return -1;
}

// ---- resolution of a pending side to a concrete face piece ----

int resolve_chart(const std::vector<SweptFace>& faces, SweptFaceKind kind,
                  int gen_kind, int gen_id, double c0, double c1,
                  const char* origin) {
  int best = -1;
  double bd = std::numeric_limits<double>::max();
  for (const SweptFace& f : faces) {
    if (f.kind != kind || f.generator.kind != gen_kind ||
        f.generator.id != gen_id)
      continue;
    for (const auto& ch : f.mesh_chart) {
      double d = (ch[0] - c0) * (ch[0] - c0) + (ch[1] - c1) * (ch[1] - c1);
      if (d < bd) {
        bd = d;
        best = f.id;
      }
    }
  }
  if (best < 0) {
    std::ostringstream msg;
    msg << origin << ": no face piece of kind " << int(kind)
        << " for generator " << (gen_kind == 1 ? "edge " : "face ") << gen_id;
    throw UnmatchedCoedge(msg.str());
  }
  return best;
}

int resolve_world(const std::vector<SweptFace>& faces, SweptFaceKind kind,
                  int gen_kind, int gen_id, const Vec3& p,
                  const char* origin) {
  int best = -1;
  double bd = std::numeric_limits<double>::max();
  for (const SweptFace& f : faces) {
    if (f.kind != kind || f.generator.kind != gen_kind ||
        f.generator.id != gen_id)
      continue;
    for (const Vec3& q : f.mesh_pts) {
      double d = norm2(q - p);
      if (d < bd) {
        bd = d;
        best = f.id;
      }
    }
  }
  if (best < 0) {
    std::ostringstream msg;
    msg << origin << ": no face piece of kind " << int(kind)
        << " for generator " << (gen_kind == 1 ? "edge " : "face ") << gen_id;
    throw UnmatchedCoedge(msg.str());
  }
  return best;
}

// Chart hint for a cap or slide side of an edge run: the pcurve point of the
// edge on that face at the run midpoint.
void pcurve_hint(const SolidBrep& solid, int edge, int face, double s,
                 double* u, double* v) {
  const Edge& ed = solid.edges[edge];
  int side = ed.left_face == face ? 0 : 1;
  int ce = solid.edge_coedge_on(edge, side);
  solid.pcurve_point(ce, s, u, v);
}

// ---- owner emission ----

struct EmitCtx {
  const SolidBrep& solid;
  const Trajectory& traj;
  const Config& cfg;
  const ContactData& cd;
  const std::vector<SweptFace>& faces;
  std::vector<PendingEdge>* pend;
  std::vector<std::string>* warnings;
};

// Cap rims: the zero curves of the wall field, shared between a cap piece
// and the contact sheet of the same face.
void emit_cap_rims(EmitCtx& cx) {
  for (int f = 0; f < int(cx.solid.faces.size()); ++f) {
    for (const CapRegion* cap : {&cx.cd.caps0[f], &cx.cd.caps1[f]}) {
      if (cap->empty) continue;
      MotionSample m = cx.traj.eval(cap->t_wall);
      const Surface& sf = cx.solid.surface_of(f);
      SweptFaceKind ck =
          cap->start ? SweptFaceKind::cap_start : SweptFaceKind::cap_end;
      int sgn = cx.solid.faces[f].outward_flag > 0 ? +1 : -1;
      for (const Chain2D& ch : cap->region.chains) {
        if (is_wall(ch.label)) continue;
        PendingEdge p;
        p.origin = cap->start ? "start cap rim" : "end cap rim";
        p.pts.reserve(ch.pts.size());
        for (const auto& uv : ch.pts)
          p.pts.push_back(m.A * sf.point(uv[0], uv[1]) + m.b);
        if (polyline_length(p.pts) < cx.cfg.tol.loop) continue;
        const auto& mid = ch.pts[ch.pts.size() / 2];
        p.piece[0] =
            resolve_chart(cx.faces, ck, 0, f, mid[0], mid[1], p.origin);
        p.piece[1] = resolve_world(cx.faces, SweptFaceKind::face_swept, 0, f,
                                   p.pts[p.pts.size() / 2], p.origin);
        p.sense0 = sgn;
        cx.pend->push_back(std::move(p));
      }
    }
  }
}

void emit_slid_interval(EmitCtx& cx, int e);

// Wall runs of sharp edges. At each interval end the edge splits into runs
// by the signs of its two grazing functions; each run separates two of
// {left cap, right cap, edge sweep}, and the pair identifies the owners.
void emit_sharp_walls(EmitCtx& cx) {
  const SolidBrep& solid = cx.solid;
  for (int e = 0; e < int(solid.edges.size()); ++e) {
    if (!cx.cd.has_funnel[e]) continue;
    const EdgeFunnel& fn = cx.cd.funnels[e];
    const Edge& ed = solid.edges[e];

    if (fn.degenerate_left && fn.degenerate_right) {
      emit_slid_interval(cx, e);
      continue;
    }

    if (fn.degenerate()) {
      // One face keeps grazing contact along the edge; its footprint owns
      // the area, so the other side's caps hand their border to the slide.
      int dside = fn.degenerate_left ? 0 : 1;
      int dface = dside == 0 ? ed.left_face : ed.right_face;
      int oside = 1 - dside;
      int oface = oside == 0 ? ed.left_face : ed.right_face;
      if (!cx.cd.sheets[dface].slides) {
        std::ostringstream msg;
        msg << "sharp edge " << e << " grazes on one side but face " << dface
            << " does not slide; its border has no owner";
        throw UnmatchedCoedge(msg.str());
      }
      for (int w = 0; w < 2; ++w) {
        double t_wall = w ? cx.traj.t1() : cx.traj.t0();
        MotionSample m = cx.traj.eval(t_wall);
        SweptFaceKind ck = w ? SweptFaceKind::cap_end : SweptFaceKind::cap_start;
        Runs runs = wall_sign_runs(solid, e, oside, cx.traj, t_wall,
                                   w ? -1 : +1, cx.cfg);
        for (const auto& r : runs) {
          PendingEdge p;
          p.origin = "cap to slide wall run";
          p.pts = edge_run_polyline(solid, e, r.first, r.second, m, cx.cfg);
          if (polyline_length(p.pts) < cx.cfg.tol.loop) continue;
          double smid = 0.5 * (r.first + r.second), u, v;
          pcurve_hint(solid, e, oface, smid, &u, &v);
          p.piece[0] = resolve_chart(cx.faces, ck, 0, oface, u, v, p.origin);
          p.piece[1] = resolve_world(cx.faces, SweptFaceKind::slide, 0, dface,
                                     p.pts[p.pts.size() / 2], p.origin);
          p.sense0 = oside == 0 ? +1 : -1;
          cx.pend->push_back(std::move(p));
        }
      }
      continue;
    }

    for (int w = 0; w < 2; ++w) {
      double t_wall = w ? cx.traj.t1() : cx.traj.t0();
      int sgn = w ? -1 : +1;
      MotionSample m = cx.traj.eval(t_wall);
      SweptFaceKind ck = w ? SweptFaceKind::cap_end : SweptFaceKind::cap_start;
      Runs rl = wall_sign_runs(solid, e, 0, cx.traj, t_wall, sgn, cx.cfg);
      Runs rr = wall_sign_runs(solid, e, 1, cx.traj, t_wall, sgn, cx.cfg);

      auto emit = [&](const Runs& runs, int dside, bool partner_cap,
                      const char* origin) {
        int dface = dside == 0 ? ed.left_face : ed.right_face;
        int oface = dside == 0 ? ed.right_face : ed.left_face;
        for (const auto& r : runs) {
          PendingEdge p;
          p.origin = origin;
          p.pts = edge_run_polyline(solid, e, r.first, r.second, m, cx.cfg);
          if (polyline_length(p.pts) < cx.cfg.tol.loop) continue;
          double smid = 0.5 * (r.first + r.second), u, v;
          pcurve_hint(solid, e, dface, smid, &u, &v);
          p.piece[0] = resolve_chart(cx.faces, ck, 0, dface, u, v, origin);
          if (partner_cap) {
            pcurve_hint(solid, e, oface, smid, &u, &v);
            p.piece[1] = resolve_chart(cx.faces, ck, 0, oface, u, v, origin);
          } else {
            p.piece[1] = resolve_chart(cx.faces, SweptFaceKind::edge_swept, 1,
                                       e, smid, t_wall, origin);
          }
          p.sense0 = dside == 0 ? +1 : -1;
          cx.pend->push_back(std::move(p));
        }
      };
      emit(runs_intersect(rl, rr), 0, true, "cap to cap wall run");
      emit(runs_subtract(rl, rr), 0, false, "cap to edge sweep wall run");
      emit(runs_subtract(rr, rl), 1, false, "cap to edge sweep wall run");
    }
  }
}

// A sharp edge grazing on both sides flows along its own carrier line; the
// boundary it leaves behind is the union of its moved copies.
void emit_slid_interval(EmitCtx& cx, int e) {
  const SolidBrep& solid = cx.solid;
  const Edge& ed = solid.edges[e];
  const Curve3& cv = solid.curve_of(e);
  if (cv.kind != CurveKind::line) {
    std::ostringstream msg;
    msg << "sharp edge " << e
        << " slides along a carrier that is not a line; not supported";
    throw AssumptionViolation(msg.str());
  }
  if (!cx.cd.sheets[ed.left_face].slides ||
      !cx.cd.sheets[ed.right_face].slides) {
    std::ostringstream msg;
    msg << "sharp edge " << e
        << " grazes on both sides but its faces do not both slide";
    throw UnmatchedCoedge(msg.str());
  }

  double inv = 1.0 / norm2(cv.dir);
  auto proj = [&](const Vec3& p) { return dot(p - cv.point, cv.dir) * inv; };
  auto range_at = [&](double t) {
    Mat3 A;
    Vec3 b;
    cx.traj.placement(t, A, b);
    double pa = proj(A * solid.edge_point(e, ed.s0) + b);
    double pb = proj(A * solid.edge_point(e, ed.s1) + b);
    return std::make_pair(std::min(pa, pb), std::max(pa, pb));
  };

  const int n = cx.cfg.grid.vertex_nt;
  double lo = std::numeric_limits<double>::max(), hi = -lo;
  int klo = 0, khi = 0;
  std::vector<double> ts(n + 1);
  for (int k = 0; k <= n; ++k) {
    ts[k] = cx.traj.t0() + (cx.traj.t1() - cx.traj.t0()) * k / n;
    auto r = range_at(ts[k]);
    if (r.first < lo) {
      lo = r.first;
      klo = k;
    }
    if (r.second > hi) {
      hi = r.second;
      khi = k;
    }
  }
  // Golden polish of both extremes around their bracketing samples.
  auto polish = [&](int kb, int want_max) {
    double a = ts[std::max(kb - 1, 0)], b = ts[std::min(kb + 1, n)];
    const double gr = 0.6180339887498949;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    auto val = [&](double t) {
      auto r = range_at(t);
      return want_max ? -r.second : r.first;
    };
    double f1 = val(x1), f2 = val(x2);
    for (int it = 0; it < 60; ++it) {
      if (f1 < f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - gr * (b - a);
        f1 = val(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + gr * (b - a);
        f2 = val(x2);
      }
    }
    double best = std::min(f1, f2);
    return want_max ? -best : best;
  };
  lo = std::min(lo, polish(klo, 0));
  hi = std::max(hi, polish(khi, 1));

  PendingEdge p;
  p.origin = "slid interval";
  const int m = 16;
  p.pts.reserve(m + 1);
  for (int k = 0; k <= m; ++k)
    p.pts.push_back(cv.at(lo + (hi - lo) * k / m));
  if (polyline_length(p.pts) < cx.cfg.tol.loop) return;
  p.piece[0] = resolve_world(cx.faces, SweptFaceKind::slide, 0, ed.left_face,
                             p.pts[p.pts.size() / 2], p.origin);
  p.piece[1] = resolve_world(cx.faces, SweptFaceKind::slide, 0, ed.right_face,
                             p.pts[p.pts.size() / 2], p.origin);
  p.sense0 = +1;
  cx.pend->push_back(std::move(p));
}

// Wall runs of smooth edges: the caps of the two incident faces meet along
// the edge with matched normals, so the runs pair cap to cap.
void emit_seam_walls(EmitCtx& cx) {
  const SolidBrep& solid = cx.solid;
  for (int e = 0; e < int(solid.edges.size()); ++e) {
    if (!cx.cd.has_seam[e]) continue;
    const SeamScan& sc = cx.cd.seams[e];
    const Edge& ed = solid.edges[e];
    if (sc.slides) {
      std::ostringstream msg;
      msg << "smooth edge " << e
          << " stays in grazing contact over the whole motion; not supported";
      throw AssumptionViolation(msg.str());
    }
    for (int w = 0; w < 2; ++w) {
      const Runs& runs = w ? sc.runs_end : sc.runs_start;
      double t_wall = w ? cx.traj.t1() : cx.traj.t0();
      MotionSample m = cx.traj.eval(t_wall);
      SweptFaceKind ck = w ? SweptFaceKind::cap_end : SweptFaceKind::cap_start;
      for (const auto& r : runs) {
        PendingEdge p;
        p.origin = "seam wall run";
        p.pts = edge_run_polyline(solid, e, r.first, r.second, m, cx.cfg);
        if (polyline_length(p.pts) < cx.cfg.tol.loop) continue;
        double smid = 0.5 * (r.first + r.second), u, v;
        pcurve_hint(solid, e, ed.left_face, smid, &u, &v);
        p.piece[0] =
            resolve_chart(cx.faces, ck, 0, ed.left_face, u, v, p.origin);
        pcurve_hint(solid, e, ed.right_face, smid, &u, &v);
        p.piece[1] =
            resolve_chart(cx.faces, ck, 0, ed.right_face, u, v, p.origin);
        p.sense0 = +1;
        cx.pend->push_back(std::move(p));
      }
    }
  }
}

// Funnel trim curves: where a grazing function changes sign the contact
// leaves the sharp edge across one face, so the curve separates the edge
// sweep from that face's contact sheet.
void emit_funnel_trims(EmitCtx& cx) {
  const SolidBrep& solid = cx.solid;
  for (int e = 0; e < int(solid.edges.size()); ++e) {
    if (!funnel_usable(cx.cd, e)) continue;
    const EdgeFunnel& fn = cx.cd.funnels[e];
    const Edge& ed = solid.edges[e];
    for (const Chain2D& ch : fn.region.chains) {
      if (is_wall(ch.label)) continue;
      int cface =
          ch.label == ChainLabel::field1 ? ed.left_face : ed.right_face;
      PendingEdge p;
      p.origin = "funnel trim";
      p.pts.reserve(ch.pts.size());
      for (const auto& st : ch.pts)
        p.pts.push_back(
            funnel_point(solid, e, st[0], cx.traj.eval(st[1])));
      if (polyline_length(p.pts) < cx.cfg.tol.loop) continue;
      const auto& mid = ch.pts[ch.pts.size() / 2];
      p.piece[0] = resolve_chart(cx.faces, SweptFaceKind::edge_swept, 1, e,
                                 mid[0], mid[1], p.origin);
      p.piece[1] = resolve_world(cx.faces, SweptFaceKind::face_swept, 0,
                                 cface, p.pts[p.pts.size() / 2], p.origin);

      double best = 0;
      for (size_t k = 0; k < ch.pts.size(); k += std::max<size_t>(
               1, ch.pts.size() / 7)) {
        double d = funnel_chart_dot(solid, e, ch.pts[k][0], ch.pts[k][1],
                                    cx.traj);
        if (std::abs(d) > std::abs(best)) best = d;
      }
      if (best == 0)
        throw SingularSample("funnel trim with a rank-deficient chart");
      p.sense0 = best > 0 ? +1 : -1;
      cx.pend->push_back(std::move(p));
    }
  }
}

// Contour curves of smooth edges: the shared-normal zero set, where the
// contact sheets of the two incident faces meet across the edge.
void emit_seam_contours(EmitCtx& cx) {
  const SolidBrep& solid = cx.solid;
  for (int e = 0; e < int(solid.edges.size()); ++e) {
    if (!cx.cd.has_seam[e]) continue;
    const SeamScan& sc = cx.cd.seams[e];
    const Edge& ed = solid.edges[e];
    for (const Chain2D& ch : sc.contour) {
      PendingEdge p;
      p.origin = "seam contour";
      p.pts.reserve(ch.pts.size());
      for (const auto& st : ch.pts) {
        MotionSample m = cx.traj.eval(st[1]);
        p.pts.push_back(m.A * solid.edge_point(e, st[0]) + m.b);
      }
      if (polyline_length(p.pts) < cx.cfg.tol.loop) continue;
      p.piece[0] = resolve_world(cx.faces, SweptFaceKind::face_swept, 0,
                                 ed.left_face, p.pts[p.pts.size() / 2],
                                 p.origin);
      p.piece[1] = resolve_world(cx.faces, SweptFaceKind::face_swept, 0,
                                 ed.right_face, p.pts[p.pts.size() / 2],
                                 p.origin);

      // Co-edge of the left face: the face interior must lie to the left
      // of the traversal seen from outside, and the inward chart direction
      // of the pcurve wall is exact.
      int cl = solid.edge_coedge_on(e, 0);
      int wall = solid.coedges[cl].side;
      double best = 0;
      for (size_t k = 1; k + 1 < ch.pts.size();
           k += std::max<size_t>(1, ch.pts.size() / 7)) {
        double s = ch.pts[k][0], t = ch.pts[k][1];
        MotionSample m = cx.traj.eval(t);
        Vec3 n = m.A * solid.edge_side_normal(e, 0, s);
        Vec3 tau = p.pts[k + 1] - p.pts[k - 1];
        double u, v;
        solid.pcurve_point(cl, s, &u, &v);
        SurfaceSample ss = solid.surface_of(ed.left_face).eval(u, v);
        Vec3 inw = wall == 0 ? ss.sv
                   : wall == 1 ? ss.su * -1.0
                   : wall == 2 ? ss.sv * -1.0
                               : ss.su;
        double d = dot(cross(n, tau), m.A * inw);
        if (std::abs(d) > std::abs(best)) best = d;
      }
      if (best == 0)
        throw SingularSample("seam contour tangent to its own wall");
      p.sense0 = best > 0 ? +1 : -1;
      cx.pend->push_back(std::move(p));
    }
  }
}

// Corner tracks: the path of a vertex while its normal cone straddles the
// contact condition. The incident edge sweeps and sliding faces the arc
// names are the two pieces the track separates.
void emit_vertex_tracks(EmitCtx& cx) {
  const SolidBrep& solid = cx.solid;
  double span = cx.traj.t1() - cx.traj.t0();
  for (int vx = 0; vx < int(solid.vertices.size()); ++vx) {
    if (!cx.cd.has_vscan[vx]) continue;
    const VertexScan& vs = cx.cd.vscans[vx];
    for (const VertexArc& arc : vs.arcs) {
      if (!arc.contact || arc.pairs.empty()) continue;

      struct Partner {
        bool is_edge;
        int gen;
      };
      std::vector<Partner> partners;
      for (const auto& pr : arc.pairs) {
        int eid = edge_between(solid, vx, vs.faces[pr.first],
                               vs.faces[pr.second]);
        if (eid >= 0 && funnel_usable(cx.cd, eid))
          partners.push_back({true, eid});
      }
      for (int k = 0; k < 3; ++k)
        if (arc.sign[k] == 0 && cx.cd.sheets[vs.faces[k]].slides)
          partners.push_back({false, vs.faces[k]});

      bool any_edge = false;
      for (const Partner& pa : partners) any_edge |= pa.is_edge;
      if (!partners.empty() && !any_edge) continue;  // slid intervals cover
      if (partners.size() != 2) {
        std::ostringstream msg;
        msg << "corner " << vx << " contact arc [" << arc.t_lo << ", "
            << arc.t_hi << "] has " << partners.size()
            << " adjacent owners instead of 2";
        throw UnmatchedCoedge(msg.str());
      }
      if (!partners[0].is_edge) std::swap(partners[0], partners[1]);

      PendingEdge p;
      p.origin = "corner track";
      int n = std::clamp(
          int(std::lround((arc.t_hi - arc.t_lo) / span * cx.cfg.grid.vertex_nt)),
          1, 4 * cx.cfg.grid.vertex_nt);
      p.pts.reserve(n + 1);
      const Vec3 vp = solid.vertices[vx].point;
      for (int k = 0; k <= n; ++k) {
        double t = arc.t_lo + (arc.t_hi - arc.t_lo) * k / n;
        Mat3 A;
        Vec3 b;
        cx.traj.placement(t, A, b);
        p.pts.push_back(A * vp + b);
      }
      if (polyline_length(p.pts) < cx.cfg.tol.loop) continue;

      double t_mid = 0.5 * (arc.t_lo + arc.t_hi);
      auto wall_of = [&](int eid) {
        const Edge& ed = solid.edges[eid];
        return ed.start_vertex == vx ? ed.s0 : ed.s1;
      };
      int e0 = partners[0].gen;
      double s0 = wall_of(e0);
      p.piece[0] = resolve_chart(cx.faces, SweptFaceKind::edge_swept, 1, e0,
                                 s0, t_mid, p.origin);
      if (partners[1].is_edge) {
        int e1 = partners[1].gen;
        p.piece[1] = resolve_chart(cx.faces, SweptFaceKind::edge_swept, 1, e1,
                                   wall_of(e1), t_mid, p.origin);
      } else {
        p.piece[1] = resolve_world(cx.faces, SweptFaceKind::slide, 0,
                                   partners[1].gen, p.pts[p.pts.size() / 2],
                                   p.origin);
      }

      double d = funnel_chart_dot(solid, e0, s0, t_mid, cx.traj);
      if (d == 0)
        throw DegenerateTangent("corner track on a rank-deficient chart");
      int j = d > 0 ? +1 : -1;
      bool at_s0 = solid.edges[e0].start_vertex == vx;
      p.sense0 = at_s0 ? -j : +j;
      cx.pend->push_back(std::move(p));
    }
  }
}

// Tracks of parameter joints: a smooth vertex where exactly two sharp edges
// meet continues the same geometric edge, so its track separates the two
// edge sweeps.
void emit_joint_tracks(EmitCtx& cx) {
  const SolidBrep& solid = cx.solid;
  for (int vx = 0; vx < int(solid.vertices.size()); ++vx) {
    if (solid.vertices[vx].sharp) continue;
    std::vector<int> sharp;
    for (int e : solid.vertex_edges[vx])
      if (solid.edges[e].sharp) sharp.push_back(e);
    if (sharp.size() != 2 || sharp[0] == sharp[1]) continue;

    int e0 = sharp[0], e1 = sharp[1];
    const Edge& ed0 = solid.edges[e0];
    double s_wall = ed0.start_vertex == vx ? ed0.s0 : ed0.s1;
    bool at_s0 = ed0.start_vertex == vx;

    const int n = cx.cfg.grid.vertex_nt;
    std::vector<double> ts(n + 1), fl(n + 1), fr(n + 1);
    for (int k = 0; k <= n; ++k) {
      ts[k] = cx.traj.t0() + (cx.traj.t1() - cx.traj.t0()) * k / n;
      MotionSample m = cx.traj.eval(ts[k]);
      fl[k] = funnel_g(solid, e0, 0, s_wall, m);
      fr[k] = funnel_g(solid, e0, 1, s_wall, m);
    }
    auto inside = [&](int k) { return (fl[k] > 0) != (fr[k] > 0); };
    auto cross_t = [&](int k) {
      // Refine the instant where the pencil zero enters or leaves the cone:
      // whichever grazing function changes sign across the cell.
      int side = (fl[k] > 0) != (fl[k + 1] > 0) ? 0 : 1;
      auto phi = [&](double t) {
        return funnel_g(solid, e0, side, s_wall, cx.traj.eval(t));
      };
      const double fa = side == 0 ? fl[k] : fr[k];
      const double fb = side == 0 ? fl[k + 1] : fr[k + 1];
      auto r = refine_root_fd(phi, ts[k], ts[k + 1], fa, fb, 1e-12,
                              cx.cfg.tol.f);
      return r.x;
    };

    Runs runs;
    bool in = inside(0);
    double start = ts[0];
    for (int k = 0; k < n; ++k) {
      bool next = inside(k + 1);
      if (next == in) continue;
      double root = cross_t(k);
      if (in)
        runs.emplace_back(start, root);
      else
        start = root;
      in = next;
    }
    if (in) runs.emplace_back(start, ts[n]);

    const Edge& ed1 = solid.edges[e1];
    double s_wall1 = ed1.start_vertex == vx ? ed1.s0 : ed1.s1;
    const Vec3 vp = solid.vertices[vx].point;
    for (const auto& r : runs) {
      PendingEdge p;
      p.origin = "joint track";
      int np = std::clamp(
          int(std::lround((r.second - r.first) / (ts[n] - ts[0]) * n)), 1,
          4 * n);
      for (int k = 0; k <= np; ++k) {
        double t = r.first + (r.second - r.first) * k / np;
        Mat3 A;
        Vec3 b;
        cx.traj.placement(t, A, b);
        p.pts.push_back(A * vp + b);
      }
      if (polyline_length(p.pts) < cx.cfg.tol.loop) continue;
      double t_mid = 0.5 * (r.first + r.second);
      p.piece[0] = resolve_chart(cx.faces, SweptFaceKind::edge_swept, 1, e0,
                                 s_wall, t_mid, p.origin);
      p.piece[1] = resolve_chart(cx.faces, SweptFaceKind::edge_swept, 1, e1,
                                 s_wall1, t_mid, p.origin);
      double d = funnel_chart_dot(solid, e0, s_wall, t_mid, cx.traj);
      if (d == 0)
        throw DegenerateTangent("joint track on a rank-deficient chart");
      int j = d > 0 ? +1 : -1;
      p.sense0 = at_s0 ? -j : +j;
      cx.pend->push_back(std::move(p));
    }
  }
}

// ---- loop assembly ----

struct CoedgeEnds {
  Vec3 start, end;
};

CoedgeEnds coedge_ends(const SweptBrep& out, const SweptCoedge& c) {
  const auto& pts = out.edges[c.edge].pts;
  if (c.sense > 0) return {pts.front(), pts.back()};
  return {pts.back(), pts.front()};
}

Vec3 loop_vector_area(const SweptBrep& out, const SweptLoop& loop) {
  Vec3 area{0, 0, 0};
  for (int cid : loop.coedges) {
    const SweptCoedge& c = out.coedges[cid];
    const auto& pts = out.edges[c.edge].pts;
    if (c.sense > 0) {
      for (size_t k = 1; k < pts.size(); ++k)
        area += cross(pts[k - 1], pts[k]);
    } else {
      for (size_t k = pts.size(); k > 1; --k)
        area += cross(pts[k - 1], pts[k - 2]);
    }
  }
  return area * 0.5;
}

void chain_face_loops(SweptBrep* out, SweptFace* face,
                      const std::vector<int>& cids, double tol) {
  std::vector<char> used(cids.size(), 0);
  std::vector<CoedgeEnds> ends(cids.size());
  for (size_t k = 0; k < cids.size(); ++k)
    ends[k] = coedge_ends(*out, out->coedges[cids[k]]);

  for (size_t seed = 0; seed < cids.size(); ++seed) {
    if (used[seed]) continue;
    SweptLoop loop;
    loop.id = int(out->loops.size());
    loop.face = face->id;
    loop.coedges.push_back(cids[seed]);
    used[seed] = 1;
    Vec3 loop_start = ends[seed].start;
    Vec3 cur = ends[seed].end;

    for (;;) {
      int best = -1;
      double bd = std::numeric_limits<double>::max();
      for (size_t k = 0; k < cids.size(); ++k) {
        if (used[k]) continue;
        double d = dist(ends[k].start, cur);
        if (d < bd) {
          bd = d;
          best = int(k);
        }
      }
      double close_d = dist(cur, loop_start);
      if ((best < 0 || bd > tol) && close_d <= tol) break;
      if (best < 0 || bd > tol) {
        std::ostringstream msg;
        msg << "face " << face->name << " loop cannot continue: gap "
            << std::min(bd, close_d) << " at (" << cur.x << ", " << cur.y
            << ", " << cur.z << ")";
        throw OpenLoop(msg.str());
      }
      loop.coedges.push_back(cids[best]);
      used[best] = 1;
      cur = ends[best].end;
    }
    for (int cid : loop.coedges) out->coedges[cid].loop = loop.id;
    face->loops.push_back(loop.id);
    out->loops.push_back(std::move(loop));
  }

  std::sort(face->loops.begin(), face->loops.end(), [&](int a, int b) {
    return norm(loop_vector_area(*out, out->loops[a])) >
           norm(loop_vector_area(*out, out->loops[b]));
  });
}

void cluster_vertices(SweptBrep* out, double tol) {
  struct End {
    Vec3 p;
    int edge;
    int which;  // 0 start, 1 end
  };
  std::vector<End> pts;
  for (const SweptEdge& e : out->edges) {
    pts.push_back({e.pts.front(), e.id, 0});
    pts.push_back({e.pts.back(), e.id, 1});
  }
  std::vector<int> parent(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) parent[i] = int(i);
  std::function<int(int)> find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (dist(pts[i].p, pts[j].p) <= tol)
        parent[find(int(i))] = find(int(j));

  std::vector<int> vid(pts.size(), -1);
  for (size_t i = 0; i < pts.size(); ++i) {
    int r = find(int(i));
    if (vid[r] < 0) {
      vid[r] = int(out->vertices.size());
      out->vertices.push_back({vid[r], pts[i].p});
    }
    int v = vid[r];
    if (pts[i].which == 0)
      out->edges[pts[i].edge].start_vertex = v;
    else
      out->edges[pts[i].edge].end_vertex = v;
  }
}

std::string find_simplicity_evidence(const SolidBrep& solid,
                                     const Trajectory& traj,
                                     const ContactData& cd,
                                     const Config& cfg) {
  struct Sample {
    Vec3 p;
    double t;
    std::string what;
  };
  std::vector<Sample> samples;
  const size_t per_entity = 48;

  for (int e = 0; e < int(solid.edges.size()); ++e) {
    if (!funnel_usable(cd, e)) continue;
    const EdgeFunnel& fn = cd.funnels[e];
    size_t stride = std::max<size_t>(1, fn.region.tri_pts.size() / per_entity);
    for (size_t k = 0; k < fn.region.tri_pts.size(); k += stride) {
      double s = fn.region.tri_pts[k][0], t = fn.region.tri_pts[k][1];
      samples.push_back({funnel_point(solid, e, s, traj.eval(t)), t,
                         "edge " + std::to_string(e) + " sweep"});
    }
  }
  for (int f = 0; f < int(solid.faces.size()); ++f) {
    const FaceSheet& sh = cd.sheets[f];
    if (sh.slides || sh.empty) continue;
    size_t stride = std::max<size_t>(1, sh.points.size() / per_entity);
    for (size_t k = 0; k < sh.points.size(); k += stride)
      samples.push_back({sh.points[k], sh.uvt[k][2],
                         "face " + std::to_string(f) + " sheet"});
  }

  // Boundary samples classify with pmc noise well below 1e-4; only margins
  // two orders past tol.pmc count as occlusion rather than jitter.
  const double occluded = -100.0 * cfg.tol.pmc;
  for (const Sample& s : samples) {
    PmcResult r = pmc(solid, traj, s.p, cfg);
    if (r.margin < occluded) {
      std::ostringstream msg;
      msg << "contact sample on " << s.what << " at t = " << s.t
          << " lies strictly inside the swept volume (margin " << r.margin
          << " at t = " << r.t_min << ")";
      return msg.str();
    }
  }

  double slab = (traj.t1() - traj.t0()) / 16.0;
  for (size_t i = 0; i < samples.size(); ++i)
    for (size_t j = i + 1; j < samples.size(); ++j) {
      if (std::abs(samples[i].t - samples[j].t) <= 2 * slab) continue;
      if (dist(samples[i].p, samples[j].p) >= cfg.merge_tol) continue;
      std::ostringstream msg;
      msg << "distinct contact curves touch near (" << samples[i].p.x << ", "
          << samples[i].p.y << ", " << samples[i].p.z << ") at t = "
          << samples[i].t << " and t = " << samples[j].t;
      return msg.str();
    }
  return "";
}

}  // namespace
}  // namespace detail

using namespace detail;

SweptBrep sweep(const SolidBrep& solid, const Trajectory& traj,
                const Config& cfg) {
  ValidationReport vr = validate_solid(solid, cfg.tol);
  if (vr.has_malformed()) throw MalformedBrep(vr.summary());
  if (vr.has_assumption()) throw AssumptionViolation(vr.summary());

  ContactData cd = compute_contacts(solid, traj, cfg);

  SweptBrep out;
  if (cfg.verify_simple) {
    std::string ev = find_simplicity_evidence(solid, traj, cd, cfg);
    if (!ev.empty()) throw NotSimpleSweep(ev);
  } else {
    out.report.simplicity_evidence = "not checked";
  }

  // Face pieces.
  for (int f = 0; f < int(solid.faces.size()); ++f) {
    if (cd.sheets[f].slides) {
      out.faces.push_back(build_slide_piece(solid, f, traj, cfg));
    } else if (!cd.sheets[f].empty) {
      for (SweptFace& p : build_sheet_pieces(solid, cd.sheets[f], traj))
        out.faces.push_back(std::move(p));
    }
    for (SweptFace& p : build_cap_pieces(solid, cd.caps0[f], traj))
      out.faces.push_back(std::move(p));
    for (SweptFace& p : build_cap_pieces(solid, cd.caps1[f], traj))
      out.faces.push_back(std::move(p));
  }
  for (int e = 0; e < int(solid.edges.size()); ++e) {
    if (!cd.has_funnel[e]) continue;
    const EdgeFunnel& fn = cd.funnels[e];
    if (fn.degenerate()) {
      std::ostringstream msg;
      msg << "sharp edge " << e
          << " keeps grazing contact; its degenerate strip is absorbed";
      out.report.warnings.push_back(msg.str());
      continue;
    }
    for (int comp = 0; comp < fn.region.n_components; ++comp) {
      SweptFace p = build_edge_piece(solid, fn, traj, comp);
      if (!p.mesh_tris.empty()) out.faces.push_back(std::move(p));
    }
  }
  for (int i = 0; i < int(out.faces.size()); ++i) out.faces[i].id = i;

  for (const SweptFace& f : out.faces) {
    if (f.singular.empty()) continue;
    std::ostringstream msg;
    msg << "face " << f.name << " carries " << f.singular.size()
        << " singular chart point(s)";
    out.report.warnings.push_back(msg.str());
  }

  // Boundary curves, resolved to their two face pieces.
  std::vector<PendingEdge> pend;
  EmitCtx cx{solid, traj, cfg, cd, out.faces, &pend, &out.report.warnings};
  emit_cap_rims(cx);
  emit_sharp_walls(cx);
  emit_seam_walls(cx);
  emit_funnel_trims(cx);
  emit_seam_contours(cx);
  emit_vertex_tracks(cx);
  emit_joint_tracks(cx);

  // Edges and co-edges; the partner co-edge always runs opposite.
  std::vector<std::vector<int>> face_coedges(out.faces.size());
  for (PendingEdge& p : pend) {
    SweptEdge e;
    e.id = int(out.edges.size());
    e.pts = std::move(p.pts);
    for (int sidx = 0; sidx < 2; ++sidx) {
      SweptCoedge c;
      c.id = int(out.coedges.size());
      c.edge = e.id;
      c.face = p.piece[sidx];
      c.sense = sidx == 0 ? p.sense0 : -p.sense0;
      e.coedges[sidx] = c.id;
      face_coedges[c.face].push_back(c.id);
      out.coedges.push_back(c);
    }
    out.edges.push_back(std::move(e));
  }

  for (SweptFace& f : out.faces)
    chain_face_loops(&out, &f, face_coedges[f.id], cfg.tol.loop);

  cluster_vertices(&out, std::max(2 * cfg.tol.loop, cfg.merge_tol));

  // Report: counts, generator adjacency, residual of the contact samples.
  for (const SweptFace& f : out.faces) {
    switch (f.kind) {
      case SweptFaceKind::edge_swept: ++out.report.n_edge_faces; break;
      case SweptFaceKind::face_swept: ++out.report.n_face_faces; break;
      case SweptFaceKind::cap_start:
      case SweptFaceKind::cap_end: ++out.report.n_cap_faces; break;
      case SweptFaceKind::slide: ++out.report.n_slide_faces; break;
    }
  }
  for (const SweptEdge& e : out.edges) {
    const SweptFace& fa = out.faces[out.coedges[e.coedges[0]].face];
    const SweptFace& fb = out.faces[out.coedges[e.coedges[1]].face];
    AdjacencyRecord rec;
    rec.edge = e.id;
    rec.face_a = fa.id;
    rec.face_b = fb.id;
    rec.generators_touch =
        solid.entities_touch(fa.generator.kind, fa.generator.id,
                             fb.generator.kind, fb.generator.id);
    if (!rec.generators_touch) ++out.report.adjacency_violations;
    out.report.adjacency.push_back(rec);
  }
  double res = 0;
  for (const SweptFace& f : out.faces) {
    if (f.kind == SweptFaceKind::edge_swept) {
      for (size_t k = 0; k < f.mesh_pts.size(); ++k) {
        Vec3 x = solid.edge_point(f.generator.id, f.mesh_chart[k][0]);
        res = std::max(res, std::abs(dot(f.mesh_normals[k],
                                         traj.velocity(x, f.mesh_chart[k][1]))));
      }
    } else if (f.kind == SweptFaceKind::face_swept) {
      const Surface& sf = solid.surface_of(f.generator.id);
      for (size_t k = 0; k < f.mesh_pts.size(); ++k) {
        Vec3 x = sf.point(f.mesh_chart[k][0], f.mesh_chart[k][1]);
        res = std::max(res, std::abs(dot(f.mesh_normals[k],
                                         traj.velocity(x, f.mesh_chart[k][2]))));
      }
    }
  }
  out.report.max_contact_residual = res;
  return out;
}

int count_face_groups(const SweptBrep& swept, SweptFaceKind kind) {
  std::vector<int> parent(swept.faces.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = int(i);
  std::function<int(int)> find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (const SweptEdge& e : swept.edges) {
    int a = swept.coedges[e.coedges[0]].face;
    int b = swept.coedges[e.coedges[1]].face;
    if (swept.faces[a].kind == kind && swept.faces[b].kind == kind)
      parent[find(a)] = find(b);
  }
  int groups = 0;
  for (const SweptFace& f : swept.faces)
    if (f.kind == kind && find(f.id) == f.id) ++groups;
  return groups;
}

SimplicityEvidence verify_simple_sweep(const SolidBrep& solid,
                                       const Trajectory& traj,
                                       const Config& cfg) {
  ValidationReport vr = validate_solid(solid, cfg.tol);
  if (vr.has_malformed()) throw MalformedBrep(vr.summary());
  if (vr.has_assumption()) throw AssumptionViolation(vr.summary());
  ContactData cd = compute_contacts(solid, traj, cfg);
  std::string ev = find_simplicity_evidence(solid, traj, cd, cfg);
  return {ev.empty(), ev};
}

}  // namespace sweepkernel
