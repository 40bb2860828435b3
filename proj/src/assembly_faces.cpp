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

#include "assembly_internal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "sweepkernel/cones.hpp"
#include "sweepkernel/errors.hpp"
#include "sweepkernel/rootfind.hpp"

namespace sweepkernel {
namespace detail {

namespace {

// Remap of region triangle points restricted to one component.
struct ComponentMesh {
  std::vector<std::array<double, 2>> pts;
  std::vector<std::array<int, 3>> tris;
};

ComponentMesh component_mesh(const Region2D& region, int component) {
  ComponentMesh out;
  std::vector<int> remap(region.tri_pts.size(), -1);
  for (size_t k = 0; k < region.tris.size(); ++k) {
    if (region.tri_component[k] != component) continue;
    std::array<int, 3> t;
    for (int c = 0; c < 3; ++c) {
      int& r = remap[region.tris[k][c]];
      if (r < 0) {
        r = int(out.pts.size());
        out.pts.push_back(region.tri_pts[region.tris[k][c]]);
      }
      t[c] = r;
    }
    out.tris.push_back(t);
  }
  return out;
}

void orient_mesh(SweptFace* f) {
  // Pick the triangle where the chart orientation is clearest and flip the
  // whole sheet once; the chart keeps one handedness per component.
  double best = 0;
  for (const auto& t : f->mesh_tris) {
    const Vec3 a = f->mesh_pts[t[0]], b = f->mesh_pts[t[1]], c = f->mesh_pts[t[2]];
    Vec3 n = f->mesh_normals[t[0]] + f->mesh_normals[t[1]] + f->mesh_normals[t[2]];
    double d = dot(cross(b - a, c - a), n);
    if (std::abs(d) > std::abs(best)) best = d;
  }
  if (best < 0)
    for (auto& t : f->mesh_tris) std::swap(t[1], t[2]);
}

}  // namespace

SweptFace build_edge_piece(const SolidBrep& solid, const EdgeFunnel& funnel,
                           const Trajectory& traj, int component) {
  SweptFace f;
  f.kind = SweptFaceKind::edge_swept;
  f.generator = {1, funnel.edge};
  f.component = component;
  f.name = "edge" + std::to_string(funnel.edge) + "#" + std::to_string(component);

  ComponentMesh cm = component_mesh(funnel.region, component);
  f.mesh_tris = std::move(cm.tris);
  f.mesh_pts.reserve(cm.pts.size());
  f.mesh_normals.reserve(cm.pts.size());
  f.mesh_chart.reserve(cm.pts.size());
  for (const auto& st : cm.pts) {
    MotionSample m = traj.eval(st[1]);
    f.mesh_pts.push_back(funnel_point(solid, funnel.edge, st[0], m));
    f.mesh_normals.push_back(funnel_normal(solid, funnel.edge, st[0], m));
    f.mesh_chart.push_back({st[0], st[1], 0});
  }
  orient_mesh(&f);

  // A singular point belongs to the component whose samples surround it.
  for (const auto& sp : funnel.singular) {
    double best = std::numeric_limits<double>::max();
    int best_comp = 0;
    for (size_t k = 0; k < funnel.region.tris.size(); ++k) {
      const auto& p = funnel.region.tri_pts[funnel.region.tris[k][0]];
      double d = std::hypot(p[0] - sp.s, p[1] - sp.t);
      if (d < best) {
        best = d;
        best_comp = funnel.region.tri_component[k];
      }
    }
    if (best_comp == component) f.singular.push_back(sp);
  }
  return f;
}

std::vector<SweptFace> build_sheet_pieces(const SolidBrep& solid,
                                          const FaceSheet& sheet,
                                          const Trajectory& traj) {
  std::vector<SweptFace> out;
  for (int comp = 0; comp < sheet.n_components; ++comp) {
    SweptFace f;
    f.kind = SweptFaceKind::face_swept;
    f.generator = {0, sheet.face};
    f.component = comp;
    f.name = "face" + std::to_string(sheet.face) + "#" + std::to_string(comp);

    std::vector<int> remap(sheet.points.size(), -1);
    for (size_t k = 0; k < sheet.tris.size(); ++k) {
      if (sheet.tri_component[k] != comp) continue;
      std::array<int, 3> t;
      for (int c = 0; c < 3; ++c) {
        int& r = remap[sheet.tris[k][c]];
        if (r < 0) {
          r = int(f.mesh_pts.size());
          const auto& q = sheet.uvt[sheet.tris[k][c]];
          f.mesh_pts.push_back(sheet.points[sheet.tris[k][c]]);
          f.mesh_chart.push_back(q);
          MotionSample m = traj.eval(q[2]);
          f.mesh_normals.push_back(m.A * solid.face_normal(sheet.face, q[0], q[1]));
        }
        t[c] = r;
      }
      f.mesh_tris.push_back(t);
    }
    if (!f.mesh_tris.empty()) out.push_back(std::move(f));
  }
  return out;
}

std::vector<SweptFace> build_cap_pieces(const SolidBrep& solid,
                                        const CapRegion& cap,
                                        const Trajectory& traj) {
  std::vector<SweptFace> out;
  if (cap.empty) return out;
  MotionSample m = traj.eval(cap.t_wall);
  const Surface& sf = solid.surface_of(cap.face);
  for (int comp = 0; comp < cap.region.n_components; ++comp) {
    SweptFace f;
    f.kind = cap.start ? SweptFaceKind::cap_start : SweptFaceKind::cap_end;
    f.generator = {0, cap.face};
    f.component = comp;
    f.name = std::string(cap.start ? "cap0:" : "cap1:") +
             (solid.faces[cap.face].name.empty()
                  ? "face" + std::to_string(cap.face)
                  : solid.faces[cap.face].name) +
             "#" + std::to_string(comp);

    ComponentMesh cm = component_mesh(cap.region, comp);
    f.mesh_tris = std::move(cm.tris);
    for (const auto& uv : cm.pts) {
      f.mesh_pts.push_back(m.A * sf.point(uv[0], uv[1]) + m.b);
      f.mesh_normals.push_back(m.A * solid.face_normal(cap.face, uv[0], uv[1]));
      f.mesh_chart.push_back({uv[0], uv[1], 0});
    }
    orient_mesh(&f);
    if (!f.mesh_tris.empty()) out.push_back(std::move(f));
  }
  return out;
}

SweptFace build_slide_piece(const SolidBrep& solid, int face,
                            const Trajectory& traj, const Config& cfg) {
  const Surface& sf = solid.surface_of(face);
  if (sf.kind != SurfaceKind::plane)
    throw AssumptionViolation("sliding face " + std::to_string(face) +
                              " has a non-planar carrier");
  const Face& fc = solid.faces[face];
  if (fc.loops.size() != 1 || solid.loops[fc.loops[0]].coedges.size() != 4)
    throw AssumptionViolation("sliding face " + std::to_string(face) +
                              " is not a full rectangle of its chart");

  const Vec3 po = sf.origin, ax = sf.ax, ay = sf.ay;
  const Vec3 n_out = normalized(cross(ax, ay)) * double(fc.outward_flag);
  const double cu = 0.5 * (sf.u0() + sf.u1()), cv = 0.5 * (sf.v0() + sf.v1());
  const double hu = 0.5 * (sf.u1() - sf.u0()), hv = 0.5 * (sf.v1() - sf.v0());

  // In-plane placement per time sample; the carrier maps onto itself, so
  // the moved chart frame has no out-of-plane part.
  const int nt = std::max(64, cfg.grid.face_nt);
  struct Placement {
    double r00, r01, r10, r11, ox, oy;
  };
  std::vector<Placement> pl(nt + 1);
  std::vector<double> ts(nt + 1);
  for (int k = 0; k <= nt; ++k) {
    double t = traj.t0() + (traj.t1() - traj.t0()) * k / nt;
    ts[k] = t;
    Mat3 A;
    Vec3 b;
    traj.placement(t, A, b);
    Vec3 e1 = A * ax, e2 = A * ay, o = A * po + b - po;
    pl[k] = {dot(e1, ax), dot(e2, ax), dot(e1, ay), dot(e2, ay),
             dot(o, ax),  dot(o, ay)};
  }

  auto dist_at = [&](const Placement& p, double x, double y) {
    // Pull back through the rigid in-plane placement, then rectangle distance.
    double rx = x - p.ox, ry = y - p.oy;
    double qx = p.r00 * rx + p.r10 * ry - cu;
    double qy = p.r01 * rx + p.r11 * ry - cv;
    double dx = std::abs(qx) - hu, dy = std::abs(qy) - hv;
    double ox = std::max(dx, 0.0), oy = std::max(dy, 0.0);
    return std::hypot(ox, oy) + std::min(std::max(dx, dy), 0.0);
  };
  auto footprint = [&](double x, double y) {
    int kb = 0;
    double best = dist_at(pl[0], x, y);
    for (int k = 1; k <= nt; ++k) {
      double d = dist_at(pl[k], x, y);
      if (d < best) {
        best = d;
        kb = k;
      }
    }
    // Golden polish over the bracketing samples.
    double lo = ts[std::max(kb - 1, 0)], hi = ts[std::min(kb + 1, nt)];
    const double gr = 0.6180339887498949;
    double a = hi - gr * (hi - lo), b = lo + gr * (hi - lo);
    auto at = [&](double t) {
      Mat3 A;
      Vec3 bb;
      traj.placement(t, A, bb);
      Vec3 e1 = A * ax, e2 = A * ay, o = A * po + bb - po;
      Placement p{dot(e1, ax), dot(e2, ax), dot(e1, ay), dot(e2, ay),
                  dot(o, ax),  dot(o, ay)};
      return dist_at(p, x, y);
    };
    double fa = at(a), fb = at(b);
    for (int it = 0; it < 48 && hi - lo > 1e-12 * (ts[nt] - ts[0] + 1); ++it) {
      if (fa < fb) {
        hi = b;
        b = a;
        fb = fa;
        a = hi - gr * (hi - lo);
        fa = at(a);
      } else {
        lo = a;
        a = b;
        fa = fb;
        b = lo + gr * (hi - lo);
        fb = at(b);
      }
    }
    return std::min(best, std::min(fa, fb));
  };

  // Chart window: the moved domain corners plus a margin.
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (int k = 0; k <= nt; ++k) {
    for (int c = 0; c < 4; ++c) {
      double u = c & 1 ? sf.u1() : sf.u0();
      double v = c & 2 ? sf.v1() : sf.v0();
      double x = pl[k].r00 * u + pl[k].r01 * v + pl[k].ox;
      double y = pl[k].r10 * u + pl[k].r11 * v + pl[k].oy;
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  const int n = std::max(32, cfg.grid.voxel_n);
  double mx = 2 * (x1 - x0) / n, my = 2 * (y1 - y0) / n;

  FieldGrid grid;
  grid.nx = n;
  grid.ny = n;
  grid.x0 = x0 - mx;
  grid.x1 = x1 + mx;
  grid.y0 = y0 - my;
  grid.y1 = y1 + my;
  grid.nfields = 1;
  grid.allocate();
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i)
      grid.f1[size_t(j) * (n + 1) + i] = footprint(grid.x(i), grid.y(j));

  FieldSampler sampler = [&](int, double x, double y) { return footprint(x, y); };
  CrossRefiner refiner = [&](int, double sax, double say, double sbx,
                             double sby, double fa, double fb) {
    auto phi = [&](double lam) {
      return footprint(sax + lam * (sbx - sax), say + lam * (sby - say));
    };
    auto r = refine_root_fd(phi, 0.0, 1.0, fa, fb, 1e-12, cfg.tol.f);
    return std::clamp(r.x, 0.0, 1.0);
  };
  Region2D region = extract_region(grid, sampler, refiner);

  SweptFace f;
  f.kind = SweptFaceKind::slide;
  f.generator = {0, face};
  f.component = 0;
  f.name = "slide:" + (fc.name.empty() ? "face" + std::to_string(face) : fc.name);
  std::vector<int> remap(region.tri_pts.size(), -1);
  for (size_t k = 0; k < region.tris.size(); ++k) {
    std::array<int, 3> t;
    for (int c = 0; c < 3; ++c) {
      int& r = remap[region.tris[k][c]];
      if (r < 0) {
        r = int(f.mesh_pts.size());
        const auto& p = region.tri_pts[region.tris[k][c]];
        f.mesh_pts.push_back(po + p[0] * ax + p[1] * ay);
        f.mesh_normals.push_back(n_out);
        f.mesh_chart.push_back({p[0], p[1], 0});
      }
      t[c] = r;
    }
    f.mesh_tris.push_back(t);
  }
  orient_mesh(&f);
  return f;
}

std::vector<std::pair<double, double>> wall_sign_runs(
    const SolidBrep& solid, int edge, int side, const Trajectory& traj,
    double t_wall, int sgn, const Config& cfg) {
  const Edge& e = solid.edges[edge];
  const int ns = cfg.grid.edge_ns;
  const MotionSample m = traj.eval(t_wall);

  // Refine on the same function the funnel and cap grids sample, so a run
  // endpoint and the funnel boundary it meets agree far below tol.loop.
  auto phi = [&](double s) { return sgn * funnel_g(solid, edge, side, s, m); };

  std::vector<double> sv(ns + 1), fv(ns + 1);
  for (int i = 0; i <= ns; ++i) {
    sv[i] = e.s0 + (e.s1 - e.s0) * i / ns;
    fv[i] = phi(sv[i]);
  }

  std::vector<std::pair<double, double>> runs;
  bool inside = fv[0] <= 0;
  double start = sv[0];
  for (int i = 0; i < ns; ++i) {
    bool next = fv[i + 1] <= 0;
    if (next == inside) continue;
    double root;
    if (fv[i] == 0.0) {
      root = sv[i];
    } else if (fv[i + 1] == 0.0) {
      root = sv[i + 1];
    } else {
      auto r = refine_root_fd(phi, sv[i], sv[i + 1], fv[i], fv[i + 1], 1e-12,
                              cfg.tol.f);
      root = r.x;
    }
    if (inside)
      runs.emplace_back(start, root);
    else
      start = root;
    inside = next;
  }
  if (inside) runs.emplace_back(start, sv[ns]);
  runs.erase(std::remove_if(runs.begin(), runs.end(),
                            [&](const std::pair<double, double>& r) {
                              return r.second - r.first <=
                                     (e.s1 - e.s0) * 1e-12;
                            }),
             runs.end());
  return runs;
}

SeamScan scan_seam(const SolidBrep& solid, int edge, const Trajectory& traj,
                   const Config& cfg) {
  SeamScan out;
  out.edge = edge;
  const Edge& e = solid.edges[edge];
  const int ns = cfg.grid.edge_ns, nt = cfg.grid.edge_nt;

  FieldGrid grid;
  grid.nx = ns;
  grid.ny = nt;
  grid.x0 = e.s0;
  grid.x1 = e.s1;
  grid.y0 = traj.t0();
  grid.y1 = traj.t1();
  grid.nfields = 1;
  grid.allocate();

  // Both sides of a smooth edge share the normal; side 0 stands for the pair.
  double g_max = 0, speed_max = 0;
  for (int j = 0; j <= nt; ++j) {
    MotionSample m = traj.eval(grid.y(j));
    for (int i = 0; i <= ns; ++i) {
      double s = grid.x(i);
      double g = funnel_g(solid, edge, 0, s, m);
      grid.f1[size_t(j) * (ns + 1) + i] = g;
      g_max = std::max(g_max, std::abs(g));
      speed_max = std::max(
          speed_max, norm(m.dA * solid.edge_point(edge, s) + m.db));
    }
  }
  if (g_max <= cfg.tol.g_abs(speed_max)) {
    out.slides = true;
    return out;
  }

  auto exact = [&](int, double s, double t) {
    return funnel_g(solid, edge, 0, s, traj.eval(t));
  };
  FieldSampler sampler = exact;
  CrossRefiner refiner = [&](int field, double ax, double ay, double bx,
                             double by, double fa, double fb) {
    auto phi = [&](double lam) {
      return exact(field, ax + lam * (bx - ax), ay + lam * (by - ay));
    };
    auto r = refine_root_fd(phi, 0.0, 1.0, fa, fb, 1e-12, cfg.tol.f);
    return std::clamp(r.x, 0.0, 1.0);
  };
  out.contour = extract_contour(grid, sampler, refiner);
  out.runs_start = wall_sign_runs(solid, edge, 0, traj, traj.t0(), +1, cfg);
  out.runs_end = wall_sign_runs(solid, edge, 0, traj, traj.t1(), -1, cfg);
  return out;
}

}  // namespace detail
}  // namespace sweepkernel
