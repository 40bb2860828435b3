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

#include "sweepkernel/funnel_face.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "sweepkernel/parallel.hpp"
#include "sweepkernel/rootfind.hpp"

namespace sweepkernel {

double face_g(const SolidBrep& solid, int face, double u, double v,
              const MotionSample& m) {
  const Surface& sf = solid.surface_of(face);
  Vec3 p = sf.point(u, v);
  Vec3 n = solid.face_normal(face, u, v);
  return dot(m.A * n, m.dA * p + m.db);
}

namespace {

// Kuhn split of a cell: one tetrahedron per permutation of the three axis
// steps from the low corner to the high corner. Neighboring cells cut their
// shared square along the same diagonal, so crossings weld across cells.
constexpr int kTetPerm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

FaceSheet compute_face_sheet(const SolidBrep& solid, int face,
                             const Trajectory& traj, const Config& cfg) {
  FaceSheet sheet;
  sheet.face = face;
  sheet.t0 = traj.t0();
  sheet.t1 = traj.t1();

  const Surface& sf = solid.surface_of(face);
  const int nu = cfg.grid.face_nu, nv = cfg.grid.face_nv, nt = cfg.grid.face_nt;
  const double u0 = sf.domain[0], u1 = sf.domain[1];
  const double v0 = sf.domain[2], v1 = sf.domain[3];
  auto uat = [&](int i) { return u0 + (u1 - u0) * i / nu; };
  auto vat = [&](int j) { return v0 + (v1 - v0) * j / nv; };
  auto tat = [&](int k) { return sheet.t0 + (sheet.t1 - sheet.t0) * k / nt; };

  std::vector<Vec3> pt(size_t(nu + 1) * (nv + 1)), nrm(pt.size());
  for (int j = 0; j <= nv; ++j)
    for (int i = 0; i <= nu; ++i) {
      size_t id = size_t(j) * (nu + 1) + i;
      pt[id] = sf.point(uat(i), vat(j));
      nrm[id] = solid.face_normal(face, uat(i), vat(j));
    }
  std::vector<MotionSample> ms(nt + 1);
  for (int k = 0; k <= nt; ++k) ms[k] = traj.eval(tat(k));

  const size_t layer = size_t(nu + 1) * (nv + 1);
  std::vector<double> f(layer * (nt + 1));
  std::vector<double> fmax_k(nt + 1, 0.0), speed_k(nt + 1, 0.0);
  parallel_for(cfg.exec, nt + 1, [&](std::int64_t k) {
    for (size_t id = 0; id < layer; ++id) {
      Vec3 vel = ms[k].dA * pt[id] + ms[k].db;
      double val = dot(ms[k].A * nrm[id], vel);
      f[size_t(k) * layer + id] = val;
      fmax_k[k] = std::max(fmax_k[k], std::abs(val));
      speed_k[k] = std::max(speed_k[k], norm(vel));
    }
  });
  double fmax = *std::max_element(fmax_k.begin(), fmax_k.end());
  double speed_max = *std::max_element(speed_k.begin(), speed_k.end());
  sheet.f_tol = cfg.tol.g_abs(speed_max);
  if (fmax <= sheet.f_tol) {
    sheet.slides = true;
    return sheet;
  }
  bool any_in = false, any_out = false;
  for (double val : f) (val > 0 ? any_out : any_in) = true;
  if (!any_in || !any_out) {
    sheet.empty = true;
    return sheet;
  }

  auto node_id = [&](int i, int j, int k) {
    return size_t(k) * layer + size_t(j) * (nu + 1) + i;
  };
  auto node_uvt = [&](size_t n) {
    int k = int(n / layer);
    size_t r = n % layer;
    int j = int(r / (nu + 1)), i = int(r % (nu + 1));
    return std::array<double, 3>{uat(i), vat(j), tat(k)};
  };

  auto exact_f = [&](const std::array<double, 3>& q) {
    return face_g(solid, face, q[0], q[1], traj.eval(q[2]));
  };

  // One welded crossing point per grid segment that changes sign.
  std::map<std::pair<size_t, size_t>, int> crossings;
  auto crossing = [&](size_t a, size_t b) {
    if (a > b) std::swap(a, b);
    auto it = crossings.find({a, b});
    if (it != crossings.end()) return it->second;
    auto qa = node_uvt(a), qb = node_uvt(b);
    double fa = f[a], fb = f[b];
    if (fa > fb) {
      std::swap(qa, qb);
      std::swap(fa, fb);
    }
    auto line = [&](double lam) {
      std::array<double, 3> q{qa[0] + lam * (qb[0] - qa[0]),
                              qa[1] + lam * (qb[1] - qa[1]),
                              qa[2] + lam * (qb[2] - qa[2])};
      return exact_f(q);
    };
    auto root = refine_root_fd(line, 0.0, 1.0, fa, fb, 1e-12, cfg.tol.f);
    double lam = std::clamp(root.x, 0.0, 1.0);
    std::array<double, 3> q{qa[0] + lam * (qb[0] - qa[0]),
                            qa[1] + lam * (qb[1] - qa[1]),
                            qa[2] + lam * (qb[2] - qa[2])};
    int idx = int(sheet.points.size());
    sheet.points.push_back(traj.eval(q[2]).A * sf.point(q[0], q[1]) +
                           traj.eval(q[2]).b);
    sheet.uvt.push_back(q);
    crossings.emplace(std::make_pair(a, b), idx);
    return idx;
  };

  auto emit = [&](int a, int b, int c) {
    if (a == b || b == c || a == c) return;
    sheet.tris.push_back({a, b, c});
  };

  for (int k = 0; k < nt; ++k)
    for (int j = 0; j < nv; ++j)
      for (int i = 0; i < nu; ++i)
        for (const auto& perm : kTetPerm) {
          size_t corner[4];
          int ci = i, cj = j, ck = k;
          corner[0] = node_id(ci, cj, ck);
          for (int stp = 0; stp < 3; ++stp) {
            ci += perm[stp] == 0;
            cj += perm[stp] == 1;
            ck += perm[stp] == 2;
            corner[stp + 1] = node_id(ci, cj, ck);
          }
          bool in[4];
          int n_in = 0;
          for (int c = 0; c < 4; ++c) {
            in[c] = f[corner[c]] <= 0;
            n_in += in[c];
          }
          if (n_in == 0 || n_in == 4) continue;
          // Gather the separating edges: each inside-outside pair holds one
          // crossing; one or three inside corners give a triangle, two give
          // a quad split along its first diagonal.
          int pts[4], np = 0;
          if (n_in == 1 || n_in == 3) {
            int lone = -1;
            for (int c = 0; c < 4; ++c)
              if (in[c] == (n_in == 1)) lone = c;
            for (int c = 0; c < 4; ++c)
              if (c != lone) pts[np++] = crossing(corner[lone], corner[c]);
            emit(pts[0], pts[1], pts[2]);
          } else {
            int a[2], b[2], na = 0, nb = 0;
            for (int c = 0; c < 4; ++c) (in[c] ? a[na++] : b[nb++]) = c;
            pts[0] = crossing(corner[a[0]], corner[b[0]]);
            pts[1] = crossing(corner[a[0]], corner[b[1]]);
            pts[2] = crossing(corner[a[1]], corner[b[1]]);
            pts[3] = crossing(corner[a[1]], corner[b[0]]);
            emit(pts[0], pts[1], pts[2]);
            emit(pts[0], pts[2], pts[3]);
          }
        }

  // Orient along the moved face normal.
  for (auto& tr : sheet.tris) {
    const Vec3 &p0 = sheet.points[tr[0]], &p1 = sheet.points[tr[1]],
               &p2 = sheet.points[tr[2]];
    std::array<double, 3> c{};
    for (int v = 0; v < 3; ++v)
      for (int x = 0; x < 3; ++x) c[x] += sheet.uvt[tr[v]][x] / 3;
    Vec3 ref = traj.eval(c[2]).A * solid.face_normal(face, c[0], c[1]);
    if (dot(cross(p1 - p0, p2 - p0), ref) < 0) std::swap(tr[1], tr[2]);
  }

  DisjointSet ds(int(sheet.points.size()));
  for (const auto& tr : sheet.tris) {
    ds.unite(tr[0], tr[1]);
    ds.unite(tr[0], tr[2]);
  }
  std::map<int, int> comp;
  sheet.tri_component.reserve(sheet.tris.size());
  for (const auto& tr : sheet.tris) {
    int root = ds.find(tr[0]);
    auto it = comp.find(root);
    if (it == comp.end()) it = comp.emplace(root, int(comp.size())).first;
    sheet.tri_component.push_back(it->second);
  }
  sheet.n_components = int(comp.size());
  return sheet;
}

CapRegion compute_cap_region(const SolidBrep& solid, int face, bool start,
                             const Trajectory& traj, const Config& cfg) {
  CapRegion cap;
  cap.face = face;
  cap.start = start;
  cap.t_wall = start ? traj.t0() : traj.t1();
  MotionSample m = traj.eval(cap.t_wall);

  const Surface& sf = solid.surface_of(face);
  FieldGrid grid;
  grid.nx = cfg.grid.face_nu;
  grid.ny = cfg.grid.face_nv;
  grid.x0 = sf.domain[0];
  grid.x1 = sf.domain[1];
  grid.y0 = sf.domain[2];
  grid.y1 = sf.domain[3];
  grid.nfields = 1;
  grid.allocate();

  // The end cap keeps {g >= 0}; negating the field reuses the one-sided
  // region convention.
  const double sgn = start ? 1.0 : -1.0;
  double fmax = 0, speed_max = 0;
  for (int j = 0; j <= grid.ny; ++j)
    for (int i = 0; i <= grid.nx; ++i) {
      double u = grid.x(i), v = grid.y(j);
      Vec3 p = sf.point(u, v);
      Vec3 vel = m.dA * p + m.db;
      double val = dot(m.A * solid.face_normal(face, u, v), vel);
      grid.f1[size_t(j) * (grid.nx + 1) + i] = sgn * val;
      fmax = std::max(fmax, std::abs(val));
      speed_max = std::max(speed_max, norm(vel));
    }
  cap.f_tol = cfg.tol.g_abs(speed_max);
  if (fmax <= cap.f_tol) {
    // Sliding wall: the face neither caps nor sweeps at this end.
    cap.empty = true;
    return cap;
  }

  auto exact = [&](int, double u, double v) {
    return sgn * face_g(solid, face, u, v, m);
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
  cap.region = extract_region(grid, sampler, refiner);
  cap.empty = cap.region.n_components == 0;
  cap.full = cap.region.full_rectangle();
  return cap;
}

}  // namespace sweepkernel
