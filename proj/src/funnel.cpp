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

#include "sweepkernel/funnel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sweepkernel/errors.hpp"
#include "sweepkernel/rootfind.hpp"

namespace sweepkernel {

double funnel_g(const SolidBrep& solid, int edge, int side, double s,
                const MotionSample& m) {
  Vec3 n = solid.edge_side_normal(edge, side, s);
  Vec3 x = solid.edge_point(edge, s);
  return g_eval(m, n, x);
}

double funnel_alpha(const SolidBrep& solid, int edge, double s,
                    const MotionSample& m) {
  double gl = funnel_g(solid, edge, 0, s, m);
  double gr = funnel_g(solid, edge, 1, s, m);
  double d = gr - gl;
  return d == 0.0 ? 0.5 : gr / d;
}

Vec3 funnel_point(const SolidBrep& solid, int edge, double s,
                  const MotionSample& m) {
  return m.A * solid.edge_point(edge, s) + m.b;
}

Vec3 funnel_normal(const SolidBrep& solid, int edge, double s,
                   const MotionSample& m) {
  Vec3 nl = solid.edge_side_normal(edge, 0, s);
  Vec3 nr = solid.edge_side_normal(edge, 1, s);
  double a = funnel_alpha(solid, edge, s, m);
  return m.A * cone_blend(nl, nr, std::clamp(a, 0.0, 1.0));
}

double funnel_rank_residual(const SolidBrep& solid, int edge, double s,
                            const MotionSample& m) {
  Vec3 ds = m.A * solid.edge_tangent(edge, s);
  Vec3 dt = m.dA * solid.edge_point(edge, s) + m.db;
  double denom = norm(ds) * norm(dt);
  if (denom < 1e-300) return 0.0;
  return norm(cross(ds, dt)) / denom;
}

namespace {

// Compass descent of the rank residual, box constrained to the prism.
EdgeFunnel::Singular refine_singular(const SolidBrep& solid,
                                     const Trajectory& traj, int edge,
                                     double s, double t, double hs, double ht,
                                     const EdgeFunnel& f) {
  auto val = [&](double ss, double tt) {
    return funnel_rank_residual(solid, edge, ss, traj.eval(tt));
  };
  double best = val(s, t);
  for (int iter = 0; iter < 240 && (hs > 1e-12 || ht > 1e-12); ++iter) {
    bool moved = false;
    const double cs[4] = {s - hs, s + hs, s, s};
    const double ct[4] = {t, t, t - ht, t + ht};
    for (int k = 0; k < 4; ++k) {
      double ss = std::clamp(cs[k], f.s0, f.s1);
      double tt = std::clamp(ct[k], f.t0, f.t1);
      double v = val(ss, tt);
      if (v < best) {
        best = v;
        s = ss;
        t = tt;
        moved = true;
        break;
      }
    }
    if (!moved) {
      hs *= 0.5;
      ht *= 0.5;
    }
    if (best <= 1e-16) break;
  }
  return {s, t, best};
}

}  // namespace

std::vector<EdgeFunnel::Singular> detect_singularities(const SolidBrep& solid,
                                                       const EdgeFunnel& f,
                                                       const Trajectory& traj,
                                                       const Config& cfg) {
  const int ns = f.grid.nx, nt = f.grid.ny;
  const double hs = (f.s1 - f.s0) / ns, ht = (f.t1 - f.t0) / nt;
  std::vector<double> res(size_t(ns + 1) * (nt + 1));
  std::vector<MotionSample> rows(nt + 1);
  for (int j = 0; j <= nt; ++j) rows[j] = traj.eval(f.grid.y(j));
  int near_zero = 0;
  for (int j = 0; j <= nt; ++j)
    for (int i = 0; i <= ns; ++i) {
      double r = funnel_rank_residual(solid, f.edge, f.grid.x(i), rows[j]);
      res[size_t(j) * (ns + 1) + i] = r;
      if (r <= 10 * cfg.tol.sing) ++near_zero;
    }
  // Isolated rank drops hit at most a couple of grid nodes dead on. A band of
  // them means the velocity tracks the edge tangent along a whole curve, which
  // the trimming model cannot represent.
  if (near_zero > std::max(4, ((ns + 1) * (nt + 1)) / 50))
    throw AssumptionViolation(
        "edge sweep is singular along a curve, not at isolated points");

  std::vector<EdgeFunnel::Singular> out;
  auto at = [&](int i, int j) -> double {
    if (i < 0 || j < 0 || i > ns || j > nt) return -1.0;
    if (!f.grid.node_inside(i, j)) return -1.0;
    return res[size_t(j) * (ns + 1) + i];
  };
  for (int j = 0; j <= nt; ++j)
    for (int i = 0; i <= ns; ++i) {
      double r0 = at(i, j);
      if (r0 < 0 || r0 > 0.2) continue;
      bool is_min = true;
      for (int dj = -1; dj <= 1 && is_min; ++dj)
        for (int di = -1; di <= 1; ++di) {
          if (di == 0 && dj == 0) continue;
          double rn = at(i + di, j + dj);
          if (rn >= 0 && rn < r0) {
            is_min = false;
            break;
          }
        }
      if (!is_min) continue;
      auto sp = refine_singular(solid, traj, f.edge, f.grid.x(i),
                                f.grid.y(j), hs, ht, f);
      if (sp.residual > cfg.tol.sing) continue;
      bool dup = false;
      for (const auto& q : out)
        if (std::abs(q.s - sp.s) < 2 * hs && std::abs(q.t - sp.t) < 2 * ht)
          dup = true;
      if (!dup) out.push_back(sp);
    }
  // A rank drop at time t* can hold along the whole edge (velocity parallel
  // to a straight edge at one instant). That is one event, not one per node:
  // collapse accepted points that share a time.
  std::sort(out.begin(), out.end(),
            [](const EdgeFunnel::Singular& a, const EdgeFunnel::Singular& b) {
              return a.t < b.t;
            });
  std::vector<EdgeFunnel::Singular> merged;
  for (const auto& sp : out) {
    if (!merged.empty() && sp.t - merged.back().t < 2 * ht) {
      if (sp.residual < merged.back().residual) merged.back() = sp;
    } else {
      merged.push_back(sp);
    }
  }
  return merged;
}

EdgeFunnel compute_edge_funnel(const SolidBrep& solid, int edge,
                               const Trajectory& traj, const Config& cfg) {
  EdgeFunnel f;
  f.edge = edge;
  const Edge& e = solid.edges[edge];
  f.s0 = e.s0;
  f.s1 = e.s1;
  f.t0 = traj.t0();
  f.t1 = traj.t1();

  const int ns = cfg.grid.edge_ns, nt = cfg.grid.edge_nt;
  f.grid.nx = ns;
  f.grid.ny = nt;
  f.grid.x0 = f.s0;
  f.grid.x1 = f.s1;
  f.grid.y0 = f.t0;
  f.grid.y1 = f.t1;
  f.grid.nfields = 2;
  f.grid.allocate();

  // Normals and points vary only with s; motion only with t.
  std::vector<Vec3> pt(ns + 1), nl(ns + 1), nr(ns + 1);
  for (int i = 0; i <= ns; ++i) {
    double s = f.grid.x(i);
    pt[i] = solid.edge_point(edge, s);
    nl[i] = solid.edge_side_normal(edge, 0, s);
    nr[i] = solid.edge_side_normal(edge, 1, s);
  }

  double speed_max = 0, gl_max = 0, gr_max = 0;
  for (int j = 0; j <= nt; ++j) {
    MotionSample m = traj.eval(f.grid.y(j));
    for (int i = 0; i <= ns; ++i) {
      Vec3 vel = m.dA * pt[i] + m.db;
      speed_max = std::max(speed_max, norm(vel));
      double gl = dot(m.A * nl[i], vel);
      double gr = dot(m.A * nr[i], vel);
      f.grid.f1[size_t(j) * (ns + 1) + i] = gl;
      f.grid.f2[size_t(j) * (ns + 1) + i] = gr;
      gl_max = std::max(gl_max, std::abs(gl));
      gr_max = std::max(gr_max, std::abs(gr));
    }
  }
  f.g_tol = cfg.tol.g_abs(speed_max);
  f.degenerate_left = gl_max <= f.g_tol;
  f.degenerate_right = gr_max <= f.g_tol;
  if (f.degenerate()) {
    // The strip is absorbed into the sliding neighbor; no region to trim.
    f.empty = true;
    return f;
  }

  auto exact = [&](int field, double s, double t) {
    return funnel_g(solid, edge, field == 1 ? 0 : 1, s, traj.eval(t));
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
  f.region = extract_region(f.grid, sampler, refiner);
  f.empty = f.region.n_components == 0;
  f.full = f.region.full_rectangle();
  if (f.empty) return f;

  f.singular = detect_singularities(solid, f, traj, cfg);
  return f;
}

namespace {

struct RawRoot {
  double t;
  int gen;
};

}  // namespace

VertexScan scan_vertex(const SolidBrep& solid, int vertex,
                       const Trajectory& traj, const Config& cfg) {
  VertexScan vs;
  vs.vertex = vertex;
  auto vf = solid.vertex_faces(vertex);
  if (vf.size() != 3)
    throw AssumptionViolation("vertex " + std::to_string(vertex) +
                              " joins " + std::to_string(vf.size()) +
                              " faces; corner scan needs exactly 3");
  const Vec3 P = solid.vertices[vertex].point;
  for (int k = 0; k < 3; ++k) {
    vs.faces[k] = vf[k];
    vs.normals[k] = solid.face_normal_near(vf[k], P);
  }

  const double t0 = traj.t0(), t1 = traj.t1();
  const int nt = cfg.grid.vertex_nt;
  std::vector<double> ts(nt + 1);
  std::vector<std::array<double, 3>> samp(nt + 1);
  double speed_max = 0;
  for (int j = 0; j <= nt; ++j) {
    ts[j] = t0 + (t1 - t0) * j / nt;
    MotionSample m = traj.eval(ts[j]);
    Vec3 vel = m.dA * P + m.db;
    speed_max = std::max(speed_max, norm(vel));
    for (int k = 0; k < 3; ++k) samp[j][k] = dot(m.A * vs.normals[k], vel);
  }
  vs.g_tol = cfg.tol.g_abs(speed_max);

  std::vector<RawRoot> raw;
  for (int k = 0; k < 3; ++k) {
    auto fk = [&](double t) { return g_eval(traj.eval(t), vs.normals[k], P); };
    auto dfk = [&](double t) { return g_eval_dt(traj.eval(t), vs.normals[k], P); };

    double amax = 0;
    for (int j = 0; j <= nt; ++j) amax = std::max(amax, std::abs(samp[j][k]));
    if (amax <= vs.g_tol) continue;  // the generator grazes for all time

    auto sgn = [&](int j) {
      double v = samp[j][k];
      return std::abs(v) <= vs.g_tol ? 0 : (v > 0 ? 1 : -1);
    };

    int j = 0;
    while (j < nt) {
      int sa = sgn(j);
      if (sa == 0) {
        ++j;
        continue;
      }
      // Advance across a possible tolerance-zero run to the next strict sign.
      int j2 = j + 1;
      while (j2 <= nt && sgn(j2) == 0) ++j2;
      if (j2 > nt) break;
      int sb = sgn(j2);
      if (sa * sb < 0) {
        auto r = refine_root(fk, dfk, ts[j], ts[j2], samp[j][k], samp[j2][k],
                             1e-14 * (t1 - t0), cfg.tol.f);
        raw.push_back({std::clamp(r.x, t0, t1), k});
      } else if (j2 > j + 1) {
        // Same strict sign around a graze: a tangent touch inside the run.
        double tb = 0, vb = 2 * amax;
        for (int q = j + 1; q < j2; ++q)
          if (std::abs(samp[q][k]) < vb) {
            vb = std::abs(samp[q][k]);
            tb = ts[q];
          }
        raw.push_back({tb, k});
      }
      j = j2;
    }

    // Tangent touches that never dip under the tolerance at a sample: track
    // strict-sign local minima of |g| and push them down by refinement.
    for (int q = 1; q < nt; ++q) {
      double a = std::abs(samp[q - 1][k]), b = std::abs(samp[q][k]),
             c = std::abs(samp[q + 1][k]);
      if (!(b < a && b <= c)) continue;
      if (b <= vs.g_tol || b > 1e4 * vs.g_tol) continue;
      if (sgn(q - 1) * sgn(q + 1) <= 0) continue;  // handled as a crossing
      // Golden-section on |g| over the bracketing samples.
      double lo = ts[q - 1], hi = ts[q + 1];
      const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
      double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
      double v1 = std::abs(fk(x1)), v2 = std::abs(fk(x2));
      for (int it = 0; it < 80 && hi - lo > 1e-13 * (t1 - t0); ++it) {
        if (v1 < v2) {
          hi = x2;
          x2 = x1;
          v2 = v1;
          x1 = hi - gr * (hi - lo);
          v1 = std::abs(fk(x1));
        } else {
          lo = x1;
          x1 = x2;
          v1 = v2;
          x2 = lo + gr * (hi - lo);
          v2 = std::abs(fk(x2));
        }
      }
      double tm = 0.5 * (lo + hi);
      if (std::abs(fk(tm)) <= vs.g_tol) raw.push_back({tm, k});
    }
  }

  std::sort(raw.begin(), raw.end(),
            [](const RawRoot& a, const RawRoot& b) { return a.t < b.t; });
  const double span = t1 - t0;
  const double sep_min = span / (8.0 * nt);
  for (size_t i = 0; i < raw.size(); ++i) {
    if (!vs.roots.empty()) {
      double dt = raw[i].t - vs.roots.back();
      if (dt <= 1e-12 * span) continue;  // one event seen by two generators
      if (dt < sep_min)
        throw RootClusterTooDense(
            "vertex scan: grazing events at t=" + std::to_string(vs.roots.back()) +
            " and t=" + std::to_string(raw[i].t) + " are closer than the scan step");
    }
    vs.roots.push_back(raw[i].t);
    vs.root_gen.push_back(raw[i].gen);
  }

  std::vector<double> bounds;
  bounds.push_back(t0);
  for (double r : vs.roots) bounds.push_back(r);
  bounds.push_back(t1);
  for (size_t i = 0; i + 1 < bounds.size(); ++i) {
    VertexArc arc;
    arc.t_lo = bounds[i];
    arc.t_hi = bounds[i + 1];
    arc.cause_lo = i == 0 ? -1 : vs.root_gen[i - 1];
    arc.cause_hi = i + 2 == bounds.size() ? -1 : vs.root_gen[i];
    double tm = 0.5 * (arc.t_lo + arc.t_hi);
    MotionSample m = traj.eval(tm);
    Vec3 vel = m.dA * P + m.db;
    int smin = 1, smax = -1;
    for (int k = 0; k < 3; ++k) {
      double v = dot(m.A * vs.normals[k], vel);
      arc.sign[k] = std::abs(v) <= vs.g_tol ? 0 : (v > 0 ? 1 : -1);
      smin = std::min(smin, arc.sign[k]);
      smax = std::max(smax, arc.sign[k]);
    }
    arc.contact = smin <= 0 && smax >= 0;
    arc.pairs = active_pairs(arc.sign);
    vs.arcs.push_back(arc);
  }
  return vs;
}

}  // namespace sweepkernel
