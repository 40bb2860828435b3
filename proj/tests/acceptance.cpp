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

// Acceptance suite: eight end-to-end criteria, each printed as one PASS or
// FAIL line with its wall time. Tolerances are pinned here, not read from
// configuration, so a regression cannot loosen them silently.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "sweepkernel/errors.hpp"
#include "sweepkernel/funnel.hpp"
#include "sweepkernel/oracle.hpp"
#include "sweepkernel/sweep.hpp"

namespace sweepkernel {
namespace {

constexpr double kPi = 3.14159265358979323846;

int edge_near(const SolidBrep& s, const Vec3& mid) {
  for (const auto& e : s.edges) {
    Vec3 p = s.edge_point(e.id, 0.5 * (e.s0 + e.s1));
    if (norm(p - mid) < 1e-9) return e.id;
  }
  return -1;
}

int vertex_near(const SolidBrep& s, const Vec3& p) {
  for (const auto& v : s.vertices)
    if (norm(v.point - p) < 1e-9) return v.id;
  return -1;
}

Trajectory translation_path(const std::vector<Vec3>& b) {
  std::vector<double> times;
  for (size_t i = 0; i < b.size(); ++i)
    times.push_back(double(i) / double(b.size() - 1));
  std::vector<Quat> q(b.size(), Quat{1, 0, 0, 0});
  return Trajectory::keyframed(times, q, b);
}

// The sweep fixtures: every input stays in the accepted class and the
// sweep is simple, so the full pipeline must close a shell on each.
struct SweepFixture {
  std::string name;
  SolidBrep solid;
  Trajectory traj;
  SweptBrep swept;
  double seconds = 0;
  std::string error;  // sweep threw; criteria touching it report this
};

std::vector<SweepFixture> run_sweeps(const Config& cfg) {
  Vec3 dir = normalized({2, 1, 0.5});
  std::vector<SweepFixture> fx;
  fx.push_back({"rotating-cube", fixtures::box({1, 1, 0}, {2, 2, 1}),
                Trajectory::screw({0, 0, 0}, UnitVec3::of({0, 0, 1}), kPi / 2,
                                  0, 0, 1),
                {}, 0, ""});
  fx.push_back({"translated-ball", fixtures::ball({0, 0, 0}, 1),
                Trajectory::screw({0, 0, 0}, UnitVec3::of(dir), 0, 2, 0, 1),
                {}, 0, ""});
  fx.push_back({"translated-box", fixtures::box({0, 0, 0}, {1, 1, 1}),
                Trajectory::screw({0, 0, 0}, UnitVec3::of({1, 0, 0}), 0, 2, 0,
                                  1),
                {}, 0, ""});
  fx.push_back({"screwed-cube", fixtures::box({1, 1, 0}, {2, 2, 1}),
                Trajectory::screw({0, 0, 0}, UnitVec3::of({0, 0, 1}), kPi / 2,
                                  1, 0, 1),
                {}, 0, ""});
  for (auto& f : fx) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      f.swept = sweep(f.solid, f.traj, cfg);
    } catch (const std::exception& e) {
      f.error = e.what();
    }
    f.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
  }
  return fx;
}

// Each criterion returns an empty string on pass, a reason on fail.

// 1. The face generated by the vertical sharp edge at distance sqrt(2)
// from the z rotation axis lies on the analytic cylinder: points within
// 1e-6, outward normals within 1e-6 radians of the radial line, and the
// blend weight dead center at 1/2 +- 1e-9 across the funnel.
std::string criterion_cylinder(const SweepFixture& f, const Config& cfg) {
  if (!f.error.empty()) return "sweep failed: " + f.error;
  const double r = std::sqrt(2.0);
  int gen = edge_near(f.solid, {1, 1, 0.5});
  if (gen < 0) return "inner edge not found";

  int checked = 0;
  double worst_r = 0, worst_ang = 0;
  for (const SweptFace& face : f.swept.faces) {
    if (face.kind != SweptFaceKind::edge_swept || face.generator.id != gen)
      continue;
    for (size_t i = 0; i < face.mesh_pts.size(); ++i) {
      const Vec3& p = face.mesh_pts[i];
      worst_r = std::max(worst_r, std::abs(std::hypot(p.x, p.y) - r));
      Vec3 radial = normalized({p.x, p.y, 0});
      const Vec3& n = face.mesh_normals[i];
      // The band is concave from outside; outward points down the radius.
      double ang = std::atan2(norm(cross(n, radial)), -dot(n, radial));
      worst_ang = std::max(worst_ang, ang);
      ++checked;
    }
  }
  if (checked == 0) return "no face generated by the inner edge";
  if (worst_r > 1e-6)
    return "cylinder deviation " + std::to_string(worst_r);
  if (worst_ang > 1e-6)
    return "normal off radial by " + std::to_string(worst_ang) + " rad";

  EdgeFunnel fn = compute_edge_funnel(f.solid, gen, f.traj, cfg);
  double worst_alpha = 0;
  int alphas = 0;
  auto probe = [&](double s, double t) {
    worst_alpha = std::max(
        worst_alpha,
        std::abs(funnel_alpha(f.solid, gen, s, f.traj.eval(t)) - 0.5));
    ++alphas;
  };
  for (const auto& st : fn.region.tri_pts) probe(st[0], st[1]);
  if (fn.full)
    for (int i = 0; i <= 32; ++i)
      for (int j = 0; j <= 32; ++j)
        probe(fn.s0 + (fn.s1 - fn.s0) * i / 32.0,
              fn.t0 + (fn.t1 - fn.t0) * j / 32.0);
  if (alphas == 0) return "no funnel samples";
  if (worst_alpha > 1e-9)
    return "blend weight off center by " + std::to_string(worst_alpha);
  return "";
}

// 2. Unit sphere translated by 2: two caps and one cylinder, tessellation
// on the analytic capsule within 1e-5, and the start cap exactly the rear
// hemisphere with its rim circle within 1e-6.
std::string criterion_capsule(const SweepFixture& f) {
  if (!f.error.empty()) return "sweep failed: " + f.error;
  Vec3 d = normalized({2, 1, 0.5});
  Vec3 c1 = 2.0 * d;

  int caps0 = count_face_groups(f.swept, SweptFaceKind::cap_start);
  int caps1 = count_face_groups(f.swept, SweptFaceKind::cap_end);
  int tube = count_face_groups(f.swept, SweptFaceKind::face_swept);
  for (const SweptFace& face : f.swept.faces)
    if (face.kind == SweptFaceKind::edge_swept ||
        face.kind == SweptFaceKind::slide)
      return "unexpected face kind in capsule output";
  if (caps0 != 1 || caps1 != 1 || tube != 1) {
    std::ostringstream os;
    os << "face groups " << caps0 << "+" << caps1 << " caps, " << tube
       << " tube";
    return os.str();
  }

  auto capsule_sdf = [&](const Vec3& p) {
    double h = std::clamp(dot(p, d), 0.0, 2.0);
    return dist(p, h * d) - 1.0;
  };
  double worst = 0;
  std::vector<Vec3> verts;
  for (const SweptFace& face : f.swept.faces)
    for (const Vec3& p : face.mesh_pts) {
      worst = std::max(worst, std::abs(capsule_sdf(p)));
      verts.push_back(p);
    }
  if (worst > 1e-5)
    return "tessellation off the capsule by " + std::to_string(worst);

  // Coverage direction of the Hausdorff bound at the sampling scale of the
  // default grids: every analytic patch must have a tessellation vertex
  // within one grid cell.
  Vec3 u = normalized(cross(d, Vec3{0, 0, 1}));
  Vec3 v = cross(d, u);
  const double cell = 2 * kPi / 32 * 1.5;
  for (int i = 0; i < 24; ++i) {
    double phi = 2 * kPi * i / 24;
    Vec3 ring = std::cos(phi) * u + std::sin(phi) * v;
    std::vector<Vec3> targets = {
        ring, c1 + ring, 0.7 * d + ring, 1.6 * d + ring,
        -d,   c1 + d,    normalized(ring - d), c1 + normalized(ring + d)};
    for (const Vec3& q : targets) {
      double best = 1e30;
      for (const Vec3& p : verts) best = std::min(best, dist(p, q));
      if (best > cell) {
        std::ostringstream os;
        os << "capsule point (" << q.x << ", " << q.y << ", " << q.z
           << ") uncovered, nearest vertex " << best;
        return os.str();
      }
    }
  }

  // Start cap = hemisphere <N, v> <= 0 around the initial center.
  double worst_side = -1e30;
  for (const SweptFace& face : f.swept.faces) {
    if (face.kind != SweptFaceKind::cap_start) continue;
    for (const Vec3& p : face.mesh_pts)
      worst_side = std::max(worst_side, dot(p, d));
  }
  if (worst_side > 1e-6)
    return "start cap crosses the equator by " + std::to_string(worst_side);

  // Its rim: every edge between a cap piece and the tube lies on the great
  // circle <N, v> = 0 of the start or end sphere.
  double worst_rim = 0;
  for (const SweptEdge& e : f.swept.edges) {
    if (e.coedges[0] < 0 || e.coedges[1] < 0) continue;
    SweptFaceKind ka = f.swept.faces[f.swept.coedges[e.coedges[0]].face].kind;
    SweptFaceKind kb = f.swept.faces[f.swept.coedges[e.coedges[1]].face].kind;
    bool start_rim = (ka == SweptFaceKind::cap_start &&
                      kb == SweptFaceKind::face_swept) ||
                     (kb == SweptFaceKind::cap_start &&
                      ka == SweptFaceKind::face_swept);
    bool end_rim =
        (ka == SweptFaceKind::cap_end && kb == SweptFaceKind::face_swept) ||
        (kb == SweptFaceKind::cap_end && ka == SweptFaceKind::face_swept);
    if (!start_rim && !end_rim) continue;
    Vec3 center = start_rim ? Vec3{0, 0, 0} : c1;
    for (const Vec3& p : e.pts) {
      worst_rim = std::max(worst_rim, std::abs(dot(p - center, d)));
      worst_rim = std::max(worst_rim, std::abs(dist(p, center) - 1.0));
    }
  }
  if (worst_rim > 1e-6)
    return "rim circle off by " + std::to_string(worst_rim);
  return "";
}

// 3. On every sweep fixture, 1000 tessellation samples classify as
// boundary through the inverse-trajectory oracle: at least 99% within
// margin 1e-4, none interior past -1e-3.
std::string criterion_oracle(const std::vector<SweepFixture>& fx,
                             const Config& cfg) {
  std::ostringstream fail;
  for (const SweepFixture& f : fx) {
    if (!f.error.empty()) return f.name + " sweep failed: " + f.error;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<const Vec3*> pool;
    for (const SweptFace& face : f.swept.faces)
      for (const Vec3& p : face.mesh_pts) pool.push_back(&p);
    if (pool.empty()) return f.name + ": empty tessellation";

    std::mt19937 rng(20260822);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    int off = 0, interior = 0;
    for (int i = 0; i < 1000; ++i) {
      PmcResult r = pmc(f.solid, f.traj, *pool[pick(rng)], cfg);
      if (std::abs(r.margin) > 1e-4) ++off;
      if (r.margin < -1e-3) ++interior;
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (off > 10)
      fail << f.name << ": " << off << "/1000 samples off boundary; ";
    if (interior > 0)
      fail << f.name << ": " << interior << " samples interior; ";
    if (secs > 60)
      fail << f.name << ": classification took " << secs << " s; ";
  }
  return fail.str();
}

// 4. Every sweep fixture closes its shell: all co-edges partnered, and the
// generator adjacency condition holds with zero violations.
std::string criterion_shell(const std::vector<SweepFixture>& fx) {
  std::ostringstream fail;
  for (const SweepFixture& f : fx) {
    if (!f.error.empty()) return f.name + " sweep failed: " + f.error;
    for (const SweptEdge& e : f.swept.edges) {
      if (e.coedges[0] < 0 || e.coedges[1] < 0) {
        fail << f.name << ": edge " << e.id << " unpartnered; ";
        continue;
      }
      const SweptCoedge& a = f.swept.coedges[e.coedges[0]];
      const SweptCoedge& b = f.swept.coedges[e.coedges[1]];
      if (a.sense == b.sense || a.loop < 0 || b.loop < 0)
        fail << f.name << ": edge " << e.id << " co-edges inconsistent; ";
    }
    int violations = 0;
    for (const SweptEdge& e : f.swept.edges) {
      if (e.coedges[0] < 0 || e.coedges[1] < 0) continue;
      GeneratorRef ga =
          f.swept.faces[f.swept.coedges[e.coedges[0]].face].generator;
      GeneratorRef gb =
          f.swept.faces[f.swept.coedges[e.coedges[1]].face].generator;
      if (!f.solid.entities_touch(ga.kind, ga.id, gb.kind, gb.id))
        ++violations;
    }
    if (violations > 0)
      fail << f.name << ": " << violations << " adjacency violations; ";
    if (f.swept.report.adjacency_violations != 0)
      fail << f.name << ": report counts "
           << f.swept.report.adjacency_violations << " violations; ";
  }
  return fail.str();
}

// 5. Local self-intersection stays clear on 100 random interior blend
// samples per fixture that has a usable sharp-edge funnel, and flags the
// smooth-feature counterexample, so the check is not vacuous.
std::string criterion_lsi(const std::vector<SweepFixture>& fx,
                          const Config& cfg) {
  std::ostringstream fail;
  std::mt19937 rng(20260822);
  std::uniform_real_distribution<double> unit(0, 1);
  int fixtures_with_funnels = 0;
  for (const SweepFixture& f : fx) {
    if (!f.error.empty()) return f.name + " sweep failed: " + f.error;
    struct Sample {
      int edge;
      double s, t;
    };
    std::vector<const EdgeFunnel*> usable;
    std::vector<EdgeFunnel> funnels;
    funnels.reserve(f.solid.edges.size());
    for (const Edge& e : f.solid.edges) {
      if (!e.sharp) continue;
      funnels.push_back(compute_edge_funnel(f.solid, e.id, f.traj, cfg));
      const EdgeFunnel& fn = funnels.back();
      if (!fn.empty && !fn.degenerate() && !fn.region.tris.empty())
        usable.push_back(&funnels.back());
    }
    if (usable.empty()) continue;
    ++fixtures_with_funnels;

    int free_count = 0;
    for (int i = 0; i < 100; ++i) {
      const EdgeFunnel& fn = *usable[i % usable.size()];
      const auto& tri = fn.region.tris[rng() % fn.region.tris.size()];
      double w0 = unit(rng), w1 = unit(rng);
      if (w0 + w1 > 1) {
        w0 = 1 - w0;
        w1 = 1 - w1;
      }
      // Pull toward the centroid so the sample stays strictly interior.
      double b0 = 1.0 / 3 + 0.8 * (w0 - 1.0 / 3);
      double b1 = 1.0 / 3 + 0.8 * (w1 - 1.0 / 3);
      double b2 = 1 - b0 - b1;
      const auto& p0 = fn.region.tri_pts[tri[0]];
      const auto& p1 = fn.region.tri_pts[tri[1]];
      const auto& p2 = fn.region.tri_pts[tri[2]];
      double s = b0 * p0[0] + b1 * p1[0] + b2 * p2[0];
      double t = b0 * p0[1] + b1 * p1[1] + b2 * p2[1];
      Vec3 body = f.solid.edge_point(fn.edge, s);
      LsiResult r = lsi_check(f.solid, f.traj, body, t, 1e-2, 64, cfg);
      if (r.verdict == LsiVerdict::free) ++free_count;
    }
    if (free_count != 100)
      fail << f.name << ": " << (100 - free_count)
           << "/100 blend samples flagged occluded; ";
  }
  if (fixtures_with_funnels == 0)
    fail << "no fixture offered a usable funnel; ";

  // Counterexample: a ball orbiting a full turn about a nearby axis
  // occludes its inner contact point.
  SolidBrep ball = fixtures::ball({0.5, 0, 0}, 1.0);
  Trajectory orbit = Trajectory::screw({0, 0, 0}, UnitVec3::of({0, 0, 1}),
                                       2 * kPi, 0, 0, 1);
  LsiResult r = lsi_check(ball, orbit, {-0.5, 0, 0}, 0.5, 1e-2, 64, cfg);
  if (r.verdict != LsiVerdict::occluded)
    fail << "counterexample not flagged (depth " << r.depth << "); ";
  return fail.str();
}

// 6. The engineered tangency fixture reports exactly one singular point
// within 1e-6 of the constructed pinch; the rotating cube reports none.
std::string criterion_singularity(const SweepFixture& rot_cube,
                                  const Config& cfg) {
  SolidBrep lens = fixtures::lens(1.0, 0.5);
  auto path = [](double t) {
    double d = t - 0.5;
    return Vec3{0.5 * d * d, t, d * d};
  };
  Trajectory traj = translation_path(
      {path(0), path(0.25), path(0.5), path(0.75), path(1)});

  int e = -1;
  for (const auto& ed : lens.edges) {
    if (!ed.sharp || ed.s0 > 0 || ed.s1 < 0) continue;
    Vec3 p = lens.edge_point(ed.id, 0.0);
    if (std::abs(p.y) < 1e-9 && p.x > 0) e = ed.id;
  }
  if (e < 0) return "lens equator edge not found";

  EdgeFunnel fn = compute_edge_funnel(lens, e, traj, cfg);
  if (fn.singular.size() != 1)
    return "expected one singular point, got " +
           std::to_string(fn.singular.size());
  double ds = std::abs(fn.singular[0].s - 0.0);
  double dt = std::abs(fn.singular[0].t - 0.5);
  if (ds > 1e-6 || dt > 1e-6) {
    std::ostringstream os;
    os << "singular point off by (" << ds << ", " << dt << ")";
    return os.str();
  }

  if (!rot_cube.error.empty())
    return "sweep failed: " + rot_cube.error;
  size_t spurious = 0;
  for (const SweptFace& face : rot_cube.swept.faces)
    spurious += face.singular.size();
  if (spurious != 0)
    return "rotating cube reports " + std::to_string(spurious) +
           " singular points";
  return "";
}

// 7. The engineered single-crossing corner recovers its constructed root
// within 1e-8 and splits the interval into two arcs with the endpoint
// cause pattern (interval start, generator root, interval end).
std::string criterion_vertex(const Config& cfg) {
  SolidBrep s = fixtures::box({1, 1, 0}, {2, 2, 1});
  auto path = [](double t) {
    double d = t - 0.5;
    return Vec3{t, 0.5 * t, -0.5 * d * d};
  };
  Trajectory traj = translation_path(
      {path(0), path(0.25), path(0.5), path(0.75), path(1)});

  VertexScan vs = scan_vertex(s, vertex_near(s, {1, 1, 0}), traj, cfg);
  int gz = -1;
  for (int k = 0; k < 3; ++k)
    if (s.faces[vs.faces[k]].name == "z-") gz = k;
  if (gz < 0) return "z- generator not identified";

  if (vs.roots.size() != 1)
    return "expected one root, got " + std::to_string(vs.roots.size());
  if (std::abs(vs.roots[0] - 0.5) > 1e-8)
    return "root off by " + std::to_string(std::abs(vs.roots[0] - 0.5));
  if (vs.root_gen[0] != gz) return "root attributed to the wrong generator";
  if (vs.arcs.size() != 2)
    return "expected two arcs, got " + std::to_string(vs.arcs.size());
  const VertexArc& a0 = vs.arcs[0];
  const VertexArc& a1 = vs.arcs[1];
  if (a0.cause_lo != -1 || a0.cause_hi != gz || a1.cause_lo != gz ||
      a1.cause_hi != -1)
    return "endpoint causes do not follow start/root/end";
  return "";
}

// 8. Desk-scale runtime: each fixture (all well under 25 boundary
// entities) completes the full sweep in under 120 s on one core at the
// default grids.
std::string criterion_scale(const std::vector<SweepFixture>& fx) {
  std::ostringstream fail;
  for (const SweepFixture& f : fx) {
    if (!f.error.empty()) return f.name + " sweep failed: " + f.error;
    size_t entities = f.solid.faces.size() + f.solid.edges.size();
    if (entities > 25) {
      fail << f.name << ": " << entities << " entities out of scope; ";
      continue;
    }
    if (f.seconds > 120)
      fail << f.name << ": sweep took " << f.seconds << " s; ";
  }
  return fail.str();
}

}  // namespace
}  // namespace sweepkernel

int main() {
  using namespace sweepkernel;
  Config cfg;

  auto wall = std::chrono::steady_clock::now();
  std::vector<SweepFixture> fx = run_sweeps(cfg);

  struct Line {
    int id;
    const char* label;
    double limit;  // seconds; 0 = already counted inside
    std::function<std::string()> run;
    double extra = 0;  // pre-computed seconds charged to this line
  };
  double fixture_secs = 0;
  for (const auto& f : fx) fixture_secs = std::max(fixture_secs, f.seconds);

  std::vector<Line> lines = {
      {1, "blend band on the analytic cylinder", 5,
       [&] { return criterion_cylinder(fx[0], cfg); }, fx[0].seconds},
      {2, "translated sphere closes the analytic capsule", 5,
       [&] { return criterion_capsule(fx[1]); }, fx[1].seconds},
      {3, "oracle classifies tessellation samples as boundary", 60 * 4,
       [&] { return criterion_oracle(fx, cfg); }},
      {4, "closed shells with generator adjacency", 0,
       [&] { return criterion_shell(fx); }},
      {5, "local self-intersection clears blends, flags the orbit", 0,
       [&] { return criterion_lsi(fx, cfg); }},
      {6, "tangency pinch found once, clean fixture clean", 0,
       [&] { return criterion_singularity(fx[0], cfg); }},
      {7, "corner scan recovers the constructed crossing", 0,
       [&] { return criterion_vertex(cfg); }},
      {8, "desk-scale sweeps complete in time", 120,
       [&] { return criterion_scale(fx); }, fixture_secs},
  };

  int failed = 0;
  for (const Line& line : lines) {
    auto t0 = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = line.run();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count() +
        line.extra;
    if (why.empty() && line.limit > 0 && secs > line.limit) {
      std::ostringstream os;
      os << "over time limit " << line.limit << " s";
      why = os.str();
    }
    if (why.empty()) {
      std::printf("PASS  %d  %-52s (%.1f s)\n", line.id, line.label, secs);
    } else {
      std::printf("FAIL  %d  %-52s (%.1f s): %s\n", line.id, line.label, secs,
                  why.c_str());
      ++failed;
    }
  }

  double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall)
          .count();
  std::printf("%d/8 criteria passed in %.1f s\n", 8 - failed, total);
  return failed == 0 ? 0 : 1;
}
