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

// Command line front end. All diagnostics go to standard error; files are
// the only data channel. Exit codes: 0 ok, 1 I/O or malformed input files,
// 2 validation (structural or assumption), 3 sweep not simple, 4 internal
// failure or a failed check.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sweepkernel/errors.hpp"
#include "sweepkernel/io_json.hpp"
#include "sweepkernel/mesh_export.hpp"
#include "sweepkernel/oracle.hpp"
#include "sweepkernel/parallel.hpp"
#include "sweepkernel/sweep.hpp"
#include "sweepkernel/validate.hpp"

namespace {

using namespace sweepkernel;

const char* class_name(PointClass c) {
  switch (c) {
    case PointClass::inside: return "inside";
    case PointClass::outside: return "outside";
    case PointClass::boundary: return "boundary";
  }
  return "outside";
}

void print_report(const SweptBrep& swept) {
  const SweepReport& r = swept.report;
  std::fprintf(stderr,
               "swept %zu faces (%d blend, %d sheet, %d cap, %d slide), "
               "%zu edges, %zu vertices\n",
               swept.faces.size(), r.n_edge_faces, r.n_face_faces,
               r.n_cap_faces, r.n_slide_faces, swept.edges.size(),
               swept.vertices.size());
  std::fprintf(stderr, "adjacency: %zu records, %d violations\n",
               r.adjacency.size(), r.adjacency_violations);
  std::fprintf(stderr, "max contact residual %.3g\n", r.max_contact_residual);
  for (const std::string& w : r.warnings)
    std::fprintf(stderr, "warning: %s\n", w.c_str());
}

// Stride over the output tessellation and classify each sample through the
// inverse-trajectory oracle. Boundary samples may carry grid-level noise;
// anything two orders past the membership tolerance on the inside is a
// genuine residual failure.
int oracle_check(const SolidBrep& solid, const Trajectory& traj,
                 const SweptBrep& swept, const Config& cfg) {
  const double boundary_tol = 10.0 * cfg.tol.pmc;
  const double interior_tol = 100.0 * cfg.tol.pmc;
  int total = 0, off_boundary = 0, interior = 0;
  double worst = 0;
  for (const SweptFace& f : swept.faces) {
    size_t stride = f.mesh_pts.size() / 16 + 1;
    for (size_t i = 0; i < f.mesh_pts.size(); i += stride) {
      PmcResult r = pmc(solid, traj, f.mesh_pts[i], cfg);
      ++total;
      if (std::abs(r.margin) > boundary_tol) ++off_boundary;
      if (r.margin < -interior_tol) ++interior;
      worst = std::max(worst, std::abs(r.margin));
    }
  }
  std::fprintf(stderr, "oracle check: %d samples, worst |margin| %.3g\n",
               total, worst);
  if (interior > 0 || off_boundary > total / 100) {
    std::fprintf(stderr,
                 "oracle check failed: %d samples off boundary, %d interior\n",
                 off_boundary, interior);
    return 4;
  }
  return 0;
}

int run_validate(const std::string& solid_path) {
  SolidBrep solid = solid_from_json(load_json_file(solid_path));
  ValidationReport report = validate_solid(solid, Tolerances{});
  std::fprintf(stderr, "%s\n", report.summary().c_str());
  return report.ok() ? 0 : 2;
}

int run_sweep(const std::string& solid_path, const std::string& traj_path,
              const std::string& out_path, const Config& cfg,
              bool oracle_checks) {
  SolidBrep solid = solid_from_json(load_json_file(solid_path));
  Trajectory traj = trajectory_from_json(load_json_file(traj_path));
  SweptBrep swept = sweep(solid, traj, cfg);
  print_report(swept);
  save_json_file(out_path, swept_to_json(swept));
  std::fprintf(stderr, "wrote %s\n", out_path.c_str());
  if (oracle_checks) return oracle_check(solid, traj, swept, cfg);
  return 0;
}

int run_mesh(const std::string& in_path, const std::string& out_path,
             int density) {
  SweptBrep swept = swept_from_json(load_json_file(in_path));
  std::ofstream out(out_path);
  if (!out)
    throw std::runtime_error("cannot open '" + out_path + "' for writing");
  write_obj(out, swept, density);
  if (!out) throw std::runtime_error("write to '" + out_path + "' failed");
  std::fprintf(stderr, "wrote %s\n", out_path.c_str());
  return 0;
}

int run_classify(const std::string& solid_path, const std::string& traj_path,
                 const std::string& points_path, const std::string& out_path,
                 const Config& cfg) {
  SolidBrep solid = solid_from_json(load_json_file(solid_path));
  Trajectory traj = trajectory_from_json(load_json_file(traj_path));

  std::ifstream in(points_path);
  if (!in)
    throw std::runtime_error("cannot open '" + points_path + "' for reading");
  std::ofstream out(out_path);
  if (!out)
    throw std::runtime_error("cannot open '" + out_path + "' for writing");

  out << "x,y,z,verdict,margin,t_min\n";
  std::string line;
  int row = 0, done = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line[0] == '#') continue;
    Vec3 q;
    if (std::sscanf(line.c_str(), "%lf , %lf , %lf", &q.x, &q.y, &q.z) != 3) {
      // A leading header row is fine; anything later is a broken file.
      if (done == 0) continue;
      throw std::runtime_error("bad point row " + std::to_string(row) +
                               " in '" + points_path + "': " + line);
    }
    PmcResult r = pmc(solid, traj, q, cfg);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%s,%.17g,%.17g\n", q.x,
                  q.y, q.z, class_name(r.verdict), r.margin, r.t_min);
    out << buf;
    ++done;
  }
  if (!out) throw std::runtime_error("write to '" + out_path + "' failed");
  std::fprintf(stderr, "classified %d points\n", done);
  return 0;
}

// The invariant suite over a finished sweep: structural closure, generator
// adjacency, outward orientation against the oracle, contact residual,
// serialization round-trip, and export winding. Any failed line exits 4.
int run_check(const std::string& swept_path, const std::string& solid_path,
              const std::string& traj_path, const Config& cfg) {
  nlohmann::json jswept = load_json_file(swept_path);
  nlohmann::json jsolid = load_json_file(solid_path);
  SweptBrep swept = swept_from_json(jswept);
  SolidBrep solid = solid_from_json(jsolid);
  Trajectory traj = trajectory_from_json(load_json_file(traj_path));

  int failed = 0;
  auto verdict = [&failed](bool ok, const char* name,
                           const std::string& detail) {
    if (ok)
      std::fprintf(stderr, "PASS %s\n", name);
    else {
      std::fprintf(stderr, "FAIL %s: %s\n", name, detail.c_str());
      ++failed;
    }
  };

  ValidationReport vr = validate_solid(solid, cfg.tol);
  verdict(vr.ok(), "solid validates", vr.summary());

  {
    std::ostringstream why;
    bool ok = true;
    for (const SweptEdge& e : swept.edges) {
      if (e.coedges[0] < 0 || e.coedges[1] < 0) {
        why << "edge " << e.id << " unpartnered";
        ok = false;
        break;
      }
      const SweptCoedge& a = swept.coedges[e.coedges[0]];
      const SweptCoedge& b = swept.coedges[e.coedges[1]];
      if (a.sense == b.sense || a.face == b.face || a.loop < 0 || b.loop < 0) {
        why << "edge " << e.id << " co-edges inconsistent";
        ok = false;
        break;
      }
    }
    double worst_gap = 0;
    for (const SweptLoop& l : swept.loops) {
      for (size_t i = 0; ok && i < l.coedges.size(); ++i) {
        const SweptCoedge& c = swept.coedges[l.coedges[i]];
        const SweptCoedge& n =
            swept.coedges[l.coedges[(i + 1) % l.coedges.size()]];
        const auto& cp = swept.edges[c.edge].pts;
        const auto& np = swept.edges[n.edge].pts;
        Vec3 tail = c.sense > 0 ? cp.back() : cp.front();
        Vec3 head = n.sense > 0 ? np.front() : np.back();
        worst_gap = std::max(worst_gap, dist(tail, head));
      }
    }
    if (ok && worst_gap > 10.0 * cfg.tol.loop) {
      why << "loop gap " << worst_gap;
      ok = false;
    }
    int chi = static_cast<int>(swept.vertices.size()) -
              static_cast<int>(swept.edges.size()) +
              static_cast<int>(swept.faces.size());
    if (ok && chi != 2) {
      why << "Euler characteristic " << chi;
      ok = false;
    }
    verdict(ok, "shell closed", why.str());
  }

  {
    int violations = 0;
    for (const SweptEdge& e : swept.edges) {
      if (e.coedges[0] < 0 || e.coedges[1] < 0) continue;
      const GeneratorRef ga =
          swept.faces[swept.coedges[e.coedges[0]].face].generator;
      const GeneratorRef gb =
          swept.faces[swept.coedges[e.coedges[1]].face].generator;
      if (!solid.entities_touch(ga.kind, ga.id, gb.kind, gb.id)) ++violations;
    }
    verdict(violations == 0, "generator adjacency",
            std::to_string(violations) + " violations");
  }

  {
    int bad = 0, probed = 0;
    std::ostringstream why;
    for (const SweptFace& f : swept.faces) {
      if (f.mesh_pts.empty()) continue;
      // Probe the sample nearest the face centroid; rim samples sit next
      // to neighbor faces and their offsets can land on the wrong side.
      Vec3 centroid{};
      for (const Vec3& p : f.mesh_pts) centroid += p;
      centroid = centroid / static_cast<double>(f.mesh_pts.size());
      size_t best = 0;
      for (size_t i = 1; i < f.mesh_pts.size(); ++i)
        if (dist(f.mesh_pts[i], centroid) < dist(f.mesh_pts[best], centroid))
          best = i;
      Vec3 y = f.mesh_pts[best];
      Vec3 n = f.mesh_normals[best];
      double h = 1e-4 * (1.0 + norm(y));
      ++probed;
      if (pmc(solid, traj, y + h * n, cfg).margin <= 0 ||
          pmc(solid, traj, y - h * n, cfg).margin >= 0) {
        ++bad;
        why << " " << f.name;
      }
    }
    verdict(bad == 0, "outward orientation",
            std::to_string(bad) + "/" + std::to_string(probed) +
                " probes inverted:" + why.str());
  }

  verdict(swept.report.max_contact_residual <= 1e3 * cfg.tol.f,
          "contact residual",
          "max " + std::to_string(swept.report.max_contact_residual));

  verdict(swept_to_json(swept) == jswept, "swept round-trip",
          "re-serialization differs from file");
  verdict(solid_to_json(solid) == jsolid, "solid round-trip",
          "re-serialization differs from file");

  {
    std::ostringstream obj;
    write_obj(obj, swept, 0);
    std::vector<Vec3> pts, normals;
    for (const SweptFace& f : swept.faces) {
      pts.insert(pts.end(), f.mesh_pts.begin(), f.mesh_pts.end());
      normals.insert(normals.end(), f.mesh_normals.begin(),
                     f.mesh_normals.end());
    }
    std::istringstream in(obj.str());
    std::string tag;
    long ccw = 0, total = 0, nv = 0;
    while (in >> tag) {
      if (tag == "v") {
        Vec3 p;
        in >> p.x >> p.y >> p.z;
        if (nv >= static_cast<long>(pts.size()) ||
            dist(p, pts[nv]) > 1e-12 * (1.0 + norm(p))) {
          total = -1;
          break;
        }
        ++nv;
      } else if (tag == "f") {
        long a, b, c;
        in >> a >> b >> c;
        Vec3 gn = cross(pts[b - 1] - pts[a - 1], pts[c - 1] - pts[a - 1]);
        if (dot(gn, normals[a - 1] + normals[b - 1] + normals[c - 1]) >= 0)
          ++ccw;
        ++total;
      }
    }
    bool ok = total > 0 && ccw * 1000 >= total * 999;
    verdict(ok, "export winding",
            std::to_string(ccw) + "/" + std::to_string(total) +
                " triangles counter-clockwise");
  }

  return failed == 0 ? 0 : 4;
}

int dispatch(const std::function<int()>& body) {
  try {
    return body();
  } catch (const MalformedBrep& e) {
    std::fprintf(stderr, "error: malformed input: %s\n", e.what());
    return 2;
  } catch (const AssumptionViolation& e) {
    std::fprintf(stderr, "error: assumption violated: %s\n", e.what());
    return 2;
  } catch (const NotSimpleSweep& e) {
    std::fprintf(stderr, "error: sweep is not simple: %s\n", e.what());
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::fprintf(stderr, "error: bad input file: %s\n", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: bad input value: %s\n", e.what());
    return 2;
  } catch (const std::runtime_error& e) {
    // Library failures derive from runtime_error too; the ones above are
    // the input-side cases, the rest are ours.
    if (dynamic_cast<const OutOfInterval*>(&e) ||
        dynamic_cast<const DegenerateStrip*>(&e) ||
        dynamic_cast<const RootClusterTooDense*>(&e) ||
        dynamic_cast<const SingularSample*>(&e) ||
        dynamic_cast<const DegenerateTangent*>(&e) ||
        dynamic_cast<const UnmatchedCoedge*>(&e) ||
        dynamic_cast<const OpenLoop*>(&e)) {
      std::fprintf(stderr, "internal error: %s\n", e.what());
      return 4;
    }
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 4;
  }
}

}  // namespace

int main(int argc, char** argv) {
  set_worker_cap(0);  // respects SWEEPKERNEL_THREADS

  CLI::App app{"sweepkernel: boundary evaluator for swept solids"};
  app.require_subcommand(1);

  Config cfg;
  std::string solid_path, traj_path, out_path, in_path, points_path;
  int density = 0;
  bool oracle_checks = false, serial = false;

  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--tol-g", cfg.tol.g_rel, "contact tolerance, relative")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol-f", cfg.tol.f, "funnel refinement tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol-sing", cfg.tol.sing, "tangency residual tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol-loop", cfg.tol.loop, "loop closure tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol-pmc", cfg.tol.pmc, "membership margin tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--nu", cfg.grid.face_nu, "face chart u samples")
        ->check(CLI::Range(8, 1 << 20));
    sub->add_option("--nv", cfg.grid.face_nv, "face chart v samples")
        ->check(CLI::Range(8, 1 << 20));
    sub->add_option("--nt", cfg.grid.face_nt, "time samples for face prisms")
        ->check(CLI::Range(8, 1 << 20));
    sub->add_option("--ns", cfg.grid.edge_ns, "edge parameter samples")
        ->check(CLI::Range(8, 1 << 20));
    sub->add_option("--pmc-nt", cfg.grid.pmc_nt, "membership time samples")
        ->check(CLI::Range(8, 1 << 20));
  };

  CLI::App* v = app.add_subcommand("validate", "check a solid against the accepted class");
  v->add_option("solid", solid_path, "solid JSON path")->required();

  CLI::App* s = app.add_subcommand("sweep", "compute the swept boundary");
  s->add_option("--solid", solid_path, "solid JSON path")->required();
  s->add_option("--traj", traj_path, "trajectory JSON path")->required();
  s->add_option("--out", out_path, "output swept JSON path")->required();
  add_config(s);
  s->add_flag("--serial", serial, "single-threaded kernels");
  s->add_flag("!--no-verify-simple", cfg.verify_simple,
              "skip the simple-sweep heuristic");
  s->add_flag("--oracle-checks", oracle_checks,
              "classify output samples through the membership oracle");
  s->add_option("--dump-funnels", cfg.dump_dir,
                "write per-entity funnel dumps to this directory");
  s->add_option("--mesh-density", cfg.mesh_density,
                "scale factor on the tessellation grids")
      ->check(CLI::Range(0, 64));
  s->add_option("--merge-tol", cfg.merge_tol,
                "image distance joining funnel components")
      ->check(CLI::PositiveNumber);

  CLI::App* m = app.add_subcommand("mesh", "export a swept boundary as OBJ");
  m->add_option("--in", in_path, "swept JSON path")->required();
  m->add_option("--out", out_path, "output OBJ path")->required();
  m->add_option("--density", density, "midpoint subdivision rounds")
      ->check(CLI::Range(0, 8));

  CLI::App* c = app.add_subcommand("classify", "membership of points in the swept volume");
  c->add_option("--solid", solid_path, "solid JSON path")->required();
  c->add_option("--traj", traj_path, "trajectory JSON path")->required();
  c->add_option("--points", points_path, "input CSV of x,y,z rows")->required();
  c->add_option("--out", out_path, "output verdict CSV path")->required();
  add_config(c);

  CLI::App* k = app.add_subcommand("check", "run the invariant suite on a finished sweep");
  k->add_option("--swept", in_path, "swept JSON path")->required();
  k->add_option("--solid", solid_path, "solid JSON path")->required();
  k->add_option("--traj", traj_path, "trajectory JSON path")->required();
  add_config(k);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, std::cerr, std::cerr);
    return rc == 0 ? 0 : 1;
  }

  if (serial) cfg.exec = Exec::serial;
  if (!cfg.dump_dir.empty()) cfg.dump_funnels = true;

  return dispatch([&]() -> int {
    if (v->parsed()) return run_validate(solid_path);
    if (s->parsed())
      return run_sweep(solid_path, traj_path, out_path, cfg, oracle_checks);
    if (m->parsed()) return run_mesh(in_path, out_path, density);
    if (c->parsed())
      return run_classify(solid_path, traj_path, points_path, out_path, cfg);
    if (k->parsed()) return run_check(in_path, solid_path, traj_path, cfg);
    return 1;
  });
}
