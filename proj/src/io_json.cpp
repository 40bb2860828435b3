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

#include "sweepkernel/io_json.hpp"

#include <fstream>
#include <stdexcept>
#include <utility>

namespace sweepkernel {
namespace {

using nlohmann::json;

json jvec(const Vec3& v) { return json::array({v.x, v.y, v.z}); }
Vec3 vec(const json& j) { return {j.at(0), j.at(1), j.at(2)}; }

json jquat(const Quat& q) { return json::array({q.w, q.x, q.y, q.z}); }
Quat quat(const json& j) { return {j.at(0), j.at(1), j.at(2), j.at(3)}; }

const char* curve_kind_name(CurveKind k) {
  switch (k) {
    case CurveKind::line: return "line";
    case CurveKind::circular_arc: return "arc";
    case CurveKind::bezier: return "bezier";
  }
  return "line";
}

CurveKind curve_kind(const std::string& s) {
  if (s == "line") return CurveKind::line;
  if (s == "arc") return CurveKind::circular_arc;
  if (s == "bezier") return CurveKind::bezier;
  throw std::runtime_error("unknown curve kind '" + s + "'");
}

const char* surface_kind_name(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::plane: return "plane";
    case SurfaceKind::sphere: return "sphere";
    case SurfaceKind::cylinder: return "cylinder";
    case SurfaceKind::cone: return "cone";
    case SurfaceKind::torus: return "torus";
    case SurfaceKind::bezier_patch: return "bezier";
  }
  return "plane";
}

SurfaceKind surface_kind(const std::string& s) {
  if (s == "plane") return SurfaceKind::plane;
  if (s == "sphere") return SurfaceKind::sphere;
  if (s == "cylinder") return SurfaceKind::cylinder;
  if (s == "cone") return SurfaceKind::cone;
  if (s == "torus") return SurfaceKind::torus;
  if (s == "bezier") return SurfaceKind::bezier_patch;
  throw std::runtime_error("unknown surface kind '" + s + "'");
}

const char* face_kind_name(SweptFaceKind k) {
  switch (k) {
    case SweptFaceKind::edge_swept: return "edge_swept";
    case SweptFaceKind::face_swept: return "face_swept";
    case SweptFaceKind::cap_start: return "cap_start";
    case SweptFaceKind::cap_end: return "cap_end";
    case SweptFaceKind::slide: return "slide";
  }
  return "face_swept";
}

SweptFaceKind face_kind(const std::string& s) {
  if (s == "edge_swept") return SweptFaceKind::edge_swept;
  if (s == "face_swept") return SweptFaceKind::face_swept;
  if (s == "cap_start") return SweptFaceKind::cap_start;
  if (s == "cap_end") return SweptFaceKind::cap_end;
  if (s == "slide") return SweptFaceKind::slide;
  throw std::runtime_error("unknown swept face kind '" + s + "'");
}

json curve_to_json(const Curve3& c) {
  json j;
  j["kind"] = curve_kind_name(c.kind);
  j["domain"] = json::array({c.domain[0], c.domain[1]});
  switch (c.kind) {
    case CurveKind::line:
      j["point"] = jvec(c.point);
      j["dir"] = jvec(c.dir);
      break;
    case CurveKind::circular_arc:
      j["center"] = jvec(c.center);
      j["ax"] = jvec(c.ax);
      j["ay"] = jvec(c.ay);
      j["radius"] = c.radius;
      break;
    case CurveKind::bezier: {
      json ctrl = json::array();
      for (const Vec3& p : c.ctrl) ctrl.push_back(jvec(p));
      j["ctrl"] = std::move(ctrl);
      break;
    }
  }
  return j;
}

Curve3 curve_from_json(const json& j) {
  Curve3 c;
  c.kind = curve_kind(j.at("kind").get<std::string>());
  c.domain = {j.at("domain").at(0), j.at("domain").at(1)};
  switch (c.kind) {
    case CurveKind::line:
      c.point = vec(j.at("point"));
      c.dir = vec(j.at("dir"));
      break;
    case CurveKind::circular_arc:
      c.center = vec(j.at("center"));
      c.ax = vec(j.at("ax"));
      c.ay = vec(j.at("ay"));
      c.radius = j.at("radius");
      break;
    case CurveKind::bezier:
      for (const json& p : j.at("ctrl")) c.ctrl.push_back(vec(p));
      break;
  }
  return c;
}

json surface_to_json(const Surface& s) {
  json j;
  j["kind"] = surface_kind_name(s.kind);
  j["origin"] = jvec(s.origin);
  j["ax"] = jvec(s.ax);
  j["ay"] = jvec(s.ay);
  j["az"] = jvec(s.az);
  j["domain"] = json::array({s.domain[0], s.domain[1], s.domain[2], s.domain[3]});
  switch (s.kind) {
    case SurfaceKind::plane:
      break;
    case SurfaceKind::sphere:
    case SurfaceKind::cylinder:
      j["radius"] = s.radius;
      break;
    case SurfaceKind::cone:
      j["half_angle"] = s.half_angle;
      break;
    case SurfaceKind::torus:
      j["radius"] = s.radius;
      j["radius2"] = s.radius2;
      break;
    case SurfaceKind::bezier_patch: {
      json net = json::array();
      for (const auto& row : s.net) {
        json r = json::array();
        for (const Vec3& p : row) r.push_back(jvec(p));
        net.push_back(std::move(r));
      }
      j["net"] = std::move(net);
      break;
    }
  }
  return j;
}

Surface surface_from_json(const json& j) {
  Surface s;
  s.kind = surface_kind(j.at("kind").get<std::string>());
  s.origin = vec(j.at("origin"));
  s.ax = vec(j.at("ax"));
  s.ay = vec(j.at("ay"));
  s.az = vec(j.at("az"));
  const json& d = j.at("domain");
  s.domain = {d.at(0), d.at(1), d.at(2), d.at(3)};
  switch (s.kind) {
    case SurfaceKind::plane:
      break;
    case SurfaceKind::sphere:
    case SurfaceKind::cylinder:
      s.radius = j.at("radius");
      break;
    case SurfaceKind::cone:
      s.half_angle = j.at("half_angle");
      break;
    case SurfaceKind::torus:
      s.radius = j.at("radius");
      s.radius2 = j.at("radius2");
      break;
    case SurfaceKind::bezier_patch:
      for (const json& row : j.at("net")) {
        std::vector<Vec3> r;
        for (const json& p : row) r.push_back(vec(p));
        s.net.push_back(std::move(r));
      }
      break;
  }
  return s;
}

}  // namespace

json solid_to_json(const SolidBrep& solid) {
  json j;
  j["vertices"] = json::array();
  for (const Vertex& v : solid.vertices)
    j["vertices"].push_back({{"point", jvec(v.point)}, {"sharp", v.sharp}});

  j["curves"] = json::array();
  for (const Curve3& c : solid.curves) j["curves"].push_back(curve_to_json(c));

  j["surfaces"] = json::array();
  for (const Surface& s : solid.surfaces)
    j["surfaces"].push_back(surface_to_json(s));

  j["edges"] = json::array();
  for (const Edge& e : solid.edges)
    j["edges"].push_back({{"curve", e.curve},
                          {"s0", e.s0},
                          {"s1", e.s1},
                          {"start", e.start_vertex},
                          {"end", e.end_vertex},
                          {"sharp", e.sharp}});

  j["faces"] = json::array();
  for (const Face& f : solid.faces) {
    json loops = json::array();
    for (int lid : f.loops) {
      json loop = json::array();
      for (int cid : solid.loops[lid].coedges) {
        const Coedge& c = solid.coedges[cid];
        loop.push_back(json::array({c.edge, c.sense}));
      }
      loops.push_back(std::move(loop));
    }
    j["faces"].push_back({{"surface", f.surface},
                          {"outward", f.outward_flag},
                          {"name", f.name},
                          {"loops", std::move(loops)}});
  }
  return j;
}

SolidBrep solid_from_json(const json& j) {
  BrepBuilder b;
  for (const json& v : j.at("vertices"))
    b.add_vertex(vec(v.at("point")), v.at("sharp").get<bool>());
  for (const json& c : j.at("curves")) b.add_curve(curve_from_json(c));
  for (const json& s : j.at("surfaces")) b.add_surface(surface_from_json(s));
  for (const json& e : j.at("edges"))
    b.add_edge(e.at("curve"), e.at("s0"), e.at("s1"), e.at("start"),
               e.at("end"), e.at("sharp").get<bool>());
  for (const json& f : j.at("faces")) {
    int fid = b.add_face(f.at("surface"), f.at("outward"),
                         f.at("name").get<std::string>());
    for (const json& loop : f.at("loops")) {
      std::vector<std::pair<int, int>> ews;
      for (const json& cw : loop) ews.emplace_back(cw.at(0), cw.at(1));
      b.add_loop(fid, ews);
    }
  }
  return b.finish();
}

json trajectory_to_json(const Trajectory& traj) {
  json j;
  if (traj.kind() == MotionKind::screw) {
    j["kind"] = "screw";
    j["axis_point"] = jvec(traj.axis_point());
    j["axis_dir"] = jvec(traj.axis_dir());
    j["angular_rate"] = traj.angular_rate();
    j["axial_rate"] = traj.axial_rate();
    j["t0"] = traj.t0();
    j["t1"] = traj.t1();
  } else {
    j["kind"] = "keyframed";
    j["times"] = json::array();
    for (double t : traj.knot_times()) j["times"].push_back(t);
    j["rotations"] = json::array();
    for (const Quat& q : traj.knot_rotations())
      j["rotations"].push_back(jquat(q));
    j["translations"] = json::array();
    for (const Vec3& v : traj.knot_translations())
      j["translations"].push_back(jvec(v));
  }
  return j;
}

Trajectory trajectory_from_json(const json& j) {
  std::string kind = j.at("kind");
  if (kind == "screw") {
    return Trajectory::screw(vec(j.at("axis_point")),
                             UnitVec3::checked(vec(j.at("axis_dir")), 1e-9),
                             j.at("angular_rate"), j.at("axial_rate"),
                             j.at("t0"), j.at("t1"));
  }
  if (kind == "keyframed") {
    std::vector<double> times;
    for (const json& t : j.at("times")) times.push_back(t);
    std::vector<Quat> rotations;
    for (const json& q : j.at("rotations")) rotations.push_back(quat(q));
    std::vector<Vec3> translations;
    for (const json& v : j.at("translations")) translations.push_back(vec(v));
    return Trajectory::keyframed(std::move(times), std::move(rotations),
                                 std::move(translations));
  }
  throw std::runtime_error("unknown trajectory kind '" + kind + "'");
}

json swept_to_json(const SweptBrep& swept) {
  json j;
  j["faces"] = json::array();
  for (const SweptFace& f : swept.faces) {
    json mesh;
    mesh["pts"] = json::array();
    for (const Vec3& p : f.mesh_pts) mesh["pts"].push_back(jvec(p));
    mesh["normals"] = json::array();
    for (const Vec3& n : f.mesh_normals) mesh["normals"].push_back(jvec(n));
    mesh["tris"] = json::array();
    for (const auto& t : f.mesh_tris)
      mesh["tris"].push_back(json::array({t[0], t[1], t[2]}));
    mesh["chart"] = json::array();
    for (const auto& c : f.mesh_chart)
      mesh["chart"].push_back(json::array({c[0], c[1], c[2]}));
    json sing = json::array();
    for (const auto& s : f.singular)
      sing.push_back({{"s", s.s}, {"t", s.t}, {"residual", s.residual}});
    j["faces"].push_back({{"id", f.id},
                          {"kind", face_kind_name(f.kind)},
                          {"generator", {{"kind", f.generator.kind},
                                         {"id", f.generator.id}}},
                          {"component", f.component},
                          {"loops", f.loops},
                          {"mesh", std::move(mesh)},
                          {"singular", std::move(sing)},
                          {"name", f.name}});
  }

  j["edges"] = json::array();
  for (const SweptEdge& e : swept.edges) {
    json pts = json::array();
    for (const Vec3& p : e.pts) pts.push_back(jvec(p));
    j["edges"].push_back({{"id", e.id},
                          {"pts", std::move(pts)},
                          {"coedges", json::array({e.coedges[0], e.coedges[1]})},
                          {"start", e.start_vertex},
                          {"end", e.end_vertex}});
  }

  j["coedges"] = json::array();
  for (const SweptCoedge& c : swept.coedges)
    j["coedges"].push_back({{"id", c.id},
                            {"edge", c.edge},
                            {"face", c.face},
                            {"loop", c.loop},
                            {"sense", c.sense}});

  j["loops"] = json::array();
  for (const SweptLoop& l : swept.loops)
    j["loops"].push_back(
        {{"id", l.id}, {"face", l.face}, {"coedges", l.coedges}});

  j["vertices"] = json::array();
  for (const SweptVertex& v : swept.vertices)
    j["vertices"].push_back({{"id", v.id}, {"point", jvec(v.point)}});

  const SweepReport& r = swept.report;
  json adj = json::array();
  for (const AdjacencyRecord& a : r.adjacency)
    adj.push_back({{"edge", a.edge},
                   {"face_a", a.face_a},
                   {"face_b", a.face_b},
                   {"generators_touch", a.generators_touch}});
  j["report"] = {{"n_edge_faces", r.n_edge_faces},
                 {"n_face_faces", r.n_face_faces},
                 {"n_cap_faces", r.n_cap_faces},
                 {"n_slide_faces", r.n_slide_faces},
                 {"warnings", r.warnings},
                 {"adjacency", std::move(adj)},
                 {"adjacency_violations", r.adjacency_violations},
                 {"simplicity_evidence", r.simplicity_evidence},
                 {"max_contact_residual", r.max_contact_residual}};
  return j;
}

SweptBrep swept_from_json(const json& j) {
  SweptBrep out;
  for (const json& jf : j.at("faces")) {
    SweptFace f;
    f.id = jf.at("id");
    f.kind = face_kind(jf.at("kind").get<std::string>());
    f.generator.kind = jf.at("generator").at("kind");
    f.generator.id = jf.at("generator").at("id");
    f.component = jf.at("component");
    f.loops = jf.at("loops").get<std::vector<int>>();
    const json& mesh = jf.at("mesh");
    for (const json& p : mesh.at("pts")) f.mesh_pts.push_back(vec(p));
    for (const json& n : mesh.at("normals")) f.mesh_normals.push_back(vec(n));
    for (const json& t : mesh.at("tris"))
      f.mesh_tris.push_back({t.at(0), t.at(1), t.at(2)});
    for (const json& c : mesh.at("chart"))
      f.mesh_chart.push_back({c.at(0), c.at(1), c.at(2)});
    for (const json& s : jf.at("singular")) {
      EdgeFunnel::Singular sg;
      sg.s = s.at("s");
      sg.t = s.at("t");
      sg.residual = s.at("residual");
      f.singular.push_back(sg);
    }
    f.name = jf.at("name").get<std::string>();
    out.faces.push_back(std::move(f));
  }
  for (const json& je : j.at("edges")) {
    SweptEdge e;
    e.id = je.at("id");
    for (const json& p : je.at("pts")) e.pts.push_back(vec(p));
    e.coedges = {je.at("coedges").at(0), je.at("coedges").at(1)};
    e.start_vertex = je.at("start");
    e.end_vertex = je.at("end");
    out.edges.push_back(std::move(e));
  }
  for (const json& jc : j.at("coedges")) {
    SweptCoedge c;
    c.id = jc.at("id");
    c.edge = jc.at("edge");
    c.face = jc.at("face");
    c.loop = jc.at("loop");
    c.sense = jc.at("sense");
    out.coedges.push_back(c);
  }
  for (const json& jl : j.at("loops")) {
    SweptLoop l;
    l.id = jl.at("id");
    l.face = jl.at("face");
    l.coedges = jl.at("coedges").get<std::vector<int>>();
    out.loops.push_back(std::move(l));
  }
  for (const json& jv : j.at("vertices")) {
    SweptVertex v;
    v.id = jv.at("id");
    v.point = vec(jv.at("point"));
    out.vertices.push_back(v);
  }
  const json& jr = j.at("report");
  SweepReport& r = out.report;
  r.n_edge_faces = jr.at("n_edge_faces");
  r.n_face_faces = jr.at("n_face_faces");
  r.n_cap_faces = jr.at("n_cap_faces");
  r.n_slide_faces = jr.at("n_slide_faces");
  r.warnings = jr.at("warnings").get<std::vector<std::string>>();
  for (const json& a : jr.at("adjacency")) {
    AdjacencyRecord rec;
    rec.edge = a.at("edge");
    rec.face_a = a.at("face_a");
    rec.face_b = a.at("face_b");
    rec.generators_touch = a.at("generators_touch").get<bool>();
    r.adjacency.push_back(rec);
  }
  r.adjacency_violations = jr.at("adjacency_violations");
  r.simplicity_evidence = jr.at("simplicity_evidence").get<std::string>();
  r.max_contact_residual = jr.at("max_contact_residual");
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("parse error in '" + path + "': " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << j.dump(1, '\t') << "\n";
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace sweepkernel
