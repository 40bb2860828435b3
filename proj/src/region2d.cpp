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

#include "sweepkernel/region2d.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

namespace sweepkernel {

namespace {

struct Crossing {
  double lambda;
  int field;  // 1 or 2
  double x, y;
};

struct Seg {
  std::array<double, 2> a, b;
  ChainLabel label;
  int cell;
};

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int i) {
    while (p[i] != i) i = p[i] = p[p[i]];
    return i;
  }
  void join(int a, int b) { p[find(a)] = find(b); }
};

struct Event {
  double pos;     // 0..4 around the cell, counter-clockwise from (i, j)
  int rank;       // corners before crossings at equal pos
  double x, y;
  bool crossing;
  int field;
};

// Provenance of one polygon edge.
struct EdgeProv {
  bool chord;
  int side;              // perimeter side when !chord
  int field_a, field_b;  // crossing fields when chord
};

struct Poly {
  std::vector<std::array<double, 2>> pts;
  std::vector<EdgeProv> prov;  // prov[k] covers pts[k] -> pts[(k+1)%n]
};

double shoelace(const std::vector<std::array<double, 2>>& p) {
  double a = 0;
  for (size_t k = 0; k < p.size(); ++k) {
    const auto& u = p[k];
    const auto& v = p[(k + 1) % p.size()];
    a += u[0] * v[1] - v[0] * u[1];
  }
  return 0.5 * a;
}

bool point_in_polys(const std::vector<Poly>& polys, double px, double py) {
  bool in = false;
  for (const Poly& poly : polys) {
    const auto& p = poly.pts;
    for (size_t k = 0; k < p.size(); ++k) {
      const auto& u = p[k];
      const auto& v = p[(k + 1) % p.size()];
      if ((u[1] > py) != (v[1] > py)) {
        double xx = u[0] + (py - u[1]) / (v[1] - u[1]) * (v[0] - u[0]);
        if (xx > px) in = !in;
      }
    }
  }
  return in;
}

class Extractor {
 public:
  Extractor(const FieldGrid& g, const FieldSampler& sampler,
            const CrossRefiner& refiner)
      : g_(g), sampler_(sampler), refiner_(refiner) {}

  Region2D run();

 private:
  double sample(int field, double x, double y) const;
  double refine(int field, double ax, double ay, double bx, double by,
                double fa, double fb) const;
  void edge_crossings(int i0, int j0, int i1, int j1, std::vector<Crossing>* out) const;
  bool edge_has_inside_span(bool in_a, bool in_b, size_t ncross) const {
    return in_a || in_b || ncross >= 2;
  }
  void process_partial_cell(int ci, int cj);
  void emit_full_cell(int ci, int cj);
  std::vector<Poly> build_polys(const std::vector<Event>& evs,
                                const std::vector<int>& pair_of) const;
  void emit_poly(const Poly& poly, int cell);
  void assemble_chains(Region2D* out);

  const FieldGrid& g_;
  const FieldSampler& sampler_;
  const CrossRefiner& refiner_;

  std::vector<std::vector<Crossing>> hcross_, vcross_;  // per grid edge
  std::vector<char> cell_kind_;                         // 0 empty, 1 partial, 2 full
  std::vector<double> cell_area_;
  std::vector<Seg> segs_;
  Region2D out_;
};

double Extractor::sample(int field, double x, double y) const {
  if (sampler_) return sampler_(field, x, y);
  // Bilinear fallback on the node values.
  double fx = (x - g_.x0) / (g_.x1 - g_.x0) * g_.nx;
  double fy = (y - g_.y0) / (g_.y1 - g_.y0) * g_.ny;
  int i = std::clamp(int(std::floor(fx)), 0, g_.nx - 1);
  int j = std::clamp(int(std::floor(fy)), 0, g_.ny - 1);
  double a = fx - i, b = fy - j;
  return (1 - a) * (1 - b) * g_.value(field, i, j) +
         a * (1 - b) * g_.value(field, i + 1, j) +
         (1 - a) * b * g_.value(field, i, j + 1) +
         a * b * g_.value(field, i + 1, j + 1);
}

double Extractor::refine(int field, double ax, double ay, double bx, double by,
                         double fa, double fb) const {
  if (refiner_) return std::clamp(refiner_(field, ax, ay, bx, by, fa, fb), 0.0, 1.0);
  double d = fa - fb;
  return d == 0 ? 0.5 : std::clamp(fa / d, 0.0, 1.0);
}

void Extractor::edge_crossings(int i0, int j0, int i1, int j1,
                               std::vector<Crossing>* out) const {
  for (int field = 1; field <= g_.nfields; ++field) {
    double fa = g_.value(field, i0, j0);
    double fb = g_.value(field, i1, j1);
    if ((fa > 0) == (fb > 0)) continue;
    double ax = g_.x(i0), ay = g_.y(j0), bx = g_.x(i1), by = g_.y(j1);
    double lam = refine(field, ax, ay, bx, by, fa, fb);
    out->push_back({lam, field, ax + lam * (bx - ax), ay + lam * (by - ay)});
  }
  std::sort(out->begin(), out->end(),
            [](const Crossing& a, const Crossing& b) { return a.lambda < b.lambda; });
}

std::vector<Poly> Extractor::build_polys(const std::vector<Event>& evs,
                                         const std::vector<int>& pair_of) const {
  std::vector<Poly> polys;
  const size_t n = evs.size();
  std::vector<char> used(n, 0);
  for (size_t s = 0; s < n; ++s) {
    if (!evs[s].crossing || pair_of[s] >= 0 || used[s]) continue;
    // s is an entry (pair_of maps exits to entries; entries map to -2).
    if (pair_of[s] != -2) continue;
    Poly poly;
    size_t cur = s;
    while (true) {
      used[cur] = 1;
      poly.pts.push_back({evs[cur].x, evs[cur].y});
      size_t k = cur;
      size_t exit_idx;
      while (true) {
        k = (k + 1) % n;
        if (evs[k].crossing) {
          exit_idx = k;
          break;
        }
        poly.prov.push_back({false, std::min(int(std::floor(evs[cur].pos)), 3), 0, 0});
        poly.pts.push_back({evs[k].x, evs[k].y});
        cur = k;
      }
      poly.prov.push_back({false, std::min(int(std::floor(evs[cur].pos)), 3), 0, 0});
      poly.pts.push_back({evs[exit_idx].x, evs[exit_idx].y});
      used[exit_idx] = 1;
      size_t entry = size_t(pair_of[exit_idx]);
      poly.prov.push_back({true, 0, evs[exit_idx].field, evs[entry].field});
      if (entry == s) break;
      cur = entry;
    }
    polys.push_back(std::move(poly));
  }
  return polys;
}

void Extractor::process_partial_cell(int ci, int cj) {
  const int npx = g_.nx + 1;
  auto hc = [&](int i, int j) -> const std::vector<Crossing>& {
    return hcross_[size_t(j) * g_.nx + i];
  };
  auto vc = [&](int i, int j) -> const std::vector<Crossing>& {
    return vcross_[size_t(j) * npx + i];
  };

  std::vector<Event> evs;
  auto corner = [&](double pos, int i, int j) {
    evs.push_back({pos, 0, g_.x(i), g_.y(j), false, 0});
  };
  corner(0, ci, cj);
  for (const Crossing& c : hc(ci, cj)) evs.push_back({c.lambda, 1, c.x, c.y, true, c.field});
  corner(1, ci + 1, cj);
  for (const Crossing& c : vc(ci + 1, cj)) evs.push_back({1 + c.lambda, 1, c.x, c.y, true, c.field});
  corner(2, ci + 1, cj + 1);
  for (const Crossing& c : hc(ci, cj + 1)) evs.push_back({3 - c.lambda, 1, c.x, c.y, true, c.field});
  corner(3, ci, cj + 1);
  for (const Crossing& c : vc(ci, cj)) evs.push_back({4 - c.lambda, 1, c.x, c.y, true, c.field});
  std::stable_sort(evs.begin(), evs.end(), [](const Event& a, const Event& b) {
    return a.pos != b.pos ? a.pos < b.pos : a.rank < b.rank;
  });

  // Walk the perimeter, toggling membership at crossings; classify exits and
  // entries and pair them into chords.
  const size_t n = evs.size();
  std::vector<int> pair_a(n, -1), pair_b(n, -1);
  bool st = g_.node_inside(ci, cj);
  std::vector<char> is_exit(n, 0), is_entry(n, 0);
  size_t m = 0;
  for (size_t k = 0; k < n; ++k) {
    if (!evs[k].crossing) continue;
    ++m;
    st = !st;
    (st ? is_entry : is_exit)[k] = 1;
  }
  if (m == 0) return;  // cannot happen for a partial cell

  auto next_cross = [&](size_t k, int dir) {
    do k = (k + n + dir) % n; while (!evs[k].crossing);
    return k;
  };
  for (size_t k = 0; k < n; ++k) {
    if (!is_exit[k]) continue;
    pair_a[k] = int(next_cross(k, +1));  // crossings alternate, so an entry
    pair_b[k] = int(next_cross(k, -1));
  }
  auto mark_entries = [&](std::vector<int>& pr) {
    for (size_t k = 0; k < n; ++k)
      if (is_entry[k]) pr[k] = -2;
  };
  mark_entries(pair_a);
  mark_entries(pair_b);

  std::vector<Poly> polys;
  if (m == 2) {
    polys = build_polys(evs, pair_a);
  } else {
    // Ambiguous cell: choose the chord set that puts the cell center on the
    // side the fields say it is on.
    double cx = 0.5 * (g_.x(ci) + g_.x(ci + 1));
    double cy = 0.5 * (g_.y(cj) + g_.y(cj + 1));
    bool center_in;
    double s1 = sample(1, cx, cy);
    if (g_.nfields == 1) center_in = s1 <= 0;
    else center_in = (s1 > 0) != (sample(2, cx, cy) > 0);
    polys = build_polys(evs, pair_a);
    if (point_in_polys(polys, cx, cy) != center_in) polys = build_polys(evs, pair_b);
  }
  int cell = cj * g_.nx + ci;
  for (const Poly& p : polys) {
    cell_area_[cell] += shoelace(p.pts);
    emit_poly(p, cell);
  }
}

void Extractor::emit_poly(const Poly& poly, int cell) {
  int ci = cell % g_.nx, cj = cell / g_.nx;
  const size_t n = poly.pts.size();
  for (size_t k = 0; k < n; ++k) {
    const auto& a = poly.pts[k];
    const auto& b = poly.pts[(k + 1) % n];
    if (a == b) continue;
    const EdgeProv& pr = poly.prov[k];
    if (pr.chord) {
      if (pr.field_a == pr.field_b) {
        segs_.push_back({a, b, pr.field_a == 1 ? ChainLabel::field1 : ChainLabel::field2, cell});
      } else {
        // The two zero curves intersect inside this cell; the chord midpoint
        // stands in for the intersection point.
        std::array<double, 2> mid{0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])};
        segs_.push_back({a, mid, pr.field_a == 1 ? ChainLabel::field1 : ChainLabel::field2, cell});
        segs_.push_back({mid, b, pr.field_b == 1 ? ChainLabel::field1 : ChainLabel::field2, cell});
      }
    } else {
      bool on_wall = (pr.side == 0 && cj == 0) || (pr.side == 1 && ci == g_.nx - 1) ||
                     (pr.side == 2 && cj == g_.ny - 1) || (pr.side == 3 && ci == 0);
      if (!on_wall) continue;
      static constexpr ChainLabel kWall[4] = {ChainLabel::wall_ylo, ChainLabel::wall_xhi,
                                              ChainLabel::wall_yhi, ChainLabel::wall_xlo};
      segs_.push_back({a, b, kWall[pr.side], cell});
    }
  }
  // Centroid fan; per-cell polygons are small enough to be star shaped.
  if (n >= 3) {
    std::array<double, 2> c{0, 0};
    for (const auto& p : poly.pts) {
      c[0] += p[0] / n;
      c[1] += p[1] / n;
    }
    int base = int(out_.tri_pts.size());
    out_.tri_pts.push_back(c);
    for (const auto& p : poly.pts) out_.tri_pts.push_back(p);
    for (size_t k = 0; k < n; ++k) {
      out_.tris.push_back({base, base + 1 + int(k), base + 1 + int((k + 1) % n)});
      out_.tri_component.push_back(cell);  // resolved to components later
    }
  }
}

void Extractor::emit_full_cell(int ci, int cj) {
  int cell = cj * g_.nx + ci;
  double xa = g_.x(ci), xb = g_.x(ci + 1), ya = g_.y(cj), yb = g_.y(cj + 1);
  cell_area_[cell] = (xb - xa) * (yb - ya);
  int base = int(out_.tri_pts.size());
  out_.tri_pts.push_back({xa, ya});
  out_.tri_pts.push_back({xb, ya});
  out_.tri_pts.push_back({xb, yb});
  out_.tri_pts.push_back({xa, yb});
  out_.tris.push_back({base, base + 1, base + 2});
  out_.tris.push_back({base, base + 2, base + 3});
  out_.tri_component.push_back(cell);
  out_.tri_component.push_back(cell);
  if (cj == 0) segs_.push_back({{xa, ya}, {xb, ya}, ChainLabel::wall_ylo, cell});
  if (ci == g_.nx - 1) segs_.push_back({{xb, ya}, {xb, yb}, ChainLabel::wall_xhi, cell});
  if (cj == g_.ny - 1) segs_.push_back({{xb, yb}, {xa, yb}, ChainLabel::wall_yhi, cell});
  if (ci == 0) segs_.push_back({{xa, yb}, {xa, ya}, ChainLabel::wall_xlo, cell});
}

void Extractor::assemble_chains(Region2D* out) {
  using Key = std::pair<double, double>;
  std::map<Key, std::vector<int>> from;
  for (int k = 0; k < int(segs_.size()); ++k)
    from[{segs_[k].a[0], segs_[k].a[1]}].push_back(k);

  std::vector<char> used(segs_.size(), 0);
  int loop_id = 0;
  for (size_t s0 = 0; s0 < segs_.size(); ++s0) {
    if (used[s0]) continue;
    std::vector<int> loop;
    int cur = int(s0);
    bool closed = true;
    while (true) {
      used[cur] = 1;
      loop.push_back(cur);
      Key key{segs_[cur].b[0], segs_[cur].b[1]};
      auto it = from.find(key);
      int nxt = -1;
      if (it != from.end())
        for (int cand : it->second)
          if (!used[cand]) {
            nxt = cand;
            break;
          }
      if (nxt < 0) {
        // Back at the start the loop closes; anything else is a pinch left
        // open for robustness.
        closed = segs_[cur].b == segs_[s0].a;
        break;
      }
      cur = nxt;
    }

    // Split the loop wherever the label changes.
    const size_t n = loop.size();
    size_t start = 0;
    bool uniform = true;
    for (size_t k = 0; k < n; ++k) {
      size_t prev = (k + n - 1) % n;
      if (segs_[loop[k]].label != segs_[loop[prev]].label) {
        start = k;
        uniform = false;
        break;
      }
    }
    auto comp_of = [&](int seg) { return segs_[seg].cell; };
    if (uniform) {
      Chain2D ch;
      ch.label = segs_[loop[0]].label;
      ch.closed = closed;
      ch.loop = loop_id;
      ch.component = comp_of(loop[0]);
      ch.pts.push_back(segs_[loop[0]].a);
      for (int k : loop) ch.pts.push_back(segs_[k].b);
      out->chains.push_back(std::move(ch));
    } else {
      size_t k = start;
      size_t done = 0;
      while (done < n) {
        Chain2D ch;
        ch.label = segs_[loop[k]].label;
        ch.closed = false;
        ch.loop = loop_id;
        ch.component = comp_of(loop[k]);
        ch.pts.push_back(segs_[loop[k]].a);
        while (done < n && segs_[loop[k]].label == ch.label) {
          ch.pts.push_back(segs_[loop[k]].b);
          k = (k + 1) % n;
          ++done;
        }
        out->chains.push_back(std::move(ch));
      }
    }
    ++loop_id;
  }
}

Region2D Extractor::run() {
  const int nx = g_.nx, ny = g_.ny, npx = nx + 1;
  hcross_.assign(size_t(nx) * (ny + 1), {});
  vcross_.assign(size_t(npx) * ny, {});
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i < nx; ++i)
      edge_crossings(i, j, i + 1, j, &hcross_[size_t(j) * nx + i]);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i <= nx; ++i)
      edge_crossings(i, j, i, j + 1, &vcross_[size_t(j) * npx + i]);

  cell_kind_.assign(size_t(nx) * ny, 0);
  cell_area_.assign(size_t(nx) * ny, 0.0);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      int in = g_.node_inside(i, j) + g_.node_inside(i + 1, j) +
               g_.node_inside(i, j + 1) + g_.node_inside(i + 1, j + 1);
      size_t ncr = hcross_[size_t(j) * nx + i].size() +
                   hcross_[size_t(j + 1) * nx + i].size() +
                   vcross_[size_t(j) * npx + i].size() +
                   vcross_[size_t(j) * npx + i + 1].size();
      cell_kind_[size_t(j) * nx + i] = ncr > 0 ? 1 : (in == 4 ? 2 : (in == 0 ? 0 : 1));
    }
  }

  UnionFind uf(nx * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      if (i + 1 < nx) {
        const auto& cr = vcross_[size_t(j) * npx + i + 1];
        if (edge_has_inside_span(g_.node_inside(i + 1, j), g_.node_inside(i + 1, j + 1), cr.size()))
          uf.join(j * nx + i, j * nx + i + 1);
      }
      if (j + 1 < ny) {
        const auto& cr = hcross_[size_t(j + 1) * nx + i];
        if (edge_has_inside_span(g_.node_inside(i, j + 1), g_.node_inside(i + 1, j + 1), cr.size()))
          uf.join(j * nx + i, (j + 1) * nx + i);
      }
    }
  }

  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      char k = cell_kind_[size_t(j) * nx + i];
      if (k == 2) emit_full_cell(i, j);
      else if (k == 1) process_partial_cell(i, j);
    }

  // Compact component ids over non-empty cells.
  std::map<int, int> comp_id;
  for (int c = 0; c < nx * ny; ++c)
    if (cell_kind_[c] != 0) {
      int r = uf.find(c);
      if (!comp_id.count(r)) comp_id[r] = int(comp_id.size());
    }
  out_.n_components = int(comp_id.size());
  out_.area.assign(out_.n_components, 0.0);
  for (int c = 0; c < nx * ny; ++c)
    if (cell_kind_[c] != 0) out_.area[comp_id[uf.find(c)]] += cell_area_[c];
  for (int& tc : out_.tri_component) tc = comp_id[uf.find(tc)];
  for (Seg& s : segs_) s.cell = comp_id[uf.find(s.cell)];

  assemble_chains(&out_);
  return std::move(out_);
}

}  // namespace

bool Region2D::full_rectangle() const {
  if (n_components != 1) return false;
  for (const Chain2D& c : chains)
    if (!is_wall(c.label)) return false;
  return true;
}

double Region2D::total_area() const {
  double a = 0;
  for (double v : area) a += v;
  return a;
}

Region2D extract_region(const FieldGrid& grid, const FieldSampler& sampler,
                        const CrossRefiner& refiner) {
  return Extractor(grid, sampler, refiner).run();
}

std::vector<Chain2D> extract_contour(const FieldGrid& grid,
                                     const FieldSampler& sampler,
                                     const CrossRefiner& refiner) {
  Region2D r = extract_region(grid, sampler, refiner);
  std::vector<Chain2D> out;
  for (Chain2D& c : r.chains)
    if (!is_wall(c.label)) out.push_back(std::move(c));
  return out;
}

}  // namespace sweepkernel
