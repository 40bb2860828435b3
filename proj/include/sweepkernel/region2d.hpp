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

#pragma once

#include <array>
#include <functional>
#include <vector>

namespace sweepkernel {

// One or two scalar fields sampled on the nodes of a rectangular cell grid.
// With one field the region is {f1 <= 0}; with two it is the locus where the
// signs of f1 and f2 differ (a value of exactly zero counts as the
// non-positive side). Node index is j * (nx + 1) + i.
struct FieldGrid {
  int nx = 0, ny = 0;  // cell counts; nodes are (nx+1) x (ny+1)
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  int nfields = 1;
  std::vector<double> f1, f2;

  double x(int i) const { return x0 + (x1 - x0) * i / nx; }
  double y(int j) const { return y0 + (y1 - y0) * j / ny; }
  double value(int field, int i, int j) const {
    return (field == 1 ? f1 : f2)[size_t(j) * (nx + 1) + i];
  }
  bool node_inside(int i, int j) const {
    bool a = value(1, i, j) > 0;
    if (nfields == 1) return !a;
    return a != (value(2, i, j) > 0);
  }
  void allocate() {
    f1.assign(size_t(nx + 1) * (ny + 1), 0.0);
    if (nfields == 2) f2.assign(size_t(nx + 1) * (ny + 1), 0.0);
    else f2.clear();
  }
};

// Boundary provenance of a chain: interior zero curve of a field, or a piece
// of the rectangle boundary.
enum class ChainLabel { field1 = 0, field2, wall_xlo, wall_xhi, wall_ylo, wall_yhi };

inline bool is_wall(ChainLabel l) { return l >= ChainLabel::wall_xlo; }

// Directed polyline with the region on its left. Consecutive chains of one
// boundary loop share endpoint coordinates bit-exactly.
struct Chain2D {
  ChainLabel label = ChainLabel::field1;
  bool closed = false;
  int component = 0;
  int loop = 0;  // boundary loops are numbered per extraction
  std::vector<std::array<double, 2>> pts;
};

struct Region2D {
  int n_components = 0;
  std::vector<Chain2D> chains;
  std::vector<double> area;  // per component, parameter-plane area

  // Triangulation of the region, counter-clockwise triangles.
  std::vector<std::array<double, 2>> tri_pts;
  std::vector<std::array<int, 3>> tris;
  std::vector<int> tri_component;

  bool full_rectangle() const;
  double total_area() const;
};

// Refine the zero of a field along the axis-aligned segment from (ax, ay) to
// (bx, by); returns the fraction in [0, 1]. fa, fb are the endpoint values.
// An empty function falls back to the secant estimate.
using CrossRefiner = std::function<double(int field, double ax, double ay,
                                          double bx, double by, double fa,
                                          double fb)>;

// Point evaluation of a field, used to orient ambiguous cells crossed more
// than twice. An empty function falls back to bilinear interpolation.
using FieldSampler = std::function<double(int field, double x, double y)>;

// Marching extraction with per-field crossings, so a cell edge crossed by
// both fields still toggles membership twice. Boundary chains come out
// region-left and split wherever the label changes; chords whose endpoints
// belong to different fields split at their midpoint, which stands in for
// the curve intersection inside the cell.
Region2D extract_region(const FieldGrid& grid, const FieldSampler& sampler,
                        const CrossRefiner& refiner);

// Zero curves of f1 alone (nfields must be 1): the non-wall chains of the
// region {f1 <= 0}, directed with f1 < 0 on the left.
std::vector<Chain2D> extract_contour(const FieldGrid& grid,
                                     const FieldSampler& sampler,
                                     const CrossRefiner& refiner);

}  // namespace sweepkernel
