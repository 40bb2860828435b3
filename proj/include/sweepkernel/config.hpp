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

#include <string>

#include "sweepkernel/parallel.hpp"

namespace sweepkernel {

struct Tolerances {
  double unit = 1e-9;    // unit-vector and rotation orthonormality slack
  double sharp = 1e-6;   // normal deviation separating smooth from sharp
  double g_rel = 1e-9;   // contact dot products, scaled by (1 + |velocity|)
  double f = 1e-9;       // residual target when refining funnel boundaries
  double sing = 1e-8;    // tangency residual for singular points
  double loop = 1e-6;    // co-edge endpoint closure and matching
  double pmc = 1e-5;     // membership classification margin

  double g_abs(double speed) const { return g_rel * (1.0 + speed); }
};

struct GridConfig {
  int face_nu = 32, face_nv = 32, face_nt = 32;  // face funnel prism nodes
  int edge_ns = 128, edge_nt = 128;              // edge funnel prism nodes
  int vertex_nt = 256;                           // vertex interval scan
  int pmc_nt = 256;                              // membership time samples
  int voxel_n = 64;                              // brute-force envelope grid
};

struct Config {
  Tolerances tol;
  GridConfig grid;
  Exec exec = Exec::openmp;
  bool verify_simple = true;
  bool dump_funnels = false;
  std::string dump_dir;
  double merge_tol = 1e-6;   // image distance that joins funnel components
  int mesh_density = 0;      // 0 keeps the funnel grids; >0 scales them
};

}  // namespace sweepkernel
