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
#include <vector>

#include "sweepkernel/brep.hpp"
#include "sweepkernel/config.hpp"

namespace sweepkernel {

enum class ViolationKind {
  malformed,   // structural: dangling ids, open shell, bad loops
  assumption,  // legal brep outside the accepted class
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has_malformed() const;
  bool has_assumption() const;
  std::string summary() const;
};

// Full structural and assumption check. Structural problems are reported as
// malformed; a structurally sound solid outside the accepted class (concave
// sharp edges, sharp vertices with more than three faces, degenerate
// geometry) reports assumption violations.
ValidationReport validate_solid(const SolidBrep& solid, const Tolerances& tol);

enum class EdgeConvexity { convex, concave, smooth };

// Outward normals of the two faces at a point of the edge, plus the tangent.
struct EdgeFrame {
  Vec3 n_left, n_right;  // left = coedge running with increasing parameter
  Vec3 tangent;          // curve derivative, unnormalized
};
EdgeFrame edge_frame(const SolidBrep& solid, int edge, double s);

// Sign of <n_left x n_right, tangent>: positive convex, negative concave,
// within tol.sharp of zero smooth.
EdgeConvexity edge_convexity(const SolidBrep& solid, int edge, double s,
                             const Tolerances& tol);

}  // namespace sweepkernel
