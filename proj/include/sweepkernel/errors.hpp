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

#include <stdexcept>
#include <string>

namespace sweepkernel {

// Structural defects of a boundary representation: dangling references,
// open shells, mismatched coedges. The input is not a legal solid at all.
struct MalformedBrep : std::runtime_error {
  explicit MalformedBrep(const std::string& msg) : std::runtime_error(msg) {}
};

// The input is a legal solid but outside the assumptions this kernel
// accepts: concave sharp edges, sharp vertices with more than three faces,
// degenerate general-position failures.
struct AssumptionViolation : std::runtime_error {
  explicit AssumptionViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// Trajectory evaluated outside its parameter interval.
struct OutOfInterval : std::runtime_error {
  explicit OutOfInterval(const std::string& msg) : std::runtime_error(msg) {}
};

// An edge whose contact condition holds on a 2-D parameter region instead of
// a curve; the edge slides tangentially and generates no face.
struct DegenerateStrip : std::runtime_error {
  explicit DegenerateStrip(const std::string& msg) : std::runtime_error(msg) {}
};

// Roots of a scalar function clustered closer than the resolvable spacing.
struct RootClusterTooDense : std::runtime_error {
  explicit RootClusterTooDense(const std::string& msg) : std::runtime_error(msg) {}
};

// The sampling heuristic found evidence that distinct curves of contact
// intersect or that contact points are occluded by the solid at other times.
struct NotSimpleSweep : std::runtime_error {
  explicit NotSimpleSweep(const std::string& msg) : std::runtime_error(msg) {}
};

// Every orientation probe along a boundary curve landed on a rank-deficient
// chart point, so the co-edge direction could not be decided.
struct SingularSample : std::runtime_error {
  explicit SingularSample(const std::string& msg) : std::runtime_error(msg) {}
};

// A track curve whose tangent vanishes over the probe window (zero-velocity
// instant); its co-edge direction is undefined.
struct DegenerateTangent : std::runtime_error {
  explicit DegenerateTangent(const std::string& msg) : std::runtime_error(msg) {}
};

// A boundary co-edge of the assembled shell found no geometric partner.
struct UnmatchedCoedge : std::runtime_error {
  explicit UnmatchedCoedge(const std::string& msg) : std::runtime_error(msg) {}
};

// A chain of co-edges failed to close within tolerance.
struct OpenLoop : std::runtime_error {
  explicit OpenLoop(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sweepkernel
