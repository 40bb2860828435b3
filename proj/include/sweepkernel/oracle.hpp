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

#include "sweepkernel/brep.hpp"
#include "sweepkernel/config.hpp"
#include "sweepkernel/motion.hpp"

namespace sweepkernel {

// Signed distance to the solid, negative inside. The closest feature is
// found among face interiors, edges, and vertices; the side comes from the
// feature's outward normal cone, so sharp convex corners classify exactly.
double signed_distance(const SolidBrep& solid, const Vec3& q);

enum class PointClass { inside, outside, boundary };

// Membership of a fixed world point in the swept volume, decided against
// the moving solid: pull the point back through the inverse motion and
// minimize the body-frame signed distance over time.
struct PmcResult {
  PointClass verdict = PointClass::outside;
  double margin = 0;  // min over time of the signed distance
  double t_min = 0;   // time attaining the minimum
};

PmcResult pmc(const SolidBrep& solid, const Trajectory& traj, const Vec3& y,
              const Config& cfg);

// Local self-intersection probe for a contact sample: a contact point is
// occluded when the solid covers it strictly at a nearby time, so the
// sample cannot lie on the swept boundary.
enum class LsiVerdict { free, occluded };

struct LsiResult {
  LsiVerdict verdict = LsiVerdict::free;
  double depth = 0;      // most negative nearby signed distance
  double t_witness = 0;  // time attaining it
};

LsiResult lsi_check(const SolidBrep& solid, const Trajectory& traj,
                    const Vec3& body_point, double t_contact, double delta_t,
                    int nt, const Config& cfg);

}  // namespace sweepkernel
