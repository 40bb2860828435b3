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

#include "sweepkernel/brep.hpp"
#include "sweepkernel/motion.hpp"

namespace sweepkernel::fixtures {

// Axis-aligned box, all edges sharp, all vertices sharp corners.
SolidBrep box(const Vec3& lo, const Vec3& hi);

// Cylinder of radius r along z from z0 to z1 with tangent spherical caps.
// Entirely smooth; closed charts are split into half bands so every chart
// boundary that matters carries a real edge.
SolidBrep capsule(double r, double z0, double z1);

// Intersection of the balls of radius r centered at (0,0,-d) and (0,0,+d):
// two spherical caps meeting in a sharp circle of radius sqrt(r^2-d^2) in
// the z=0 plane, split into two arcs at (0,+-rho,0).
SolidBrep lens(double r, double d);

// Smooth ball from two half-band charts.
SolidBrep ball(const Vec3& center, double r);

// L-shaped prism: outer square [0,2]^2 minus the quadrant [1,2]^2, extruded
// over z in [0,1]. Deliberately outside the accepted class: the re-entrant
// vertical edge is concave and its end vertices join four faces.
SolidBrep l_prism();

// Square pyramid. The apex is a sharp vertex with four incident faces, so
// validation must reject it. Slant-face charts are rectangles larger than
// the triangular faces; good enough for validation, never swept.
SolidBrep pyramid();

// Unit-square block with a Bezier top whose interior control points are
// raised by `rise`; the patch rim stays straight so the sides are planes.
SolidBrep ridge_block(double rise);

// Face lookup by fixture name; fails the test when absent.
int face_named(const SolidBrep& s, const std::string& name);

}  // namespace sweepkernel::fixtures
