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

#include <ostream>

#include "sweepkernel/sweep.hpp"

namespace sweepkernel {

// Plain Wavefront dump of the stored face tessellations: v and f records
// only, one vertex block per face, triangles wound counter-clockwise around
// the stored outward normals. density adds that many rounds of midpoint
// subdivision on top of the stored mesh; 0 writes it as is.
void write_obj(std::ostream& out, const SweptBrep& swept, int density = 0);

}  // namespace sweepkernel
