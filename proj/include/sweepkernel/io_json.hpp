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

#include "json.hpp"
#include "sweepkernel/brep.hpp"
#include "sweepkernel/motion.hpp"
#include "sweepkernel/sweep.hpp"

namespace sweepkernel {

// Serialization keeps the raw fields of every entity, so a parse of a dump
// is structurally equal to the original and a re-dump is byte-identical.
// Solids are rebuilt through BrepBuilder, which re-derives connectivity.

nlohmann::json solid_to_json(const SolidBrep& solid);
SolidBrep solid_from_json(const nlohmann::json& j);

nlohmann::json trajectory_to_json(const Trajectory& traj);
Trajectory trajectory_from_json(const nlohmann::json& j);

nlohmann::json swept_to_json(const SweptBrep& swept);
SweptBrep swept_from_json(const nlohmann::json& j);

// Throw std::runtime_error with the path in the message on any I/O failure.
nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace sweepkernel
