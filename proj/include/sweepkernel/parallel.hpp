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

#include <cstdint>

namespace sweepkernel {

// Execution policy for the data-parallel kernels (grid fills, point batches,
// voxel classification). The serial path is the reference implementation the
// tests compare against; the openmp path must produce identical output since
// every iteration writes only its own index.
enum class Exec { serial, openmp };

// Caps the OpenMP worker count. Reads SWEEPKERNEL_THREADS when n <= 0.
void set_worker_cap(int n);
int worker_count();

namespace detail {
void run_parallel(std::int64_t n, void* ctx, void (*body)(void*, std::int64_t));
}

template <class F>
void parallel_for(Exec exec, std::int64_t n, F&& body) {
  if (exec == Exec::serial) {
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
  detail::run_parallel(n, &body, [](void* ctx, std::int64_t i) {
    (*static_cast<F*>(ctx))(i);
  });
}

}  // namespace sweepkernel
