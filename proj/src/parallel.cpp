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

#include "sweepkernel/parallel.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sweepkernel {

void set_worker_cap(int n) {
#ifdef _OPENMP
  if (n <= 0) {
    if (const char* env = std::getenv("SWEEPKERNEL_THREADS")) {
      n = std::atoi(env);
    }
  }
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace detail {

void run_parallel(std::int64_t n, void* ctx, void (*body)(void*, std::int64_t)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) body(ctx, i);
#else
  for (std::int64_t i = 0; i < n; ++i) body(ctx, i);
#endif
}

}  // namespace detail
}  // namespace sweepkernel
