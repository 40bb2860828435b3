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

// Compares the OpenMP kernels against the serial reference on the sweep
// fixtures and on a batch of membership queries. The two paths must agree
// bitwise: the parallel loops only split iteration spaces, never reorder
// reductions. Exits nonzero on any divergence.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "sweepkernel/io_json.hpp"
#include "sweepkernel/oracle.hpp"
#include "sweepkernel/parallel.hpp"
#include "sweepkernel/sweep.hpp"

namespace {

using namespace sweepkernel;

constexpr double kPi = 3.14159265358979323846;

double now_s() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

struct Case {
  std::string name;
  SolidBrep solid;
  Trajectory traj;
};

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  if (reps < 1) reps = 1;
  set_worker_cap(0);

  std::vector<Case> cases;
  cases.push_back({"rotating-cube", fixtures::box({1, 1, 0}, {2, 2, 1}),
                   Trajectory::screw({0, 0, 0}, UnitVec3::of({0, 0, 1}),
                                     kPi / 2, 0, 0, 1)});
  cases.push_back({"translated-ball", fixtures::ball({0, 0, 0}, 1),
                   Trajectory::screw({0, 0, 0},
                                     UnitVec3::of(normalized({2, 1, 0.5})), 0,
                                     2, 0, 1)});
  cases.push_back({"translated-box", fixtures::box({0, 0, 0}, {1, 1, 1}),
                   Trajectory::screw({0, 0, 0}, UnitVec3::of({1, 0, 0}), 0, 2,
                                     0, 1)});
  cases.push_back({"screwed-cube", fixtures::box({1, 1, 0}, {2, 2, 1}),
                   Trajectory::screw({0, 0, 0}, UnitVec3::of({0, 0, 1}),
                                     kPi / 2, 1, 0, 1)});

  std::printf("%d worker(s), best of %d\n", worker_count(), reps);
  std::printf("%-16s %10s %10s %8s  %s\n", "sweep", "serial", "openmp",
              "speedup", "output");

  int divergent = 0;
  for (const Case& c : cases) {
    Config cfg;
    double best_serial = 1e30, best_omp = 1e30;
    std::string dump_serial, dump_omp;
    for (int r = 0; r < reps; ++r) {
      cfg.exec = Exec::serial;
      double t0 = now_s();
      SweptBrep a = sweep(c.solid, c.traj, cfg);
      best_serial = std::min(best_serial, now_s() - t0);
      if (r == 0) dump_serial = swept_to_json(a).dump();

      cfg.exec = Exec::openmp;
      t0 = now_s();
      SweptBrep b = sweep(c.solid, c.traj, cfg);
      best_omp = std::min(best_omp, now_s() - t0);
      if (r == 0) dump_omp = swept_to_json(b).dump();
    }
    bool same = dump_serial == dump_omp;
    if (!same) ++divergent;
    std::printf("%-16s %9.3fs %9.3fs %7.2fx  %s\n", c.name.c_str(),
                best_serial, best_omp, best_serial / best_omp,
                same ? "identical" : "DIVERGED");
  }

  // Membership batch: the oracle's parallel-over-points loop.
  {
    const Case& c = cases[0];
    Config cfg;
    std::vector<Vec3> pts;
    for (int i = 0; i < 1000; ++i) {
      double a = 2 * kPi * i / 1000.0;
      pts.push_back({2.2 * std::cos(a), 2.2 * std::sin(a),
                     0.5 + 0.6 * std::sin(3 * a)});
    }
    double best_serial = 1e30, best_omp = 1e30;
    std::vector<double> margins_serial, margins_omp;
    for (int r = 0; r < reps; ++r) {
      for (Exec exec : {Exec::serial, Exec::openmp}) {
        cfg.exec = exec;
        std::vector<double> margins;
        margins.reserve(pts.size());
        double t0 = now_s();
        for (const Vec3& p : pts)
          margins.push_back(pmc(c.solid, c.traj, p, cfg).margin);
        double dt = now_s() - t0;
        if (exec == Exec::serial) {
          best_serial = std::min(best_serial, dt);
          if (r == 0) margins_serial = margins;
        } else {
          best_omp = std::min(best_omp, dt);
          if (r == 0) margins_omp = margins;
        }
      }
    }
    bool same = margins_serial == margins_omp;
    if (!same) ++divergent;
    std::printf("%-16s %9.3fs %9.3fs %7.2fx  %s\n", "pmc x1000",
                best_serial, best_omp, best_serial / best_omp,
                same ? "identical" : "DIVERGED");
  }

  return divergent == 0 ? 0 : 1;
}
