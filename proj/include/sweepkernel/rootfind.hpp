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

#include <cmath>
#include <utility>

namespace sweepkernel {

struct RootResult {
  double x = 0;
  double fx = 0;
  int iters = 0;
  bool converged = false;
};

// Root of f in [a, b] where f(a) and f(b) have opposite (or zero) sign.
// Newton steps from the bracket midpoint state, falling back to bisection
// whenever a step leaves the bracket or fails to shrink it; the bracket is
// maintained throughout, so the loop cannot diverge. df may return 0 to
// force bisection.
template <class F, class DF>
RootResult refine_root(F&& f, DF&& df, double a, double b, double fa, double fb,
                       double xtol, double ftol, int max_iter = 60) {
  RootResult r;
  if (fa == 0) return {a, 0, 0, true};
  if (fb == 0) return {b, 0, 0, true};
  if ((fa > 0) == (fb > 0)) {
    // Not a bracket; report the better endpoint unconverged.
    r.x = std::abs(fa) < std::abs(fb) ? a : b;
    r.fx = std::abs(fa) < std::abs(fb) ? fa : fb;
    return r;
  }
  double x = 0.5 * (a + b);
  int newton_budget = 30;
  for (int it = 0; it < max_iter; ++it) {
    double fx = f(x);
    r = {x, fx, it + 1, false};
    if (std::abs(fx) <= ftol || 0.5 * (b - a) <= xtol) {
      r.converged = true;
      return r;
    }
    if ((fx > 0) == (fa > 0)) {
      a = x;
      fa = fx;
    } else {
      b = x;
      fb = fx;
    }
    double next = 0;
    bool ok = false;
    if (it < newton_budget) {
      double d = df(x);
      if (d != 0) {
        next = x - fx / d;
        ok = next > a && next < b;
      }
    }
    x = ok ? next : 0.5 * (a + b);
  }
  r.converged = std::abs(r.fx) <= 1e4 * ftol || (b - a) <= 4 * xtol;
  return r;
}

// Same with a finite-difference derivative. The stencil is clamped to the
// original bracket: f is often only defined there (trajectory intervals),
// and roots do land on the endpoints.
template <class F>
RootResult refine_root_fd(F&& f, double a, double b, double fa, double fb,
                          double xtol, double ftol, int max_iter = 60) {
  double h = std::max(1e-7 * (b - a), 1e-12);
  auto df = [&f, a, b, h](double x) {
    double lo = std::max(x - h, a), hi = std::min(x + h, b);
    return hi > lo ? (f(hi) - f(lo)) / (hi - lo) : 0.0;
  };
  return refine_root(std::forward<F>(f), df, a, b, fa, fb, xtol, ftol, max_iter);
}

}  // namespace sweepkernel
