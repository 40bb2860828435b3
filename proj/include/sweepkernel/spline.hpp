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

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sweepkernel {

// Natural cubic spline on arbitrary strictly increasing knots. C2 on the
// whole interval, second derivative zero at the two ends.
class CubicSpline {
 public:
  CubicSpline() = default;

  CubicSpline(std::vector<double> knots, std::vector<double> values)
      : t_(std::move(knots)), y_(std::move(values)) {
    size_t n = t_.size();
    if (n < 2 || y_.size() != n)
      throw std::invalid_argument("CubicSpline: need matching knots/values, at least 2");
    for (size_t i = 1; i < n; ++i)
      if (!(t_[i] > t_[i - 1]))
        throw std::invalid_argument("CubicSpline: knots must strictly increase");
    m_.assign(n, 0.0);
    if (n == 2) return;  // linear segment, second derivatives stay zero

    // Thomas solve of the tridiagonal system for interior second derivatives.
    std::vector<double> diag(n, 0), rhs(n, 0), upper(n, 0);
    diag[0] = 1;
    for (size_t i = 1; i + 1 < n; ++i) {
      double h0 = t_[i] - t_[i - 1], h1 = t_[i + 1] - t_[i];
      diag[i] = 2 * (h0 + h1);
      upper[i] = h1;
      rhs[i] = 6 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
    }
    diag[n - 1] = 1;
    for (size_t i = 2; i + 1 < n; ++i) {
      double w = (t_[i] - t_[i - 1]) / diag[i - 1];
      diag[i] -= w * upper[i - 1];
      rhs[i] -= w * rhs[i - 1];
    }
    for (size_t i = n - 2; i >= 1; --i) {
      m_[i] = (rhs[i] - upper[i] * m_[i + 1]) / diag[i];
      if (i == 1) break;
    }
  }

  double t_min() const { return t_.front(); }
  double t_max() const { return t_.back(); }
  const std::vector<double>& knots() const { return t_; }

  void eval(double t, double* value, double* d1 = nullptr, double* d2 = nullptr) const {
    size_t i = segment(t);
    double h = t_[i + 1] - t_[i];
    double a = (t_[i + 1] - t) / h, b = (t - t_[i]) / h;
    if (value) {
      *value = a * y_[i] + b * y_[i + 1] +
               ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
    }
    if (d1) {
      *d1 = (y_[i + 1] - y_[i]) / h -
            (3 * a * a - 1) / 6.0 * h * m_[i] + (3 * b * b - 1) / 6.0 * h * m_[i + 1];
    }
    if (d2) *d2 = a * m_[i] + b * m_[i + 1];
  }

 private:
  size_t segment(double t) const {
    auto it = std::upper_bound(t_.begin(), t_.end(), t);
    size_t i = it == t_.begin() ? 0 : (it - t_.begin()) - 1;
    return std::min(i, t_.size() - 2);
  }

  std::vector<double> t_, y_, m_;
};

}  // namespace sweepkernel
