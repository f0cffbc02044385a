// Copyright 2026 The vcbg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vcbg/interp.hpp"

#include "vcbg/errors.hpp"

#include <algorithm>
#include <cmath>

namespace vcbg {

namespace {

double sign(double v) { return (v > 0.0) - (v < 0.0); }

// One-sided three-point endpoint slope, clipped to keep the shape.
double endpoint_slope(double h0, double h1, double m0, double m1)
{
    double d = ((2.0 * h0 + h1) * m0 - h0 * m1) / (h0 + h1);
    if (sign(d) != sign(m0))
        d = 0.0;
    else if (sign(m0) != sign(m1) && std::abs(d) > std::abs(3.0 * m0))
        d = 3.0 * m0;
    return d;
}

void check_knots(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size())
        fail(ErrorCategory::Config, "interpolation knots and values differ in length");
    if (x.size() < 2)
        fail(ErrorCategory::InsufficientData, "interpolation needs at least two knots");
    for (std::size_t i = 1; i < x.size(); ++i)
        if (!(x[i] > x[i - 1]))
            fail(ErrorCategory::Config, "interpolation knots must be strictly increasing");
}

} // namespace

MonotoneCubic::MonotoneCubic(std::span<const double> x, std::span<const double> y)
    : x_(x.begin(), x.end()), y_(y.begin(), y.end()), slope_(x.size(), 0.0)
{
    check_knots(x, y);
    const std::size_t n = x_.size();
    std::vector<double> h(n - 1), m(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x_[i + 1] - x_[i];
        m[i] = (y_[i + 1] - y_[i]) / h[i];
    }
    if (n == 2) {
        slope_[0] = slope_[1] = m[0];
        return;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (m[i - 1] == 0.0 || m[i] == 0.0 || sign(m[i - 1]) != sign(m[i])) {
            slope_[i] = 0.0;
            continue;
        }
        const double w1 = 2.0 * h[i] + h[i - 1];
        const double w2 = h[i] + 2.0 * h[i - 1];
        slope_[i] = (w1 + w2) / (w1 / m[i - 1] + w2 / m[i]);
    }
    slope_[0] = endpoint_slope(h[0], h[1], m[0], m[1]);
    slope_[n - 1] = endpoint_slope(h[n - 2], h[n - 3], m[n - 2], m[n - 3]);
}

std::size_t MonotoneCubic::segment(double x) const
{
    if (x < x_.front() || x > x_.back())
        fail(ErrorCategory::Range, "interpolation point outside knot range");
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - x_.begin());
    return std::min(i == 0 ? 0 : i - 1, x_.size() - 2);
}

double MonotoneCubic::operator()(double x) const
{
    const std::size_t i = segment(x);
    if (x == x_[i])
        return y_[i];
    if (x == x_[i + 1])
        return y_[i + 1];
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    return h00 * y_[i] + h10 * h * slope_[i] + h01 * y_[i + 1] + h11 * h * slope_[i + 1];
}

double MonotoneCubic::derivative(double x) const
{
    const std::size_t i = segment(x);
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double t2 = t * t;
    const double d00 = (6 * t2 - 6 * t) / h;
    const double d10 = 3 * t2 - 4 * t + 1;
    const double d01 = (-6 * t2 + 6 * t) / h;
    const double d11 = 3 * t2 - 2 * t;
    return d00 * y_[i] + d10 * slope_[i] + d01 * y_[i + 1] + d11 * slope_[i + 1];
}

double interp_linear(std::span<const double> x, std::span<const double> y, double at)
{
    check_knots(x, y);
    if (at < x.front() || at > x.back())
        fail(ErrorCategory::Range, "interpolation point outside knot range");
    auto it = std::upper_bound(x.begin(), x.end(), at);
    std::size_t i = static_cast<std::size_t>(it - x.begin());
    i = std::min(i == 0 ? 0 : i - 1, x.size() - 2);
    const double t = (at - x[i]) / (x[i + 1] - x[i]);
    return (1.0 - t) * y[i] + t * y[i + 1];
}

} // namespace vcbg
