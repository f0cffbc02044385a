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

#pragma once

/**
 * Central finite differences with one level of Richardson extrapolation.
 *
 * The plain central difference D(h) = (f(x+h) - f(x-h)) / 2h carries an
 * O(h^2) truncation error. Combining two step sizes,
 *
 *     R(h) = (4 D(h/2) - D(h)) / 3,
 *
 * cancels the h^2 term and leaves O(h^4).
 */

#include <concepts>

namespace vcbg::numdiff {

template <typename F>
concept ScalarFunction = requires(F f, double x) {
    { f(x) } -> std::convertible_to<double>;
};

template <ScalarFunction F>
double central(F&& f, double x, double h)
{
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

template <ScalarFunction F>
double central_richardson(F&& f, double x, double h)
{
    const double coarse = central(f, x, h);
    const double fine = central(f, x, 0.5 * h);
    return (4.0 * fine - coarse) / 3.0;
}

} // namespace vcbg::numdiff
