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

// Adaptive Gauss-Kronrod over t in [0, pi/2] (r = R sin t) for integrands
// concentrated within t ~ sqrt(g0/R) of the sphere axis.

#include "vcbg/constants.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <vector>

namespace vcbg::detail {

struct Integral
{
    double value = 0.0;
    double error = 0.0;
};

template <typename F>
Integral integrate_sphere_face(F&& f, double g0, double R, double tol)
{
    std::vector<double> breaks{0.0};
    for (double t = std::sqrt(g0 / R); t < kHalfPi; t *= 4.0)
        breaks.push_back(t);
    breaks.push_back(kHalfPi);

    using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
    Integral out;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        double err = 0.0;
        out.value += GK::integrate(f, breaks[i], breaks[i + 1], 15, tol, &err);
        out.error += err;
    }
    return out;
}

} // namespace vcbg::detail
