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

#include "vcbg/capacitance.hpp"
#include "vcbg/contact_potential.hpp"
#include "vcbg/force.hpp"

#include <span>
#include <vector>

namespace vcbg {

/// F ~ amplitude / d^m over fit_range.
struct PowerLawFit
{
    double m = 0.0;
    double amplitude = 0.0; // signed
    double fit_lo = 0.0;
    double fit_hi = 0.0;
    double rms_log_residual = 0.0;
    std::size_t points = 0;
};

/// Unweighted least squares of ln|F| against ln d over samples in [lo, hi].
PowerLawFit fit_power_law(const ForceCurve& curve, double lo, double hi);

/**
 * d ln|F| / d ln d at d, from the degree-4 polynomial through the five
 * samples centred on the one nearest d (in ln d).
 */
double local_loglog_slope(const ForceCurve& curve, double d);

/// Closed-form solution of the toy model C = -ln d, V_a = ln d.
struct LogModelValues
{
    std::vector<double> u;
    std::vector<double> force;
};

/**
 * u = ln d / 2 - ln^2 D / (2 ln d) and F = -C' u^2 / 2 with C' = -1/d.
 * Dimensionless; every d and D must lie below 1 and d <= D.
 */
LogModelValues analytic_log_model(std::span<const double> d_grid, double D);

/// Toy model capacitance C = -ln d on the given domain (0 < lo < hi < 1).
CapacitanceModel log_toy_capacitance(Domain domain, DerivativeMode mode = DerivativeMode::Analytic);

/**
 * Runs solve_vc + background twice, once with V_a and once with V_a - v0,
 * and returns the largest pointwise relative change of the force.
 */
double offset_invariance_check(const VaProfile& profile, const CapacitanceModel& model, double v0,
                               std::span<const double> d_grid, double d_max,
                               const SolveOptions& options = {});

} // namespace vcbg
