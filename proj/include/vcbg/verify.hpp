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

#include <iosfwd>
#include <string>
#include <vector>

namespace vcbg {

/// A self-contained synthetic run: geometry, log-form V_a and grid.
struct SyntheticDataset
{
    std::string name;
    PlateGeometry geometry;
    VaProfile profile;
    std::vector<double> grid; // 50 log-spaced points over 1-50 um
    double d_max;             // 100x closest approach
};

inline constexpr double kSyntheticA = 3e-3;
inline constexpr double kSyntheticB = 5e-3;
inline constexpr double kSyntheticD0 = 1e-6;

/// A = 1 cm^2, no screening.
SyntheticDataset synthetic_parallel_plate();
/// R = 150 um, lambda = 0.68 um, eps = 16, both surfaces screened.
SyntheticDataset synthetic_sphere_plate();

CapacitanceModel model_for(const SyntheticDataset& data, DerivativeMode mode = DerivativeMode::Analytic);

std::vector<double> log_spaced(double lo, double hi, std::size_t n);

/// Relative error in u at d = D/100 for the parallel-plate closed form u = a (d/D - 1).
double parallel_plate_closed_form_error(double step);

/// Largest relative error in F over 200 points, ln d in [-12, -2], D = 1/e.
double log_toy_model_error(double step);

/// Largest relative disagreement of the two background-force routes on a dataset.
double minimized_force_identity_error(const SyntheticDataset& data, double step);

struct CheckResult
{
    std::string name;
    double value = 0.0;
    std::string criterion;
    bool passed = false;
};

/// Steps used to measure the RK4 convergence ratio.
inline constexpr double kOrderProbeStep = 0.1;

/**
 * Built-in analytic checks run at integrator step `step`: parallel-plate
 * closed form, toy log model, offset invariance, minimized-force identity and
 * RK4 order.
 */
std::vector<CheckResult> run_verification(double step);

void print_checks(std::ostream& out, const std::vector<CheckResult>& checks);

} // namespace vcbg
