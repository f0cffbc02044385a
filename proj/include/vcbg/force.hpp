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

#include <string_view>
#include <vector>

namespace vcbg {

enum class SignConvention
{
    EnergyGradient, // F = dE/dd
};

enum class Provenance
{
    Measured,
    ComputedBackground,
    Corrected,
};

std::string_view to_string(Provenance p) noexcept;

struct ForceSample
{
    double d = 0.0; // m
    double f = 0.0; // N
};

/// Sampled force curve; d strictly increasing and positive.
struct ForceCurve
{
    std::vector<ForceSample> samples;
    SignConvention sign_convention = SignConvention::EnergyGradient;
    Provenance provenance = Provenance::Measured;
    /// |background / measured| per sample; filled for corrected curves only.
    std::vector<double> background_fraction;

    void validate() const;
    std::vector<double> distances() const;
    std::vector<double> forces() const;
};

/// 1/2 C(d) (va + vc)^2.
double electrostatic_energy(const CapacitanceModel& model, double va, double vc, double d);

/**
 * Force at a fixed applied voltage, including the contact-potential
 * gradient term: 1/2 C' (va + V_c)^2 + C (va + V_c) V_c'.
 */
double electrostatic_force_general(const CapacitanceModel& model, double va,
                                   const VcSolution& solution, double d);

/// Both routes to the residual force at the minimizing voltage.
struct BackgroundForce
{
    double direct = 0.0;   // 1/2 C' u^2 + C u V_c'
    double identity = 0.0; // -1/2 C' u^2
    double u = 0.0;        // V_a + V_c
};

/// Relative agreement demanded between the two routes.
inline constexpr double kIdentityTolerance = 1e-8;

/**
 * Evaluates the background force with V_a held at V_a(d). Throws
 * Error(Consistency) if the direct and identity routes disagree by more than
 * kIdentityTolerance relative, which signals a corrupted solution.
 */
BackgroundForce minimized_background_force_detail(const VaProfile& profile,
                                                  const CapacitanceModel& model,
                                                  const VcSolution& solution, double d);

double minimized_background_force(const VaProfile& profile, const CapacitanceModel& model,
                                  const VcSolution& solution, double d);

/// Background force on every grid point of the solution.
ForceCurve background_curve(const VaProfile& profile, const CapacitanceModel& model,
                            const VcSolution& solution);

struct CorrectionOptions
{
    /// Allow resampling the background onto a different measured grid.
    bool interpolate = true;
};

/**
 * Pointwise measured - background. Grids that differ are bridged by a
 * monotone cubic in (ln d, ln|F|) when the background has one sign, linear
 * in (ln d, F) otherwise.
 */
ForceCurve correct_measured_force(const ForceCurve& measured, const ForceCurve& background,
                                  const CorrectionOptions& options = {});

} // namespace vcbg
