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

#include "vcbg/analysis.hpp"
#include "vcbg/contact_potential.hpp"
#include "vcbg/force.hpp"
#include "vcbg/io.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace vcbg {

/**
 * Capacitance model for a pipeline run. The domain spans [d_lo / 2, 2 d_hi]
 * so numeric derivative stencils stay inside it at the grid ends.
 */
CapacitanceModel make_model(const PipelineConfig& config, double d_lo, double d_hi);

/// Backgrounds below this fraction of max(C' V_a^2 / 2) are reported as zero.
inline constexpr double kNullBackgroundTolerance = 1e-15;

struct PipelineResult
{
    LogFit fit;
    VaProfile profile;
    VcSolution solution;
    ForceCurve background;              // on the V_a measurement grid
    std::optional<ForceCurve> corrected; // on the force measurement grid
    std::optional<PowerLawFit> background_power_law;
    std::string power_law_note; // reason when no power law could be fitted
    double max_relative_residual = 0.0;
    std::vector<std::string> warnings;
};

/// fit_log_profile -> solve_vc -> background -> optional correction.
PipelineResult run_pipeline(const PipelineConfig& config, const std::vector<VaSample>& va_data,
                            const std::optional<ForceCurve>& force_data = std::nullopt);

enum class OutputSet
{
    SolutionOnly,  // vc_solution.csv + report.txt
    Background,    // + background_force.csv
    Full,          // + corrected_force.csv when available
};

/// Writes the result files into config.output_dir (created if needed).
void write_outputs(const PipelineConfig& config, const PipelineResult& result, OutputSet set);

/// Text of report.txt; warnings appear as lines prefixed with `WARN: `.
std::string format_report(const PipelineConfig& config, const PipelineResult& result);

} // namespace vcbg
