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

#include "vcbg/pipeline.hpp"

#include "vcbg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace vcbg {

CapacitanceModel make_model(const PipelineConfig& config, double d_lo, double d_hi)
{
    return CapacitanceModel(config.geometry, config.derivative_mode, Domain{0.5 * d_lo, 2.0 * d_hi});
}

PipelineResult run_pipeline(const PipelineConfig& config, const std::vector<VaSample>& va_data,
                            const std::optional<ForceCurve>& force_data)
{
    config.validate();
    const LogFit fit = fit_log_profile(va_data, config.d0_reference);
    VaProfile profile = VaProfile::tabulated(va_data, config.extrapolation);

    std::vector<double> grid;
    for (const auto& s : va_data)
        grid.push_back(s.d);
    if (force_data) {
        force_data->validate();
        for (const auto& s : force_data->samples)
            grid.push_back(s.d);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    const double d_max = std::max(config.dmax_multiplier * grid.front(), grid.back());
    const CapacitanceModel model = make_model(config, grid.front(), d_max);
    VcSolution solution = solve_vc(profile, model, grid, d_max, SolveOptions{config.integrator_step});

    ForceCurve background;
    background.provenance = Provenance::ComputedBackground;
    for (const auto& s : va_data)
        background.samples.push_back({s.d, minimized_background_force(profile, model, solution, s.d)});

    std::optional<ForceCurve> corrected;
    if (force_data) {
        ForceCurve bg_on_force;
        bg_on_force.provenance = Provenance::ComputedBackground;
        for (const auto& s : force_data->samples)
            bg_on_force.samples.push_back({s.d, minimized_background_force(profile, model, solution, s.d)});
        corrected = correct_measured_force(*force_data, bg_on_force);
    }

    // Rounding-level background from a flat V_a has no meaningful exponent.
    double force_scale = 0.0;
    double largest = 0.0;
    for (const auto& s : background.samples) {
        const double v = profile(s.d);
        force_scale = std::max(force_scale, 0.5 * std::abs(model.derivative(s.d)) * v * v);
        largest = std::max(largest, std::abs(s.f));
    }

    std::optional<PowerLawFit> power_law;
    std::string note;
    if (largest <= kNullBackgroundTolerance * force_scale) {
        note = "background vanishes to rounding (flat V_a)";
    } else try {
        power_law = fit_power_law(background, va_data.front().d, va_data.back().d);
    } catch (const Error& e) {
        if (e.category() != ErrorCategory::Sign && e.category() != ErrorCategory::InsufficientData)
            throw;
        note = e.what();
    }

    const double residual = max_relative_residual(solution, profile, model);
    std::vector<std::string> warnings = solution.warnings();
    if (!(residual <= kResidualTolerance)) {
        std::ostringstream os;
        os << "minimization residual " << format_number(residual) << " exceeds tolerance "
           << format_number(kResidualTolerance);
        warnings.push_back(os.str());
    }

    return PipelineResult{fit,   std::move(profile), std::move(solution), std::move(background),
                          std::move(corrected), power_law, note, residual, std::move(warnings)};
}

std::string format_report(const PipelineConfig& config, const PipelineResult& r)
{
    const auto& g = config.geometry;
    std::ostringstream os;
    os << "# vcbg background report\n";
    os << "geometry = " << to_string(g.kind) << '\n';
    if (g.kind == GeometryKind::ParallelPlate)
        os << "plate_area_m2 = " << format_number(g.plate_area) << '\n';
    else
        os << "sphere_radius_m = " << format_number(g.sphere_radius) << '\n';
    os << "gap_correction_m = " << format_number(g.screened_surfaces * g.debye_length / g.relative_permittivity)
       << '\n';
    os << "fit_a_V = " << format_number(r.fit.a) << '\n';
    os << "fit_b_V = " << format_number(r.fit.b) << '\n';
    os << "fit_d0_m = " << format_number(r.fit.d0) << '\n';
    os << "fit_rms_residual_V = " << format_number(r.fit.rms_residual) << '\n';
    os << "d_min_m = " << format_number(r.solution.grid().front()) << '\n';
    os << "d_max_m = " << format_number(r.solution.d_max()) << '\n';
    os << "integrator_step = " << format_number(config.integrator_step) << '\n';
    os << "integrator_steps = " << r.solution.stats().steps << '\n';
    os << "integrator_max_local_error_V = " << format_number(r.solution.stats().max_local_error) << '\n';
    os << "max_relative_minimization_residual = " << format_number(r.max_relative_residual) << '\n';
    if (r.background_power_law) {
        const auto& p = *r.background_power_law;
        os << "background_power_law_m = " << format_number(p.m) << '\n';
        os << "background_power_law_range_m = " << format_number(p.fit_lo) << ' ' << format_number(p.fit_hi)
           << '\n';
        os << "background_power_law_rms_log_residual = " << format_number(p.rms_log_residual) << '\n';
    } else {
        os << "background_power_law_m = n/a (" << r.power_law_note << ")\n";
    }
    double peak = 0.0;
    for (const auto& s : r.background.samples)
        peak = std::max(peak, std::abs(s.f));
    os << "background_sign_convention = energy_gradient\n";
    os << "background_attractive_magnitude_max_N = " << format_number(peak) << '\n';
    if (r.corrected) {
        double worst = 0.0;
        for (double f : r.corrected->background_fraction)
            worst = std::max(worst, f);
        os << "corrected_points = " << r.corrected->samples.size() << '\n';
        os << "max_background_fraction = " << format_number(worst) << '\n';
    }
    for (const auto& w : r.warnings)
        os << "WARN: " << w << '\n';
    return os.str();
}

void write_outputs(const PipelineConfig& config, const PipelineResult& r, OutputSet set)
{
    std::error_code ec;
    std::filesystem::create_directories(config.output_dir, ec);
    if (ec)
        fail(ErrorCategory::Config, "cannot create output directory " + config.output_dir.string());

    std::vector<std::vector<double>> rows;
    for (const auto& n : r.solution.grid_nodes())
        rows.push_back({n.d, n.vc, r.profile(n.d) + n.vc});
    write_csv(config.output_dir / "vc_solution.csv", "d_m,vc_V,u_V", rows);

    if (set != OutputSet::SolutionOnly) {
        rows.clear();
        for (const auto& s : r.background.samples)
            rows.push_back({s.d, s.f});
        write_csv(config.output_dir / "background_force.csv", "d_m,F_N", rows);
    }
    if (set == OutputSet::Full && r.corrected) {
        rows.clear();
        for (std::size_t i = 0; i < r.corrected->samples.size(); ++i)
            rows.push_back({r.corrected->samples[i].d, r.corrected->samples[i].f, r.corrected->background_fraction[i]});
        write_csv(config.output_dir / "corrected_force.csv", "d_m,F_N,background_fraction", rows);
    }

    std::ofstream report(config.output_dir / "report.txt", std::ios::binary);
    if (!report)
        fail(ErrorCategory::Config, "cannot write report.txt");
    report << format_report(config, r);
}

} // namespace vcbg
