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

// Command-line front end: fit-va, solve-vc, background, correct, verify,
// demo-surface-model. Exit codes: 0 ok, 2 parse/config, 3 numeric/domain,
// 4 verification failure.

#include "vcbg/errors.hpp"
#include "vcbg/io.hpp"
#include "vcbg/pipeline.hpp"
#include "vcbg/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitVerify = 4;

int exit_code(vcbg::ErrorCategory c)
{
    using vcbg::ErrorCategory;
    switch (c) {
    case ErrorCategory::Parse:
    case ErrorCategory::Config: return kExitParse;
    default: return kExitNumeric;
    }
}

struct Options
{
    std::string config;
    std::string va;
    std::string force;
    std::string out;
    double step = 1e-3;
    double n = 0.05;
    double v1 = 0.03;
    double plate_radius = 0.0;
    double d_min = 1e-6;
    double d_max = 50e-6;
    std::size_t points = 50;
};

vcbg::PipelineConfig config_from(const Options& o)
{
    vcbg::PipelineConfig cfg = o.config.empty() ? vcbg::PipelineConfig{} : vcbg::load_config(o.config);
    if (!o.out.empty())
        cfg.output_dir = o.out;
    return cfg;
}

int run_fit(const Options& o)
{
    const auto cfg = config_from(o);
    const auto data = vcbg::load_va_measurements(o.va);
    const auto fit = vcbg::fit_log_profile(data, cfg.d0_reference);
    std::cout << "a_V = " << vcbg::format_number(fit.a) << '\n'
              << "b_V = " << vcbg::format_number(fit.b) << '\n'
              << "d0_m = " << vcbg::format_number(fit.d0) << '\n'
              << "rms_residual_V = " << vcbg::format_number(fit.rms_residual) << '\n';
    return kExitOk;
}

int run_pipeline_command(const Options& o, vcbg::OutputSet set)
{
    const auto cfg = config_from(o);
    const auto data = vcbg::load_va_measurements(o.va);
    std::optional<vcbg::ForceCurve> force;
    if (!o.force.empty())
        force = vcbg::load_force_measurements(o.force);
    const auto result = vcbg::run_pipeline(cfg, data, force);
    vcbg::write_outputs(cfg, result, set);
    for (const auto& w : result.warnings)
        std::cerr << "WARN: " << w << '\n';
    std::cout << "wrote " << cfg.output_dir.string() << '\n';
    return kExitOk;
}

int run_verify(const Options& o)
{
    const auto checks = vcbg::run_verification(o.step);
    vcbg::print_checks(std::cout, checks);
    for (const auto& c : checks)
        if (!c.passed)
            return kExitVerify;
    return kExitOk;
}

int run_surface_demo(const Options& o)
{
    auto cfg = config_from(o);
    if (cfg.geometry.kind != vcbg::GeometryKind::SpherePlate)
        vcbg::fail(vcbg::ErrorCategory::Config, "demo-surface-model needs geometry = sphere_plate");
    if (o.points < 3 || !(o.d_min > 0.0) || !(o.d_max > o.d_min))
        vcbg::fail(vcbg::ErrorCategory::Config, "demo-surface-model needs 0 < d-min < d-max and >= 3 points");
    const vcbg::SurfaceModel surface{o.v1, o.n, o.plate_radius > 0.0 ? o.plate_radius : cfg.geometry.sphere_radius};

    std::vector<vcbg::VaSample> samples;
    std::vector<std::vector<double>> rows;
    double lo = INFINITY, hi = -INFINITY;
    for (double d : vcbg::log_spaced(o.d_min, o.d_max, o.points)) {
        const double v = vcbg::effective_potential_from_surface_model(surface, cfg.geometry, d);
        samples.push_back({d, v});
        rows.push_back({d, v});
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const auto fit = vcbg::fit_log_profile(samples, cfg.d0_reference);

    std::filesystem::create_directories(cfg.output_dir);
    vcbg::write_csv(cfg.output_dir / "surface_model.csv", "d_m,veff_V", rows);
    std::cout << "a_V = " << vcbg::format_number(fit.a) << '\n'
              << "b_V = " << vcbg::format_number(fit.b) << '\n'
              << "rms_residual_V = " << vcbg::format_number(fit.rms_residual) << '\n'
              << "rms_over_span = " << vcbg::format_number(hi > lo ? fit.rms_residual / (hi - lo) : 0.0) << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Contact-potential reconstruction and electrostatic background subtraction"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&o](CLI::App* sub, bool needs_va) {
        sub->add_option("--config", o.config, "key = value configuration file")->check(CLI::ExistingFile);
        auto* va = sub->add_option("--va", o.va, "CSV with header d_m,va_V");
        if (needs_va)
            va->required()->check(CLI::ExistingFile);
        sub->add_option("--out", o.out, "output directory (overrides output_dir)");
    };

    auto* fit = app.add_subcommand("fit-va", "Fit V_a = a ln(d/d0) + b to measured minimizing voltages");
    add_common(fit, true);
    auto* solve = app.add_subcommand("solve-vc", "Reconstruct V_c(d) and write vc_solution.csv");
    add_common(solve, true);
    auto* background = app.add_subcommand("background", "Compute the residual electrostatic background force");
    add_common(background, true);
    auto* correct = app.add_subcommand("correct", "Subtract the background from a measured force curve");
    add_common(correct, true);
    correct->add_option("--force", o.force, "CSV with header d_m,F_N")->required()->check(CLI::ExistingFile);
    auto* verify = app.add_subcommand("verify", "Run the built-in analytic checks");
    verify->add_option("--step", o.step, "integrator step in ln d")->check(CLI::PositiveNumber);
    auto* demo = app.add_subcommand("demo-surface-model", "Effective potential of an r^n surface gradient");
    add_common(demo, false);
    demo->add_option("--n", o.n, "radial exponent");
    demo->add_option("--v1", o.v1, "rim potential (V)");
    demo->add_option("--plate-radius", o.plate_radius, "radius where the potential equals v1 (m)");
    demo->add_option("--d-min", o.d_min, "smallest separation (m)");
    demo->add_option("--d-max", o.d_max, "largest separation (m)");
    demo->add_option("--points", o.points, "number of log-spaced separations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParse;
    }

    try {
        if (*fit)
            return run_fit(o);
        if (*solve)
            return run_pipeline_command(o, vcbg::OutputSet::SolutionOnly);
        if (*background)
            return run_pipeline_command(o, vcbg::OutputSet::Background);
        if (*correct)
            return run_pipeline_command(o, vcbg::OutputSet::Full);
        if (*verify)
            return run_verify(o);
        if (*demo)
            return run_surface_demo(o);
    } catch (const vcbg::Error& e) {
        std::cerr << "error [" << vcbg::to_string(e.category()) << "]: " << e.what() << '\n';
        return exit_code(e.category());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
    return kExitParse;
}
