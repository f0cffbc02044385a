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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "vcbg/analysis.hpp"
#include "vcbg/errors.hpp"
#include "vcbg/io.hpp"
#include "vcbg/pipeline.hpp"
#include "vcbg/verify.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>

namespace {

using namespace vcbg;
namespace fs = std::filesystem;

struct Outcome
{
    bool passed = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double time_limit, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (time_limit > 0.0 && secs >= time_limit) {
        o.passed = false;
        o.detail += "; runtime over limit";
    }
    if (!o.passed)
        ++failures;
    std::printf("%s  [%2d] %-34s %s  (%.3f s)\n", o.passed ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(),
                secs);
    std::fflush(stdout);
}

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string fixed(double v, int digits = 4)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

Outcome toy_model()
{
    const double err = log_toy_model_error(1e-3);
    return {err < 1e-6, "max rel err " + sci(err) + " < 1e-6"};
}

Outcome local_exponent()
{
    // F = (ln d)^2 / (8 d); its slope is -1 + 2 / ln d, so the band edges sit exactly on the limits.
    ForceCurve curve;
    for (int i = 0; i <= 800; ++i) {
        const double s = -11.0 + 0.01 * i;
        curve.samples.push_back({std::exp(s), s * s / (8.0 * std::exp(s))});
    }
    const double at8 = local_loglog_slope(curve, std::exp(-8.0));
    constexpr double kEdge = 1e-9; // rounding allowance at the band edges only
    double lo = 0.0, hi = -INFINITY;
    for (int i = 0; i <= 500; ++i) {
        const double m = local_loglog_slope(curve, std::exp(-10.0 + 0.01 * i));
        lo = std::min(lo, m);
        hi = std::max(hi, m);
    }
    const bool ok = std::abs(at8 + 1.25) <= 0.01 && lo >= -1.4 - kEdge && hi <= -1.2 + kEdge;
    return {ok, "slope(ln d=-8) " + fixed(at8, 6) + ", range over [-10,-5] [" + fixed(lo, 6) + ", " +
                    fixed(hi, 6) + "]"};
}

Outcome parallel_plate()
{
    const double err = parallel_plate_closed_form_error(1e-3);
    const double ratio =
        parallel_plate_closed_form_error(kOrderProbeStep) / parallel_plate_closed_form_error(kOrderProbeStep / 2);
    return {err < 1e-8 && ratio >= 8.0 && ratio <= 32.0,
            "rel err " + sci(err) + " < 1e-8, halving ratio " + fixed(ratio, 2) + " in [8, 32]"};
}

Outcome identity()
{
    const double pp = minimized_force_identity_error(synthetic_parallel_plate(), 1e-3);
    const double sp = minimized_force_identity_error(synthetic_sphere_plate(), 1e-3);
    return {pp < 1e-8 && sp < 1e-8, "parallel " + sci(pp) + ", sphere " + sci(sp) + " < 1e-8"};
}

Outcome offset()
{
    const auto data = synthetic_sphere_plate();
    const auto model = model_for(data);
    double worst = 0.0;
    for (double v0 : {1e-3, 1e-2, 1e-1})
        worst = std::max(worst, offset_invariance_check(data.profile, model, v0, data.grid, data.d_max));
    return {worst < 1e-9, "max rel change " + sci(worst) + " < 1e-9"};
}

Outcome flat_null()
{
    constexpr double kFlat = 0.02;
    const VaProfile flat = VaProfile::parametric(0.0, kFlat, kSyntheticD0);
    double worst = 0.0;
    bool identical = true;
    for (const auto& data : {synthetic_parallel_plate(), synthetic_sphere_plate()}) {
        const auto model = model_for(data);
        const auto sol = solve_vc(flat, model, data.grid, data.d_max);
        const auto bg = background_curve(flat, model, sol);
        ForceCurve measured;
        for (const auto& s : bg.samples) {
            const double scale = 0.5 * std::abs(model.derivative(s.d)) * kFlat * kFlat;
            worst = std::max(worst, std::abs(s.f) / scale);
            measured.samples.push_back({s.d, -1e-26 / (s.d * s.d * s.d)});
        }
        const auto corrected = correct_measured_force(measured, bg);
        for (std::size_t i = 0; i < measured.samples.size(); ++i)
            identical = identical && corrected.samples[i].f == measured.samples[i].f;
    }
    return {worst < 1e-15 && identical,
            "max |F| / scale " + sci(worst) + " < 1e-15, corrected == measured: " + (identical ? "yes" : "no")};
}

double sphere_exponent(double d_max)
{
    const auto data = synthetic_sphere_plate();
    const auto model = CapacitanceModel(data.geometry, DerivativeMode::Analytic,
                                        Domain{0.5 * data.grid.front(), 2.0 * d_max});
    const auto sol = solve_vc(data.profile, model, data.grid, d_max);
    return fit_power_law(background_curve(data.profile, model, sol), data.grid.front(), data.grid.back()).m;
}

Outcome sphere_power_law()
{
    const auto data = synthetic_sphere_plate();
    const double m = sphere_exponent(data.d_max);
    std::string detail = "m " + fixed(m) + " (band [1.1, 1.5]) at d_max 100 um; m vs d_max:";
    for (double d_max : {300e-6, 1e-3, 5e-3})
        detail += " " + fixed(d_max * 1e3, 1) + " mm: " + fixed(sphere_exponent(d_max), 4);
    return {m >= 1.1 && m <= 1.5, detail};
}

Outcome surface_model()
{
    auto ratio = [](const PlateGeometry& g) {
        const SurfaceModel surface{0.03, 0.05, g.sphere_radius};
        std::vector<VaSample> samples;
        double lo = INFINITY, hi = -INFINITY;
        for (double d : log_spaced(1e-6, 50e-6, 50)) {
            const double v = effective_potential_from_surface_model(surface, g, d);
            samples.push_back({d, v});
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return fit_log_profile(samples, kSyntheticD0).rms_residual / (hi - lo);
    };
    const auto bare = PlateGeometry::sphere_plate(150e-6);
    const double r0 = ratio(bare);
    const double r1 = ratio(synthetic_sphere_plate().geometry);
    return {r0 < 0.03 && r1 < 0.03, "rms/span " + fixed(100 * r0, 3) + "% (no screening), " + fixed(100 * r1, 3) +
                                        "% (screened) < 3%"};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism()
{
    auto cfg = load_config("data/parallel_plate.cfg");
    const auto va = load_va_measurements("data/parallel_plate_va.csv");
    const auto force = load_force_measurements("data/parallel_plate_force.csv");
    const auto root = fs::temp_directory_path() / "vcbg_acceptance";
    fs::remove_all(root);

    PipelineResult first = run_pipeline(cfg, va, force);
    cfg.output_dir = root / "a";
    write_outputs(cfg, first, OutputSet::Full);
    cfg.output_dir = root / "b";
    write_outputs(cfg, run_pipeline(cfg, va, force), OutputSet::Full);

    bool same = true;
    for (const char* f : {"vc_solution.csv", "background_force.csv", "corrected_force.csv", "report.txt"})
        same = same && !slurp(root / "a" / f).empty() && slurp(root / "a" / f) == slurp(root / "b" / f);

    bool round_trip = true;
    const auto vc = read_csv(root / "a" / "vc_solution.csv", "d_m,vc_V,u_V");
    const auto nodes = first.solution.grid_nodes();
    round_trip = vc.size() == nodes.size();
    for (std::size_t i = 0; round_trip && i < vc.size(); ++i)
        round_trip = vc[i][0] == nodes[i].d && vc[i][1] == nodes[i].vc;
    const auto cor = read_csv(root / "a" / "corrected_force.csv", "d_m,F_N,background_fraction");
    round_trip = round_trip && cor.size() == first.corrected->samples.size();
    for (std::size_t i = 0; round_trip && i < cor.size(); ++i)
        round_trip = cor[i][0] == first.corrected->samples[i].d && cor[i][1] == first.corrected->samples[i].f;
    fs::remove_all(root);
    return {same && round_trip, std::string("byte-identical: ") + (same ? "yes" : "no") +
                                    ", bit-exact round trip: " + (round_trip ? "yes" : "no")};
}

int cli_exit(const std::string& args)
{
    const std::string cmd = std::string("\"") + VCBG_CLI_PATH + "\" " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome verify_exit_codes()
{
    const int normal = cli_exit("verify");
    const int coarse = cli_exit("verify --step 0.5");
    return {normal == 0 && coarse == 4,
            "verify -> " + std::to_string(normal) + ", verify --step 0.5 -> " + std::to_string(coarse)};
}

} // namespace

int main()
{
    criterion(1, "toy-model equivalence", 1.0, toy_model);
    criterion(2, "local exponent of toy force", 1.0, local_exponent);
    criterion(3, "parallel-plate closed form", 1.0, parallel_plate);
    criterion(4, "minimized-force identity", 0.0, identity);
    criterion(5, "offset invariance", 0.0, offset);
    criterion(6, "constant-V_a null", 0.0, flat_null);
    criterion(7, "sphere-plate power law", 5.0, sphere_power_law);
    criterion(8, "surface-model log fit", 0.0, surface_model);
    criterion(9, "determinism and round trip", 0.0, determinism);
    criterion(10, "verify exit codes", 0.0, verify_exit_codes);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
