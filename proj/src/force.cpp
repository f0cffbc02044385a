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

#include "vcbg/force.hpp"

#include "vcbg/errors.hpp"
#include "vcbg/interp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace vcbg {

std::string_view to_string(Provenance p) noexcept
{
    switch (p) {
    case Provenance::Measured: return "measured";
    case Provenance::ComputedBackground: return "computed_background";
    case Provenance::Corrected: return "corrected";
    }
    return "unknown";
}

void ForceCurve::validate() const
{
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!(samples[i].d > 0.0))
            fail(ErrorCategory::Domain, "force curve contains a non-positive separation");
        if (i > 0 && !(samples[i].d > samples[i - 1].d))
            fail(ErrorCategory::Config, "force curve separations must be strictly increasing");
    }
}

std::vector<double> ForceCurve::distances() const
{
    std::vector<double> out;
    out.reserve(samples.size());
    for (const auto& s : samples)
        out.push_back(s.d);
    return out;
}

std::vector<double> ForceCurve::forces() const
{
    std::vector<double> out;
    out.reserve(samples.size());
    for (const auto& s : samples)
        out.push_back(s.f);
    return out;
}

double electrostatic_energy(const CapacitanceModel& model, double va, double vc, double d)
{
    const double w = va + vc;
    return 0.5 * model.capacitance(d) * w * w;
}

double electrostatic_force_general(const CapacitanceModel& model, double va,
                                   const VcSolution& solution, double d)
{
    const double w = va + solution.vc(d);
    return 0.5 * model.derivative(d) * w * w + model.capacitance(d) * w * solution.slope(d);
}

BackgroundForce minimized_background_force_detail(const VaProfile& profile,
                                                  const CapacitanceModel& model,
                                                  const VcSolution& solution, double d)
{
    const double c = model.capacitance(d);
    const double dc = model.derivative(d);
    BackgroundForce out;
    out.u = profile(d) + solution.vc(d);
    out.direct = 0.5 * dc * out.u * out.u + c * out.u * solution.slope(d);
    out.identity = -0.5 * dc * out.u * out.u;

    const double diff = std::abs(out.direct - out.identity);
    if (diff > kIdentityTolerance * std::abs(out.identity) && diff != 0.0) {
        std::ostringstream os;
        os.precision(17);
        os << "minimized-force identity violated at d = " << d << " m: direct " << out.direct
           << " N vs -C'u^2/2 = " << out.identity << " N (corrupted V_c solution?)";
        fail(ErrorCategory::Consistency, os.str());
    }
    return out;
}

double minimized_background_force(const VaProfile& profile, const CapacitanceModel& model,
                                  const VcSolution& solution, double d)
{
    return minimized_background_force_detail(profile, model, solution, d).direct;
}

ForceCurve background_curve(const VaProfile& profile, const CapacitanceModel& model,
                            const VcSolution& solution)
{
    ForceCurve curve;
    curve.provenance = Provenance::ComputedBackground;
    for (double d : solution.grid())
        curve.samples.push_back({d, minimized_background_force(profile, model, solution, d)});
    return curve;
}

namespace {

bool same_grid(const ForceCurve& a, const ForceCurve& b)
{
    if (a.samples.size() != b.samples.size())
        return false;
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        const double x = a.samples[i].d, y = b.samples[i].d;
        if (std::abs(x - y) > 1e-12 * std::max(std::abs(x), std::abs(y)))
            return false;
    }
    return true;
}

std::vector<double> resample(const ForceCurve& background, const std::vector<double>& at)
{
    const auto& bs = background.samples;
    if (bs.size() < 2)
        fail(ErrorCategory::InsufficientData, "background curve needs at least two samples to interpolate");
    std::vector<double> x;
    for (const auto& s : bs)
        x.push_back(std::log(s.d));

    const bool positive = std::all_of(bs.begin(), bs.end(), [](const ForceSample& s) { return s.f > 0.0; });
    const bool negative = std::all_of(bs.begin(), bs.end(), [](const ForceSample& s) { return s.f < 0.0; });

    std::vector<double> out;
    out.reserve(at.size());
    if (positive || negative) {
        const double sign = positive ? 1.0 : -1.0;
        std::vector<double> y;
        for (const auto& s : bs)
            y.push_back(std::log(std::abs(s.f)));
        const MonotoneCubic spline(x, y);
        for (double d : at)
            out.push_back(sign * std::exp(spline(std::log(d))));
    } else {
        const auto f = background.forces();
        for (double d : at)
            out.push_back(interp_linear(x, f, std::log(d)));
    }
    return out;
}

} // namespace

ForceCurve correct_measured_force(const ForceCurve& measured, const ForceCurve& background,
                                  const CorrectionOptions& options)
{
    measured.validate();
    background.validate();

    std::vector<double> bg;
    if (same_grid(measured, background)) {
        bg = background.forces();
    } else {
        if (!options.interpolate)
            fail(ErrorCategory::Range, "measured and background grids differ and interpolation is disabled");
        const auto ds = measured.distances();
        if (!ds.empty() && !background.samples.empty()
            && (ds.front() < background.samples.front().d || ds.back() > background.samples.back().d)) {
            std::ostringstream os;
            os << "background covers [" << background.samples.front().d << ", "
               << background.samples.back().d << "] m but measured data spans [" << ds.front()
               << ", " << ds.back() << "] m";
            fail(ErrorCategory::Range, os.str());
        }
        bg = resample(background, ds);
    }

    ForceCurve out;
    out.sign_convention = measured.sign_convention;
    out.provenance = Provenance::Corrected;
    out.samples.reserve(measured.samples.size());
    out.background_fraction.reserve(measured.samples.size());
    for (std::size_t i = 0; i < measured.samples.size(); ++i) {
        const double m = measured.samples[i].f;
        out.samples.push_back({measured.samples[i].d, m - bg[i]});
        if (m != 0.0)
            out.background_fraction.push_back(std::abs(bg[i] / m));
        else
            out.background_fraction.push_back(bg[i] == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    }
    return out;
}

} // namespace vcbg
