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

#include "vcbg/analysis.hpp"

#include "vcbg/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace vcbg {

PowerLawFit fit_power_law(const ForceCurve& curve, double lo, double hi)
{
    if (!(lo < hi))
        fail(ErrorCategory::Config, "power-law fit range must satisfy lo < hi");
    std::vector<double> x, y;
    int sign = 0;
    for (const auto& s : curve.samples) {
        if (s.d < lo || s.d > hi)
            continue;
        const int sg = (s.f > 0.0) - (s.f < 0.0);
        if (sg == 0 || (sign != 0 && sg != sign)) {
            std::ostringstream os;
            os << "power-law fit needs samples of one sign; d = " << s.d << " m has F = " << s.f;
            fail(ErrorCategory::Sign, os.str());
        }
        sign = sg;
        x.push_back(std::log(s.d));
        y.push_back(std::log(std::abs(s.f)));
    }
    if (x.size() < 5)
        fail(ErrorCategory::InsufficientData, "power-law fit needs at least 5 samples in range");

    const double n = static_cast<double>(x.size());
    double xbar = 0.0, ybar = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        xbar += x[i];
        ybar += y[i];
    }
    xbar /= n;
    ybar /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - xbar) * (x[i] - xbar);
        sxy += (x[i] - xbar) * (y[i] - ybar);
    }
    if (!(sxx > 0.0))
        fail(ErrorCategory::DegenerateDesign, "power-law fit: all separations are equal");
    const double slope = sxy / sxx;
    const double intercept = ybar - slope * xbar;
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (intercept + slope * x[i]);
        ss += r * r;
    }

    PowerLawFit fit;
    fit.m = -slope;
    fit.amplitude = sign * std::exp(intercept);
    fit.fit_lo = lo;
    fit.fit_hi = hi;
    fit.rms_log_residual = std::sqrt(ss / n);
    fit.points = x.size();
    return fit;
}

double local_loglog_slope(const ForceCurve& curve, double d)
{
    const auto& s = curve.samples;
    if (s.size() < 5 || !(d > s.front().d) || !(d < s.back().d)) {
        std::ostringstream os;
        os << "local slope at d = " << d << " m needs d strictly inside the sampled range";
        fail(ErrorCategory::Range, os.str());
    }
    const double x = std::log(d);
    auto it = std::lower_bound(s.begin(), s.end(), d, [](const ForceSample& a, double v) { return a.d < v; });
    auto i = static_cast<std::size_t>(it - s.begin());
    if (i > 0 && std::abs(std::log(s[i - 1].d) - x) <= std::abs(std::log(s[i].d) - x))
        --i;
    if (i < 2 || i + 2 >= s.size()) {
        std::ostringstream os;
        os << "5-point stencil around d = " << d << " m leaves the sampled range";
        fail(ErrorCategory::Range, os.str());
    }

    std::array<double, 5> xs{}, ys{};
    const int sign = (s[i].f > 0.0) - (s[i].f < 0.0);
    for (std::size_t k = 0; k < 5; ++k) {
        const auto& p = s[i - 2 + k];
        if (sign == 0 || ((p.f > 0.0) - (p.f < 0.0)) != sign)
            fail(ErrorCategory::Sign, "local slope stencil crosses a sign change or zero");
        xs[k] = std::log(p.d);
        ys[k] = std::log(std::abs(p.f));
    }

    // Derivative of the Lagrange interpolant at x.
    double result = 0.0;
    for (std::size_t j = 0; j < 5; ++j) {
        double denom = 1.0;
        for (std::size_t m = 0; m < 5; ++m)
            if (m != j)
                denom *= xs[j] - xs[m];
        double numer = 0.0;
        for (std::size_t k = 0; k < 5; ++k) {
            if (k == j)
                continue;
            double prod = 1.0;
            for (std::size_t m = 0; m < 5; ++m)
                if (m != j && m != k)
                    prod *= x - xs[m];
            numer += prod;
        }
        result += ys[j] * numer / denom;
    }
    return result;
}

LogModelValues analytic_log_model(std::span<const double> d_grid, double D)
{
    if (!(D > 0.0 && D < 1.0))
        fail(ErrorCategory::Domain, "toy log model needs 0 < D < 1");
    const double lnD = std::log(D);
    LogModelValues out;
    out.u.reserve(d_grid.size());
    out.force.reserve(d_grid.size());
    for (double d : d_grid) {
        if (!(d > 0.0 && d < 1.0))
            fail(ErrorCategory::Domain, "toy log model needs 0 < d < 1");
        if (d > D)
            fail(ErrorCategory::Domain, "toy log model needs d <= D");
        const double lnd = std::log(d);
        const double u = d == D ? 0.0 : 0.5 * lnd - lnD * lnD / (2.0 * lnd);
        out.u.push_back(u);
        out.force.push_back(0.5 * u * u / d);
    }
    return out;
}

CapacitanceModel log_toy_capacitance(Domain domain, DerivativeMode mode)
{
    if (!(domain.lo > 0.0) || !(domain.hi < 1.0))
        fail(ErrorCategory::Domain, "toy capacitance -ln d needs a domain inside (0, 1)");
    return CapacitanceModel::custom([](double d) { return -std::log(d); },
                                    [](double d) { return -1.0 / d; }, mode, domain);
}

double offset_invariance_check(const VaProfile& profile, const CapacitanceModel& model, double v0,
                               std::span<const double> d_grid, double d_max, const SolveOptions& options)
{
    const VaProfile moved = profile.shifted(v0);
    const VcSolution base = solve_vc(profile, model, d_grid, d_max, options);
    const VcSolution shifted = solve_vc(moved, model, d_grid, d_max, options);

    double worst = 0.0;
    for (double d : base.grid()) {
        const double f0 = minimized_background_force(profile, model, base, d);
        const double f1 = minimized_background_force(moved, model, shifted, d);
        const double scale = std::max(std::abs(f0), std::abs(f1));
        if (scale > 0.0)
            worst = std::max(worst, std::abs(f1 - f0) / scale);
    }
    return worst;
}

} // namespace vcbg
