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

#include "vcbg/contact_potential.hpp"

#include "vcbg/constants.hpp"
#include "vcbg/errors.hpp"

#include "face_quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace vcbg {

namespace {

std::string format_length(double d)
{
    std::ostringstream os;
    os.precision(6);
    os << d << " m";
    return os.str();
}

// Outermost samples spanning one decade, at least three of them.
std::vector<VaSample> outer_decade(const std::vector<VaSample>& s, bool upper)
{
    std::vector<VaSample> out;
    const std::size_t n = s.size();
    if (upper) {
        const double cut = s.back().d / 10.0;
        for (std::size_t i = n; i-- > 0;)
            if (s[i].d >= cut || out.size() < 3)
                out.push_back(s[i]);
        std::reverse(out.begin(), out.end());
    } else {
        const double cut = s.front().d * 10.0;
        for (std::size_t i = 0; i < n; ++i)
            if (s[i].d <= cut || out.size() < 3)
                out.push_back(s[i]);
    }
    return out;
}

} // namespace

LogFit fit_log_profile(std::span<const VaSample> samples, double d0)
{
    if (!(d0 > 0.0))
        fail(ErrorCategory::Config, "reference length d0 must be positive");
    for (const auto& s : samples)
        if (!(s.d > 0.0))
            fail(ErrorCategory::Domain, "log fit needs positive separations, got d = " + format_length(s.d));

    std::vector<double> ds;
    ds.reserve(samples.size());
    for (const auto& s : samples)
        ds.push_back(s.d);
    std::sort(ds.begin(), ds.end());
    const auto distinct = static_cast<std::size_t>(std::unique(ds.begin(), ds.end()) - ds.begin());
    if (samples.size() >= 3 && distinct == 1)
        fail(ErrorCategory::DegenerateDesign, "log fit: all separations are equal");
    if (distinct < 3)
        fail(ErrorCategory::InsufficientData, "log fit needs at least 3 distinct separations");

    const double n = static_cast<double>(samples.size());
    double xbar = 0.0, vbar = 0.0;
    for (const auto& s : samples) {
        xbar += std::log(s.d / d0);
        vbar += s.v;
    }
    xbar /= n;
    vbar /= n;
    double sxx = 0.0, sxv = 0.0;
    for (const auto& s : samples) {
        const double dx = std::log(s.d / d0) - xbar;
        sxx += dx * dx;
        sxv += dx * (s.v - vbar);
    }

    LogFit fit;
    fit.d0 = d0;
    fit.a = sxv / sxx;
    fit.b = vbar - fit.a * xbar;
    double ss = 0.0;
    for (const auto& s : samples) {
        const double r = s.v - (fit.a * std::log(s.d / d0) + fit.b);
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / n);
    return fit;
}

VaProfile VaProfile::parametric(double a, double b, double d0)
{
    if (!(d0 > 0.0))
        fail(ErrorCategory::Config, "parametric V_a profile needs d0 > 0");
    VaProfile p;
    p.param_ = LogFit{a, b, d0, 0.0};
    return p;
}

VaProfile VaProfile::tabulated(std::vector<VaSample> samples, Extrapolation extrapolation)
{
    if (samples.size() < 4)
        fail(ErrorCategory::InsufficientData, "tabulated V_a profile needs at least 4 samples");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!(samples[i].d > 0.0))
            fail(ErrorCategory::Domain, "tabulated V_a profile: non-positive d = " + format_length(samples[i].d));
        if (i > 0 && !(samples[i].d > samples[i - 1].d))
            fail(ErrorCategory::Config, "tabulated V_a profile: d must be strictly increasing");
    }

    VaProfile p;
    p.samples_ = std::move(samples);
    p.extrapolation_ = extrapolation;
    std::vector<double> x, y;
    for (const auto& s : p.samples_) {
        x.push_back(std::log(s.d));
        y.push_back(s.v);
    }
    p.spline_ = MonotoneCubic(x, y);
    const auto lo = outer_decade(p.samples_, false);
    const auto hi = outer_decade(p.samples_, true);
    p.below_ = fit_log_profile(lo, p.samples_.front().d);
    p.above_ = fit_log_profile(hi, p.samples_.back().d);
    return p;
}

double VaProfile::evaluate(double d) const
{
    if (!(d > 0.0))
        fail(ErrorCategory::Domain, "V_a evaluated at non-positive d = " + format_length(d));
    if (!is_tabulated())
        return param_.a * std::log(d / param_.d0) + param_.b;

    const double lo = samples_.front().d;
    const double hi = samples_.back().d;
    if (d >= lo && d <= hi)
        return spline_(std::log(d));
    if (extrapolation_ == Extrapolation::Forbid) {
        std::ostringstream os;
        os << "V_a requested at d = " << d << " m outside measured range [" << lo << ", " << hi
           << "] m with extrapolation forbidden";
        fail(ErrorCategory::Range, os.str());
    }
    const LogFit& f = d < lo ? below_ : above_;
    return f.a * std::log(d / f.d0) + f.b;
}

std::optional<std::pair<double, double>> VaProfile::sampled_range() const
{
    if (!is_tabulated())
        return std::nullopt;
    return std::make_pair(samples_.front().d, samples_.back().d);
}

std::optional<LogFit> VaProfile::parameters() const
{
    if (is_tabulated())
        return std::nullopt;
    return param_;
}

VaProfile VaProfile::shifted(double v0) const
{
    if (!is_tabulated())
        return parametric(param_.a, param_.b - v0, param_.d0);
    std::vector<VaSample> s = samples_;
    for (auto& x : s)
        x.v -= v0;
    return tabulated(std::move(s), extrapolation_);
}

VcSolution::VcSolution(std::vector<VcNode> nodes, std::vector<double> grid, double d_max,
                       IntegratorStats stats, std::vector<std::string> warnings)
    : nodes_(std::move(nodes)), grid_(std::move(grid)), d_max_(d_max), stats_(stats),
      warnings_(std::move(warnings))
{
    if (nodes_.empty())
        fail(ErrorCategory::Config, "V_c solution has no nodes");
    for (std::size_t i = 1; i < nodes_.size(); ++i)
        if (!(nodes_[i].d > nodes_[i - 1].d))
            fail(ErrorCategory::Config, "V_c solution nodes must be strictly increasing in d");
}

std::pair<double, double> VcSolution::dense(double d) const
{
    if (d < nodes_.front().d || d > nodes_.back().d) {
        std::ostringstream os;
        os << "d = " << d << " m outside V_c solution range [" << nodes_.front().d << ", "
           << nodes_.back().d << "] m";
        fail(ErrorCategory::Range, os.str());
    }
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), d,
                               [](const VcNode& n, double x) { return n.d < x; });
    if (it != nodes_.end() && it->d == d)
        return {it->vc, it->slope};

    // Cubic Hermite in s = ln d using dV_c/ds = d V_c'.
    const VcNode& r = *it;
    const VcNode& l = *(it - 1);
    const double s0 = std::log(l.d), s1 = std::log(r.d);
    const double h = s1 - s0;
    const double t = (std::log(d) - s0) / h;
    const double m0 = l.d * l.slope, m1 = r.d * r.slope;
    const double t2 = t * t, t3 = t2 * t;
    const double vc = (2 * t3 - 3 * t2 + 1) * l.vc + (t3 - 2 * t2 + t) * h * m0
                    + (-2 * t3 + 3 * t2) * r.vc + (t3 - t2) * h * m1;
    const double dvc_ds = (6 * t2 - 6 * t) / h * l.vc + (3 * t2 - 4 * t + 1) * m0
                        + (-6 * t2 + 6 * t) / h * r.vc + (3 * t2 - 2 * t) * m1;
    return {vc, dvc_ds / d};
}

double VcSolution::vc(double d) const { return dense(d).first; }

double VcSolution::slope(double d) const { return dense(d).second; }

std::vector<VcNode> VcSolution::grid_nodes() const
{
    std::vector<VcNode> out;
    out.reserve(grid_.size());
    for (double d : grid_) {
        const auto [vc, slope] = dense(d);
        out.push_back({d, vc, slope});
    }
    return out;
}

VcSolution solve_vc(const VaProfile& profile, const CapacitanceModel& model,
                    std::span<const double> d_grid, double d_max, const SolveOptions& options)
{
    if (!(options.step > 0.0) || !std::isfinite(options.step))
        fail(ErrorCategory::Config, "integrator step must be positive and finite");
    if (d_grid.empty())
        fail(ErrorCategory::InsufficientData, "solve_vc needs a non-empty grid");

    std::vector<double> grid(d_grid.begin(), d_grid.end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    if (!(grid.front() > 0.0))
        fail(ErrorCategory::Domain, "grid separations must be positive");
    if (!(d_max >= grid.back())) {
        std::ostringstream os;
        os << "d_max = " << d_max << " m is below the largest grid point " << grid.back() << " m";
        fail(ErrorCategory::Domain, os.str());
    }
    for (double d : {grid.front(), d_max})
        if (!model.domain().contains(d)) {
            std::ostringstream os;
            os << "separation " << d << " m outside capacitance domain [" << model.domain().lo
               << ", " << model.domain().hi << "] m";
            fail(ErrorCategory::Range, os.str());
        }

    std::vector<std::string> warnings;
    if (d_max < kRecommendedDmaxMultiplier * grid.front()) {
        std::ostringstream os;
        os.precision(6);
        os << "d_max = " << d_max << " m is less than 100x the closest grid separation ("
           << grid.front() << " m); the boundary condition may not hold";
        warnings.push_back(os.str());
    }
    if (auto range = profile.sampled_range()) {
        std::ostringstream os;
        os.precision(6);
        if (d_max > range->second) {
            os << "measured V_a stops at " << range->second << " m, short of d_max = " << d_max
               << " m; boundary value extrapolated by a log fit over the outermost decade";
            warnings.push_back(os.str());
        }
        if (grid.front() < range->first) {
            std::ostringstream lo;
            lo.precision(6);
            lo << "grid starts at " << grid.front() << " m, below the smallest measured separation "
               << range->first << " m; V_a extrapolated by a log fit";
            warnings.push_back(lo.str());
        }
    }

    double va_max = 0.0;
    try {
        va_max = profile(d_max);
    } catch (const Error& e) {
        if (e.category() != ErrorCategory::Range)
            throw;
        fail(ErrorCategory::Range, std::string("boundary condition requires large-separation data or "
                                               "LogFit extrapolation (")
                                       + e.what() + ")");
    }

    // dV_c/ds = -d (C'/C) (V_a + V_c)
    auto rhs_ds = [&](double d, double vc) {
        return -d * model.derivative(d) / model.capacitance(d) * (profile(d) + vc);
    };
    auto rk4 = [&](double s, double vc, double h) {
        const double k1 = rhs_ds(std::exp(s), vc);
        const double k2 = rhs_ds(std::exp(s + 0.5 * h), vc + 0.5 * h * k1);
        const double k3 = rhs_ds(std::exp(s + 0.5 * h), vc + 0.5 * h * k2);
        const double k4 = rhs_ds(std::exp(s + h), vc + h * k3);
        return vc + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    };

    IntegratorStats stats;
    std::vector<VcNode> nodes;
    double d = d_max;
    double vc = -va_max;
    nodes.push_back({d, vc, rhs_ds(d, vc) / d});

    for (auto target = grid.rbegin(); target != grid.rend(); ++target) {
        if (*target >= d)
            continue;
        const double s_from = std::log(d);
        const double span = s_from - std::log(*target);
        const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(span / options.step - 1e-9)));
        const double h = -span / static_cast<double>(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double s = s_from + static_cast<double>(k) * h;
            const double full = rk4(s, vc, h);
            const double half = rk4(s + 0.5 * h, rk4(s, vc, 0.5 * h), 0.5 * h);
            stats.max_local_error = std::max(stats.max_local_error, std::abs(half - full) / 15.0);
            vc = full;
            d = (k + 1 == n) ? *target : std::exp(s + h);
            nodes.push_back({d, vc, rhs_ds(d, vc) / d});
            ++stats.steps;
        }
    }

    std::reverse(nodes.begin(), nodes.end());
    return VcSolution(std::move(nodes), std::move(grid), d_max, stats, std::move(warnings));
}

double minimization_residual(const VcSolution& solution, const VaProfile& profile,
                             const CapacitanceModel& model, double d)
{
    const double vc = solution.vc(d);
    const double slope = solution.slope(d);
    return model.derivative(d) * (profile(d) + vc) + model.capacitance(d) * slope;
}

double max_relative_residual(const VcSolution& solution, const VaProfile& profile,
                             const CapacitanceModel& model)
{
    double worst = 0.0;
    for (double d : solution.grid()) {
        const double res = minimization_residual(solution, profile, model, d);
        const double scale = std::abs(model.derivative(d))
                           * std::max(std::abs(profile(d)), std::abs(solution.vc(d)));
        if (scale > 0.0)
            worst = std::max(worst, std::abs(res) / scale);
        else if (res != 0.0)
            worst = std::max(worst, std::numeric_limits<double>::infinity());
    }
    return worst;
}

double effective_potential_from_surface_model(const SurfaceModel& surface,
                                              const PlateGeometry& geometry, double d)
{
    if (geometry.kind != GeometryKind::SpherePlate)
        fail(ErrorCategory::Config, "surface-model demonstrator needs a sphere-plate geometry");
    geometry.validate();
    if (!(surface.plate_radius > 0.0))
        fail(ErrorCategory::Config, "surface model plate_radius must be positive");
    if (surface.v1 == 0.0)
        return 0.0;

    const double R = geometry.sphere_radius;
    const double g0 = effective_gap(d, geometry);
    const double n = surface.n;
    const double scale = R / surface.plate_radius;
    // r = R sin(t); weight 1/g^2 with g = g0 + R (1 - cos t), 1 - cos t = 2 sin^2(t/2)
    auto weight = [=](double t) {
        const double c = std::cos(t);
        const double sh = std::sin(0.5 * t);
        const double g = g0 + 2.0 * R * sh * sh;
        return std::sin(t) * c / (g * g);
    };
    auto potential = [=](double t) { return std::pow(scale * std::sin(t), n); };

    constexpr double tol = 1e-12;
    const auto num = detail::integrate_sphere_face([&](double t) { return weight(t) * potential(t); }, g0, R, tol);
    const auto den = detail::integrate_sphere_face(weight, g0, R, tol);
    if (!(num.error <= 1e-10 * std::abs(num.value)) || !(den.error <= 1e-10 * std::abs(den.value))) {
        std::ostringstream os;
        os << "surface-model quadrature did not converge at d = " << d << " m (errors " << num.error << ", "
           << den.error << ")";
        fail(ErrorCategory::Numeric, os.str());
    }
    return surface.v1 * num.value / den.value;
}

} // namespace vcbg
