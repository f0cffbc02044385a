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

#include "vcbg/capacitance.hpp"

#include "vcbg/constants.hpp"
#include "vcbg/errors.hpp"
#include "vcbg/numdiff.hpp"
#include "face_quadrature.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace vcbg {

std::string_view to_string(GeometryKind kind) noexcept
{
    switch (kind) {
    case GeometryKind::ParallelPlate: return "parallel_plate";
    case GeometryKind::SpherePlate: return "sphere_plate";
    }
    return "unknown";
}

PlateGeometry PlateGeometry::parallel_plate(double area)
{
    PlateGeometry g;
    g.kind = GeometryKind::ParallelPlate;
    g.plate_area = area;
    return g;
}

PlateGeometry PlateGeometry::sphere_plate(double radius)
{
    PlateGeometry g;
    g.kind = GeometryKind::SpherePlate;
    g.sphere_radius = radius;
    return g;
}

PlateGeometry PlateGeometry::with_screening(double lambda, double epsilon_r, int surfaces) const
{
    PlateGeometry g = *this;
    g.debye_length = lambda;
    g.relative_permittivity = epsilon_r;
    g.screened_surfaces = surfaces;
    return g;
}

void PlateGeometry::validate() const
{
    if (kind == GeometryKind::ParallelPlate && !(plate_area > 0.0))
        fail(ErrorCategory::Config, "plate_area must be > 0 for a parallel-plate geometry");
    if (kind == GeometryKind::SpherePlate && !(sphere_radius > 0.0))
        fail(ErrorCategory::Config, "sphere_radius must be > 0 for a sphere-plate geometry");
    if (!(debye_length >= 0.0))
        fail(ErrorCategory::Config, "debye_length must be >= 0");
    if (!(relative_permittivity >= 1.0))
        fail(ErrorCategory::Config, "relative_permittivity must be >= 1");
    if (screened_surfaces < 0 || screened_surfaces > 2)
        fail(ErrorCategory::Config, "screened_surfaces must be 0, 1 or 2");
}

double effective_gap(double d, const PlateGeometry& geometry)
{
    if (!(d > 0.0)) {
        std::ostringstream os;
        os << "separation must be positive, got d = " << d;
        fail(ErrorCategory::Domain, os.str());
    }
    return d + geometry.screened_surfaces * (geometry.debye_length / geometry.relative_permittivity);
}

CapacitanceModel::CapacitanceModel(const PlateGeometry& geometry, DerivativeMode mode, Domain domain)
    : geometry_(geometry), mode_(mode), domain_(domain)
{
    geometry.validate();
    if (!(domain.lo > 0.0) || !(domain.hi > domain.lo))
        fail(ErrorCategory::Config, "capacitance domain must satisfy 0 < d_min < d_max");
}

CapacitanceModel CapacitanceModel::custom(Function capacitance, Function derivative,
                                          DerivativeMode mode, Domain domain)
{
    if (!capacitance)
        fail(ErrorCategory::Config, "custom capacitance model needs C(d)");
    if (mode == DerivativeMode::Analytic && !derivative)
        fail(ErrorCategory::Config, "analytic derivative mode needs a C'(d) callable");
    if (!(domain.hi > domain.lo))
        fail(ErrorCategory::Config, "capacitance domain must satisfy d_min < d_max");
    CapacitanceModel m;
    m.custom_c_ = std::move(capacitance);
    m.custom_dc_ = std::move(derivative);
    m.mode_ = mode;
    m.domain_ = domain;
    return m;
}

void CapacitanceModel::check_in_domain(double d, std::string_view what) const
{
    if (!domain_.contains(d)) {
        std::ostringstream os;
        os << what << ": d = " << d << " outside model domain [" << domain_.lo << ", "
           << domain_.hi << "]";
        fail(ErrorCategory::Range, os.str());
    }
}

double CapacitanceModel::raw_capacitance(double d) const
{
    if (!geometry_)
        return custom_c_(d);
    const PlateGeometry& g = *geometry_;
    const double gap = effective_gap(d, g);
    if (g.kind == GeometryKind::ParallelPlate)
        return kEpsilon0 * g.plate_area / gap;
    const double R = g.sphere_radius;
    return 2.0 * kPi * kEpsilon0 * ((R + gap) * std::log1p(R / gap) - R);
}

double CapacitanceModel::capacitance(double d) const
{
    check_in_domain(d, "capacitance");
    return raw_capacitance(d);
}

double CapacitanceModel::derivative(double d) const
{
    return mode_ == DerivativeMode::Analytic ? analytic_derivative(d) : numeric_derivative(d);
}

double CapacitanceModel::analytic_derivative(double d) const
{
    check_in_domain(d, "capacitance derivative");
    if (!geometry_) {
        if (!custom_dc_)
            fail(ErrorCategory::Config, "custom model has no analytic derivative");
        return custom_dc_(d);
    }
    const PlateGeometry& g = *geometry_;
    const double gap = effective_gap(d, g);
    if (g.kind == GeometryKind::ParallelPlate)
        return -kEpsilon0 * g.plate_area / (gap * gap);
    const double R = g.sphere_radius;
    return 2.0 * kPi * kEpsilon0 * (std::log1p(R / gap) - R / gap);
}

double CapacitanceModel::numeric_derivative(double d) const
{
    const double h = kRelativeStep * d;
    if (!domain_.contains(d - h) || !domain_.contains(d + h)) {
        std::ostringstream os;
        os << "derivative stencil [" << d - h << ", " << d + h << "] leaves model domain ["
           << domain_.lo << ", " << domain_.hi << "]";
        fail(ErrorCategory::Range, os.str());
    }
    return numdiff::central_richardson([this](double x) { return raw_capacitance(x); }, d, h);
}

QuadratureResult CapacitanceModel::capacitance_by_quadrature(double d, double rel_tol) const
{
    check_in_domain(d, "capacitance quadrature");
    if (!geometry_ || geometry_->kind != GeometryKind::SpherePlate)
        fail(ErrorCategory::Config, "pairwise-additive quadrature applies to sphere-plate geometry only");

    const double R = geometry_->sphere_radius;
    const double g0 = effective_gap(d, *geometry_);
    // r = R sin(t) removes the square-root endpoint behaviour at r = R.
    auto integrand = [R, g0](double t) {
        const double s = std::sin(t);
        const double c = std::cos(t);
        const double sh = std::sin(0.5 * t);
        return R * R * s * c / (g0 + 2.0 * R * sh * sh);
    };

    const auto [integral, error] = detail::integrate_sphere_face(integrand, g0, R, rel_tol * 0.1);

    QuadratureResult out;
    out.value = 2.0 * kPi * kEpsilon0 * integral;
    out.error_estimate = 2.0 * kPi * kEpsilon0 * error;
    if (!(error <= rel_tol * std::abs(integral))) {
        std::ostringstream os;
        os << "pairwise-additive quadrature did not converge at d = " << d << ": estimate "
           << integral << ", error " << error << " (tolerance " << rel_tol << " relative)";
        fail(ErrorCategory::Numeric, os.str());
    }
    return out;
}

} // namespace vcbg
