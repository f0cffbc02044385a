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

#include <functional>
#include <optional>
#include <string_view>

namespace vcbg {

enum class GeometryKind
{
    ParallelPlate,
    SpherePlate,
};

/**
 * Physical configuration of the two facing electrodes.
 *
 * Lengths are in meters. The screening correction adds
 * screened_surfaces * debye_length / relative_permittivity to the gap.
 */
struct PlateGeometry
{
    GeometryKind kind = GeometryKind::SpherePlate;
    double plate_area = 0.0;    // m^2, ParallelPlate only
    double sphere_radius = 0.0; // m, SpherePlate only
    double debye_length = 0.0;
    double relative_permittivity = 1.0;
    int screened_surfaces = 2;

    static PlateGeometry parallel_plate(double area);
    static PlateGeometry sphere_plate(double radius);
    PlateGeometry with_screening(double lambda, double epsilon_r, int surfaces = 2) const;

    /// Throws Error(Config) if any field is out of range.
    void validate() const;
};

std::string_view to_string(GeometryKind kind) noexcept;

/// d + k * lambda / epsilon. Throws Error(Domain) for d <= 0.
double effective_gap(double d, const PlateGeometry& geometry);

enum class DerivativeMode
{
    Analytic,
    NumericCentral,
};

/// Closed interval of separations over which a model may be evaluated.
struct Domain
{
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double d) const noexcept { return d >= lo && d <= hi; }
};

/// Result of the pairwise-additive quadrature, with its error estimate.
struct QuadratureResult
{
    double value = 0.0;
    double error_estimate = 0.0;
};

/**
 * Evaluable C(d) and C'(d).
 *
 * Built either from a PlateGeometry (parallel-plate or pairwise-additive
 * sphere-plate formula) or from a user-supplied pair of callables, which is
 * how dimensionless test models such as C(d) = -ln d are expressed.
 * Immutable after construction.
 */
class CapacitanceModel
{
public:
    using Function = std::function<double(double)>;

    CapacitanceModel(const PlateGeometry& geometry, DerivativeMode mode, Domain domain);

    /// `derivative` may be empty, in which case only NumericCentral is allowed.
    static CapacitanceModel custom(Function capacitance, Function derivative,
                                   DerivativeMode mode, Domain domain);

    double capacitance(double d) const;
    double derivative(double d) const;

    /// Closed-form derivative (throws Config for custom models without one).
    double analytic_derivative(double d) const;
    /// Central difference, relative step 1e-5 * d, one Richardson level.
    double numeric_derivative(double d) const;

    /**
     * Direct quadrature of the pairwise-additive integral
     * 2 pi eps0 \int_0^R r dr / g(r). SpherePlate only.
     * Throws Error(Numeric) if the error estimate misses `rel_tol`.
     */
    QuadratureResult capacitance_by_quadrature(double d, double rel_tol = 1e-12) const;

    const std::optional<PlateGeometry>& geometry() const noexcept { return geometry_; }
    DerivativeMode derivative_mode() const noexcept { return mode_; }
    const Domain& domain() const noexcept { return domain_; }

    static constexpr double kRelativeStep = 1e-5;

private:
    CapacitanceModel() = default;
    void check_in_domain(double d, std::string_view what) const;
    double raw_capacitance(double d) const;

    std::optional<PlateGeometry> geometry_;
    Function custom_c_;
    Function custom_dc_;
    DerivativeMode mode_ = DerivativeMode::Analytic;
    Domain domain_;
};

} // namespace vcbg
