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
#include "vcbg/interp.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace vcbg {

/// One measured minimizing voltage: separation (m) and voltage (V).
struct VaSample
{
    double d = 0.0;
    double v = 0.0;
};

/// v = a ln(d / d0) + b, fitted by ordinary least squares.
struct LogFit
{
    double a = 0.0;
    double b = 0.0;
    double d0 = 1.0;
    double rms_residual = 0.0;
};

/**
 * Least-squares fit of v = a ln(d/d0) + b.
 * Needs at least three distinct separations; throws InsufficientData or
 * DegenerateDesign otherwise.
 */
LogFit fit_log_profile(std::span<const VaSample> samples, double d0);

enum class Extrapolation
{
    Forbid,
    LogFit,
};

/**
 * The force-minimizing applied voltage V_a(d).
 *
 * Parametric profiles are a ln(d/d0) + b everywhere. Tabulated profiles use
 * a monotone cubic in (ln d, v) between samples and, when allowed, a log fit
 * over the outermost decade of samples outside them.
 */
class VaProfile
{
public:
    static VaProfile parametric(double a, double b, double d0);
    static VaProfile tabulated(std::vector<VaSample> samples, Extrapolation extrapolation);

    double operator()(double d) const { return evaluate(d); }
    double evaluate(double d) const;

    bool is_tabulated() const noexcept { return !samples_.empty(); }
    Extrapolation extrapolation() const noexcept { return extrapolation_; }
    const std::vector<VaSample>& samples() const noexcept { return samples_; }
    /// Sampled interval for tabulated profiles; nullopt for parametric ones.
    std::optional<std::pair<double, double>> sampled_range() const;
    /// Parametric coefficients (nullopt for tabulated).
    std::optional<LogFit> parameters() const;

    /// Profile with every voltage lowered by v0.
    VaProfile shifted(double v0) const;

private:
    VaProfile() = default;

    LogFit param_;
    std::vector<VaSample> samples_;
    MonotoneCubic spline_;
    LogFit below_;
    LogFit above_;
    Extrapolation extrapolation_ = Extrapolation::LogFit;
};

/// One integrator node: separation, V_c and dV_c/dd from the ODE right-hand side.
struct VcNode
{
    double d = 0.0;
    double vc = 0.0;
    double slope = 0.0;
};

struct IntegratorStats
{
    std::size_t steps = 0;
    double max_local_error = 0.0; // step-doubling estimate, volts
};

/**
 * Reconstructed weighted contact potential on a grid.
 *
 * `nodes` holds the full integrator trajectory (ascending in d), which is
 * used for cubic Hermite dense output between nodes. `grid` lists the
 * requested separations, each of which is an exact node.
 */
class VcSolution
{
public:
    VcSolution(std::vector<VcNode> nodes, std::vector<double> grid, double d_max,
               IntegratorStats stats, std::vector<std::string> warnings);

    double vc(double d) const;
    /// dV_c/dd.
    double slope(double d) const;

    std::vector<VcNode> grid_nodes() const;
    const std::vector<double>& grid() const noexcept { return grid_; }
    const std::vector<VcNode>& nodes() const noexcept { return nodes_; }
    double d_max() const noexcept { return d_max_; }
    const IntegratorStats& stats() const noexcept { return stats_; }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

private:
    std::pair<double, double> dense(double d) const; // (vc, slope)

    std::vector<VcNode> nodes_;
    std::vector<double> grid_;
    double d_max_;
    IntegratorStats stats_;
    std::vector<std::string> warnings_;
};

struct SolveOptions
{
    /// Fixed RK4 step in s = ln d.
    double step = 1e-3;
};

/// Integration range recommended for the boundary condition: d_max >= 100 d_min.
inline constexpr double kRecommendedDmaxMultiplier = 100.0;

/**
 * Integrates dV_c/dd = -(C'/C) (V_a + V_c) inward from V_c(d_max) = -V_a(d_max)
 * with classic RK4 in s = ln d, landing exactly on every grid point.
 */
VcSolution solve_vc(const VaProfile& profile, const CapacitanceModel& model,
                    std::span<const double> d_grid, double d_max, const SolveOptions& options = {});

/// C'(V_a + V_c) + C V_c' at d, with V_c and V_c' taken from the solution.
double minimization_residual(const VcSolution& solution, const VaProfile& profile,
                             const CapacitanceModel& model, double d);

/// Acceptance tolerance for |residual| relative to |C'| max(|V_a|, |V_c|).
inline constexpr double kResidualTolerance = 1e-6;

/// Largest residual over the solution grid, relative to |C'| max(|V_a|, |V_c|).
double max_relative_residual(const VcSolution& solution, const VaProfile& profile,
                             const CapacitanceModel& model);

/// Surface potential v1 (r / plate_radius)^n across the sphere face.
struct SurfaceModel
{
    double v1 = 0.0;
    double n = 0.0;
    double plate_radius = 0.0;
};

/**
 * Average of the surface potential weighted by the local parallel-plate
 * pressure 1/g(r)^2 over the facing hemisphere of a sphere-plate geometry.
 */
double effective_potential_from_surface_model(const SurfaceModel& surface,
                                              const PlateGeometry& geometry, double d);

} // namespace vcbg
