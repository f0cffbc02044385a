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
#include "vcbg/contact_potential.hpp"
#include "vcbg/force.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace vcbg {

/// Scientific notation, 17 significant digits.
std::string format_number(double v);

/// Strict double parse; throws Error(Parse) naming `where` on failure or non-finite input.
double parse_number(std::string_view text, std::string_view where);

/**
 * Reads a CSV whose first non-empty line equals `header` exactly. Returns the
 * numeric rows in file order. Blank lines are skipped.
 */
std::vector<std::vector<double>> read_csv(std::istream& in, std::string_view header,
                                          std::string_view source);
std::vector<std::vector<double>> read_csv(const std::filesystem::path& path, std::string_view header);

void write_csv(std::ostream& out, std::string_view header, const std::vector<std::vector<double>>& rows);
void write_csv(const std::filesystem::path& path, std::string_view header,
               const std::vector<std::vector<double>>& rows);

/// `d_m,va_V` file; rows sorted by d, duplicates and d <= 0 rejected.
std::vector<VaSample> load_va_measurements(const std::filesystem::path& path);
std::vector<VaSample> parse_va_measurements(std::istream& in, std::string_view source);

/// `d_m,F_N` file with the same normalization; provenance Measured.
ForceCurve load_force_measurements(const std::filesystem::path& path);
ForceCurve parse_force_measurements(std::istream& in, std::string_view source);

struct PipelineConfig
{
    PlateGeometry geometry = PlateGeometry::sphere_plate(150e-6);
    double d0_reference = 1e-6;
    double dmax_multiplier = 100.0;
    double integrator_step = 1e-3;
    Extrapolation extrapolation = Extrapolation::LogFit;
    DerivativeMode derivative_mode = DerivativeMode::Analytic;
    std::filesystem::path output_dir = "vcbg_out";

    void validate() const;
};

/**
 * Flat `key = value` file, `#` starts a comment. Keys: geometry,
 * plate_area, sphere_radius, debye_length, relative_permittivity,
 * screened_surfaces, d0_reference, dmax_multiplier, integrator_step,
 * extrapolation, derivative_mode, output_dir.
 */
PipelineConfig parse_config(std::istream& in, std::string_view source);
PipelineConfig load_config(const std::filesystem::path& path);

} // namespace vcbg
