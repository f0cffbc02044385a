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

#include "vcbg/io.hpp"

#include "vcbg/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace vcbg {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string location(std::string_view source, std::size_t line)
{
    std::ostringstream os;
    os << source << ":" << line;
    return os.str();
}

std::ifstream open_input(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorCategory::Parse, "cannot open " + path.string());
    return in;
}

// Sort by d, reject d <= 0 and duplicates. `rows` carry (d, value, line).
struct NumberedRow
{
    double d;
    double value;
    std::size_t line;
};

void normalize(std::vector<NumberedRow>& rows, std::string_view source)
{
    if (rows.empty())
        fail(ErrorCategory::InsufficientData, std::string(source) + ": no data rows");
    for (const auto& r : rows)
        if (!(r.d > 0.0))
            fail(ErrorCategory::Parse, location(source, r.line) + ": separation must be positive");
    std::stable_sort(rows.begin(), rows.end(), [](const NumberedRow& a, const NumberedRow& b) { return a.d < b.d; });
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].d == rows[i - 1].d) {
            std::ostringstream os;
            os << location(source, rows[i].line) << ": duplicate separation d = " << format_number(rows[i].d)
               << " (also on line " << rows[i - 1].line << ")";
            fail(ErrorCategory::Parse, os.str());
        }
}

struct CsvRow
{
    std::vector<double> values;
    std::size_t line;
};

std::vector<CsvRow> read_rows(std::istream& in, std::string_view header, std::string_view source)
{
    const auto columns = static_cast<std::size_t>(std::count(header.begin(), header.end(), ',')) + 1;
    std::vector<CsvRow> rows;
    std::string line;
    std::size_t lineno = 0;
    bool seen_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = trim(line);
        if (t.empty())
            continue;
        if (!seen_header) {
            if (t != header)
                fail(ErrorCategory::Parse, location(source, lineno) + ": expected header '"
                                               + std::string(header) + "'");
            seen_header = true;
            continue;
        }
        CsvRow row{{}, lineno};
        std::size_t start = 0;
        while (true) {
            const auto comma = t.find(',', start);
            row.values.push_back(parse_number(t.substr(start, comma - start), location(source, lineno)));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        if (row.values.size() != columns)
            fail(ErrorCategory::Parse, location(source, lineno) + ": expected " + std::to_string(columns)
                                           + " comma-separated fields");
        rows.push_back(std::move(row));
    }
    if (!seen_header)
        fail(ErrorCategory::Parse, std::string(source) + ": missing header '" + std::string(header) + "'");
    return rows;
}

std::vector<NumberedRow> read_pairs(std::istream& in, std::string_view header, std::string_view source)
{
    std::vector<NumberedRow> out;
    for (const auto& r : read_rows(in, header, source))
        out.push_back({r.values[0], r.values[1], r.line});
    return out;
}

} // namespace

std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

double parse_number(std::string_view text, std::string_view where)
{
    const auto t = trim(text);
    double value = 0.0;
    const auto* first = t.data();
    const auto* last = t.data() + t.size();
    if (!t.empty() && *first == '+')
        ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (t.empty() || ec != std::errc() || ptr != last)
        fail(ErrorCategory::Parse, std::string(where) + ": cannot parse number '" + std::string(t) + "'");
    if (!std::isfinite(value))
        fail(ErrorCategory::Parse, std::string(where) + ": non-finite value '" + std::string(t) + "'");
    return value;
}

std::vector<std::vector<double>> read_csv(std::istream& in, std::string_view header, std::string_view source)
{
    std::vector<std::vector<double>> out;
    for (auto& r : read_rows(in, header, source))
        out.push_back(std::move(r.values));
    return out;
}

std::vector<std::vector<double>> read_csv(const std::filesystem::path& path, std::string_view header)
{
    auto in = open_input(path);
    return read_csv(in, header, path.string());
}

void write_csv(std::ostream& out, std::string_view header, const std::vector<std::vector<double>>& rows)
{
    out << header << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out << ',';
            out << format_number(row[i]);
        }
        out << '\n';
    }
}

void write_csv(const std::filesystem::path& path, std::string_view header,
               const std::vector<std::vector<double>>& rows)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        fail(ErrorCategory::Config, "cannot write " + path.string());
    write_csv(out, header, rows);
}

std::vector<VaSample> parse_va_measurements(std::istream& in, std::string_view source)
{
    auto rows = read_pairs(in, "d_m,va_V", source);
    normalize(rows, source);
    std::vector<VaSample> out;
    out.reserve(rows.size());
    for (const auto& r : rows)
        out.push_back({r.d, r.value});
    return out;
}

std::vector<VaSample> load_va_measurements(const std::filesystem::path& path)
{
    auto in = open_input(path);
    return parse_va_measurements(in, path.string());
}

ForceCurve parse_force_measurements(std::istream& in, std::string_view source)
{
    auto rows = read_pairs(in, "d_m,F_N", source);
    normalize(rows, source);
    ForceCurve curve;
    curve.provenance = Provenance::Measured;
    for (const auto& r : rows)
        curve.samples.push_back({r.d, r.value});
    return curve;
}

ForceCurve load_force_measurements(const std::filesystem::path& path)
{
    auto in = open_input(path);
    return parse_force_measurements(in, path.string());
}

void PipelineConfig::validate() const
{
    geometry.validate();
    if (!(d0_reference > 0.0))
        fail(ErrorCategory::Config, "d0_reference must be positive");
    if (!(dmax_multiplier >= 1.0))
        fail(ErrorCategory::Config, "dmax_multiplier must be >= 1");
    if (!(integrator_step > 0.0 && integrator_step <= 0.1))
        fail(ErrorCategory::Config, "integrator_step must lie in (0, 0.1]");
}

PipelineConfig parse_config(std::istream& in, std::string_view source)
{
    PipelineConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view t = line;
        if (const auto hash = t.find('#'); hash != std::string_view::npos)
            t = t.substr(0, hash);
        t = trim(t);
        if (t.empty())
            continue;
        const auto eq = t.find('=');
        const auto where = location(source, lineno);
        if (eq == std::string_view::npos)
            fail(ErrorCategory::Config, where + ": expected 'key = value'");
        const auto key = trim(t.substr(0, eq));
        const auto value = trim(t.substr(eq + 1));
        if (value.empty())
            fail(ErrorCategory::Config, where + ": empty value for '" + std::string(key) + "'");

        auto number = [&] {
            try {
                return parse_number(value, where);
            } catch (const Error& e) {
                fail(ErrorCategory::Config, e.what());
            }
        };

        if (key == "geometry") {
            if (value == "parallel_plate")
                cfg.geometry.kind = GeometryKind::ParallelPlate;
            else if (value == "sphere_plate")
                cfg.geometry.kind = GeometryKind::SpherePlate;
            else
                fail(ErrorCategory::Config, where + ": geometry must be parallel_plate or sphere_plate");
        } else if (key == "plate_area") {
            cfg.geometry.plate_area = number();
        } else if (key == "sphere_radius") {
            cfg.geometry.sphere_radius = number();
        } else if (key == "debye_length") {
            cfg.geometry.debye_length = number();
        } else if (key == "relative_permittivity") {
            cfg.geometry.relative_permittivity = number();
        } else if (key == "screened_surfaces") {
            const double k = number();
            if (k != std::floor(k))
                fail(ErrorCategory::Config, where + ": screened_surfaces must be an integer");
            cfg.geometry.screened_surfaces = static_cast<int>(k);
        } else if (key == "d0_reference") {
            cfg.d0_reference = number();
        } else if (key == "dmax_multiplier") {
            cfg.dmax_multiplier = number();
        } else if (key == "integrator_step") {
            cfg.integrator_step = number();
        } else if (key == "extrapolation") {
            if (value == "logfit")
                cfg.extrapolation = Extrapolation::LogFit;
            else if (value == "forbid")
                cfg.extrapolation = Extrapolation::Forbid;
            else
                fail(ErrorCategory::Config, where + ": extrapolation must be logfit or forbid");
        } else if (key == "derivative_mode") {
            if (value == "analytic")
                cfg.derivative_mode = DerivativeMode::Analytic;
            else if (value == "numeric")
                cfg.derivative_mode = DerivativeMode::NumericCentral;
            else
                fail(ErrorCategory::Config, where + ": derivative_mode must be analytic or numeric");
        } else if (key == "output_dir") {
            cfg.output_dir = std::string(value);
        } else {
            fail(ErrorCategory::Config, where + ": unknown key '" + std::string(key) + "'");
        }
    }
    cfg.validate();
    return cfg;
}

PipelineConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorCategory::Config, "cannot open config " + path.string());
    return parse_config(in, path.string());
}

} // namespace vcbg
