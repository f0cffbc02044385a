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

#include "vcbg/errors.hpp"
#include "vcbg/io.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>

namespace vcbg {
namespace {

ErrorCategory category_of(auto&& fn, std::string* message = nullptr)
{
    try {
        fn();
    } catch (const Error& e) {
        if (message)
            *message = e.what();
        return e.category();
    }
    ADD_FAILURE() << "expected vcbg::Error";
    return ErrorCategory::Consistency;
}

std::vector<VaSample> va_from(const std::string& text)
{
    std::istringstream in(text);
    return parse_va_measurements(in, "va.csv");
}

ForceCurve force_from(const std::string& text)
{
    std::istringstream in(text);
    return parse_force_measurements(in, "force.csv");
}

TEST(LoadVa, ParsesRowsInSiUnits)
{
    const auto s = va_from("d_m,va_V\n1e-6,0.005\n1e-5,0.0119\n");
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s[0].d, 1e-6);
    EXPECT_EQ(s[0].v, 0.005);
    EXPECT_EQ(s[1].d, 1e-5);
    EXPECT_EQ(s[1].v, 0.0119);
}

TEST(LoadVa, EmptyDataSection)
{
    EXPECT_EQ(category_of([] { va_from("d_m,va_V\n\n"); }), ErrorCategory::InsufficientData);
}

TEST(LoadVa, SortsRows)
{
    const auto s = va_from("d_m,va_V\r\n3e-6,3\r\n1e-6,1\r\n2e-6,2\r\n");
    ASSERT_EQ(s.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i)
        EXPECT_EQ(s[i].v, static_cast<double>(i + 1));
}

TEST(LoadVa, RejectsBadRows)
{
    std::string msg;
    EXPECT_EQ(category_of([] { va_from("d_m,va_V\n1e-6,1\n1e-6,2\n"); }, &msg), ErrorCategory::Parse);
    EXPECT_NE(msg.find("duplicate"), std::string::npos);
    EXPECT_EQ(category_of([] { va_from("d_m,va_V\n0,1\n"); }), ErrorCategory::Parse);
    EXPECT_EQ(category_of([] { va_from("d_m,va_V\n-1e-6,1\n"); }), ErrorCategory::Parse);
    EXPECT_EQ(category_of([] { va_from("d,va\n1e-6,1\n"); }), ErrorCategory::Parse);
    EXPECT_EQ(category_of([] { va_from("d_m,va_V\n1e-6\n"); }), ErrorCategory::Parse);
    EXPECT_EQ(category_of([] { va_from("d_m,va_V\n1e-6,1,2\n"); }), ErrorCategory::Parse);
    EXPECT_EQ(category_of([] { va_from("d_m,va_V\n1e-6,abc\n"); }), ErrorCategory::Parse);
}

TEST(LoadForce, ParsesAndNormalizes)
{
    const auto two = force_from("d_m,F_N\n1e-6,-1e-9\n2e-6,-2e-10\n");
    EXPECT_EQ(two.samples.size(), 2u);
    EXPECT_EQ(two.provenance, Provenance::Measured);

    const auto desc = force_from("d_m,F_N\n3e-6,3\n2e-6,2\n1e-6,1\n");
    EXPECT_EQ(desc.distances(), (std::vector<double>{1e-6, 2e-6, 3e-6}));
    EXPECT_EQ(desc.forces(), (std::vector<double>{1, 2, 3}));
}

TEST(LoadForce, NanNamesTheRow)
{
    std::string msg;
    EXPECT_EQ(category_of([] { force_from("d_m,F_N\n1e-6,1\n2e-6,nan\n"); }, &msg), ErrorCategory::Parse);
    EXPECT_NE(msg.find("force.csv:3"), std::string::npos) << msg;
}

TEST(LoadFromDisk, BundledDatasetsParse)
{
    EXPECT_EQ(load_va_measurements("data/parallel_plate_va.csv").size(), 50u);
    EXPECT_EQ(load_force_measurements("data/parallel_plate_force.csv").samples.size(), 40u);
    EXPECT_EQ(category_of([] { load_va_measurements("data/missing.csv"); }), ErrorCategory::Parse);
}

TEST(NumberFormat, SeventeenDigitsRoundTripBitExactly)
{
    std::mt19937_64 rng(99);
    for (int i = 0; i < 2000; ++i) {
        const auto bits = rng();
        const double v = std::bit_cast<double>(bits);
        if (!std::isfinite(v))
            continue;
        const auto text = format_number(v);
        EXPECT_EQ(std::bit_cast<std::uint64_t>(parse_number(text, "test")), bits) << text;
    }
    EXPECT_EQ(format_number(1e-6), "9.9999999999999995e-07");
}

TEST(Csv, WriteThenRead)
{
    const std::vector<std::vector<double>> rows{{1e-6, -0.1, 1.0 / 3.0}, {2e-6, 5e300, -7e-300}};
    std::stringstream io;
    write_csv(io, "d_m,vc_V,u_V", rows);
    EXPECT_EQ(read_csv(io, "d_m,vc_V,u_V", "mem"), rows);
}

TEST(Config, ParsesAllKeys)
{
    std::istringstream in(R"(# comment line
geometry = parallel_plate   # trailing comment
plate_area = 2e-4
sphere_radius = 1e-4
debye_length = 0.68e-6
relative_permittivity = 16
screened_surfaces = 1
d0_reference = 2e-6
dmax_multiplier = 150
integrator_step = 5e-4
extrapolation = forbid
derivative_mode = numeric
output_dir = results/run1
)");
    const auto cfg = parse_config(in, "test.cfg");
    EXPECT_EQ(cfg.geometry.kind, GeometryKind::ParallelPlate);
    EXPECT_EQ(cfg.geometry.plate_area, 2e-4);
    EXPECT_EQ(cfg.geometry.sphere_radius, 1e-4);
    EXPECT_EQ(cfg.geometry.debye_length, 0.68e-6);
    EXPECT_EQ(cfg.geometry.relative_permittivity, 16.0);
    EXPECT_EQ(cfg.geometry.screened_surfaces, 1);
    EXPECT_EQ(cfg.d0_reference, 2e-6);
    EXPECT_EQ(cfg.dmax_multiplier, 150.0);
    EXPECT_EQ(cfg.integrator_step, 5e-4);
    EXPECT_EQ(cfg.extrapolation, Extrapolation::Forbid);
    EXPECT_EQ(cfg.derivative_mode, DerivativeMode::NumericCentral);
    EXPECT_EQ(cfg.output_dir, std::filesystem::path("results/run1"));
}

TEST(Config, Defaults)
{
    std::istringstream in("");
    const auto cfg = parse_config(in, "empty.cfg");
    EXPECT_EQ(cfg.d0_reference, 1e-6);
    EXPECT_EQ(cfg.dmax_multiplier, 100.0);
    EXPECT_EQ(cfg.integrator_step, 1e-3);
    EXPECT_EQ(cfg.extrapolation, Extrapolation::LogFit);
    EXPECT_EQ(cfg.geometry.screened_surfaces, 2);
}

TEST(Config, Errors)
{
    auto parse = [](const char* text) {
        std::istringstream in(text);
        return parse_config(in, "bad.cfg");
    };
    EXPECT_EQ(category_of([&] { parse("colour = blue\n"); }), ErrorCategory::Config);
    EXPECT_EQ(category_of([&] { parse("integrator_step = 0.5\n"); }), ErrorCategory::Config);
    EXPECT_EQ(category_of([&] { parse("integrator_step = 0\n"); }), ErrorCategory::Config);
    EXPECT_EQ(category_of([&] { parse("dmax_multiplier = 0.5\n"); }), ErrorCategory::Config);
    EXPECT_EQ(category_of([&] { parse("screened_surfaces = 1.5\n"); }), ErrorCategory::Config);
    EXPECT_EQ(category_of([&] { parse("geometry = cylinder\n"); }), ErrorCategory::Config);
    EXPECT_EQ(category_of([&] { parse("plate_area\n"); }), ErrorCategory::Config);
    EXPECT_EQ(category_of([&] { parse("plate_area = big\n"); }), ErrorCategory::Config);
}

} // namespace
} // namespace vcbg
