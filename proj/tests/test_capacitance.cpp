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
#include "vcbg/verify.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace vcbg {
namespace {

constexpr double um = 1e-6;

ErrorCategory category_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.category();
    }
    ADD_FAILURE() << "expected vcbg::Error";
    return ErrorCategory::Consistency;
}

TEST(EffectiveGap, Examples)
{
    const auto base = PlateGeometry::sphere_plate(150 * um);
    EXPECT_DOUBLE_EQ(effective_gap(1 * um, base.with_screening(0.0, 16.0, 2)), 1 * um);
    EXPECT_NEAR(effective_gap(1 * um, base.with_screening(0.68 * um, 16.0, 2)), 1.085 * um, 1e-18);
    EXPECT_NEAR(effective_gap(1 * um, base.with_screening(0.68 * um, 16.0, 1)), 1.0425 * um, 1e-18);
}

TEST(EffectiveGap, IdentityWithoutScreeningAndMonotone)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> logd(std::log(1e-9), std::log(1e-2));
    const auto plain = PlateGeometry::parallel_plate(1.0);
    const auto screened = plain.with_screening(0.68 * um, 16.0, 2);
    for (int i = 0; i < 200; ++i) {
        const double d = std::exp(logd(rng));
        EXPECT_EQ(effective_gap(d, plain), d);
        EXPECT_LT(effective_gap(d, screened), effective_gap(d * 1.001, screened));
    }
}

TEST(EffectiveGap, RejectsNonPositiveSeparation)
{
    const auto g = PlateGeometry::parallel_plate(1.0);
    EXPECT_EQ(category_of([&] { effective_gap(0.0, g); }), ErrorCategory::Domain);
    EXPECT_EQ(category_of([&] { effective_gap(-1e-6, g); }), ErrorCategory::Domain);
}

TEST(Geometry, ValidationRejectsBadFields)
{
    EXPECT_EQ(category_of([] { PlateGeometry::parallel_plate(0.0).validate(); }), ErrorCategory::Config);
    EXPECT_EQ(category_of([] { PlateGeometry::sphere_plate(-1.0).validate(); }), ErrorCategory::Config);
    EXPECT_EQ(category_of([] { PlateGeometry::sphere_plate(1.0).with_screening(-1.0, 16.0).validate(); }),
              ErrorCategory::Config);
    EXPECT_EQ(category_of([] { PlateGeometry::sphere_plate(1.0).with_screening(0.0, 0.5).validate(); }),
              ErrorCategory::Config);
    EXPECT_EQ(category_of([] { PlateGeometry::sphere_plate(1.0).with_screening(0.0, 16.0, 3).validate(); }),
              ErrorCategory::Config);
}

TEST(ParallelPlate, UnitAreaUnitGapIsEpsilon0)
{
    const CapacitanceModel m(PlateGeometry::parallel_plate(1.0), DerivativeMode::Analytic, {0.1, 10.0});
    EXPECT_DOUBLE_EQ(m.capacitance(1.0), kEpsilon0);
    EXPECT_NEAR(m.capacitance(1.0), 8.854e-12, 1e-15);
}

TEST(ParallelPlate, InverseDistanceScaling)
{
    const CapacitanceModel m(PlateGeometry::parallel_plate(1e-4), DerivativeMode::Analytic, {0.1 * um, 1.0});
    for (double d : {1 * um, 7 * um, 33 * um})
        EXPECT_NEAR(m.capacitance(2 * d), m.capacitance(d) / 2, 1e-15 * m.capacitance(d));
}

TEST(ParallelPlate, NumericDerivativeMatchesAnalytic)
{
    const auto g = PlateGeometry::parallel_plate(1e-4);
    const CapacitanceModel m(g, DerivativeMode::NumericCentral, {1 * um, 100 * um});
    const double d = 10 * um;
    const double exact = -kEpsilon0 * 1e-4 / (d * d);
    EXPECT_NEAR(m.analytic_derivative(d), exact, 1e-14 * std::abs(exact));
    EXPECT_LT(std::abs(m.numeric_derivative(d) - exact) / std::abs(exact), 1e-8);
    EXPECT_EQ(m.derivative(d), m.numeric_derivative(d));
}

TEST(SpherePlate, ClosedFormMatchesHighPrecisionOracle)
{
    // tests/oracles/sphere_capacitance.py (mpmath, 50 digits)
    const CapacitanceModel m(PlateGeometry::sphere_plate(150 * um), DerivativeMode::Analytic, {0.01 * um, 1e-3});
    const double oracle = 2.126652649859295625e-14;
    EXPECT_NEAR(m.capacitance(5 * um), oracle, 1e-12 * oracle);
    const auto q = m.capacitance_by_quadrature(5 * um);
    EXPECT_LT(std::abs(q.value - m.capacitance(5 * um)) / oracle, 1e-9);
    EXPECT_LE(q.error_estimate, 1e-12 * q.value);
}

TEST(SpherePlate, ClosedFormEqualsQuadratureOverWideRange)
{
    const double R = 150 * um;
    for (const auto& g : {PlateGeometry::sphere_plate(R), PlateGeometry::sphere_plate(R).with_screening(0.68 * um, 16.0)}) {
        const CapacitanceModel m(g, DerivativeMode::Analytic, {R / 2000, 2 * R});
        for (double d : log_spaced(R / 1000, R, 100)) {
            const double closed = m.capacitance(d);
            const double quad = m.capacitance_by_quadrature(d).value;
            EXPECT_LT(std::abs(closed - quad) / closed, 1e-9) << "d = " << d;
        }
    }
}

TEST(SpherePlate, AnalyticDerivativeMatchesOracleAndNumeric)
{
    const double R = 150 * um;
    const CapacitanceModel m(PlateGeometry::sphere_plate(R), DerivativeMode::NumericCentral, {R / 1000, R});
    const double d = R / 30;
    // mpmath.diff of the closed form, tests/oracles/sphere_capacitance.py
    const double oracle = -1.4779337804979217994e-9;
    EXPECT_NEAR(m.analytic_derivative(d), oracle, 1e-12 * std::abs(oracle));
    EXPECT_LT(std::abs(m.numeric_derivative(d) - oracle) / std::abs(oracle), 1e-6);
}

TEST(Capacitance, PositiveAndStrictlyDecreasingOverSweep)
{
    const PlateGeometry geometries[] = {
        PlateGeometry::parallel_plate(1e-4),
        PlateGeometry::parallel_plate(1e-4).with_screening(0.68 * um, 16.0, 2),
        PlateGeometry::sphere_plate(150 * um),
        PlateGeometry::sphere_plate(150 * um).with_screening(0.68 * um, 16.0, 1),
    };
    for (const auto& g : geometries)
        for (auto mode : {DerivativeMode::Analytic, DerivativeMode::NumericCentral}) {
            const CapacitanceModel m(g, mode, {0.5 * um, 100 * um});
            double previous = INFINITY;
            for (double d : log_spaced(1 * um, 50 * um, 60)) {
                const double c = m.capacitance(d);
                EXPECT_GT(c, 0.0);
                EXPECT_LT(c, previous);
                EXPECT_LT(m.derivative(d), 0.0);
                previous = c;
            }
        }
}

TEST(Capacitance, NumericAndAnalyticModesAgree)
{
    for (const auto& g : {PlateGeometry::parallel_plate(1e-4).with_screening(0.68 * um, 16.0),
                          PlateGeometry::sphere_plate(150 * um).with_screening(0.68 * um, 16.0)}) {
        const CapacitanceModel m(g, DerivativeMode::NumericCentral, {0.5 * um, 200 * um});
        for (double d : log_spaced(1 * um, 100 * um, 40)) {
            const double a = m.analytic_derivative(d);
            EXPECT_LT(std::abs(m.numeric_derivative(d) - a) / std::abs(a), 1e-6);
        }
    }
}

TEST(NumericDerivative, ConvergenceOrders)
{
    const double R = 150 * um;
    const CapacitanceModel m(PlateGeometry::sphere_plate(R), DerivativeMode::Analytic, {R / 1000, 10 * R});
    auto c = [&](double x) { return m.capacitance(x); };
    const double d = 10 * um;
    const double exact = m.analytic_derivative(d);

    // Steps large enough that truncation dominates rounding.
    const double h = 0.02 * d;
    const double e1 = std::abs(numdiff::central(c, d, h) - exact);
    const double e2 = std::abs(numdiff::central(c, d, h / 2) - exact);
    EXPECT_NEAR(e1 / e2, 4.0, 0.8);

    const double H = 0.1 * d;
    const double r1 = std::abs(numdiff::central_richardson(c, d, H) - exact);
    const double r2 = std::abs(numdiff::central_richardson(c, d, H / 2) - exact);
    EXPECT_NEAR(r1 / r2, 16.0, 3.2);
}

TEST(Capacitance, DomainErrors)
{
    const CapacitanceModel m(PlateGeometry::parallel_plate(1e-4), DerivativeMode::NumericCentral, {1 * um, 10 * um});
    EXPECT_EQ(category_of([&] { m.capacitance(0.5 * um); }), ErrorCategory::Range);
    EXPECT_EQ(category_of([&] { m.capacitance(11 * um); }), ErrorCategory::Range);
    // At the domain edge the stencil leaves the domain; the analytic form does not need one.
    EXPECT_EQ(category_of([&] { m.numeric_derivative(1 * um); }), ErrorCategory::Range);
    EXPECT_LT(m.analytic_derivative(1 * um), 0.0);
    EXPECT_EQ(category_of([&] { m.capacitance_by_quadrature(5 * um); }), ErrorCategory::Config);
}

TEST(Capacitance, CustomModel)
{
    EXPECT_EQ(category_of([] {
                  CapacitanceModel::custom([](double d) { return -std::log(d); }, {}, DerivativeMode::Analytic,
                                           {0.01, 0.5});
              }),
              ErrorCategory::Config);
    const auto m = CapacitanceModel::custom([](double d) { return -std::log(d); }, {},
                                            DerivativeMode::NumericCentral, {0.01, 0.5});
    EXPECT_NEAR(m.derivative(0.1), -10.0, 1e-8);
    EXPECT_FALSE(m.geometry().has_value());
}

} // namespace
} // namespace vcbg
