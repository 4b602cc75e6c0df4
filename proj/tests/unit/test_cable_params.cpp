// SPDX-License-Identifier: Apache-2.0
//
// plcgen - statistical powerline communication channel generator
// Copyright (C) 2026 The plcgen authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <plcgen/cable_params.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <complex>

using namespace plcgen;

// Reference values were evaluated once in 30-digit decimal arithmetic from the
// published constants (eps0 = 8.5419e-12, mu0 = 1.2566e-6, kappa = 58e6,
// tan_delta = 0.025, eps_r = 4) and frozen here.
namespace ref
{
constexpr double c_nayy150 = 1.311637218e-10;
constexpr double l_nayy150 = 4.82387796666667e-6;
constexpr double r_nayy150_1mhz = 0.0377561501849621;
constexpr double g_nayy150_1mhz = 2.06031492412188e-5;
constexpr double v_nayy150 = 39755294.7779542;
constexpr double c_nayy35 = 1.684491153e-10;
constexpr double l_nayy35 = 6.19514271666667e-6;
constexpr double v_nayy35 = 30955653.3736961;
constexpr double z0_lossless = 191.774690537712;
const std::complex<double> z0_nayy150_1mhz{191.7312935034, 2.27682983064272};
const std::complex<double> z0_nayy35_1mhz{191.731151935747, 2.28764246951159};
constexpr double v_unit_ratio = 152613950.770103; // 1/sqrt(mu0 eps0 eps_r)
} // namespace ref

TEST(CableSpec, TabulatedGeometryInMetres)
{
    const auto c150 = nayy150();
    const auto c35 = nayy35();
    EXPECT_EQ(c150.a, 1.8e-3);
    EXPECT_EQ(c150.r, 6.9099e-3);
    EXPECT_EQ(c35.a, 1.2e-3);
    EXPECT_EQ(c35.r, 5.9161e-3);
    EXPECT_EQ(c150.mu_0, 1.2566e-6);
    EXPECT_EQ(c150.eps_0, 8.5419e-12);
    EXPECT_NO_THROW(c150.validate());
    EXPECT_NO_THROW(c35.validate());
}

TEST(CableSpec, RejectsNonPositiveFields)
{
    EXPECT_THROW(custom_cable(0.0, 1e-3), domain_error);
    EXPECT_THROW(custom_cable(1e-3, -1.0), domain_error);
    auto c = nayy150();
    c.tan_delta = 0.0;
    EXPECT_THROW(c.validate(), domain_error);
}

TEST(CableSpec, LookupByName)
{
    EXPECT_EQ(cable_from_name("nayy150").kind, CableKind::nayy150);
    EXPECT_EQ(cable_from_name("NAYY35").kind, CableKind::nayy35);
    EXPECT_THROW(cable_from_name("bogus"), unknown_entity_error);
}

TEST(CableParams, Capacitance)
{
    EXPECT_NEAR(capacitance_per_length(nayy150()), ref::c_nayy150, 1e-19);
    EXPECT_NEAR(capacitance_per_length(nayy35()), ref::c_nayy35, 1e-19);
    // r == a leaves eps0 * eps_r
    EXPECT_DOUBLE_EQ(capacitance_per_length(custom_cable(2e-3, 2e-3)), 8.5419e-12 * 4.0);
}

TEST(CableParams, Inductance)
{
    EXPECT_NEAR(inductance_per_length(nayy150()), ref::l_nayy150, 1e-15);
    EXPECT_NEAR(inductance_per_length(nayy35()), ref::l_nayy35, 1e-15);
    EXPECT_DOUBLE_EQ(inductance_per_length(custom_cable(2e-3, 2e-3)), 1.2566e-6);
}

TEST(CableParams, Resistance)
{
    const auto c = nayy150();
    EXPECT_NEAR(resistance_per_length(c, 1e6), ref::r_nayy150_1mhz, 1e-12);
    EXPECT_NEAR(resistance_per_length(c, 1e6), 0.037757, 1e-6);
    EXPECT_EQ(resistance_per_length(c, 0.0), 0.0);
    EXPECT_NEAR(resistance_per_length(c, 4e6), 2.0 * resistance_per_length(c, 1e6), 1e-15);
    EXPECT_THROW(resistance_per_length(c, -1.0), domain_error);
}

TEST(CableParams, Conductance)
{
    const auto c = nayy150();
    EXPECT_NEAR(conductance_per_length(c, 1e6), ref::g_nayy150_1mhz, 1e-16);
    EXPECT_EQ(conductance_per_length(nayy35(), 0.0), 0.0);
    EXPECT_NEAR(conductance_per_length(c, 2e6), 2.0 * conductance_per_length(c, 1e6), 1e-18);
    EXPECT_THROW(conductance_per_length(c, -5.0), domain_error);
}

TEST(CableParams, PhaseVelocity)
{
    EXPECT_NEAR(phase_velocity(nayy150()), ref::v_nayy150, 1e-4);
    EXPECT_NEAR(phase_velocity(nayy35()), ref::v_nayy35, 1e-4);
    EXPECT_NEAR(phase_velocity(custom_cable(1e-3, 1e-3)), ref::v_unit_ratio, 1e-3);
}

TEST(CableParams, CharacteristicImpedance)
{
    const auto z150 = char_impedance(nayy150(), 1e6);
    EXPECT_NEAR(z150.real(), ref::z0_nayy150_1mhz.real(), 1e-9);
    EXPECT_NEAR(z150.imag(), ref::z0_nayy150_1mhz.imag(), 1e-9);
    const auto z35 = char_impedance(nayy35(), 1e6);
    EXPECT_NEAR(z35.real(), ref::z0_nayy35_1mhz.real(), 1e-9);
    EXPECT_NEAR(z35.imag(), ref::z0_nayy35_1mhz.imag(), 1e-9);

    // with R negligible, Z0 tends to sqrt(L/C) / sqrt(1 - j tan_delta)
    const std::complex<double> z_limit =
        ref::z0_lossless / std::sqrt(std::complex<double>(1.0, -nayy150().tan_delta));
    EXPECT_LT(std::abs(char_impedance(nayy150(), 1e12) - z_limit), 1e-3);
    EXPECT_LT(std::abs(char_impedance(nayy150(), 1e9) - z_limit),
              std::abs(char_impedance(nayy150(), 1e6) - z_limit));
}

TEST(CableParams, CharacteristicImpedanceLosslessBranch)
{
    const auto c = nayy150();
    const auto dc = char_impedance(c, 0.0);
    EXPECT_NEAR(dc.real(), ref::z0_lossless, 1e-9);
    EXPECT_EQ(dc.imag(), 0.0);

    LumpedLineParams lossless = lumped_params(c, 5e6);
    lossless.r_per_m = 0.0;
    lossless.g_per_m = 0.0;
    const auto z = char_impedance(lossless);
    EXPECT_EQ(z.real(), std::sqrt(lossless.l_per_m / lossless.c_per_m));
    EXPECT_EQ(z.imag(), 0.0);

    EXPECT_THROW(char_impedance(c, -1.0), domain_error);
}

TEST(CableParamsProperty, SqrtAndLinearScaling)
{
    for (const auto &cable : {nayy150(), nayy35()})
    {
        for (double f = 1e5; f <= 3e7; f *= 1.5)
        {
            const double r1 = resistance_per_length(cable, f);
            const double g1 = conductance_per_length(cable, f);
            EXPECT_NEAR(resistance_per_length(cable, 4 * f) / (2 * r1), 1.0, 1e-12);
            EXPECT_NEAR(conductance_per_length(cable, 2 * f) / (2 * g1), 1.0, 1e-12);
            const auto p = lumped_params(cable, f);
            EXPECT_EQ(p.c_per_m, capacitance_per_length(cable));
            EXPECT_EQ(p.l_per_m, inductance_per_length(cable));
            EXPECT_GT(p.r_per_m, 0.0);
            EXPECT_GT(p.g_per_m, 0.0);
        }
    }
}

TEST(CableParamsProperty, OrderingAndVelocityScaling)
{
    const auto c150 = nayy150();
    const auto c35 = nayy35();
    EXPECT_GT(c35.geometry_ratio(), c150.geometry_ratio());
    EXPECT_GT(capacitance_per_length(c35), capacitance_per_length(c150));
    EXPECT_GT(inductance_per_length(c35), inductance_per_length(c150));
    const double invariant = 1.0 / std::sqrt(1.2566e-6 * 1.0 * 8.5419e-12 * 4.0);
    for (const auto &cable : {c150, c35})
        EXPECT_NEAR(phase_velocity(cable) * cable.geometry_ratio() / invariant, 1.0, 1e-12);
}
