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

#ifndef PLCGEN_CABLE_PARAMS_HPP
#define PLCGEN_CABLE_PARAMS_HPP

#include "errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <string_view>

// Per-unit-length RLCG parameters of the NAYY low-voltage power cables.
//
// All quantities are SI. Cable geometry is tabulated in millimetres by the
// manufacturer data and converted to metres here. The capacitance and
// inductance use the plain r/a geometry factor of the fitted cable model
// rather than the textbook acosh() two-wire expression.

namespace plcgen
{

namespace constants
{
inline constexpr double copper_conductivity = 58e6;      // S/m
inline constexpr double pvc_tan_delta = 0.025;
inline constexpr double pvc_relative_permittivity = 4.0;
inline constexpr double vacuum_permittivity = 8.5419e-12; // F/m, as used by the fitted model
inline constexpr double copper_relative_permeability = 1.0;
inline constexpr double vacuum_permeability = 1.2566e-6;  // H/m, as used by the fitted model
} // namespace constants

enum class CableKind
{
    nayy150,
    nayy35,
    custom
};

struct CableSpec
{
    CableKind kind = CableKind::custom;
    double a = 0.0;         // conductor spacing [m]
    double r = 0.0;         // conductor radius [m]
    double kappa = constants::copper_conductivity;
    double tan_delta = constants::pvc_tan_delta;
    double eps_r = constants::pvc_relative_permittivity;
    double eps_0 = constants::vacuum_permittivity;
    double mu_r = constants::copper_relative_permeability;
    double mu_0 = constants::vacuum_permeability;

    // Throws domain_error unless every field is strictly positive.
    void validate() const
    {
        const double fields[] = {a, r, kappa, tan_delta, eps_r, eps_0, mu_r, mu_0};
        for (double v : fields)
            if (!(v > 0.0) || !std::isfinite(v))
                throw domain_error("cable parameters must be finite and strictly positive");
    }

    double geometry_ratio() const { return r / a; }
};

inline CableSpec nayy150()
{
    CableSpec c;
    c.kind = CableKind::nayy150;
    c.a = 1.8e-3;
    c.r = 6.9099e-3;
    return c;
}

inline CableSpec nayy35()
{
    CableSpec c;
    c.kind = CableKind::nayy35;
    c.a = 1.2e-3;
    c.r = 5.9161e-3;
    return c;
}

// Same dielectric and conductor materials, arbitrary geometry (metres).
inline CableSpec custom_cable(double spacing_m, double radius_m)
{
    CableSpec c;
    c.kind = CableKind::custom;
    c.a = spacing_m;
    c.r = radius_m;
    c.validate();
    return c;
}

inline std::string_view cable_name(CableKind kind)
{
    switch (kind)
    {
    case CableKind::nayy150:
        return "nayy150";
    case CableKind::nayy35:
        return "nayy35";
    case CableKind::custom:
        break;
    }
    return "custom";
}

// Case-insensitive lookup of the built-in cables.
inline CableSpec cable_from_name(std::string_view name)
{
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lower == "nayy150")
        return nayy150();
    if (lower == "nayy35")
        return nayy35();
    throw unknown_entity_error("unknown cable '" + std::string(name) + "' (expected nayy150 or nayy35)");
}

inline CableSpec cable_from_kind(CableKind kind)
{
    switch (kind)
    {
    case CableKind::nayy150:
        return nayy150();
    case CableKind::nayy35:
        return nayy35();
    case CableKind::custom:
        break;
    }
    throw unknown_entity_error("custom cables have no built-in specification");
}

struct LumpedLineParams
{
    double c_per_m = 0.0; // F/m
    double l_per_m = 0.0; // H/m
    double r_per_m = 0.0; // Ohm/m
    double g_per_m = 0.0; // S/m
    double freq_hz = 0.0;
};

namespace detail
{
inline void require_nonnegative_frequency(double freq_hz)
{
    if (!(freq_hz >= 0.0) || !std::isfinite(freq_hz))
        throw domain_error("frequency must be finite and non-negative, got " + std::to_string(freq_hz));
}
} // namespace detail

inline double capacitance_per_length(const CableSpec &cable)
{
    return cable.eps_0 * cable.eps_r * cable.geometry_ratio();
}

inline double inductance_per_length(const CableSpec &cable)
{
    return cable.mu_0 * cable.mu_r * cable.geometry_ratio();
}

// Skin-effect resistance, proportional to sqrt(f).
inline double resistance_per_length(const CableSpec &cable, double freq_hz)
{
    detail::require_nonnegative_frequency(freq_hz);
    return std::sqrt(std::numbers::pi * cable.mu_0 / (cable.kappa * cable.r * cable.r) * freq_hz);
}

// Dielectric loss conductance, linear in f.
inline double conductance_per_length(const CableSpec &cable, double freq_hz)
{
    detail::require_nonnegative_frequency(freq_hz);
    return 2.0 * std::numbers::pi * freq_hz * capacitance_per_length(cable) * cable.tan_delta;
}

inline LumpedLineParams lumped_params(const CableSpec &cable, double freq_hz)
{
    return {capacitance_per_length(cable), inductance_per_length(cable),
            resistance_per_length(cable, freq_hz), conductance_per_length(cable, freq_hz), freq_hz};
}

inline double phase_velocity(const CableSpec &cable)
{
    return 1.0 / std::sqrt(inductance_per_length(cable) * capacitance_per_length(cable));
}

// Z0 = sqrt((R + jwL) / (G + jwC)). At f = 0 or with R = G = 0 this is the
// lossless value sqrt(L/C) with zero imaginary part.
inline std::complex<double> char_impedance(const LumpedLineParams &p)
{
    detail::require_nonnegative_frequency(p.freq_hz);
    if (p.freq_hz == 0.0 || (p.r_per_m == 0.0 && p.g_per_m == 0.0))
        return {std::sqrt(p.l_per_m / p.c_per_m), 0.0};
    const double omega = 2.0 * std::numbers::pi * p.freq_hz;
    const std::complex<double> series(p.r_per_m, omega * p.l_per_m);
    const std::complex<double> shunt(p.g_per_m, omega * p.c_per_m);
    return std::sqrt(series / shunt);
}

inline std::complex<double> char_impedance(const CableSpec &cable, double freq_hz)
{
    return char_impedance(lumped_params(cable, freq_hz));
}

} // namespace plcgen

#endif
