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

#ifndef PLCGEN_PARAM_TABLES_HPP
#define PLCGEN_PARAM_TABLES_HPP

#include <array>
#include <cmath>
#include <string_view>

// Fitted constants of the statistical channel model, compiled in.
//
// Literals are written exactly as published so that a dump of this set can
// be compared digit for digit against the published tables. Bump
// parameter_set_version whenever any value changes.

namespace plcgen
{

inline constexpr std::string_view parameter_set_version = "plc-channel-params/1";

inline constexpr int min_class = 1;
inline constexpr int max_class = 5;
inline constexpr int min_stat_class = 2; // first class with path-count and interval models
inline constexpr int max_tabulated_cluster = 20;

// mu = p1 * k^p2 + p3, sigma^2 = q1 * k^q2 + q3
struct PathCountRow
{
    double p1, p2, p3;
    double q1, q2, q3;
};

// a * e^(b * x) + c * e^(d * x)
struct DoubleExpRow
{
    double a, b, c, d;

    double operator()(double x) const { return a * std::exp(b * x) + c * std::exp(d * x); }
};

// Parameter function of the cluster index: linear a*k + b or power a*k^b + c.
struct ParamFunction
{
    enum class Form
    {
        linear,
        power
    };
    Form form;
    double a, b, c;

    double operator()(double k) const
    {
        return form == Form::linear ? a * k + b : a * std::pow(k, b) + c;
    }
};

struct GevCoefficients
{
    ParamFunction xi;  // shape
    ParamFunction eta; // scale
    ParamFunction eps; // location
    // Symbols the published table uses for scale and location. The class V
    // table labels them delta and mu.
    std::string_view eta_symbol;
    std::string_view eps_symbol;
};

struct ParameterSet
{
    std::array<PathCountRow, 4> path_count;   // classes 2..5
    std::array<DoubleExpRow, 5> first_arrival; // classes 1..5
    std::array<DoubleExpRow, 20> other_path;   // clusters 1..20
    std::array<GevCoefficients, 4> gev;        // classes 2..5

    const PathCountRow &path_count_row(int class_id) const { return path_count[class_id - 2]; }
    const DoubleExpRow &first_arrival_row(int class_id) const { return first_arrival[class_id - 1]; }
    const DoubleExpRow &other_path_row(int cluster) const { return other_path[cluster - 1]; }
    const GevCoefficients &gev_row(int class_id) const { return gev[class_id - 2]; }
};

namespace detail
{
using F = ParamFunction::Form;

inline constexpr ParameterSet published_parameters{
    // path count, Gaussian moments
    {{
        {1.623, 0.08596, 0, -0.3818, -0.8461, 1.592},
        {3.913, 0.0968, 0, -0.005983, 1.033, 1.783},
        {6.169, 0.09686, 0, -0.4401, -0.6989, 2.007},
        {8.684, 0.1688, 0, -8.725, -0.06764, 10.98},
    }},
    // first arrival path magnitude
    {{
        {0.4815, -0.0821, 0.4103, -0.02408},
        {0.2601, -0.1214, 0.4948, -0.03241},
        {0.1841, -0.1246, 0.3628, -0.03334},
        {0.1221, -0.1515, 0.2736, -0.03445},
        {0.1721, -0.1517, 0.0905, -0.01979},
    }},
    // other path magnitude vs. time-sample index
    {{
        {0.4194, -0.1270, 0.0328, -0.0083},
        {0.4388, -0.1355, 0.0487, -0.0207},
        {0.4647, -0.1353, 0.0502, -0.0206},
        {0.4542, -0.1329, 0.0562, -0.0235},
        {0.4381, -0.1244, 0.0521, -0.0229},
        {0.4632, -0.1253, 0.0571, -0.0249},
        {0.4677, -0.1163, 0.0422, -0.0196},
        {0.5124, -0.1200, 0.0457, -0.0213},
        {0.4262, -0.1032, 0.0327, -0.0171},
        {0.4419, -0.1004, 0.0287, -0.0151},
        {0.5116, -0.1046, 0.0292, -0.0149},
        {0.4604, -0.0964, 0.0257, -0.0140},
        {0.4501, -0.0925, 0.0223, -0.0126},
        {0.4968, -0.0946, 0.0238, -0.0134},
        {0.5187, -0.0950, 0.0243, -0.0136},
        {0.5242, -0.0915, 0.0207, -0.0116},
        {0.5355, -0.0896, 0.0188, -0.0109},
        {0.6164, -0.0934, 0.0224, -0.0125},
        {0.5288, -0.0852, 0.0180, -0.0108},
        {0.5829, -0.0864, 0.0175, -0.0099},
    }},
    // GEV path interval
    {{
        {{F::linear, 0.001143, 2.211, 0}, {F::linear, 0.0008684, 0.6979, 0}, {F::linear, -0.00003362, 0.5586, 0},
         "eta", "epsilon"},
        {{F::linear, 0.0006167, 2.537, 0}, {F::linear, 0.0005993, 0.8095, 0}, {F::linear, -0.00009132, 0.571, 0},
         "eta", "epsilon"},
        {{F::linear, 0.000972, 2.734, 0}, {F::linear, 0.0009786, 0.9539, 0}, {F::linear, 0.0001653, 0.3061, 0},
         "eta", "epsilon"},
        {{F::power, 0.4063, 0.2886, 1.061}, {F::power, 1.246, 0.1702, -1.892}, {F::linear, 0.0002687, 0.2033, 0},
         "delta", "mu"},
    }},
};
} // namespace detail

inline const ParameterSet &default_parameters()
{
    return detail::published_parameters;
}

} // namespace plcgen

#endif
