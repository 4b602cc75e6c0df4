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

#ifndef PLCGEN_CHANNEL_SYNTHESIS_HPP
#define PLCGEN_CHANNEL_SYNTHESIS_HPP

#include "cable_params.hpp"
#include "errors.hpp"
#include "path_statistics.hpp"
#include "random.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace plcgen
{

enum class PhaseModel
{
    eq11_literal,    // e^(-j b0 f), f in MHz, b0 from the distance fit
    geometric_delay  // e^(-j 2 pi f tau), tau = path delay
};

inline std::string_view phase_model_name(PhaseModel m)
{
    return m == PhaseModel::eq11_literal ? "eq11_literal" : "geometric_delay";
}

inline PhaseModel phase_model_from_name(std::string_view name)
{
    if (name == "eq11_literal")
        return PhaseModel::eq11_literal;
    if (name == "geometric_delay")
        return PhaseModel::geometric_delay;
    throw unknown_entity_error("unknown phase model '" + std::string(name) +
                               "' (expected eq11_literal or geometric_delay)");
}

// Shortest path distance the loss fit accepts. Below ~1.7565 m the
// f-dependent attenuation coefficient turns negative.
inline constexpr double min_path_distance_m = 2.0;

struct GeneratorConfig
{
    CableKind cable = CableKind::nayy150;
    double interval_unit_s = 1e-6;         // seconds per GEV interval unit
    double sample_period_s = 1e-7;         // seconds per time-sample index j
    double cluster_distance_step_m = 10.0; // first-path distance per cluster index
    std::optional<double> direct_distance_m;
    double gev_cap = 50.0; // truncation cap, interval units
    PhaseModel phase_model = PhaseModel::eq11_literal;
    std::uint64_t seed = 0;

    void validate() const
    {
        auto positive = [](double v, const char *what) {
            if (!(v > 0.0) || !std::isfinite(v))
                throw domain_error(std::string(what) + " must be finite and positive");
        };
        positive(interval_unit_s, "interval_unit_s");
        positive(sample_period_s, "sample_period_s");
        positive(cluster_distance_step_m, "cluster_distance_step_m");
        positive(gev_cap, "gev_cap");
        if (direct_distance_m)
            positive(*direct_distance_m, "direct_distance_m");
        if (cable == CableKind::custom)
            throw unknown_entity_error("generator config needs a built-in cable");
    }

    double first_path_distance(ClusterIndex k) const
    {
        return direct_distance_m ? *direct_distance_m : k.value() * cluster_distance_step_m;
    }
};

struct ChannelPath
{
    double delay_s = 0.0;
    double magnitude = 0.0;
    double distance_m = 0.0;
    std::int64_t sample_index_j = 0;

    friend bool operator==(const ChannelPath &, const ChannelPath &) = default;
};

struct ChannelRealization
{
    int class_id = 1;
    int cluster = 1;
    std::uint64_t seed = 0;
    std::vector<ChannelPath> paths;

    friend bool operator==(const ChannelRealization &, const ChannelRealization &) = default;
};

// ---- cable loss -----------------------------------------------------------

struct CableLossCoeffs
{
    double a0 = 0.0;
    double a1 = 0.0;
    double k_exp = 0.0; // attenuation exponent, not the cluster index
    double b0 = 0.0;
};

inline CableLossCoeffs loss_coeffs(double distance_m)
{
    if (!(distance_m >= min_path_distance_m) || !std::isfinite(distance_m))
        throw distance_domain_error("path distance " + std::to_string(distance_m) +
                                    " m is below the 2 m minimum of the cable-loss model");
    const double d = distance_m;
    return {0.0002086 * d + 0.0008739, 0.00002644 * d - 0.00004644, -0.00009098 * d + 0.8876,
            -0.0006432 * d - 0.000001126};
}

// A(f) = e^-(a0 + a1 f^k) e^(-j b0 f), f in MHz.
inline std::complex<double> path_loss(double f_mhz, const CableLossCoeffs &c)
{
    if (!(f_mhz >= 0.0))
        throw domain_error("frequency must be non-negative");
    const double magnitude = std::exp(-(c.a0 + c.a1 * std::pow(f_mhz, c.k_exp)));
    return std::polar(magnitude, -c.b0 * f_mhz);
}

// ---- realization synthesis -------------------------------------------------

// Builds one realization:
//   1. N = 1 for class 1, otherwise a rounded-Gaussian path count.
//   2. First path at the cluster distance, magnitude from the first-arrival fit.
//   3. Each further path adds a truncated GEV interval to the previous delay;
//      its magnitude follows the other-path decay at j = round((tau - tau1) / Ts).
// The GEV parameters are checked up front for classes 2..5 so that an invalid
// (class, cluster) cell fails regardless of the drawn path count.
inline ChannelRealization synthesize(ClassId i, ClusterIndex k, const GeneratorConfig &cfg, RandomStream &rng)
{
    cfg.validate();
    const CableSpec cable = cable_from_kind(cfg.cable);
    const double v = phase_velocity(cable);

    const double d1 = cfg.first_path_distance(k);
    if (!(d1 >= min_path_distance_m))
        throw distance_domain_error("first path distance " + std::to_string(d1) + " m is below the 2 m minimum");

    int count = 1;
    std::optional<GevParams> gev;
    if (i.has_statistical_model())
    {
        gev = gev_params(i, k);
        detail::require_tabulated_cluster(k);
        count = sample_path_count(i, k, rng);
    }

    ChannelRealization ch;
    ch.class_id = i.value();
    ch.cluster = k.value();
    ch.seed = cfg.seed;
    ch.paths.reserve(static_cast<std::size_t>(count));

    const double tau1 = d1 / v;
    ch.paths.push_back({tau1, first_arrival_magnitude(i, k), d1, 0});

    double tau = tau1;
    for (int p = 1; p < count; ++p)
    {
        const double x = sample_gev_truncated(*gev, cfg.gev_cap, rng);
        const double next = tau + x * cfg.interval_unit_s;
        if (!(next > tau))
            throw domain_error("path interval below delay resolution");
        tau = next;
        const auto j = static_cast<std::int64_t>(std::llround((tau - tau1) / cfg.sample_period_s));
        ch.paths.push_back({tau, other_path_magnitude(k, j), tau * v, j});
    }
    return ch;
}

inline ChannelRealization synthesize(ClassId i, ClusterIndex k, const GeneratorConfig &cfg)
{
    RandomStream rng(cfg.seed);
    return synthesize(i, k, cfg, rng);
}

// Realization r of the batch is synthesized from its own stream seeded with
// derive_stream_seed(cfg.seed, r) and records that seed, so any single
// realization can be reproduced in isolation.
inline std::vector<ChannelRealization> generate_batch(ClassId i, ClusterIndex k, const GeneratorConfig &cfg,
                                                      std::size_t count)
{
    std::vector<ChannelRealization> out;
    out.reserve(count);
    for (std::size_t r = 0; r < count; ++r)
    {
        GeneratorConfig item = cfg;
        item.seed = derive_stream_seed(cfg.seed, r);
        out.push_back(synthesize(i, k, item));
    }
    return out;
}

// ---- frequency response -----------------------------------------------------

struct FrequencyGridSpec
{
    double f_min_hz = 0.0;
    double f_max_hz = 30e6;
    std::size_t points = 1024;
};

inline std::vector<double> uniform_grid(const FrequencyGridSpec &spec)
{
    if (!(spec.f_min_hz >= 0.0) || !(spec.f_max_hz > spec.f_min_hz) || !std::isfinite(spec.f_max_hz))
        throw grid_error("frequency grid needs 0 <= f_min < f_max");
    if (spec.points < 2)
        throw grid_error("frequency grid needs at least 2 points");
    std::vector<double> grid(spec.points);
    const double step = (spec.f_max_hz - spec.f_min_hz) / static_cast<double>(spec.points - 1);
    for (std::size_t n = 0; n < spec.points; ++n)
        grid[n] = spec.f_min_hz + step * static_cast<double>(n);
    grid.back() = spec.f_max_hz;
    return grid;
}

struct FrequencyResponse
{
    std::vector<double> freq_grid_hz;
    std::vector<std::complex<double>> h;
    int class_id = 0;
    int cluster = 0;
    std::uint64_t seed = 0;
};

namespace detail
{
inline void require_ascending_grid(std::span<const double> grid)
{
    if (grid.empty())
        throw grid_error("frequency grid is empty");
    if (!(grid.front() >= 0.0))
        throw grid_error("frequency grid must be non-negative");
    for (std::size_t n = 1; n < grid.size(); ++n)
        if (!(grid[n] > grid[n - 1]))
            throw grid_error("frequency grid must be strictly ascending");
}
} // namespace detail

// H(f) = sum_p m_p A_p(f). The literal phase model uses each path's b0 term;
// geometric_delay replaces it by e^(-j 2 pi f tau_p).
inline FrequencyResponse transfer_function(const ChannelRealization &ch, std::span<const double> grid_hz,
                                           PhaseModel phase_model)
{
    detail::require_ascending_grid(grid_hz);
    std::vector<CableLossCoeffs> coeffs;
    coeffs.reserve(ch.paths.size());
    for (const auto &p : ch.paths)
        coeffs.push_back(loss_coeffs(p.distance_m));

    FrequencyResponse fr;
    fr.freq_grid_hz.assign(grid_hz.begin(), grid_hz.end());
    fr.h.assign(grid_hz.size(), {0.0, 0.0});
    fr.class_id = ch.class_id;
    fr.cluster = ch.cluster;
    fr.seed = ch.seed;

    for (std::size_t n = 0; n < grid_hz.size(); ++n)
    {
        const double f_hz = grid_hz[n];
        const double f_mhz = f_hz * 1e-6;
        std::complex<double> sum{0.0, 0.0};
        for (std::size_t p = 0; p < ch.paths.size(); ++p)
        {
            const auto &c = coeffs[p];
            const double attenuation = std::exp(-(c.a0 + c.a1 * std::pow(f_mhz, c.k_exp)));
            const double phase = phase_model == PhaseModel::eq11_literal
                                     ? -c.b0 * f_mhz
                                     : -2.0 * std::numbers::pi * f_hz * ch.paths[p].delay_s;
            sum += ch.paths[p].magnitude * std::polar(attenuation, phase);
        }
        fr.h[n] = sum;
    }
    return fr;
}

} // namespace plcgen

#endif
