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

#ifndef PLCGEN_PATH_STATISTICS_HPP
#define PLCGEN_PATH_STATISTICS_HPP

#include "errors.hpp"
#include "param_tables.hpp"
#include "random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

// Statistical models of a multipath powerline channel for a given channel
// class i and cluster index k:
//
//   path count      N = round(Normal(mu_ik, sigma2_ik)), clamped to N >= 1
//   first path      I_ik = aM e^(bM k) + cM e^(dM k)
//   other paths     I_kj = ao e^(bo j) + co e^(do j), j = time-sample index
//   path interval   GEV(location eps, scale eta, shape xi)

namespace plcgen
{

class ClassId
{
public:
    explicit ClassId(int value) : value_(value)
    {
        if (value < min_class || value > max_class)
            throw unsupported_class_error("class must be in 1..5, got " + std::to_string(value));
    }
    int value() const { return value_; }
    bool has_statistical_model() const { return value_ >= min_stat_class; }
    friend bool operator==(ClassId, ClassId) = default;

private:
    int value_;
};

class ClusterIndex
{
public:
    explicit ClusterIndex(int value) : value_(value)
    {
        if (value < 1)
            throw unsupported_cluster_error("cluster index must be >= 1, got " + std::to_string(value));
    }
    int value() const { return value_; }
    bool tabulated() const { return value_ <= max_tabulated_cluster; }
    friend bool operator==(ClusterIndex, ClusterIndex) = default;

private:
    int value_;
};

struct GevParams
{
    double xi = 0.0;  // shape
    double eta = 1.0; // scale
    double eps = 0.0; // location
};

namespace detail
{
inline void require_stat_class(ClassId i)
{
    if (!i.has_statistical_model())
        throw unsupported_class_error("class " + std::to_string(i.value()) +
                                      " has no path-count or path-interval model (classes 2..5 only)");
}

inline void require_tabulated_cluster(ClusterIndex k)
{
    if (!k.tabulated())
        throw unsupported_cluster_error("cluster " + std::to_string(k.value()) +
                                        " is outside the tabulated range 1..20");
}

inline double variance_of(const PathCountRow &row, int k)
{
    return row.q1 * std::pow(static_cast<double>(k), row.q2) + row.q3;
}

// Every tabulated (class, cluster) cell must yield a positive variance.
inline void check_parameter_integrity(const ParameterSet &params)
{
    for (int i = min_stat_class; i <= max_class; ++i)
        for (int k = 1; k <= max_tabulated_cluster; ++k)
            if (!(variance_of(params.path_count_row(i), k) > 0.0))
                throw data_integrity_error("path-count variance is not positive for class " + std::to_string(i) +
                                           " cluster " + std::to_string(k));
}

inline const ParameterSet &checked_parameters()
{
    static const ParameterSet &params = [] () -> const ParameterSet & {
        check_parameter_integrity(default_parameters());
        return default_parameters();
    }();
    return params;
}
} // namespace detail

// ---- path count ----------------------------------------------------------

inline double path_count_mean(ClassId i, ClusterIndex k)
{
    detail::require_stat_class(i);
    const auto &row = detail::checked_parameters().path_count_row(i.value());
    return row.p1 * std::pow(static_cast<double>(k.value()), row.p2) + row.p3;
}

inline double path_count_variance(ClassId i, ClusterIndex k)
{
    detail::require_stat_class(i);
    const double v = detail::variance_of(detail::checked_parameters().path_count_row(i.value()), k.value());
    if (!(v > 0.0))
        throw data_integrity_error("path-count variance " + std::to_string(v) + " is not positive for class " +
                                   std::to_string(i.value()) + " cluster " + std::to_string(k.value()));
    return v;
}

// Rounded Gaussian draw, half away from zero, clamped to at least one path.
// Always consumes one normal variate so streams stay aligned even when the
// variance is zero.
inline int sample_path_count(double mean, double variance, RandomStream &rng)
{
    if (!(variance >= 0.0))
        throw data_integrity_error("path-count variance must be non-negative");
    const double x = mean + std::sqrt(variance) * rng.normal();
    const double n = std::round(x);
    if (n < 1.0)
        return 1;
    if (n > static_cast<double>(std::numeric_limits<int>::max()))
        throw data_integrity_error("path count overflow");
    return static_cast<int>(n);
}

inline int sample_path_count(ClassId i, ClusterIndex k, RandomStream &rng)
{
    return sample_path_count(path_count_mean(i, k), path_count_variance(i, k), rng);
}

// ---- magnitudes ----------------------------------------------------------

inline double first_arrival_magnitude(ClassId i, ClusterIndex k)
{
    return default_parameters().first_arrival_row(i.value())(static_cast<double>(k.value()));
}

inline double other_path_magnitude(ClusterIndex k, std::int64_t j)
{
    detail::require_tabulated_cluster(k);
    if (j < 0)
        throw domain_error("time-sample index must be non-negative");
    return default_parameters().other_path_row(k.value())(static_cast<double>(j));
}

// ---- path interval (GEV) -------------------------------------------------

// Throws parameter_domain_error where the fitted scale function is not
// positive. With the published class V coefficients that is every cluster
// k <= 11.
inline GevParams gev_params(ClassId i, ClusterIndex k)
{
    detail::require_stat_class(i);
    const auto &row = default_parameters().gev_row(i.value());
    const double kk = static_cast<double>(k.value());
    GevParams p{row.xi(kk), row.eta(kk), row.eps(kk)};
    if (!(p.eta > 0.0))
        throw parameter_domain_error("GEV scale eta = " + std::to_string(p.eta) + " is not positive for class " +
                                     std::to_string(i.value()) + " cluster " + std::to_string(k.value()));
    return p;
}

inline bool gev_params_valid(ClassId i, ClusterIndex k)
{
    if (!i.has_statistical_model())
        return false;
    const auto &row = default_parameters().gev_row(i.value());
    return row.eta(static_cast<double>(k.value())) > 0.0;
}

// Lower (xi > 0) or upper (xi < 0) end of the support; +-inf for xi = 0.
inline double gev_support_bound(const GevParams &p)
{
    if (p.xi == 0.0)
        return -std::numeric_limits<double>::infinity();
    return p.eps - p.eta / p.xi;
}

inline double gev_pdf(double x, const GevParams &p)
{
    const double z = (x - p.eps) / p.eta;
    if (p.xi == 0.0)
    {
        const double t = std::exp(-z);
        return t * std::exp(-t) / p.eta;
    }
    const double s = 1.0 + p.xi * z;
    if (!(s > 0.0))
        return 0.0;
    const double log_s = std::log(s);
    const double t = std::exp(-log_s / p.xi);
    return std::exp((-1.0 / p.xi - 1.0) * log_s) * std::exp(-t) / p.eta;
}

inline double gev_cdf(double x, const GevParams &p)
{
    const double z = (x - p.eps) / p.eta;
    if (p.xi == 0.0)
        return std::exp(-std::exp(-z));
    const double s = 1.0 + p.xi * z;
    if (!(s > 0.0))
        return p.xi > 0.0 ? 0.0 : 1.0;
    return std::exp(-std::pow(s, -1.0 / p.xi));
}

// Inverse CDF for u in (0, 1).
inline double gev_quantile(double u, const GevParams &p)
{
    if (!(u > 0.0 && u < 1.0))
        throw domain_error("GEV quantile requires u in (0, 1)");
    const double w = -std::log(u);
    if (p.xi == 0.0)
        return p.eps - p.eta * std::log(w);
    return p.eps + p.eta * (std::pow(w, -p.xi) - 1.0) / p.xi;
}

inline double gev_median(const GevParams &p)
{
    return gev_quantile(0.5, p);
}

inline double sample_gev(const GevParams &p, RandomStream &rng)
{
    return gev_quantile(rng.uniform(), p);
}

inline constexpr int max_gev_rejections = 1000;

// GEV draw restricted to (0, cap]. The fitted shapes are around 2 to 2.7, so
// the untruncated law has no mean and occasionally produces absurd delays.
inline double sample_gev_truncated(const GevParams &p, double cap, RandomStream &rng)
{
    if (!(cap > 0.0))
        throw domain_error("GEV truncation cap must be positive");
    for (int attempt = 0; attempt <= max_gev_rejections; ++attempt)
    {
        const double x = sample_gev(p, rng);
        if (x > 0.0 && x <= cap)
            return x;
    }
    throw truncation_exhausted_error("no GEV sample within (0, " + std::to_string(cap) + "] after " +
                                     std::to_string(max_gev_rejections) + " rejections");
}

} // namespace plcgen

#endif
