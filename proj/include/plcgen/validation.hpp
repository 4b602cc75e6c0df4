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

#ifndef PLCGEN_VALIDATION_HPP
#define PLCGEN_VALIDATION_HPP

#include "errors.hpp"
#include "path_statistics.hpp"
#include "random.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

// Monte Carlo goodness-of-fit checks of the samplers against their analytic
// laws. Every threshold a report is judged by is stored in the report.

namespace plcgen
{

// Two-sided Kolmogorov-Smirnov distance between the empirical CDF of sorted
// samples and an analytic CDF:
//   D = max_i max(i/n - F(x_i), F(x_i) - (i-1)/n),  i = 1..n
template <class Cdf> double ks_statistic(std::span<const double> sorted, Cdf &&cdf)
{
    if (sorted.empty())
        throw domain_error("KS statistic needs at least one sample");
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i)
    {
        const double f = cdf(sorted[i]);
        const double above = static_cast<double>(i + 1) / n - f;
        const double below = f - static_cast<double>(i) / n;
        d = std::max({d, above, below});
    }
    return std::clamp(d, 0.0, 1.0);
}

struct Check
{
    std::string name;
    double value = 0.0;     // observed deviation or statistic
    double threshold = 0.0; // pass iff value <= threshold
    bool passed = false;
};

struct GofReport
{
    std::string model; // "path_count", "gev_interval", "magnitude_profile"
    std::optional<int> class_id;
    int cluster = 0;
    std::size_t samples = 0;

    std::optional<double> ks_statistic;
    std::optional<double> empirical_mean, empirical_variance;
    std::optional<double> analytic_mean, analytic_variance;
    std::optional<double> empirical_median, analytic_median;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.passed; });
    }
};

inline Check make_check(std::string name, double value, double threshold)
{
    return {std::move(name), value, threshold, value <= threshold};
}

// ---- thresholds ------------------------------------------------------------

// KS acceptance distance: 0.01, loosened for small samples to the
// asymptotic 0.1% critical value sqrt(-ln(0.0005) / 2) / sqrt(n).
inline double ks_threshold(std::size_t n)
{
    return std::max(0.01, 1.9495 / std::sqrt(static_cast<double>(n)));
}

inline double path_count_mean_tolerance(double variance, std::size_t n)
{
    return 0.5 + 3.0 * std::sqrt(variance) / std::sqrt(static_cast<double>(n));
}

// 1/12 bounds the variance added by rounding a wide Gaussian to integers.
inline double path_count_variance_tolerance(double variance, std::size_t n)
{
    return 1.0 / 12.0 + 5.0 * variance * std::sqrt(2.0 / static_cast<double>(n));
}

// Exact mean and variance of max(1, round(Normal(mean, variance))).
inline std::pair<double, double> clamped_rounded_gaussian_moments(double mean, double variance)
{
    if (variance == 0.0)
    {
        const double n = std::max(1.0, std::round(mean));
        return {n, 0.0};
    }
    const double sd = std::sqrt(variance);
    auto phi = [&](double x) { return 0.5 * std::erfc(-(x - mean) / (sd * std::sqrt(2.0))); };
    const double lo = std::floor(mean - 40.0 * sd);
    const double hi = std::ceil(mean + 40.0 * sd);
    double m1 = 0.0, m2 = 0.0;
    // All mass below 0.5 collapses onto N = 1.
    const double p_low = phi(0.5);
    m1 += p_low;
    m2 += p_low;
    for (double n = std::max(1.0, lo); n <= hi; n += 1.0)
    {
        const double p = phi(n + 0.5) - phi(n - 0.5);
        m1 += p * n;
        m2 += p * n * n;
    }
    return {m1, m2 - m1 * m1};
}

// ---- per-model validators -------------------------------------------------

// Draws n path counts. The mean is compared with mu and the variance with the
// exact variance of the clamped, rounded law (for class 2 the N >= 1 clamp
// removes about 0.4 of variance). variance_override replaces sigma^2 (0 gives
// a degenerate Gaussian; the variance comparison is then skipped).
inline GofReport validate_path_counts(ClassId i, ClusterIndex k, std::size_t n, RandomStream &rng,
                                      std::optional<double> variance_override = std::nullopt)
{
    if (n == 0)
        throw domain_error("sample count must be positive");
    const double mu = path_count_mean(i, k);
    const double var = variance_override ? *variance_override : path_count_variance(i, k);

    // Welford accumulation.
    double mean = 0.0, m2 = 0.0;
    for (std::size_t s = 0; s < n; ++s)
    {
        const double x = sample_path_count(mu, var, rng);
        const double delta = x - mean;
        mean += delta / static_cast<double>(s + 1);
        m2 += delta * (x - mean);
    }
    const double emp_var = n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;

    GofReport r;
    r.model = "path_count";
    r.class_id = i.value();
    r.cluster = k.value();
    r.samples = n;
    r.empirical_mean = mean;
    r.empirical_variance = emp_var;
    r.analytic_mean = mu;
    r.analytic_variance = var;
    r.checks.push_back(make_check("mean", std::abs(mean - mu), path_count_mean_tolerance(var, n)));
    if (var > 0.0)
    {
        const double law_var = clamped_rounded_gaussian_moments(mu, var).second;
        r.checks.push_back(
            make_check("variance", std::abs(emp_var - law_var), path_count_variance_tolerance(var, n)));
        r.notes.push_back("variance reference is the clamped rounded law: " + std::to_string(law_var));
    }
    else
    {
        r.notes.push_back("zero variance: analytic variance comparison skipped");
    }
    return r;
}

// KS test of n untruncated inverse-CDF draws against the analytic GEV CDF.
// The GEV mean is infinite for xi >= 1, so location is summarised by the median.
inline GofReport validate_gev_intervals(ClassId i, ClusterIndex k, std::size_t n, RandomStream &rng)
{
    if (n == 0)
        throw domain_error("sample count must be positive");
    const GevParams p = gev_params(i, k);
    std::vector<double> xs(n);
    for (auto &x : xs)
        x = sample_gev(p, rng);
    std::sort(xs.begin(), xs.end());

    GofReport r;
    r.model = "gev_interval";
    r.class_id = i.value();
    r.cluster = k.value();
    r.samples = n;
    const double d = ks_statistic(xs, [&](double x) { return gev_cdf(x, p); });
    r.ks_statistic = d;
    r.empirical_median = n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
    r.analytic_median = gev_median(p);
    r.checks.push_back(make_check("ks", d, ks_threshold(n)));
    if (p.xi >= 1.0)
        r.notes.push_back("xi >= 1: mean and variance do not exist");
    return r;
}

inline constexpr int magnitude_profile_samples = 200;

// Deterministic check that a double-exponential row is positive and strictly
// decreasing over j = 0..199.
inline GofReport validate_magnitude_profile(const DoubleExpRow &row, int cluster)
{
    GofReport r;
    r.model = "magnitude_profile";
    r.cluster = cluster;
    r.samples = magnitude_profile_samples;

    int non_positive = 0;
    int non_decreasing = 0;
    double prev = row(0.0);
    if (!(prev > 0.0))
        ++non_positive;
    for (int j = 1; j < magnitude_profile_samples; ++j)
    {
        const double cur = row(static_cast<double>(j));
        if (!(cur > 0.0))
            ++non_positive;
        if (!(cur < prev))
            ++non_decreasing;
        prev = cur;
    }
    r.checks.push_back(make_check("positive", non_positive, 0.0));
    r.checks.push_back(make_check("strictly_decreasing", non_decreasing, 0.0));
    return r;
}

inline GofReport validate_magnitude_profile(ClusterIndex k)
{
    detail::require_tabulated_cluster(k);
    return validate_magnitude_profile(default_parameters().other_path_row(k.value()), k.value());
}

// ---- lattice runs -----------------------------------------------------------

struct SkippedCell
{
    std::string model;
    int class_id = 0;
    int cluster = 0;
    std::string reason;
};

struct ValidationRun
{
    std::vector<GofReport> reports;
    std::vector<SkippedCell> skipped;

    std::size_t passed() const
    {
        return static_cast<std::size_t>(
            std::count_if(reports.begin(), reports.end(), [](const GofReport &r) { return r.passed(); }));
    }
    std::size_t failed() const { return reports.size() - passed(); }
    bool all_passed() const { return failed() == 0; }
};

// Every model of one (class, cluster) cell. Each cell draws from its own
// stream derived from (seed, class * 1000 + cluster), so results do not
// depend on which other cells are run.
inline void validate_cell(ClassId i, ClusterIndex k, std::size_t n, std::uint64_t seed, ValidationRun &run,
                          bool skip_invalid_gev)
{
    detail::require_stat_class(i);
    detail::require_tabulated_cluster(k);
    const auto cell = static_cast<std::uint64_t>(i.value() * 1000 + k.value());

    RandomStream count_rng(derive_stream_seed(seed, 2 * cell));
    run.reports.push_back(validate_path_counts(i, k, n, count_rng));

    if (gev_params_valid(i, k))
    {
        RandomStream gev_rng(derive_stream_seed(seed, 2 * cell + 1));
        run.reports.push_back(validate_gev_intervals(i, k, n, gev_rng));
    }
    else if (skip_invalid_gev)
    {
        run.skipped.push_back({"gev_interval", i.value(), k.value(), "skipped: invalid η"});
    }
    else
    {
        gev_params(i, k); // throws parameter_domain_error
    }
}

inline ValidationRun validate_single(ClassId i, ClusterIndex k, std::size_t n, std::uint64_t seed)
{
    ValidationRun run;
    validate_cell(i, k, n, seed, run, false);
    run.reports.push_back(validate_magnitude_profile(k));
    return run;
}

// Classes 2..5 x clusters 1..20, plus the magnitude profile of every cluster.
inline ValidationRun validate_all(std::size_t n, std::uint64_t seed)
{
    ValidationRun run;
    for (int i = min_stat_class; i <= max_class; ++i)
        for (int k = 1; k <= max_tabulated_cluster; ++k)
            validate_cell(ClassId(i), ClusterIndex(k), n, seed, run, true);
    for (int k = 1; k <= max_tabulated_cluster; ++k)
        run.reports.push_back(validate_magnitude_profile(ClusterIndex(k)));
    return run;
}

} // namespace plcgen

#endif
