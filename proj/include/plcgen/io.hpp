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

#ifndef PLCGEN_IO_HPP
#define PLCGEN_IO_HPP

#include "cable_params.hpp"
#include "channel_synthesis.hpp"
#include "errors.hpp"
#include "param_tables.hpp"
#include "validation.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

// File formats:
//
//   params dump      JSON, fitted constants keyed by their published symbols
//   realizations     JSON array of {class, cluster, seed, paths: [{delay_s,
//                    magnitude, distance_m, j}]}; a bare array of path
//                    records is read as one realization
//   response         CSV, header "freq_hz,re,im,abs,phase_rad", %.17g
//   validation       JSON {summary: {cells, passed, failed, skipped}, reports, skipped}
//   config           JSON mirroring GeneratorConfig plus grid and outputs
//
// JSON numbers use the shortest representation that round-trips exactly.

namespace plcgen
{

using json = nlohmann::ordered_json;

// ---- params dump ------------------------------------------------------------

inline json params_to_json(const ParameterSet &ps = default_parameters())
{
    json out;
    out["version"] = parameter_set_version;

    json counts = json::object();
    for (int i = min_stat_class; i <= max_class; ++i)
    {
        const auto &r = ps.path_count_row(i);
        counts["class_" + std::to_string(i)] = {{"p1", r.p1}, {"p2", r.p2}, {"p3", r.p3},
                                                {"q1", r.q1}, {"q2", r.q2}, {"q3", r.q3}};
    }
    out["path_count"] = std::move(counts);

    json first = json::object();
    for (int i = min_class; i <= max_class; ++i)
    {
        const auto &r = ps.first_arrival_row(i);
        first["class_" + std::to_string(i)] = {{"aM", r.a}, {"bM", r.b}, {"cM", r.c}, {"dM", r.d}};
    }
    out["first_arrival"] = std::move(first);

    json other = json::object();
    for (int k = 1; k <= max_tabulated_cluster; ++k)
    {
        const auto &r = ps.other_path_row(k);
        other["cluster_" + std::to_string(k)] = {{"ao", r.a}, {"bo", r.b}, {"co", r.c}, {"do", r.d}};
    }
    out["other_path"] = std::move(other);

    auto fn = [](const ParamFunction &f, std::string_view symbol) {
        json j;
        j["symbol"] = symbol;
        if (f.form == ParamFunction::Form::power)
        {
            j["form"] = "a*k^b+c";
            j["a"] = f.a;
            j["b"] = f.b;
            j["c"] = f.c;
        }
        else
        {
            j["form"] = "a*k+b";
            j["a"] = f.a;
            j["b"] = f.b;
        }
        return j;
    };
    json gev = json::object();
    for (int i = min_stat_class; i <= max_class; ++i)
    {
        const auto &g = ps.gev_row(i);
        gev["class_" + std::to_string(i)] = {
            {"xi", fn(g.xi, "xi")}, {"eta", fn(g.eta, g.eta_symbol)}, {"eps", fn(g.eps, g.eps_symbol)}};
    }
    out["gev"] = std::move(gev);
    return out;
}

// ---- realizations --------------------------------------------------------------

inline json path_to_json(const ChannelPath &p)
{
    return {{"delay_s", p.delay_s}, {"magnitude", p.magnitude}, {"distance_m", p.distance_m},
            {"j", p.sample_index_j}};
}

inline json realization_to_json(const ChannelRealization &ch)
{
    json paths = json::array();
    for (const auto &p : ch.paths)
        paths.push_back(path_to_json(p));
    return {{"class", ch.class_id}, {"cluster", ch.cluster}, {"seed", ch.seed}, {"paths", std::move(paths)}};
}

inline json realizations_to_json(const std::vector<ChannelRealization> &chs)
{
    json out = json::array();
    for (const auto &ch : chs)
        out.push_back(realization_to_json(ch));
    return out;
}

namespace detail
{
template <class T> T required(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key))
        throw input_error(std::string("missing key '") + key + "'");
    try
    {
        return j.at(key).get<T>();
    }
    catch (const nlohmann::json::exception &e)
    {
        throw input_error(std::string("bad value for '") + key + "': " + e.what());
    }
}

inline double required_number(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number())
        throw input_error(std::string("missing or non-numeric '") + key + "'");
    const double v = j.at(key).get<double>();
    if (!std::isfinite(v))
        throw input_error(std::string("non-finite '") + key + "'");
    return v;
}

inline ChannelPath path_from_json(const json &j)
{
    if (!j.is_object())
        throw input_error("path record must be an object");
    ChannelPath p;
    p.delay_s = required_number(j, "delay_s");
    p.magnitude = required_number(j, "magnitude");
    p.distance_m = required_number(j, "distance_m");
    if (!j.contains("j") || !j.at("j").is_number_integer())
        throw input_error("missing or non-integer 'j'");
    p.sample_index_j = j.at("j").get<std::int64_t>();
    return p;
}

inline std::vector<ChannelPath> paths_from_json(const json &arr)
{
    if (!arr.is_array() || arr.empty())
        throw input_error("'paths' must be a non-empty array");
    std::vector<ChannelPath> out;
    for (const auto &p : arr)
        out.push_back(path_from_json(p));
    for (std::size_t n = 0; n < out.size(); ++n)
    {
        if (!(out[n].magnitude > 0.0))
            throw input_error("path magnitudes must be positive");
        if (n > 0 && !(out[n].delay_s > out[n - 1].delay_s))
            throw input_error("path delays must be strictly increasing");
    }
    return out;
}
} // namespace detail

inline std::vector<ChannelRealization> realizations_from_json(const json &doc)
{
    if (!doc.is_array() || doc.empty())
        throw input_error("realization file must be a non-empty JSON array");
    std::vector<ChannelRealization> out;
    if (doc.front().is_object() && doc.front().contains("delay_s"))
    {
        ChannelRealization ch;
        ch.paths = detail::paths_from_json(doc);
        out.push_back(std::move(ch));
        return out;
    }
    for (const auto &item : doc)
    {
        if (!item.is_object())
            throw input_error("realization entries must be objects");
        ChannelRealization ch;
        ch.class_id = detail::required<int>(item, "class");
        ch.cluster = detail::required<int>(item, "cluster");
        ch.seed = detail::required<std::uint64_t>(item, "seed");
        if (!item.contains("paths"))
            throw input_error("missing key 'paths'");
        ch.paths = detail::paths_from_json(item.at("paths"));
        out.push_back(std::move(ch));
    }
    return out;
}

inline json parse_json_text(const std::string &text)
{
    try
    {
        return json::parse(text);
    }
    catch (const nlohmann::json::parse_error &e)
    {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
}

inline std::string read_text_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw input_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---- response CSV ------------------------------------------------------------

inline constexpr const char *response_csv_header = "freq_hz,re,im,abs,phase_rad";

inline std::string format_g17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void write_response_csv(std::ostream &os, const FrequencyResponse &fr)
{
    os << response_csv_header << '\n';
    for (std::size_t n = 0; n < fr.h.size(); ++n)
    {
        const auto h = fr.h[n];
        os << format_g17(fr.freq_grid_hz[n]) << ',' << format_g17(h.real()) << ',' << format_g17(h.imag()) << ','
           << format_g17(std::abs(h)) << ',' << format_g17(std::arg(h)) << '\n';
    }
}

// ---- validation report ---------------------------------------------------------

inline json report_to_json(const GofReport &r)
{
    json j;
    j["model"] = r.model;
    j["class"] = r.class_id ? json(*r.class_id) : json(nullptr);
    j["cluster"] = r.cluster;
    j["samples"] = r.samples;
    auto opt = [&](const char *key, const std::optional<double> &v) {
        if (v)
            j[key] = *v;
    };
    opt("ks_statistic", r.ks_statistic);
    opt("empirical_mean", r.empirical_mean);
    opt("empirical_variance", r.empirical_variance);
    opt("analytic_mean", r.analytic_mean);
    opt("analytic_variance", r.analytic_variance);
    opt("empirical_median", r.empirical_median);
    opt("analytic_median", r.analytic_median);
    json checks = json::array();
    for (const auto &c : r.checks)
        checks.push_back({{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"passed", c.passed}});
    j["checks"] = std::move(checks);
    if (!r.notes.empty())
        j["notes"] = r.notes;
    j["passed"] = r.passed();
    return j;
}

inline json validation_run_to_json(const ValidationRun &run)
{
    json out;
    out["summary"] = {{"cells", run.reports.size()},
                      {"passed", run.passed()},
                      {"failed", run.failed()},
                      {"skipped", run.skipped.size()}};
    json reports = json::array();
    for (const auto &r : run.reports)
        reports.push_back(report_to_json(r));
    out["reports"] = std::move(reports);
    json skipped = json::array();
    for (const auto &s : run.skipped)
        skipped.push_back({{"model", s.model}, {"class", s.class_id}, {"cluster", s.cluster}, {"reason", s.reason}});
    out["skipped"] = std::move(skipped);
    return out;
}

// ---- config file ---------------------------------------------------------------

struct CliConfig
{
    GeneratorConfig generator;
    FrequencyGridSpec grid;
    std::optional<std::string> out;     // realization file
    std::optional<std::string> out_dir; // response CSVs
    std::optional<std::string> report;  // validation report
};

// Unknown keys are rejected; absent keys keep their defaults.
inline CliConfig config_from_json(const json &doc)
{
    if (!doc.is_object())
        throw input_error("config must be a JSON object");
    CliConfig cfg;
    auto &g = cfg.generator;
    for (const auto &[key, value] : doc.items())
    {
        if (key == "cable")
            g.cable = cable_from_name(detail::required<std::string>(doc, "cable")).kind;
        else if (key == "interval_unit_s")
            g.interval_unit_s = detail::required_number(doc, "interval_unit_s");
        else if (key == "sample_period_s")
            g.sample_period_s = detail::required_number(doc, "sample_period_s");
        else if (key == "cluster_distance_step_m")
            g.cluster_distance_step_m = detail::required_number(doc, "cluster_distance_step_m");
        else if (key == "direct_distance_m")
            g.direct_distance_m = value.is_null() ? std::nullopt
                                                  : std::optional(detail::required_number(doc, "direct_distance_m"));
        else if (key == "gev_cap")
            g.gev_cap = detail::required_number(doc, "gev_cap");
        else if (key == "phase_model")
            g.phase_model = phase_model_from_name(detail::required<std::string>(doc, "phase_model"));
        else if (key == "seed")
            g.seed = detail::required<std::uint64_t>(doc, "seed");
        else if (key == "grid")
        {
            if (!value.is_object())
                throw input_error("'grid' must be an object");
            for (const auto &[gk, gv] : value.items())
            {
                if (gk == "f_min_hz")
                    cfg.grid.f_min_hz = detail::required_number(value, "f_min_hz");
                else if (gk == "f_max_hz")
                    cfg.grid.f_max_hz = detail::required_number(value, "f_max_hz");
                else if (gk == "points")
                    cfg.grid.points = detail::required<std::size_t>(value, "points");
                else
                    throw input_error("unknown grid key '" + gk + "'");
            }
        }
        else if (key == "out")
            cfg.out = detail::required<std::string>(doc, "out");
        else if (key == "out_dir")
            cfg.out_dir = detail::required<std::string>(doc, "out_dir");
        else if (key == "report")
            cfg.report = detail::required<std::string>(doc, "report");
        else
            throw input_error("unknown config key '" + key + "'");
    }
    g.validate();
    return cfg;
}

} // namespace plcgen

#endif
