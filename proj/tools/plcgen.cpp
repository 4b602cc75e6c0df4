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

// Command-line front end.
//
// Exit codes: 0 success, 1 validation failed, 2 usage or unknown entity,
// 3 parameter domain (class/cluster/GEV), 4 malformed input, 5 path distance
// below the loss-model minimum.

#include <plcgen/plcgen.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace
{

enum ExitCode : int
{
    exit_ok = 0,
    exit_validation_failed = 1,
    exit_usage = 2,
    exit_parameter_domain = 3,
    exit_malformed_input = 4,
    exit_distance_domain = 5
};

int exit_code(const plcgen::error &e)
{
    using namespace plcgen;
    if (dynamic_cast<const distance_domain_error *>(&e))
        return exit_distance_domain;
    if (dynamic_cast<const input_error *>(&e) || dynamic_cast<const grid_error *>(&e))
        return exit_malformed_input;
    if (dynamic_cast<const unsupported_class_error *>(&e) || dynamic_cast<const unsupported_cluster_error *>(&e) ||
        dynamic_cast<const parameter_domain_error *>(&e) || dynamic_cast<const truncation_exhausted_error *>(&e) ||
        dynamic_cast<const data_integrity_error *>(&e))
        return exit_parameter_domain;
    return exit_usage;
}

void write_output(const std::optional<std::string> &path, const std::string &text)
{
    if (!path || *path == "-")
    {
        std::cout << text;
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out)
        throw plcgen::input_error("cannot write '" + *path + "'");
    out << text;
}

plcgen::CliConfig load_config()
{
    const char *path = std::getenv("PLCGEN_CONFIG");
    if (!path || !*path)
        return {};
    try
    {
        return plcgen::config_from_json(plcgen::parse_json_text(plcgen::read_text_file(path)));
    }
    catch (const plcgen::error &e)
    {
        throw plcgen::unknown_entity_error(std::string("PLCGEN_CONFIG: ") + e.what());
    }
}

template <class T> void override_if_set(const CLI::Option *opt, const T &value, T &target)
{
    if (opt->count() > 0)
        target = value;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"plcgen - statistical powerline channel generator"};
    app.require_subcommand(1);

    // cable-params
    auto *cable_cmd = app.add_subcommand("cable-params", "per-unit-length RLCG, Z0 and phase velocity of a cable");
    std::string cable_name = "nayy150";
    double cable_freq = 1e6;
    cable_cmd->add_option("--cable", cable_name, "nayy150 or nayy35")->required();
    cable_cmd->add_option("--freq", cable_freq, "frequency in Hz");

    // generate
    auto *gen_cmd = app.add_subcommand("generate", "synthesize channel realizations");
    int gen_class = 0, gen_cluster = 0;
    std::size_t gen_count = 1;
    std::uint64_t gen_seed = 0;
    std::string gen_out, gen_cable, gen_phase;
    double interval_unit = 0, sample_period = 0, distance_step = 0, direct_distance = 0, gev_cap = 0;
    gen_cmd->add_option("--class", gen_class, "channel class 1..5")->required();
    gen_cmd->add_option("--cluster", gen_cluster, "cluster index")->required();
    gen_cmd->add_option("--count", gen_count, "number of realizations");
    auto *seed_opt = gen_cmd->add_option("--seed", gen_seed, "64-bit seed");
    auto *out_opt = gen_cmd->add_option("--out", gen_out, "output JSON file (default stdout)");
    auto *gcable_opt = gen_cmd->add_option("--cable", gen_cable, "nayy150 or nayy35");
    auto *iu_opt = gen_cmd->add_option("--interval-unit", interval_unit, "seconds per GEV interval unit");
    auto *sp_opt = gen_cmd->add_option("--sample-period", sample_period, "seconds per time-sample index");
    auto *ds_opt = gen_cmd->add_option("--distance-step", distance_step, "first-path metres per cluster index");
    auto *dd_opt = gen_cmd->add_option("--direct-distance", direct_distance, "explicit first-path distance, m");
    auto *cap_opt = gen_cmd->add_option("--gev-cap", gev_cap, "GEV truncation cap, interval units");

    // response
    auto *resp_cmd = app.add_subcommand("response", "frequency responses of a realization file");
    std::string resp_in, resp_out_dir, resp_phase;
    double f_min = 0, f_max = 0;
    std::size_t points = 0;
    resp_cmd->add_option("--in", resp_in, "realization JSON file")->required();
    auto *od_opt = resp_cmd->add_option("--out-dir", resp_out_dir, "directory for response_NNNN.csv");
    auto *fmin_opt = resp_cmd->add_option("--f-min", f_min, "lowest frequency, Hz");
    auto *fmax_opt = resp_cmd->add_option("--f-max", f_max, "highest frequency, Hz");
    auto *pts_opt = resp_cmd->add_option("--points", points, "number of grid points");
    auto *phase_opt = resp_cmd->add_option("--phase-model", resp_phase, "eq11_literal or geometric_delay");

    // validate
    auto *val_cmd = app.add_subcommand("validate", "Monte Carlo goodness-of-fit of the samplers");
    int val_class = 0, val_cluster = 0;
    bool val_all = false;
    std::size_t val_samples = 100000;
    std::uint64_t val_seed = 1;
    std::string val_report;
    auto *vclass_opt = val_cmd->add_option("--class", val_class, "channel class 2..5");
    auto *vcluster_opt = val_cmd->add_option("--cluster", val_cluster, "cluster index 1..20");
    auto *all_flag = val_cmd->add_flag("--all", val_all, "every class 2..5 and cluster 1..20");
    val_cmd->add_option("--samples", val_samples, "draws per cell");
    auto *vseed_opt = val_cmd->add_option("--seed", val_seed, "64-bit seed");
    auto *report_opt = val_cmd->add_option("--report", val_report, "report JSON file (default stdout)");
    all_flag->excludes(vclass_opt);
    all_flag->excludes(vcluster_opt);

    // params dump
    auto *params_cmd = app.add_subcommand("params", "embedded parameter tables");
    params_cmd->require_subcommand(1);
    auto *dump_cmd = params_cmd->add_subcommand("dump", "print every fitted constant as JSON");
    std::string dump_out;
    auto *dump_out_opt = dump_cmd->add_option("--out", dump_out, "output file (default stdout)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try
    {
        plcgen::CliConfig cfg = load_config();

        if (*cable_cmd)
        {
            const auto cable = plcgen::cable_from_name(cable_name);
            const auto p = plcgen::lumped_params(cable, cable_freq);
            const auto z0 = plcgen::char_impedance(p);
            plcgen::json j;
            j["cable"] = plcgen::cable_name(cable.kind);
            j["freq_hz"] = cable_freq;
            j["C_F_per_m"] = p.c_per_m;
            j["L_H_per_m"] = p.l_per_m;
            j["R_ohm_per_m"] = p.r_per_m;
            j["G_S_per_m"] = p.g_per_m;
            j["Z0_ohm"] = {{"re", z0.real()}, {"im", z0.imag()}};
            j["v_m_per_s"] = plcgen::phase_velocity(cable);
            std::cout << j.dump(2) << '\n';
            return exit_ok;
        }

        if (*gen_cmd)
        {
            auto g = cfg.generator;
            override_if_set(seed_opt, gen_seed, g.seed);
            if (gcable_opt->count())
                g.cable = plcgen::cable_from_name(gen_cable).kind;
            override_if_set(iu_opt, interval_unit, g.interval_unit_s);
            override_if_set(sp_opt, sample_period, g.sample_period_s);
            override_if_set(ds_opt, distance_step, g.cluster_distance_step_m);
            if (dd_opt->count())
                g.direct_distance_m = direct_distance;
            override_if_set(cap_opt, gev_cap, g.gev_cap);
            std::optional<std::string> out = cfg.out;
            if (out_opt->count())
                out = gen_out;

            const auto batch =
                plcgen::generate_batch(plcgen::ClassId(gen_class), plcgen::ClusterIndex(gen_cluster), g, gen_count);
            write_output(out, plcgen::realizations_to_json(batch).dump(2) + "\n");
            return exit_ok;
        }

        if (*resp_cmd)
        {
            auto grid_spec = cfg.grid;
            override_if_set(fmin_opt, f_min, grid_spec.f_min_hz);
            override_if_set(fmax_opt, f_max, grid_spec.f_max_hz);
            override_if_set(pts_opt, points, grid_spec.points);
            auto phase = cfg.generator.phase_model;
            if (phase_opt->count())
                phase = plcgen::phase_model_from_name(resp_phase);
            std::string out_dir = cfg.out_dir.value_or(".");
            if (od_opt->count())
                out_dir = resp_out_dir;

            const auto grid = plcgen::uniform_grid(grid_spec);
            const auto chs = plcgen::realizations_from_json(plcgen::parse_json_text(plcgen::read_text_file(resp_in)));
            std::filesystem::create_directories(out_dir);
            for (std::size_t n = 0; n < chs.size(); ++n)
            {
                const auto fr = plcgen::transfer_function(chs[n], grid, phase);
                char name[32];
                std::snprintf(name, sizeof name, "response_%04zu.csv", n);
                const auto path = std::filesystem::path(out_dir) / name;
                std::ofstream os(path, std::ios::binary);
                if (!os)
                    throw plcgen::input_error("cannot write '" + path.string() + "'");
                plcgen::write_response_csv(os, fr);
                std::cout << path.string() << '\n';
            }
            return exit_ok;
        }

        if (*val_cmd)
        {
            std::uint64_t seed = std::getenv("PLCGEN_CONFIG") ? cfg.generator.seed : val_seed;
            override_if_set(vseed_opt, val_seed, seed);
            if (val_samples == 0)
                throw plcgen::domain_error("--samples must be positive");
            std::optional<std::string> report = cfg.report;
            if (report_opt->count())
                report = val_report;

            plcgen::ValidationRun run;
            if (val_all)
                run = plcgen::validate_all(val_samples, seed);
            else if (vclass_opt->count() && vcluster_opt->count())
                run = plcgen::validate_single(plcgen::ClassId(val_class), plcgen::ClusterIndex(val_cluster),
                                              val_samples, seed);
            else
                throw plcgen::domain_error("validate needs --all or both --class and --cluster");

            write_output(report, plcgen::validation_run_to_json(run).dump(2) + "\n");
            return run.all_passed() ? exit_ok : exit_validation_failed;
        }

        if (*dump_cmd)
        {
            std::optional<std::string> out;
            if (dump_out_opt->count())
                out = dump_out;
            write_output(out, plcgen::params_to_json().dump(2) + "\n");
            return exit_ok;
        }
    }
    catch (const plcgen::error &e)
    {
        std::cerr << "plcgen: " << e.what() << '\n';
        return exit_code(e);
    }
    catch (const std::exception &e)
    {
        std::cerr << "plcgen: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
