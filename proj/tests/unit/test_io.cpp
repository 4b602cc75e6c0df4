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

#include <plcgen/io.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>

using namespace plcgen;

namespace
{
json load_fixture()
{
    return parse_json_text(read_text_file(std::string(PLCGEN_FIXTURE_DIR) + "/published_tables.json"));
}

// Walks the fixture; each string leaf is either a symbol/form label compared
// verbatim or a published number compared through strtod.
void compare_tree(const json &fixture, const json &dumped, const std::string &where, int &leaves)
{
    ASSERT_TRUE(dumped.is_object() || !fixture.is_object()) << where;
    if (fixture.is_object())
    {
        ASSERT_EQ(fixture.size(), dumped.size()) << where;
        for (const auto &[key, value] : fixture.items())
        {
            ASSERT_TRUE(dumped.contains(key)) << where << "/" << key;
            compare_tree(value, dumped.at(key), where + "/" + key, leaves);
        }
        return;
    }
    const std::string text = fixture.get<std::string>();
    ++leaves;
    if (dumped.is_string())
    {
        EXPECT_EQ(dumped.get<std::string>(), text) << where;
        return;
    }
    ASSERT_TRUE(dumped.is_number()) << where;
    EXPECT_EQ(dumped.get<double>(), std::strtod(text.c_str(), nullptr)) << where << " published " << text;
}
} // namespace

TEST(ParamsDump, MatchesPublishedTables)
{
    int leaves = 0;
    compare_tree(load_fixture(), params_to_json(), "", leaves);
    // 24 + 20 + 80 table constants, 22 GEV coefficients, labels and version
    EXPECT_GT(leaves, 24 + 20 + 80 + 22);
}

TEST(ParamsDump, SpotValues)
{
    const auto j = params_to_json();
    EXPECT_EQ(j["path_count"]["class_2"]["p1"].get<double>(), 1.623);
    EXPECT_EQ(j["other_path"]["cluster_1"]["ao"].get<double>(), 0.4194);
    EXPECT_EQ(j["gev"]["class_5"]["eta"]["symbol"], "delta");
    EXPECT_EQ(j["gev"]["class_5"]["eps"]["symbol"], "mu");
}

TEST(ParamsDumpProperty, ReparseIsByteIdentical)
{
    const std::string text = params_to_json().dump(2);
    EXPECT_EQ(parse_json_text(text).dump(2), text);
}

TEST(RealizationJson, RoundTrip)
{
    GeneratorConfig cfg;
    cfg.seed = 4;
    const auto batch = generate_batch(ClassId(4), ClusterIndex(6), cfg, 5);
    const std::string text = realizations_to_json(batch).dump(2);
    const auto back = realizations_from_json(parse_json_text(text));
    ASSERT_EQ(back.size(), batch.size());
    for (std::size_t n = 0; n < batch.size(); ++n)
        EXPECT_EQ(back[n], batch[n]);
}

TEST(RealizationJson, BarePathArray)
{
    const auto doc = parse_json_text(R"([{"delay_s":1e-6,"magnitude":0.5,"distance_m":40,"j":0},
                                         {"delay_s":2e-6,"magnitude":0.2,"distance_m":80,"j":10}])");
    const auto chs = realizations_from_json(doc);
    ASSERT_EQ(chs.size(), 1u);
    ASSERT_EQ(chs[0].paths.size(), 2u);
    EXPECT_EQ(chs[0].paths[1].sample_index_j, 10);
}

TEST(RealizationJson, Malformed)
{
    EXPECT_THROW(parse_json_text("{not json"), input_error);
    EXPECT_THROW(realizations_from_json(json::object()), input_error);
    EXPECT_THROW(realizations_from_json(json::array()), input_error);
    EXPECT_THROW(realizations_from_json(parse_json_text(R"([{"delay_s":1,"magnitude":0.5,"distance_m":4}])")),
                 input_error);
    EXPECT_THROW(realizations_from_json(parse_json_text(
                     R"([{"delay_s":2,"magnitude":0.5,"distance_m":4,"j":0},{"delay_s":1,"magnitude":0.5,"distance_m":4,"j":0}])")),
                 input_error);
    EXPECT_THROW(realizations_from_json(parse_json_text(R"([{"class":2,"cluster":1,"seed":3}])")), input_error);
    EXPECT_THROW(read_text_file("/nonexistent/file.json"), input_error);
}

TEST(ResponseCsv, HeaderAndPrecision)
{
    FrequencyResponse fr;
    fr.freq_grid_hz = {0.0, 1e6};
    fr.h = {{0.1, 0.0}, {0.0, -0.2}};
    std::ostringstream os;
    write_response_csv(os, fr);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, "freq_hz,re,im,abs,phase_rad");
    std::getline(is, line);
    EXPECT_EQ(line, "0,0.10000000000000001,0,0.10000000000000001,0");
    std::getline(is, line);
    EXPECT_EQ(line, "1000000,0,-0.20000000000000001,0.20000000000000001,-1.5707963267948966");
}

TEST(ConfigFile, DefaultsAndOverrides)
{
    const auto empty = config_from_json(json::object());
    EXPECT_EQ(empty.generator.interval_unit_s, 1e-6);
    EXPECT_EQ(empty.generator.sample_period_s, 1e-7);
    EXPECT_EQ(empty.generator.cluster_distance_step_m, 10.0);
    EXPECT_EQ(empty.generator.gev_cap, 50.0);
    EXPECT_EQ(empty.generator.phase_model, PhaseModel::eq11_literal);
    EXPECT_EQ(empty.grid.points, 1024u);
    EXPECT_EQ(empty.grid.f_max_hz, 30e6);

    const auto cfg = config_from_json(parse_json_text(
        R"({"cable":"nayy35","seed":9,"phase_model":"geometric_delay","grid":{"points":64},"direct_distance_m":25})"));
    EXPECT_EQ(cfg.generator.cable, CableKind::nayy35);
    EXPECT_EQ(cfg.generator.seed, 9u);
    EXPECT_EQ(cfg.generator.phase_model, PhaseModel::geometric_delay);
    EXPECT_EQ(cfg.grid.points, 64u);
    EXPECT_EQ(*cfg.generator.direct_distance_m, 25.0);
}

TEST(ConfigFile, RejectsUnknownKeysAndBadValues)
{
    EXPECT_THROW(config_from_json(parse_json_text(R"({"colour":"red"})")), input_error);
    EXPECT_THROW(config_from_json(parse_json_text(R"({"grid":{"step":3}})")), input_error);
    EXPECT_THROW(config_from_json(parse_json_text(R"({"gev_cap":"big"})")), input_error);
    EXPECT_THROW(config_from_json(parse_json_text(R"({"gev_cap":-1})")), domain_error);
    EXPECT_THROW(config_from_json(parse_json_text(R"({"cable":"cat5"})")), unknown_entity_error);
    EXPECT_THROW(config_from_json(json::array()), input_error);
}

TEST(ValidationReportJson, Summary)
{
    const auto run = validate_single(ClassId(3), ClusterIndex(1), 500, 1);
    const auto j = validation_run_to_json(run);
    EXPECT_EQ(j["summary"]["cells"].get<std::size_t>(), run.reports.size());
    EXPECT_EQ(j["summary"]["passed"].get<std::size_t>() + j["summary"]["failed"].get<std::size_t>(),
              run.reports.size());
    EXPECT_TRUE(j["reports"][1].contains("ks_statistic"));
    EXPECT_TRUE(j["reports"][2]["class"].is_null());
}
