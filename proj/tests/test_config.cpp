// mmsec: secure multi-cell massive MIMO precoding laboratory
// Copyright (C) 2026 The mmsec authors
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

#include <gtest/gtest.h>

#include <sstream>

#include "mmsec/config.hpp"

using namespace mmsec;

namespace
{
    const char *basic_text = R"(# two cells
M = 2
K = 10
N_T = 100
N_E = 10
P_T_dB = 10
phi = 0.75
tau = 10
p_tau = 1
T = 110
rho = 0.3
)";

    ParsedConfig parse(const std::string &text)
    {
        std::istringstream in(text);
        return parse_config(in);
    }

    bool has_key(const ParsedConfig &pc, const std::string &key)
    {
        for (const auto &d : pc.diagnostics)
            if (d.key == key)
                return true;
        return false;
    }

    std::string replace_line(std::string text, const std::string &from, const std::string &to)
    {
        text.replace(text.find(from), from.size(), to);
        return text;
    }
}

TEST(Config, ParsesBasicFile)
{
    const auto pc = parse(basic_text);
    ASSERT_TRUE(pc.ok());
    EXPECT_EQ(pc.cfg.M, 2);
    EXPECT_EQ(pc.cfg.K, 10);
    EXPECT_EQ(pc.cfg.N_T, 100);
    EXPECT_NEAR(pc.cfg.P_T, 10.0, 1e-12);
    EXPECT_DOUBLE_EQ(pc.cfg.path_loss.rho(), 0.3);
    EXPECT_DOUBLE_EQ(pc.cfg.beta(), 0.1);
    EXPECT_DOUBLE_EQ(pc.cfg.alpha(), 0.1);
}

TEST(Config, DerivedPowers)
{
    const auto pc = parse(basic_text);
    const Powers pw = derived_powers(pc.cfg, 90);
    EXPECT_NEAR(pw.p, 0.75, 1e-12);
    EXPECT_NEAR(pw.q, 2.5 / 90.0, 1e-12);
}

TEST(Config, InterferenceFactors)
{
    const auto pc = parse(basic_text);
    const auto f = interference_factors(pc.cfg);
    EXPECT_NEAR(f.a, 1.3, 1e-12);
    EXPECT_NEAR(f.c, 1.09, 1e-12);
}

TEST(Config, PhiOutOfRangeNamesKeyAndLine)
{
    const auto pc = parse(replace_line(basic_text, "phi = 0.75", "phi = 1.5"));
    ASSERT_FALSE(pc.ok());
    ASSERT_TRUE(has_key(pc, "phi"));
    for (const auto &d : pc.diagnostics)
        if (d.key == "phi")
        {
            EXPECT_EQ(d.line, 7);
            EXPECT_NE(d.message.find("1.5"), std::string::npos);
        }
}

TEST(Config, TooManyUsersRejected)
{
    const auto pc = parse(replace_line(basic_text, "K = 10", "K = 200"));
    EXPECT_TRUE(has_key(pc, "K"));
}

TEST(Config, UnknownDuplicateAndMissingKeys)
{
    std::string text = basic_text;
    text += "colour = blue\nM = 3\n";
    text = replace_line(text, "N_E = 10\n", "");
    const auto pc = parse(text);
    EXPECT_TRUE(has_key(pc, "colour"));
    EXPECT_TRUE(has_key(pc, "M"));
    ASSERT_TRUE(has_key(pc, "N_E"));
    for (const auto &d : pc.diagnostics)
        if (d.key == "N_E")
            EXPECT_EQ(d.line, 0);
}

TEST(Config, MalformedNumber)
{
    const auto pc = parse(replace_line(basic_text, "K = 10", "K = ten"));
    EXPECT_TRUE(has_key(pc, "K"));
}

TEST(Config, UnreadableFileThrows)
{
    EXPECT_THROW(load_config("/nonexistent/dir/cfg.txt"), config_error);
}

TEST(Config, ValidateListsAllViolations)
{
    SystemConfig cfg = make_simplified(2, 10, 100, 10, 10.0, 0.5, 0.3);
    EXPECT_NO_THROW(cfg.validate());
    cfg.phi = 0.0;
    cfg.K = 500;
    EXPECT_GE(cfg.violations().size(), 2u);
    EXPECT_THROW(cfg.validate(), config_error);
}

TEST(Config, SimplifiedDefaults)
{
    const SystemConfig cfg = make_simplified(2, 10, 100, 10, 10.0, 0.5, 0.3);
    EXPECT_EQ(cfg.tau, 10);
    EXPECT_NEAR(cfg.pilot_energy(), 10.0, 1e-12);
    EXPECT_EQ(cfg.T, 110);
}

TEST(Config, GeneralFromSimplifiedMatchesPattern)
{
    const auto pl = PathLossModel::general_from_simplified(3, 4, 0.2);
    const auto ps = PathLossModel::simplified(0.2);
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n)
            for (int k = 0; k < 4; ++k)
                EXPECT_DOUBLE_EQ(pl.gain(m, n, k), ps.gain(m, n, k));
    for (int m = 0; m < 3; ++m)
        EXPECT_DOUBLE_EQ(pl.eve_gain(m), ps.eve_gain(m));
}
