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

#include <set>
#include <sstream>

#include "mmsec/experiment.hpp"

using namespace mmsec;

namespace
{
    Scenario small(std::vector<EvaluatorKind> ev)
    {
        Scenario sc;
        sc.name = "small";
        sc.variants.push_back({"", make_simplified(2, 4, 32, 4, 10.0, 0.6, 0.3)});
        sc.sweep = SweepVar::phi;
        sc.values = {0.3, 0.6, 0.9};
        sc.pairs = {{DataKind::SZF, ANKind::SNS}, {DataKind::MF, ANKind::RANDOM}};
        sc.evaluators = std::move(ev);
        sc.n_realizations = 10;
        return sc;
    }

    std::string csv(const std::vector<CsvRow> &rows)
    {
        std::ostringstream os;
        write_csv(os, rows, false);
        return os.str();
    }
}

TEST(Catalog, HasAllScenarios)
{
    const auto cat = scenario_catalog();
    EXPECT_EQ(cat.size(), 10u);
    std::set<std::string> names;
    for (const auto &sc : cat)
    {
        names.insert(sc.name);
        EXPECT_TRUE(validate_scenario(sc).empty()) << sc.name;
        for (const auto &v : sc.variants)
            EXPECT_LE(v.base.N_T, 256) << sc.name;
    }
    for (int i = 0; i <= 9; ++i)
        EXPECT_TRUE(names.count("fig" + std::to_string(i)));
    EXPECT_THROW(find_scenario("fig10"), config_error);
}

TEST(Runner, SinglePointAnalytic)
{
    Scenario sc = small({EvaluatorKind::Analytic});
    sc.values = {0.5};
    sc.pairs.resize(1);
    const auto rows = run_scenario(sc);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].status, "OK");
    EXPECT_EQ(rows[0].data_precoder, "SZF");
    EXPECT_EQ(rows[0].an_precoder, "SNS");
    EXPECT_DOUBLE_EQ(rows[0].phi, 0.5);
    EXPECT_GT(rows[0].R_sec, 0.0);
}

TEST(Runner, OutputIndependentOfJobs)
{
    const Scenario sc = small({EvaluatorKind::Analytic, EvaluatorKind::MonteCarlo});
    const auto a = run_scenario(sc, 1);
    const auto b = run_scenario(sc, 3);
    EXPECT_EQ(a.size(), 12u);
    EXPECT_EQ(csv(a), csv(b));
}

TEST(Runner, InfeasiblePairsAreSkipped)
{
    Scenario sc = small({EvaluatorKind::Analytic});
    sc.variants[0].base = make_simplified(2, 20, 32, 4, 10.0, 0.6, 0.3);
    sc.pairs = {{DataKind::CZF, ANKind::SNS}, {DataKind::SZF, ANKind::CNS}};
    for (const auto &r : run_scenario(sc))
        EXPECT_EQ(r.status.rfind("SKIPPED", 0), 0u) << r.status;
}

TEST(Runner, ScalarEvaluators)
{
    Scenario sc = small({EvaluatorKind::AlphaS, EvaluatorKind::FlopsData, EvaluatorKind::FlopsAN});
    sc.values = {0.5};
    sc.pairs.resize(1);
    const auto rows = run_scenario(sc);
    ASSERT_EQ(rows.size(), 3u);
    for (const auto &r : rows)
    {
        EXPECT_EQ(r.status, "OK");
        EXPECT_GT(r.R_sec, 0.0);
    }
}

TEST(Csv, HeaderAndQuoting)
{
    CsvRow r;
    r.scenario = "a,b";
    r.status = "SKIPPED(needs \"room\")";
    std::ostringstream os;
    write_csv(os, {r}, true);
    const std::string s = os.str();
    EXPECT_EQ(s.rfind("# generated ", 0), 0u);
    EXPECT_NE(s.find("scenario,sweep_var,sweep_value,data_precoder,an_precoder,evaluator,phi,R_mt,C_eve,R_sec,"
                     "gamma_linear,stderr_R_sec,n_realizations,singular_X_count,status"),
              std::string::npos);
    EXPECT_NE(s.find("\"a,b\""), std::string::npos);
    EXPECT_NE(s.find("\"SKIPPED(needs \"\"room\"\")\""), std::string::npos);
}

TEST(Sweep, UserCountKeepsPilotEnergy)
{
    const auto base = make_simplified(2, 10, 100, 10, 10.0, 0.5, 0.3);
    const auto cfg = apply_sweep(base, SweepVar::K, 20, false);
    EXPECT_EQ(cfg.K, 20);
    EXPECT_NEAR(cfg.pilot_energy(), base.pilot_energy(), 1e-12);
    EXPECT_EQ(cfg.T - cfg.tau, base.T - base.tau);
    const auto nt = apply_sweep(base, SweepVar::N_T, 200, true);
    EXPECT_EQ(nt.K, 20);
    EXPECT_FALSE(apply_sweep(base, SweepVar::phi, 1.5, false).violations().empty());
}
