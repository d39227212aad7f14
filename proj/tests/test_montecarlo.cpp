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

#include <cmath>

#include "mmsec/analytics.hpp"
#include "mmsec/montecarlo.hpp"

using namespace mmsec;

namespace
{
    MonteCarloOptions opts(int n, int threads = 1, std::uint64_t seed = 3)
    {
        MonteCarloOptions o;
        o.n_realizations = n;
        o.threads = threads;
        o.seed = seed;
        return o;
    }
}

TEST(MonteCarlo, ThreadCountDoesNotChangeResults)
{
    const auto cfg = make_simplified(2, 4, 32, 4, 10.0, 0.6, 0.3);
    for (DataKind d : {DataKind::SZF, DataKind::CRCI, DataKind::POLY})
    {
        const auto a = ergodic_secrecy_rate(cfg, d, ANKind::SNS, opts(24, 1));
        const auto b = ergodic_secrecy_rate(cfg, d, ANKind::SNS, opts(24, 3));
        EXPECT_EQ(a.gamma_mc, b.gamma_mc) << to_string(d);
        EXPECT_EQ(a.C_eve_mc, b.C_eve_mc) << to_string(d);
        EXPECT_EQ(a.stderr_R_sec, b.stderr_R_sec) << to_string(d);
    }
}

TEST(MonteCarlo, SeedChangesResults)
{
    const auto cfg = make_simplified(2, 4, 32, 4, 10.0, 0.6, 0.3);
    const auto a = estimate_mt_sinr(cfg, DataKind::SZF, ANKind::SNS, opts(10, 1, 1));
    const auto b = estimate_mt_sinr(cfg, DataKind::SZF, ANKind::SNS, opts(10, 1, 2));
    EXPECT_NE(a.gamma, b.gamma);
}

TEST(MonteCarlo, NoArtificialNoiseAtFullDataPower)
{
    const auto cfg = make_simplified(2, 4, 32, 4, 10.0, 1.0, 0.3);
    const auto r = ergodic_secrecy_rate(cfg, DataKind::SZF, ANKind::SNS, opts(20));
    EXPECT_EQ(r.components.an_intra, 0.0);
    EXPECT_EQ(r.components.an_inter, 0.0);
    EXPECT_EQ(r.R_sec_mc, 0.0);
    EXPECT_EQ(r.singular_X_count, 20);
}

TEST(MonteCarlo, NoEavesdropperLeavesMtRate)
{
    const auto cfg = make_simplified(2, 4, 32, 0, 10.0, 0.6, 0.3);
    const auto r = ergodic_secrecy_rate(cfg, DataKind::SZF, ANKind::SNS, opts(20));
    EXPECT_EQ(r.C_eve_mc, 0.0);
    EXPECT_DOUBLE_EQ(r.R_sec_mc, r.R_mt_mc);
}

TEST(MonteCarlo, EavesdropperOutnumberingAnDimensionsIsSingular)
{
    // One cell, L = N_T - K = 8 < N_E: X has rank at most 8
    const auto cfg = make_simplified(1, 8, 16, 10, 10.0, 0.6, 0.0);
    const auto e = estimate_eve_capacity(cfg, DataKind::SZF, ANKind::SNS, opts(10));
    EXPECT_EQ(e.singular_X_count, 10);
    EXPECT_TRUE(std::isinf(e.C_eve));
    EXPECT_EQ(ergodic_secrecy_rate(cfg, DataKind::SZF, ANKind::SNS, opts(10)).R_sec_mc, 0.0);
}

TEST(MonteCarlo, StandardErrorShrinksWithRealizations)
{
    const auto cfg = make_simplified(2, 4, 32, 4, 10.0, 0.6, 0.3);
    const auto a = estimate_mt_sinr(cfg, DataKind::SZF, ANKind::SNS, opts(25));
    const auto b = estimate_mt_sinr(cfg, DataKind::SZF, ANKind::SNS, opts(400));
    ASSERT_GT(b.stderr_gamma, 0.0);
    const double ratio = a.stderr_gamma / b.stderr_gamma;
    EXPECT_GT(ratio, 2.0);
    EXPECT_LT(ratio, 8.0);
}

TEST(MonteCarlo, AgreesWithLargeSystemSinr)
{
    const auto cfg = make_simplified(2, 16, 128, 8, 10.0, 0.75, 0.3);
    for (DataKind d : {DataKind::MF, DataKind::SZF, DataKind::SRCI})
    {
        const double mc = estimate_mt_sinr(cfg, d, ANKind::SNS, opts(60)).gamma;
        const double an = sinr_analytic(d, ANKind::SNS, cfg).gamma;
        EXPECT_NEAR(mc / an, 1.0, 0.1) << to_string(d);
    }
}

TEST(MonteCarlo, EavesdropperBelowBound)
{
    const auto cfg = make_simplified(2, 16, 128, 13, 10.0, 0.5, 0.3);
    const auto e = estimate_eve_capacity(cfg, DataKind::SZF, ANKind::SNS, opts(60));
    const auto b = eve_capacity_bound(cfg, an_dimension(ANKind::SNS, cfg));
    EXPECT_LE(e.C_eve, b.value + 2.0 * e.stderr_C_eve);
    EXPECT_GT(e.C_eve, b.value - 0.2);
}

TEST(MonteCarlo, PlanCarriesDesignedCoefficients)
{
    const auto cfg = make_simplified(2, 16, 128, 8, 10.0, 0.75, 0.3);
    MonteCarloOptions o;
    o.poly_data_order = 3;
    o.poly_an_order = 2;
    const auto plan = make_plan(cfg, DataKind::POLY, ANKind::POLY, o);
    EXPECT_EQ(plan.mu.size(), 4u);
    EXPECT_EQ(plan.nu.size(), 3u);
    EXPECT_EQ(plan.L, 112);
    const auto rci = make_plan(cfg, DataKind::SRCI, ANKind::SNS);
    EXPECT_NEAR(rci.kappa, sinr_analytic(DataKind::SRCI, ANKind::SNS, cfg).kappa, 1e-14);
}

TEST(PhiSearch, AnalyticOptimumIsInteriorAndRefined)
{
    const auto cfg = make_simplified(7, 10, 100, 5, 10.0, 0.5, 0.1);
    const auto r = optimize_phi(cfg, DataKind::SZF, ANKind::SNS, Evaluator::Analytic, 32);
    EXPECT_GT(r.phi_opt, 0.0);
    EXPECT_LT(r.phi_opt, 1.0);
    for (double v : r.curve)
        EXPECT_LE(v, r.R_sec_opt + 1e-12);
    EXPECT_TRUE(r.unimodal);
}

TEST(PhiSearch, SeparatedMaxima)
{
    EXPECT_EQ(count_separated_maxima({0, 1, 2, 1, 0}, 0.1), 1);
    EXPECT_EQ(count_separated_maxima({0, 2, 0.5, 2, 0}, 0.1), 2);
    EXPECT_EQ(count_separated_maxima({0, 2, 1.95, 2, 0}, 0.1), 1);
}
