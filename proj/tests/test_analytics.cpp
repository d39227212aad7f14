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
#include "mmsec/asymptotics.hpp"
#include "mmsec/flops.hpp"

using namespace mmsec;

namespace
{
    SystemConfig two_cell(int K = 10, int N_T = 100, double phi = 0.75, int N_E = 10)
    {
        return make_simplified(2, K, N_T, N_E, 10.0, phi, 0.3);
    }

    SystemConfig as_general(SystemConfig cfg)
    {
        cfg.path_loss = PathLossModel::general_from_simplified(cfg.M, cfg.K, cfg.path_loss.rho());
        return cfg;
    }

    const DataKind all_closed[] = {DataKind::MF, DataKind::SZF, DataKind::SRCI, DataKind::CZF, DataKind::CRCI};
    const ANKind all_an[] = {ANKind::SNS, ANKind::CNS, ANKind::RANDOM};
}

TEST(Leakage, TableValues)
{
    const auto cfg = two_cell();
    const double theta = 10.0 / 14.0;
    EXPECT_NEAR(an_leakage_table(ANKind::SNS, cfg).Qtilde, 1.3 - theta, 1e-12);
    EXPECT_NEAR(an_leakage_table(ANKind::CNS, cfg).Qtilde, 1.3 * (1.0 - theta), 1e-12);
    EXPECT_NEAR(an_leakage_table(ANKind::RANDOM, cfg).Qtilde, 1.3, 1e-12);
    EXPECT_EQ(an_dimension(ANKind::SNS, cfg), 90);
    EXPECT_EQ(an_dimension(ANKind::CNS, cfg), 80);
    EXPECT_EQ(an_dimension(ANKind::RANDOM, cfg), 100);
}

TEST(Leakage, GeneralMatchesTable)
{
    const auto cfg = two_cell();
    const auto gen = as_general(cfg);
    for (ANKind an : all_an)
        EXPECT_NEAR(an_leakage(an, gen).Qtilde, an_leakage_table(an, cfg).Qtilde, 1e-12) << to_string(an);
}

TEST(Leakage, NullSpaceNeedsRoom)
{
    auto cfg = two_cell(60, 100);
    EXPECT_THROW(an_dimension(ANKind::CNS, cfg), infeasible_error);
    EXPECT_NO_THROW(an_dimension(ANKind::SNS, cfg));
}

TEST(Sinr, PerfectCsiSingleCellZeroForcing)
{
    // Interference-free: gamma = phi (1 - beta) P_T / beta
    SystemConfig cfg = make_simplified(1, 25, 100, 0, 10.0, 0.75, 0.0);
    cfg.p_tau = 1e14;
    EXPECT_NEAR(sinr_analytic(DataKind::SZF, ANKind::SNS, cfg).gamma, 22.5, 1e-6);
}

TEST(Sinr, TableAgreesWithGeneralPath)
{
    for (double phi : {0.3, 0.75})
        for (int K : {5, 10, 20})
        {
            const auto cfg = two_cell(K, 100, phi);
            const auto gen = as_general(cfg);
            for (DataKind d : all_closed)
                for (ANKind an : all_an)
                {
                    if (an == ANKind::CNS && 2 * K >= 100)
                        continue;
                    const double a = sinr_table(d, an, cfg).gamma;
                    const double b = sinr_general(d, an, gen).gamma;
                    EXPECT_NEAR(a / b, 1.0, 1e-10) << to_string(d) << "/" << to_string(an) << " K=" << K;
                }
        }
}

TEST(Sinr, ComponentsReassemble)
{
    const auto cfg = two_cell();
    for (DataKind d : {DataKind::MF, DataKind::SZF, DataKind::CZF})
    {
        const auto r = sinr_analytic(d, ANKind::SNS, cfg);
        const auto &c = r.components;
        const double inv = c.estimation_loss + c.intra_cell + c.inter_cell + c.an_leakage + c.noise + c.contamination;
        EXPECT_NEAR(1.0 / inv, r.gamma, 1e-10 * r.gamma) << to_string(d);
    }
}

TEST(Sinr, RelationsHoldExactly)
{
    for (int K : {5, 10, 30})
        for (ANKind an : all_an)
        {
            const auto r = sinr_relations(two_cell(K, 100, 0.6), an);
            EXPECT_LT(std::abs(r.szf_over_mf), 1e-10);
            if (2 * K < 100)
                EXPECT_LT(std::abs(r.czf_over_szf), 1e-10);
        }
}

TEST(Sinr, OptimalRegularizationClosedForm)
{
    // At kappa = beta / Gamma_hat the first term collapses to 1 / G
    const auto cfg = two_cell(20, 100, 0.6);
    for (DataKind d : {DataKind::SRCI, DataKind::CRCI})
    {
        const auto r = sinr_analytic(d, ANKind::SNS, cfg);
        const double b = d == DataKind::CRCI ? 2.0 * cfg.beta() : cfg.beta();
        EXPECT_NEAR(r.kappa, b / r.Gamma_hat, 1e-14);
        const double G = g_function(b, r.kappa).G;
        EXPECT_NEAR(1.0 / r.gamma, 1.0 / G + 0.09, 1e-10);
    }
}

TEST(Sinr, OptimalRegularizationIsOptimal)
{
    const auto cfg = two_cell(20, 100, 0.6);
    for (DataKind d : {DataKind::SRCI, DataKind::CRCI})
    {
        const auto best = sinr_analytic(d, ANKind::SNS, cfg);
        for (int i = 0; i < 50; ++i)
        {
            const double kappa = best.kappa * std::pow(10.0, -2.0 + 4.0 * i / 49.0);
            EXPECT_LE(sinr_analytic(d, ANKind::SNS, cfg, kappa).gamma, best.gamma * (1.0 + 1e-12));
        }
    }
}

TEST(Sinr, RciBeatsZeroForcing)
{
    const auto cfg = two_cell(20, 100, 0.6);
    EXPECT_GE(sinr_analytic(DataKind::SRCI, ANKind::SNS, cfg).gamma, sinr_analytic(DataKind::SZF, ANKind::SNS, cfg).gamma);
    EXPECT_GE(sinr_analytic(DataKind::CRCI, ANKind::SNS, cfg).gamma, sinr_analytic(DataKind::CZF, ANKind::SNS, cfg).gamma);
}

TEST(Sinr, IncreasesWithPilotEnergy)
{
    auto cfg = two_cell();
    for (DataKind d : all_closed)
    {
        double prev = 0.0;
        for (double e : {0.1, 1.0, 10.0, 100.0})
        {
            cfg.p_tau = e / cfg.tau;
            const double g = sinr_analytic(d, ANKind::SNS, cfg).gamma;
            EXPECT_GT(g, prev) << to_string(d);
            prev = g;
        }
    }
}

TEST(Sinr, InfeasibleAndUnsupported)
{
    EXPECT_THROW(sinr_analytic(DataKind::CZF, ANKind::SNS, two_cell(50, 100)), infeasible_error);
    EXPECT_THROW(sinr_analytic(DataKind::POLY, ANKind::SNS, two_cell()), config_error);
    EXPECT_THROW(sinr_analytic(DataKind::SRCI, ANKind::SNS, two_cell(), 0.0), config_error);
}

TEST(Thresholds, SeparateRegimes)
{
    SystemConfig cfg = make_simplified(2, 10, 256, 0, 10.0, 0.75, 0.1);
    const auto t = crossover_thresholds(cfg);
    ASSERT_FALSE(t.K_czf_gt_szf.never);
    // The threshold does not depend on K when the pilot energy is held at P_T
    const int below = int(std::floor(t.K_czf_gt_szf.value)) - 1;
    const int above = int(std::ceil(t.K_czf_gt_szf.value)) + 1;
    ASSERT_LT(2 * above, 256);
    const auto lo = make_simplified(2, below, 256, 0, 10.0, 0.75, 0.1);
    const auto hi = make_simplified(2, above, 256, 0, 10.0, 0.75, 0.1);
    EXPECT_GT(sinr_analytic(DataKind::CZF, ANKind::SNS, lo).gamma, sinr_analytic(DataKind::SZF, ANKind::SNS, lo).gamma);
    EXPECT_LT(sinr_analytic(DataKind::CZF, ANKind::SNS, hi).gamma, sinr_analytic(DataKind::SZF, ANKind::SNS, hi).gamma);
}

TEST(Thresholds, NoCouplingMeansNever)
{
    SystemConfig cfg = make_simplified(2, 10, 256, 0, 10.0, 0.75, 0.0);
    EXPECT_TRUE(crossover_thresholds(cfg).K_czf_gt_szf.never);
}

TEST(EveBound, KnownValue)
{
    // a = c = 1: log2(1 + alpha phi / (beta (1 - phi) (1 - alpha N_T / L)))
    SystemConfig cfg = make_simplified(1, 20, 100, 10, 10.0, 0.5, 0.0);
    const auto b = eve_capacity_bound(cfg, 80);
    EXPECT_EQ(b.status, BoundStatus::Valid);
    EXPECT_NEAR(b.value, std::log2(1.0 + 0.05 / (0.1 * 0.875)), 1e-12);
    EXPECT_NEAR(b.value, 0.652, 1e-3);
}

TEST(EveBound, StatusMarkers)
{
    SystemConfig cfg = two_cell();
    cfg.phi = 1.0;
    EXPECT_EQ(eve_capacity_bound(cfg, 90).status, BoundStatus::Unbounded);
    cfg = two_cell(10, 100, 0.5, 90);
    EXPECT_EQ(eve_capacity_bound(cfg, 40).status, BoundStatus::OutOfValidity);
    cfg.N_E = 0;
    EXPECT_EQ(eve_capacity_bound(cfg, 90).status, BoundStatus::NoEavesdropper);
    EXPECT_NEAR(secrecy_lower_bound(DataKind::SZF, ANKind::SNS, cfg).R_sec,
                std::log2(1.0 + sinr_analytic(DataKind::SZF, ANKind::SNS, cfg).gamma), 1e-12);
}

TEST(Secrecy, ClosedFormMatchesGeneralPath)
{
    for (double phi : {0.2, 0.5, 0.8})
        for (int NE : {5, 10, 20})
        {
            const auto cfg = two_cell(10, 100, phi, NE);
            for (DataKind d : {DataKind::MF, DataKind::SZF, DataKind::CZF})
                for (ANKind an : all_an)
                {
                    const double closed = secrecy_closed_form(d, an, cfg);
                    const double gen = secrecy_lower_bound(d, an, as_general(cfg)).R_sec;
                    EXPECT_NEAR(closed, gen, 1e-8) << to_string(d) << "/" << to_string(an);
                }
        }
}

TEST(Secrecy, DecreasesWithEavesdropperAntennas)
{
    double prev = 1e300;
    for (int NE : {2, 5, 10, 20})
    {
        const double r = secrecy_lower_bound(DataKind::SZF, ANKind::SNS, two_cell(10, 100, 0.5, NE)).R_sec;
        EXPECT_LT(r, prev);
        prev = r;
    }
}

TEST(AlphaS, MarksTheSecrecyBoundary)
{
    // Just below alpha_s a small phi leaves a positive rate, just above no phi does
    const int N_T = 2000;
    for (DataKind d : {DataKind::MF, DataKind::SZF})
    {
        SystemConfig cfg = make_simplified(2, 200, N_T, 0, 10.0, 0.5, 0.3);
        const double as = alpha_s(d, ANKind::SNS, cfg);
        cfg.N_E = int(std::floor(0.95 * as * N_T));
        bool positive = false;
        for (double phi = 0.001; phi < 1.0; phi += 0.001)
        {
            cfg.phi = phi;
            positive = positive || secrecy_closed_form(d, ANKind::SNS, cfg) > 0.0;
        }
        EXPECT_TRUE(positive) << to_string(d);
        cfg.N_E = int(std::ceil(1.05 * as * N_T));
        for (double phi = 0.001; phi < 1.0; phi += 0.001)
        {
            cfg.phi = phi;
            EXPECT_EQ(secrecy_closed_form(d, ANKind::SNS, cfg), 0.0) << to_string(d) << " phi=" << phi;
        }
    }
}

TEST(AlphaS, MatchedFilterWithoutContamination)
{
    // M = 1, perfect CSI, no noise limit: alpha_s(MF) = theta / (Qtilde + ratio) -> 1 / (N_T / L)
    SystemConfig cfg = make_simplified(1, 20, 100, 0, 1e12, 0.5, 0.0);
    cfg.p_tau = 1e14;
    EXPECT_NEAR(alpha_s(DataKind::MF, ANKind::SNS, cfg), 0.8, 1e-6);
}

TEST(Flops, SpotValues)
{
    FlopParams p{10, 1, 100, 110, 10, 0};
    EXPECT_EQ(flops_data(DataKind::MF, p), 190000u);
    EXPECT_EQ(flops_an(ANKind::RANDOM, p), 1990000u);
}

TEST(Flops, CollaborativeEqualsSelfishForOneCell)
{
    for (std::uint64_t K : {4u, 10u, 32u})
    {
        FlopParams p{K, 1, 128, 200, K, 0};
        EXPECT_EQ(flops_data(DataKind::CZF, p), flops_data(DataKind::SZF, p));
        EXPECT_EQ(flops_data(DataKind::CRCI, p), flops_data(DataKind::SRCI, p));
        EXPECT_EQ(flops_an(ANKind::CNS, p), flops_an(ANKind::SNS, p));
    }
}

TEST(Flops, PolyGrowsWithOrderAndOverflowThrows)
{
    FlopParams p{10, 2, 100, 200, 10, 1};
    const auto a = flops_data(DataKind::POLY, p);
    p.order = 4;
    EXPECT_GT(flops_data(DataKind::POLY, p), a);
    FlopParams big{std::uint64_t(1) << 40, 1, std::uint64_t(1) << 40, std::uint64_t(1) << 41, 1, 0};
    EXPECT_THROW(flops_data(DataKind::SZF, big), numerical_error);
    FlopParams bad{10, 1, 100, 10, 10, 0};
    EXPECT_THROW(flops_data(DataKind::MF, bad), config_error);
}
