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

#include "mmsec/an_precoders.hpp"
#include "mmsec/asymptotics.hpp"
#include "oracles.hpp"

using namespace mmsec;

TEST(Moments, LowOrderClosedForms)
{
    EXPECT_DOUBLE_EQ(mp_moment(0, 0.3), 1.0);
    EXPECT_DOUBLE_EQ(mp_moment(1, 0.3), 1.0);
    EXPECT_NEAR(mp_moment(2, 0.25), 1.25, 1e-14);
    EXPECT_NEAR(mp_moment(3, 0.5), 2.75, 1e-14);
    // 1 + 6b + 6b^2 + b^3
    EXPECT_NEAR(mp_moment(4, 0.5), 1.0 + 3.0 + 1.5 + 0.125, 1e-14);
}

TEST(Moments, AgreeWithRandomMatrices)
{
    const auto emp = oracle::empirical_moments(64, 256, 5, 40, 21);
    for (int l = 1; l <= 5; ++l)
        EXPECT_NEAR(emp[size_t(l)] / mp_moment(l, 0.25), 1.0, 0.02) << "order " << l;
}

TEST(GFunction, KnownValue)
{
    EXPECT_NEAR(g_function(1.0, 1.0).G, (std::sqrt(5.0) - 1.0) / 2.0, 1e-12);
}

TEST(GFunction, FixedPointEquation)
{
    // G is the positive root of kappa G^2 + (kappa + beta - 1) G - 1 = 0
    for (double beta : {0.1, 0.5, 0.9})
        for (double kappa : {0.01, 0.3, 2.0})
        {
            const double G = g_function(beta, kappa).G;
            EXPECT_NEAR(kappa * G * G + (kappa + beta - 1.0) * G - 1.0, 0.0, 1e-9);
        }
}

TEST(GFunction, DerivativeMatchesFiniteDifference)
{
    for (double beta : {0.2, 0.7})
        for (double kappa : {0.05, 0.5, 3.0})
        {
            const double h = 1e-6 * kappa;
            const double fd = (g_function(beta, kappa + h).G - g_function(beta, kappa - h).G) / (2 * h);
            EXPECT_NEAR(g_function(beta, kappa).dG / fd, 1.0, 1e-6);
        }
}

TEST(GFunction, DivergesLikeInverseKappa)
{
    const double beta = 0.3;
    EXPECT_NEAR(g_function(beta, 1e-8).G * 1e-8, 1.0 - beta, 1e-6);
    EXPECT_THROW(g_function(beta, 0.0), numerical_error);
}

TEST(MsePolynomial, NormalizationAndSystem)
{
    const SystemConfig cfg = make_simplified(2, 16, 128, 8, 10.0, 0.7, 0.2);
    const auto in = mse_poly_inputs(cfg, 0.4, mse_poly_trace_sigma(cfg));
    const int I = 3;
    const auto c = mse_poly_coefficients(in, I);
    ASSERT_EQ(c.mu.size(), 4u);

    // Independent assembly from the moment sequence
    const double beta = cfg.beta();
    const double r = (beta * in.trace_D_Delta + (in.trace_Sigma + in.P_AN) / (in.N_T * in.p)) / in.estimate_variance;
    Eigen::MatrixXd Pi(4, 4);
    Eigen::VectorXd psi(4);
    for (int i = 0; i < 4; ++i)
    {
        psi(i) = mp_moment(i + 1, beta);
        for (int j = 0; j < 4; ++j)
            Pi(i, j) = in.trace_D * mp_moment(i + j + 2, beta) + r * mp_moment(i + j + 1, beta);
    }
    const Eigen::VectorXd ref = Pi.fullPivLu().solve(psi);
    const double scale = c.mu[0] / ref(0);
    double norm = 0.0;
    for (int i = 0; i < 4; ++i)
    {
        EXPECT_NEAR(c.mu[size_t(i)], scale * ref(i), 1e-9 * std::abs(scale * ref(0)));
        for (int j = 0; j < 4; ++j)
            norm += c.mu[size_t(i)] * c.mu[size_t(j)] * mp_moment(i + j + 1, beta);
    }
    EXPECT_NEAR(norm, cfg.N_T, 1e-8 * cfg.N_T);
    EXPECT_NEAR(c.regularizer, r, 1e-12);
}

TEST(MsePolynomial, PrintedFormDiffersOnlyInErrorWeight)
{
    const SystemConfig cfg = make_simplified(2, 16, 128, 8, 10.0, 0.7, 0.2);
    const auto in = mse_poly_inputs(cfg, 0.4, mse_poly_trace_sigma(cfg));
    const auto a = mse_poly_coefficients(in, 2, MseRegularizer::Corrected);
    const auto b = mse_poly_coefficients(in, 2, MseRegularizer::Printed);
    EXPECT_NEAR(b.regularizer - a.regularizer, (1.0 - cfg.beta()) * in.trace_D_Delta / in.estimate_variance, 1e-12);
}

TEST(MsePolynomial, OrderZeroIsMatchedFilter)
{
    const SystemConfig cfg = make_simplified(2, 16, 128, 8, 10.0, 0.7, 0.2);
    const auto c = mse_poly_coefficients(cfg, 0, 0.3, mse_poly_trace_sigma(cfg));
    ASSERT_EQ(c.mu.size(), 1u);
    EXPECT_NEAR(c.mu[0], std::sqrt(double(cfg.N_T)), 1e-9);
}

TEST(AnPolynomial, ResidualShrinksWithOrder)
{
    double prev = 1e300;
    for (int J : {0, 1, 3, 5})
    {
        const auto c = an_poly_coefficients(0.1, J);
        EXPECT_LE(std::abs(c.trace_residual), prev + 1e-12);
        prev = std::abs(c.trace_residual);
    }
    EXPECT_LT(prev, 0.05);
}

TEST(AnPolynomial, NuSolvesNormalEquations)
{
    const auto z = moment_table(0.2, 20);
    const int J = 3;
    const double eps = 0.37;
    const auto nu = an_poly_nu(z, J, eps);
    for (int j = 0; j <= J; ++j)
    {
        double lhs = 0.0;
        for (int i = 0; i <= J; ++i)
            lhs += (mp_moment(i + j + 3, 0.2) + eps * mp_moment(i + j + 2, 0.2)) * nu[size_t(i)];
        EXPECT_NEAR(lhs, mp_moment(j + 2, 0.2) + eps * mp_moment(j + 1, 0.2), 1e-9);
    }
}

TEST(AnPolynomial, TraceMatchesRandomMatrices)
{
    // (1/N_T) tr{A^H A} = 1 - beta (2 sum nu_j zeta^{j+1} - sum nu_i nu_j zeta^{i+j+2})
    const int K = 24, N = 240;
    const double beta = double(K) / N;
    const auto c = an_poly_coefficients(beta, 3);
    const double predicted = 1.0 - beta * (c.trace_residual + 1.0);
    double emp = 0.0;
    mmsec::Rng rng(31);
    const int draws = 10;
    for (int d = 0; d < draws; ++d)
    {
        const auto pre = poly_an_precoder(rng.cn_matrix(K, N), c.nu);
        emp += pre.matrix().squaredNorm() / N / draws;
    }
    EXPECT_NEAR(emp / predicted, 1.0, 0.02);
}

TEST(AnPolynomial, RejectsFullLoad)
{
    EXPECT_THROW(an_poly_coefficients(1.0, 2), infeasible_error);
}
