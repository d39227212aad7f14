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

#include "mmsec/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mmsec/channel.hpp"

namespace mmsec
{
    static double binomial(int n, int k)
    {
        double r = 1.0;
        for (int i = 1; i <= k; ++i)
            r = r * double(n - k + i) / double(i);
        return r;
    }

    double mp_moment(int l, double beta)
    {
        if (l < 0)
            throw config_error("moment order must be non-negative");
        if (l == 0)
            return 1.0;
        double sum = 0.0, bp = 1.0;
        for (int i = 0; i < l; ++i)
        {
            sum += binomial(l, i) * binomial(l, i + 1) * bp;
            bp *= beta;
        }
        return sum / double(l);
    }

    MomentTable moment_table(double beta, int max_order)
    {
        MomentTable t;
        t.beta = beta;
        t.zeta.resize(size_t(max_order + 1));
        for (int l = 0; l <= max_order; ++l)
            t.zeta[size_t(l)] = mp_moment(l, beta);
        return t;
    }

    GValue g_function(double beta, double kappa)
    {
        if (!(kappa > 0.0))
            throw numerical_error("G(beta, kappa) diverges as kappa -> 0; use the zero-forcing closed form");
        if (!(beta > 0.0))
            throw config_error("G(beta, kappa) needs beta > 0");
        const double u = (1.0 - beta) / kappa;
        const double G = 0.5 * (std::sqrt(u * u + 2.0 * (1.0 + beta) / kappa + 1.0) + u - 1.0);
        const double g1 = (1.0 + G) * (1.0 + G);
        return {G, -G * g1 / (beta + kappa * g1)};
    }

    double mse_poly_trace_sigma(const SystemConfig &cfg, int n)
    {
        double s = 0.0;
        for (int k = 0; k < cfg.K; ++k)
            for (int m = 0; m < cfg.M; ++m)
                if (m != n)
                    s += cfg.path_loss.gain(m, n, k);
        return s / double(cfg.K) * cfg.P_T + 1.0;
    }

    MsePolyInputs mse_poly_inputs(const SystemConfig &cfg, double P_AN, double trace_Sigma, int n)
    {
        MsePolyInputs in{};
        in.beta = cfg.beta();
        in.N_T = double(cfg.N_T);
        in.p = cfg.phi * cfg.P_T / double(cfg.K);
        const auto st = estimation_stats(cfg, n);
        for (int k = 0; k < cfg.K; ++k)
        {
            const double d = cfg.path_loss.gain(n, n, k);
            in.trace_D += d;
            in.trace_D_Delta += d * st.Delta(k);
            in.estimate_variance += estimate_variance(cfg, n, n, k);
        }
        in.trace_D /= double(cfg.K);
        in.trace_D_Delta /= double(cfg.K);
        in.estimate_variance /= double(cfg.K);
        in.trace_Sigma = trace_Sigma;
        in.P_AN = P_AN;
        return in;
    }

    PolyCoefficients mse_poly_coefficients(const MsePolyInputs &in, int I, MseRegularizer form)
    {
        if (I < 0)
            throw config_error("polynomial order must be non-negative");
        if (!(in.p > 0.0) || !(in.estimate_variance > 0.0))
            throw config_error("MSE design needs positive data power and estimate variance");

        const auto z = moment_table(in.beta, 2 * I + 3);
        const double leak = (in.trace_Sigma + in.P_AN) / (in.N_T * in.p);
        const double err = form == MseRegularizer::Corrected ? in.beta * in.trace_D_Delta : in.trace_D_Delta;
        const double r = (err + leak) / in.estimate_variance;

        const int n = I + 1;
        rmat Pi(n, n);
        rvec psi(n);
        for (int i = 0; i < n; ++i)
        {
            psi(i) = z[i + 1];
            for (int j = 0; j < n; ++j)
                Pi(i, j) = in.trace_D * z[i + j + 2] + r * z[i + j + 1];
        }

        Eigen::SelfAdjointEigenSolver<rmat> es(Pi, Eigen::EigenvaluesOnly);
        const double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
        if (!(lo > 0.0) || hi / lo > max_condition_number)
            throw numerical_error("MSE system is numerically singular at order " + std::to_string(I) + "; use a smaller order");

        const rvec mu = Pi.llt().solve(psi);
        double norm = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                norm += mu(i) * mu(j) * z[i + j + 1];

        PolyCoefficients out;
        out.regularizer = r;
        out.gamma3 = std::sqrt(in.N_T / norm);
        out.mu.resize(size_t(n));
        for (int i = 0; i < n; ++i)
            out.mu[size_t(i)] = out.gamma3 * mu(i);
        return out;
    }

    PolyCoefficients mse_poly_coefficients(const SystemConfig &cfg, int I, double P_AN, double trace_Sigma, MseRegularizer form)
    {
        return mse_poly_coefficients(mse_poly_inputs(cfg, P_AN, trace_Sigma), I, form);
    }

    std::vector<double> an_poly_nu(const MomentTable &z, int J, double epsilon)
    {
        const int n = J + 1;
        rmat S(n, n);
        rvec w(n);
        for (int i = 0; i < n; ++i)
        {
            w(i) = z[i + 2] + epsilon * z[i + 1];
            for (int j = 0; j < n; ++j)
                S(i, j) = z[i + j + 3] + epsilon * z[i + j + 2];
        }
        Eigen::LDLT<rmat> ldlt(S);
        if (ldlt.info() != Eigen::Success || !(ldlt.rcond() > 1.0 / max_condition_number))
            throw numerical_error("AN leakage system is numerically singular at order " + std::to_string(J));
        const rvec nu = ldlt.solve(w);
        return std::vector<double>(nu.data(), nu.data() + n);
    }

    double an_poly_trace_residual(const MomentTable &z, const std::vector<double> &nu)
    {
        const int n = int(nu.size());
        double lin = 0.0, quad = 0.0;
        for (int j = 0; j < n; ++j)
        {
            lin += nu[size_t(j)] * z[j + 1];
            for (int i = 0; i < n; ++i)
                quad += nu[size_t(i)] * nu[size_t(j)] * z[i + j + 2];
        }
        return 2.0 * lin - quad - 1.0;
    }

    PolyCoefficients an_poly_coefficients(double beta, int J)
    {
        if (J < 0)
            throw config_error("polynomial order must be non-negative");
        if (!(beta > 0.0 && beta < 1.0))
            throw infeasible_error("POLY AN needs 0 < beta < 1");

        const auto z = moment_table(beta, 2 * J + 3);
        auto resid = [&](double e)
        { return an_poly_trace_residual(z, an_poly_nu(z, J, e)); };

        // Sigma(eps) stays positive definite for eps above minus the lower spectral edge
        const double edge = std::pow(1.0 - std::sqrt(beta), 2.0);
        std::vector<double> grid = {-0.99 * edge, -0.5 * edge, -0.1 * edge, -0.01 * edge, 0.0};
        for (int k = -4; k <= 6; ++k)
            grid.push_back(std::pow(10.0, k));

        std::vector<double> f;
        for (double e : grid)
            f.push_back(resid(e));

        PolyCoefficients out;
        for (size_t i = 0; i + 1 < grid.size(); ++i)
        {
            if (f[i] == 0.0 || (f[i] < 0.0) != (f[i + 1] < 0.0))
            {
                double lo = grid[i], hi = grid[i + 1], flo = f[i];
                for (int it = 0; it < 200 && std::abs(flo) > 1e-10 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it)
                {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = resid(mid);
                    if ((fm < 0.0) == (flo < 0.0))
                        lo = mid, flo = fm;
                    else
                        hi = mid;
                }
                out.epsilon = lo;
                out.root_bracketed = true;
                break;
            }
        }

        if (!out.root_bracketed)
        {
            // Closest approach: golden-section on |f| around the best grid point
            size_t best = 0;
            for (size_t i = 1; i < grid.size(); ++i)
                if (std::abs(f[i]) < std::abs(f[best]))
                    best = i;
            double a = grid[best == 0 ? 0 : best - 1];
            double b = grid[std::min(best + 1, grid.size() - 1)];
            const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
            double c = b - gr * (b - a), d = a + gr * (b - a);
            double fc = std::abs(resid(c)), fd = std::abs(resid(d));
            for (int it = 0; it < 100; ++it)
            {
                if (fc < fd)
                    b = d, d = c, fd = fc, c = b - gr * (b - a), fc = std::abs(resid(c));
                else
                    a = c, c = d, fc = fd, d = a + gr * (b - a), fd = std::abs(resid(d));
            }
            const double cand = 0.5 * (a + b);
            out.epsilon = std::abs(resid(cand)) < std::abs(f[best]) ? cand : grid[best];
        }

        out.nu = an_poly_nu(z, J, out.epsilon);
        out.trace_residual = an_poly_trace_residual(z, out.nu);
        return out;
    }

    PolyCoefficients an_poly_coefficients(const SystemConfig &cfg, int J)
    {
        return an_poly_coefficients(cfg.beta(), J);
    }
}
