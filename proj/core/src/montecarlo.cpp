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

#include "mmsec/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "mmsec/an_precoders.hpp"
#include "mmsec/analytics.hpp"
#include "mmsec/data_precoders.hpp"
#include "mmsec/linalg.hpp"

namespace mmsec
{
    static constexpr double inf = std::numeric_limits<double>::infinity();

    PrecoderPlan make_plan(const SystemConfig &cfg, DataKind data, ANKind an, const MonteCarloOptions &opt)
    {
        cfg.validate();
        if (data == DataKind::SZF && cfg.K >= cfg.N_T)
            throw infeasible_error("SZF needs K < N_T");
        if (data == DataKind::CZF && cfg.M * cfg.K >= cfg.N_T)
            throw infeasible_error("CZF needs M K < N_T");

        PrecoderPlan plan;
        plan.data = data;
        plan.an = an;
        plan.L = an_dimension(an, cfg);
        const auto pw = derived_powers(cfg, plan.L);
        plan.p = pw.p;
        plan.q = pw.q;

        // POLY AN has no closed-form leakage; SNS is its large-order limit
        const ANKind an_closed = an == ANKind::POLY ? ANKind::SNS : an;

        if (data == DataKind::SRCI || data == DataKind::CRCI)
            plan.kappa = opt.kappa ? *opt.kappa : sinr_analytic(data, an_closed, cfg).kappa;

        double v = 0.0;
        for (int k = 0; k < cfg.K; ++k)
            v += estimate_variance(cfg, 0, 0, k);
        plan.estimate_variance = v / double(cfg.K);

        if (data == DataKind::POLY)
        {
            if (!(plan.estimate_variance > 0.0))
                throw infeasible_error("POLY data precoding needs pilot energy");
            plan.mu = mse_poly_coefficients(cfg, opt.poly_data_order, p_an(an_closed, cfg), mse_poly_trace_sigma(cfg), opt.mse_form).mu;
        }
        if (an == ANKind::POLY)
        {
            if (!(plan.estimate_variance > 0.0))
                throw infeasible_error("POLY AN precoding needs pilot energy");
            const auto c = an_poly_coefficients(cfg, opt.poly_an_order);
            plan.nu = c.nu;
            plan.an_trace_residual = c.trace_residual;
        }
        return plan;
    }

    namespace
    {
        struct Sample
        {
            std::vector<cd> x;               // desired amplitude per user
            std::vector<double> x2, ii, ie;  // |x|^2, intra- and inter-cell interference
            std::vector<double> ai, ae;      // AN from own and other BSs
            double capacity = 0.0;
            bool singular = false;
        };

        DataPrecoder build_data(const ChannelEstimate &est, int m, const PrecoderPlan &plan)
        {
            const cmat &own = est.hhat(m, m);
            switch (plan.data)
            {
            case DataKind::MF:
                return mf_precoder(own);
            case DataKind::SZF:
                return szf_precoder(own);
            case DataKind::SRCI:
                return srci_precoder(own, plan.kappa);
            case DataKind::CZF:
                return czf_precoder(est.stacked(m), m, est.K);
            case DataKind::CRCI:
                return crci_precoder(est.stacked(m), m, est.K, plan.kappa);
            case DataKind::POLY:
                return poly_data_precoder(own, plan.mu, plan.estimate_variance);
            }
            throw config_error("unknown data precoder");
        }

        ANPrecoder build_an(const ChannelEstimate &est, int m, const PrecoderPlan &plan, Rng &rng)
        {
            switch (plan.an)
            {
            case ANKind::SNS:
                return sns_precoder(est.hhat(m, m));
            case ANKind::CNS:
                return cns_precoder(est.stacked(m));
            case ANKind::RANDOM:
                return random_an_precoder(rng, est.N_T);
            case ANKind::POLY:
                return poly_an_precoder(est.hhat(m, m), plan.nu, plan.estimate_variance);
            }
            throw config_error("unknown AN precoder");
        }

        Sample run_one(const SystemConfig &cfg, const PrecoderPlan &plan, const MonteCarloOptions &opt,
                       std::uint64_t index, bool need_mt, bool need_eve)
        {
            const int M = cfg.M, K = cfg.K;
            const auto real = sample_small_scale(opt.seed, index, cfg);
            const auto est = estimate_channels(real, cfg, opt.cross_model);
            Rng an_rng = Rng::stream(opt.seed, index, StreamTag::RandomAN);

            const int built = need_mt ? M : 1;
            std::vector<DataPrecoder> F;
            std::vector<ANPrecoder> A;
            for (int m = 0; m < built; ++m)
            {
                F.push_back(build_data(est, m, plan));
                A.push_back(build_an(est, m, plan, an_rng));
            }

            Sample s;
            if (need_mt)
            {
                s.x.assign(size_t(K), cd(0.0));
                s.x2.assign(size_t(K), 0.0);
                s.ii.assign(size_t(K), 0.0);
                s.ie.assign(size_t(K), 0.0);
                s.ai.assign(size_t(K), 0.0);
                s.ae.assign(size_t(K), 0.0);
                for (int m = 0; m < M; ++m)
                {
                    // Channels from BS m to the users of cell 0, large-scale gains applied per row
                    cmat G = real.h(m, 0);
                    for (int k = 0; k < K; ++k)
                        G.row(k) *= std::sqrt(cfg.path_loss.gain(m, 0, k));
                    const cmat P = G * F[size_t(m)].F;
                    const rvec an = A[size_t(m)].right_multiply(G).rowwise().squaredNorm();
                    for (int k = 0; k < K; ++k)
                    {
                        const double row = P.row(k).squaredNorm();
                        if (m == 0)
                        {
                            const cd x = std::sqrt(plan.p) * P(k, k);
                            s.x[size_t(k)] = x;
                            s.x2[size_t(k)] = std::norm(x);
                            s.ii[size_t(k)] = plan.p * (row - std::norm(P(k, k)));
                            s.ai[size_t(k)] = plan.q * an(k);
                        }
                        else
                        {
                            s.ie[size_t(k)] += plan.p * row;
                            s.ae[size_t(k)] += plan.q * an(k);
                        }
                    }
                }
            }

            if (need_eve && cfg.N_E > 0)
            {
                cmat X = cmat::Zero(cfg.N_E, cfg.N_E);
                cvec b;
                for (int m = 0; m < M; ++m)
                {
                    const double g = std::sqrt(cfg.path_loss.eve_gain(m, 0));
                    // Interfering BSs only matter through their AN, so their data precoders are not needed
                    const ANPrecoder &Am = m < built ? A[size_t(m)] : A.emplace_back(build_an(est, m, plan, an_rng));
                    const cmat W = Am.right_multiply(g * real.H_E[size_t(m)]);
                    X += plan.q * W * W.adjoint();
                    if (m == 0)
                        b = g * real.H_E[0] * F[0].F.col(0);
                }
                const double cond = plan.q > 0.0 ? hermitian_condition(X) : inf;
                if (!(cond <= max_condition_number))
                    s.singular = true;
                else
                {
                    const cvec y = X.llt().solve(b);
                    s.capacity = std::log2(1.0 + plan.p * std::max(b.dot(y).real(), 0.0));
                }
            }
            return s;
        }

        std::vector<Sample> collect(const SystemConfig &cfg, const PrecoderPlan &plan, const MonteCarloOptions &opt,
                                    bool need_mt, bool need_eve)
        {
            if (opt.n_realizations < 2)
                throw config_error("Monte Carlo estimation needs at least two realizations");
            const int n = opt.n_realizations;
            std::vector<Sample> out(static_cast<size_t>(n));
            const int T = std::max(1, std::min(opt.threads, n));
            if (T == 1)
            {
                for (int i = 0; i < n; ++i)
                    out[size_t(i)] = run_one(cfg, plan, opt, std::uint64_t(i), need_mt, need_eve);
                return out;
            }

            std::vector<std::exception_ptr> errors(static_cast<size_t>(T));
            std::vector<std::thread> pool;
            for (int t = 0; t < T; ++t)
                pool.emplace_back([&, t]
                                  {
                    try
                    {
                        for (int i = t; i < n; i += T)
                            out[size_t(i)] = run_one(cfg, plan, opt, std::uint64_t(i), need_mt, need_eve);
                    }
                    catch (...)
                    {
                        errors[size_t(t)] = std::current_exception();
                    } });
            for (auto &th : pool)
                th.join();
            for (auto &e : errors)
                if (e)
                    std::rethrow_exception(e);
            return out;
        }

        double stderr_of(const std::vector<double> &psi)
        {
            const double n = double(psi.size());
            double s = 0.0;
            for (double v : psi)
                s += v * v;
            return std::sqrt(s / (n - 1.0) / n);
        }

        // Use-and-forget SINR per user from sample means; influence values give delta-method errors
        MtEstimate reduce_mt(const std::vector<Sample> &S, int K, std::vector<double> *psi_R_out)
        {
            const size_t n = S.size();
            const double dn = double(n);
            MtEstimate r;
            r.n_realizations = int(n);
            std::vector<double> psi_g(n, 0.0), psi_R(n, 0.0);

            for (int k = 0; k < K; ++k)
            {
                const size_t kk = size_t(k);
                cd mx = 0.0;
                double m2 = 0.0, mii = 0.0, mie = 0.0, mai = 0.0, mae = 0.0;
                for (const auto &s : S)
                {
                    mx += s.x[kk];
                    m2 += s.x2[kk];
                    mii += s.ii[kk];
                    mie += s.ie[kk];
                    mai += s.ai[kk];
                    mae += s.ae[kk];
                }
                mx /= dn, m2 /= dn, mii /= dn, mie /= dn, mai /= dn, mae /= dn;

                const double S2 = std::norm(mx);
                const double var = m2 - S2;
                const double D = var + mii + mie + mai + mae + 1.0;
                const double g = S2 / D;
                const double dR = 1.0 / ((1.0 + g) * std::log(2.0));

                r.gamma += g;
                r.R_mt += std::log2(1.0 + g);
                r.components.signal += S2;
                r.components.signal_variance += var;
                r.components.interference_intra += mii;
                r.components.interference_inter += mie;
                r.components.an_intra += mai;
                r.components.an_inter += mae;

                const double cx = 2.0 * (D + S2) / (D * D), cd_ = -S2 / (D * D);
                for (size_t i = 0; i < n; ++i)
                {
                    const auto &s = S[i];
                    const double dg = cx * (std::conj(mx) * (s.x[kk] - mx)).real() +
                                      cd_ * ((s.x2[kk] - m2) + (s.ii[kk] - mii) + (s.ie[kk] - mie) + (s.ai[kk] - mai) + (s.ae[kk] - mae));
                    psi_g[i] += dg;
                    psi_R[i] += dg * dR;
                }
            }
            const double dK = double(K);
            r.gamma /= dK;
            r.R_mt /= dK;
            r.components.signal /= dK;
            r.components.signal_variance /= dK;
            r.components.interference_intra /= dK;
            r.components.interference_inter /= dK;
            r.components.an_intra /= dK;
            r.components.an_inter /= dK;
            for (size_t i = 0; i < n; ++i)
                psi_g[i] /= dK, psi_R[i] /= dK;
            r.stderr_gamma = stderr_of(psi_g);
            r.stderr_R_mt = stderr_of(psi_R);
            if (psi_R_out)
                *psi_R_out = std::move(psi_R);
            return r;
        }

        EveEstimate reduce_eve(const std::vector<Sample> &S, const SystemConfig &cfg, std::vector<double> *psi_out)
        {
            EveEstimate r;
            r.n_realizations = int(S.size());
            std::vector<double> psi(S.size(), 0.0);
            if (cfg.N_E > 0)
            {
                double sum = 0.0;
                for (const auto &s : S)
                {
                    r.singular_X_count += s.singular ? 1 : 0;
                    sum += s.capacity;
                }
                if (r.singular_X_count > 0)
                    r.C_eve = inf;
                else
                {
                    r.C_eve = sum / double(S.size());
                    for (size_t i = 0; i < S.size(); ++i)
                        psi[i] = S[i].capacity - r.C_eve;
                    r.stderr_C_eve = stderr_of(psi);
                }
            }
            if (psi_out)
                *psi_out = std::move(psi);
            return r;
        }
    }

    MtEstimate estimate_mt_sinr(const SystemConfig &cfg, DataKind data, ANKind an, const MonteCarloOptions &opt)
    {
        const auto plan = make_plan(cfg, data, an, opt);
        return reduce_mt(collect(cfg, plan, opt, true, false), cfg.K, nullptr);
    }

    EveEstimate estimate_eve_capacity(const SystemConfig &cfg, DataKind data, ANKind an, const MonteCarloOptions &opt)
    {
        const auto plan = make_plan(cfg, data, an, opt);
        return reduce_eve(collect(cfg, plan, opt, false, true), cfg, nullptr);
    }

    SecrecyReport ergodic_secrecy_rate(const SystemConfig &cfg, DataKind data, ANKind an, const MonteCarloOptions &opt)
    {
        SecrecyReport r;
        r.data = data;
        r.an = an;
        r.plan = make_plan(cfg, data, an, opt);
        const auto S = collect(cfg, r.plan, opt, true, true);

        std::vector<double> psi_R, psi_C;
        const auto mt = reduce_mt(S, cfg.K, &psi_R);
        const auto eve = reduce_eve(S, cfg, &psi_C);

        r.gamma_mc = mt.gamma;
        r.R_mt_mc = mt.R_mt;
        r.stderr_gamma = mt.stderr_gamma;
        r.stderr_R_mt = mt.stderr_R_mt;
        r.components = mt.components;
        r.C_eve_mc = eve.C_eve;
        r.stderr_C_eve = eve.stderr_C_eve;
        r.singular_X_count = eve.singular_X_count;
        r.n_realizations = mt.n_realizations;

        if (std::isinf(eve.C_eve))
            r.R_sec_mc = 0.0;
        else
        {
            r.R_sec_mc = std::max(mt.R_mt - eve.C_eve, 0.0);
            for (size_t i = 0; i < psi_R.size(); ++i)
                psi_R[i] -= psi_C[i];
            r.stderr_R_sec = stderr_of(psi_R);
        }
        return r;
    }

    // ---------- power allocation ----------

    int count_separated_maxima(const std::vector<double> &c, double tol)
    {
        const size_t n = c.size();
        if (n == 0)
            return 0;
        std::vector<size_t> peaks;
        for (size_t i = 0; i < n; ++i)
        {
            const bool left = i == 0 || c[i] >= c[i - 1];
            const bool right = i + 1 == n || c[i] >= c[i + 1];
            const bool strict = (i > 0 && c[i] > c[i - 1]) || (i + 1 < n && c[i] > c[i + 1]);
            if (left && right && strict)
                peaks.push_back(i);
        }
        if (peaks.empty())
            return n > 0 ? 1 : 0;

        int groups = 1;
        size_t cur = peaks[0];
        for (size_t j = 1; j < peaks.size(); ++j)
        {
            const size_t nxt = peaks[j];
            double dip = c[cur];
            for (size_t i = cur; i <= nxt; ++i)
                dip = std::min(dip, c[i]);
            if (std::min(c[cur], c[nxt]) - dip > tol)
            {
                ++groups;
                cur = nxt;
            }
            else if (c[nxt] > c[cur])
                cur = nxt;
        }
        return groups;
    }

    PhiOptimum optimize_phi(const SystemConfig &cfg, DataKind data, ANKind an, Evaluator ev, int grid_size,
                            const MonteCarloOptions &opt, int coarse_realizations)
    {
        if (grid_size < 8)
            throw config_error("phi grid needs at least 8 points");

        MonteCarloOptions coarse = opt;
        coarse.n_realizations = std::max(2, coarse_realizations);
        double noise = 0.0;

        auto eval = [&](double phi, const MonteCarloOptions &o)
        {
            SystemConfig c = cfg;
            c.phi = phi;
            if (ev == Evaluator::Analytic)
                return secrecy_lower_bound(data, an, c).R_sec;
            const auto r = ergodic_secrecy_rate(c, data, an, o);
            noise = std::max(noise, r.stderr_R_sec);
            return r.R_sec_mc;
        };

        PhiOptimum out;
        const int n = grid_size;
        for (int i = 1; i <= n; ++i)
        {
            const double phi = double(i) / double(n + 1);
            out.phi.push_back(phi);
            out.curve.push_back(eval(phi, coarse));
        }

        const auto best = size_t(std::max_element(out.curve.begin(), out.curve.end()) - out.curve.begin());
        const double peak = out.curve[best];
        out.all_zero = !(peak > 0.0);
        const double tol = ev == Evaluator::Analytic ? 1e-9 * std::max(peak, 1.0) : 2.0 * noise;
        out.unimodal = count_separated_maxima(out.curve, tol) <= 1;

        if (out.all_zero)
        {
            out.phi_opt = out.phi[best];
            out.R_sec_opt = 0.0;
            return out;
        }

        const double h = 1.0 / double(n + 1);
        double a = std::max(out.phi[best] - h, 1e-9), b = std::min(out.phi[best] + h, 1.0 - 1e-9);
        const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        double f1 = eval(x1, coarse), f2 = eval(x2, coarse);
        const int iters = ev == Evaluator::Analytic ? 60 : 12;
        for (int it = 0; it < iters; ++it)
        {
            if (f1 > f2)
                b = x2, x2 = x1, f2 = f1, x1 = b - gr * (b - a), f1 = eval(x1, coarse);
            else
                a = x1, x1 = x2, f1 = f2, x2 = a + gr * (b - a), f2 = eval(x2, coarse);
        }
        double phi_opt = f1 > f2 ? x1 : x2;
        double fopt = std::max(f1, f2);
        if (peak > fopt)
            phi_opt = out.phi[best], fopt = peak;

        out.phi_opt = phi_opt;
        out.R_sec_opt = ev == Evaluator::Analytic ? fopt : eval(phi_opt, opt);
        return out;
    }
}
