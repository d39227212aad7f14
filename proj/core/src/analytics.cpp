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

#include "mmsec/analytics.hpp"

#include <cmath>
#include <limits>

#include "mmsec/asymptotics.hpp"
#include "mmsec/channel.hpp"

namespace mmsec
{
    static constexpr double inf = std::numeric_limits<double>::infinity();
    static constexpr double nan = std::numeric_limits<double>::quiet_NaN();

    int an_dimension(ANKind an, const SystemConfig &cfg)
    {
        int L = cfg.N_T;
        if (an == ANKind::SNS || an == ANKind::POLY)
            L = cfg.N_T - cfg.K;
        else if (an == ANKind::CNS)
            L = cfg.N_T - cfg.M * cfg.K;
        if (L < 1)
            throw infeasible_error(to_string(an) + " AN needs a non-empty null space (L = " + std::to_string(L) + ")");
        return L;
    }

    AnLeakage an_leakage(ANKind an, const SystemConfig &cfg, int n, int k)
    {
        if (an == ANKind::POLY)
            throw config_error("POLY AN leakage has no closed form; use the Monte Carlo estimator");
        const int L = an_dimension(an, cfg);
        const auto st = estimation_stats(cfg, n);
        double s = 0.0;
        for (int m = 0; m < cfg.M; ++m)
        {
            if (an == ANKind::RANDOM)
                s += cfg.path_loss.gain(m, n, k);
            else if (an == ANKind::CNS || m == n)
                s += st.vartheta(m, k);
            else
                s += cfg.path_loss.gain(m, n, k);
        }
        return {double(L) * s, s, L};
    }

    TableTerms table_terms(const SystemConfig &cfg)
    {
        const double rho = cfg.path_loss.rho();
        const double e = cfg.pilot_energy();
        const double a = 1.0 + (cfg.M - 1) * rho;
        const double c = 1.0 + (cfg.M - 1) * rho * rho;
        return {a, c, e / (1.0 + a * e), (1.0 + (cfg.M - 1) * rho * e) / (1.0 + a * e)};
    }

    AnLeakage an_leakage_table(ANKind an, const SystemConfig &cfg)
    {
        if (an == ANKind::POLY)
            throw config_error("POLY AN leakage has no closed form; use the Monte Carlo estimator");
        const int L = an_dimension(an, cfg);
        const auto t = table_terms(cfg);
        double qt = t.a;
        if (an == ANKind::SNS)
            qt = t.a - t.theta;
        else if (an == ANKind::CNS)
            qt = t.a * (1.0 - t.theta);
        return {qt * double(L), qt, L};
    }

    double p_an(ANKind an, const SystemConfig &cfg, int n)
    {
        const auto st = estimation_stats(cfg, n);
        double s = 0.0;
        for (int k = 0; k < cfg.K; ++k)
            s += an == ANKind::RANDOM ? cfg.path_loss.gain(n, n, k) : st.vartheta(n, k);
        return (1.0 - cfg.phi) * cfg.P_T * s / double(cfg.K);
    }

    // ---------- SINR ----------

    namespace
    {
        // Ingredients of every closed form, normalized by the own-cell gain
        struct Slots
        {
            double est;      // estimation error of the own-cell channel
            double intra;    // MF own-cell interference
            double inter;    // inter-cell interference (selfish) or residual cross-cell error (collaborative)
            double an;       // eta Q / K
            double noise;    // 1 / (phi P_T)
            double theta;    // own-cell estimate quality
            double contam;   // sum_{m != n} theta_mk / theta_nk
            double sum() const { return est + intra + inter + an + noise; }
        };

        void check_feasible(DataKind kind, const SystemConfig &cfg)
        {
            if (kind == DataKind::POLY)
                throw config_error("POLY data precoding has no closed-form SINR; use the Monte Carlo estimator");
            if (kind == DataKind::SZF && cfg.K >= cfg.N_T)
                throw infeasible_error("SZF needs K < N_T");
            if (kind == DataKind::CZF && cfg.M * cfg.K >= cfg.N_T)
                throw infeasible_error("CZF needs M K < N_T");
        }

        AnalyticSINR assemble(DataKind kind, ANKind an, const SystemConfig &cfg, const Slots &s, std::optional<double> kappa)
        {
            AnalyticSINR r;
            r.kind = kind;
            r.an = an;
            const double beta = cfg.beta();
            const double Mb = cfg.M * beta;

            if (kappa && !(*kappa > 0.0) && (kind == DataKind::SRCI || kind == DataKind::CRCI))
                throw config_error("RCI regularization must be positive; use the ZF precoder for the limit");

            if (!(s.theta > 0.0) || !std::isfinite(s.noise))
            {
                r.gamma = 0.0;
                r.components = {inf, 0, 0, 0, 0, 0};
                return r;
            }

            double first = 0.0; // first term of 1/gamma, the one that depends on the precoder
            double scale = 0.0; // first = scale * slot sum in the ZF limit
            switch (kind)
            {
            case DataKind::MF:
                scale = beta / s.theta;
                first = scale * s.sum();
                r.Gamma_hat = s.theta / s.sum();
                break;
            case DataKind::SZF:
                scale = beta / ((1.0 - beta) * s.theta);
                first = scale * s.sum();
                r.Gamma_hat = s.theta / s.sum();
                break;
            case DataKind::CZF:
                scale = beta / ((1.0 - Mb) * s.theta);
                first = scale * s.sum();
                r.Gamma_hat = s.theta / s.sum();
                break;
            case DataKind::SRCI:
            case DataKind::CRCI:
            {
                const bool coll = kind == DataKind::CRCI;
                const double b = coll ? Mb : beta;
                const double gh = (coll ? double(cfg.M) : 1.0) * s.theta / s.sum();
                const double kap = kappa ? *kappa : b / gh;
                const auto g = g_function(b, kap);
                const double g1 = (1.0 + g.G) * (1.0 + g.G);
                first = (gh + g1) / (g.G * (gh + gh * kap * g1 / b));
                scale = first / s.sum();
                r.Gamma_hat = gh;
                r.kappa = kap;
                break;
            }
            case DataKind::POLY:
                break;
            }

            r.components.estimation_loss = scale * s.est;
            r.components.intra_cell = scale * s.intra;
            r.components.inter_cell = scale * s.inter;
            r.components.an_leakage = scale * s.an;
            r.components.noise = scale * s.noise;
            r.components.contamination = s.contam;
            r.gamma = 1.0 / (first + s.contam);
            return r;
        }
    }

    AnalyticSINR sinr_general(DataKind kind, ANKind an, const SystemConfig &cfg, std::optional<double> kappa, int n, int k)
    {
        check_feasible(kind, cfg);
        const auto st = estimation_stats(cfg, n);
        const auto leak = an_leakage(an, cfg, n, k);
        const double bnn = cfg.path_loss.gain(n, n, k);
        const double eta = ((1.0 - cfg.phi) * cfg.P_T / double(leak.L)) / (cfg.phi * cfg.P_T / double(cfg.K));

        Slots s{};
        s.est = st.vartheta(n, k);
        s.an = eta * leak.Q / double(cfg.K) / bnn;
        s.noise = 1.0 / (cfg.phi * cfg.P_T) / bnn;
        s.theta = st.theta(n, k);
        for (int m = 0; m < cfg.M; ++m)
        {
            if (m == n)
                continue;
            if (s.theta > 0.0)
                s.contam += st.theta(m, k) / s.theta;
            s.inter += is_collaborative(kind) ? st.vartheta(m, k) : cfg.path_loss.gain(m, n, k) / bnn;
        }
        if (kind == DataKind::MF)
            s.intra = bnn - s.est;
        return assemble(kind, an, cfg, s, kappa);
    }

    AnalyticSINR sinr_table(DataKind kind, ANKind an, const SystemConfig &cfg, std::optional<double> kappa)
    {
        if (!cfg.path_loss.is_simplified())
            throw config_error("table forms need the simplified path-loss model");
        check_feasible(kind, cfg);

        const auto t = table_terms(cfg);
        const double qt = an_leakage_table(an, cfg).Qtilde;
        const double rho = cfg.path_loss.rho();
        const double beta = cfg.beta(), phi = cfg.phi, P = cfg.P_T;
        const int M = cfg.M;
        const double N = (1.0 - phi) * beta * qt + beta / P;

        AnalyticSINR r;
        switch (kind)
        {
        case DataKind::MF:
            r.gamma = t.theta * phi / (N + beta * phi * t.a + (M - 1) * rho * rho * t.theta * phi);
            break;
        case DataKind::SZF:
            r.gamma = t.theta * phi * (1.0 - beta) /
                      (N + beta * phi * (t.a - t.theta) + (M - 1) * rho * rho * t.theta * phi * (1.0 - beta));
            break;
        case DataKind::CZF:
            r.gamma = t.theta * phi * (1.0 - M * beta) /
                      (N + beta * phi * t.a * (1.0 - t.theta) + (M - 1) * rho * rho * t.theta * phi * (1.0 - M * beta));
            break;
        case DataKind::SRCI:
        case DataKind::CRCI:
        {
            // Effective SNR of the simplified model, then the same G-function form as the general path
            const bool coll = kind == DataKind::CRCI;
            const double Gam = coll ? beta * phi / ((1.0 - phi) * beta * qt + beta / P)
                                    : beta * phi / (beta * phi * rho * (M - 1) + (1.0 - phi) * beta * qt + beta / P);
            const double sv = coll ? t.a * t.vartheta : t.vartheta;
            const double gh = (coll ? double(M) : 1.0) * Gam * t.theta / (Gam * sv + 1.0);
            const double b = coll ? M * beta : beta;
            if (kappa && !(*kappa > 0.0))
                throw config_error("RCI regularization must be positive; use the ZF precoder for the limit");
            if (!(t.theta > 0.0))
                break;
            const double kap = kappa ? *kappa : b / gh;
            const auto g = g_function(b, kap);
            const double g1 = (1.0 + g.G) * (1.0 + g.G);
            r.gamma = 1.0 / ((gh + g1) / (g.G * (gh + gh * kap * g1 / b)) + (M - 1) * rho * rho);
            r.kappa = kap;
            r.Gamma_hat = gh;
            break;
        }
        case DataKind::POLY:
            break;
        }

        // Component split shared with the general path
        Slots s{};
        s.est = t.vartheta;
        s.an = (1.0 - phi) * qt / phi;
        s.noise = 1.0 / (phi * P);
        s.theta = t.theta;
        s.contam = t.theta > 0.0 ? (M - 1) * rho * rho : 0.0;
        s.inter = is_collaborative(kind) ? (M - 1) * rho * t.vartheta : (M - 1) * rho;
        if (kind == DataKind::MF)
            s.intra = t.theta;
        const auto split = assemble(kind, an, cfg, s, kind == DataKind::SRCI || kind == DataKind::CRCI ? std::optional<double>(r.kappa > 0 ? r.kappa : 1.0) : kappa);
        r.kind = kind;
        r.an = an;
        r.components = split.components;
        if (r.Gamma_hat == 0.0)
            r.Gamma_hat = split.Gamma_hat;
        return r;
    }

    AnalyticSINR sinr_analytic(DataKind kind, ANKind an, const SystemConfig &cfg, std::optional<double> kappa)
    {
        if (cfg.path_loss.is_simplified())
            return sinr_table(kind, an, cfg, kappa);
        return sinr_general(kind, an, cfg, kappa);
    }

    SinrRelations sinr_relations(const SystemConfig &cfg, ANKind an)
    {
        const auto t = table_terms(cfg);
        const double beta = cfg.beta();
        const double mf = sinr_table(DataKind::MF, an, cfg).gamma;
        const double szf = sinr_table(DataKind::SZF, an, cfg).gamma;
        SinrRelations r{};
        const double rhs1 = 1.0 + beta * (t.c * szf - 1.0);
        r.szf_over_mf = (szf / mf - rhs1) / rhs1;
        if (cfg.M * cfg.K < cfg.N_T)
        {
            const double czf = sinr_table(DataKind::CZF, an, cfg).gamma;
            const double rhs2 = (1.0 - cfg.M * beta) / (1.0 - beta) + t.a * (t.a - 1.0) * beta / (1.0 - beta) * czf;
            r.czf_over_szf = (czf / szf - rhs2) / rhs2;
        }
        else
            r.czf_over_szf = nan;
        return r;
    }

    // ---------- thresholds ----------

    static Threshold positive_or_never(double v, const char *reason)
    {
        if (std::isfinite(v) && v > 0.0)
            return {v, false, ""};
        return {v, true, reason};
    }

    CrossoverThresholds crossover_thresholds(const SystemConfig &cfg, ANKind an)
    {
        const auto t = table_terms(cfg);
        const double rho = cfg.path_loss.rho();
        const double phi = cfg.phi, P = cfg.P_T, beta = cfg.beta(), NT = double(cfg.N_T);
        const int M = cfg.M;
        const double qt = an_leakage_table(an, cfg).Qtilde;

        CrossoverThresholds r;
        r.K_szf_gt_mf = positive_or_never(t.theta * phi * NT / ((1.0 - phi) * qt + t.a * phi + 1.0 / P),
                                          "no pilot energy: SZF never beats MF");
        r.K_czf_gt_szf = positive_or_never(rho * phi * t.theta * NT /
                                               ((1.0 - phi) * qt + (t.a * (1.0 - t.theta) + rho * t.theta * M) * phi + 1.0 / P),
                                           "no inter-cell coupling or pilot energy: CZF never beats SZF");

        const double d1 = (phi * (1.0 - beta) / beta + 1.0) / (t.a + 1.0 / P) - t.a;
        const double d2 = (rho * phi * (1.0 - beta) / beta + 1.0) / (t.a + 1.0 / P) - t.a;
        r.pe_szf_gt_mf = positive_or_never(1.0 / d1, "load above beta_MF: MF preferable for any pilot energy");
        r.pe_czf_gt_szf = positive_or_never(1.0 / d2, "load above beta_SZF: SZF preferable for any pilot energy");

        r.beta_mf = positive_or_never(phi / (t.a * t.a + t.a / P + phi - 1.0), "degenerate load threshold");
        r.beta_szf = positive_or_never(phi * rho / (t.a * t.a + t.a / P + phi * rho - 1.0),
                                       "no inter-cell coupling: SZF always preferable");
        return r;
    }

    // ---------- eavesdropper and secrecy ----------

    std::string to_string(BoundStatus s)
    {
        switch (s)
        {
        case BoundStatus::Valid:
            return "valid";
        case BoundStatus::OutOfValidity:
            return "out_of_validity";
        case BoundStatus::Unbounded:
            return "unbounded";
        case BoundStatus::NoEavesdropper:
            return "no_eavesdropper";
        }
        return "?";
    }

    EveBound eve_capacity_bound(const SystemConfig &cfg, int L)
    {
        if (cfg.N_E == 0)
            return {0.0, BoundStatus::NoEavesdropper};
        if (cfg.phi >= 1.0)
            return {inf, BoundStatus::Unbounded};
        if (L < 1)
            throw infeasible_error("AN dimension must be positive");
        const auto f = interference_factors(cfg);
        const double alpha = cfg.alpha();
        const double den = f.a - f.c * alpha * double(cfg.N_T) / (double(L) * f.a);
        if (!(den > 0.0))
            return {nan, BoundStatus::OutOfValidity};
        return {std::log2(1.0 + alpha * cfg.phi / (cfg.beta() * (1.0 - cfg.phi) * den)), BoundStatus::Valid};
    }

    SecrecyAnalytics secrecy_lower_bound(DataKind kind, ANKind an, const SystemConfig &cfg, std::optional<double> kappa)
    {
        SecrecyAnalytics r;
        r.gamma = sinr_analytic(kind, an, cfg, kappa).gamma;
        r.R_mt = std::log2(1.0 + r.gamma);
        const int L = an_dimension(an, cfg);
        const auto b = eve_capacity_bound(cfg, L);
        r.C_eve_bound = b.value;
        r.eve_status = b.status;
        if (cfg.N_E > 0)
        {
            const auto f = interference_factors(cfg);
            r.chi = f.a * cfg.beta() / cfg.alpha() - cfg.beta() * f.c * double(cfg.N_T) / (f.a * double(L));
        }
        if (b.status == BoundStatus::Valid)
            r.R_sec = std::max(r.R_mt - b.value, 0.0);
        else if (b.status == BoundStatus::NoEavesdropper)
            r.R_sec = r.R_mt;
        else
            r.R_sec = 0.0;
        return r;
    }

    double secrecy_closed_form(DataKind kind, ANKind an, const SystemConfig &cfg)
    {
        if (kind != DataKind::MF && kind != DataKind::SZF && kind != DataKind::CZF)
            throw config_error("closed-form secrecy rate exists for MF, SZF and CZF only");
        check_feasible(kind, cfg);
        const auto t = table_terms(cfg);
        const double qt = an_leakage_table(an, cfg).Qtilde;
        const double beta = cfg.beta(), phi = cfg.phi, P = cfg.P_T;
        const int L = an_dimension(an, cfg);

        double own = t.a, load = 1.0;
        if (kind == DataKind::SZF)
            own = t.a - t.theta, load = 1.0 - beta;
        else if (kind == DataKind::CZF)
            own = t.a - t.a * t.theta, load = 1.0 - cfg.M * beta;

        const double base = (qt + 1.0 / P) * beta + (own - qt) * beta * phi;
        const double mt = (base + t.c * t.theta * load * phi) / (base + (t.c - 1.0) * t.theta * load * phi);

        double eve = 1.0;
        if (cfg.N_E > 0)
        {
            const auto f = interference_factors(cfg);
            const double chi = f.a * beta / cfg.alpha() - beta * f.c * double(cfg.N_T) / (f.a * double(L));
            if (!(chi > 0.0) || phi >= 1.0)
                return 0.0;
            eve = (chi - chi * phi) / ((1.0 - chi) * phi + chi);
        }
        return std::max(std::log2(mt * eve), 0.0);
    }

    double alpha_s(DataKind kind, ANKind an, const SystemConfig &cfg)
    {
        if (kind != DataKind::MF && kind != DataKind::SZF && kind != DataKind::CZF)
            throw config_error("alpha_s is defined for MF, SZF and CZF");
        check_feasible(kind, cfg);
        const auto t = table_terms(cfg);
        const double qt = an_leakage_table(an, cfg).Qtilde;
        const double ratio = double(cfg.N_T) / double(an_dimension(an, cfg));
        double load = 1.0;
        if (kind == DataKind::SZF)
            load = 1.0 - cfg.beta();
        else if (kind == DataKind::CZF)
            load = 1.0 - cfg.M * cfg.beta();
        return load * t.a * t.a * t.theta / (qt * t.a + t.c * t.theta * load * ratio + t.a / cfg.P_T);
    }
}
