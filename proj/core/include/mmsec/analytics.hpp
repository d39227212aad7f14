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

#ifndef MMSEC_ANALYTICS_H
#define MMSEC_ANALYTICS_H

#include <optional>
#include <string>

#include "mmsec/config.hpp"

namespace mmsec
{
    // AN leakage seen by user k of cell n. Q sums the leakage of all BSs, Qtilde = Q / L.
    struct AnLeakage
    {
        double Q;
        double Qtilde;
        int L;
    };

    // Dimension of the AN precoder: SNS and POLY N_T - K, CNS N_T - MK, random N_T.
    // Throws infeasible_error if the null space is empty.
    int an_dimension(ANKind an, const SystemConfig &cfg);

    // General large-system leakage (any path-loss model). POLY has no closed form and throws config_error.
    AnLeakage an_leakage(ANKind an, const SystemConfig &cfg, int n = 0, int k = 0);

    // Simplified-model table values: Qtilde in {a - theta, a (1 - theta), a}
    AnLeakage an_leakage_table(ANKind an, const SystemConfig &cfg);

    // Mean AN power leaking into the own-cell channels, used by the MSE polynomial design
    double p_an(ANKind an, const SystemConfig &cfg, int n = 0);

    // Simplified-model quantities shared by the table forms
    struct TableTerms
    {
        double a, c, theta, vartheta;
    };
    TableTerms table_terms(const SystemConfig &cfg);

    // Terms of 1/gamma. For ZF and MF these add up exactly; for RCI kinds the first term of the
    // SINR expression is split in proportion to its ZF-limit shares.
    struct SinrComponents
    {
        double estimation_loss = 0.0;
        double intra_cell = 0.0; // MF only: own-cell interference through the estimated channels
        double inter_cell = 0.0;
        double an_leakage = 0.0;
        double noise = 0.0;
        double contamination = 0.0; // coherent pilot-contamination term, sum_{m != n} theta_mk / theta_nk
    };

    struct AnalyticSINR
    {
        DataKind kind = DataKind::MF;
        ANKind an = ANKind::SNS;
        double gamma = 0.0;
        double kappa = 0.0;     // regularization used (RCI kinds)
        double Gamma_hat = 0.0; // effective SNR entering the G function (RCI) or the ZF term
        SinrComponents components;
    };

    // Dispatches to the table form for simplified models and to the general form otherwise.
    // kappa: RCI regularization; empty selects the optimum. POLY data has no closed form.
    AnalyticSINR sinr_analytic(DataKind kind, ANKind an, const SystemConfig &cfg, std::optional<double> kappa = {});

    // General large-system SINR of user k in cell n
    AnalyticSINR sinr_general(DataKind kind, ANKind an, const SystemConfig &cfg, std::optional<double> kappa = {},
                              int n = 0, int k = 0);

    // Simplified-model closed forms; throws config_error for general path-loss models
    AnalyticSINR sinr_table(DataKind kind, ANKind an, const SystemConfig &cfg, std::optional<double> kappa = {});

    struct SinrRelations
    {
        double szf_over_mf;  // gamma_SZF/gamma_MF - (1 + beta (c gamma_SZF - 1)), relative
        double czf_over_szf; // gamma_CZF/gamma_SZF - ((1 - M beta)/(1 - beta) + a (a - 1) beta/(1 - beta) gamma_CZF); NaN if M beta >= 1
    };

    SinrRelations sinr_relations(const SystemConfig &cfg, ANKind an = ANKind::SNS);

    struct Threshold
    {
        double value = 0.0;
        bool never = false;
        std::string reason;
    };

    struct CrossoverThresholds
    {
        Threshold K_szf_gt_mf;   // SZF beats MF for K below this
        Threshold K_czf_gt_szf;  // CZF beats SZF for K below this
        Threshold pe_szf_gt_mf;  // SZF beats MF for pilot energy above this (SNS)
        Threshold pe_czf_gt_szf; // CZF beats SZF for pilot energy above this (SNS)
        Threshold beta_mf;       // MF preferable for any pilot energy above this load
        Threshold beta_szf;      // SZF preferable to CZF for any pilot energy above this load
    };

    CrossoverThresholds crossover_thresholds(const SystemConfig &cfg, ANKind an = ANKind::SNS);

    enum class BoundStatus
    {
        Valid,
        OutOfValidity, // alpha >= a^2 L / (c N_T)
        Unbounded,     // phi = 1, no AN to degrade the eavesdropper
        NoEavesdropper
    };

    std::string to_string(BoundStatus s);

    struct EveBound
    {
        double value = 0.0; // bits/s/Hz; +inf when unbounded, NaN when out of validity
        BoundStatus status = BoundStatus::Valid;
    };

    // log2(1 + alpha phi / (beta (1 - phi) (a - c alpha N_T / (L a))))
    EveBound eve_capacity_bound(const SystemConfig &cfg, int L);

    struct SecrecyAnalytics
    {
        double gamma = 0.0;
        double R_mt = 0.0;
        double C_eve_bound = 0.0;
        BoundStatus eve_status = BoundStatus::Valid;
        double R_sec = 0.0;
        double chi = 0.0; // a beta / alpha - beta c N_T / (a L); 0 without an eavesdropper
    };

    // [log2(1 + gamma) - C_eve_bound]^+, any path-loss model. Out-of-validity or unbounded bounds give 0.
    SecrecyAnalytics secrecy_lower_bound(DataKind kind, ANKind an, const SystemConfig &cfg, std::optional<double> kappa = {});

    // Closed product form for MF, SZF and CZF on the simplified model
    double secrecy_closed_form(DataKind kind, ANKind an, const SystemConfig &cfg);

    // Largest eavesdropper antenna ratio that still admits a positive secrecy rate (phi -> 0)
    double alpha_s(DataKind kind, ANKind an, const SystemConfig &cfg);
}

#endif
