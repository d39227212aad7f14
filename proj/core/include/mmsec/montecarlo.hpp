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

#ifndef MMSEC_MONTECARLO_H
#define MMSEC_MONTECARLO_H

#include <cstdint>
#include <optional>
#include <vector>

#include "mmsec/asymptotics.hpp"
#include "mmsec/channel.hpp"
#include "mmsec/config.hpp"

namespace mmsec
{
    struct MonteCarloOptions
    {
        int n_realizations = 500;
        std::uint64_t seed = 1;
        CrossCellModel cross_model = CrossCellModel::Decoupled;
        std::optional<double> kappa; // RCI regularization; empty selects the analytic optimum
        int poly_data_order = 4;
        int poly_an_order = 5;
        MseRegularizer mse_form = MseRegularizer::Corrected;
        int threads = 1; // results do not depend on this
    };

    // Everything the per-realization precoder construction needs, fixed across realizations
    struct PrecoderPlan
    {
        DataKind data = DataKind::MF;
        ANKind an = ANKind::SNS;
        int L = 0;
        double p = 0.0;
        double q = 0.0;
        double kappa = 0.0;
        std::vector<double> mu;
        std::vector<double> nu;
        double estimate_variance = 1.0; // mean own-cell estimate variance, POLY scaling
        double an_trace_residual = 0.0; // POLY AN design residual
    };

    PrecoderPlan make_plan(const SystemConfig &cfg, DataKind data, ANKind an, const MonteCarloOptions &opt = {});

    // Sample means of the terms of the use-and-forget SINR, averaged over the K users of cell 0.
    // Power-scaled: signal and interference include p, AN terms include q.
    struct MtComponents
    {
        double signal = 0.0;             // |E x|^2
        double signal_variance = 0.0;    // var x
        double interference_intra = 0.0; // own cell, other users
        double interference_inter = 0.0; // other cells
        double an_intra = 0.0;           // own BS
        double an_inter = 0.0;           // other BSs
        double noise = 1.0;
    };

    struct MtEstimate
    {
        double gamma = 0.0;      // mean over users of the per-user SINR
        double R_mt = 0.0;       // mean over users of log2(1 + SINR)
        double stderr_gamma = 0.0;
        double stderr_R_mt = 0.0;
        MtComponents components;
        int n_realizations = 0;
    };

    struct EveEstimate
    {
        double C_eve = 0.0; // +inf once any realization has a singular X
        double stderr_C_eve = 0.0;
        int singular_X_count = 0;
        int n_realizations = 0;
    };

    struct SecrecyReport
    {
        DataKind data = DataKind::MF;
        ANKind an = ANKind::SNS;
        double gamma_mc = 0.0;
        double R_mt_mc = 0.0;
        double C_eve_mc = 0.0;
        double R_sec_mc = 0.0;
        double stderr_gamma = 0.0;
        double stderr_R_mt = 0.0;
        double stderr_C_eve = 0.0;
        double stderr_R_sec = 0.0;
        int n_realizations = 0;
        int singular_X_count = 0;
        MtComponents components;
        PrecoderPlan plan;
    };

    MtEstimate estimate_mt_sinr(const SystemConfig &cfg, DataKind data, ANKind an, const MonteCarloOptions &opt = {});
    EveEstimate estimate_eve_capacity(const SystemConfig &cfg, DataKind data, ANKind an, const MonteCarloOptions &opt = {});

    // Both estimators on common realizations; R_sec = max(R_mt - C_eve, 0)
    SecrecyReport ergodic_secrecy_rate(const SystemConfig &cfg, DataKind data, ANKind an, const MonteCarloOptions &opt = {});

    enum class Evaluator
    {
        Analytic,
        MonteCarlo
    };

    struct PhiOptimum
    {
        double phi_opt = 0.0;
        double R_sec_opt = 0.0;
        std::vector<double> phi;   // interior grid i / (n + 1)
        std::vector<double> curve; // R_sec on the grid
        bool unimodal = true;
        bool all_zero = false;
    };

    // Grid search refined by golden section around the best grid point. The Monte Carlo evaluator uses
    // common random numbers and coarse_realizations for the search, then opt.n_realizations at the optimum.
    PhiOptimum optimize_phi(const SystemConfig &cfg, DataKind data, ANKind an, Evaluator ev, int grid_size = 32,
                            const MonteCarloOptions &opt = {}, int coarse_realizations = 100);

    // Counts interior local maxima of a curve separated by a dip deeper than tol
    int count_separated_maxima(const std::vector<double> &curve, double tol);
}

#endif
