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

#ifndef MMSEC_CHANNEL_H
#define MMSEC_CHANNEL_H

#include <cstdint>
#include <vector>

#include "mmsec/config.hpp"
#include "mmsec/rng.hpp"

namespace mmsec
{
    // One Monte Carlo draw of all small-scale fading. Large-scale gains are applied by the consumers.
    struct ChannelRealization
    {
        int M = 0, K = 0, N_T = 0, N_E = 0;
        std::vector<cmat> H;           // H[m * M + n]: K x N_T, BS m to the users of cell n
        std::vector<cmat> H_E;         // H_E[m]: N_E x N_T, BS m to the eavesdropper
        std::vector<cmat> pilot_noise; // pilot_noise[n]: K x N_T, receiver noise of the uplink pilot phase at BS n
        std::vector<cmat> cross_noise; // cross_noise[n * M + m]: K x N_T, drives the decoupled cross-cell estimator
        std::uint64_t rng_seed = 0;

        const cmat &h(int m, int n) const { return H[size_t(m * M + n)]; }
    };

    // Draws everything from a single stream
    ChannelRealization sample_small_scale(Rng &rng, const SystemConfig &cfg);

    // Draws from per-component streams derived from (master_seed, index). BS channels, pilot noise,
    // cross-cell estimation noise and eavesdropper channels use distinct tags, so changing N_E
    // leaves the BS-to-user draws untouched.
    ChannelRealization sample_small_scale(std::uint64_t master_seed, std::uint64_t index, const SystemConfig &cfg);

    // How BS n obtains the channels to users of other cells m != n.
    //  SharedPilot: all estimates come from the one contaminated pilot observation, so they are
    //               collinear across m. Collaborative designs then see a rank-K stacked matrix.
    //  Decoupled:   own-cell estimates as above; cross-cell estimates are independent MMSE estimates
    //               with the same per-entry variance. Keeps CZF, CRCI and CNS well defined.
    enum class CrossCellModel
    {
        SharedPilot,
        Decoupled
    };

    struct ChannelEstimate
    {
        int M = 0, K = 0, N_T = 0;
        std::vector<cmat> Hhat;    // Hhat[n * M + m]: K x N_T estimate at BS n of the channel to cell m
        bool all_error = false;    // p_tau tau = 0: estimates are identically zero
        CrossCellModel model = CrossCellModel::Decoupled;

        const cmat &hhat(int n, int m) const { return Hhat[size_t(n * M + m)]; }

        // MK x N_T stack [Hhat_n0; ...; Hhat_n(M-1)]
        cmat stacked(int n) const;
    };

    ChannelEstimate estimate_channels(const ChannelRealization &real, const SystemConfig &cfg,
                                      CrossCellModel model = CrossCellModel::Decoupled);

    // Per-entry variance of the estimate at BS n of h^k_nm; the error variance is one minus this
    double estimate_variance(const SystemConfig &cfg, int n, int m, int k);

    struct EstimationStats
    {
        rmat theta;    // M x K, theta(m, k) for the users of the target cell n
        rmat vartheta; // M x K
        rvec Delta;    // K, error variances of the own-cell estimates at BS n
    };

    EstimationStats estimation_stats(const SystemConfig &cfg, int n = 0);
}

#endif
