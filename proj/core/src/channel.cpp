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

#include "mmsec/channel.hpp"

#include <cmath>

namespace mmsec
{
    static ChannelRealization draw(Rng &ch, Rng &pilot, Rng &cross, Rng &eve, const SystemConfig &cfg)
    {
        ChannelRealization r;
        r.M = cfg.M;
        r.K = cfg.K;
        r.N_T = cfg.N_T;
        r.N_E = cfg.N_E;
        r.rng_seed = ch.seed();

        const size_t MM = size_t(cfg.M * cfg.M);
        r.H.reserve(MM);
        for (size_t i = 0; i < MM; ++i)
            r.H.push_back(ch.cn_matrix(cfg.K, cfg.N_T));

        r.pilot_noise.reserve(size_t(cfg.M));
        for (int n = 0; n < cfg.M; ++n)
            r.pilot_noise.push_back(pilot.cn_matrix(cfg.K, cfg.N_T));

        r.cross_noise.reserve(MM);
        for (size_t i = 0; i < MM; ++i)
            r.cross_noise.push_back(cross.cn_matrix(cfg.K, cfg.N_T));

        r.H_E.reserve(size_t(cfg.M));
        for (int m = 0; m < cfg.M; ++m)
            r.H_E.push_back(eve.cn_matrix(cfg.N_E, cfg.N_T));
        return r;
    }

    ChannelRealization sample_small_scale(Rng &rng, const SystemConfig &cfg)
    {
        return draw(rng, rng, rng, rng, cfg);
    }

    ChannelRealization sample_small_scale(std::uint64_t master_seed, std::uint64_t index, const SystemConfig &cfg)
    {
        Rng ch = Rng::stream(master_seed, index, StreamTag::Channel);
        Rng pilot = Rng::stream(master_seed, index, StreamTag::PilotNoise);
        Rng cross = Rng::stream(master_seed, index, StreamTag::CrossEstimate);
        Rng eve = Rng::stream(master_seed, index, StreamTag::Eavesdropper);
        return draw(ch, pilot, cross, eve, cfg);
    }

    cmat ChannelEstimate::stacked(int n) const
    {
        cmat out(M * K, N_T);
        for (int m = 0; m < M; ++m)
            out.middleRows(m * K, K) = hhat(n, m);
        return out;
    }

    double estimate_variance(const SystemConfig &cfg, int n, int m, int k)
    {
        const double e = cfg.pilot_energy();
        double sum = 0.0;
        for (int l = 0; l < cfg.M; ++l)
            sum += cfg.path_loss.gain(n, l, k);
        return e * cfg.path_loss.gain(n, m, k) / (1.0 + e * sum);
    }

    ChannelEstimate estimate_channels(const ChannelRealization &real, const SystemConfig &cfg, CrossCellModel model)
    {
        const int M = cfg.M, K = cfg.K, N = cfg.N_T;
        const double e = cfg.pilot_energy();

        ChannelEstimate est;
        est.M = M;
        est.K = K;
        est.N_T = N;
        est.model = model;
        est.all_error = !(e > 0.0);
        est.Hhat.assign(size_t(M * M), cmat::Zero(K, N));
        if (est.all_error)
            return est;

        const double se = std::sqrt(e);
        for (int n = 0; n < M; ++n)
        {
            // Shared uplink observation at BS n for every pilot k: y = sqrt(e) sum_m sqrt(beta^k_nm) h^k_nm + w
            cmat Y = real.pilot_noise[size_t(n)];
            for (int m = 0; m < M; ++m)
                for (int k = 0; k < K; ++k)
                    Y.row(k) += se * std::sqrt(cfg.path_loss.gain(n, m, k)) * real.h(n, m).row(k);

            for (int m = 0; m < M; ++m)
            {
                cmat &Hh = est.Hhat[size_t(n * M + m)];
                for (int k = 0; k < K; ++k)
                {
                    double sum = 0.0;
                    for (int l = 0; l < M; ++l)
                        sum += cfg.path_loss.gain(n, l, k);

                    if (m == n || model == CrossCellModel::SharedPilot)
                    {
                        const double w = std::sqrt(e * cfg.path_loss.gain(n, m, k)) / (1.0 + e * sum);
                        Hh.row(k) = w * Y.row(k);
                    }
                    else
                    {
                        // Independent MMSE estimate with the contaminated marginal variance v
                        const double v = e * cfg.path_loss.gain(n, m, k) / (1.0 + e * sum);
                        Hh.row(k) = v * real.h(n, m).row(k) + std::sqrt(v * (1.0 - v)) * real.cross_noise[size_t(n * M + m)].row(k);
                    }
                }
            }
        }
        return est;
    }

    EstimationStats estimation_stats(const SystemConfig &cfg, int n)
    {
        const int M = cfg.M, K = cfg.K;
        const double e = cfg.pilot_energy();
        EstimationStats s;
        s.theta.resize(M, K);
        s.vartheta.resize(M, K);
        s.Delta.resize(K);

        for (int k = 0; k < K; ++k)
        {
            for (int m = 0; m < M; ++m)
            {
                // BS m estimating user k of cell n, contaminated by the same pilot in all cells l
                double sum = 0.0;
                for (int l = 0; l < M; ++l)
                    sum += cfg.path_loss.gain(m, l, k);
                const double b = cfg.path_loss.gain(m, n, k);
                s.theta(m, k) = e * b * b / (1.0 + e * sum);
                s.vartheta(m, k) = b * (1.0 + e * (sum - cfg.path_loss.gain(m, m, k))) / (1.0 + e * sum);
            }
            s.Delta(k) = 1.0 - estimate_variance(cfg, n, n, k);
        }
        return s;
    }
}
