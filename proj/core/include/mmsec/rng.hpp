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

#ifndef MMSEC_RNG_H
#define MMSEC_RNG_H

#include <cstdint>
#include <random>

#include "mmsec/types.hpp"

namespace mmsec
{
    // Stream tags keep the draws of different model components independent of each other
    enum class StreamTag : std::uint64_t
    {
        Channel = 1,
        PilotNoise = 2,
        CrossEstimate = 3,
        RandomAN = 4,
        Eavesdropper = 5,
        Scenario = 6
    };

    // splitmix64 finalizer chain over (master, index, tag)
    std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index, std::uint64_t tag);

    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

        static Rng stream(std::uint64_t master, std::uint64_t index, StreamTag tag)
        {
            return Rng(derive_seed(master, index, static_cast<std::uint64_t>(tag)));
        }

        // Circularly-symmetric complex Gaussian with unit variance
        cd cn()
        {
            const double re = normal_(engine_);
            const double im = normal_(engine_);
            return {re * inv_sqrt2, im * inv_sqrt2};
        }

        cmat cn_matrix(Eigen::Index rows, Eigen::Index cols)
        {
            cmat out(rows, cols);
            // Column-major fill order is part of the determinism contract
            for (Eigen::Index j = 0; j < cols; ++j)
                for (Eigen::Index i = 0; i < rows; ++i)
                    out(i, j) = cn();
            return out;
        }

        double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

        std::uint64_t seed() const { return seed_; }

    private:
        static constexpr double inv_sqrt2 = 0.70710678118654752440;
        std::mt19937_64 engine_;
        std::normal_distribution<double> normal_{0.0, 1.0};
        std::uint64_t seed_;
    };
}

#endif
