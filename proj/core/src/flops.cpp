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

#include "mmsec/flops.hpp"

namespace mmsec
{
    namespace
    {
        using u64 = std::uint64_t;

        u64 mul(u64 a, u64 b)
        {
            u64 r;
            if (__builtin_mul_overflow(a, b, &r))
                throw numerical_error("FLOP count overflows 64 bits");
            return r;
        }

        u64 add(u64 a, u64 b)
        {
            u64 r;
            if (__builtin_add_overflow(a, b, &r))
                throw numerical_error("FLOP count overflows 64 bits");
            return r;
        }

        u64 check(const FlopParams &p)
        {
            if (p.T <= p.tau)
                throw config_error("coherence interval must exceed the pilot length");
            if (p.K == 0 || p.M == 0 || p.N_T == 0)
                throw config_error("K, M and N_T must be positive");
            return p.T - p.tau;
        }

        // Gram matrix of an R x N matrix plus inversion: 0.5 (R^2 + R)(2N - 1) + R^3 + R^2 + R
        u64 gram_inverse(u64 R, u64 N)
        {
            const u64 half = mul(R, R + 1) / 2; // R^2 + R is even
            return add(add(mul(half, 2 * N - 1), mul(mul(R, R), R)), add(mul(R, R), R));
        }
    }

    std::uint64_t flops_data(DataKind kind, const FlopParams &p)
    {
        const u64 D = check(p);
        const u64 N = p.N_T, K = p.K;
        const u64 apply = mul(mul(2 * K - 1, N), D);
        switch (kind)
        {
        case DataKind::MF:
            return apply;
        case DataKind::SZF:
        case DataKind::SRCI:
            return add(add(gram_inverse(K, N), mul(mul(N, K), 2 * K - 1)), apply);
        case DataKind::CZF:
        case DataKind::CRCI:
        {
            const u64 R = mul(p.M, K);
            return add(add(gram_inverse(R, N), mul(mul(N, R), 2 * R - 1)), apply);
        }
        case DataKind::POLY:
            return mul(D, add(mul(mul(p.order + 1, 2 * K - 1), N), mul(mul(p.order, 2 * N - 1), K)));
        }
        return 0;
    }

    std::uint64_t flops_an(ANKind kind, const FlopParams &p)
    {
        const u64 D = check(p);
        const u64 N = p.N_T, K = p.K;
        const u64 apply = mul(mul(2 * N - 1, N), D);
        switch (kind)
        {
        case ANKind::RANDOM:
            return apply;
        case ANKind::SNS:
            return add(add(gram_inverse(K, N), mul(mul(N, N + K), 2 * K - 1)), apply);
        case ANKind::CNS:
        {
            const u64 R = mul(p.M, K);
            return add(add(gram_inverse(R, N), mul(mul(N, N + R), 2 * R - 1)), apply);
        }
        case ANKind::POLY:
            return mul(mul(p.order + 1, add(mul(2 * K - 1, N), mul(2 * N - 1, K))), D);
        }
        return 0;
    }
}
