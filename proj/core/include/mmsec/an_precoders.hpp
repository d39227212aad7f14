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

#ifndef MMSEC_AN_PRECODERS_H
#define MMSEC_AN_PRECODERS_H

#include <cstdint>
#include <vector>

#include "mmsec/rng.hpp"
#include "mmsec/types.hpp"

namespace mmsec
{
    // SNS, CNS and POLY are kept in the low-rank form A = I - U^H V, with U and V of size r x N_T.
    // Random AN is stored densely.
    class ANPrecoder
    {
    public:
        ANKind kind = ANKind::SNS;
        int N_T = 0;
        int L = 0;              // nominal rank used for power splitting
        double trace = 0.0;     // realized tr{A^H A}
        std::vector<double> nu; // POLY only

        cmat U, V;   // low-rank form
        cmat dense;  // RANDOM only
        cmat Hbar;   // POLY only, application path

        bool is_dense() const { return kind == ANKind::RANDOM; }

        // Materialized N_T x N_T matrix
        cmat matrix() const;

        // X A for X with N_T columns, without materializing A in the low-rank case
        cmat right_multiply(const cmat &X) const;
    };

    ANPrecoder sns_precoder(const cmat &Hhat_nn);
    ANPrecoder cns_precoder(const cmat &Hhat_stacked);
    ANPrecoder random_an_precoder(Rng &rng, int N_T);

    // A = I - Hbar^H (sum_j nu_j (Hbar Hbar^H)^j) Hbar with Hbar = Hhat / sqrt(N_T * estimate_variance).
    // No per-realization rescale: the trace is only asymptotically N_T - K and is reported as is.
    ANPrecoder poly_an_precoder(const cmat &Hhat_nn, const std::vector<double> &nu, double estimate_variance = 1.0);

    // A z. POLY uses the nested form z - nu_0 R (z + (nu_1/nu_0) R (z + ...)) with R = Hbar^H Hbar,
    // falling back to direct summation when a coefficient it divides by is zero.
    cvec apply_an_precoder(const ANPrecoder &pre, const cvec &z, std::uint64_t *flops = nullptr);
}

#endif
