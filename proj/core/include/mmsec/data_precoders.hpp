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

#ifndef MMSEC_DATA_PRECODERS_H
#define MMSEC_DATA_PRECODERS_H

#include <cstdint>
#include <vector>

#include "mmsec/types.hpp"

namespace mmsec
{
    // Regularization constants follow the normalized-channel convention of G(beta, kappa): the
    // solve uses Hhat Hhat^H + N_T kappa I, which is (Hhat/sqrt(N_T)) (Hhat/sqrt(N_T))^H + kappa I up to scale.
    struct DataPrecoder
    {
        DataKind kind = DataKind::MF;
        cmat F;                 // N_T x K, tr{F^H F} = K
        double gamma = 1.0;     // normalization applied to the unnormalized construction
        double kappa = 0.0;     // SRCI / CRCI only
        std::vector<double> mu; // POLY only

        // POLY application path: F = poly_scale * Hbar^H sum_i mu_i (Hbar Hbar^H)^i
        cmat Hbar;
        double poly_scale = 0.0;
        double raw_trace = 0.0; // POLY: (1/K) tr{F^H F} before the per-realization rescale
    };

    DataPrecoder mf_precoder(const cmat &Hhat_nn);
    DataPrecoder szf_precoder(const cmat &Hhat_nn);
    DataPrecoder srci_precoder(const cmat &Hhat_nn, double kappa1);

    // Hhat_stacked is MK x N_T, cell n occupies rows [nK, nK + K)
    DataPrecoder czf_precoder(const cmat &Hhat_stacked, int n, int K);
    DataPrecoder crci_precoder(const cmat &Hhat_stacked, int n, int K, double kappa2);

    // Hbar = Hhat / sqrt(N_T * estimate_variance). With estimate_variance = 1 this is the plain 1/sqrt(N_T)
    // scaling; passing the per-entry estimate variance makes Hbar unit-variance so that the
    // Marchenko-Pastur moments used to design mu apply.
    DataPrecoder poly_data_precoder(const cmat &Hhat_nn, const std::vector<double> &mu, double estimate_variance = 1.0);

    // F s. The POLY kind is evaluated with Horner's rule on K-dimensional vectors without using F.
    // If flops is given, the operation count of the product is added to it.
    cvec apply_data_precoder(const DataPrecoder &pre, const cvec &s, std::uint64_t *flops = nullptr);
}

#endif
