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

#include "mmsec/data_precoders.hpp"

#include <cmath>

#include "mmsec/linalg.hpp"

namespace mmsec
{
    // Rescales F so that tr{F^H F} = K and records the factor
    static void normalize(DataPrecoder &pre)
    {
        const double K = double(pre.F.cols());
        const double energy = pre.F.squaredNorm();
        if (!(energy > 0.0) || !std::isfinite(energy))
            throw numerical_error(to_string(pre.kind) + " precoder is degenerate (zero or non-finite energy)");
        const double g = std::sqrt(K / energy);
        pre.F *= g;
        pre.gamma *= g;
    }

    DataPrecoder mf_precoder(const cmat &Hhat_nn)
    {
        DataPrecoder pre;
        pre.kind = DataKind::MF;
        pre.F = Hhat_nn.adjoint();
        normalize(pre);
        return pre;
    }

    static cmat rci_core(const cmat &H, double ridge, const std::string &what)
    {
        cmat G = H * H.adjoint();
        G.diagonal().array() += ridge;
        return hermitian_solve(G, cmat::Identity(H.rows(), H.rows()), what);
    }

    DataPrecoder szf_precoder(const cmat &Hhat_nn)
    {
        if (Hhat_nn.rows() >= Hhat_nn.cols())
            throw infeasible_error("SZF needs K < N_T");
        DataPrecoder pre;
        pre.kind = DataKind::SZF;
        pre.F = Hhat_nn.adjoint() * rci_core(Hhat_nn, 0.0, "SZF");
        normalize(pre);
        return pre;
    }

    DataPrecoder srci_precoder(const cmat &Hhat_nn, double kappa1)
    {
        if (kappa1 < 0.0)
            throw config_error("SRCI regularization must be non-negative");
        if (kappa1 == 0.0)
        {
            DataPrecoder pre = szf_precoder(Hhat_nn);
            pre.kind = DataKind::SRCI;
            return pre;
        }
        DataPrecoder pre;
        pre.kind = DataKind::SRCI;
        pre.kappa = kappa1;
        pre.F = Hhat_nn.adjoint() * rci_core(Hhat_nn, double(Hhat_nn.cols()) * kappa1, "SRCI");
        normalize(pre);
        return pre;
    }

    static DataPrecoder collaborative(const cmat &Hs, int n, int K, double kappa2, DataKind kind)
    {
        const int MK = int(Hs.rows());
        if (K < 1 || MK % K != 0 || n < 0 || (n + 1) * K > MK)
            throw config_error("Stacked estimate does not match the cell index");
        if (kappa2 == 0.0 && MK >= Hs.cols())
            throw infeasible_error("CZF needs MK < N_T");

        const cmat inv = rci_core(Hs, double(Hs.cols()) * kappa2, to_string(kind));
        DataPrecoder pre;
        pre.kind = kind;
        pre.kappa = kappa2;
        pre.F = Hs.adjoint() * inv.middleCols(n * K, K);
        normalize(pre);
        return pre;
    }

    DataPrecoder czf_precoder(const cmat &Hhat_stacked, int n, int K)
    {
        return collaborative(Hhat_stacked, n, K, 0.0, DataKind::CZF);
    }

    DataPrecoder crci_precoder(const cmat &Hhat_stacked, int n, int K, double kappa2)
    {
        if (kappa2 < 0.0)
            throw config_error("CRCI regularization must be non-negative");
        return collaborative(Hhat_stacked, n, K, kappa2, DataKind::CRCI);
    }

    DataPrecoder poly_data_precoder(const cmat &Hhat_nn, const std::vector<double> &mu, double estimate_variance)
    {
        if (mu.empty())
            throw config_error("POLY data precoder needs at least one coefficient");
        if (!(estimate_variance > 0.0))
            throw config_error("POLY data precoder needs a positive estimate variance");

        const double NT = double(Hhat_nn.cols());
        const Eigen::Index K = Hhat_nn.rows();

        DataPrecoder pre;
        pre.kind = DataKind::POLY;
        pre.mu = mu;
        pre.Hbar = Hhat_nn / std::sqrt(NT * estimate_variance);

        // P = sum_i mu_i W^i, nested from the highest order
        const cmat W = pre.Hbar * pre.Hbar.adjoint();
        cmat P = mu.back() * cmat::Identity(K, K);
        for (size_t i = mu.size() - 1; i-- > 0;)
        {
            P = W * P;
            P.diagonal().array() += mu[i];
        }
        pre.F = pre.Hbar.adjoint() * P / std::sqrt(NT);
        pre.raw_trace = pre.F.squaredNorm() / double(K);
        pre.gamma = 1.0;
        normalize(pre);
        pre.poly_scale = pre.gamma / std::sqrt(NT);
        return pre;
    }

    cvec apply_data_precoder(const DataPrecoder &pre, const cvec &s, std::uint64_t *flops)
    {
        const std::uint64_t N = std::uint64_t(pre.F.rows()), K = std::uint64_t(pre.F.cols());
        if (std::uint64_t(s.size()) != K)
            throw config_error("Data vector has " + std::to_string(s.size()) + " entries, precoder expects " + std::to_string(K));

        if (pre.kind != DataKind::POLY)
        {
            if (flops)
                *flops += (2 * K - 1) * N;
            return pre.F * s;
        }

        const size_t I = pre.mu.size() - 1;
        cvec t = pre.mu.back() * s;
        for (size_t i = I; i-- > 0;)
        {
            const cvec x = pre.Hbar.adjoint() * t;
            t = pre.Hbar * x + pre.mu[i] * s;
        }
        if (flops)
            *flops += (I + 1) * (2 * K - 1) * N + I * (2 * N - 1) * K;
        return pre.poly_scale * (pre.Hbar.adjoint() * t);
    }
}
