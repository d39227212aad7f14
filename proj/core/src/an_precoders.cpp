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

#include "mmsec/an_precoders.hpp"

#include <cmath>

#include "mmsec/linalg.hpp"

namespace mmsec
{
    cmat ANPrecoder::matrix() const
    {
        if (is_dense())
            return dense;
        cmat A = -U.adjoint() * V;
        A.diagonal().array() += 1.0;
        return A;
    }

    cmat ANPrecoder::right_multiply(const cmat &X) const
    {
        if (X.cols() != N_T)
            throw config_error("AN product: dimension mismatch");
        if (is_dense())
            return X * dense;
        return X - (X * U.adjoint()) * V;
    }

    // tr{A^H A} for A = I - U^H V
    static double lowrank_trace(const cmat &U, const cmat &V, int N_T)
    {
        const cd tUV = (V * U.adjoint()).trace();
        const cd quad = ((U * U.adjoint()) * (V * V.adjoint())).trace();
        return double(N_T) - 2.0 * tUV.real() + quad.real();
    }

    static ANPrecoder null_space(const cmat &H, ANKind kind, const char *what)
    {
        const int N = int(H.cols());
        if (H.rows() >= H.cols())
            throw infeasible_error(std::string(what) + " needs fewer estimated rows than antennas (" +
                                   std::to_string(H.rows()) + " >= " + std::to_string(N) + ")");
        ANPrecoder pre;
        pre.kind = kind;
        pre.N_T = N;
        pre.L = N - int(H.rows());
        pre.U = H;
        pre.V = hermitian_solve(H * H.adjoint(), H, what);
        pre.trace = lowrank_trace(pre.U, pre.V, N);
        return pre;
    }

    ANPrecoder sns_precoder(const cmat &Hhat_nn)
    {
        return null_space(Hhat_nn, ANKind::SNS, "SNS");
    }

    ANPrecoder cns_precoder(const cmat &Hhat_stacked)
    {
        return null_space(Hhat_stacked, ANKind::CNS, "CNS");
    }

    ANPrecoder random_an_precoder(Rng &rng, int N_T)
    {
        ANPrecoder pre;
        pre.kind = ANKind::RANDOM;
        pre.N_T = N_T;
        pre.L = N_T;
        pre.dense = rng.cn_matrix(N_T, N_T);
        pre.dense *= std::sqrt(double(N_T) / pre.dense.squaredNorm());
        pre.trace = pre.dense.squaredNorm();
        return pre;
    }

    ANPrecoder poly_an_precoder(const cmat &Hhat_nn, const std::vector<double> &nu, double estimate_variance)
    {
        if (nu.empty())
            throw config_error("POLY AN precoder needs at least one coefficient");
        if (!(estimate_variance > 0.0))
            throw config_error("POLY AN precoder needs a positive estimate variance");

        const int N = int(Hhat_nn.cols());
        const Eigen::Index K = Hhat_nn.rows();
        ANPrecoder pre;
        pre.kind = ANKind::POLY;
        pre.N_T = N;
        pre.L = N - int(K);
        pre.nu = nu;
        pre.Hbar = Hhat_nn / std::sqrt(double(N) * estimate_variance);

        const cmat W = pre.Hbar * pre.Hbar.adjoint();
        cmat P = nu.back() * cmat::Identity(K, K);
        for (size_t j = nu.size() - 1; j-- > 0;)
        {
            P = W * P;
            P.diagonal().array() += nu[j];
        }
        pre.U = pre.Hbar;
        pre.V = P * pre.Hbar;
        pre.trace = lowrank_trace(pre.U, pre.V, N);
        return pre;
    }

    cvec apply_an_precoder(const ANPrecoder &pre, const cvec &z, std::uint64_t *flops)
    {
        if (z.size() != pre.N_T)
            throw config_error("AN vector has " + std::to_string(z.size()) + " entries, precoder expects " + std::to_string(pre.N_T));
        const std::uint64_t N = std::uint64_t(pre.N_T);

        if (pre.is_dense())
        {
            if (flops)
                *flops += (2 * N - 1) * N;
            return pre.dense * z;
        }

        if (pre.kind != ANKind::POLY)
        {
            const std::uint64_t r = std::uint64_t(pre.U.rows());
            if (flops)
                *flops += (2 * N - 1) * r + (2 * r - 1) * N + N;
            return z - pre.U.adjoint() * (pre.V * z);
        }

        const std::uint64_t K = std::uint64_t(pre.Hbar.rows());
        const size_t J = pre.nu.size() - 1;
        auto R = [&](const cvec &x) -> cvec
        { return pre.Hbar.adjoint() * (pre.Hbar * x); };
        if (flops)
            *flops += (J + 1) * ((2 * K - 1) * N + (2 * N - 1) * K);

        bool nested = true;
        for (size_t j = 0; j < J; ++j)
            nested = nested && pre.nu[j] != 0.0;

        if (nested)
        {
            cvec x = z;
            for (size_t j = J; j >= 1; --j)
                x = z + (pre.nu[j] / pre.nu[j - 1]) * R(x);
            return z - pre.nu[0] * R(x);
        }

        // Direct summation in the K-dimensional domain
        const cvec u = pre.Hbar * z;
        cvec t = pre.nu.back() * u;
        for (size_t j = J; j-- > 0;)
            t = pre.Hbar * (pre.Hbar.adjoint() * t) + pre.nu[j] * u;
        return z - pre.Hbar.adjoint() * t;
    }
}
