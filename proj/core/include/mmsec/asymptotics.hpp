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

#ifndef MMSEC_ASYMPTOTICS_H
#define MMSEC_ASYMPTOTICS_H

#include <vector>

#include "mmsec/config.hpp"

namespace mmsec
{
    // l-th moment of the limiting eigenvalue distribution of Hbar Hbar^H (K x K, unit-variance
    // entries scaled by 1/sqrt(N_T), K/N_T -> beta): sum_{i<l} C(l,i) C(l,i+1) beta^i / l. l = 0 gives 1.
    double mp_moment(int l, double beta);

    struct MomentTable
    {
        double beta = 0.0;
        std::vector<double> zeta; // zeta[l], l = 0..max_order

        double operator[](int l) const { return zeta.at(size_t(l)); }
    };

    MomentTable moment_table(double beta, int max_order);

    struct GValue
    {
        double G;
        double dG; // derivative with respect to kappa
    };

    // G(beta, kappa) = 1/2 [ sqrt((1-beta)^2/kappa^2 + 2(1+beta)/kappa + 1) + (1-beta)/kappa - 1 ].
    // Diverges like (1-beta)/kappa for kappa -> 0, so kappa <= 0 throws; ZF kinds use their closed limits.
    GValue g_function(double beta, double kappa);

    struct PolyCoefficients
    {
        std::vector<double> mu;     // data precoder coefficients (MSE design)
        std::vector<double> nu;     // AN precoder coefficients (leakage design)
        double gamma3 = 1.0;        // scale applied to mu
        double epsilon = 0.0;       // AN trace-constraint multiplier
        double regularizer = 0.0;   // r in Pi = Hankel(zeta^{i+j+2}) Tr{D} + r Hankel(zeta^{i+j+1})
        double trace_residual = 0.0;// AN: 2 sum nu_j zeta^{j+1} - sum nu_i nu_j zeta^{i+j+2} - 1 at epsilon
        bool root_bracketed = false;// AN: residual changed sign inside the search range
    };

    // How the noise-plus-leakage regularizer of the MSE system is weighted.
    //  Corrected: r = (beta Tr{D Delta} + (Tr{Sigma} + P_AN) / (N_T p)) / v, from a direct
    //             cyclic-trace expansion of the estimation-error term.
    //  Printed:   r = (Tr{D Delta} + (Tr{Sigma} + P_AN) / (N_T p)) / v.
    // v is the mean own-cell estimate variance, which converts to unit-variance moments.
    enum class MseRegularizer
    {
        Corrected,
        Printed
    };

    struct MsePolyInputs
    {
        double beta;
        double N_T;
        double p;                 // per-user data power
        double trace_D;           // mean own-cell gain
        double trace_D_Delta;     // mean own-cell gain times error variance
        double trace_Sigma;       // per-user inter-cell interference plus noise
        double P_AN;              // per-user AN leakage
        double estimate_variance; // mean own-cell estimate variance
    };

    MsePolyInputs mse_poly_inputs(const SystemConfig &cfg, double P_AN, double trace_Sigma, int n = 0);

    // Per-user inter-cell interference plus noise used by the MSE design: sum_{m != n} beta^k_mn P_T + 1,
    // averaged over k. Pilot-contamination cross terms are neglected.
    double mse_poly_trace_sigma(const SystemConfig &cfg, int n = 0);

    // mu = gamma3 Pi^{-1} psi with psi_i = zeta^{i+1}, i = 0..I, scaled so that
    // sum_ij mu_i mu_j zeta^{i+j+1} = N_T (equivalently tr{F^H F} = K).
    PolyCoefficients mse_poly_coefficients(const MsePolyInputs &in, int I, MseRegularizer form = MseRegularizer::Corrected);
    PolyCoefficients mse_poly_coefficients(const SystemConfig &cfg, int I, double P_AN, double trace_Sigma,
                                           MseRegularizer form = MseRegularizer::Corrected);

    // nu = Sigma(eps)^{-1} omega(eps), Sigma_ij = zeta^{i+j+3} + eps zeta^{i+j+2}, omega_j = zeta^{j+2} + eps zeta^{j+1}.
    // eps targets (1/K) tr{A^H A} = 1/beta - 1, i.e. 2 sum nu_j zeta^{j+1} - sum nu_i nu_j zeta^{i+j+2} = 1.
    // For finite J the left side stays below 1 (a polynomial cannot beat the exact projection), so
    // without a sign change the multiplier minimizing the residual is returned and the residual reported.
    PolyCoefficients an_poly_coefficients(double beta, int J);
    PolyCoefficients an_poly_coefficients(const SystemConfig &cfg, int J);

    // nu for a given multiplier, and the corresponding trace residual
    std::vector<double> an_poly_nu(const MomentTable &z, int J, double epsilon);
    double an_poly_trace_residual(const MomentTable &z, const std::vector<double> &nu);
}

#endif
