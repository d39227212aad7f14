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

#ifndef MMSEC_CONFIG_H
#define MMSEC_CONFIG_H

#include <cmath>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "mmsec/types.hpp"

namespace mmsec
{
    // Every BS-to-other-cell link has gain rho, every own-cell link has gain 1.
    struct SimplifiedPathLoss
    {
        double rho = 0.0;
    };

    // Explicit large-scale gains. beta[(m * M + n) * K + k] is the gain from BS m to user k of cell n,
    // beta_E[m] the gain from BS m to the eavesdropper.
    struct GeneralPathLoss
    {
        int M = 0;
        int K = 0;
        std::vector<double> beta;
        std::vector<double> beta_E;
    };

    class PathLossModel
    {
    public:
        PathLossModel() = default;
        static PathLossModel simplified(double rho);
        static PathLossModel general(GeneralPathLoss gains);

        // General model populated with the simplified pattern, used for two-path cross checks
        static PathLossModel general_from_simplified(int M, int K, double rho);

        bool is_simplified() const { return std::holds_alternative<SimplifiedPathLoss>(model_); }
        double rho() const; // throws for the general model

        // Gain from BS m to user k of cell n
        double gain(int m, int n, int k) const;

        // Gain from BS m to the eavesdropper that sits in cell n
        double eve_gain(int m, int n = 0) const;

        const std::variant<SimplifiedPathLoss, GeneralPathLoss> &variant() const { return model_; }

    private:
        std::variant<SimplifiedPathLoss, GeneralPathLoss> model_{SimplifiedPathLoss{}};
    };

    struct SystemConfig
    {
        int M = 1;        // cells
        int K = 1;        // users per cell
        int N_T = 1;      // BS antennas
        int N_E = 0;      // eavesdropper antennas
        double P_T = 10;  // total transmit power, linear (unit MT noise)
        double phi = 1;   // power share of the data signal
        int tau = 1;      // pilot length in symbols
        double p_tau = 0; // pilot symbol power, linear
        int T = 200;      // coherence interval in symbols
        PathLossModel path_loss;

        double beta() const { return double(K) / double(N_T); }
        double alpha() const { return double(N_E) / double(N_T); }
        double pilot_energy() const { return p_tau * double(tau); }

        // One entry per violated invariant: {config key, message}
        std::vector<std::pair<std::string, std::string>> violations() const;

        // Throws config_error listing all violations
        void validate() const;
    };

    // Simplified-model configuration with the usual experiment defaults: tau = K, p_tau = P_T / K, T = tau + 100
    SystemConfig make_simplified(int M, int K, int N_T, int N_E, double P_T, double phi, double rho);

    struct Powers
    {
        double p; // per-user data power
        double q; // per-dimension AN power
    };

    // p = phi P_T / K, q = (1 - phi) P_T / L
    Powers derived_powers(const SystemConfig &cfg, int L);

    struct InterferenceFactors
    {
        double a;
        double c;
    };

    // a = 1 + sum_{m != n} beta_mE / beta_nE, c = 1 + sum_{m != n} (beta_mE / beta_nE)^2
    InterferenceFactors interference_factors(const SystemConfig &cfg, int n = 0);

    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

    // ---------- configuration files ----------

    struct Diagnostic
    {
        int line = 0; // 1-based, 0 if the problem is not tied to a line
        std::string key;
        std::string message;
    };

    struct ParsedConfig
    {
        SystemConfig cfg;
        std::vector<Diagnostic> diagnostics;
        bool ok() const { return diagnostics.empty(); }
    };

    // Flat "key = value" text with '#' comments. Keys: M, K, N_T, N_E, P_T_dB, phi, tau, p_tau, T and
    // either rho or gain_table (a path relative to base_dir).
    ParsedConfig parse_config(std::istream &in, const std::string &base_dir = ".");

    // Throws config_error if the file cannot be read
    ParsedConfig load_config(const std::string &path);

    // Gain table format: "beta <m> <n> <k> <value>" and "beta_E <m> <value>" lines, 0-based indices
    GeneralPathLoss load_gain_table(const std::string &path, int M, int K);

    std::string format_diagnostic(const Diagnostic &d, const std::string &path);
}

#endif
