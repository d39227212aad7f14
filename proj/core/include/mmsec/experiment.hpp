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

#ifndef MMSEC_EXPERIMENT_H
#define MMSEC_EXPERIMENT_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mmsec/config.hpp"

namespace mmsec
{
    enum class SweepVar
    {
        N_T,
        phi,
        beta,
        alpha,
        pilot_energy,
        K
    };

    std::string to_string(SweepVar v);
    SweepVar parse_sweep_var(const std::string &name);

    // "analytic" and "monte_carlo" fill the rate columns. "alpha_s", "flops_data" and "flops_an"
    // place their scalar result in the R_sec column.
    enum class EvaluatorKind
    {
        Analytic,
        MonteCarlo,
        AlphaS,
        FlopsData,
        FlopsAN
    };

    std::string to_string(EvaluatorKind e);
    EvaluatorKind parse_evaluator(const std::string &name);

    struct PrecoderPair
    {
        DataKind data = DataKind::SZF;
        ANKind an = ANKind::SNS;
        int data_order = 4; // POLY data
        int an_order = 5;   // POLY AN

        std::string data_label() const;
        std::string an_label() const;
    };

    enum class PhiMode
    {
        Fixed,       // phi from the configuration or the sweep
        OptimizeMC   // numerically optimal phi per point (Monte Carlo rows only)
    };

    struct ScenarioVariant
    {
        std::string tag;     // appended to the scenario name as name@tag; empty for the plain name
        SystemConfig base;
    };

    struct Scenario
    {
        std::string name;
        std::string description;
        std::vector<ScenarioVariant> variants;
        SweepVar sweep = SweepVar::phi;
        std::vector<double> values; // strictly increasing
        std::vector<PrecoderPair> pairs;
        std::vector<EvaluatorKind> evaluators;
        PhiMode phi_mode = PhiMode::Fixed;
        bool keep_beta = false; // N_T sweeps and overrides rescale K with N_T
        int n_realizations = 500;
        std::uint64_t seed = 1;
        int phi_grid = 8; // OptimizeMC search grid
    };

    // fig0 .. fig9 at desk scale (N_T <= 256, 500 realizations)
    std::vector<Scenario> scenario_catalog();
    Scenario find_scenario(const std::string &name); // throws config_error

    // Replaces the base N_T (rescaling K when keep_beta, and N_E to keep alpha), or for N_T sweeps
    // drops the sweep values above nt.
    void override_antennas(Scenario &sc, int nt);

    // Applies one sweep value to a configuration. K changes keep the pilot energy and T - tau.
    SystemConfig apply_sweep(const SystemConfig &base, SweepVar var, double value, bool keep_beta);

    // Invariant checks: sweep strictly increasing, pairs and evaluators present, realizations >= 2
    std::vector<std::string> validate_scenario(const Scenario &sc);

    struct CsvRow
    {
        std::string scenario;
        std::string sweep_var;
        double sweep_value = 0.0;
        std::string data_precoder;
        std::string an_precoder;
        std::string evaluator;
        double phi = 0.0;
        double R_mt = 0.0;
        double C_eve = 0.0;
        double R_sec = 0.0;
        double gamma_linear = 0.0;
        double stderr_R_sec = 0.0;
        int n_realizations = 0;
        int singular_X_count = 0;
        std::string status = "OK"; // OK, SKIPPED(reason), FAILED(reason) or a bound marker
    };

    // One row per (variant, sweep value, pair, evaluator), ordered that way. Sweep points run on
    // `jobs` threads; each point derives its seed from (seed, point index), so output is independent of jobs.
    std::vector<CsvRow> run_scenario(const Scenario &sc, int jobs = 1);

    const std::vector<std::string> &csv_columns();
    void write_csv(std::ostream &out, const std::vector<CsvRow> &rows, bool timestamp_header = true);
}

#endif
