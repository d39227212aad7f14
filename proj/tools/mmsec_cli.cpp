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

// Command line runner: scenario sweeps to CSV, scenario catalog, configuration checks.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "mmsec/config.hpp"
#include "mmsec/experiment.hpp"

namespace
{
    enum Exit
    {
        ok = 0,
        config = 1,
        infeasible = 2,
        numerical = 3
    };

    std::vector<double> parse_values(const std::string &csv)
    {
        std::vector<double> out;
        std::stringstream ss(csv);
        std::string item;
        while (std::getline(ss, item, ','))
        {
            size_t pos = 0;
            double v = 0.0;
            try
            {
                v = std::stod(item, &pos);
            }
            catch (const std::exception &)
            {
                pos = 0;
            }
            if (pos == 0 || pos != item.size())
                throw mmsec::config_error("bad sweep value '" + item + "'");
            out.push_back(v);
        }
        return out;
    }

    mmsec::PrecoderPair parse_pair(const std::string &s)
    {
        const auto colon = s.find(':');
        if (colon == std::string::npos)
            throw mmsec::config_error("precoder pair must look like DATA:AN, got '" + s + "'");
        mmsec::PrecoderPair p;
        p.data = mmsec::parse_data_kind(s.substr(0, colon));
        p.an = mmsec::parse_an_kind(s.substr(colon + 1));
        return p;
    }

    struct RunArgs
    {
        std::string scenario;
        std::string out = "-";
        std::uint64_t seed = 1;
        int realizations = 0;
        int nt = 0;
        int jobs = 1;
        bool no_timestamp = false;
        std::string config;
        std::string sweep_var = "phi";
        std::string values;
        std::vector<std::string> pairs;
        std::vector<std::string> evaluators;
    };

    mmsec::Scenario custom_scenario(const RunArgs &a)
    {
        if (a.config.empty())
            throw mmsec::config_error("custom scenario needs --config");
        const auto parsed = mmsec::load_config(a.config);
        if (!parsed.ok())
        {
            std::string msg = "invalid configuration";
            for (const auto &d : parsed.diagnostics)
                msg += "\n  " + mmsec::format_diagnostic(d, a.config);
            throw mmsec::config_error(msg);
        }
        mmsec::Scenario sc;
        sc.name = "custom";
        sc.variants.push_back({"", parsed.cfg});
        sc.sweep = mmsec::parse_sweep_var(a.sweep_var);
        sc.values = a.values.empty() ? std::vector<double>{parsed.cfg.phi} : parse_values(a.values);
        for (const auto &p : a.pairs.empty() ? std::vector<std::string>{"SZF:SNS"} : a.pairs)
            sc.pairs.push_back(parse_pair(p));
        for (const auto &e : a.evaluators.empty() ? std::vector<std::string>{"analytic"} : a.evaluators)
            sc.evaluators.push_back(mmsec::parse_evaluator(e));
        return sc;
    }

    int run(const RunArgs &a)
    {
        mmsec::Scenario sc = a.scenario == "custom" ? custom_scenario(a) : mmsec::find_scenario(a.scenario);
        sc.seed = a.seed;
        if (a.realizations > 0)
            sc.n_realizations = a.realizations;
        if (a.nt > 0)
            mmsec::override_antennas(sc, a.nt);

        const auto rows = mmsec::run_scenario(sc, a.jobs);

        if (a.out == "-")
            mmsec::write_csv(std::cout, rows, !a.no_timestamp);
        else
        {
            std::ofstream f(a.out);
            if (!f)
                throw mmsec::config_error("cannot write " + a.out);
            mmsec::write_csv(f, rows, !a.no_timestamp);
        }

        size_t skipped = 0, failed = 0;
        for (const auto &r : rows)
        {
            skipped += r.status.rfind("SKIPPED", 0) == 0;
            failed += r.status.rfind("FAILED", 0) == 0;
        }
        if (failed > 0)
        {
            std::cerr << failed << " row(s) failed numerically\n";
            return numerical;
        }
        if (!rows.empty() && skipped == rows.size())
        {
            std::cerr << "every point of the scenario is infeasible\n";
            return infeasible;
        }
        return ok;
    }

    int list()
    {
        for (const auto &s : mmsec::scenario_catalog())
            std::cout << s.name << "  " << s.description << "\n";
        return ok;
    }

    int validate(const std::string &path)
    {
        const auto parsed = mmsec::load_config(path);
        for (const auto &d : parsed.diagnostics)
            std::cerr << mmsec::format_diagnostic(d, path) << "\n";
        if (!parsed.ok())
            return config;
        std::cout << path << ": ok\n";
        return ok;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"mmsec: secure multi-cell massive MIMO precoding laboratory"};
    app.require_subcommand(1);

    RunArgs ra;
    auto *run_cmd = app.add_subcommand("run", "Run a scenario and write CSV");
    run_cmd->add_option("--scenario", ra.scenario, "fig0..fig9 or custom")->required();
    run_cmd->add_option("--out", ra.out, "Output CSV path, - for stdout");
    run_cmd->add_option("--seed", ra.seed, "Master seed");
    run_cmd->add_option("--realizations", ra.realizations, "Monte Carlo realizations per point")->check(CLI::PositiveNumber);
    run_cmd->add_option("--nt", ra.nt, "Override the number of BS antennas")->check(CLI::PositiveNumber);
    run_cmd->add_option("--jobs", ra.jobs, "Sweep points run in parallel")->check(CLI::PositiveNumber);
    run_cmd->add_flag("--no-header-timestamp", ra.no_timestamp, "Omit the timestamp comment line");
    run_cmd->add_option("--config", ra.config, "Base configuration (custom scenario)");
    run_cmd->add_option("--sweep-var", ra.sweep_var, "N_T, phi, beta, alpha, pilot_energy or K (custom scenario)");
    run_cmd->add_option("--values", ra.values, "Comma-separated sweep values (custom scenario)");
    run_cmd->add_option("--pair", ra.pairs, "DATA:AN precoder pair, repeatable (custom scenario)");
    run_cmd->add_option("--evaluator", ra.evaluators, "analytic, monte_carlo, alpha_s, flops_data, flops_an (custom scenario)");

    app.add_subcommand("list", "List the scenario catalog");

    std::string config_path;
    auto *val_cmd = app.add_subcommand("validate", "Check a configuration file");
    val_cmd->add_option("--config", config_path, "Configuration file")->required();

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*run_cmd)
            return run(ra);
        if (*val_cmd)
            return validate(config_path);
        return list();
    }
    catch (const mmsec::config_error &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return config;
    }
    catch (const mmsec::infeasible_error &e)
    {
        std::cerr << "infeasible: " << e.what() << "\n";
        return infeasible;
    }
    catch (const mmsec::numerical_error &e)
    {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return numerical;
    }
}
