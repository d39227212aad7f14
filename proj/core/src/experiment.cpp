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

#include "mmsec/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <cstdio>
#include <exception>
#include <ostream>
#include <thread>

#include "mmsec/analytics.hpp"
#include "mmsec/flops.hpp"
#include "mmsec/montecarlo.hpp"
#include "mmsec/rng.hpp"

namespace mmsec
{
    std::string to_string(SweepVar v)
    {
        switch (v)
        {
        case SweepVar::N_T:
            return "N_T";
        case SweepVar::phi:
            return "phi";
        case SweepVar::beta:
            return "beta";
        case SweepVar::alpha:
            return "alpha";
        case SweepVar::pilot_energy:
            return "pilot_energy";
        case SweepVar::K:
            return "K";
        }
        return "?";
    }

    SweepVar parse_sweep_var(const std::string &name)
    {
        for (SweepVar v : {SweepVar::N_T, SweepVar::phi, SweepVar::beta, SweepVar::alpha, SweepVar::pilot_energy, SweepVar::K})
            if (name == to_string(v))
                return v;
        throw config_error("Unknown sweep variable '" + name + "'");
    }

    std::string to_string(EvaluatorKind e)
    {
        switch (e)
        {
        case EvaluatorKind::Analytic:
            return "analytic";
        case EvaluatorKind::MonteCarlo:
            return "monte_carlo";
        case EvaluatorKind::AlphaS:
            return "alpha_s";
        case EvaluatorKind::FlopsData:
            return "flops_data";
        case EvaluatorKind::FlopsAN:
            return "flops_an";
        }
        return "?";
    }

    EvaluatorKind parse_evaluator(const std::string &name)
    {
        for (EvaluatorKind e : {EvaluatorKind::Analytic, EvaluatorKind::MonteCarlo, EvaluatorKind::AlphaS,
                                EvaluatorKind::FlopsData, EvaluatorKind::FlopsAN})
            if (name == to_string(e))
                return e;
        throw config_error("Unknown evaluator '" + name + "'");
    }

    std::string PrecoderPair::data_label() const
    {
        return data == DataKind::POLY ? "POLY(I=" + std::to_string(data_order) + ")" : to_string(data);
    }

    std::string PrecoderPair::an_label() const
    {
        return an == ANKind::POLY ? "POLY(J=" + std::to_string(an_order) + ")" : to_string(an);
    }

    // ---------- catalog ----------

    namespace
    {
        constexpr double P_T_linear = 10.0; // 10 dB

        SystemConfig base(int M, int K, int N_T, double alpha, double phi, double rho)
        {
            return make_simplified(M, K, N_T, int(std::lround(alpha * N_T)), P_T_linear, phi, rho);
        }

        std::vector<double> range(double from, double to, double step)
        {
            std::vector<double> v;
            for (int i = 0; from + i * step <= to + 1e-12; ++i)
                v.push_back(std::round((from + i * step) * 1e9) / 1e9);
            return v;
        }

        std::vector<PrecoderPair> with_an(std::vector<DataKind> data, ANKind an)
        {
            std::vector<PrecoderPair> out;
            for (auto d : data)
                out.push_back({d, an});
            return out;
        }

        std::vector<PrecoderPair> with_data(DataKind data, std::vector<ANKind> an)
        {
            std::vector<PrecoderPair> out;
            for (auto a : an)
                out.push_back({data, a});
            return out;
        }
    }

    std::vector<Scenario> scenario_catalog()
    {
        using D = DataKind;
        using A = ANKind;
        using E = EvaluatorKind;
        std::vector<Scenario> cat;

        {
            Scenario s;
            s.name = "fig0";
            s.description = "eavesdropper capacity vs beta; N_T=200, phi=0.75, rho=0.3, M=2, alpha in {0.1,0.2,0.3}";
            for (double a : {0.1, 0.2, 0.3})
            {
                char tag[32];
                std::snprintf(tag, sizeof tag, "alpha=%.1f", a);
                s.variants.push_back({tag, base(2, 20, 200, a, 0.75, 0.3)});
            }
            s.sweep = SweepVar::beta;
            s.values = range(0.1, 0.5, 0.1);
            s.pairs = with_data(D::SZF, {A::SNS, A::CNS, A::RANDOM});
            s.evaluators = {E::Analytic, E::MonteCarlo};
            s.keep_beta = true;
            cat.push_back(s);
        }
        {
            Scenario s;
            s.name = "fig1";
            s.description = "secrecy rate vs N_T, lightly loaded; K=10, rho=0.1, M=2, phi=0.75, alpha=0.1";
            s.variants.push_back({"", base(2, 10, 256, 0.1, 0.75, 0.1)});
            s.sweep = SweepVar::N_T;
            s.values = {32, 64, 96, 128, 192, 256};
            s.pairs = with_an({D::MF, D::SZF, D::SRCI, D::CZF, D::CRCI}, A::SNS);
            s.evaluators = {E::Analytic, E::MonteCarlo};
            cat.push_back(s);
        }
        {
            Scenario s;
            s.name = "fig2";
            s.description = "secrecy rate vs N_T, dense; K=20, rho=0.3, M=7, phi=0.75, alpha=0.1";
            s.variants.push_back({"", base(7, 20, 256, 0.1, 0.75, 0.3)});
            s.sweep = SweepVar::N_T;
            s.values = {64, 128, 160, 192, 256};
            s.pairs = with_an({D::MF, D::SZF, D::SRCI, D::CZF, D::CRCI}, A::SNS);
            s.evaluators = {E::Analytic, E::MonteCarlo};
            cat.push_back(s);
        }
        {
            Scenario s;
            s.name = "fig3";
            s.description = "secrecy rate vs phi, selfish data precoders; N_T=100, rho=0.1, M=7, alpha=0.1, beta in {0.1,0.5}";
            s.variants.push_back({"beta=0.1", base(7, 10, 100, 0.1, 0.75, 0.1)});
            s.variants.push_back({"beta=0.5", base(7, 50, 100, 0.1, 0.75, 0.1)});
            s.sweep = SweepVar::phi;
            s.values = range(0.05, 0.95, 0.05);
            s.pairs = with_an({D::MF, D::SZF, D::SRCI}, A::SNS);
            s.evaluators = {E::Analytic, E::MonteCarlo};
            s.keep_beta = true;
            cat.push_back(s);
        }
        {
            Scenario s;
            s.name = "fig4";
            s.description = "secrecy rate vs phi, selfish and collaborative; N_T=100, beta=0.1, rho=0.1, alpha=0.1, M in {2,7}";
            s.variants.push_back({"M=2", base(2, 10, 100, 0.1, 0.75, 0.1)});
            s.variants.push_back({"M=7", base(7, 10, 100, 0.1, 0.75, 0.1)});
            s.sweep = SweepVar::phi;
            s.values = range(0.05, 0.95, 0.05);
            s.pairs = with_an({D::SZF, D::CZF, D::CRCI}, A::SNS);
            s.evaluators = {E::Analytic, E::MonteCarlo};
            s.keep_beta = true;
            cat.push_back(s);
        }
        {
            Scenario s;
            s.name = "fig5";
            s.description = "largest tolerable eavesdropper antenna ratio vs beta; N_T=100, rho=0.3, M=2";
            s.variants.push_back({"", base(2, 10, 100, 0.1, 0.75, 0.3)});
            s.sweep = SweepVar::beta;
            s.values = range(0.05, 0.45, 0.05);
            s.pairs = with_an({D::MF, D::SZF, D::CZF}, A::SNS);
            s.pairs.push_back({D::SZF, A::CNS});
            s.pairs.push_back({D::SZF, A::RANDOM});
            s.evaluators = {E::AlphaS};
            s.keep_beta = true;
            cat.push_back(s);
        }

        const std::vector<ScenarioVariant> poly_variants = {
            {"light", base(2, 20, 200, 0.1, 0.75, 0.1)},
            {"dense", base(7, 30, 200, 0.1, 0.75, 0.3)}};
        {
            Scenario s;
            s.name = "fig6";
            s.description = "POLY data precoders vs pilot energy, optimal phi; N_T=200, alpha=0.1, light (M=2, beta=0.1, rho=0.1) and dense (M=7, beta=0.15, rho=0.3)";
            s.variants = poly_variants;
            s.sweep = SweepVar::pilot_energy;
            s.values = {0.3, 1, 3, 10, 30};
            s.pairs = with_an({D::MF, D::SZF, D::SRCI}, A::SNS);
            for (int I : {1, 2, 4})
                s.pairs.push_back({D::POLY, A::SNS, I, 5});
            s.evaluators = {E::MonteCarlo};
            s.phi_mode = PhiMode::OptimizeMC;
            s.keep_beta = true;
            cat.push_back(s);
        }
        {
            Scenario s;
            s.name = "fig7";
            s.description = "POLY AN precoders vs pilot energy, optimal phi; same networks as fig6, SZF data";
            s.variants = poly_variants;
            s.sweep = SweepVar::pilot_energy;
            s.values = {0.3, 1, 3, 10, 30};
            s.pairs = with_data(D::SZF, {A::SNS, A::RANDOM});
            for (int J : {1, 3, 5})
                s.pairs.push_back({D::SZF, A::POLY, 4, J});
            s.evaluators = {E::MonteCarlo};
            s.phi_mode = PhiMode::OptimizeMC;
            s.keep_beta = true;
            cat.push_back(s);
        }
        {
            Scenario s;
            s.name = "fig8";
            s.description = "data precoders vs K: secrecy rate (optimal phi) and FLOPs; N_T=256, M=2, rho=0.1, T-tau=100, SNS AN";
            s.variants.push_back({"", base(2, 16, 256, 0.1, 0.75, 0.1)});
            s.sweep = SweepVar::K;
            s.values = {8, 16, 32, 48, 64};
            s.pairs = with_an({D::MF, D::SZF, D::SRCI, D::CZF, D::CRCI}, A::SNS);
            for (int I : {1, 3})
                s.pairs.push_back({D::POLY, A::SNS, I, 5});
            s.evaluators = {E::MonteCarlo, E::FlopsData};
            s.phi_mode = PhiMode::OptimizeMC;
            cat.push_back(s);
        }
        {
            Scenario s;
            s.name = "fig9";
            s.description = "AN precoders vs K: secrecy rate (optimal phi) and FLOPs; N_T=256, M=2, rho=0.1, T-tau=100, SZF data";
            s.variants.push_back({"", base(2, 16, 256, 0.1, 0.75, 0.1)});
            s.sweep = SweepVar::K;
            s.values = {8, 16, 32, 48, 64};
            s.pairs = with_data(D::SZF, {A::SNS, A::CNS, A::RANDOM});
            for (int J : {1, 3})
                s.pairs.push_back({D::SZF, A::POLY, 4, J});
            s.evaluators = {E::MonteCarlo, E::FlopsAN};
            s.phi_mode = PhiMode::OptimizeMC;
            cat.push_back(s);
        }
        return cat;
    }

    Scenario find_scenario(const std::string &name)
    {
        for (auto &s : scenario_catalog())
            if (s.name == name)
                return s;
        throw config_error("Unknown scenario '" + name + "'");
    }

    // ---------- sweeps ----------

    static void set_users(SystemConfig &c, int K)
    {
        const double energy = c.pilot_energy();
        const int data_symbols = c.T - c.tau;
        c.K = K;
        c.tau = K;
        c.p_tau = K > 0 ? energy / double(K) : 0.0;
        c.T = K + data_symbols;
    }

    SystemConfig apply_sweep(const SystemConfig &b, SweepVar var, double value, bool keep_beta)
    {
        SystemConfig c = b;
        const double alpha = b.alpha();
        switch (var)
        {
        case SweepVar::N_T:
            c.N_T = int(std::lround(value));
            if (keep_beta)
                set_users(c, int(std::lround(b.beta() * c.N_T)));
            c.N_E = int(std::lround(alpha * c.N_T));
            break;
        case SweepVar::phi:
            c.phi = value;
            break;
        case SweepVar::beta:
            set_users(c, int(std::lround(value * c.N_T)));
            break;
        case SweepVar::alpha:
            c.N_E = int(std::lround(value * c.N_T));
            break;
        case SweepVar::pilot_energy:
            c.p_tau = value / double(c.tau);
            break;
        case SweepVar::K:
            set_users(c, int(std::lround(value)));
            break;
        }
        return c;
    }

    void override_antennas(Scenario &sc, int nt)
    {
        if (nt < 1)
            throw config_error("--nt must be positive");
        if (sc.sweep == SweepVar::N_T)
        {
            sc.values.erase(std::remove_if(sc.values.begin(), sc.values.end(), [&](double v)
                                           { return v > nt; }),
                            sc.values.end());
            return;
        }
        for (auto &v : sc.variants)
            v.base = apply_sweep(v.base, SweepVar::N_T, nt, sc.keep_beta);
    }

    std::vector<std::string> validate_scenario(const Scenario &sc)
    {
        std::vector<std::string> out;
        if (sc.variants.empty())
            out.push_back("scenario has no base configuration");
        if (sc.values.empty())
            out.push_back("sweep has no values");
        for (size_t i = 1; i < sc.values.size(); ++i)
            if (!(sc.values[i] > sc.values[i - 1]))
                out.push_back("sweep values must be strictly increasing");
        if (sc.pairs.empty())
            out.push_back("no precoder pairs");
        if (sc.evaluators.empty())
            out.push_back("no evaluators");
        if (sc.n_realizations < 2)
            out.push_back("n_realizations must be at least 2");
        if (sc.phi_mode == PhiMode::OptimizeMC && sc.phi_grid < 8)
            out.push_back("phi grid needs at least 8 points");
        for (const auto &v : sc.variants)
            for (const auto &[key, msg] : v.base.violations())
                out.push_back(key + ": " + msg);
        return out;
    }

    // ---------- evaluation ----------

    namespace
    {
        std::string reason(const char *what, const std::exception &e)
        {
            return std::string(what) + "(" + e.what() + ")";
        }

        CsvRow evaluate(const Scenario &sc, const SystemConfig &cfg, const PrecoderPair &pair, EvaluatorKind ev,
                        std::uint64_t seed, CsvRow row)
        {
            row.data_precoder = pair.data_label();
            row.an_precoder = pair.an_label();
            row.evaluator = to_string(ev);
            row.phi = cfg.phi;
            try
            {
                cfg.validate();
                switch (ev)
                {
                case EvaluatorKind::Analytic:
                {
                    const auto r = secrecy_lower_bound(pair.data, pair.an, cfg);
                    row.R_mt = r.R_mt;
                    row.C_eve = r.C_eve_bound;
                    row.R_sec = r.R_sec;
                    row.gamma_linear = r.gamma;
                    if (r.eve_status == BoundStatus::OutOfValidity || r.eve_status == BoundStatus::Unbounded)
                        row.status = to_string(r.eve_status);
                    break;
                }
                case EvaluatorKind::MonteCarlo:
                {
                    MonteCarloOptions opt;
                    opt.n_realizations = sc.n_realizations;
                    opt.seed = seed;
                    opt.poly_data_order = pair.data_order;
                    opt.poly_an_order = pair.an_order;
                    SystemConfig c = cfg;
                    if (sc.phi_mode == PhiMode::OptimizeMC)
                    {
                        MonteCarloOptions coarse = opt;
                        coarse.n_realizations = std::max(20, sc.n_realizations / 10);
                        c.phi = optimize_phi(cfg, pair.data, pair.an, Evaluator::MonteCarlo, sc.phi_grid, coarse,
                                             coarse.n_realizations)
                                    .phi_opt;
                    }
                    const auto r = ergodic_secrecy_rate(c, pair.data, pair.an, opt);
                    row.phi = c.phi;
                    row.R_mt = r.R_mt_mc;
                    row.C_eve = r.C_eve_mc;
                    row.R_sec = r.R_sec_mc;
                    row.gamma_linear = r.gamma_mc;
                    row.stderr_R_sec = r.stderr_R_sec;
                    row.n_realizations = r.n_realizations;
                    row.singular_X_count = r.singular_X_count;
                    if (r.singular_X_count > 0)
                        row.status = "singular_X";
                    break;
                }
                case EvaluatorKind::AlphaS:
                    row.R_sec = alpha_s(pair.data, pair.an, cfg);
                    break;
                case EvaluatorKind::FlopsData:
                case EvaluatorKind::FlopsAN:
                {
                    FlopParams p;
                    p.K = std::uint64_t(cfg.K);
                    p.M = std::uint64_t(cfg.M);
                    p.N_T = std::uint64_t(cfg.N_T);
                    p.T = std::uint64_t(cfg.T);
                    p.tau = std::uint64_t(cfg.tau);
                    if (ev == EvaluatorKind::FlopsData)
                    {
                        p.order = std::uint64_t(pair.data_order);
                        row.R_sec = double(flops_data(pair.data, p));
                    }
                    else
                    {
                        p.order = std::uint64_t(pair.an_order);
                        row.R_sec = double(flops_an(pair.an, p));
                    }
                    break;
                }
                }
            }
            catch (const infeasible_error &e)
            {
                row.status = reason("SKIPPED", e);
            }
            catch (const config_error &e)
            {
                row.status = reason("SKIPPED", e);
            }
            catch (const numerical_error &e)
            {
                row.status = reason("FAILED", e);
            }
            return row;
        }
    }

    std::vector<CsvRow> run_scenario(const Scenario &sc, int jobs)
    {
        const auto problems = validate_scenario(sc);
        if (!problems.empty())
            throw config_error("invalid scenario " + sc.name + ": " + problems.front());

        struct Point
        {
            size_t variant;
            size_t value;
        };
        std::vector<Point> points;
        for (size_t v = 0; v < sc.variants.size(); ++v)
            for (size_t i = 0; i < sc.values.size(); ++i)
                points.push_back({v, i});

        std::vector<std::vector<CsvRow>> results(points.size());
        auto run_point = [&](size_t idx)
        {
            const auto &pt = points[idx];
            const auto &var = sc.variants[pt.variant];
            const double value = sc.values[pt.value];
            const SystemConfig cfg = apply_sweep(var.base, sc.sweep, value, sc.keep_beta);
            const std::uint64_t seed = derive_seed(sc.seed, idx, std::uint64_t(StreamTag::Scenario));

            CsvRow proto;
            proto.scenario = var.tag.empty() ? sc.name : sc.name + "@" + var.tag;
            proto.sweep_var = to_string(sc.sweep);
            proto.sweep_value = value;
            for (const auto &pair : sc.pairs)
                for (auto ev : sc.evaluators)
                    results[idx].push_back(evaluate(sc, cfg, pair, ev, seed, proto));
        };

        const int T = std::max(1, std::min<int>(jobs, int(points.size())));
        if (T == 1)
            for (size_t i = 0; i < points.size(); ++i)
                run_point(i);
        else
        {
            std::atomic<size_t> next{0};
            std::vector<std::exception_ptr> errors(static_cast<size_t>(T));
            std::vector<std::thread> pool;
            for (int t = 0; t < T; ++t)
                pool.emplace_back([&, t]
                                  {
                    try
                    {
                        for (size_t i = next++; i < points.size(); i = next++)
                            run_point(i);
                    }
                    catch (...)
                    {
                        errors[size_t(t)] = std::current_exception();
                    } });
            for (auto &th : pool)
                th.join();
            for (auto &e : errors)
                if (e)
                    std::rethrow_exception(e);
        }

        std::vector<CsvRow> rows;
        for (auto &r : results)
            rows.insert(rows.end(), r.begin(), r.end());
        return rows;
    }

    // ---------- CSV ----------

    const std::vector<std::string> &csv_columns()
    {
        static const std::vector<std::string> cols = {
            "scenario", "sweep_var", "sweep_value", "data_precoder", "an_precoder", "evaluator", "phi", "R_mt",
            "C_eve", "R_sec", "gamma_linear", "stderr_R_sec", "n_realizations", "singular_X_count", "status"};
        return cols;
    }

    static std::string quote(const std::string &s)
    {
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string out = "\"";
        for (char ch : s)
        {
            if (ch == '"')
                out += '"';
            out += ch;
        }
        return out + "\"";
    }

    static std::string num(double v)
    {
        if (std::isnan(v))
            return "nan";
        if (std::isinf(v))
            return v > 0 ? "inf" : "-inf";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.10g", v);
        return buf;
    }

    void write_csv(std::ostream &out, const std::vector<CsvRow> &rows, bool timestamp_header)
    {
        if (timestamp_header)
        {
            const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
            char buf[64];
            std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
            out << "# generated " << buf << "\n";
        }
        const auto &cols = csv_columns();
        for (size_t i = 0; i < cols.size(); ++i)
            out << (i ? "," : "") << cols[i];
        out << "\n";
        for (const auto &r : rows)
        {
            out << quote(r.scenario) << ',' << quote(r.sweep_var) << ',' << num(r.sweep_value) << ','
                << quote(r.data_precoder) << ',' << quote(r.an_precoder) << ',' << quote(r.evaluator) << ','
                << num(r.phi) << ',' << num(r.R_mt) << ',' << num(r.C_eve) << ',' << num(r.R_sec) << ','
                << num(r.gamma_linear) << ',' << num(r.stderr_R_sec) << ',' << r.n_realizations << ','
                << r.singular_X_count << ',' << quote(r.status) << "\n";
        }
    }
}
