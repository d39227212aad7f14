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

#include "mmsec/config.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace mmsec
{
    PathLossModel PathLossModel::simplified(double rho)
    {
        PathLossModel out;
        out.model_ = SimplifiedPathLoss{rho};
        return out;
    }

    PathLossModel PathLossModel::general(GeneralPathLoss gains)
    {
        if (gains.M < 1 || gains.K < 1)
            throw config_error("General path-loss model needs M >= 1 and K >= 1");
        if (gains.beta.size() != size_t(gains.M * gains.M * gains.K) || gains.beta_E.size() != size_t(gains.M))
            throw config_error("General path-loss model: gain table has the wrong size");
        PathLossModel out;
        out.model_ = std::move(gains);
        return out;
    }

    PathLossModel PathLossModel::general_from_simplified(int M, int K, double rho)
    {
        GeneralPathLoss g;
        g.M = M;
        g.K = K;
        g.beta.assign(size_t(M * M * K), rho);
        g.beta_E.assign(size_t(M), rho);
        for (int n = 0; n < M; ++n)
            for (int k = 0; k < K; ++k)
                g.beta[size_t((n * M + n) * K + k)] = 1.0;
        g.beta_E[0] = 1.0; // eavesdropper sits in cell 0
        return general(std::move(g));
    }

    double PathLossModel::rho() const
    {
        if (const auto *s = std::get_if<SimplifiedPathLoss>(&model_))
            return s->rho;
        throw config_error("rho is only defined for the simplified path-loss model");
    }

    double PathLossModel::gain(int m, int n, int k) const
    {
        if (const auto *s = std::get_if<SimplifiedPathLoss>(&model_))
            return m == n ? 1.0 : s->rho;
        const auto &g = std::get<GeneralPathLoss>(model_);
        return g.beta[size_t((m * g.M + n) * g.K + k)];
    }

    double PathLossModel::eve_gain(int m, int n) const
    {
        if (const auto *s = std::get_if<SimplifiedPathLoss>(&model_))
            return m == n ? 1.0 : s->rho;
        return std::get<GeneralPathLoss>(model_).beta_E[size_t(m)];
    }

    std::vector<std::pair<std::string, std::string>> SystemConfig::violations() const
    {
        std::vector<std::pair<std::string, std::string>> v;
        if (M < 1)
            v.emplace_back("M", "M >= 1 violated");
        if (K < 1)
            v.emplace_back("K", "K >= 1 violated");
        if (N_T < 1)
            v.emplace_back("N_T", "N_T >= 1 violated");
        if (N_E < 0)
            v.emplace_back("N_E", "N_E >= 0 violated");
        if (K > N_T)
            v.emplace_back("K", "K <= N_T violated (K = " + std::to_string(K) + ", N_T = " + std::to_string(N_T) + ")");
        if (tau < K)
            v.emplace_back("tau", "tau >= K violated (tau = " + std::to_string(tau) + ", K = " + std::to_string(K) + ")");
        if (!(phi > 0.0 && phi <= 1.0))
            v.emplace_back("phi", "phi in (0,1] violated (phi = " + std::to_string(phi) + ")");
        if (!(P_T > 0.0))
            v.emplace_back("P_T_dB", "P_T > 0 violated");
        if (!(p_tau >= 0.0))
            v.emplace_back("p_tau", "p_tau >= 0 violated");
        if (T < 1)
            v.emplace_back("T", "T >= 1 violated");

        if (const auto *s = std::get_if<SimplifiedPathLoss>(&path_loss.variant()))
        {
            if (!(s->rho >= 0.0 && s->rho <= 1.0))
                v.emplace_back("rho", "rho in [0,1] violated (rho = " + std::to_string(s->rho) + ")");
        }
        else
        {
            const auto &g = std::get<GeneralPathLoss>(path_loss.variant());
            if (g.M != M || g.K != K)
                v.emplace_back("gain_table", "gain table dimensions do not match M and K");
            for (double b : g.beta)
                if (!(b > 0.0))
                {
                    v.emplace_back("gain_table", "all path-loss gains must be strictly positive");
                    break;
                }
            for (double b : g.beta_E)
                if (!(b > 0.0))
                {
                    v.emplace_back("gain_table", "all eavesdropper gains must be strictly positive");
                    break;
                }
        }
        return v;
    }

    void SystemConfig::validate() const
    {
        const auto v = violations();
        if (v.empty())
            return;
        std::string msg = "Invalid configuration:";
        for (const auto &[key, text] : v)
            msg += "\n  " + key + ": " + text;
        throw config_error(msg);
    }

    SystemConfig make_simplified(int M, int K, int N_T, int N_E, double P_T, double phi, double rho)
    {
        SystemConfig cfg;
        cfg.M = M;
        cfg.K = K;
        cfg.N_T = N_T;
        cfg.N_E = N_E;
        cfg.P_T = P_T;
        cfg.phi = phi;
        cfg.tau = K;
        cfg.p_tau = P_T / double(K);
        cfg.T = K + 100;
        cfg.path_loss = PathLossModel::simplified(rho);
        return cfg;
    }

    Powers derived_powers(const SystemConfig &cfg, int L)
    {
        if (L < 1)
            throw infeasible_error("AN rank L = " + std::to_string(L) + " is invalid (the null space is empty)");
        return {cfg.phi * cfg.P_T / double(cfg.K), (1.0 - cfg.phi) * cfg.P_T / double(L)};
    }

    InterferenceFactors interference_factors(const SystemConfig &cfg, int n)
    {
        const double bn = cfg.path_loss.eve_gain(n, n);
        double a = 1.0, c = 1.0;
        for (int m = 0; m < cfg.M; ++m)
        {
            if (m == n)
                continue;
            const double r = cfg.path_loss.eve_gain(m, n) / bn;
            a += r;
            c += r * r;
        }
        return {a, c};
    }

    // ---------- configuration files ----------

    static std::string trim(const std::string &s)
    {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            return "";
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    }

    template <typename T>
    static bool parse_number(const std::string &text, T &out)
    {
        const auto *end = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(text.data(), end, out);
        return ec == std::errc() && ptr == end && !text.empty();
    }

    ParsedConfig parse_config(std::istream &in, const std::string &base_dir)
    {
        ParsedConfig out;
        auto &cfg = out.cfg;
        auto &diag = out.diagnostics;

        static const std::vector<std::string> required = {"M", "K", "N_T", "N_E", "P_T_dB", "phi", "tau", "p_tau", "T"};
        std::map<std::string, int> seen; // key -> line
        std::map<std::string, std::string> values;

        std::string raw;
        int line_no = 0;
        while (std::getline(in, raw))
        {
            ++line_no;
            std::string line = raw;
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.resize(hash);
            line = trim(line);
            if (line.empty())
                continue;

            const auto eq = line.find('=');
            if (eq == std::string::npos)
            {
                diag.push_back({line_no, "", "expected 'key = value'"});
                continue;
            }
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));

            const bool known = key == "rho" || key == "gain_table" ||
                               std::find(required.begin(), required.end(), key) != required.end();
            if (!known)
            {
                diag.push_back({line_no, key, "unknown key"});
                continue;
            }
            if (seen.count(key))
            {
                diag.push_back({line_no, key, "duplicate key (first set on line " + std::to_string(seen[key]) + ")"});
                continue;
            }
            seen[key] = line_no;
            values[key] = value;
        }

        auto line_of = [&](const std::string &key)
        { return seen.count(key) ? seen[key] : 0; };

        for (const auto &key : required)
            if (!seen.count(key))
                diag.push_back({0, key, "missing key"});
        if (seen.count("rho") && seen.count("gain_table"))
            diag.push_back({line_of("gain_table"), "gain_table", "rho and gain_table are mutually exclusive"});
        if (!seen.count("rho") && !seen.count("gain_table"))
            diag.push_back({0, "rho", "missing key (rho or gain_table)"});

        auto get_int = [&](const std::string &key, int &dst)
        {
            if (!values.count(key))
                return;
            if (!parse_number(values[key], dst))
                diag.push_back({line_of(key), key, "expected an integer, got '" + values[key] + "'"});
        };
        auto get_double = [&](const std::string &key, double &dst)
        {
            if (!values.count(key))
                return;
            if (!parse_number(values[key], dst))
                diag.push_back({line_of(key), key, "expected a number, got '" + values[key] + "'"});
        };

        get_int("M", cfg.M);
        get_int("K", cfg.K);
        get_int("N_T", cfg.N_T);
        get_int("N_E", cfg.N_E);
        get_int("tau", cfg.tau);
        get_int("T", cfg.T);
        double pt_db = 10.0;
        get_double("P_T_dB", pt_db);
        cfg.P_T = db_to_linear(pt_db);
        get_double("phi", cfg.phi);
        get_double("p_tau", cfg.p_tau);

        if (values.count("rho"))
        {
            double rho = 0.0;
            get_double("rho", rho);
            cfg.path_loss = PathLossModel::simplified(rho);
        }
        else if (values.count("gain_table"))
        {
            const auto path = (std::filesystem::path(base_dir) / values["gain_table"]).string();
            try
            {
                cfg.path_loss = PathLossModel::general(load_gain_table(path, cfg.M, cfg.K));
            }
            catch (const std::exception &e)
            {
                diag.push_back({line_of("gain_table"), "gain_table", e.what()});
            }
        }

        // Invariants are reported only when parsing succeeded, so that the values are meaningful
        if (diag.empty())
            for (const auto &[key, message] : cfg.violations())
                diag.push_back({line_of(key), key, message});
        return out;
    }

    ParsedConfig load_config(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw config_error("Cannot read configuration file '" + path + "'");
        const auto dir = std::filesystem::path(path).parent_path().string();
        return parse_config(in, dir.empty() ? "." : dir);
    }

    GeneralPathLoss load_gain_table(const std::string &path, int M, int K)
    {
        std::ifstream in(path);
        if (!in)
            throw config_error("Cannot read gain table '" + path + "'");
        if (M < 1 || K < 1)
            throw config_error("gain table needs valid M and K");

        GeneralPathLoss g;
        g.M = M;
        g.K = K;
        g.beta.assign(size_t(M * M * K), -1.0);
        g.beta_E.assign(size_t(M), -1.0);

        std::string raw;
        int line_no = 0;
        while (std::getline(in, raw))
        {
            ++line_no;
            if (const auto hash = raw.find('#'); hash != std::string::npos)
                raw.resize(hash);
            std::istringstream ls(raw);
            std::string tag;
            if (!(ls >> tag))
                continue;
            auto fail = [&](const std::string &what)
            { throw config_error(path + ":" + std::to_string(line_no) + ": " + what); };
            if (tag == "beta")
            {
                int m, n, k;
                double v;
                if (!(ls >> m >> n >> k >> v))
                    fail("expected 'beta m n k value'");
                if (m < 0 || m >= M || n < 0 || n >= M || k < 0 || k >= K)
                    fail("index out of range");
                g.beta[size_t((m * M + n) * K + k)] = v;
            }
            else if (tag == "beta_E")
            {
                int m;
                double v;
                if (!(ls >> m >> v))
                    fail("expected 'beta_E m value'");
                if (m < 0 || m >= M)
                    fail("index out of range");
                g.beta_E[size_t(m)] = v;
            }
            else
                fail("unknown record '" + tag + "'");
        }
        for (double v : g.beta)
            if (v < 0.0)
                throw config_error(path + ": gain table is incomplete");
        for (double v : g.beta_E)
            if (v < 0.0)
                throw config_error(path + ": eavesdropper gains are incomplete");
        return g;
    }

    std::string format_diagnostic(const Diagnostic &d, const std::string &path)
    {
        std::string out = path;
        if (d.line > 0)
            out += ":" + std::to_string(d.line);
        out += ": ";
        if (!d.key.empty())
            out += d.key + ": ";
        return out + d.message;
    }
}
