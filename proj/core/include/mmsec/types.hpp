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

#ifndef MMSEC_TYPES_H
#define MMSEC_TYPES_H

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace mmsec
{
    using cd = std::complex<double>;
    using cmat = Eigen::MatrixXcd;
    using cvec = Eigen::VectorXcd;
    using rmat = Eigen::MatrixXd;
    using rvec = Eigen::VectorXd;

    // Error taxonomy. The command line runner maps these onto exit codes 1, 2 and 3.
    class config_error : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class infeasible_error : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    class numerical_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Gram matrices with a condition number above this are treated as singular.
    inline constexpr double max_condition_number = 1e12;

    enum class DataKind
    {
        MF,
        SZF,
        SRCI,
        CZF,
        CRCI,
        POLY
    };

    enum class ANKind
    {
        SNS,
        CNS,
        RANDOM,
        POLY
    };

    std::string to_string(DataKind kind);
    std::string to_string(ANKind kind);
    DataKind parse_data_kind(const std::string &name);
    ANKind parse_an_kind(const std::string &name);

    inline bool is_collaborative(DataKind kind) { return kind == DataKind::CZF || kind == DataKind::CRCI; }
}

#endif
