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

#include "mmsec/types.hpp"

#include <algorithm>
#include <cctype>

namespace mmsec
{
    std::string to_string(DataKind kind)
    {
        switch (kind)
        {
        case DataKind::MF:
            return "MF";
        case DataKind::SZF:
            return "SZF";
        case DataKind::SRCI:
            return "SRCI";
        case DataKind::CZF:
            return "CZF";
        case DataKind::CRCI:
            return "CRCI";
        case DataKind::POLY:
            return "POLY";
        }
        return "?";
    }

    std::string to_string(ANKind kind)
    {
        switch (kind)
        {
        case ANKind::SNS:
            return "SNS";
        case ANKind::CNS:
            return "CNS";
        case ANKind::RANDOM:
            return "random";
        case ANKind::POLY:
            return "POLY";
        }
        return "?";
    }

    static std::string upper(std::string s)
    {
        std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch)
                       { return (char)std::toupper(ch); });
        return s;
    }

    DataKind parse_data_kind(const std::string &name)
    {
        const std::string u = upper(name);
        for (DataKind k : {DataKind::MF, DataKind::SZF, DataKind::SRCI, DataKind::CZF, DataKind::CRCI, DataKind::POLY})
            if (u == to_string(k))
                return k;
        throw config_error("Unknown data precoder '" + name + "'");
    }

    ANKind parse_an_kind(const std::string &name)
    {
        const std::string u = upper(name);
        for (ANKind k : {ANKind::SNS, ANKind::CNS, ANKind::RANDOM, ANKind::POLY})
            if (u == upper(to_string(k)))
                return k;
        throw config_error("Unknown AN precoder '" + name + "'");
    }
}
