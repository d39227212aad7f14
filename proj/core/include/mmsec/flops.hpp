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

#ifndef MMSEC_FLOPS_H
#define MMSEC_FLOPS_H

#include <cstdint>

#include "mmsec/types.hpp"

namespace mmsec
{
    // Complex FLOPs per coherence interval of T symbols, tau of which carry pilots.
    // Exact unsigned arithmetic; overflow throws numerical_error.
    struct FlopParams
    {
        std::uint64_t K = 1;
        std::uint64_t M = 1;
        std::uint64_t N_T = 1;
        std::uint64_t T = 2;
        std::uint64_t tau = 1;
        std::uint64_t order = 0; // polynomial order I (data) or J (AN)
    };

    std::uint64_t flops_data(DataKind kind, const FlopParams &p);
    std::uint64_t flops_an(ANKind kind, const FlopParams &p);
}

#endif
