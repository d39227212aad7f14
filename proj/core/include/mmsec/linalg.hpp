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

#ifndef MMSEC_LINALG_H
#define MMSEC_LINALG_H

#include <string>

#include "mmsec/types.hpp"

namespace mmsec
{
    // Ratio of extreme eigenvalues of a Hermitian positive semidefinite matrix (inf if singular)
    double hermitian_condition(const cmat &G);

    // Solves G X = B for Hermitian positive definite G. Throws infeasible_error naming `what`
    // when cond(G) exceeds max_condition_number.
    cmat hermitian_solve(const cmat &G, const cmat &B, const std::string &what);

    // Columnwise 1 - |<a_k, b_k>| / (|a_k| |b_k|), maximum over k
    double max_column_cosine_distance(const cmat &A, const cmat &B);
}

#endif
