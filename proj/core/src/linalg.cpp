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

#include "mmsec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

namespace mmsec
{
    double hermitian_condition(const cmat &G)
    {
        if (G.rows() == 0)
            return 1.0;
        Eigen::SelfAdjointEigenSolver<cmat> es(G, Eigen::EigenvaluesOnly);
        const double lo = es.eigenvalues().minCoeff();
        const double hi = es.eigenvalues().maxCoeff();
        if (!(lo > 0.0) || !std::isfinite(hi))
            return std::numeric_limits<double>::infinity();
        return hi / lo;
    }

    cmat hermitian_solve(const cmat &G, const cmat &B, const std::string &what)
    {
        const double cond = hermitian_condition(G);
        if (!(cond <= max_condition_number))
            throw infeasible_error(what + ": Gram matrix is singular (condition number " +
                                   (std::isfinite(cond) ? std::to_string(cond) : std::string("inf")) + ")");
        Eigen::LLT<cmat> llt(G);
        if (llt.info() != Eigen::Success)
            throw infeasible_error(what + ": Gram matrix is not positive definite");
        return llt.solve(B);
    }

    double max_column_cosine_distance(const cmat &A, const cmat &B)
    {
        double worst = 0.0;
        for (Eigen::Index k = 0; k < A.cols(); ++k)
        {
            const double na = A.col(k).norm(), nb = B.col(k).norm();
            const double c = std::abs(A.col(k).dot(B.col(k))) / (na * nb);
            worst = std::max(worst, 1.0 - c);
        }
        return worst;
    }
}
