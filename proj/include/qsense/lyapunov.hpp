// Copyright 2026 qsense developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>

#include "qsense/hermitian.hpp"

namespace qsense {

namespace detail {

// Shared kernel for  X rho + rho X = 2 B  solved in the rho eigenbasis:
// X_ij = 2 B_ij / (lambda_i + lambda_j).  Vanishing eigenvalue sums follow the
// pseudo-inverse convention: the component is zeroed when the right-hand side
// is compatibly small, otherwise the system is inconsistent.
inline Matrix sylvester_symmetric(const HermitianOperator& rho, const HermitianOperator& rhs,
                                  const char* who) {
    if (rho.dim() != rhs.dim()) throw invalid_argument(std::string(who) + ": dim mismatch");
    const EigenSystem es = eigh(rho);
    const Matrix b = es.vectors.adjoint() * rhs.mat * es.vectors;
    Matrix x = Matrix::Zero(rho.dim(), rho.dim());
    for (int i = 0; i < rho.dim(); ++i) {
        for (int j = 0; j < rho.dim(); ++j) {
            const double denom = es.values(i) + es.values(j);
            if (denom < 1e-12) {
                if (std::abs(b(i, j)) > 1e-10)
                    throw numeric_error(std::string(who) +
                                        ": inconsistent system, right-hand side lives on the "
                                        "kernel of the state");
                continue;  // pseudo-inverse: leave zero
            }
            x(i, j) = 2.0 * b(i, j) / denom;
        }
    }
    return es.vectors * x * es.vectors.adjoint();
}

}  // namespace detail

/// Solve S rho0 + rho0 S = 2 rho1 for Hermitian S (rho0 a density matrix).
inline HermitianOperator solve_lyapunov(const HermitianOperator& rho0,
                                        const HermitianOperator& rho1) {
    return HermitianOperator(detail::sylvester_symmetric(rho0, rho1, "solve_lyapunov"));
}

/// Symmetric logarithmic derivative: L with (L rho + rho L)/2 = drho.
inline HermitianOperator sld(const HermitianOperator& rho, const HermitianOperator& drho) {
    if (std::abs(drho.mat.trace()) > 1e-8)
        throw invalid_argument("sld: derivative must be traceless (d/dtheta of unit trace)");
    return HermitianOperator(detail::sylvester_symmetric(rho, drho, "sld"));
}

}  // namespace qsense
