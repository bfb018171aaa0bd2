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

#include <Eigen/Dense>
#include <complex>
#include <string>

#include "qsense/errors.hpp"

namespace qsense {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense d x d complex Hermitian matrix (d <= 64: few-level probes).
struct HermitianOperator {
    Matrix mat;

    HermitianOperator() = default;
    explicit HermitianOperator(Matrix m) : mat(std::move(m)) {
        if (mat.rows() != mat.cols() || mat.rows() < 1)
            throw invalid_argument("HermitianOperator: matrix must be square, dim >= 1");
        if (mat.rows() > 64)
            throw invalid_argument("HermitianOperator: dim > 64 unsupported");
    }

    int dim() const { return static_cast<int>(mat.rows()); }
    double trace_real() const { return mat.trace().real(); }

    /// Largest |H(i,j) - conj(H(j,i))| with the offending indices.
    double max_asymmetry(int* row = nullptr, int* col = nullptr) const {
        double worst = 0.0;
        for (int i = 0; i < dim(); ++i) {
            for (int j = i; j < dim(); ++j) {
                const double d = std::abs(mat(i, j) - std::conj(mat(j, i)));
                if (d > worst) {
                    worst = d;
                    if (row) *row = i;
                    if (col) *col = j;
                }
            }
        }
        return worst;
    }

    bool is_hermitian(double tol = 1e-12) const { return max_asymmetry() <= tol; }

    static HermitianOperator identity(int d) {
        return HermitianOperator(Matrix::Identity(d, d));
    }
};

/// Spectral decomposition with ascending eigenvalues and orthonormal
/// eigenvector columns.
struct EigenSystem {
    Eigen::VectorXd values;  // ascending
    Matrix vectors;          // unitary, columns are eigenvectors

    Matrix reconstruct() const {
        return vectors * values.asDiagonal() * vectors.adjoint();
    }
};

/// Hermitian eigendecomposition.  Inputs whose symmetry violation exceeds
/// 1e-10 are rejected with a diagnostic naming the offending entry; smaller
/// asymmetries are removed by explicit symmetrization before solving.
inline EigenSystem eigh(const HermitianOperator& h) {
    int i = 0, j = 0;
    const double asym = h.max_asymmetry(&i, &j);
    if (asym > 1e-10)
        throw invalid_argument("eigh: non-Hermitian input, entry (" + std::to_string(i) +
                               "," + std::to_string(j) + ") vs its transpose differs by " +
                               std::to_string(asym));
    const Matrix sym = 0.5 * (h.mat + h.mat.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
    if (solver.info() != Eigen::Success)
        throw numeric_error("eigh: eigensolver failed to converge");
    EigenSystem out;
    out.values = solver.eigenvalues();
    out.vectors = solver.eigenvectors();
    return out;
}

inline EigenSystem eigh(const Matrix& m) { return eigh(HermitianOperator(m)); }

}  // namespace qsense
