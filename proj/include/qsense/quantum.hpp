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

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qsense/hermitian.hpp"

namespace qsense {

/// Parametrized state family rho_y(theta) with its theta-derivative.
/// When no analytic derivative is registered, a central difference with step
/// 1e-6 * theta_scale is used.
struct QuantumModel {
    int dim = 2;
    std::function<Matrix(double theta, double y)> state;
    std::function<Matrix(double theta, double y)> dstate;  // optional
    std::string control_name = "y";
    double theta_scale = 1.0;

    Matrix state_at(double theta, double y) const { return state(theta, y); }

    Matrix dstate_at(double theta, double y) const {
        if (dstate) return dstate(theta, y);
        const double h = 1e-6 * theta_scale;
        return (state(theta + h, y) - state(theta - h, y)) / (2.0 * h);
    }
};

/// Positive operator-valued measure: PSD elements resolving the identity.
/// Labels carry the estimator value attached to each outcome (f units when
/// produced by the optimal single-shot strategy).
struct Povm {
    std::vector<HermitianOperator> elements;
    std::vector<double> labels;

    std::size_t size() const { return elements.size(); }

    /// Largest completeness / positivity violation (Frobenius for the sum,
    /// most negative eigenvalue for the elements).
    double max_violation() const {
        if (elements.empty()) return 1.0;
        const int d = elements.front().dim();
        Matrix sum = Matrix::Zero(d, d);
        double worst = 0.0;
        for (const auto& e : elements) {
            sum += e.mat;
            const EigenSystem es = eigh(e);
            worst = std::max(worst, std::max(0.0, -es.values.minCoeff()));
        }
        worst = std::max(worst, (sum - Matrix::Identity(d, d)).norm());
        return worst;
    }

    void validate(double tol = 1e-10) const {
        if (max_violation() > tol)
            throw numeric_error("Povm: completeness/positivity violated beyond tolerance");
    }

    /// Born-rule outcome probabilities for a state.
    std::vector<double> probabilities(const Matrix& rho) const {
        std::vector<double> p(elements.size());
        for (std::size_t i = 0; i < elements.size(); ++i)
            p[i] = (elements[i].mat * rho).trace().real();
        return p;
    }
};

}  // namespace qsense
