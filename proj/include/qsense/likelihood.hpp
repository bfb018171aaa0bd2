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
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qsense/grid.hpp"

namespace qsense {

/// p(x | theta, y) over a discrete outcome list or a gridded real interval.
/// For gridded outcomes `prob` returns a density in 1/x units.
struct LikelihoodModel {
    std::vector<double> outcomes;        // discrete labels (empty if continuous)
    std::optional<Grid1D> outcome_grid;  // continuous outcome quadrature
    std::function<double(double x, double theta, double y)> prob;

    bool continuous() const { return outcome_grid.has_value(); }

    static LikelihoodModel discrete(std::vector<double> labels,
                                    std::function<double(double, double, double)> p) {
        if (labels.empty())
            throw invalid_argument("LikelihoodModel::discrete: need at least one outcome");
        LikelihoodModel m;
        m.outcomes = std::move(labels);
        m.prob = std::move(p);
        return m;
    }

    static LikelihoodModel gridded(Grid1D outcome_quadrature,
                                   std::function<double(double, double, double)> p) {
        LikelihoodModel m;
        m.outcome_grid = std::move(outcome_quadrature);
        m.prob = std::move(p);
        return m;
    }

    /// Total probability at a hypothesis/control pair; 1 within 1e-8 for a
    /// well-formed model.
    double total_probability(double theta, double y) const {
        double acc = 0.0;
        if (continuous()) {
            for (std::size_t i = 0; i < outcome_grid->size(); ++i)
                acc += outcome_grid->weights[i] * prob(outcome_grid->nodes[i], theta, y);
        } else {
            for (double x : outcomes) acc += prob(x, theta, y);
        }
        return acc;
    }
};

/// Classical Fisher information sum/integral of (d_theta p)^2 / p.
/// Probabilities under the floor with a live derivative are regularized and
/// reported through the diagnostics block.
struct FisherDiagnostics {
    int floored_terms = 0;
};

inline double classical_fisher(const LikelihoodModel& model, double theta, double control,
                               double step_scale = 1.0, FisherDiagnostics* diag = nullptr) {
    const double h = 1e-5 * std::max(std::abs(theta), step_scale);
    constexpr double kFloor = 1e-15;
    auto term = [&](double x) {
        const double p = model.prob(x, theta, control);
        const double dp =
            (model.prob(x, theta + h, control) - model.prob(x, theta - h, control)) / (2.0 * h);
        double denom = p;
        if (p < kFloor) {
            if (dp == 0.0) return 0.0;
            denom = kFloor;
            if (diag) ++diag->floored_terms;
        }
        return dp * dp / denom;
    };
    double acc = 0.0;
    if (model.continuous()) {
        for (std::size_t i = 0; i < model.outcome_grid->size(); ++i)
            acc += model.outcome_grid->weights[i] * term(model.outcome_grid->nodes[i]);
    } else {
        for (double x : model.outcomes) acc += term(x);
    }
    return acc;
}

}  // namespace qsense
