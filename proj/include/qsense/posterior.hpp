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
#include <cstdint>
#include <limits>
#include <vector>

#include "qsense/grid.hpp"
#include "qsense/likelihood.hpp"
#include "qsense/prior.hpp"

namespace qsense {

/// Normalized state of knowledge on a grid after `shot_count` updates.
/// Immutable value: updates return a new state.
struct PosteriorState {
    Grid1D grid;
    std::vector<double> density;  // normalized
    std::uint64_t shot_count = 0;
    double log_evidence = 0.0;

    static PosteriorState from_prior(const PriorDensity& prior) {
        PosteriorState s;
        s.grid = prior.grid;
        s.density = prior.density;
        return s;
    }
};

/// Single Bayes update: density <- density * p(x | theta, y), renormalized.
/// The accumulated log evidence grows by the log of the one-shot evidence.
inline PosteriorState bayes_update(const PosteriorState& state, const LikelihoodModel& model,
                                   double outcome, double control) {
    PosteriorState out = state;
    double norm = 0.0;
    for (std::size_t i = 0; i < out.density.size(); ++i) {
        out.density[i] *= model.prob(outcome, state.grid.nodes[i], control);
        norm += state.grid.weights[i] * out.density[i];
    }
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw numeric_error("bayes_update: likelihood vanishes on the whole grid "
                            "(data contradicts the model)");
    for (double& d : out.density) d /= norm;
    out.log_evidence += std::log(norm);
    out.shot_count += 1;
    return out;
}

/// Batch update over a full outcome record with log-domain accumulation, so
/// products of thousands of likelihoods cannot underflow.  `controls` may
/// hold a single repeated value.
inline PosteriorState bayes_update_all(const PosteriorState& state,
                                       const LikelihoodModel& model,
                                       const std::vector<double>& outcomes,
                                       const std::vector<double>& controls) {
    if (controls.size() != outcomes.size() && controls.size() != 1)
        throw invalid_argument("bayes_update_all: controls must match outcomes or be a scalar");
    if (outcomes.empty()) return state;

    const std::size_t n = state.grid.size();
    std::vector<double> logw(n);
    for (std::size_t i = 0; i < n; ++i)
        logw[i] = state.density[i] > 0.0 ? std::log(state.density[i])
                                         : -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
        const double y = controls.size() == 1 ? controls[0] : controls[k];
        for (std::size_t i = 0; i < n; ++i) {
            const double p = model.prob(outcomes[k], state.grid.nodes[i], y);
            logw[i] += p > 0.0 ? std::log(p) : -std::numeric_limits<double>::infinity();
        }
    }
    double peak = -std::numeric_limits<double>::infinity();
    for (double v : logw) peak = std::max(peak, v);
    if (!std::isfinite(peak))
        throw numeric_error("bayes_update_all: likelihood vanishes on the whole grid");

    PosteriorState out = state;
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out.density[i] = std::exp(logw[i] - peak);
        norm += state.grid.weights[i] * out.density[i];
    }
    for (double& d : out.density) d /= norm;
    out.log_evidence += peak + std::log(norm);
    out.shot_count += outcomes.size();
    return out;
}

/// Evidence integral p(x|y) = integral of p(theta) prod_i p(x_i|theta, y_i).
/// Empty records give 1 (empty product); zero evidence is a contradiction.
inline double evidence(const PriorDensity& prior, const LikelihoodModel& model,
                       const std::vector<double>& outcomes,
                       const std::vector<double>& controls) {
    if (outcomes.empty()) return 1.0;
    PosteriorState s = PosteriorState::from_prior(prior);
    s = bayes_update_all(s, model, outcomes, controls);
    const double ev = std::exp(s.log_evidence);
    if (!(ev > 0.0))
        throw numeric_error("evidence: zero evidence, data contradicts the model");
    return ev;
}

}  // namespace qsense
