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

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "qsense/random.hpp"
#include "qsense/strategy.hpp"

namespace qsense {

struct AdaptiveStep {
    double control = 0.0;
    std::size_t outcome_index = 0;
    double outcome_label = 0.0;  // estimator value attached to the POVM outcome
    EstimateReport report;
};

/// Fully adaptive protocol: each shot re-optimises the POVM from the current
/// posterior, picks the control with the largest precision gain, simulates the
/// outcome at the true parameter and updates the posterior.  The symmetry
/// function stays fixed throughout (changing it between shots would change the
/// definition of optimality itself).
inline std::vector<AdaptiveStep> adaptive_loop(const QuantumModel& model,
                                               const PriorDensity& initial_prior,
                                               const SymmetryFunction& f,
                                               const std::vector<double>& control_candidates,
                                               double true_theta, std::uint64_t shots,
                                               RandomStream& rng) {
    if (control_candidates.empty())
        throw invalid_argument("adaptive_loop: need at least one control candidate");

    std::vector<AdaptiveStep> trajectory;
    trajectory.reserve(shots);
    PosteriorState posterior = PosteriorState::from_prior(initial_prior);

    for (std::uint64_t n = 0; n < shots; ++n) {
        const PriorDensity current =
            prior_from_table(posterior.grid, posterior.density, PriorKind::custom);

        double best_gain = -1.0;
        double best_control = control_candidates.front();
        StrategyReport best;
        for (double y : control_candidates) {
            StrategyReport rep = optimal_strategy(model, current, f, y);
            if (rep.gain_G > best_gain) {
                best_gain = rep.gain_G;
                best_control = y;
                best = std::move(rep);
            }
        }

        const std::vector<double> probs =
            best.povm.probabilities(model.state_at(true_theta, best_control));
        const std::size_t outcome = rng.categorical(probs);

        // Born-rule likelihood of the chosen measurement
        const Povm& povm = best.povm;
        LikelihoodModel like = LikelihoodModel::discrete(
            [&] {
                std::vector<double> labels(povm.size());
                for (std::size_t i = 0; i < labels.size(); ++i)
                    labels[i] = static_cast<double>(i);
                return labels;
            }(),
            [&model, povm](double x, double theta, double y) {
                const std::size_t i = static_cast<std::size_t>(x);
                return (povm.elements[i].mat * model.state_at(theta, y)).trace().real();
            });
        posterior = bayes_update(posterior, like, static_cast<double>(outcome), best_control);

        AdaptiveStep step;
        step.control = best_control;
        step.outcome_index = outcome;
        step.outcome_label = best.povm.labels[outcome];
        step.report = optimal_estimate(posterior, f);
        trajectory.push_back(std::move(step));
    }
    return trajectory;
}

/// Probe optimisation: precision gain across a family of probe preparations
/// under a fixed prior and symmetry function.  Ties break toward the larger
/// parameter value.
struct ProbeScan {
    double eta_star = 0.0;
    std::vector<double> gain_curve;
};

inline ProbeScan optimize_probe(const std::function<QuantumModel(double)>& model_family,
                                const PriorDensity& prior, const SymmetryFunction& f,
                                const std::vector<double>& eta_grid, double control = 0.0) {
    if (eta_grid.size() < 2)
        throw invalid_argument("optimize_probe: need at least two probe parameters");
    ProbeScan scan;
    scan.gain_curve.reserve(eta_grid.size());
    double best = -1.0;
    for (double eta : eta_grid) {
        const StrategyReport rep = optimal_strategy(model_family(eta), prior, f, control);
        scan.gain_curve.push_back(rep.gain_G);
        if (rep.gain_G >= best) {  // ties go to the larger eta
            best = rep.gain_G;
            scan.eta_star = eta;
        }
    }
    return scan;
}

/// Probe-parameter-dependent loss functions make the optimisation target move
/// with the variable being optimised; rejected by construction.
inline ProbeScan optimize_probe(const std::function<QuantumModel(double)>&,
                                const PriorDensity&,
                                const std::function<SymmetryFunction(double)>&,
                                const std::vector<double>&, double = 0.0) {
    throw invalid_argument(
        "optimize_probe: the symmetry function must not depend on the probe parameter; "
        "loss function and prior are fixed a priori, so optimising them is meaningless");
}

}  // namespace qsense
