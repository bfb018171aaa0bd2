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

#include "qsense/prior.hpp"

namespace qsense {

enum class TransformFamily { scale, translation, mobius };

/// One-parameter families of hypothesis transformations:
/// scale theta -> gamma*theta, translation theta -> theta+gamma, and the
/// Moebius odds rescaling theta -> gamma*theta / (1 - theta + gamma*theta).
struct ParameterTransform {
    TransformFamily family;
    double gamma;

    ParameterTransform(TransformFamily f, double g) : family(f), gamma(g) {
        if ((family == TransformFamily::scale || family == TransformFamily::mobius) &&
            !(gamma > 0.0))
            throw invalid_argument("ParameterTransform: gamma must be > 0 for this family");
        if (!std::isfinite(gamma))
            throw invalid_argument("ParameterTransform: gamma must be finite");
    }

    double apply(double theta) const {
        switch (family) {
            case TransformFamily::scale: return gamma * theta;
            case TransformFamily::translation: return theta + gamma;
            default: return gamma * theta / (1.0 - theta + gamma * theta);
        }
    }

    double derivative(double theta) const {
        switch (family) {
            case TransformFamily::scale: return gamma;
            case TransformFamily::translation: return 1.0;
            default: {
                const double d = 1.0 - theta + gamma * theta;
                return gamma / (d * d);
            }
        }
    }
};

namespace detail {

// Unnormalized functional form of the named ignorance priors; invariance is a
// statement about densities up to a common constant, so the closed form is
// used whenever the kind has one and the table only as a fallback.
inline double unnormalized_density(const PriorDensity& p, double theta) {
    switch (p.kind) {
        case PriorKind::flat: return 1.0;
        case PriorKind::jeffreys_scale: return 1.0 / theta;
        case PriorKind::weight: return 1.0 / (theta * (1.0 - theta));
        default: return p.at(theta) * p.raw_normalization;
    }
}

}  // namespace detail

/// Max residual of the invariance functional equation
/// p(tau(theta)) |dtau/dtheta| = p(theta) over grid nodes whose image stays in
/// range, relative to the peak density.  Zero (to rounding) certifies the
/// prior as invariant under the family.
inline double verify_prior_invariance(const PriorDensity& prior,
                                      const ParameterTransform& transform) {
    double peak = 0.0;
    for (double th : prior.grid.nodes)
        peak = std::max(peak, detail::unnormalized_density(prior, th));

    double worst = -1.0;
    for (double th : prior.grid.nodes) {
        const double image = transform.apply(th);
        if (image < prior.grid.min() || image > prior.grid.max()) continue;
        const double lhs =
            detail::unnormalized_density(prior, image) * std::abs(transform.derivative(th));
        const double rhs = detail::unnormalized_density(prior, th);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    if (worst < 0.0)
        throw invalid_argument(
            "verify_prior_invariance: transform maps every node outside the grid range");
    return worst / peak;
}

}  // namespace qsense
