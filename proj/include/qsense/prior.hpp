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
#include <limits>
#include <string>
#include <vector>

#include "qsense/grid.hpp"
#include "qsense/interp.hpp"

namespace qsense {

enum class PriorKind { flat, jeffreys_scale, weight, geometric, custom };

inline const char* to_string(PriorKind k) {
    switch (k) {
        case PriorKind::flat: return "flat";
        case PriorKind::jeffreys_scale: return "jeffreys_scale";
        case PriorKind::weight: return "weight";
        case PriorKind::geometric: return "geometric";
        default: return "custom";
    }
}

/// Normalized density table over a quadrature grid.
/// `raw_normalization` keeps the integral of the unnormalized functional form
/// over the grid range; loss functions use it to set their natural units.
struct PriorDensity {
    Grid1D grid;
    std::vector<double> density;  // normalized: sum(w_i density_i) = 1
    PriorKind kind = PriorKind::custom;
    double raw_normalization = 1.0;

    double at(double theta) const { return interp_table(grid.nodes, density, theta); }
};

namespace detail {

inline PriorDensity normalized_prior(Grid1D grid, std::vector<double> raw, PriorKind kind) {
    double z = 0.0;
    for (std::size_t i = 0; i < raw.size(); ++i) z += grid.weights[i] * raw[i];
    if (!(z > 0.0) || !std::isfinite(z))
        throw invalid_argument("prior: unnormalizable density on this grid");
    PriorDensity p;
    p.grid = std::move(grid);
    p.density = std::move(raw);
    for (double& d : p.density) d /= z;
    p.kind = kind;
    p.raw_normalization = z;
    return p;
}

}  // namespace detail

/// Maximum-ignorance priors with closed functional forms, normalized over the
/// grid range: flat (locations), 1/theta (scales), 1/[theta(1-theta)]
/// (weights).
inline PriorDensity make_ignorance_prior(PriorKind kind, const Grid1D& grid) {
    const std::size_t n = grid.size();
    std::vector<double> raw(n);
    switch (kind) {
        case PriorKind::flat:
            for (std::size_t i = 0; i < n; ++i) raw[i] = 1.0;
            break;
        case PriorKind::jeffreys_scale:
            if (!(grid.min() > 0.0))
                throw invalid_argument("make_ignorance_prior: scale prior needs theta > 0");
            for (std::size_t i = 0; i < n; ++i) raw[i] = 1.0 / grid.nodes[i];
            break;
        case PriorKind::weight: {
            if (!(grid.min() > 0.0) || !(grid.max() < 1.0) ||
                1.0 - grid.max() < 16 * std::numeric_limits<double>::epsilon())
                throw invalid_argument(
                    "make_ignorance_prior: weight prior needs the grid strictly inside (0,1)");
            for (std::size_t i = 0; i < n; ++i)
                raw[i] = 1.0 / (grid.nodes[i] * (1.0 - grid.nodes[i]));
            break;
        }
        default:
            throw invalid_argument("make_ignorance_prior: kind has no closed form");
    }
    return detail::normalized_prior(grid, std::move(raw), kind);
}

/// Jeffreys's general rule: density proportional to sqrt(I(theta)).
inline PriorDensity prior_from_fisher_curve(const std::vector<double>& fisher_values,
                                            const Grid1D& grid) {
    if (fisher_values.size() != grid.size())
        throw invalid_argument("prior_from_fisher_curve: length mismatch");
    std::vector<double> raw(fisher_values.size());
    double peak = 0.0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (fisher_values[i] < 0.0)
            throw invalid_argument("prior_from_fisher_curve: negative Fisher information");
        raw[i] = std::sqrt(fisher_values[i]);
        peak = std::max(peak, raw[i]);
    }
    if (peak == 0.0)
        throw invalid_argument("prior_from_fisher_curve: no sensitivity anywhere (all zero)");
    return detail::normalized_prior(grid, std::move(raw), PriorKind::geometric);
}

/// PriorDensity from an arbitrary nonnegative table (kind = custom unless told
/// otherwise).  Used for posterior-as-prior plumbing in adaptive loops.
inline PriorDensity prior_from_table(const Grid1D& grid, std::vector<double> raw,
                                     PriorKind kind = PriorKind::custom) {
    for (double v : raw)
        if (v < 0.0) throw invalid_argument("prior_from_table: negative density");
    return detail::normalized_prior(grid, std::move(raw), kind);
}

}  // namespace qsense
