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

#include "qsense/posterior.hpp"
#include "qsense/symmetry.hpp"

namespace qsense {

/// Optimal estimate with its error bar and the raw empirical loss behind it.
/// error = sqrt(empirical_loss) / |f'(estimate)|; the loss itself is kept so
/// callers can fall back to it when the error bar is large and the local
/// expansion behind it stops being meaningful.
struct EstimateReport {
    double estimate = 0.0;
    double error = 0.0;
    double empirical_loss = 0.0;
    double f_mean = 0.0;
    bool f_mean_clamped = false;  // posterior mass escaped the tabulated f range
};

/// Posterior-mean estimator in f-coordinates: estimate = f^-1(<f>), empirical
/// loss = posterior variance of f.  Minimizes the expected quadratic loss.
inline EstimateReport optimal_estimate(const PosteriorState& state,
                                       const SymmetryFunction& f) {
    const std::size_t n = state.grid.size();
    if (f.grid.size() != n || f.grid.nodes.front() != state.grid.nodes.front() ||
        f.grid.nodes.back() != state.grid.nodes.back())
        throw invalid_argument("optimal_estimate: symmetry function not defined on this grid");

    double m1 = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double p = state.grid.weights[i] * state.density[i];
        const double fv = f.f_values[i];
        m1 += p * fv;
        m2 += p * fv * fv;
    }
    EstimateReport r;
    r.f_mean = m1;
    r.empirical_loss = std::max(0.0, m2 - m1 * m1);
    const InvertResult inv = f.inverse(m1);
    r.estimate = inv.value;
    r.f_mean_clamped = inv.clamped;
    const double slope = std::abs(f.derivative(r.estimate));
    r.error = slope > 0.0 ? std::sqrt(r.empirical_loss) / slope
                          : std::numeric_limits<double>::infinity();
    return r;
}

}  // namespace qsense
