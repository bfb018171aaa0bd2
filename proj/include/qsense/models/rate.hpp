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
#include <vector>

#include "qsense/estimate.hpp"
#include "qsense/likelihood.hpp"
#include "qsense/polygamma.hpp"
#include "qsense/random.hpp"

namespace qsense {

/// Poisson-process rate estimation from waiting times: p(t|theta) = theta e^{-theta t}.
struct ExponentialRateModel {
    double prob(double t, double theta) const { return theta * std::exp(-theta * t); }

    /// Waiting-time quadrature for evidence/Fisher integrals: the tail beyond
    /// 50/theta_ref carries less than e^-50 of the mass.
    static Grid1D outcome_grid(double theta_ref, std::size_t n = 4096) {
        return Grid1D::logarithmic(5e-8 / theta_ref, 50.0 / theta_ref, n);
    }

    LikelihoodModel likelihood(double theta_ref = 1.0, std::size_t n = 4096) const {
        return LikelihoodModel::gridded(
            outcome_grid(theta_ref, n),
            [](double t, double theta, double) { return theta * std::exp(-theta * t); });
    }

    std::vector<double> sample(double true_theta, std::uint64_t mu, RandomStream& rng) const {
        std::vector<double> t(mu);
        for (auto& v : t) v = rng.exponential(true_theta);
        return t;
    }
};

/// Closed-form optimal rate estimate under the scale-ignorance prior:
/// estimate = exp(psi(mu)) / (mu tbar), error = estimate * sqrt(psi'(mu)).
inline EstimateReport rate_closed_form(double t_bar, std::uint64_t mu, double theta_u = 1.0) {
    if (!(t_bar > 0.0)) throw invalid_argument("rate_closed_form: t_bar must be > 0");
    if (mu < 1) throw invalid_argument("rate_closed_form: mu must be >= 1");
    if (!(theta_u > 0.0)) throw invalid_argument("rate_closed_form: theta_u must be > 0");
    const double m = static_cast<double>(mu);
    EstimateReport r;
    r.f_mean = digamma(m) - std::log(m * t_bar * theta_u);
    r.empirical_loss = trigamma(m);
    r.estimate = theta_u * std::exp(r.f_mean);
    r.error = r.estimate * std::sqrt(r.empirical_loss);
    return r;
}

}  // namespace qsense
