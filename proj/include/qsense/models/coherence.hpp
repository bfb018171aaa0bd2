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

#include "qsense/estimate.hpp"
#include "qsense/likelihood.hpp"
#include "qsense/quantum.hpp"

namespace qsense {

/// Qubit sqrt(1-theta)|0> + sqrt(theta)|1> through a depolarising channel
/// with noise rate lambda; theta in (1-a, a) is the weight of |1>.
struct CoherenceModel {
    double lambda = 0.1;
    double a = 0.95;  // prior half-width, in (1/2, 1)

    CoherenceModel() = default;
    CoherenceModel(double lambda_, double a_) : lambda(lambda_), a(a_) {
        if (!(lambda >= 0.0 && lambda <= 1.0))
            throw invalid_argument("CoherenceModel: lambda must be in [0,1]");
        if (!(a > 0.5 && a < 1.0))
            throw invalid_argument("CoherenceModel: prior width a must be in (1/2, 1)");
    }

    Matrix state(double theta) const {
        const double v = 1.0 - lambda;
        Matrix rho(2, 2);
        rho(0, 0) = v * (1.0 - theta) + 0.5 * lambda;
        rho(1, 1) = v * theta + 0.5 * lambda;
        rho(0, 1) = rho(1, 0) = v * std::sqrt(theta * (1.0 - theta));
        return rho;
    }

    Matrix dstate(double theta) const {
        const double v = 1.0 - lambda;
        Matrix d(2, 2);
        d(0, 0) = -v;
        d(1, 1) = v;
        d(0, 1) = d(1, 0) = v * (1.0 - 2.0 * theta) / (2.0 * std::sqrt(theta * (1.0 - theta)));
        return d;
    }

    QuantumModel quantum_model() const {
        QuantumModel m;
        m.dim = 2;
        m.state = [*this](double theta, double) { return state(theta); };
        m.dstate = [*this](double theta, double) { return dstate(theta); };
        m.control_name = "none";
        return m;
    }

    /// Hypothesis grid uniform in ln(theta/(1-theta)): resolves the edge mass
    /// of the weight-ignorance prior at any a.
    Grid1D odds_grid(std::size_t n = 2048) const {
        const double u1 = std::log(a / (1.0 - a));
        return Grid1D::mapped(
            -u1, u1, n, [](double u) { return 1.0 / (1.0 + std::exp(-u)); },
            [](double u) {
                const double s = 1.0 / (1.0 + std::exp(-u));
                return s * (1.0 - s);
            });
    }

    /// Hypothesis grid uniform in 2 arcsin(sqrt(theta)), matched to the
    /// geometric (Fisher-metric) prior.
    Grid1D arcsin_grid(std::size_t n = 2048) const {
        const double v0 = 2.0 * std::asin(std::sqrt(1.0 - a));
        const double v1 = 2.0 * std::asin(std::sqrt(a));
        return Grid1D::mapped(
            v0, v1, n,
            [](double v) {
                const double s = std::sin(0.5 * v);
                return s * s;
            },
            [](double v) { return 0.5 * std::sin(v); });
    }
};

/// Computational-basis single-shot likelihood at lambda = 1/10:
/// p(0|theta) = 0.9 (1-theta) + 0.05, p(1|theta) = 0.9 theta + 0.05.
inline double coherence_likelihood(int s, double theta) {
    if (s != 0 && s != 1) throw invalid_argument("coherence_likelihood: s must be 0 or 1");
    if (!(theta > 0.0 && theta < 1.0))
        throw invalid_argument("coherence_likelihood: theta must be in (0,1)");
    return s == 0 ? 0.9 * (1.0 - theta) + 0.05 : 0.9 * theta + 0.05;
}

inline LikelihoodModel coherence_likelihood_model() {
    return LikelihoodModel::discrete({0.0, 1.0}, [](double x, double theta, double) {
        return coherence_likelihood(static_cast<int>(x), theta);
    });
}

/// l1-norm coherence of the depolarised state at lambda = 1/10 and its
/// propagated error.  The quantifier is stationary at theta = 1/2 and
/// singular at the ends of the unit interval.
struct CoherenceQuantifier {
    double zeta = 0.0;
    double dzeta = 0.0;
    bool singular = false;  // estimate hit {0,1}: derivative diverges
};

inline CoherenceQuantifier coherence_quantifier(const EstimateReport& theta_report) {
    const double th = theta_report.estimate;
    if (!(th >= 0.0 && th <= 1.0))
        throw invalid_argument("coherence_quantifier: estimate must lie in [0,1]");
    CoherenceQuantifier q;
    if (th == 0.0 || th == 1.0) {
        q.zeta = 0.0;
        q.dzeta = std::numeric_limits<double>::infinity();
        q.singular = true;
        return q;
    }
    const double root = std::sqrt(th * (1.0 - th));
    q.zeta = 1.8 * root;
    q.dzeta = 0.9 * std::abs(1.0 - 2.0 * th) / root * theta_report.error;
    return q;
}

}  // namespace qsense
