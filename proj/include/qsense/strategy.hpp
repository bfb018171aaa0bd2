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

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qsense/estimate.hpp"
#include "qsense/lyapunov.hpp"
#include "qsense/prior.hpp"
#include "qsense/quantum.hpp"
#include "qsense/symmetry.hpp"

namespace qsense {

/// Prior-weighted state moment  rho_k = integral dtheta p(theta) rho_y(theta) f(theta)^k.
inline HermitianOperator state_moment(const QuantumModel& model, const PriorDensity& prior,
                                      const SymmetryFunction& f, int k, double control) {
    if (k < 0 || k > 2) throw invalid_argument("state_moment: k must be 0, 1 or 2");
    if (!same_nodes(prior.grid, f.grid))
        throw invalid_argument("state_moment: prior and symmetry function on different grids");
    Matrix acc = Matrix::Zero(model.dim, model.dim);
    for (std::size_t i = 0; i < prior.grid.size(); ++i) {
        double w = prior.grid.weights[i] * prior.density[i];
        for (int q = 0; q < k; ++q) w *= f.f_values[i];
        if (w != 0.0) acc += w * model.state_at(prior.grid.nodes[i], control);
    }
    return HermitianOperator(std::move(acc));
}

/// Full single-shot optimal strategy at a control value.
struct StrategyReport {
    HermitianOperator S_operator;
    Povm povm;
    std::vector<double> estimates_per_outcome;  // f^-1 of the S spectrum
    std::vector<bool> estimate_clamped;         // eigenvalue left the f range
    double gain_G = 0.0;                        // Tr(rho0 S^2)
    double min_loss = 0.0;                      // prior second moment of f - gain
    double intrinsic_gain = 0.0;                // Delta S^2 / prior f-variance
    double prior_f_variance = 0.0;
};

/// Solve the single-shot optimisation: S from the Lyapunov equation on the
/// first two state moments, measurement = spectral projectors of S, estimates
/// = f^-1(eigenvalues).  Eigenvalues within 1e-9 merge into one projector
/// (their estimates coincide at tolerance).
inline StrategyReport optimal_strategy(const QuantumModel& model, const PriorDensity& prior,
                                       const SymmetryFunction& f, double control) {
    StrategyReport rep;
    const HermitianOperator rho0 = state_moment(model, prior, f, 0, control);
    const HermitianOperator rho1 = state_moment(model, prior, f, 1, control);
    rep.S_operator = solve_lyapunov(rho0, rho1);

    const EigenSystem es = eigh(rep.S_operator);
    const int d = model.dim;
    for (int i = 0; i < d;) {
        int j = i + 1;
        while (j < d && es.values(j) - es.values(i) < 1e-9) ++j;
        Matrix proj = Matrix::Zero(d, d);
        double s = 0.0;
        for (int q = i; q < j; ++q) {
            proj += es.vectors.col(q) * es.vectors.col(q).adjoint();
            s += es.values(q);
        }
        s /= static_cast<double>(j - i);
        rep.povm.elements.emplace_back(std::move(proj));
        rep.povm.labels.push_back(s);
        const InvertResult inv = f.inverse(s);
        rep.estimates_per_outcome.push_back(inv.value);
        rep.estimate_clamped.push_back(inv.clamped);
        i = j;
    }

    double pf1 = 0.0, pf2 = 0.0;
    for (std::size_t i = 0; i < prior.grid.size(); ++i) {
        const double p = prior.grid.weights[i] * prior.density[i];
        pf1 += p * f.f_values[i];
        pf2 += p * f.f_values[i] * f.f_values[i];
    }
    rep.gain_G = (rho0.mat * rep.S_operator.mat * rep.S_operator.mat).trace().real();
    rep.min_loss = pf2 - rep.gain_G;
    rep.prior_f_variance = std::max(0.0, pf2 - pf1 * pf1);
    const double dS2 = rep.gain_G - pf1 * pf1;
    rep.intrinsic_gain =
        rep.prior_f_variance > 1e-300 ? std::clamp(dS2 / rep.prior_f_variance, 0.0, 1.0) : 0.0;
    return rep;
}

/// Cross-check of the two estimator optimisations: each outcome label s must
/// equal Tr(P rho1)/Tr(P rho0) for its projector.  Returns the worst residual;
/// zero-probability outcomes are skipped and counted.
inline double consistency_check(const StrategyReport& report, const HermitianOperator& rho0,
                                const HermitianOperator& rho1, int* skipped = nullptr) {
    double worst = 0.0;
    for (std::size_t k = 0; k < report.povm.size(); ++k) {
        const Matrix& p = report.povm.elements[k].mat;
        const double denom = (p * rho0.mat).trace().real();
        if (denom < 1e-14) {
            if (skipped) ++*skipped;  // outcome never occurs
            continue;
        }
        const double s_identity = (p * rho1.mat).trace().real() / denom;
        worst = std::max(worst, std::abs(report.povm.labels[k] - s_identity));
    }
    return worst;
}

/// Quantum Fisher information Tr(rho L^2) at a point, with a rank-continuity
/// check at theta +- h (the Bures/QFI correspondence needs constant rank).
inline double qfi(const QuantumModel& model, double theta, double control,
                  double rank_tol = 1e-10) {
    const double h = 1e-6 * std::max(std::abs(theta), model.theta_scale);
    auto rank_of = [&](double th) {
        const EigenSystem es = eigh(HermitianOperator(model.state_at(th, control)));
        int r = 0;
        for (int i = 0; i < es.values.size(); ++i)
            if (es.values(i) > rank_tol) ++r;
        return r;
    };
    const int r0 = rank_of(theta);
    if (rank_of(theta - h) != r0 || rank_of(theta + h) != r0)
        throw numeric_error("qfi: state rank changes near theta; metric is not defined here");
    const HermitianOperator rho(model.state_at(theta, control));
    const HermitianOperator drho(model.dstate_at(theta, control));
    const HermitianOperator l = sld(rho, drho);
    return (rho.mat * l.mat * l.mat).trace().real();
}

}  // namespace qsense
