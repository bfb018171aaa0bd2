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
#include "qsense/interp.hpp"
#include "qsense/prior.hpp"

namespace qsense {

/// Monotone map f turning the parameter into a location variable, tabulated on
/// a grid together with its derivative.  Canonical families carry exact
/// closed-form evaluation and inversion on top of the tables.
class SymmetryFunction {
public:
    Grid1D grid;
    std::vector<double> f_values;   // strictly monotone
    std::vector<double> df_values;  // single-signed
    double c1 = 1.0;
    double c2 = 0.0;
    double theta_u = 1.0;

    double value(double theta) const {
        return fn_ ? fn_(theta) : interp_table(grid.nodes, f_values, theta);
    }

    double derivative(double theta) const {
        return dfn_ ? dfn_(theta) : interp_table(grid.nodes, df_values, theta);
    }

    /// Invert f; out-of-range targets clamp to the grid boundary with a flag.
    InvertResult inverse(double f) const {
        if (inv_) {
            const double lo = std::min(f_values.front(), f_values.back());
            const double hi = std::max(f_values.front(), f_values.back());
            if (f < lo) return {inv_(lo), true};
            if (f > hi) return {inv_(hi), true};
            return {inv_(f), false};
        }
        return invert_monotone(grid.nodes, f_values, f);
    }

    bool increasing() const { return f_values.back() > f_values.front(); }

    /// f(theta) = c1 log(theta/theta_u): scale parameters.
    static SymmetryFunction log_scale(const Grid1D& grid, double c1 = 1.0,
                                      double theta_u = 1.0) {
        if (!(grid.min() > 0.0))
            throw invalid_argument("SymmetryFunction::log_scale: needs theta > 0");
        if (!(theta_u > 0.0))
            throw invalid_argument("SymmetryFunction::log_scale: theta_u must be > 0");
        SymmetryFunction s;
        s.c1 = c1;
        s.theta_u = theta_u;
        s.fill(grid, [=](double t) { return c1 * std::log(t / theta_u); },
               [=](double t) { return c1 / t; },
               [=](double f) { return theta_u * std::exp(f / c1); });
        return s;
    }

    /// f(theta) = c1 arctanh(2 theta - 1) + c2: weight parameters in (0,1).
    static SymmetryFunction weight_arctanh(const Grid1D& grid, double c1 = 2.0,
                                           double c2 = 0.0) {
        check_unit_interval(grid, "weight_arctanh");
        SymmetryFunction s;
        s.c1 = c1;
        s.c2 = c2;
        s.fill(grid, [=](double t) { return c1 * std::atanh(2.0 * t - 1.0) + c2; },
               [=](double t) { return c1 / (2.0 * t * (1.0 - t)); },
               [=](double f) { return 0.5 * (1.0 + std::tanh((f - c2) / c1)); });
        return s;
    }

    /// f(theta) = c1 arctan(sqrt(theta/(1-theta))) + c2, the antiderivative of
    /// (c1/2) / sqrt(theta(1-theta)): weight parameters seen through the
    /// Fisher metric.
    static SymmetryFunction weight_arcsin(const Grid1D& grid, double c1 = 2.0,
                                          double c2 = 0.0) {
        check_unit_interval(grid, "weight_arcsin");
        SymmetryFunction s;
        s.c1 = c1;
        s.c2 = c2;
        s.fill(grid, [=](double t) { return c1 * std::asin(std::sqrt(t)) + c2; },
               [=](double t) { return 0.5 * c1 / std::sqrt(t * (1.0 - t)); },
               [=](double f) {
                   const double q = std::sin((f - c2) / c1);
                   return q * q;
               });
        return s;
    }

    /// General construction from a closed-form triple (f, f', f^-1).
    static SymmetryFunction from_closed_form(const Grid1D& grid,
                                             std::function<double(double)> f,
                                             std::function<double(double)> df,
                                             std::function<double(double)> finv,
                                             double c1 = 1.0, double c2 = 0.0,
                                             double theta_u = 1.0) {
        SymmetryFunction s;
        s.c1 = c1;
        s.c2 = c2;
        s.theta_u = theta_u;
        s.fill(grid, std::move(f), std::move(df), std::move(finv));
        return s;
    }

private:
    std::function<double(double)> fn_, dfn_, inv_;

    static void check_unit_interval(const Grid1D& grid, const char* who) {
        if (!(grid.min() > 0.0) || !(grid.max() < 1.0))
            throw invalid_argument(std::string("SymmetryFunction::") + who +
                                   ": grid must lie inside (0,1)");
    }

    void fill(const Grid1D& g, std::function<double(double)> f,
              std::function<double(double)> df, std::function<double(double)> finv) {
        grid = g;
        fn_ = std::move(f);
        dfn_ = std::move(df);
        inv_ = std::move(finv);
        f_values.resize(g.size());
        df_values.resize(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            f_values[i] = fn_(g.nodes[i]);
            df_values[i] = dfn_(g.nodes[i]);
        }
        for (std::size_t i = 1; i < g.size(); ++i)
            if (f_values[i] == f_values[i - 1])
                throw invalid_argument("SymmetryFunction: f is locally flat on this grid");
    }
};

/// Symmetry function as c1 times the cumulative probability of the prior plus
/// c2.  The derivative table is c1 * density by construction.
inline SymmetryFunction symmetry_from_prior(const PriorDensity& prior, double c1 = 1.0,
                                            double c2 = 0.0) {
    if (c1 == 0.0) throw invalid_argument("symmetry_from_prior: c1 must be nonzero");
    SymmetryFunction s;
    s.grid = prior.grid;
    s.c1 = c1;
    s.c2 = c2;
    const std::vector<double> cum = cumulative_trapezoid(prior.grid, prior.density);
    s.f_values.resize(cum.size());
    s.df_values.resize(cum.size());
    for (std::size_t i = 0; i < cum.size(); ++i) {
        s.f_values[i] = c1 * cum[i] + c2;
        s.df_values[i] = c1 * prior.density[i];
    }
    for (std::size_t i = 1; i < cum.size(); ++i) {
        if (s.f_values[i] == s.f_values[i - 1])
            throw invalid_argument(
                "symmetry_from_prior: density has a support gap at grid resolution, "
                "f would not be invertible");
    }
    return s;
}

/// Generalized information loss |A * integral_theta^theta_est p_MI|^k.
/// Defaults reproduce the quadratic loss of the matching symmetry function:
/// k = 2 and A = the prior's raw (unnormalized) normalization constant.
inline double loss_from_prior(const PriorDensity& prior, double k, double A,
                              double theta_est, double theta) {
    if (!(k > 0.0)) throw invalid_argument("loss_from_prior: k must be > 0");
    if (theta_est < prior.grid.min() || theta_est > prior.grid.max() ||
        theta < prior.grid.min() || theta > prior.grid.max())
        throw invalid_argument("loss_from_prior: arguments outside the grid range");
    const std::vector<double> cum = cumulative_trapezoid(prior.grid, prior.density);
    const double ca = interp_table(prior.grid.nodes, cum, theta_est);
    const double cb = interp_table(prior.grid.nodes, cum, theta);
    return std::pow(std::abs(A * (ca - cb)), k);
}

inline double loss_from_prior(const PriorDensity& prior, double theta_est, double theta) {
    return loss_from_prior(prior, 2.0, prior.raw_normalization, theta_est, theta);
}

}  // namespace qsense
