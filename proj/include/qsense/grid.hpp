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
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qsense/errors.hpp"

namespace qsense {

enum class SpacingKind { linear, logarithmic, mapped };

namespace detail {

// Composite Simpson weights for n equispaced nodes with spacing h.
// An odd interval count is closed with a Simpson 3/8 tail, so all
// weights stay positive and the rule is exact for cubics.
inline std::vector<double> simpson_weights(std::size_t n, double h) {
    if (n < 4) throw invalid_argument("simpson_weights: need at least 4 nodes");
    std::vector<double> w(n, 0.0);
    const std::size_t m = n - 1;  // interval count
    const std::size_t k = (m % 2 == 0) ? m : m - 3;
    if (k > 0) {
        w[0] += h / 3.0;
        w[k] += h / 3.0;
        for (std::size_t i = 1; i < k; i += 2) w[i] += 4.0 * h / 3.0;
        for (std::size_t i = 2; i < k; i += 2) w[i] += 2.0 * h / 3.0;
    }
    if (m % 2 != 0) {
        w[m - 3] += 3.0 * h / 8.0;
        w[m - 2] += 9.0 * h / 8.0;
        w[m - 1] += 9.0 * h / 8.0;
        w[m] += 3.0 * h / 8.0;
    }
    return w;
}

}  // namespace detail

/// Fixed 1-D quadrature grid: strictly increasing nodes with positive
/// Simpson-type weights, optionally built through a change of variables.
struct Grid1D {
    std::vector<double> nodes;
    std::vector<double> weights;
    SpacingKind spacing_kind = SpacingKind::linear;

    std::size_t size() const { return nodes.size(); }
    double min() const { return nodes.front(); }
    double max() const { return nodes.back(); }

    static Grid1D linear(double a, double b, std::size_t n = 1024) {
        if (!(a < b)) throw invalid_argument("Grid1D::linear: need a < b");
        check_size(n);
        Grid1D g;
        g.spacing_kind = SpacingKind::linear;
        const double h = (b - a) / static_cast<double>(n - 1);
        g.nodes.resize(n);
        for (std::size_t i = 0; i < n; ++i) g.nodes[i] = a + h * static_cast<double>(i);
        g.nodes.back() = b;
        g.weights = detail::simpson_weights(n, h);
        return g;
    }

    static Grid1D logarithmic(double a, double b, std::size_t n = 1024) {
        if (!(a > 0.0 && a < b)) throw invalid_argument("Grid1D::logarithmic: need 0 < a < b");
        Grid1D g = mapped(std::log(a), std::log(b), n,
                          [](double u) { return std::exp(u); },
                          [](double u) { return std::exp(u); });
        g.spacing_kind = SpacingKind::logarithmic;
        return g;
    }

    /// Grid through a change of variables theta = map(u) with u equispaced on
    /// [u0, u1].  The map must be strictly monotone; weights carry |dmap/du|
    /// so that sum(w_i f(theta_i)) approximates the integral of f in theta.
    static Grid1D mapped(double u0, double u1, std::size_t n,
                         const std::function<double(double)>& map,
                         const std::function<double(double)>& dmap) {
        if (!(u0 < u1)) throw invalid_argument("Grid1D::mapped: need u0 < u1");
        check_size(n);
        Grid1D g;
        g.spacing_kind = SpacingKind::mapped;
        const double h = (u1 - u0) / static_cast<double>(n - 1);
        std::vector<double> wu = detail::simpson_weights(n, h);
        g.nodes.resize(n);
        g.weights.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double u = (i + 1 == n) ? u1 : u0 + h * static_cast<double>(i);
            g.nodes[i] = map(u);
            g.weights[i] = wu[i] * std::abs(dmap(u));
        }
        const bool descending = g.nodes.front() > g.nodes.back();
        if (descending) {
            std::reverse(g.nodes.begin(), g.nodes.end());
            std::reverse(g.weights.begin(), g.weights.end());
        }
        for (std::size_t i = 1; i < n; ++i)
            if (!(g.nodes[i] > g.nodes[i - 1]))
                throw invalid_argument("Grid1D::mapped: map is not strictly monotone");
        return g;
    }

private:
    static void check_size(std::size_t n) {
        if (n < 16) throw invalid_argument("Grid1D: need at least 16 nodes");
    }
};

/// Quadrature sum over the grid; exact to the rule's polynomial order.
inline double integrate(const Grid1D& grid, const std::vector<double>& values) {
    if (values.size() != grid.size())
        throw invalid_argument("integrate: values/grid length mismatch (" +
                               std::to_string(values.size()) + " vs " +
                               std::to_string(grid.size()) + ")");
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) acc += grid.weights[i] * values[i];
    return acc;
}

/// Trapezoid cumulative integral of `values` along the grid nodes,
/// starting from zero at the first node.
inline std::vector<double> cumulative_trapezoid(const Grid1D& grid,
                                                const std::vector<double>& values) {
    if (values.size() != grid.size())
        throw invalid_argument("cumulative_trapezoid: values/grid length mismatch");
    std::vector<double> out(values.size(), 0.0);
    for (std::size_t i = 1; i < values.size(); ++i) {
        out[i] = out[i - 1] +
                 0.5 * (values[i] + values[i - 1]) * (grid.nodes[i] - grid.nodes[i - 1]);
    }
    return out;
}

inline bool same_nodes(const Grid1D& a, const Grid1D& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.nodes[i] != b.nodes[i]) return false;
    return true;
}

}  // namespace qsense
