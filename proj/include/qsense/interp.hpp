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
#include <cstddef>
#include <vector>

#include "qsense/errors.hpp"

namespace qsense {

/// Result of a table inversion or clamped lookup.  `clamped` is set when the
/// query left the tabulated range and the answer was pinned to the boundary.
struct InvertResult {
    double value = 0.0;
    bool clamped = false;
};

namespace detail {

// strictly ascending xs assumed; linear interpolation with boundary clamp
inline double lerp_ascending(const std::vector<double>& xs, const std::vector<double>& ys,
                             double x, bool* clamped = nullptr) {
    if (x <= xs.front()) {
        if (clamped && x < xs.front()) *clamped = true;
        return ys.front();
    }
    if (x >= xs.back()) {
        if (clamped && x > xs.back()) *clamped = true;
        return ys.back();
    }
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - xs.begin());
    const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return ys[i - 1] + t * (ys[i] - ys[i - 1]);
}

// +1 strictly increasing, -1 strictly decreasing, 0 otherwise
inline int monotone_direction(const std::vector<double>& ys) {
    if (ys.size() < 2) return 0;
    const bool up = ys[1] > ys[0];
    for (std::size_t i = 1; i < ys.size(); ++i) {
        if (up && !(ys[i] > ys[i - 1])) return 0;
        if (!up && !(ys[i] < ys[i - 1])) return 0;
    }
    return up ? +1 : -1;
}

}  // namespace detail

/// Interpolate a tabulated function y(x) at `x` (xs strictly increasing).
inline double interp_table(const std::vector<double>& xs, const std::vector<double>& ys,
                           double x) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw invalid_argument("interp_table: bad table");
    return detail::lerp_ascending(xs, ys, x);
}

/// Invert a strictly monotone tabulated map y(x): find x with y(x) = y.
/// Queries outside the tabulated y-range clamp to the matching endpoint
/// and set the flag.
inline InvertResult invert_monotone(const std::vector<double>& table_x,
                                    const std::vector<double>& table_y, double y) {
    if (table_x.size() != table_y.size() || table_x.size() < 2)
        throw invalid_argument("invert_monotone: bad table");
    const int dir = detail::monotone_direction(table_y);
    if (dir == 0) throw invalid_argument("invert_monotone: table_y is not strictly monotone");

    InvertResult r;
    if (dir > 0) {
        r.value = detail::lerp_ascending(table_y, table_x, y, &r.clamped);
        return r;
    }
    // descending: flip the ordinate
    std::vector<double> ny(table_y.size());
    std::vector<double> xs(table_x.rbegin(), table_x.rend());
    for (std::size_t i = 0; i < table_y.size(); ++i)
        ny[i] = -table_y[table_y.size() - 1 - i];
    r.value = detail::lerp_ascending(ny, xs, -y, &r.clamped);
    return r;
}

}  // namespace qsense
