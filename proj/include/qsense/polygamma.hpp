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

#include "qsense/errors.hpp"

namespace qsense {

// psi(x) and psi'(x) via upward recurrence to x >= 10 followed by the
// Bernoulli asymptotic series.  The truncated tails are below 1e-15 at
// the shift point, which keeps both functions at ~1e-13 accuracy or
// better across [1e-3, 1e6].

/// Digamma function psi(x) for x > 0.
inline double digamma(double x) {
    if (!(x > 0.0)) throw invalid_argument("digamma: requires x > 0");
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double z = 1.0 / (x * x);
    // psi(x) ~ ln x - 1/(2x) - sum_n B_{2n} / (2n x^{2n})
    const double series =
        z * (1.0 / 12.0 +
             z * (-1.0 / 120.0 +
                  z * (1.0 / 252.0 +
                       z * (-1.0 / 240.0 +
                            z * (1.0 / 132.0 +
                                 z * (-691.0 / 32760.0 + z * (1.0 / 12.0)))))));
    return acc + std::log(x) - 0.5 / x - series;
}

/// Trigamma function psi'(x) for x > 0; strictly positive.
inline double trigamma(double x) {
    if (!(x > 0.0)) throw invalid_argument("trigamma: requires x > 0");
    double acc = 0.0;
    while (x < 10.0) {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    const double z = 1.0 / (x * x);
    // psi'(x) ~ 1/x + 1/(2x^2) + sum_n B_{2n} / x^{2n+1}
    const double series =
        (1.0 +
         z * (1.0 / 6.0 +
              z * (-1.0 / 30.0 +
                   z * (1.0 / 42.0 +
                        z * (-1.0 / 30.0 +
                             z * (5.0 / 66.0 +
                                  z * (-691.0 / 2730.0 + z * (7.0 / 6.0)))))))) /
        x;
    return acc + 0.5 * z + series;
}

}  // namespace qsense
