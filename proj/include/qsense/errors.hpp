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

#include <stdexcept>
#include <string>

namespace qsense {

/// Precondition or domain violation in a library call.
struct invalid_argument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Numerical failure detected at runtime (inconsistent linear system,
/// contradictory data, rank change, ...).
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain experiment configuration.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qsense
