// Copyright 2026 The FRIO Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FRIO_ERROR_HPP
#define FRIO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace frio {

/// Raised when an argument lies outside the domain an operation is defined on
/// (angles out of range, n < 2, q beyond the critical rate, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised for malformed configs, tables and other user-supplied documents.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical procedure cannot produce a result for valid input
/// (degenerate fit, zero intensity, reconstruction far outside the Bloch ball).
struct ComputeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string &msg) {
    if (!cond) {
        throw DomainError(msg);
    }
}

}  // namespace frio

#endif
