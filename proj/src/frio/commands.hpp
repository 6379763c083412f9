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

#ifndef FRIO_COMMANDS_HPP
#define FRIO_COMMANDS_HPP

#include <string>
#include <vector>

#include "frio/config.hpp"

namespace frio {

struct Artifact {
    /// File name relative to the output directory.
    std::string name;
    std::string content;
};

struct CommandResult {
    std::vector<Artifact> artifacts;
    /// False only when the oracle finds a gap outside [-1e-6, gap_threshold].
    bool passed = true;
    /// One-line human summary.
    std::string summary;
};

const std::vector<std::string> &command_verbs();

/// Runs one verb; throws ConfigError for an unknown verb.
CommandResult run_command(const std::string &verb, const AppConfig &cfg);

CommandResult cmd_curves(const AppConfig &cfg);
CommandResult cmd_sweep(const AppConfig &cfg);
CommandResult cmd_bloch(const AppConfig &cfg);
CommandResult cmd_oracle(const AppConfig &cfg);
CommandResult cmd_fitdemo(const AppConfig &cfg);
CommandResult cmd_calibration(const AppConfig &cfg);

}  // namespace frio

#endif
