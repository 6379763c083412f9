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

#ifndef FRIO_CONFIG_HPP
#define FRIO_CONFIG_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "frio/experiment.hpp"
#include "frio/oracle.hpp"

namespace frio {

struct OracleSettings {
    std::vector<int> n{2, 3};
    /// Empty means {0, 0.2, 0.4, 0.6, cos 2 theta}.
    std::vector<double> q_targets;
    std::vector<OracleFamily> families{OracleFamily::Covariant, OracleFamily::Unconstrained};
    OracleResolution resolution;
    double gap_threshold = 2e-3;
};

struct CurveSettings {
    /// Points of the Q grid on [0, cos 2 theta], endpoints included.
    int q_points = 101;
};

struct AppConfig {
    RunConfig run;
    OracleSettings oracle;
    CurveSettings curves;
};

/// Applies one `dotted.key=value` override; the value is read as JSON when it
/// parses, as a plain string otherwise.
void apply_override(nlohmann::json &doc, const std::string &assignment);

/// Builds a finalized configuration. Relative paths inside the document are
/// resolved against base_dir. Unknown keys are rejected.
AppConfig parse_config(const nlohmann::json &doc, const std::string &base_dir = ".");

nlohmann::json load_config_document(const std::string &path);

}  // namespace frio

#endif
