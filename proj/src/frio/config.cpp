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

#include "frio/config.hpp"

#include <filesystem>
#include <set>

#include "frio/error.hpp"
#include "frio/io.hpp"

namespace frio {

namespace {

using nlohmann::json;

void check_keys(const json &obj, const std::string &where, const std::set<std::string> &allowed) {
    if (!obj.is_object()) {
        throw ConfigError(where + ": expected an object");
    }
    for (const auto &[k, v] : obj.items()) {
        if (!allowed.count(k)) {
            throw ConfigError(where + ": unknown key '" + k + "'");
        }
    }
}

template <typename T>
T get(const json &obj, const std::string &key, const std::string &where) {
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception &) {
        throw ConfigError(where + "." + key + ": wrong type");
    }
}

template <typename T>
std::vector<T> scalar_or_list(const json &v, const std::string &where) {
    try {
        if (v.is_array()) {
            return v.get<std::vector<T>>();
        }
        return {v.get<T>()};
    } catch (const json::exception &) {
        throw ConfigError(where + ": wrong type");
    }
}

std::string resolve_path(const std::string &p, const std::string &base_dir) {
    std::filesystem::path path(p);
    if (path.is_relative()) {
        path = std::filesystem::path(base_dir) / path;
    }
    return path.string();
}

void parse_noise(const json &o, RunConfig &run, const std::string &base_dir) {
    check_keys(o, "noise",
               {"depolarization", "epsilon_max", "epsilon_start_gl", "epsilon_end_gl", "phase_resolution_rad",
                "crosstalk", "calibration_path"});
    if (o.contains("depolarization")) run.noise.depolarization = get<bool>(o, "depolarization", "noise");
    if (o.contains("epsilon_max")) run.ramp.epsilon_max = get<double>(o, "epsilon_max", "noise");
    if (o.contains("epsilon_start_gl")) run.ramp.start_gray = get<int>(o, "epsilon_start_gl", "noise");
    if (o.contains("epsilon_end_gl")) run.ramp.end_gray = get<int>(o, "epsilon_end_gl", "noise");
    if (o.contains("phase_resolution_rad")) run.noise.phase_resolution = get<double>(o, "phase_resolution_rad", "noise");
    if (o.contains("crosstalk")) run.noise.crosstalk = get<double>(o, "crosstalk", "noise");
    if (o.contains("calibration_path")) {
        auto path = resolve_path(get<std::string>(o, "calibration_path", "noise"), base_dir);
        run.noise.table = std::make_shared<const CalibrationTable>(load_calibration(path));
    }
}

void parse_optics(const json &o, OpticsConfig &c) {
    check_keys(o, "optics",
               {"wavelength_m", "focal_length_m", "mode_separation_m", "mode_width_m", "pixel_pitch_m",
                "grid_halfwidth_m", "samples"});
    if (o.contains("wavelength_m")) c.wavelength = get<double>(o, "wavelength_m", "optics");
    if (o.contains("focal_length_m")) c.focal_length = get<double>(o, "focal_length_m", "optics");
    if (o.contains("mode_separation_m")) c.mode_separation = get<double>(o, "mode_separation_m", "optics");
    if (o.contains("mode_width_m")) c.mode_width = get<double>(o, "mode_width_m", "optics");
    if (o.contains("pixel_pitch_m")) c.pixel_pitch = get<double>(o, "pixel_pitch_m", "optics");
    if (o.contains("grid_halfwidth_m")) c.grid_halfwidth = get<double>(o, "grid_halfwidth_m", "optics");
    if (o.contains("samples")) c.samples = get<int>(o, "samples", "optics");
}

void parse_oracle(const json &o, OracleSettings &s) {
    check_keys(o, "oracle", {"n", "q_targets", "family", "resolution", "unconstrained_resolution", "refine_levels",
                             "gap_threshold"});
    if (o.contains("n")) s.n = scalar_or_list<int>(o["n"], "oracle.n");
    if (o.contains("q_targets")) s.q_targets = scalar_or_list<double>(o["q_targets"], "oracle.q_targets");
    if (o.contains("family")) {
        s.families.clear();
        for (const auto &f : scalar_or_list<std::string>(o["family"], "oracle.family")) {
            s.families.push_back(parse_family(f));
        }
    }
    if (o.contains("resolution")) s.resolution.covariant_points = get<int>(o, "resolution", "oracle");
    if (o.contains("unconstrained_resolution"))
        s.resolution.unconstrained_points = get<int>(o, "unconstrained_resolution", "oracle");
    if (o.contains("refine_levels")) s.resolution.refine_levels = get<int>(o, "refine_levels", "oracle");
    if (o.contains("gap_threshold")) s.gap_threshold = get<double>(o, "gap_threshold", "oracle");

    if (s.n.empty() || s.families.empty()) {
        throw ConfigError("oracle: n and family must be nonempty");
    }
    for (int n : s.n) {
        if (n != 2 && n != 3) {
            throw ConfigError("oracle.n: only 2 and 3 are supported");
        }
    }
    if (s.resolution.covariant_points < 3 || s.resolution.unconstrained_points < 8 || s.resolution.refine_levels < 0) {
        throw ConfigError("oracle: resolution too coarse");
    }
    if (!(s.gap_threshold > 0)) {
        throw ConfigError("oracle.gap_threshold must be positive");
    }
}

}  // namespace

void apply_override(json &doc, const std::string &assignment) {
    auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ConfigError("override '" + assignment + "' is not key=value");
    }
    std::string key = assignment.substr(0, eq);
    std::string raw = assignment.substr(eq + 1);
    json value = json::parse(raw, nullptr, false);
    if (value.is_discarded()) {
        value = raw;
    }
    json *node = &doc;
    size_t start = 0;
    while (true) {
        size_t dot = key.find('.', start);
        std::string part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        if (part.empty()) {
            throw ConfigError("override key '" + key + "' has an empty component");
        }
        if (node->is_null()) {
            *node = json::object();
        }
        if (!node->is_object()) {
            throw ConfigError("override key '" + key + "' descends into a non-object");
        }
        if (dot == std::string::npos) {
            (*node)[part] = value;
            return;
        }
        node = &(*node)[part];
        start = dot + 1;
    }
}

AppConfig parse_config(const json &doc, const std::string &base_dir) {
    AppConfig cfg;
    RunConfig &run = cfg.run;
    if (doc.is_null()) {
        run.finalize();
        return cfg;
    }
    check_keys(doc, "config",
               {"n_states", "theta_deg", "separation_schedule", "schedule_deg", "gray_levels", "shots_per_state",
                "seed", "mode", "threads", "noise", "optics", "camera", "oracle", "curves"});
    if (doc.contains("n_states")) run.n_states = scalar_or_list<int>(doc["n_states"], "n_states");
    if (doc.contains("theta_deg")) run.theta_deg = get<double>(doc, "theta_deg", "config");
    for (const char *k : {"separation_schedule", "schedule_deg"}) {
        if (doc.contains(k)) run.schedule_deg = scalar_or_list<double>(doc[k], k);
    }
    if (doc.contains("gray_levels")) run.gray_levels = scalar_or_list<int>(doc["gray_levels"], "gray_levels");
    if (doc.contains("shots_per_state")) run.shots_per_state = get<int64_t>(doc, "shots_per_state", "config");
    if (doc.contains("seed")) {
        const json &s = doc["seed"];
        if (!s.is_number_integer()) {
            throw ConfigError("seed must be an integer");
        }
        run.seed = s.is_number_unsigned() ? s.get<uint64_t>() : static_cast<uint64_t>(s.get<int64_t>());
    }
    if (doc.contains("mode")) {
        run.modes.clear();
        for (const auto &m : scalar_or_list<std::string>(doc["mode"], "mode")) {
            run.modes.push_back(parse_mode(m));
        }
    }
    if (doc.contains("threads")) run.threads = get<int>(doc, "threads", "config");
    if (doc.contains("noise")) parse_noise(doc["noise"], run, base_dir);
    if (doc.contains("optics")) parse_optics(doc["optics"], run.optics);
    if (doc.contains("camera")) {
        const json &c = doc["camera"];
        check_keys(c, "camera", {"peak_counts", "background"});
        if (c.contains("peak_counts")) run.camera.peak_counts = get<double>(c, "peak_counts", "camera");
        if (c.contains("background")) run.camera.background = get<double>(c, "background", "camera");
    }
    if (doc.contains("oracle")) parse_oracle(doc["oracle"], cfg.oracle);
    if (doc.contains("curves")) {
        const json &c = doc["curves"];
        check_keys(c, "curves", {"q_points"});
        if (c.contains("q_points")) cfg.curves.q_points = get<int>(c, "q_points", "curves");
        if (cfg.curves.q_points < 2) {
            throw ConfigError("curves.q_points must be at least 2");
        }
    }
    try {
        run.finalize();
    } catch (const DomainError &e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

json load_config_document(const std::string &path) {
    std::string text = read_text_file(path);
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw ConfigError("config '" + path + "' is not valid JSON");
    }
    return doc;
}

}  // namespace frio
