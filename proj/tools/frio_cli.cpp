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

// Command-line front end. Talks to the library only through frio.h.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frio/frio.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitGapFail = 1;
constexpr int kExitValidation = 2;
constexpr int kExitRuntime = 3;

int exit_code_for(frio_status s) {
    switch (s) {
        case FRIO_OK:
            return kExitOk;
        case FRIO_ERR_DOMAIN:
        case FRIO_ERR_CONFIG:
        case FRIO_ERR_ARGUMENT:
            return kExitValidation;
        default:
            return kExitRuntime;
    }
}

int report(frio_status s, const std::string &context) {
    std::fprintf(stderr, "frio: %s: %s (%s)\n", context.c_str(), frio_last_error(), frio_status_name(s));
    return exit_code_for(s);
}

/// Writes next to the target and renames, so readers never see a partial file.
bool write_atomically(const std::filesystem::path &target, const char *data, size_t len, std::string &err) {
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            err = "cannot open " + tmp.string();
            return false;
        }
        out.write(data, static_cast<std::streamsize>(len));
        out.flush();
        if (!out) {
            err = "cannot write " + tmp.string();
            return false;
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        err = "cannot rename into " + target.string();
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Fixed-rate-of-inconclusive-outcomes discrimination of symmetric qubit states"};
    std::string verb;
    std::string config_path;
    std::string out_dir;
    std::string seed;
    std::string mode;
    std::vector<std::string> overrides;
    double gap = -1;

    app.add_option("command", verb, "curves | sweep | bloch | oracle | fitdemo | calibration")
        ->required()
        ->check(CLI::IsMember({"curves", "sweep", "bloch", "oracle", "fitdemo", "calibration"}));
    app.add_option("--config", config_path, "JSON configuration file");
    app.add_option("--out", out_dir, "Output directory (default: $FRIO_OUT_DIR, else ./out)");
    app.add_option("--seed", seed, "Master seed (unsigned 64-bit)");
    app.add_option("--mode", mode, "analytic | montecarlo | optical, comma separated");
    app.add_option("--set", overrides, "Dotted override key=value, repeatable");
    app.add_option("--gap", gap, "Oracle gap threshold (same as --set oracle.gap_threshold=...)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitValidation;
    }

    if (!seed.empty()) {
        if (seed.find_first_not_of("0123456789") != std::string::npos) {
            std::fprintf(stderr, "frio: --seed must be an unsigned integer\n");
            return kExitValidation;
        }
        overrides.push_back("seed=" + seed);
    }
    if (!mode.empty()) {
        std::string list = "[";
        size_t start = 0;
        while (true) {
            size_t comma = mode.find(',', start);
            std::string part = mode.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (part.find('"') != std::string::npos) {
                std::fprintf(stderr, "frio: malformed --mode\n");
                return kExitValidation;
            }
            list += (start ? ",\"" : "\"") + part + "\"";
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }
        overrides.push_back("mode=" + list + "]");
    }
    if (gap >= 0) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "oracle.gap_threshold=%.17g", gap);
        overrides.emplace_back(buf);
    }

    frio_config *cfg = nullptr;
    frio_status s = config_path.empty() ? frio_config_new(&cfg) : frio_config_load(config_path.c_str(), &cfg);
    if (s != FRIO_OK) {
        return report(s, "loading configuration");
    }
    for (const auto &o : overrides) {
        s = frio_config_set(cfg, o.c_str());
        if (s != FRIO_OK) {
            frio_config_free(cfg);
            return report(s, "applying '" + o + "'");
        }
    }

    frio_artifacts *arts = nullptr;
    int passed = 1;
    s = frio_run(verb.c_str(), cfg, &arts, &passed);
    frio_config_free(cfg);
    if (s != FRIO_OK) {
        return report(s, verb);
    }

    if (out_dir.empty()) {
        const char *env = std::getenv("FRIO_OUT_DIR");
        out_dir = env && *env ? env : "out";
    }
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec || !std::filesystem::is_directory(out_dir)) {
        std::fprintf(stderr, "frio: cannot create output directory '%s'\n", out_dir.c_str());
        frio_artifacts_free(arts);
        return kExitRuntime;
    }
    for (size_t i = 0; i < frio_artifacts_count(arts); ++i) {
        size_t len = 0;
        const char *data = frio_artifacts_content(arts, i, &len);
        std::string err;
        if (!write_atomically(std::filesystem::path(out_dir) / frio_artifacts_name(arts, i), data, len, err)) {
            std::fprintf(stderr, "frio: %s\n", err.c_str());
            frio_artifacts_free(arts);
            return kExitRuntime;
        }
    }
    std::printf("%s: %s -> %s\n", verb.c_str(), frio_artifacts_summary(arts), out_dir.c_str());
    frio_artifacts_free(arts);
    return passed ? kExitOk : kExitGapFail;
}
