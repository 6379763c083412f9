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

#include <filesystem>
#include <string>

#include "frio/commands.hpp"
#include "frio/config.hpp"
#include "frio/error.hpp"
#include "frio/frio.h"
#include "frio/io.hpp"

struct frio_config {
    nlohmann::json doc;
    std::string base_dir;
    frio::AppConfig cfg;
};

struct frio_artifacts {
    frio::CommandResult result;
};

namespace {

thread_local std::string last_error;

frio_status fail(frio_status s, const std::string &msg) {
    last_error = msg;
    return s;
}

template <typename Fn>
frio_status guarded(Fn fn) {
    try {
        fn();
        return FRIO_OK;
    } catch (const frio::DomainError &e) {
        return fail(FRIO_ERR_DOMAIN, e.what());
    } catch (const frio::ConfigError &e) {
        return fail(FRIO_ERR_CONFIG, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(FRIO_ERR_DOMAIN, e.what());
    } catch (const std::bad_alloc &) {
        return fail(FRIO_ERR_RUNTIME, "out of memory");
    } catch (const std::exception &e) {
        return fail(FRIO_ERR_RUNTIME, e.what());
    } catch (...) {
        return fail(FRIO_ERR_RUNTIME, "unknown error");
    }
}

#define FRIO_REQUIRE_PTR(p)                                              \
    do {                                                                 \
        if ((p) == nullptr) {                                            \
            return fail(FRIO_ERR_ARGUMENT, #p " must not be null");      \
        }                                                                \
    } while (0)

}  // namespace

extern "C" {

const char *frio_version(void) { return "1.0.0"; }

const char *frio_last_error(void) { return last_error.c_str(); }

const char *frio_status_name(frio_status s) {
    switch (s) {
        case FRIO_OK:
            return "ok";
        case FRIO_ERR_DOMAIN:
            return "domain error";
        case FRIO_ERR_CONFIG:
            return "configuration error";
        case FRIO_ERR_ARGUMENT:
            return "invalid argument";
        case FRIO_ERR_IO:
            return "i/o error";
        case FRIO_ERR_RUNTIME:
            return "runtime error";
    }
    return "unknown status";
}

frio_status frio_q_mc(double theta, double *out) {
    FRIO_REQUIRE_PTR(out);
    return guarded([&] {
        frio::require(theta >= 0 && theta <= frio::kPi / 4, "q_mc: theta must lie in [0, pi/4]");
        *out = frio::q_mc(theta);
    });
}

frio_status frio_pe_min(int n, double q, double q_mc, double *out) {
    FRIO_REQUIRE_PTR(out);
    return guarded([&] { *out = frio::pe_min(n, q, q_mc); });
}

frio_status frio_success_probability(double theta, double theta_out, double *out) {
    FRIO_REQUIRE_PTR(out);
    return guarded([&] { *out = frio::success_probability(theta, theta_out); });
}

frio_status frio_me_error_rate(int n, double theta_out, double *out) {
    FRIO_REQUIRE_PTR(out);
    return guarded([&] { *out = frio::me_error_rate(n, theta_out); });
}

frio_status frio_probabilities(int n, double theta, double theta_out, double *p_error, double *p_correct,
                               double *q_inconclusive) {
    FRIO_REQUIRE_PTR(p_error);
    FRIO_REQUIRE_PTR(p_correct);
    FRIO_REQUIRE_PTR(q_inconclusive);
    return guarded([&] {
        frio::FrioProbabilities p = frio::frio_probabilities(n, theta, theta_out);
        *p_error = p.p_error;
        *p_correct = p.p_correct;
        *q_inconclusive = p.q_inconclusive;
    });
}

frio_status frio_calibration_theta(const char *csv_path, int gl, double theta, double *out) {
    FRIO_REQUIRE_PTR(csv_path);
    FRIO_REQUIRE_PTR(out);
    if (!std::filesystem::exists(csv_path)) {
        return fail(FRIO_ERR_IO, std::string("cannot read '") + csv_path + "'");
    }
    return guarded([&] {
        frio::CalibrationTable table = frio::load_calibration(csv_path);
        *out = frio::theta_from_gray(gl, theta, table);
    });
}

frio_status frio_config_new(frio_config **out) {
    FRIO_REQUIRE_PTR(out);
    *out = nullptr;
    return guarded([&] {
        auto *c = new frio_config{nlohmann::json::object(), ".", frio::parse_config(nlohmann::json::object())};
        *out = c;
    });
}

frio_status frio_config_from_json(const char *json_text, const char *base_dir, frio_config **out) {
    FRIO_REQUIRE_PTR(json_text);
    FRIO_REQUIRE_PTR(out);
    *out = nullptr;
    return guarded([&] {
        nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, false);
        if (doc.is_discarded()) {
            throw frio::ConfigError("configuration is not valid JSON");
        }
        std::string base = base_dir ? base_dir : ".";
        frio::AppConfig cfg = frio::parse_config(doc, base);
        *out = new frio_config{std::move(doc), base, std::move(cfg)};
    });
}

frio_status frio_config_load(const char *path, frio_config **out) {
    FRIO_REQUIRE_PTR(path);
    FRIO_REQUIRE_PTR(out);
    *out = nullptr;
    if (!std::filesystem::is_regular_file(path)) {
        return fail(FRIO_ERR_IO, std::string("cannot read config '") + path + "'");
    }
    return guarded([&] {
        nlohmann::json doc = frio::load_config_document(path);
        std::string base = std::filesystem::path(path).parent_path().string();
        if (base.empty()) {
            base = ".";
        }
        frio::AppConfig cfg = frio::parse_config(doc, base);
        *out = new frio_config{std::move(doc), base, std::move(cfg)};
    });
}

frio_status frio_config_set(frio_config *cfg, const char *assignment) {
    FRIO_REQUIRE_PTR(cfg);
    FRIO_REQUIRE_PTR(assignment);
    return guarded([&] {
        nlohmann::json doc = cfg->doc;
        frio::apply_override(doc, assignment);
        frio::AppConfig parsed = frio::parse_config(doc, cfg->base_dir);
        cfg->doc = std::move(doc);
        cfg->cfg = std::move(parsed);
    });
}

void frio_config_free(frio_config *cfg) { delete cfg; }

frio_status frio_run(const char *verb, const frio_config *cfg, frio_artifacts **out, int *passed) {
    FRIO_REQUIRE_PTR(verb);
    FRIO_REQUIRE_PTR(cfg);
    FRIO_REQUIRE_PTR(out);
    *out = nullptr;
    return guarded([&] {
        auto *a = new frio_artifacts{};
        try {
            a->result = frio::run_command(verb, cfg->cfg);
        } catch (...) {
            delete a;
            throw;
        }
        if (passed) {
            *passed = a->result.passed ? 1 : 0;
        }
        *out = a;
    });
}

size_t frio_artifacts_count(const frio_artifacts *a) { return a ? a->result.artifacts.size() : 0; }

const char *frio_artifacts_name(const frio_artifacts *a, size_t i) {
    if (!a || i >= a->result.artifacts.size()) {
        fail(FRIO_ERR_ARGUMENT, "artifact index out of range");
        return nullptr;
    }
    return a->result.artifacts[i].name.c_str();
}

const char *frio_artifacts_content(const frio_artifacts *a, size_t i, size_t *length) {
    if (!a || i >= a->result.artifacts.size()) {
        fail(FRIO_ERR_ARGUMENT, "artifact index out of range");
        return nullptr;
    }
    const std::string &s = a->result.artifacts[i].content;
    if (length) {
        *length = s.size();
    }
    return s.c_str();
}

const char *frio_artifacts_summary(const frio_artifacts *a) { return a ? a->result.summary.c_str() : ""; }

void frio_artifacts_free(frio_artifacts *a) { delete a; }

}  // extern "C"
