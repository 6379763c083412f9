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

#include "frio/commands.hpp"

#include <algorithm>
#include <cstdio>

#include "frio/error.hpp"
#include "frio/io.hpp"

namespace frio {

namespace {

using nlohmann::ordered_json;

constexpr double kGapFloor = -1e-6;

bool has_mode(const RunConfig &run, Mode m) {
    return std::find(run.modes.begin(), run.modes.end(), m) != run.modes.end();
}

std::string tag(int n, size_t t) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "N%d_t%zu", n, t + 1);
    return buf;
}

/// Patterns for the bloch and fitdemo verbs: exact expected counts unless the
/// optical mode is requested, in which case the camera is emulated.
std::vector<IntensityPattern> patterns_for(const RunConfig &run, int n, size_t t) {
    return run_optical(run, n, t, has_mode(run, Mode::Optical));
}

}  // namespace

const std::vector<std::string> &command_verbs() {
    static const std::vector<std::string> verbs{"curves", "sweep", "bloch", "oracle", "fitdemo", "calibration"};
    return verbs;
}

CommandResult run_command(const std::string &verb, const AppConfig &cfg) {
    if (verb == "curves") return cmd_curves(cfg);
    if (verb == "sweep") return cmd_sweep(cfg);
    if (verb == "bloch") return cmd_bloch(cfg);
    if (verb == "oracle") return cmd_oracle(cfg);
    if (verb == "fitdemo") return cmd_fitdemo(cfg);
    if (verb == "calibration") return cmd_calibration(cfg);
    throw ConfigError("unknown command '" + verb + "'");
}

CommandResult cmd_curves(const AppConfig &cfg) {
    const double qmc = q_mc(cfg.run.theta());
    const int m = cfg.curves.q_points;
    std::vector<CurvePoint> rows;
    for (int n : cfg.run.n_states) {
        for (int i = 0; i < m; ++i) {
            // Last point is q_mc exactly, not a rounded multiple of the step.
            double q = i == m - 1 ? qmc : qmc * i / (m - 1);
            rows.push_back({n, q, pe_min(n, q, qmc)});
        }
    }
    CommandResult r;
    r.artifacts.push_back({"curves.csv", curves_csv(rows)});
    r.summary = std::to_string(rows.size()) + " curve points";
    return r;
}

CommandResult cmd_sweep(const AppConfig &cfg) {
    auto rows = sweep(cfg.run);
    CommandResult r;
    r.artifacts.push_back({"sweep.csv", sweep_csv(rows)});
    r.summary = std::to_string(rows.size()) + " sweep rows";
    return r;
}

CommandResult cmd_bloch(const AppConfig &cfg) {
    const RunConfig &run = cfg.run;
    auto sched = resolve_schedule(run);
    ordered_json doc;
    doc["theta_deg"] = run.theta_deg;
    doc["shot_noise"] = has_mode(run, Mode::Optical);
    doc["points"] = ordered_json::array();
    for (int n : run.n_states) {
        for (size_t t = 0; t < sched.size(); ++t) {
            const double th = sched[t].theta_out;
            Characterization ch = characterize(patterns_for(run, n, t), n, th, run.optics);
            ordered_json p;
            p["N"] = n;
            p["t"] = t + 1;
            p["theta_out_deg"] = rad_to_deg(th);
            p["gray_level"] = sched[t].gray_level;
            p["parallel_radius"] = std::sin(2.0 * th);
            p["phi_corr"] = ch.correction.phi_corr;
            p["states"] = ordered_json::array();
            for (int j = 0; j < n; ++j) {
                const QubitDensity &rho = ch.states[static_cast<size_t>(j)];
                BlochPoint b = bloch(rho);
                ordered_json s;
                s["j"] = j;
                s["azimuth"] = wrap_two_pi(b.azimuth());
                s["visibility"] = ch.fits[static_cast<size_t>(j)].visibility;
                s["radius"] = b.radius();
                s["bloch"] = {b.x, b.y, b.z};
                const ordered_json dj = density_json(rho);
                for (auto &[k, v] : dj.items()) {
                    s[k] = v;
                }
                p["states"].push_back(s);
            }
            doc["points"].push_back(p);
        }
    }
    CommandResult r;
    r.artifacts.push_back({"bloch.json", dump_json(doc)});
    r.summary = std::to_string(doc["points"].size()) + " reconstructed operating points";
    return r;
}

CommandResult cmd_oracle(const AppConfig &cfg) {
    const OracleSettings &s = cfg.oracle;
    const double theta = cfg.run.theta();
    std::vector<double> qs = s.q_targets;
    if (qs.empty()) {
        qs = {0.0, 0.2, 0.4, 0.6, q_mc(theta)};
    }
    ordered_json doc;
    doc["gap_threshold"] = s.gap_threshold;
    doc["gap_floor"] = kGapFloor;
    doc["reports"] = ordered_json::array();
    bool ok = true;
    double worst = 0;
    for (OracleFamily f : s.families) {
        for (int n : s.n) {
            if (f == OracleFamily::Unconstrained && n != 2) {
                continue;
            }
            for (double q : qs) {
                OracleReport rep = brute_force_pe(n, theta, q, f, s.resolution);
                bool pass = rep.gap >= kGapFloor && rep.gap <= s.gap_threshold;
                ok = ok && pass;
                worst = std::max(worst, std::abs(rep.gap));
                ordered_json j = oracle_json(rep);
                j["pass"] = pass;
                doc["reports"].push_back(j);
            }
        }
    }
    doc["pass"] = ok;
    CommandResult r;
    r.artifacts.push_back({"oracle.json", dump_json(doc)});
    r.passed = ok;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "oracle %s, largest |gap| %.3g", ok ? "PASS" : "FAIL", worst);
    r.summary = buf;
    return r;
}

CommandResult cmd_fitdemo(const AppConfig &cfg) {
    const RunConfig &run = cfg.run;
    auto sched = resolve_schedule(run);
    CommandResult r;
    for (int n : run.n_states) {
        for (size_t t = 0; t < sched.size(); ++t) {
            auto patterns = patterns_for(run, n, t);
            Characterization ch = characterize(patterns, n, sched[t].theta_out, run.optics);
            const std::string base = tag(n, t);
            for (const auto &p : patterns) {
                r.artifacts.push_back({"pattern_" + base + "_j" + std::to_string(p.state_index) + "_" +
                                           branch_name(p.branch) + ".csv",
                                       pattern_csv(p)});
            }
            ordered_json doc;
            doc["N"] = n;
            doc["theta_out_deg"] = rad_to_deg(sched[t].theta_out);
            doc["phi_corr"] = ch.correction.phi_corr;
            doc["fits"] = ordered_json::array();
            for (int j = 0; j < n; ++j) {
                ordered_json f = fit_json(ch.fits[static_cast<size_t>(j)], ch.states[static_cast<size_t>(j)]);
                f["j"] = j;
                f["phase_corrected"] = ch.correction.corrected[static_cast<size_t>(j)];
                doc["fits"].push_back(f);
            }
            r.artifacts.push_back({"fit_" + base + ".json", dump_json(doc)});
        }
    }
    r.summary = std::to_string(r.artifacts.size()) + " fitdemo files";
    return r;
}

CommandResult cmd_calibration(const AppConfig &cfg) {
    CommandResult r;
    r.artifacts.push_back({"calibration.csv", calibration_echo_csv(*cfg.run.noise.table, cfg.run.theta())});
    r.summary = std::to_string(cfg.run.noise.table->rows().size()) + " calibration rows";
    return r;
}

}  // namespace frio
