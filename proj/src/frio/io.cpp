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

#include "frio/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "frio/error.hpp"

namespace frio {

namespace {

const std::vector<std::string> kPatternHeader{"x_m", "intensity"};
const std::vector<std::string> kCalibrationHeader{"gl", "p_v", "phase_rad", "epsilon"};
const std::vector<std::string> kSweepHeader{"N", "theta_out_deg", "mode", "p_s", "p_c_beta",
                                            "P_e", "Q", "stderr_ps", "stderr_pc"};
const std::vector<std::string> kCurvesHeader{"N", "Q", "P_e_min"};

std::vector<std::string> split_fields(const std::string &line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::string join(const std::vector<std::string> &fields) {
    std::string s;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) {
            s.push_back(',');
        }
        s += fields[i];
    }
    s.push_back('\n');
    return s;
}

int parse_int(const std::string &field) {
    double v = parse_number(field);
    if (v != std::floor(v) || std::abs(v) > 1e9) {
        throw ConfigError("expected an integer, got '" + field + "'");
    }
    return static_cast<int>(v);
}

}  // namespace

std::string format_number(double v) {
    if (v == 0.0) {
        return "0";  // also folds -0
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double parse_number(const std::string &field) {
    const char *begin = field.c_str();
    char *end = nullptr;
    errno = 0;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
        throw ConfigError("malformed number '" + field + "'");
    }
    return v;
}

std::vector<std::vector<std::string>> parse_csv(const std::string &text, const std::vector<std::string> &header) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || split_fields(line) != header) {
        throw ConfigError("unexpected CSV header, wanted '" + join(header).substr(0, join(header).size() - 1) + "'");
    }
    std::vector<std::vector<std::string>> rows;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") {
            continue;
        }
        auto f = split_fields(line);
        if (f.size() != header.size()) {
            throw ConfigError("CSV line " + std::to_string(lineno) + ": expected " + std::to_string(header.size()) +
                              " fields");
        }
        rows.push_back(std::move(f));
    }
    return rows;
}

std::string pattern_csv(const IntensityPattern &p) {
    std::string s = join(kPatternHeader);
    for (size_t i = 0; i < p.xs.size(); ++i) {
        s += join({format_number(p.xs[i]), format_number(p.values[i])});
    }
    return s;
}

IntensityPattern parse_pattern_csv(const std::string &text) {
    IntensityPattern p;
    for (const auto &row : parse_csv(text, kPatternHeader)) {
        p.xs.push_back(parse_number(row[0]));
        p.values.push_back(parse_number(row[1]));
    }
    return p;
}

std::string calibration_csv(const CalibrationTable &table) {
    std::string s = join(kCalibrationHeader);
    for (const auto &r : table.rows()) {
        s += join({std::to_string(r.gray_level), format_number(r.p_v), format_number(r.phase),
                   format_number(r.epsilon)});
    }
    return s;
}

CalibrationTable parse_calibration_csv(const std::string &text) {
    std::vector<CalibrationRow> rows;
    for (const auto &f : parse_csv(text, kCalibrationHeader)) {
        rows.push_back({parse_int(f[0]), parse_number(f[1]), parse_number(f[2]), parse_number(f[3])});
    }
    if (rows.empty()) {
        throw ConfigError("calibration table has no rows");
    }
    return CalibrationTable(std::move(rows));
}

CalibrationTable load_calibration(const std::string &path) { return parse_calibration_csv(read_text_file(path)); }

std::string calibration_echo_csv(const CalibrationTable &table, double theta) {
    std::vector<std::string> header = kCalibrationHeader;
    header.push_back("theta_out_deg");
    std::string s = join(header);
    for (const auto &r : table.rows()) {
        std::string th = r.p_v > 0 ? format_number(rad_to_deg(theta_from_gray(r.gray_level, theta, table))) : "nan";
        s += join({std::to_string(r.gray_level), format_number(r.p_v), format_number(r.phase),
                   format_number(r.epsilon), th});
    }
    return s;
}

std::string sweep_csv(const std::vector<SweepRow> &rows) {
    std::string s = join(kSweepHeader);
    for (const auto &r : rows) {
        s += join({std::to_string(r.n), format_number(r.theta_out_deg), mode_name(r.mode), format_number(r.p_s),
                   format_number(r.p_c_beta), format_number(r.p_e), format_number(r.q), format_number(r.stderr_ps),
                   format_number(r.stderr_pc)});
    }
    return s;
}

std::vector<SweepRow> parse_sweep_csv(const std::string &text) {
    std::vector<SweepRow> rows;
    for (const auto &f : parse_csv(text, kSweepHeader)) {
        SweepRow r;
        r.n = parse_int(f[0]);
        r.theta_out_deg = parse_number(f[1]);
        r.mode = parse_mode(f[2]);
        r.p_s = parse_number(f[3]);
        r.p_c_beta = parse_number(f[4]);
        r.p_e = parse_number(f[5]);
        r.q = parse_number(f[6]);
        r.stderr_ps = parse_number(f[7]);
        r.stderr_pc = parse_number(f[8]);
        rows.push_back(r);
    }
    return rows;
}

std::string curves_csv(const std::vector<CurvePoint> &rows) {
    std::string s = join(kCurvesHeader);
    for (const auto &r : rows) {
        s += join({std::to_string(r.n), format_number(r.q), format_number(r.pe_min)});
    }
    return s;
}

std::vector<CurvePoint> parse_curves_csv(const std::string &text) {
    std::vector<CurvePoint> rows;
    for (const auto &f : parse_csv(text, kCurvesHeader)) {
        rows.push_back({parse_int(f[0]), parse_number(f[1]), parse_number(f[2])});
    }
    return rows;
}

nlohmann::ordered_json density_json(const QubitDensity &rho) {
    const Mat2 &m = rho.matrix();
    nlohmann::ordered_json j;
    j["rho_re"] = {m(0, 0).real(), m(0, 1).real(), m(1, 0).real(), m(1, 1).real()};
    j["rho_im"] = {m(0, 0).imag(), m(0, 1).imag(), m(1, 0).imag(), m(1, 1).imag()};
    return j;
}

nlohmann::ordered_json fit_json(const FitResult &fit, const QubitDensity &rho) {
    nlohmann::ordered_json j;
    j["i_max"] = fit.i_max;
    j["visibility"] = fit.visibility;
    j["phase_rad"] = fit.phase_raw;
    j["phase_reliable"] = fit.phase_reliable;
    j["residual"] = fit.residual;
    const nlohmann::ordered_json dj = density_json(rho);
    for (auto &[k, v] : dj.items()) {
        j[k] = v;
    }
    return j;
}

nlohmann::ordered_json oracle_json(const OracleReport &r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["theta_rad"] = r.theta;
    j["q_target"] = r.q_target;
    j["family"] = family_name(r.family);
    j["pe_bruteforce"] = r.pe_bruteforce;
    j["pe_formula"] = r.pe_formula;
    j["gap"] = r.gap;
    j["achieved_q"] = r.achieved_q;
    j["search_resolution"] = r.search_resolution;
    j["evaluated"] = r.evaluated;
    j["rejected"] = r.rejected;
    return j;
}

std::string dump_json(const nlohmann::ordered_json &j) { return j.dump(2) + "\n"; }

}  // namespace frio
