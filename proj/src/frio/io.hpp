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

#ifndef FRIO_IO_HPP
#define FRIO_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "frio/experiment.hpp"
#include "frio/oracle.hpp"

namespace frio {

// Text formats. Numbers are written with 12 significant digits so that every
// table reads back to the same values it was written from, at that precision.

std::string format_number(double v);

std::string read_text_file(const std::string &path);

/// Splits CSV text into rows of fields after checking the header line.
std::vector<std::vector<std::string>> parse_csv(const std::string &text, const std::vector<std::string> &header);
double parse_number(const std::string &field);

std::string pattern_csv(const IntensityPattern &p);
IntensityPattern parse_pattern_csv(const std::string &text);

std::string calibration_csv(const CalibrationTable &table);
CalibrationTable parse_calibration_csv(const std::string &text);
CalibrationTable load_calibration(const std::string &path);
/// Calibration table plus the separation angle each gray level implements for input angle theta.
std::string calibration_echo_csv(const CalibrationTable &table, double theta);

std::string sweep_csv(const std::vector<SweepRow> &rows);
std::vector<SweepRow> parse_sweep_csv(const std::string &text);

struct CurvePoint {
    int n = 2;
    double q = 0;
    double pe_min = 0;
};

std::string curves_csv(const std::vector<CurvePoint> &rows);
std::vector<CurvePoint> parse_curves_csv(const std::string &text);

nlohmann::ordered_json density_json(const QubitDensity &rho);
nlohmann::ordered_json fit_json(const FitResult &fit, const QubitDensity &rho);
nlohmann::ordered_json oracle_json(const OracleReport &r);

/// JSON text with a trailing newline; doubles keep full precision.
std::string dump_json(const nlohmann::ordered_json &j);

}  // namespace frio

#endif
