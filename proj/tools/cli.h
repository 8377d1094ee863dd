// Copyright 2026 The chiralpulse Authors
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

#ifndef CHIRALPULSE_TOOLS_CLI_H
#define CHIRALPULSE_TOOLS_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chiralpulse/analysis.h"

namespace chiralpulse::cli {

enum ExitCode : int {
    kOk = 0,
    kUsageError = 2,
    kIoError = 3,
    kVerificationFailure = 4,
};

enum class OutputFormat { Csv, Json };

struct RunConfig {
    std::string protocol = "SRS_PP";
    SubstitutionPlan plan;
    double epsilon = 0.0;
    double eps_min = -0.5;
    double eps_max = 0.5;
    int n = 1001;
    OutputFormat format = OutputFormat::Csv;
    /// Empty or "-" means standard output.
    std::string output;
};

/// Reads RunConfig fields from a JSON document:
/// {"protocol", "q_template", "raman_template", "q_order", "raman_order",
///  "epsilon", "sweep": {"min", "max", "n"}, "format", "output"}.
/// Missing keys keep the defaults. Throws std::invalid_argument.
RunConfig load_config(const std::string &json_text);

/// Rejects unknown protocol/template names and template/protocol mismatches.
void validate_config(const RunConfig &config);

void print_propagators(std::ostream &out, const RunConfig &config, const RunResult &result);

struct Table1Row {
    std::string protocol;
    int state_l;
    int state_r;
    bool pass;
};
/// Every builtin protocol at eps = 0 with bare pulses. `s_phase_offset` is
/// added to each S-field phase (negative-control hook).
std::vector<Table1Row> table1_rows(double s_phase_offset = 0.0);

struct SuiteReport {
    std::string name;
    double value;
    double tolerance;
    bool pass;
    std::string detail;
};
std::vector<SuiteReport> verify_suites(std::uint64_t seed, int trials);

/// Figure panel sweeps emitted by the `figures` command.
struct FigurePanel {
    std::string file_name;
    std::string protocol;
    SubstitutionPlan plan;
};
std::vector<FigurePanel> figure_panels();

/// Entry point; args[0] is the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace chiralpulse::cli

#endif
