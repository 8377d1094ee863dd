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

#include "cli.h"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "chiralpulse/profile_io.h"

namespace chiralpulse::cli {

namespace {

class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

SegmentOrder order_or_throw(const std::string &text) {
    auto order = parse_segment_order(text);
    if (!order) {
        throw UsageError("segment order must be auto, forward or reversed, got '" + text + "'");
    }
    return *order;
}

OutputFormat format_or_throw(const std::string &text) {
    if (text == "csv") {
        return OutputFormat::Csv;
    }
    if (text == "json") {
        return OutputFormat::Json;
    }
    throw UsageError("output format must be csv or json, got '" + text + "'");
}

/// Flags given on the command line; each one overrides the config file.
struct Overrides {
    std::optional<std::string> config_path;
    std::optional<std::string> protocol;
    std::optional<std::string> q_template;
    std::optional<std::string> raman_template;
    std::optional<std::string> q_order;
    std::optional<std::string> raman_order;
    std::optional<double> epsilon;
    std::optional<double> eps_min;
    std::optional<double> eps_max;
    std::optional<int> n;
    std::optional<std::string> format;
    std::optional<std::string> output;
};

void add_plan_options(CLI::App &cmd, Overrides &o) {
    cmd.add_option("--config", o.config_path, "JSON run configuration; flags override its fields");
    cmd.add_option("--protocol", o.protocol, "SRS_PP, SRS_PM, SRS_MP, SRS_MM, RS_12 or RS_21");
    cmd.add_option("--q-template", o.q_template, "composite replacing each Q(pi/2): SINGLE, CP1, CP2, BB1, VR");
    cmd.add_option("--raman-template", o.raman_template,
                   "composite replacing the Raman pair: SINGLE, CP1, CP2, BB1, VR, TWO_PI_5, TWO_PI_9");
    cmd.add_option("--q-order", o.q_order, "auto, forward or reversed");
    cmd.add_option("--raman-order", o.raman_order, "auto, forward or reversed");
}

RunConfig resolve_config(const Overrides &o) {
    RunConfig config;
    if (o.config_path) {
        std::ifstream in(*o.config_path);
        if (!in) {
            throw UsageError("cannot read config file " + *o.config_path);
        }
        std::stringstream text;
        text << in.rdbuf();
        config = load_config(text.str());
    }
    if (o.protocol) {
        config.protocol = *o.protocol;
    }
    if (o.q_template) {
        config.plan.q_template = *o.q_template;
    }
    if (o.raman_template) {
        config.plan.raman_template = *o.raman_template;
    }
    if (o.q_order) {
        config.plan.q_order = order_or_throw(*o.q_order);
    }
    if (o.raman_order) {
        config.plan.raman_order = order_or_throw(*o.raman_order);
    }
    if (o.epsilon) {
        config.epsilon = *o.epsilon;
    }
    if (o.eps_min) {
        config.eps_min = *o.eps_min;
    }
    if (o.eps_max) {
        config.eps_max = *o.eps_max;
    }
    if (o.n) {
        config.n = *o.n;
    }
    if (o.format) {
        config.format = format_or_throw(*o.format);
    }
    if (o.output) {
        config.output = *o.output;
    }
    validate_config(config);
    return config;
}

std::string format_entry(cplx z) {
    auto clean = [](double x) { return std::abs(x) < 5e-7 ? 0.0 : x; };
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%9.6f%+.6fi", clean(z.real()), clean(z.imag()));
    return buf;
}

bool to_stdout(const std::string &output) {
    return output.empty() || output == "-";
}

int cmd_propagator(const RunConfig &config, std::ostream &out) {
    RunResult result = run(find_protocol(config.protocol), config.plan, ErrorModel{config.epsilon});
    print_propagators(out, config, result);
    return kOk;
}

int cmd_sweep(const RunConfig &config, std::ostream &out) {
    if (!to_stdout(config.output)) {
        check_writable(config.output);
    }
    SweepProfile profile =
        sweep(find_protocol(config.protocol), config.plan, config.eps_min, config.eps_max, config.n);
    std::string text = config.format == OutputFormat::Csv ? profile_to_csv(profile) : profile_to_json(profile);
    if (to_stdout(config.output)) {
        out << text;
    } else {
        write_file_atomic(config.output, text);
    }
    return kOk;
}

int cmd_table1(double corrupt_phase_pi, std::ostream &out) {
    auto rows = table1_rows(corrupt_phase_pi * kPi);
    bool all_pass = true;
    char line[160];
    std::snprintf(line, sizeof(line), "%-8s %-9s %-9s %-9s %-9s %s\n", "protocol", "final(L)", "final(R)",
                  "table(L)", "table(R)", "result");
    out << line;
    for (const auto &row : rows) {
        const Protocol &p = find_protocol(row.protocol);
        std::snprintf(line, sizeof(line), "%-8s %-9d %-9d %-9d %-9d %s\n", row.protocol.c_str(), row.state_l,
                      row.state_r, p.final_state_l, p.final_state_r, row.pass ? "PASS" : "FAIL");
        out << line;
        all_pass = all_pass && row.pass;
    }
    return all_pass ? kOk : kVerificationFailure;
}

int cmd_verify(std::uint64_t seed, int trials, std::ostream &out) {
    if (trials < 1) {
        throw UsageError("--trials must be >= 1");
    }
    bool all_pass = true;
    for (const auto &report : verify_suites(seed, trials)) {
        char line[256];
        if (report.tolerance > 0) {
            std::snprintf(line, sizeof(line), "[%s] %-22s max=%.3e tol=%.0e  %s\n", report.pass ? "PASS" : "FAIL",
                          report.name.c_str(), report.value, report.tolerance, report.detail.c_str());
        } else {
            std::snprintf(line, sizeof(line), "[%s] %-22s %s\n", report.pass ? "PASS" : "FAIL", report.name.c_str(),
                          report.detail.c_str());
        }
        out << line;
        all_pass = all_pass && report.pass;
    }
    return all_pass ? kOk : kVerificationFailure;
}

int cmd_figures(const std::string &out_dir, double eps_min, double eps_max, int n, std::ostream &out) {
    uniform_grid(eps_min, eps_max, n);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create directory " + out_dir + ": " + ec.message());
    }
    auto panels = figure_panels();
    std::vector<std::string> texts;
    for (const auto &panel : panels) {
        texts.push_back(profile_to_csv(sweep(find_protocol(panel.protocol), panel.plan, eps_min, eps_max, n)));
    }
    for (std::size_t i = 0; i < panels.size(); i++) {
        std::filesystem::path path = std::filesystem::path(out_dir) / panels[i].file_name;
        write_file_atomic(path, texts[i]);
        out << path.string() << "\n";
    }
    return kOk;
}

}  // namespace

RunConfig load_config(const std::string &json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw std::invalid_argument("config must be a JSON object");
    }
    RunConfig config;
    try {
        config.protocol = doc.value("protocol", config.protocol);
        config.plan.q_template = doc.value("q_template", config.plan.q_template);
        config.plan.raman_template = doc.value("raman_template", config.plan.raman_template);
        if (doc.contains("q_order")) {
            config.plan.q_order = order_or_throw(doc["q_order"].get<std::string>());
        }
        if (doc.contains("raman_order")) {
            config.plan.raman_order = order_or_throw(doc["raman_order"].get<std::string>());
        }
        config.epsilon = doc.value("epsilon", config.epsilon);
        if (doc.contains("sweep")) {
            const auto &s = doc["sweep"];
            config.eps_min = s.value("min", config.eps_min);
            config.eps_max = s.value("max", config.eps_max);
            config.n = s.value("n", config.n);
        }
        if (doc.contains("format")) {
            config.format = format_or_throw(doc["format"].get<std::string>());
        }
        config.output = doc.value("output", config.output);
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("bad config field: ") + e.what());
    }
    return config;
}

void validate_config(const RunConfig &config) {
    if (!is_known_protocol(config.protocol)) {
        throw UsageError("unknown protocol '" + config.protocol + "'");
    }
    validate_plan(find_protocol(config.protocol), config.plan);
}

void print_propagators(std::ostream &out, const RunConfig &config, const RunResult &result) {
    ResolvedOrder order = resolve_order(find_protocol(config.protocol), config.plan);
    out << "protocol " << config.protocol << "  q_template " << config.plan.q_template
        << (order.q_reversed ? " (reversed)" : "") << "  raman_template " << config.plan.raman_template
        << (order.raman_reversed ? " (reversed)" : "") << "  epsilon " << format_number(config.epsilon) << "\n";
    for (Chirality chi : {Chirality::L, Chirality::R}) {
        const CMat3 &u = result.propagator(chi);
        out << "U(" << chirality_name(chi) << ") =\n";
        for (std::size_t r = 0; r < 3; r++) {
            out << "  [";
            for (std::size_t c = 0; c < 3; c++) {
                out << "  " << format_entry(u(r, c));
            }
            out << " ]\n";
        }
        char line[96];
        const auto &p = result.populations(chi);
        std::snprintf(line, sizeof(line), "  populations %.6f %.6f %.6f  unitarity defect %.3e\n", p[0], p[1],
                      p[2], unitarity_defect(u));
        out << line;
    }
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Chirality-dependent population transfer with single, Raman and composite pulses"};
    app.name(args.empty() ? "chiralpulse" : args[0]);
    app.require_subcommand(1);

    Overrides prop_o;
    auto *prop_cmd = app.add_subcommand("propagator", "print both enantiomers' propagators at one epsilon");
    add_plan_options(*prop_cmd, prop_o);
    prop_cmd->add_option("--eps", prop_o.epsilon, "relative pulse-area error");

    Overrides sweep_o;
    auto *sweep_cmd = app.add_subcommand("sweep", "populations over a uniform epsilon grid");
    add_plan_options(*sweep_cmd, sweep_o);
    sweep_cmd->add_option("--eps-min", sweep_o.eps_min, "grid start (default -0.5)");
    sweep_cmd->add_option("--eps-max", sweep_o.eps_max, "grid end (default 0.5)");
    sweep_cmd->add_option("-n,--points", sweep_o.n, "grid points, >= 2 (default 1001)");
    sweep_cmd->add_option("--format", sweep_o.format, "csv or json");
    sweep_cmd->add_option("-o,--output", sweep_o.output, "output file (default stdout)");

    double corrupt_phase = 0.0;
    auto *table_cmd = app.add_subcommand("table1", "final states of every builtin protocol at epsilon = 0");
    table_cmd->add_option("--corrupt-phase", corrupt_phase, "add this S-field phase, in units of pi (test hook)");

    std::uint64_t seed = 42;
    int trials = 1000;
    auto *verify_cmd = app.add_subcommand("verify", "oracle, fixture, table and robustness checks");
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_option("--trials", trials, "random oracle trials");

    std::string fig_dir;
    double fig_min = -0.5;
    double fig_max = 0.5;
    int fig_n = 1001;
    auto *fig_cmd = app.add_subcommand("figures", "write the figure-panel sweeps as CSV files");
    fig_cmd->add_option("--out-dir", fig_dir, "output directory")->required();
    fig_cmd->add_option("--eps-min", fig_min, "grid start");
    fig_cmd->add_option("--eps-max", fig_max, "grid end");
    fig_cmd->add_option("-n,--points", fig_n, "grid points");

    std::vector<const char *> argv;
    argv.reserve(args.size() + 1);
    if (args.empty()) {
        argv.push_back("chiralpulse");
    }
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (*prop_cmd) {
            return cmd_propagator(resolve_config(prop_o), out);
        }
        if (*sweep_cmd) {
            RunConfig config = resolve_config(sweep_o);
            uniform_grid(config.eps_min, config.eps_max, config.n);
            return cmd_sweep(config, out);
        }
        if (*table_cmd) {
            return cmd_table1(corrupt_phase, out);
        }
        if (*verify_cmd) {
            return cmd_verify(seed, trials, out);
        }
        if (*fig_cmd) {
            return cmd_figures(fig_dir, fig_min, fig_max, fig_n, out);
        }
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace chiralpulse::cli
