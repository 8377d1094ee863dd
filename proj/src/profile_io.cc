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

#include "chiralpulse/profile_io.h"

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>

namespace chiralpulse {

std::string format_number(double value) {
    if (std::abs(value) < 1e-15) {
        value = 0.0;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::string profile_to_csv(const SweepProfile &profile) {
    std::string out(kCsvHeader);
    out += '\n';
    for (std::size_t i = 0; i < profile.epsilons.size(); i++) {
        out += format_number(profile.epsilons[i]);
        for (const auto *pops : {&profile.pops_l[i], &profile.pops_r[i]}) {
            for (double p : *pops) {
                out += ',';
                out += format_number(p);
            }
        }
        out += '\n';
    }
    return out;
}

std::string profile_to_json(const SweepProfile &profile) {
    nlohmann::ordered_json doc;
    doc["protocol"] = profile.protocol;
    doc["q_template"] = profile.plan.q_template;
    doc["raman_template"] = profile.plan.raman_template;
    doc["q_reversed"] = profile.order.q_reversed;
    doc["raman_reversed"] = profile.order.raman_reversed;
    doc["epsilons"] = profile.epsilons;
    doc["pops_L"] = profile.pops_l;
    doc["pops_R"] = profile.pops_r;
    return doc.dump(2) + "\n";
}

void check_writable(const std::filesystem::path &path) {
    std::filesystem::path parent = path.parent_path();
    if (parent.empty()) {
        parent = ".";
    }
    std::error_code ec;
    if (!std::filesystem::is_directory(parent, ec)) {
        throw IoError("output directory does not exist: " + parent.string());
    }
    if (std::filesystem::is_directory(path, ec)) {
        throw IoError("output path is a directory: " + path.string());
    }
    if (::access(parent.c_str(), W_OK) != 0) {
        throw IoError("output directory is not writable: " + parent.string());
    }
}

void write_file_atomic(const std::filesystem::path &path, const std::string &contents) {
    check_writable(path);
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open " + tmp.string() + " for writing");
        }
        out << contents;
        out.flush();
        if (!out) {
            out.close();
            std::filesystem::remove(tmp);
            throw IoError("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw IoError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

}  // namespace chiralpulse
