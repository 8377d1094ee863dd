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

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gtest/gtest.h"

using namespace chiralpulse;

namespace {

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class TempDir {
   public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() /
                ("chiralpulse_io_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::permissions(path_, std::filesystem::perms::owner_all, ec);
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path &path() const {
        return path_;
    }

   private:
    static inline int counter_ = 0;
    std::filesystem::path path_;
};

}  // namespace

TEST(profile_io, format_number) {
    EXPECT_EQ(format_number(0.0), "0");
    EXPECT_EQ(format_number(1.0), "1");
    EXPECT_EQ(format_number(-0.5), "-0.5");
    EXPECT_EQ(format_number(3e-17), "0");
    EXPECT_EQ(format_number(0.123456789012345), "0.123456789012");
}

TEST(profile_io, csv_zero_error_rows) {
    SweepProfile srs = sweep(find_protocol("SRS_PP"), {}, -0.5, 0.5, 3);
    auto lines = lines_of(profile_to_csv(srs));
    ASSERT_EQ(lines.size(), 4u);
    EXPECT_EQ(lines[0], kCsvHeader);
    EXPECT_EQ(lines[2], "0,0,1,0,0,0,1");

    SweepProfile rs = sweep(find_protocol("RS_12"), {}, -0.5, 0.5, 3);
    EXPECT_EQ(lines_of(profile_to_csv(rs))[2], "0,0,0,1,1,0,0");
}

TEST(profile_io, csv_two_point_grid) {
    SweepProfile p = sweep(find_protocol("SRS_MP"), {}, -0.5, 0.5, 2);
    auto lines = lines_of(profile_to_csv(p));
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_EQ(lines[1].rfind("-0.5,", 0), 0u);
    EXPECT_EQ(lines[2].rfind("0.5,", 0), 0u);
}

TEST(profile_io, json_round_trip) {
    SubstitutionPlan plan;
    plan.q_template = "VR";
    plan.raman_template = "VR";
    SweepProfile p = sweep(find_protocol("SRS_PP"), plan, -0.2, 0.2, 5);
    auto doc = nlohmann::json::parse(profile_to_json(p));
    EXPECT_EQ(doc["protocol"], "SRS_PP");
    EXPECT_EQ(doc["q_template"], "VR");
    EXPECT_EQ(doc["q_reversed"], false);
    EXPECT_EQ(doc["raman_reversed"], true);
    ASSERT_EQ(doc["epsilons"].size(), 5u);
    EXPECT_EQ(doc["epsilons"][4].get<double>(), 0.2);
    EXPECT_EQ((doc["pops_L"][2].get<std::array<double, 3>>()), p.pops_l[2]);
    EXPECT_EQ((doc["pops_R"][0].get<std::array<double, 3>>()), p.pops_r[0]);
}

TEST(profile_io, atomic_write_replaces_contents) {
    TempDir dir;
    auto file = dir.path() / "out.csv";
    write_file_atomic(file, "first\n");
    write_file_atomic(file, "second\n");
    EXPECT_EQ(slurp(file), "second\n");
    std::size_t entries = 0;
    for ([[maybe_unused]] const auto &e : std::filesystem::directory_iterator(dir.path())) {
        entries++;
    }
    EXPECT_EQ(entries, 1u);
}

TEST(profile_io, unwritable_targets) {
    TempDir dir;
    EXPECT_THROW(write_file_atomic(dir.path() / "missing" / "x.csv", "x"), IoError);
    EXPECT_THROW(write_file_atomic(dir.path(), "x"), IoError);
    if (::geteuid() != 0) {
        auto locked = dir.path() / "locked";
        std::filesystem::create_directory(locked);
        std::filesystem::permissions(locked, std::filesystem::perms::owner_read | std::filesystem::perms::owner_exec);
        EXPECT_THROW(write_file_atomic(locked / "x.csv", "x"), IoError);
        std::filesystem::permissions(locked, std::filesystem::perms::owner_all);
    }
}
