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

#ifndef CHIRALPULSE_PROFILE_IO_H
#define CHIRALPULSE_PROFILE_IO_H

#include <filesystem>
#include <stdexcept>
#include <string>

#include "chiralpulse/analysis.h"

namespace chiralpulse {

inline constexpr std::string_view kCsvHeader = "epsilon,P1_L,P2_L,P3_L,P1_R,P2_R,P3_R";

/// 12 significant digits (%.12g). Magnitudes below 1e-15 print as 0: they are
/// rounding residue of squared unit-norm amplitudes.
std::string format_number(double value);

std::string profile_to_csv(const SweepProfile &profile);
std::string profile_to_json(const SweepProfile &profile);

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Writes to a sibling temporary file and renames it over `path`, so a
/// failed write never leaves a partial file behind. Throws IoError.
void write_file_atomic(const std::filesystem::path &path, const std::string &contents);

/// Throws IoError when `path` cannot be created (missing parent directory,
/// or the parent is not writable).
void check_writable(const std::filesystem::path &path);

}  // namespace chiralpulse

#endif
