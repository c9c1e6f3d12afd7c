// Copyright 2026 The irscollab Authors
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

/**
 * @file cli.hpp
 * @brief Entry point of the irscollab command-line tool.
 *
 * Exit codes: 0 on success (a detected decoding failure still counts as a
 * successful run), 1 on usage errors, 2 on I/O or parse errors.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irscollab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Log-spaced probabilities rounded to four significant digits.
std::vector<std::string> log_grid(double lo, double hi, std::size_t points);

}  // namespace irscollab::cli
