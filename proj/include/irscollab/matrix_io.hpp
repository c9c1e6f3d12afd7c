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
 * @file matrix_io.hpp
 * @brief Text matrix files: one row per line, lowercase hex symbols separated
 * by whitespace. Blank lines and lines starting with '#' are skipped.
 */

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "irscollab/linalg.hpp"

namespace irscollab {

/// Malformed matrix text; line() is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& detail, std::size_t line, const std::string& source = {});
  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
};

/// @throws ParseError on bad tokens, symbols outside the field or ragged rows
Matrix read_matrix(std::istream& in, const FieldSpec& field,
                   std::optional<std::size_t> expected_cols = std::nullopt);
/// @throws std::runtime_error when the file cannot be opened, ParseError otherwise
Matrix read_matrix_file(const std::filesystem::path& path, const FieldSpec& field,
                        std::optional<std::size_t> expected_cols = std::nullopt);

void write_matrix(std::ostream& out, const Matrix& m);
std::string format_matrix(const Matrix& m);
void write_matrix_file(const std::filesystem::path& path, const Matrix& m);

}  // namespace irscollab
