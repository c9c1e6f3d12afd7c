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

#include "irscollab/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace irscollab {

namespace {

std::string locate(const std::string& detail, std::size_t line, const std::string& source) {
  std::string where = source;
  if (line) where += (source.empty() ? "line " : ":") + std::to_string(line);
  return where.empty() ? detail : where + ": " + detail;
}

}  // namespace

ParseError::ParseError(const std::string& detail, std::size_t line, const std::string& source)
    : std::runtime_error(locate(detail, line, source)), detail_(detail), line_(line) {}

Matrix read_matrix(std::istream& in, const FieldSpec& field,
                   std::optional<std::size_t> expected_cols) {
  Matrix m;
  std::string line;
  std::size_t lineno = 0;
  std::vector<Symbol> row;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::string tok;
    row.clear();
    while (tokens >> tok) {
      if (row.empty() && tok.front() == '#') break;
      Symbol value = 0;
      const auto* first = tok.data();
      const auto* last = tok.data() + tok.size();
      auto [ptr, ec] = std::from_chars(first, last, value, 16);
      if (ec != std::errc() || ptr != last) throw ParseError("bad hex symbol '" + tok + "'", lineno);
      if (!field.contains(value)) throw ParseError("symbol '" + tok + "' outside field", lineno);
      row.push_back(value);
    }
    if (row.empty()) continue;
    if (expected_cols && row.size() != *expected_cols) {
      throw ParseError("expected " + std::to_string(*expected_cols) + " symbols, got " +
                           std::to_string(row.size()),
                       lineno);
    }
    if (m.rows() > 0 && row.size() != m.cols()) {
      throw ParseError("row length differs from earlier rows", lineno);
    }
    m.append_row(row);
  }
  return m;
}

Matrix read_matrix_file(const std::filesystem::path& path, const FieldSpec& field,
                        std::optional<std::size_t> expected_cols) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return read_matrix(in, field, expected_cols);
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), e.line(), path.string());
  }
}

void write_matrix(std::ostream& out, const Matrix& m) {
  char buf[16];
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, m(r, c), 16);
      (void)ec;
      if (c) out << ' ';
      out.write(buf, ptr - buf);
    }
    out << '\n';
  }
}

std::string format_matrix(const Matrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

void write_matrix_file(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_matrix(out, m);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace irscollab
