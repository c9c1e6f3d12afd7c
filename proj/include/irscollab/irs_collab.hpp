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
 * @file irs_collab.hpp
 * @brief Collaborative decoding of interleaved RS codes by incremental column
 * Gauss-Jordan elimination on the syndrome matrix.
 *
 * The decoder pulls syndrome rows one at a time and stops at the first row
 * that is a linear combination of the earlier ones. Its coefficients define
 * the error locator; the error values follow from a Vandermonde solve on the
 * first f syndrome rows. Rows and positions are 0-based in the API.
 */

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "irscollab/counters.hpp"
#include "irscollab/linalg.hpp"
#include "irscollab/rs_codes.hpp"

namespace irscollab {

/// Field-operation tallies per decoder stage.
struct DecodeCounters {
  OpCounters syndrome;
  OpCounters elimination;
  OpCounters locate;
  OpCounters reconstruct;
  OpCounters verify;
  std::size_t syndrome_rows = 0;

  OpCounters total() const noexcept;
};

/**
 * Lazily computed rows of H * Y. Powers of the locators are advanced one
 * row at a time; products by 0 or 1 are skipped and not counted, so the first
 * row of an RS* code costs additions only.
 */
class SyndromeStream {
 public:
  SyndromeStream(const GRSCode& code, const Matrix& y, OpCounters* counters = nullptr);

  std::size_t max_rows() const noexcept { return code_->redundancy(); }
  std::size_t computed() const noexcept { return rows_.size(); }
  /// Row i, computing every missing row up to i. @throws std::out_of_range
  const std::vector<Symbol>& row(std::size_t i);
  const std::vector<Symbol>& next() { return row(rows_.size()); }

 private:
  const GRSCode* code_;
  const Matrix* y_;
  OpCounters* counters_;
  std::vector<Symbol> powers_;
  std::vector<std::vector<Symbol>> rows_;
};

/// Row i (0-based) of H * Y computed on its own.
std::vector<Symbol> syndrome_row(const GRSCode& code, const Matrix& y, std::size_t i,
                                 OpCounters* counters = nullptr);

/**
 * Column-reduced echelon form built one row at a time.
 *
 * Keeps the column transform T with S_i * T = e_(pivot_i) for every absorbed
 * independent row. T differs from the identity only in the rows indexed by
 * pivot columns, so only those rows are stored.
 */
class ColumnEliminator {
 public:
  ColumnEliminator(const FieldSpec& field, std::size_t width, OpCounters* counters = nullptr);

  /**
   * Absorbs the next row. Returns the coefficients c with row = sum c_j S_j
   * over the rows absorbed so far when it depends on them; otherwise the row
   * adds a pivot and nullopt is returned. Rows cannot be absorbed after a
   * dependency.
   */
  std::optional<std::vector<Symbol>> absorb(std::span<const Symbol> row);

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t width() const noexcept { return width_; }
  const std::vector<std::size_t>& pivot_columns() const noexcept { return pivots_; }
  /// Full width x width column transform.
  Matrix transform() const;
  /// Absorbed independent rows times the transform.
  Matrix reduced() const;
  const Matrix& absorbed_rows() const noexcept { return absorbed_; }

 private:
  const FieldSpec* field_;
  std::size_t width_;
  OpCounters* counters_;
  std::vector<std::size_t> pivots_;
  Matrix tracker_;  // row t holds row pivots_[t] of T
  Matrix absorbed_;
  bool done_ = false;
};

struct Dependency {
  std::size_t f_star = 0;
  std::vector<Symbol> lambda;
};

/**
 * First row that is a combination of its predecessors, pulling at most
 * limit rows through next_row(i). An all-zero first row gives f_star = 0.
 */
std::optional<Dependency> find_dependency(const FieldSpec& field, std::size_t width,
                                          const std::function<std::span<const Symbol>(std::size_t)>& next_row,
                                          std::size_t limit, OpCounters* counters = nullptr);
std::optional<Dependency> find_dependency(const FieldSpec& field, const Matrix& rows,
                                          std::size_t limit, OpCounters* counters = nullptr);

/// Lambda(x) = x^f - sum_j lambda_j x^(j-1).
struct ErrorLocator {
  std::vector<Symbol> lambda;

  std::size_t degree() const noexcept { return lambda.size(); }
  Symbol evaluate(const FieldSpec& field, Symbol x, OpCounters* counters = nullptr) const;
};

/// Positions whose locator is a root, or nullopt when the root count is not f.
std::optional<std::vector<std::size_t>> locate_errors(const GRSCode& code,
                                                      const ErrorLocator& locator,
                                                      OpCounters* counters = nullptr);

/**
 * Error values on the positions F from the first |F| syndrome rows (an f x l
 * matrix). Returns nullopt only if the Vandermonde system is singular, which
 * distinct locators rule out.
 */
std::optional<Matrix> reconstruct_errors(const GRSCode& code, const Matrix& syndrome_head,
                                         std::span<const std::size_t> positions,
                                         OpCounters* counters = nullptr);

/// min(l, d - 2), the largest error count the collaborative decoder can handle.
std::size_t f_max(std::size_t l, std::size_t d);

enum class DecodeStatus { success, detected_failure };

enum class FailureReason {
  none,
  no_dependency,
  root_count_mismatch,
  singular_system,
  zero_error_row,
  nonzero_syndrome,
  dimension_mismatch,
  inconsistent_system,
  rank_mismatch,
};

std::string_view to_string(DecodeStatus status) noexcept;
std::string_view to_string(FailureReason reason) noexcept;

struct DecodeOptions {
  /// Recompute the full syndrome of the corrected word and reject non-codewords.
  bool verify = false;
};

struct DecodeOutcome {
  DecodeStatus status = DecodeStatus::detected_failure;
  FailureReason reason = FailureReason::none;
  Matrix codeword;
  Matrix error_matrix;
  std::vector<std::size_t> error_positions;
  /// Set whenever a dependency was found, also on later failures.
  std::optional<std::size_t> f_star;
  DecodeCounters counters;

  bool ok() const noexcept { return status == DecodeStatus::success; }
};

/// @throws std::invalid_argument when y is not an n x l matrix over the code's field
DecodeOutcome decode(const IRSCode& code, const Matrix& y, const DecodeOptions& options = {});

}  // namespace irscollab
