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
 * @file rs_codes.hpp
 * @brief Generalized Reed-Solomon codes, the extended RS* family, shortening
 * and column-wise interleaving.
 *
 * Positions are 0-based in the API. Messages are polynomial coefficients,
 * lowest order first.
 */

#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "irscollab/finite_field.hpp"
#include "irscollab/linalg.hpp"

namespace irscollab {

enum class CodeFlavor { generic, rs, rs_star, shortened_rs_star };

std::string_view to_string(CodeFlavor flavor) noexcept;
std::optional<CodeFlavor> parse_flavor(std::string_view name) noexcept;

class GRSCode {
 public:
  /// Evaluation code of polynomials of degree < k at the distinct points v.
  static GRSCode make_generic(FieldPtr field, std::vector<Symbol> v, std::size_t k);
  /// v = (alpha^0, ..., alpha^(q-2)), n = q - 1.
  static GRSCode make_rs(FieldPtr field, std::size_t k);
  /// v = (0, alpha^0, ..., alpha^(q-2)), n = q.
  static GRSCode make_rs_star(FieldPtr field, std::size_t k);

  /**
   * Subcode of the parent whose last s positions are zero, with those
   * positions deleted. Shortening a shortened code accumulates s against the
   * original parent.
   */
  GRSCode shorten(std::size_t s) const;

  const FieldSpec& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t n() const noexcept { return v_.size(); }
  std::size_t k() const noexcept { return k_; }
  std::size_t d() const noexcept { return n() - k_ + 1; }
  std::size_t redundancy() const noexcept { return n() - k_; }
  const std::vector<Symbol>& locators() const noexcept { return v_; }
  CodeFlavor flavor() const noexcept { return flavor_; }
  std::size_t shortened_by() const noexcept { return removed_.size(); }

  std::vector<Symbol> encode(std::span<const Symbol> message) const;

  /**
   * Parent-code message whose codeword vanishes on the removed positions and
   * agrees with encode(message) elsewhere. Identity for unshortened codes.
   */
  std::vector<Symbol> parent_message(std::span<const Symbol> message) const;

  /// Generator matrix, k x n, rows are encodings of unit messages.
  Matrix generator_matrix() const;

  /**
   * Vandermonde parity-check matrix: entry (i, j) = v_j^i for RS* codes and
   * their shortenings, v_j^(i+1) for the classical flavor.
   * @throws std::logic_error for the generic flavor
   */
  Matrix parity_check_matrix() const;
  /// Power of v_j used by parity-check row i (0-based).
  std::size_t parity_exponent(std::size_t i) const noexcept { return i + h_offset_; }

  std::vector<Symbol> syndrome(std::span<const Symbol> word) const;
  bool is_codeword(std::span<const Symbol> word) const;

 private:
  GRSCode() = default;
  void check_message(std::span<const Symbol> message) const;

  FieldPtr field_;
  std::vector<Symbol> v_;
  std::size_t k_ = 0;
  CodeFlavor flavor_ = CodeFlavor::generic;
  std::size_t h_offset_ = 0;
  // Shortening: removed parent locators and the map from a message to the
  // top coefficients that cancel them.
  std::vector<Symbol> removed_;
  Matrix tail_map_;
};

/// Column-wise interleaving of l codewords of one inner code.
class IRSCode {
 public:
  IRSCode(GRSCode inner, std::size_t l);

  const GRSCode& inner() const noexcept { return inner_; }
  std::size_t l() const noexcept { return l_; }

  /// k x l messages to n x l codeword matrix.
  Matrix encode(const Matrix& messages) const;
  bool is_codeword(const Matrix& word) const;

 private:
  GRSCode inner_;
  std::size_t l_;
};

GRSCode make_rs_star(FieldPtr field, std::size_t k);
GRSCode shorten(const GRSCode& code, std::size_t s);
Matrix irs_encode(const IRSCode& code, const Matrix& messages);

}  // namespace irscollab
