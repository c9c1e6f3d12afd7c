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
 * @file gabidulin.hpp
 * @brief Interleaved Gabidulin codes over a tower GF(q^m) / GF(q) and their
 * collaborative decoder.
 *
 * Notation: x^[j] is the Frobenius power x^(q^j). Syndrome row i (0-based) of
 * a received n x l matrix Y is sum_j h_j^[i] Y_j. The decoder untwists row i
 * to U_i = S_i^[-(i+1)], runs the ordinary column elimination on the U rows
 * and twists the coefficients back, which yields the key equation
 * S_(f+1) = sum_j lambda_j S_(f+1-j)^[j] (1-based rows).
 *
 * Errors are modelled value-side: every entry of E lies in one f-dimensional
 * GF(q)-subspace of GF(q^m), so E = sum_u a_u B_u with GF(q) matrices B_u.
 */

#pragma once

#include <optional>
#include <vector>

#include "irscollab/irs_collab.hpp"
#include "irscollab/linalg.hpp"

namespace irscollab {

class GabidulinCode {
 public:
  /**
   * @throws std::invalid_argument when n > m, k >= n, g is dependent over
   * GF(q) or the parity vector cannot be found
   */
  static GabidulinCode make(TowerSpec tower, std::size_t n, std::size_t k, std::vector<Symbol> g);

  const TowerSpec& tower() const noexcept { return tower_; }
  std::size_t n() const noexcept { return g_.size(); }
  std::size_t k() const noexcept { return k_; }
  std::size_t d() const noexcept { return n() - k_ + 1; }
  const std::vector<Symbol>& g() const noexcept { return g_; }
  const std::vector<Symbol>& h() const noexcept { return h_; }

  /// Moore matrix, row i = g^[i], k x n.
  Matrix generator_matrix() const;
  /// Moore matrix, row i = h^[i], (d-1) x n.
  const Matrix& parity_check_matrix() const noexcept { return parity_; }

  /// k x l messages to n x l codeword matrix.
  Matrix encode(const Matrix& messages) const;

 private:
  GabidulinCode(TowerSpec tower, std::size_t k, std::vector<Symbol> g);

  TowerSpec tower_;
  std::size_t k_;
  std::vector<Symbol> g_;
  std::vector<Symbol> h_;
  Matrix parity_;
};

GabidulinCode gab_make(TowerSpec tower, std::size_t n, std::size_t k, std::vector<Symbol> g);
Matrix gab_encode(const GabidulinCode& code, const Matrix& messages);

/// All d-1 syndrome rows.
Matrix gab_syndromes(const GabidulinCode& code, const Matrix& y, OpCounters* counters = nullptr);

/// Lazily computed Gabidulin syndrome rows.
class GabSyndromeStream {
 public:
  GabSyndromeStream(const GabidulinCode& code, const Matrix& y, OpCounters* counters = nullptr);

  std::size_t max_rows() const noexcept { return code_->d() - 1; }
  std::size_t computed() const noexcept { return rows_.size(); }
  const std::vector<Symbol>& row(std::size_t i);

 private:
  const GabidulinCode* code_;
  const Matrix* y_;
  OpCounters* counters_;
  std::vector<std::vector<Symbol>> rows_;
};

/**
 * Smallest f such that S_(f+1) = sum_(j=1..f) lambda_j S_(f+1-j)^[j], with
 * rows pulled through next_row(i) (0-based) up to limit rows.
 */
std::optional<Dependency> gab_find_dependency(
    const TowerSpec& tower, std::size_t width,
    const std::function<std::span<const Symbol>(std::size_t)>& next_row, std::size_t limit,
    OpCounters* counters = nullptr);
std::optional<Dependency> gab_find_dependency(const TowerSpec& tower, const Matrix& rows,
                                              std::size_t limit, OpCounters* counters = nullptr);

/// Monic linearized polynomial x^[f] - sum_(j=1..f) c_j x^[j-1].
struct LinearizedPoly {
  std::vector<Symbol> coeffs;

  std::size_t q_degree() const noexcept { return coeffs.size(); }
  Symbol evaluate(const TowerSpec& tower, Symbol x) const;

  /**
   * Normalizes x - sum_j lambda_j x^[j], whose roots span the error values,
   * to monic form. nullopt when lambda_f = 0, since the q-degree then drops.
   */
  static std::optional<LinearizedPoly> from_key_equation(const FieldSpec& ext,
                                                         const std::vector<Symbol>& lambda);
};

/**
 * GF(q)-basis of the root space, in reduced echelon order of the coordinate
 * kernel. nullopt when the root space dimension differs from the q-degree.
 */
std::optional<std::vector<Symbol>> error_span_roots(const TowerSpec& tower,
                                                    const LinearizedPoly& poly);

/**
 * Error matrix E = sum_u basis_u B_u whose syndrome rows agree with rows.
 * Solves over GF(q) from the first f rows (more when needed), then checks
 * every given row and that the GF(q)-span of the entries of E has dimension
 * f. nullopt when any step fails.
 */
std::optional<Matrix> gab_reconstruct(const GabidulinCode& code, const Matrix& rows,
                                      const std::vector<Symbol>& basis,
                                      OpCounters* counters = nullptr);

/// Dimension of the GF(q)-span of all entries of e.
std::size_t gab_error_rank(const TowerSpec& tower, const Matrix& e);

/// Rows S_r^[-r] for r = 0..f-1: a full-rank image is the success criterion of the dependency step.
Matrix psi_image(const TowerSpec& tower, const Matrix& syndromes, std::size_t f);

struct GabDecodeOutcome {
  DecodeStatus status = DecodeStatus::detected_failure;
  FailureReason reason = FailureReason::none;
  Matrix codeword;
  Matrix error_matrix;
  std::vector<Symbol> span_basis;
  std::optional<std::size_t> f_star;
  DecodeCounters counters;

  bool ok() const noexcept { return status == DecodeStatus::success; }
};

/// @throws std::invalid_argument when y is not n x l over the extension field
GabDecodeOutcome gab_decode(const GabidulinCode& code, std::size_t l, const Matrix& y,
                            const DecodeOptions& options = {});

}  // namespace irscollab
