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
 * @file finite_field.hpp
 * @brief Runtime finite fields GF(p^e) and tower extensions GF(q^m) / GF(q).
 *
 * Elements are encoded as integers whose base-p digits are the coefficients of
 * the polynomial residue, lowest digit = constant term. With this encoding the
 * prime subfield GF(p) is exactly {0, ..., p-1} and 1 is always the
 * multiplicative identity.
 *
 * Fields with at most 2^16 elements carry eagerly built log/antilog tables;
 * larger fields (up to 2^31 elements) fall back to polynomial arithmetic.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace irscollab {

/// Encoded field element without field context. Hot loops work on these.
using Symbol = std::uint32_t;

class Matrix;

/// Raised for arithmetic mixing elements of different fields.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised on division by (or inversion of) zero.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/**
 * Immutable description of GF(p^e) together with its arithmetic tables.
 *
 * Construction validates that the modulus is monic and irreducible (trial
 * division by every monic polynomial of degree <= e/2) and that the primitive
 * element has multiplicative order p^e - 1. Instances are meant to be shared
 * through std::shared_ptr<const FieldSpec>.
 */
class FieldSpec {
 public:
  /// Largest field size with log/antilog tables.
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;
  /// Largest supported field size.
  static constexpr std::uint64_t kSizeLimit = std::uint64_t{1} << 31;

  /**
   * An empty @p modulus selects the canonical one: GF(p) uses x, GF(p^e) uses
   * the monic irreducible polynomial of smallest encoding for which x is
   * primitive (x^3+x+1, x^4+x+1 and x^8+x^4+x^3+x^2+1 for 8, 16 and 256
   * elements). An unset @p alpha selects the smallest primitive element.
   */
  FieldSpec(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus = {},
            std::optional<Symbol> alpha = std::nullopt);

  static std::shared_ptr<const FieldSpec> make(std::uint32_t p, std::uint32_t e,
                                               std::vector<std::uint32_t> modulus = {},
                                               std::optional<Symbol> alpha = std::nullopt);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return e_; }
  std::uint32_t size() const noexcept { return size_; }
  /// Modulus coefficients, lowest order first; size() == degree() + 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  Symbol primitive_element() const noexcept { return alpha_; }
  bool has_tables() const noexcept { return !exp_.empty(); }
  bool contains(Symbol a) const noexcept { return a < size_; }

  Symbol add(Symbol a, Symbol b) const noexcept;
  Symbol sub(Symbol a, Symbol b) const noexcept;
  Symbol neg(Symbol a) const noexcept;
  Symbol mul(Symbol a, Symbol b) const noexcept;
  /// @throws DivisionByZero when b == 0
  Symbol div(Symbol a, Symbol b) const;
  /// @throws DivisionByZero when a == 0
  Symbol inv(Symbol a) const;
  /// a^n for n >= 0 (0^0 == 1).
  Symbol pow(Symbol a, std::uint64_t n) const noexcept;
  /// alpha^i, i taken modulo size() - 1.
  Symbol exp(std::uint64_t i) const noexcept;
  /// Discrete logarithm to base alpha. @throws DivisionByZero for a == 0
  std::uint32_t log(Symbol a) const;

  /// Base-p digits of a (length degree()), lowest first.
  std::vector<std::uint32_t> digits(Symbol a) const;
  Symbol from_digits(std::span<const std::uint32_t> digits) const;

  /// Same p, e, modulus and primitive element.
  bool same_field(const FieldSpec& other) const noexcept;

  std::string describe() const;

 private:
  Symbol mul_poly(Symbol a, Symbol b) const;
  Symbol pow_poly(Symbol a, std::uint64_t n) const;
  Symbol find_primitive_element() const;
  bool is_primitive_poly_route(Symbol a) const;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t size_;
  std::vector<std::uint32_t> modulus_;
  Symbol alpha_ = 0;
  std::vector<std::uint32_t> radix_;  // p^i
  std::vector<Symbol> exp_;           // 2 * (size - 1) entries
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

enum class ArithOp { add, sub, mul, div };

/// A value bound to its field. Mixing fields throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Symbol value);

  const FieldPtr& field() const noexcept { return field_; }
  Symbol value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t n) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldPtr field_;
  Symbol value_;
};

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);

/**
 * GF(q^m) viewed as an m-dimensional vector space over a prime field GF(q),
 * using the polynomial basis {1, x, ..., x^(m-1)} of the extension's own
 * representation. Coordinates are therefore the base-q digits of an element.
 */
class TowerSpec {
 public:
  TowerSpec(FieldPtr base, FieldPtr extension);
  /// Canonical moduli for both levels.
  static TowerSpec make(std::uint32_t q, std::uint32_t m);

  const FieldSpec& base() const noexcept { return *base_; }
  const FieldSpec& ext() const noexcept { return *ext_; }
  const FieldPtr& base_ptr() const noexcept { return base_; }
  const FieldPtr& ext_ptr() const noexcept { return ext_; }
  std::uint32_t q() const noexcept { return base_->size(); }
  std::uint32_t m() const noexcept { return ext_->degree(); }

  std::vector<Symbol> expand(Symbol x) const { return ext_->digits(x); }
  Symbol fold(std::span<const Symbol> coords) const { return ext_->from_digits(coords); }

  /// x^(q^j); negative j is the inverse automorphism.
  Symbol frobenius(Symbol x, std::int64_t j) const noexcept;
  std::vector<Symbol> frobenius(std::span<const Symbol> xs, std::int64_t j) const;

 private:
  FieldPtr base_;
  FieldPtr ext_;
};

/// Rank over GF(q) of the n x (k*m) expansion of an n x k matrix over GF(q^m).
std::size_t rank_q(const Matrix& m, const TowerSpec& tower);

/// Rank with arithmetic in the matrix's own field.
std::size_t rank_ext(const Matrix& m, const FieldSpec& field);

}  // namespace irscollab
