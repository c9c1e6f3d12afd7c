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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "irscollab/counters.hpp"
#include "irscollab/finite_field.hpp"

namespace irscollab {

/// Dense row-major matrix of encoded symbols. The field is supplied per call.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Symbol fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<Symbol>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Symbol>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Symbol& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  Symbol operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<Symbol> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Symbol> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<Symbol> column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Symbol> values);
  void append_row(std::span<const Symbol> values);

  const std::vector<Symbol>& data() const noexcept { return data_; }

  bool is_zero() const noexcept;
  bool row_is_zero(std::size_t r) const noexcept;
  Matrix transpose() const;
  /// The first count rows.
  Matrix top_rows(std::size_t count) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Symbol> data_;
};

Matrix multiply(const FieldSpec& f, const Matrix& a, const Matrix& b);
Matrix add(const FieldSpec& f, const Matrix& a, const Matrix& b);
Matrix subtract(const FieldSpec& f, const Matrix& a, const Matrix& b);

/// Reduced row echelon form; pivots are the first nonzero entry of each row.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

Echelon row_reduce(const FieldSpec& f, Matrix m, OpCounters* counters = nullptr);
std::size_t rank(const FieldSpec& f, const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column, in RREF order.
std::vector<std::vector<Symbol>> kernel_basis(const FieldSpec& f, const Matrix& m);

/**
 * The unique X with a * X = b, or nullopt when the system is inconsistent or
 * a lacks full column rank.
 */
std::optional<Matrix> solve_unique(const FieldSpec& f, const Matrix& a, const Matrix& b,
                                   OpCounters* counters = nullptr);

/// Inverse of a square matrix, nullopt when singular.
std::optional<Matrix> invert(const FieldSpec& f, const Matrix& a);

}  // namespace irscollab
