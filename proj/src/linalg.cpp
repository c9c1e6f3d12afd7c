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

#include "irscollab/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace irscollab {

Matrix::Matrix(std::initializer_list<std::initializer_list<Symbol>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Symbol>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

std::vector<Symbol> Matrix::column(std::size_t c) const {
  std::vector<Symbol> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Matrix::set_column(std::size_t c, std::span<const Symbol> values) {
  if (values.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

void Matrix::append_row(std::span<const Symbol> values) {
  if (rows_ == 0 && data_.empty()) cols_ = values.size();
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

bool Matrix::is_zero() const noexcept {
  for (auto v : data_) {
    if (v != 0) return false;
  }
  return true;
}

bool Matrix::row_is_zero(std::size_t r) const noexcept {
  for (auto v : row(r)) {
    if (v != 0) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::top_rows(std::size_t count) const {
  if (count > rows_) throw std::out_of_range("not enough rows");
  Matrix out(count, cols_);
  std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(count * cols_),
            out.data_.begin());
  return out;
}

Matrix multiply(const FieldSpec& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Symbol aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

namespace {

template <typename Op>
Matrix elementwise(const Matrix& a, const Matrix& b, Op op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix shape mismatch");
  }
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = op(a(r, c), b(r, c));
  }
  return out;
}

// Gauss-Jordan with pivots restricted to columns below pivot_limit.
Echelon reduce(const FieldSpec& f, Matrix m, std::size_t pivot_limit, OpCounters* counters) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_limit && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    }
    const Symbol inv = f.inv(m(r, c));
    if (inv != 1) {
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
      if (counters) counters->mul += m.cols() - c;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Symbol factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
      }
      if (counters) {
        counters->mul += m.cols() - c;
        counters->add += m.cols() - c;
      }
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

}  // namespace

Matrix add(const FieldSpec& f, const Matrix& a, const Matrix& b) {
  return elementwise(a, b, [&](Symbol x, Symbol y) { return f.add(x, y); });
}

Matrix subtract(const FieldSpec& f, const Matrix& a, const Matrix& b) {
  return elementwise(a, b, [&](Symbol x, Symbol y) { return f.sub(x, y); });
}

Echelon row_reduce(const FieldSpec& f, Matrix m, OpCounters* counters) {
  const std::size_t cols = m.cols();
  return reduce(f, std::move(m), cols, counters);
}

std::size_t rank(const FieldSpec& f, const Matrix& m) { return row_reduce(f, m).rank(); }

std::vector<std::vector<Symbol>> kernel_basis(const FieldSpec& f, const Matrix& m) {
  const Echelon e = row_reduce(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Symbol>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Symbol> x(m.cols(), 0);
    x[free] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
      x[e.pivot_cols[i]] = f.neg(e.reduced(i, free));
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Matrix> solve_unique(const FieldSpec& f, const Matrix& a, const Matrix& b,
                                   OpCounters* counters) {
  if (a.rows() != b.rows()) throw std::invalid_argument("system shape mismatch");
  Matrix aug(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, a.cols() + c) = b(r, c);
  }
  const Echelon e = reduce(f, std::move(aug), a.cols(), counters);
  if (e.rank() < a.cols()) return std::nullopt;
  for (std::size_t r = a.cols(); r < a.rows(); ++r) {
    if (!e.reduced.row_is_zero(r)) return std::nullopt;
  }
  Matrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < a.cols(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) x(r, c) = e.reduced(r, a.cols() + c);
  }
  return x;
}

std::optional<Matrix> invert(const FieldSpec& f, const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  return solve_unique(f, a, Matrix::identity(a.rows()));
}

}  // namespace irscollab
