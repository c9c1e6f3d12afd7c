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

#include "irscollab/irs_collab.hpp"

#include <algorithm>
#include <stdexcept>

namespace irscollab {

OpCounters DecodeCounters::total() const noexcept {
  OpCounters t = syndrome;
  t += elimination;
  t += locate;
  t += reconstruct;
  t += verify;
  return t;
}

// --- syndromes --------------------------------------------------------------

SyndromeStream::SyndromeStream(const GRSCode& code, const Matrix& y, OpCounters* counters)
    : code_(&code), y_(&y), counters_(counters) {
  if (y.rows() != code.n()) throw std::invalid_argument("received matrix must have n rows");
  const FieldSpec& f = code.field();
  powers_.resize(code.n());
  for (std::size_t j = 0; j < code.n(); ++j) {
    powers_[j] = f.pow(code.locators()[j], code.parity_exponent(0));
  }
}

const std::vector<Symbol>& SyndromeStream::row(std::size_t i) {
  if (i >= max_rows()) throw std::out_of_range("syndrome row index beyond n - k");
  const FieldSpec& f = code_->field();
  const auto& v = code_->locators();
  const std::size_t width = y_->cols();
  OpCounters local;
  while (rows_.size() <= i) {
    if (!rows_.empty()) {
      for (std::size_t j = 0; j < powers_.size(); ++j) {
        const Symbol p = powers_[j];
        if (p == 0 || v[j] == 1) continue;
        if (p == 1) {
          powers_[j] = v[j];
        } else {
          powers_[j] = f.mul(p, v[j]);
          ++local.mul;
        }
      }
    }
    std::vector<Symbol> s(width, 0);
    for (std::size_t j = 0; j < powers_.size(); ++j) {
      const Symbol c = powers_[j];
      if (c == 0) continue;
      const auto yj = y_->row(j);
      if (c == 1) {
        for (std::size_t t = 0; t < width; ++t) s[t] = f.add(s[t], yj[t]);
      } else {
        for (std::size_t t = 0; t < width; ++t) {
          if (yj[t] == 0) continue;
          s[t] = f.add(s[t], f.mul(c, yj[t]));
          ++local.mul;
        }
      }
      local.add += width;
    }
    rows_.push_back(std::move(s));
  }
  if (counters_) *counters_ += local;
  return rows_[i];
}

std::vector<Symbol> syndrome_row(const GRSCode& code, const Matrix& y, std::size_t i,
                                 OpCounters* counters) {
  if (i >= code.redundancy()) throw std::out_of_range("syndrome row index beyond n - k");
  if (y.rows() != code.n()) throw std::invalid_argument("received matrix must have n rows");
  const FieldSpec& f = code.field();
  std::vector<Symbol> s(y.cols(), 0);
  OpCounters local;
  for (std::size_t j = 0; j < code.n(); ++j) {
    const std::size_t e = code.parity_exponent(i);
    const Symbol c = f.pow(code.locators()[j], e);
    if (c == 0) continue;
    for (std::size_t t = 0; t < y.cols(); ++t) {
      if (c == 1) {
        s[t] = f.add(s[t], y(j, t));
      } else if (y(j, t) != 0) {
        s[t] = f.add(s[t], f.mul(c, y(j, t)));
        ++local.mul;
      }
    }
    local.add += y.cols();
  }
  if (counters) *counters += local;
  return s;
}

// --- elimination ------------------------------------------------------------

ColumnEliminator::ColumnEliminator(const FieldSpec& field, std::size_t width,
                                   OpCounters* counters)
    : field_(&field), width_(width), counters_(counters), tracker_(0, width), absorbed_(0, width) {}

std::optional<std::vector<Symbol>> ColumnEliminator::absorb(std::span<const Symbol> row) {
  if (done_) throw std::logic_error("eliminator already found a dependency");
  if (row.size() != width_) throw std::invalid_argument("row width mismatch");
  const FieldSpec& f = *field_;
  OpCounters local;

  // r = row * T, using that T is the identity outside the stored rows.
  std::vector<Symbol> r(row.begin(), row.end());
  for (auto p : pivots_) r[p] = 0;
  for (std::size_t t = 0; t < pivots_.size(); ++t) {
    const Symbol s = row[pivots_[t]];
    if (s == 0) continue;
    const auto trow = tracker_.row(t);
    for (std::size_t c = 0; c < width_; ++c) {
      if (trow[c] == 0) continue;
      r[c] = f.add(r[c], f.mul(s, trow[c]));
      ++local.mul;
      ++local.add;
    }
  }

  std::vector<bool> is_pivot(width_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::size_t q = width_;
  for (std::size_t c = 0; c < width_; ++c) {
    if (!is_pivot[c] && r[c] != 0) {
      q = c;
      break;
    }
  }

  if (q == width_) {
    std::vector<Symbol> lambda(pivots_.size());
    for (std::size_t t = 0; t < pivots_.size(); ++t) lambda[t] = r[pivots_[t]];
    done_ = true;
    if (counters_) *counters_ += local;
    return lambda;
  }

  // New pivot q: column q /= r[q], then column c -= r[c] * column q.
  std::vector<Symbol> unit(width_, 0);
  unit[q] = 1;
  tracker_.append_row(unit);
  pivots_.push_back(q);
  const Symbol inv = f.inv(r[q]);
  for (std::size_t t = 0; t < tracker_.rows(); ++t) {
    auto trow = tracker_.row(t);
    if (trow[q] == 0) continue;
    if (inv != 1) {
      trow[q] = f.mul(trow[q], inv);
      ++local.mul;
    }
    for (std::size_t c = 0; c < width_; ++c) {
      if (c == q || r[c] == 0) continue;
      trow[c] = f.sub(trow[c], f.mul(r[c], trow[q]));
      ++local.mul;
      ++local.add;
    }
  }
  absorbed_.append_row(row);
  if (counters_) *counters_ += local;
  return std::nullopt;
}

Matrix ColumnEliminator::transform() const {
  Matrix t = Matrix::identity(width_);
  for (auto p : pivots_) t(p, p) = 0;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    for (std::size_t c = 0; c < width_; ++c) t(pivots_[i], c) = tracker_(i, c);
  }
  return t;
}

Matrix ColumnEliminator::reduced() const { return multiply(*field_, absorbed_, transform()); }

std::optional<Dependency> find_dependency(
    const FieldSpec& field, std::size_t width,
    const std::function<std::span<const Symbol>(std::size_t)>& next_row, std::size_t limit,
    OpCounters* counters) {
  ColumnEliminator elim(field, width, counters);
  for (std::size_t i = 0; i < limit; ++i) {
    if (auto lambda = elim.absorb(next_row(i))) {
      return Dependency{lambda->size(), std::move(*lambda)};
    }
  }
  return std::nullopt;
}

std::optional<Dependency> find_dependency(const FieldSpec& field, const Matrix& rows,
                                          std::size_t limit, OpCounters* counters) {
  const std::size_t pulled = std::min(limit, rows.rows());
  return find_dependency(
      field, rows.cols(), [&](std::size_t i) { return rows.row(i); }, pulled, counters);
}

// --- location and reconstruction -------------------------------------------

Symbol ErrorLocator::evaluate(const FieldSpec& f, Symbol x, OpCounters* counters) const {
  // Horner on 1, -lambda_f, ..., -lambda_1 from the top.
  Symbol acc = 1;
  for (auto it = lambda.rbegin(); it != lambda.rend(); ++it) {
    acc = f.sub(f.mul(acc, x), *it);
  }
  if (counters) {
    counters->mul += lambda.size();
    counters->add += lambda.size();
  }
  return acc;
}

std::optional<std::vector<std::size_t>> locate_errors(const GRSCode& code,
                                                      const ErrorLocator& locator,
                                                      OpCounters* counters) {
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < code.n(); ++i) {
    if (locator.evaluate(code.field(), code.locators()[i], counters) == 0) roots.push_back(i);
  }
  if (roots.size() != locator.degree()) return std::nullopt;
  return roots;
}

std::optional<Matrix> reconstruct_errors(const GRSCode& code, const Matrix& syndrome_head,
                                         std::span<const std::size_t> positions,
                                         OpCounters* counters) {
  const std::size_t f = positions.size();
  if (syndrome_head.rows() != f) throw std::invalid_argument("need one syndrome row per error");
  const FieldSpec& field = code.field();
  Matrix h(f, f);
  for (std::size_t i = 0; i < f; ++i) {
    for (std::size_t j = 0; j < f; ++j) {
      if (positions[j] >= code.n()) throw std::out_of_range("error position beyond n");
      h(i, j) = field.pow(code.locators()[positions[j]], code.parity_exponent(i));
    }
  }
  return solve_unique(field, h, syndrome_head, counters);
}

std::size_t f_max(std::size_t l, std::size_t d) {
  if (l < 1 || d < 2) throw std::invalid_argument("f_max needs l >= 1 and d >= 2");
  return std::min(l, d - 2);
}

// --- pipeline ---------------------------------------------------------------

std::string_view to_string(DecodeStatus status) noexcept {
  return status == DecodeStatus::success ? "success" : "detected_failure";
}

std::string_view to_string(FailureReason reason) noexcept {
  switch (reason) {
    case FailureReason::none:
      return "none";
    case FailureReason::no_dependency:
      return "no_dependency";
    case FailureReason::root_count_mismatch:
      return "root_count_mismatch";
    case FailureReason::singular_system:
      return "singular_system";
    case FailureReason::zero_error_row:
      return "zero_error_row";
    case FailureReason::nonzero_syndrome:
      return "nonzero_syndrome";
    case FailureReason::dimension_mismatch:
      return "dimension_mismatch";
    case FailureReason::inconsistent_system:
      return "inconsistent_system";
    case FailureReason::rank_mismatch:
      return "rank_mismatch";
  }
  return "none";
}

namespace {

DecodeOutcome fail(DecodeOutcome out, FailureReason reason) {
  out.status = DecodeStatus::detected_failure;
  out.reason = reason;
  out.codeword = Matrix();
  out.error_matrix = Matrix();
  out.error_positions.clear();
  return out;
}

}  // namespace

DecodeOutcome decode(const IRSCode& code, const Matrix& y, const DecodeOptions& options) {
  const GRSCode& inner = code.inner();
  const FieldSpec& field = inner.field();
  if (y.rows() != inner.n() || y.cols() != code.l()) {
    throw std::invalid_argument("received matrix must be n x l");
  }
  for (auto x : y.data()) {
    if (!field.contains(x)) throw std::invalid_argument("received symbol outside field");
  }

  DecodeOutcome out;
  DecodeCounters& cnt = out.counters;
  SyndromeStream stream(inner, y, &cnt.syndrome);
  const std::size_t limit = f_max(code.l(), inner.d()) + 1;
  auto dep = find_dependency(
      field, code.l(), [&](std::size_t i) { return std::span<const Symbol>(stream.row(i)); },
      limit, &cnt.elimination);
  cnt.syndrome_rows = stream.computed();
  if (!dep) return fail(std::move(out), FailureReason::no_dependency);
  const std::size_t f = dep->f_star;
  out.f_star = f;

  Matrix errors(inner.n(), code.l());
  std::vector<std::size_t> positions;
  if (f > 0) {
    auto located = locate_errors(inner, ErrorLocator{dep->lambda}, &cnt.locate);
    if (!located) return fail(std::move(out), FailureReason::root_count_mismatch);
    positions = std::move(*located);
    Matrix head(f, code.l());
    for (std::size_t i = 0; i < f; ++i) {
      const auto& s = stream.row(i);
      std::copy(s.begin(), s.end(), head.row(i).begin());
    }
    auto values = reconstruct_errors(inner, head, positions, &cnt.reconstruct);
    if (!values) return fail(std::move(out), FailureReason::singular_system);
    for (std::size_t j = 0; j < f; ++j) {
      if (values->row_is_zero(j)) return fail(std::move(out), FailureReason::zero_error_row);
      const auto src = values->row(j);
      std::copy(src.begin(), src.end(), errors.row(positions[j]).begin());
    }
  }
  Matrix corrected = subtract(field, y, errors);
  cnt.reconstruct.add += f * code.l();

  if (options.verify) {
    SyndromeStream check(inner, corrected, &cnt.verify);
    for (std::size_t i = 0; i < inner.redundancy(); ++i) {
      const auto& s = check.row(i);
      if (std::any_of(s.begin(), s.end(), [](Symbol x) { return x != 0; })) {
        return fail(std::move(out), FailureReason::nonzero_syndrome);
      }
    }
  }

  out.status = DecodeStatus::success;
  out.codeword = std::move(corrected);
  out.error_matrix = std::move(errors);
  out.error_positions = std::move(positions);
  return out;
}

}  // namespace irscollab
