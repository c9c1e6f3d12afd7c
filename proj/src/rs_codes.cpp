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

#include "irscollab/rs_codes.hpp"

#include <algorithm>
#include <stdexcept>

namespace irscollab {

std::string_view to_string(CodeFlavor flavor) noexcept {
  switch (flavor) {
    case CodeFlavor::generic:
      return "generic";
    case CodeFlavor::rs:
      return "rs";
    case CodeFlavor::rs_star:
      return "rs_star";
    case CodeFlavor::shortened_rs_star:
      return "shortened_rs_star";
  }
  return "generic";
}

std::optional<CodeFlavor> parse_flavor(std::string_view name) noexcept {
  for (auto f : {CodeFlavor::generic, CodeFlavor::rs, CodeFlavor::rs_star,
                 CodeFlavor::shortened_rs_star}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

namespace {

Symbol horner(const FieldSpec& f, std::span<const Symbol> coeffs, Symbol x) {
  Symbol acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  return acc;
}

}  // namespace

GRSCode GRSCode::make_generic(FieldPtr field, std::vector<Symbol> v, std::size_t k) {
  if (!field) throw std::invalid_argument("code without field");
  if (v.size() > field->size()) throw std::invalid_argument("code longer than field size");
  if (k < 1 || k >= v.size()) throw std::invalid_argument("need 1 <= k < n");
  std::vector<Symbol> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("evaluation points must be distinct");
  }
  for (auto x : v) {
    if (!field->contains(x)) throw std::out_of_range("evaluation point outside field");
  }
  GRSCode c;
  c.field_ = std::move(field);
  c.v_ = std::move(v);
  c.k_ = k;
  return c;
}

GRSCode GRSCode::make_rs(FieldPtr field, std::size_t k) {
  if (!field) throw std::invalid_argument("code without field");
  std::vector<Symbol> v;
  for (std::uint32_t i = 0; i + 1 < field->size(); ++i) v.push_back(field->exp(i));
  GRSCode c = make_generic(std::move(field), std::move(v), k);
  c.flavor_ = CodeFlavor::rs;
  c.h_offset_ = 1;
  return c;
}

GRSCode GRSCode::make_rs_star(FieldPtr field, std::size_t k) {
  if (!field) throw std::invalid_argument("code without field");
  std::vector<Symbol> v{0};
  for (std::uint32_t i = 0; i + 1 < field->size(); ++i) v.push_back(field->exp(i));
  GRSCode c = make_generic(std::move(field), std::move(v), k);
  c.flavor_ = CodeFlavor::rs_star;
  return c;
}

GRSCode GRSCode::shorten(std::size_t s) const {
  if (s >= k_) throw std::invalid_argument("shortening needs s < k");
  if (s == 0) return *this;
  if (flavor_ != CodeFlavor::rs_star && flavor_ != CodeFlavor::shortened_rs_star) {
    throw std::invalid_argument("only RS* codes can be shortened");
  }
  const FieldSpec& f = *field_;
  GRSCode c = *this;
  c.flavor_ = CodeFlavor::shortened_rs_star;
  c.k_ = k_ - s;
  // Removed locators in parent order: the last s of this code come first.
  std::vector<Symbol> removed(v_.end() - static_cast<std::ptrdiff_t>(s), v_.end());
  removed.insert(removed.end(), removed_.begin(), removed_.end());
  c.v_.resize(v_.size() - s);
  c.removed_ = removed;

  // Parent polynomial m(x) + x^k' t(x) must vanish on every removed locator:
  // A t = -M m with A[r][i] = u_r^(k'+i), M[r][j] = u_r^j.
  const std::size_t total = removed.size();
  const std::size_t kk = c.k_;
  Matrix a(total, total);
  Matrix m(total, kk);
  for (std::size_t r = 0; r < total; ++r) {
    for (std::size_t j = 0; j < kk; ++j) m(r, j) = f.neg(f.pow(removed[r], j));
    for (std::size_t i = 0; i < total; ++i) a(r, i) = f.pow(removed[r], kk + i);
  }
  auto t = solve_unique(f, a, m);
  if (!t) throw std::logic_error("removed locators do not admit shortening");
  c.tail_map_ = std::move(*t);
  return c;
}

void GRSCode::check_message(std::span<const Symbol> message) const {
  if (message.size() != k_) throw std::invalid_argument("message length must equal k");
  for (auto x : message) {
    if (!field_->contains(x)) throw std::out_of_range("message symbol outside field");
  }
}

std::vector<Symbol> GRSCode::parent_message(std::span<const Symbol> message) const {
  check_message(message);
  std::vector<Symbol> full(message.begin(), message.end());
  const FieldSpec& f = *field_;
  for (std::size_t i = 0; i < tail_map_.rows(); ++i) {
    Symbol acc = 0;
    for (std::size_t j = 0; j < k_; ++j) acc = f.add(acc, f.mul(tail_map_(i, j), message[j]));
    full.push_back(acc);
  }
  return full;
}

std::vector<Symbol> GRSCode::encode(std::span<const Symbol> message) const {
  const std::vector<Symbol> coeffs = parent_message(message);
  std::vector<Symbol> out(v_.size());
  for (std::size_t i = 0; i < v_.size(); ++i) out[i] = horner(*field_, coeffs, v_[i]);
  return out;
}

Matrix GRSCode::generator_matrix() const {
  Matrix g(k_, n());
  std::vector<Symbol> unit(k_, 0);
  for (std::size_t r = 0; r < k_; ++r) {
    unit[r] = 1;
    const auto row = encode(unit);
    std::copy(row.begin(), row.end(), g.row(r).begin());
    unit[r] = 0;
  }
  return g;
}

Matrix GRSCode::parity_check_matrix() const {
  if (flavor_ == CodeFlavor::generic) {
    throw std::logic_error("parity-check matrix needs an RS flavor");
  }
  Matrix h(redundancy(), n());
  for (std::size_t i = 0; i < redundancy(); ++i) {
    for (std::size_t j = 0; j < n(); ++j) h(i, j) = field_->pow(v_[j], parity_exponent(i));
  }
  return h;
}

std::vector<Symbol> GRSCode::syndrome(std::span<const Symbol> word) const {
  if (word.size() != n()) throw std::invalid_argument("word length must equal n");
  const Matrix h = parity_check_matrix();
  std::vector<Symbol> s(redundancy(), 0);
  for (std::size_t i = 0; i < redundancy(); ++i) {
    for (std::size_t j = 0; j < n(); ++j) s[i] = field_->add(s[i], field_->mul(h(i, j), word[j]));
  }
  return s;
}

bool GRSCode::is_codeword(std::span<const Symbol> word) const {
  const auto s = syndrome(word);
  return std::all_of(s.begin(), s.end(), [](Symbol x) { return x == 0; });
}

IRSCode::IRSCode(GRSCode inner, std::size_t l) : inner_(std::move(inner)), l_(l) {
  if (l < 1) throw std::invalid_argument("interleaving degree must be at least 1");
}

Matrix IRSCode::encode(const Matrix& messages) const {
  if (messages.rows() != inner_.k() || messages.cols() != l_) {
    throw std::invalid_argument("message matrix must be k x l");
  }
  Matrix out(inner_.n(), l_);
  for (std::size_t t = 0; t < l_; ++t) out.set_column(t, inner_.encode(messages.column(t)));
  return out;
}

bool IRSCode::is_codeword(const Matrix& word) const {
  if (word.rows() != inner_.n() || word.cols() != l_) return false;
  for (std::size_t t = 0; t < l_; ++t) {
    if (!inner_.is_codeword(word.column(t))) return false;
  }
  return true;
}

GRSCode make_rs_star(FieldPtr field, std::size_t k) {
  return GRSCode::make_rs_star(std::move(field), k);
}

GRSCode shorten(const GRSCode& code, std::size_t s) { return code.shorten(s); }

Matrix irs_encode(const IRSCode& code, const Matrix& messages) { return code.encode(messages); }

}  // namespace irscollab
