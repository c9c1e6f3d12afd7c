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

#include "irscollab/finite_field.hpp"

#include <algorithm>
#include <sstream>

#include "irscollab/linalg.hpp"

namespace irscollab {
namespace {

using Poly = std::vector<std::uint32_t>;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic polynomial, coefficients in GF(p).
Poly poly_mod(Poly a, const Poly& monic, std::uint32_t p) {
  trim(a);
  const std::size_t dm = monic.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = lead * monic[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly digits_of(std::uint64_t value, std::uint32_t p, std::size_t len) {
  Poly d(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    d[i] = static_cast<std::uint32_t>(value % p);
    value /= p;
  }
  return d;
}

bool is_irreducible(const Poly& modulus, std::uint32_t p) {
  const std::size_t e = modulus.size() - 1;
  for (std::size_t d = 1; d <= e / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = digits_of(c, p, d);
      g.push_back(1);
      if (poly_mod(modulus, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus,
                     std::optional<Symbol> alpha)
    : p_(p), e_(e) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (e < 1) throw std::invalid_argument("field degree must be at least 1");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    radix_.push_back(static_cast<std::uint32_t>(size));
    size *= p;
    if (size > kSizeLimit) throw std::out_of_range("field has more than 2^31 elements");
  }
  size_ = static_cast<std::uint32_t>(size);

  if (modulus.empty()) {
    if (e == 1) {
      modulus_ = {0, 1};
    } else {
      for (std::uint64_t c = 1; c < size_ && modulus_.empty(); ++c) {
        Poly cand = digits_of(c, p, e);
        cand.push_back(1);
        if (!is_irreducible(cand, p)) continue;
        modulus_ = cand;
        if (!is_primitive_poly_route(p)) modulus_.clear();
      }
      if (modulus_.empty()) throw std::logic_error("no primitive modulus found");
    }
  } else {
    if (modulus.size() != e + 1) throw std::invalid_argument("modulus must have degree e");
    if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
    for (auto c : modulus) {
      if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    }
    if (!is_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible");
    modulus_ = std::move(modulus);
  }

  if (alpha) {
    if (*alpha == 0 || *alpha >= size_) throw std::invalid_argument("alpha out of range");
    if (!is_primitive_poly_route(*alpha)) {
      throw std::invalid_argument("alpha is not a primitive element");
    }
    alpha_ = *alpha;
  } else {
    alpha_ = find_primitive_element();
  }

  if (size_ <= kTableLimit) build_tables();
}

std::shared_ptr<const FieldSpec> FieldSpec::make(std::uint32_t p, std::uint32_t e,
                                                 std::vector<std::uint32_t> modulus,
                                                 std::optional<Symbol> alpha) {
  return std::make_shared<const FieldSpec>(p, e, std::move(modulus), alpha);
}

Symbol FieldSpec::mul_poly(Symbol a, Symbol b) const {
  if (e_ == 1) return static_cast<Symbol>(std::uint64_t{a} * b % p_);
  const Poly da = digits_of(a, p_, e_);
  const Poly db = digits_of(b, p_, e_);
  Poly prod(2 * e_ - 1, 0);
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < e_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
    }
  }
  const Poly r = poly_mod(std::move(prod), modulus_, p_);
  Symbol out = 0;
  for (std::size_t i = 0; i < r.size(); ++i) out += r[i] * radix_[i];
  return out;
}

Symbol FieldSpec::pow_poly(Symbol a, std::uint64_t n) const {
  Symbol result = 1;
  while (n > 0) {
    if (n & 1U) result = mul_poly(result, a);
    a = mul_poly(a, a);
    n >>= 1U;
  }
  return result;
}

bool FieldSpec::is_primitive_poly_route(Symbol a) const {
  if (a == 0) return false;
  const std::uint64_t order = size_ - 1;
  if (order == 1) return a == 1;
  for (auto r : prime_factors(order)) {
    if (pow_poly(a, order / r) == 1) return false;
  }
  return true;
}

Symbol FieldSpec::find_primitive_element() const {
  for (Symbol a = 1; a < size_; ++a) {
    if (is_primitive_poly_route(a)) return a;
  }
  throw std::logic_error("field without primitive element");
}

void FieldSpec::build_tables() {
  const std::uint32_t order = size_ - 1;
  exp_.assign(2 * std::size_t{order}, 0);
  log_.assign(size_, 0);
  Symbol x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = mul_poly(x, alpha_);
  }
  for (std::uint32_t i = 0; i < order; ++i) exp_[order + i] = exp_[i];
}

Symbol FieldSpec::add(Symbol a, Symbol b) const noexcept {
  if (p_ == 2) return a ^ b;
  if (e_ == 1) return static_cast<Symbol>((std::uint64_t{a} + b) % p_);
  Symbol r = 0;
  for (std::uint32_t i = 0; i < e_; ++i) {
    r += ((a % p_ + b % p_) % p_) * radix_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

Symbol FieldSpec::neg(Symbol a) const noexcept {
  if (p_ == 2) return a;
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  Symbol r = 0;
  for (std::uint32_t i = 0; i < e_; ++i) {
    const std::uint32_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * radix_[i];
    a /= p_;
  }
  return r;
}

Symbol FieldSpec::sub(Symbol a, Symbol b) const noexcept { return add(a, neg(b)); }

Symbol FieldSpec::mul(Symbol a, Symbol b) const noexcept {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  return mul_poly(a, b);
}

Symbol FieldSpec::inv(Symbol a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  if (!exp_.empty()) return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
  return pow_poly(a, size_ - 2);
}

Symbol FieldSpec::div(Symbol a, Symbol b) const {
  if (b == 0) throw DivisionByZero("division by zero");
  return mul(a, inv(b));
}

Symbol FieldSpec::pow(Symbol a, std::uint64_t n) const noexcept {
  if (n == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = size_ - 1;
  if (!exp_.empty()) return exp_[(std::uint64_t{log_[a]} * (n % order)) % order];
  return pow_poly(a, n % order == 0 ? order : n % order);
}

Symbol FieldSpec::exp(std::uint64_t i) const noexcept {
  const std::uint64_t order = size_ - 1;
  if (!exp_.empty()) return exp_[i % order];
  return pow_poly(alpha_, i % order);
}

std::uint32_t FieldSpec::log(Symbol a) const {
  if (a == 0) throw DivisionByZero("logarithm of zero");
  if (exp_.empty()) throw std::logic_error("discrete logarithm needs log tables");
  return log_[a];
}

std::vector<std::uint32_t> FieldSpec::digits(Symbol a) const { return digits_of(a, p_, e_); }

Symbol FieldSpec::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != e_) throw std::invalid_argument("expected one digit per degree");
  Symbol r = 0;
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (digits[i] >= p_) throw std::invalid_argument("digit out of range");
    r += digits[i] * radix_[i];
  }
  return r;
}

bool FieldSpec::same_field(const FieldSpec& other) const noexcept {
  return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_ && alpha_ == other.alpha_;
}

std::string FieldSpec::describe() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (e_ > 1) os << '^' << e_;
  os << ") modulus [";
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  os << "] alpha=" << alpha_;
  return os.str();
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, Symbol value) : field_(std::move(field)), value_(value) {
  if (!field_) throw std::invalid_argument("field element without field");
  if (!field_->contains(value)) throw std::out_of_range("value outside field");
}

namespace {

const FieldSpec& common_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field() && !a.field()->same_field(*b.field())) {
    throw FieldMismatch("operands belong to different fields");
  }
  return *a.field();
}

}  // namespace

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  const FieldSpec& f = common_field(a, b);
  switch (op) {
    case ArithOp::add:
      return {a.field(), f.add(a.value(), b.value())};
    case ArithOp::sub:
      return {a.field(), f.sub(a.value(), b.value())};
    case ArithOp::mul:
      return {a.field(), f.mul(a.value(), b.value())};
    case ArithOp::div:
      return {a.field(), f.div(a.value(), b.value())};
  }
  throw std::invalid_argument("unknown arithmetic op");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return arith(a, b, ArithOp::add);
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return arith(a, b, ArithOp::sub);
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return arith(a, b, ArithOp::mul);
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return arith(a, b, ArithOp::div);
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t n) const { return {field_, field_->pow(value_, n)}; }

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.value_ == b.value_ && common_field(a, b).contains(a.value_);
}

// ---------------------------------------------------------------------------

TowerSpec::TowerSpec(FieldPtr base, FieldPtr extension)
    : base_(std::move(base)), ext_(std::move(extension)) {
  if (!base_ || !ext_) throw std::invalid_argument("tower needs both fields");
  if (base_->degree() != 1) throw std::invalid_argument("tower base must be a prime field");
  if (base_->characteristic() != ext_->characteristic()) {
    throw std::invalid_argument("tower levels differ in characteristic");
  }
}

TowerSpec TowerSpec::make(std::uint32_t q, std::uint32_t m) {
  return TowerSpec(FieldSpec::make(q, 1), FieldSpec::make(q, m));
}

Symbol TowerSpec::frobenius(Symbol x, std::int64_t j) const noexcept {
  const std::int64_t mm = m();
  const std::int64_t jm = ((j % mm) + mm) % mm;
  std::uint64_t exponent = 1;
  for (std::int64_t i = 0; i < jm; ++i) exponent *= q();
  return ext_->pow(x, exponent);
}

std::vector<Symbol> TowerSpec::frobenius(std::span<const Symbol> xs, std::int64_t j) const {
  std::vector<Symbol> out(xs.size());
  std::transform(xs.begin(), xs.end(), out.begin(), [&](Symbol x) { return frobenius(x, j); });
  return out;
}

std::size_t rank_q(const Matrix& m, const TowerSpec& tower) {
  const std::size_t deg = tower.m();
  Matrix expanded(m.rows(), m.cols() * deg);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto coords = tower.expand(m(r, c));
      for (std::size_t i = 0; i < deg; ++i) expanded(r, c * deg + i) = coords[i];
    }
  }
  return rank(tower.base(), expanded);
}

std::size_t rank_ext(const Matrix& m, const FieldSpec& field) { return rank(field, m); }

}  // namespace irscollab
