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

#include "irscollab/gabidulin.hpp"

#include <algorithm>
#include <stdexcept>

namespace irscollab {

namespace {

Matrix column_of(const std::vector<Symbol>& xs) {
  Matrix m(xs.size(), 1);
  for (std::size_t i = 0; i < xs.size(); ++i) m(i, 0) = xs[i];
  return m;
}

}  // namespace

GabidulinCode::GabidulinCode(TowerSpec tower, std::size_t k, std::vector<Symbol> g)
    : tower_(std::move(tower)), k_(k), g_(std::move(g)) {}

GabidulinCode GabidulinCode::make(TowerSpec tower, std::size_t n, std::size_t k,
                                  std::vector<Symbol> g) {
  if (g.size() != n) throw std::invalid_argument("g must have n entries");
  if (n > tower.m()) throw std::invalid_argument("Gabidulin length exceeds extension degree");
  if (k < 1 || k >= n) throw std::invalid_argument("need 1 <= k < n");
  for (auto x : g) {
    if (!tower.ext().contains(x)) throw std::out_of_range("g entry outside field");
  }
  if (rank_q(column_of(g), tower) != n) {
    throw std::invalid_argument("g entries are linearly dependent over the base field");
  }
  GabidulinCode code(std::move(tower), k, std::move(g));
  const TowerSpec& tw = code.tower_;
  const FieldSpec& ext = tw.ext();

  // h is orthogonal to g^[s] for s in [-(n-k-1), k-1]; that covers every
  // pairing of a parity power with a generator power after untwisting.
  const auto lo = -static_cast<std::int64_t>(n - k - 1);
  const auto hi = static_cast<std::int64_t>(k) - 1;
  Matrix conditions(static_cast<std::size_t>(hi - lo + 1), n);
  for (std::int64_t s = lo; s <= hi; ++s) {
    const auto shifted = tw.frobenius(code.g_, s);
    std::copy(shifted.begin(), shifted.end(), conditions.row(static_cast<std::size_t>(s - lo)).begin());
  }
  const auto kernel = kernel_basis(ext, conditions);
  if (kernel.size() != 1) throw std::invalid_argument("no unique parity vector for g");
  code.h_ = kernel.front();

  const std::size_t red = n - k;
  code.parity_ = Matrix(red, n);
  for (std::size_t i = 0; i < red; ++i) {
    const auto row = tw.frobenius(code.h_, static_cast<std::int64_t>(i));
    std::copy(row.begin(), row.end(), code.parity_.row(i).begin());
  }
  const Matrix products = multiply(ext, code.parity_, code.generator_matrix().transpose());
  if (!products.is_zero()) throw std::logic_error("parity vector is not orthogonal to g");
  if (rank_q(column_of(code.h_), tw) != n) {
    throw std::logic_error("parity vector is dependent over the base field");
  }
  return code;
}

Matrix GabidulinCode::generator_matrix() const {
  Matrix gm(k_, n());
  for (std::size_t i = 0; i < k_; ++i) {
    const auto row = tower_.frobenius(g_, static_cast<std::int64_t>(i));
    std::copy(row.begin(), row.end(), gm.row(i).begin());
  }
  return gm;
}

Matrix GabidulinCode::encode(const Matrix& messages) const {
  if (messages.rows() != k_) throw std::invalid_argument("message matrix must have k rows");
  for (auto x : messages.data()) {
    if (!tower_.ext().contains(x)) throw std::out_of_range("message symbol outside field");
  }
  return multiply(tower_.ext(), generator_matrix().transpose(), messages);
}

GabidulinCode gab_make(TowerSpec tower, std::size_t n, std::size_t k, std::vector<Symbol> g) {
  return GabidulinCode::make(std::move(tower), n, k, std::move(g));
}

Matrix gab_encode(const GabidulinCode& code, const Matrix& messages) {
  return code.encode(messages);
}

// --- syndromes --------------------------------------------------------------

GabSyndromeStream::GabSyndromeStream(const GabidulinCode& code, const Matrix& y,
                                     OpCounters* counters)
    : code_(&code), y_(&y), counters_(counters) {
  if (y.rows() != code.n()) throw std::invalid_argument("received matrix must have n rows");
}

const std::vector<Symbol>& GabSyndromeStream::row(std::size_t i) {
  if (i >= max_rows()) throw std::out_of_range("syndrome row index beyond d - 1");
  const FieldSpec& f = code_->tower().ext();
  const Matrix& h = code_->parity_check_matrix();
  OpCounters local;
  while (rows_.size() <= i) {
    const std::size_t r = rows_.size();
    std::vector<Symbol> s(y_->cols(), 0);
    for (std::size_t j = 0; j < code_->n(); ++j) {
      const Symbol c = h(r, j);
      if (c == 0) continue;
      for (std::size_t t = 0; t < y_->cols(); ++t) {
        if ((*y_)(j, t) == 0) continue;
        s[t] = f.add(s[t], f.mul(c, (*y_)(j, t)));
        ++local.mul;
        ++local.add;
      }
    }
    rows_.push_back(std::move(s));
  }
  if (counters_) *counters_ += local;
  return rows_[i];
}

Matrix gab_syndromes(const GabidulinCode& code, const Matrix& y, OpCounters* counters) {
  GabSyndromeStream stream(code, y, counters);
  Matrix s(code.d() - 1, y.cols());
  for (std::size_t i = 0; i < s.rows(); ++i) {
    const auto& r = stream.row(i);
    std::copy(r.begin(), r.end(), s.row(i).begin());
  }
  return s;
}

// --- dependency -------------------------------------------------------------

std::optional<Dependency> gab_find_dependency(
    const TowerSpec& tower, std::size_t width,
    const std::function<std::span<const Symbol>(std::size_t)>& next_row, std::size_t limit,
    OpCounters* counters) {
  std::vector<std::vector<Symbol>> untwisted;
  auto pull = [&](std::size_t i) -> std::span<const Symbol> {
    untwisted.push_back(tower.frobenius(next_row(i), -static_cast<std::int64_t>(i + 1)));
    return untwisted.back();
  };
  auto dep = find_dependency(tower.ext(), width, pull, limit, counters);
  if (!dep) return std::nullopt;
  // U_(f+1) = sum mu_i U_i  <=>  S_(f+1) = sum_j mu_(f+1-j)^[f+1] S_(f+1-j)^[j].
  const std::size_t f = dep->f_star;
  std::vector<Symbol> lambda(f);
  for (std::size_t j = 1; j <= f; ++j) {
    lambda[j - 1] = tower.frobenius(dep->lambda[f - j], static_cast<std::int64_t>(f + 1));
  }
  return Dependency{f, std::move(lambda)};
}

std::optional<Dependency> gab_find_dependency(const TowerSpec& tower, const Matrix& rows,
                                              std::size_t limit, OpCounters* counters) {
  const std::size_t pulled = std::min(limit, rows.rows());
  return gab_find_dependency(
      tower, rows.cols(), [&](std::size_t i) { return rows.row(i); }, pulled, counters);
}

// --- error span -------------------------------------------------------------

Symbol LinearizedPoly::evaluate(const TowerSpec& tower, Symbol x) const {
  const FieldSpec& f = tower.ext();
  Symbol acc = tower.frobenius(x, static_cast<std::int64_t>(coeffs.size()));
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    acc = f.sub(acc, f.mul(coeffs[j], tower.frobenius(x, static_cast<std::int64_t>(j))));
  }
  return acc;
}

std::optional<LinearizedPoly> LinearizedPoly::from_key_equation(const FieldSpec& ext,
                                                                const std::vector<Symbol>& lambda) {
  LinearizedPoly p;
  if (lambda.empty()) return p;
  const Symbol top = lambda.back();
  if (top == 0) return std::nullopt;
  const Symbol inv = ext.inv(top);
  p.coeffs.push_back(inv);
  for (std::size_t j = 0; j + 1 < lambda.size(); ++j) {
    p.coeffs.push_back(ext.neg(ext.mul(lambda[j], inv)));
  }
  return p;
}

std::optional<std::vector<Symbol>> error_span_roots(const TowerSpec& tower,
                                                    const LinearizedPoly& poly) {
  const std::size_t m = tower.m();
  Matrix map(m, m);
  Symbol beta = 1;
  for (std::size_t i = 0; i < m; ++i) {
    const auto image = tower.expand(poly.evaluate(tower, beta));
    map.set_column(i, image);
    beta *= tower.q();
  }
  std::vector<Symbol> roots;
  for (const auto& x : kernel_basis(tower.base(), map)) roots.push_back(tower.fold(x));
  if (roots.size() != poly.q_degree()) return std::nullopt;
  return roots;
}

// --- reconstruction ---------------------------------------------------------

std::size_t gab_error_rank(const TowerSpec& tower, const Matrix& e) {
  return rank_q(column_of(e.data()), tower);
}

std::optional<Matrix> gab_reconstruct(const GabidulinCode& code, const Matrix& rows,
                                      const std::vector<Symbol>& basis, OpCounters* counters) {
  const TowerSpec& tw = code.tower();
  const FieldSpec& ext = tw.ext();
  const std::size_t n = code.n();
  const std::size_t l = rows.cols();
  const std::size_t m = tw.m();
  const std::size_t f = basis.size();
  const Matrix& h = code.parity_check_matrix();
  if (rows.rows() > h.rows()) throw std::invalid_argument("more syndrome rows than d - 1");
  if (f == 0) {
    if (!rows.is_zero()) return std::nullopt;
    return Matrix(n, l);
  }
  if (rows.rows() < f) return std::nullopt;

  // Unknown (u, j) is the GF(q) coefficient of basis_u in entry j; syndrome
  // row i contributes m base-field equations per interleaved column.
  const std::size_t unknowns = f * n;
  std::size_t used = f;
  Matrix a;
  Matrix b;
  auto build = [&](std::size_t count) {
    a = Matrix(count * m, unknowns);
    b = Matrix(count * m, l);
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t u = 0; u < f; ++u) {
        for (std::size_t j = 0; j < n; ++j) {
          const auto coords = tw.expand(ext.mul(basis[u], h(i, j)));
          for (std::size_t c = 0; c < m; ++c) a(i * m + c, u * n + j) = coords[c];
        }
      }
      for (std::size_t t = 0; t < l; ++t) {
        const auto coords = tw.expand(rows(i, t));
        for (std::size_t c = 0; c < m; ++c) b(i * m + c, t) = coords[c];
      }
    }
  };
  build(used);
  while (rank(tw.base(), a) < unknowns && used < rows.rows()) build(++used);
  auto solution = solve_unique(tw.base(), a, b, counters);
  if (!solution) return std::nullopt;

  Matrix e(n, l);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t t = 0; t < l; ++t) {
      Symbol acc = 0;
      for (std::size_t u = 0; u < f; ++u) {
        const Symbol coeff = (*solution)(u * n + j, t);
        if (coeff != 0) acc = ext.add(acc, ext.mul(basis[u], coeff));
      }
      e(j, t) = acc;
    }
  }
  const Matrix check = multiply(ext, h.top_rows(rows.rows()), e);
  if (!(check == rows)) return std::nullopt;
  if (gab_error_rank(tw, e) != f) return std::nullopt;
  return e;
}

Matrix psi_image(const TowerSpec& tower, const Matrix& syndromes, std::size_t f) {
  if (f > syndromes.rows()) throw std::invalid_argument("not enough syndrome rows");
  Matrix out(f, syndromes.cols());
  for (std::size_t r = 0; r < f; ++r) {
    const auto row = tower.frobenius(syndromes.row(r), -static_cast<std::int64_t>(r));
    std::copy(row.begin(), row.end(), out.row(r).begin());
  }
  return out;
}

// --- pipeline ---------------------------------------------------------------

namespace {

GabDecodeOutcome gab_fail(GabDecodeOutcome out, FailureReason reason) {
  out.status = DecodeStatus::detected_failure;
  out.reason = reason;
  out.codeword = Matrix();
  out.error_matrix = Matrix();
  out.span_basis.clear();
  return out;
}

}  // namespace

GabDecodeOutcome gab_decode(const GabidulinCode& code, std::size_t l, const Matrix& y,
                            const DecodeOptions& options) {
  const TowerSpec& tw = code.tower();
  if (y.rows() != code.n() || y.cols() != l) {
    throw std::invalid_argument("received matrix must be n x l");
  }
  for (auto x : y.data()) {
    if (!tw.ext().contains(x)) throw std::invalid_argument("received symbol outside field");
  }

  GabDecodeOutcome out;
  DecodeCounters& cnt = out.counters;
  GabSyndromeStream stream(code, y, &cnt.syndrome);
  const std::size_t limit = f_max(l, code.d()) + 1;
  auto dep = gab_find_dependency(
      tw, l, [&](std::size_t i) { return std::span<const Symbol>(stream.row(i)); }, limit,
      &cnt.elimination);
  cnt.syndrome_rows = stream.computed();
  if (!dep) return gab_fail(std::move(out), FailureReason::no_dependency);
  const std::size_t f = dep->f_star;
  out.f_star = f;

  Matrix errors(code.n(), l);
  std::vector<Symbol> basis;
  if (f > 0) {
    auto poly = LinearizedPoly::from_key_equation(tw.ext(), dep->lambda);
    if (!poly) return gab_fail(std::move(out), FailureReason::dimension_mismatch);
    auto roots = error_span_roots(tw, *poly);
    if (!roots) return gab_fail(std::move(out), FailureReason::dimension_mismatch);
    basis = std::move(*roots);
    Matrix head(f + 1, l);
    for (std::size_t i = 0; i <= f; ++i) {
      const auto& s = stream.row(i);
      std::copy(s.begin(), s.end(), head.row(i).begin());
    }
    auto e = gab_reconstruct(code, head, basis, &cnt.reconstruct);
    if (!e) return gab_fail(std::move(out), FailureReason::inconsistent_system);
    errors = std::move(*e);
  }
  Matrix corrected = subtract(tw.ext(), y, errors);

  if (options.verify && !gab_syndromes(code, corrected, &cnt.verify).is_zero()) {
    return gab_fail(std::move(out), FailureReason::nonzero_syndrome);
  }

  out.status = DecodeStatus::success;
  out.codeword = std::move(corrected);
  out.error_matrix = std::move(errors);
  out.span_basis = std::move(basis);
  return out;
}

}  // namespace irscollab
