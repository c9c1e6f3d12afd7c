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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "irscollab/irs_collab.hpp"
#include "irscollab/rng.hpp"

namespace irscollab {
namespace {

const FieldPtr& gf5() {
  static const FieldPtr f = FieldSpec::make(5, 1);
  return f;
}

Matrix rows_matrix(std::initializer_list<std::initializer_list<Symbol>> rows) { return Matrix(rows); }

TEST(Syndrome, SpecExample) {
  const GRSCode c = make_rs_star(gf5(), 2);
  Matrix e(5, 2);
  e(2, 0) = 1;
  e(2, 1) = 2;
  EXPECT_EQ(syndrome_row(c, e, 0), (std::vector<Symbol>{1, 2}));
  EXPECT_EQ(syndrome_row(c, e, 1), (std::vector<Symbol>{2, 4}));
  EXPECT_EQ(syndrome_row(c, e, 2), (std::vector<Symbol>{4, 3}));
  EXPECT_THROW(syndrome_row(c, e, 3), std::out_of_range);

  SyndromeStream stream(c, e);
  EXPECT_EQ(stream.row(2), (std::vector<Symbol>{4, 3}));
  EXPECT_EQ(stream.computed(), 3u);
  EXPECT_EQ(stream.row(0), (std::vector<Symbol>{1, 2}));
}

TEST(Syndrome, CodewordAnnihilationAndFirstRowCost) {
  const GRSCode c = shorten(make_rs_star(FieldSpec::make(2, 8), 240), 52);
  const IRSCode code(c, 3);
  SplitMix64 rng(4);
  Matrix msg(188, 3), e(204, 3);
  for (std::size_t r = 0; r < 188; ++r) {
    for (std::size_t t = 0; t < 3; ++t) msg(r, t) = static_cast<Symbol>(rng.uniform_below(256));
  }
  for (std::size_t t = 0; t < 3; ++t) e(17, t) = static_cast<Symbol>(rng.uniform_below(256));
  const Matrix a = code.encode(msg);
  const Matrix y = add(c.field(), a, e);
  for (std::size_t i = 0; i < 16; ++i) {
    EXPECT_EQ(syndrome_row(c, a, i), std::vector<Symbol>(3, 0));
    EXPECT_EQ(syndrome_row(c, y, i), syndrome_row(c, e, i));
  }
  OpCounters first;
  SyndromeStream stream(c, y, &first);
  stream.row(0);
  EXPECT_EQ(first.mul, 0u);
  OpCounters direct;
  syndrome_row(c, y, 0, &direct);
  EXPECT_EQ(direct.mul, 0u);
  // Streamed and direct rows agree.
  for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(stream.row(i), syndrome_row(c, y, i));
}

TEST(FindDependency, SpecExamples) {
  const FieldSpec& f = *gf5();
  auto d1 = find_dependency(f, rows_matrix({{1, 2}, {2, 4}, {4, 3}}), 3);
  ASSERT_TRUE(d1.has_value());
  EXPECT_EQ(d1->f_star, 1u);
  EXPECT_EQ(d1->lambda, (std::vector<Symbol>{2}));

  auto d2 = find_dependency(f, rows_matrix({{1, 1}, {1, 2}, {1, 4}}), 3);
  ASSERT_TRUE(d2.has_value());
  EXPECT_EQ(d2->f_star, 2u);
  EXPECT_EQ(d2->lambda, (std::vector<Symbol>{3, 3}));

  auto d0 = find_dependency(f, rows_matrix({{0, 0}, {1, 2}}), 2);
  ASSERT_TRUE(d0.has_value());
  EXPECT_EQ(d0->f_star, 0u);
  EXPECT_TRUE(d0->lambda.empty());

  EXPECT_FALSE(find_dependency(f, rows_matrix({{1, 0}, {0, 1}}), 2).has_value());
  EXPECT_FALSE(find_dependency(f, rows_matrix({{1, 1}, {1, 2}, {1, 4}}), 2).has_value());
}

TEST(ColumnEliminator, TrackerInvariantAndIdempotence) {
  const FieldSpec f(2, 8);
  SplitMix64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t width = 1 + rng.uniform_below(10);
    const std::size_t independent = 1 + rng.uniform_below(width);
    Matrix rows(independent + 1, width);
    for (std::size_t r = 0; r < independent; ++r) {
      for (std::size_t c = 0; c < width; ++c) rows(r, c) = static_cast<Symbol>(rng.uniform_below(256));
    }
    std::vector<Symbol> coeffs(independent);
    for (auto& x : coeffs) x = static_cast<Symbol>(rng.uniform_below(256));
    for (std::size_t r = 0; r < independent; ++r) {
      for (std::size_t c = 0; c < width; ++c) {
        rows(independent, c) = f.add(rows(independent, c), f.mul(coeffs[r], rows(r, c)));
      }
    }
    if (rank(f, rows.top_rows(independent)) != independent) continue;

    ColumnEliminator elim(f, width);
    for (std::size_t r = 0; r < independent; ++r) {
      ASSERT_FALSE(elim.absorb(rows.row(r)).has_value());
      // S_i * T = e_(pivot_i) for all absorbed rows.
      const Matrix reduced = elim.reduced();
      for (std::size_t i = 0; i <= r; ++i) {
        for (std::size_t c = 0; c < width; ++c) {
          ASSERT_EQ(reduced(i, c), c == elim.pivot_columns()[i] ? 1u : 0u);
        }
      }
      ASSERT_TRUE(invert(f, elim.transform()).has_value());
    }
    const auto lambda = elim.absorb(rows.row(independent));
    ASSERT_TRUE(lambda.has_value());
    EXPECT_EQ(*lambda, coeffs);
    EXPECT_THROW(elim.absorb(rows.row(0)), std::logic_error);

    // A second pass over the same rows stops at the same place.
    auto again = find_dependency(f, rows, rows.rows());
    ASSERT_TRUE(again.has_value());
    EXPECT_EQ(again->f_star, independent);
    EXPECT_EQ(again->lambda, coeffs);
  }
}

TEST(Locate, SpecExamples) {
  const GRSCode c = make_rs_star(gf5(), 2);
  EXPECT_EQ(locate_errors(c, ErrorLocator{{2}}), (std::vector<std::size_t>{2}));
  EXPECT_EQ(locate_errors(c, ErrorLocator{{3, 3}}), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(locate_errors(c, ErrorLocator{{0}}), (std::vector<std::size_t>{0}));
  // x^2 - 2 has no roots in GF(5).
  EXPECT_FALSE(locate_errors(c, ErrorLocator{{2, 0}}).has_value());
}

TEST(Reconstruct, SpecExamples) {
  const GRSCode c = make_rs_star(gf5(), 2);
  const std::vector<std::size_t> one{2};
  EXPECT_EQ(reconstruct_errors(c, Matrix{{1, 2}}, one), (Matrix{{1, 2}}));
  const std::vector<std::size_t> two{1, 2};
  EXPECT_EQ(reconstruct_errors(c, Matrix{{1, 1}, {1, 2}}, two), (Matrix{{1, 0}, {0, 1}}));
  EXPECT_EQ(reconstruct_errors(c, Matrix(2, 2), two), Matrix(2, 2));
}

TEST(FMax, Examples) {
  EXPECT_EQ(f_max(16, 17), 15u);
  EXPECT_EQ(f_max(9, 17), 9u);
  EXPECT_EQ(f_max(20, 5), 3u);
  EXPECT_THROW(f_max(0, 5), std::invalid_argument);
}

TEST(Decode, ToyEndToEnd) {
  const IRSCode code(make_rs_star(gf5(), 2), 2);
  const Matrix a = irs_encode(code, Matrix{{1, 2}, {1, 0}});
  Matrix e(5, 2);
  e(1, 0) = 1;
  e(2, 1) = 1;
  const Matrix y = add(*gf5(), a, e);
  const DecodeOutcome out = decode(code, y);
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(out.codeword, a);
  EXPECT_EQ(out.error_matrix, e);
  EXPECT_EQ(out.error_positions, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(out.f_star, 2u);
  EXPECT_EQ(out.counters.syndrome_rows, 3u);
}

TEST(Decode, CleanInputCostsNoMultiplications) {
  const IRSCode code(shorten(make_rs_star(FieldSpec::make(2, 8), 240), 52), 16);
  const DecodeOutcome out = decode(code, Matrix(204, 16));
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(out.f_star, 0u);
  EXPECT_EQ(out.counters.total().mul, 0u);
  EXPECT_EQ(out.counters.syndrome_rows, 1u);
}

TEST(Decode, BeyondRadiusIsDetected) {
  // d = 5 and l = 6, so the radius is d - 2 = 3 and four syndrome rows fit.
  const IRSCode code(make_rs_star(FieldSpec::make(2, 4), 12), 6);
  SplitMix64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix y(16, 6);
    do {
      for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t t = 0; t < 6; ++t) y(r * 3, t) = static_cast<Symbol>(rng.uniform_below(16));
      }
    } while (rank(code.inner().field(), y) < 4);
    const DecodeOutcome out = decode(code, y);
    EXPECT_FALSE(out.ok());
    EXPECT_EQ(out.reason, FailureReason::no_dependency);
    EXPECT_FALSE(out.f_star.has_value());
  }
}

TEST(Decode, ShapeErrors) {
  const IRSCode code(make_rs_star(gf5(), 2), 2);
  EXPECT_THROW(decode(code, Matrix(4, 2)), std::invalid_argument);
  EXPECT_THROW(decode(code, Matrix(5, 3)), std::invalid_argument);
  Matrix bad(5, 2);
  bad(0, 0) = 9;
  EXPECT_THROW(decode(code, bad), std::invalid_argument);
}

// Random independent error rows inside the radius must be corrected exactly.
void check_exactness(const IRSCode& code, int trials, std::uint64_t seed) {
  const GRSCode& c = code.inner();
  const FieldSpec& f = c.field();
  const std::size_t fm = f_max(code.l(), c.d());
  SplitMix64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const std::size_t nerr = 1 + rng.uniform_below(fm);
    std::vector<std::size_t> pos(c.n());
    for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
    for (std::size_t i = 0; i < nerr; ++i) std::swap(pos[i], pos[i + rng.uniform_below(c.n() - i)]);
    pos.resize(nerr);
    std::sort(pos.begin(), pos.end());
    Matrix e(c.n(), code.l());
    Matrix erows(nerr, code.l());
    do {
      for (std::size_t i = 0; i < nerr; ++i) {
        for (std::size_t t = 0; t < code.l(); ++t) {
          erows(i, t) = static_cast<Symbol>(rng.uniform_below(f.size()));
          e(pos[i], t) = erows(i, t);
        }
      }
    } while (rank(f, erows) != nerr);
    Matrix msg(c.k(), code.l());
    for (std::size_t r = 0; r < c.k(); ++r) {
      for (std::size_t t = 0; t < code.l(); ++t) msg(r, t) = static_cast<Symbol>(rng.uniform_below(f.size()));
    }
    const Matrix a = code.encode(msg);
    const DecodeOutcome out = decode(code, add(f, a, e), DecodeOptions{trial % 2 == 0});
    ASSERT_TRUE(out.ok()) << "trial " << trial << " f=" << nerr;
    ASSERT_EQ(out.f_star, nerr);
    ASSERT_EQ(out.error_positions, pos);
    ASSERT_EQ(out.error_matrix, e);
    ASSERT_EQ(out.codeword, a);
    ASSERT_EQ(out.counters.syndrome_rows, nerr + 1);

    // Reconstruction residual on the first f syndrome rows.
    Matrix head(nerr, code.l());
    for (std::size_t i = 0; i < nerr; ++i) {
      const auto s = syndrome_row(c, e, i);
      std::copy(s.begin(), s.end(), head.row(i).begin());
    }
    Matrix hf(nerr, nerr);
    for (std::size_t i = 0; i < nerr; ++i) {
      for (std::size_t j = 0; j < nerr; ++j) hf(i, j) = f.pow(c.locators()[pos[j]], c.parity_exponent(i));
    }
    ASSERT_EQ(multiply(f, hf, erows), head);
  }
}

TEST(Decode, ExactnessRsStar16) {
  SplitMix64 rng(99);
  for (int i = 0; i < 6; ++i) {
    const std::size_t k = 2 + rng.uniform_below(11);
    const std::size_t l = 1 + rng.uniform_below(8);
    check_exactness(IRSCode(make_rs_star(FieldSpec::make(2, 4), k), l), 60, 1000 + i);
  }
}

TEST(Decode, ExactnessDvb) {
  check_exactness(IRSCode(shorten(make_rs_star(FieldSpec::make(2, 8), 240), 52), 16), 60, 7);
}

TEST(Decode, ExactnessClassicalRs) {
  check_exactness(IRSCode(GRSCode::make_rs(FieldSpec::make(2, 4), 9), 5), 60, 8);
}

TEST(Decode, DependentErrorsNeverMiscorrectSilentlyUnderVerify) {
  const IRSCode code(make_rs_star(FieldSpec::make(2, 4), 8), 4);  // d = 9, f_max = 4
  const FieldSpec& f = code.inner().field();
  SplitMix64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t nerr = 2 + rng.uniform_below(3);
    Matrix e(16, 4);
    // Rows drawn from a random (nerr-1)-dimensional span.
    Matrix basis(nerr - 1, 4);
    for (auto r = 0u; r < nerr - 1; ++r) {
      for (std::size_t t = 0; t < 4; ++t) basis(r, t) = static_cast<Symbol>(rng.uniform_below(16));
    }
    std::set<std::size_t> pos;
    while (pos.size() < nerr) pos.insert(rng.uniform_below(16));
    for (auto p : pos) {
      do {
        for (std::size_t t = 0; t < 4; ++t) e(p, t) = 0;
        for (auto r = 0u; r < nerr - 1; ++r) {
          const auto c = static_cast<Symbol>(rng.uniform_below(16));
          for (std::size_t t = 0; t < 4; ++t) e(p, t) = f.add(e(p, t), f.mul(c, basis(r, t)));
        }
      } while (e.row_is_zero(p));
    }
    const DecodeOutcome out = decode(code, e, DecodeOptions{true});
    if (!out.ok()) continue;
    ASSERT_TRUE(code.is_codeword(out.codeword));
    std::size_t distance = 0;
    for (std::size_t r = 0; r < 16; ++r) distance += out.error_matrix.row_is_zero(r) ? 0 : 1;
    ASSERT_EQ(distance, *out.f_star);
    ASSERT_EQ(add(f, out.codeword, out.error_matrix), e);
  }
}

TEST(Decode, EliminationCostGrowsQuadratically) {
  const IRSCode code(shorten(make_rs_star(FieldSpec::make(2, 8), 240), 52), 16);
  SplitMix64 rng(31);
  auto cost = [&](std::size_t f) {
    std::uint64_t total = 0;
    for (int trial = 0; trial < 20; ++trial) {
      Matrix y(204, 16);
      for (std::size_t i = 0; i < f; ++i) {
        for (std::size_t t = 0; t < 16; ++t) y(i * 11, t) = static_cast<Symbol>(rng.uniform_below(256));
      }
      total += decode(code, y).counters.elimination.mul;
    }
    return static_cast<double>(total);
  };
  const double ratio = cost(8) / cost(4);
  EXPECT_GE(ratio, 2.0);
  EXPECT_LE(ratio, 8.0);
}

TEST(Decode, ToyExhaustiveCodewordCheck) {
  const IRSCode code(make_rs_star(gf5(), 2), 2);
  const FieldSpec& f = *gf5();
  std::set<std::vector<Symbol>> codewords;
  for (Symbol a = 0; a < 625; ++a) {
    codewords.insert(code.encode(Matrix{{a % 5, a / 5 % 5}, {a / 25 % 5, a / 125}}).data());
  }
  ASSERT_EQ(codewords.size(), 625u);
  SplitMix64 rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    Matrix msg(2, 2);
    for (auto r = 0u; r < 2; ++r) {
      for (auto t = 0u; t < 2; ++t) msg(r, t) = static_cast<Symbol>(rng.uniform_below(5));
    }
    Matrix y = code.encode(msg);
    const std::size_t nerr = rng.uniform_below(4);
    std::set<std::size_t> pos;
    while (pos.size() < nerr) pos.insert(rng.uniform_below(5));
    for (auto p : pos) {
      for (auto t = 0u; t < 2; ++t) y(p, t) = f.add(y(p, t), static_cast<Symbol>(rng.uniform_below(5)));
    }
    const DecodeOutcome out = decode(code, y, DecodeOptions{true});
    if (!out.ok()) continue;
    ASSERT_TRUE(codewords.count(out.codeword.data()));
    std::size_t distance = 0;
    for (auto r = 0u; r < 5; ++r) {
      distance += std::equal(out.codeword.row(r).begin(), out.codeword.row(r).end(), y.row(r).begin()) ? 0 : 1;
    }
    ASSERT_EQ(distance, *out.f_star);
  }
}

}  // namespace
}  // namespace irscollab
