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

#include "irscollab/linalg.hpp"
#include "irscollab/rng.hpp"

namespace irscollab {
namespace {

Matrix random_matrix(std::size_t r, std::size_t c, const FieldSpec& f, SplitMix64& rng) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Symbol>(rng.uniform_below(f.size()));
  }
  return m;
}

TEST(Matrix, Basics) {
  Matrix m{{1, 2, 3}, {4, 5, 6}};
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 3u);
  EXPECT_EQ(m.transpose()(2, 1), 6u);
  EXPECT_EQ(m.column(1), (std::vector<Symbol>{2, 5}));
  EXPECT_EQ(m.top_rows(1), (Matrix{{1, 2, 3}}));
  EXPECT_THROW(m.top_rows(3), std::out_of_range);
  EXPECT_THROW((Matrix{{1, 2}, {3}}), std::invalid_argument);
  Matrix grown;
  const std::vector<Symbol> row{7, 8};
  grown.append_row(row);
  grown.append_row(row);
  EXPECT_EQ(grown, (Matrix{{7, 8}, {7, 8}}));
  EXPECT_TRUE(Matrix(2, 2).is_zero());
}

TEST(Linalg, RowReduceAndKernel) {
  const FieldSpec f(5, 1);
  const Matrix a{{1, 2, 3}, {2, 4, 2}};
  const Echelon e = row_reduce(f, a);
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_EQ(e.pivot_cols, (std::vector<std::size_t>{0, 2}));
  const auto kernel = kernel_basis(f, a);
  ASSERT_EQ(kernel.size(), 1u);
  Matrix x(3, 1);
  x.set_column(0, kernel[0]);
  EXPECT_TRUE(multiply(f, a, x).is_zero());
  EXPECT_EQ(kernel[0][1], 1u);
}

TEST(Linalg, SolveAndInvert) {
  const FieldSpec f(2, 8);
  SplitMix64 rng(11);
  int solved = 0;
  for (int i = 0; i < 100; ++i) {
    const Matrix a = random_matrix(5, 5, f, rng);
    const Matrix b = random_matrix(5, 3, f, rng);
    const auto x = solve_unique(f, a, b);
    if (rank(f, a) < 5) {
      EXPECT_FALSE(x.has_value());
      continue;
    }
    ++solved;
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(multiply(f, a, *x), b);
    const auto inv = invert(f, a);
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(multiply(f, a, *inv), Matrix::identity(5));
  }
  EXPECT_GT(solved, 90);
}

TEST(Linalg, OverdeterminedConsistency) {
  const FieldSpec f(5, 1);
  const Matrix a{{1, 0}, {0, 1}, {1, 1}};
  EXPECT_TRUE(solve_unique(f, a, Matrix{{1}, {2}, {3}}).has_value());
  EXPECT_FALSE(solve_unique(f, a, Matrix{{1}, {2}, {4}}).has_value());
}

}  // namespace
}  // namespace irscollab
