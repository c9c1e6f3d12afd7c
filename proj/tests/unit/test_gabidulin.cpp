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

#include <set>

#include "irscollab/analysis.hpp"
#include "irscollab/gabidulin.hpp"
#include "irscollab/rng.hpp"

namespace irscollab {
namespace {

std::vector<Symbol> poly_basis(std::uint32_t q, std::size_t n) {
  std::vector<Symbol> g;
  Symbol beta = 1;
  for (std::size_t i = 0; i < n; ++i, beta *= q) g.push_back(beta);
  return g;
}

Matrix random_matrix(std::size_t r, std::size_t c, const FieldSpec& f, SplitMix64& rng) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Symbol>(rng.uniform_below(f.size()));
  }
  return m;
}

TEST(GabMake, Examples) {
  const TowerSpec t = TowerSpec::make(2, 4);
  const GabidulinCode c = gab_make(t, 4, 1, {1, 2, 4, 8});
  EXPECT_EQ(c.d(), 4u);
  EXPECT_THROW(gab_make(t, 4, 1, {1, 2, 2, 8}), std::invalid_argument);
  EXPECT_THROW(gab_make(t, 4, 1, {1, 2, 4, 6}), std::invalid_argument);  // 6 = 2 + 4
  EXPECT_THROW(gab_make(t, 5, 1, {1, 2, 4, 8, 3}), std::invalid_argument);
  EXPECT_THROW(gab_make(t, 4, 4, {1, 2, 4, 8}), std::invalid_argument);
}

TEST(GabMake, ParityOrthogonality) {
  for (auto [q, m, n, k] : {std::tuple{2u, 4u, 4u, 1u}, std::tuple{2u, 5u, 5u, 2u},
                            std::tuple{2u, 8u, 8u, 4u}, std::tuple{3u, 4u, 3u, 2u},
                            std::tuple{2u, 6u, 4u, 2u}}) {
    const TowerSpec t = TowerSpec::make(q, m);
    const GabidulinCode c = gab_make(t, n, k, poly_basis(q, n));
    const FieldSpec& f = t.ext();
    // Every h^[r] against every g^[i], computed by direct sums.
    for (std::size_t r = 0; r + 1 < c.d(); ++r) {
      for (std::size_t i = 0; i < k; ++i) {
        Symbol acc = 0;
        for (std::size_t j = 0; j < n; ++j) {
          acc = f.add(acc, f.mul(t.frobenius(c.h()[j], r), t.frobenius(c.g()[j], i)));
        }
        ASSERT_EQ(acc, 0u);
      }
    }
    Matrix hcol(n, 1);
    hcol.set_column(0, c.h());
    EXPECT_EQ(rank_q(hcol, t), n);
  }
}

TEST(GabEncode, Examples) {
  const TowerSpec t = TowerSpec::make(2, 4);
  const GabidulinCode c = gab_make(t, 4, 1, {1, 2, 4, 8});
  EXPECT_EQ(gab_encode(c, Matrix{{2}}).column(0), (std::vector<Symbol>{2, 4, 8, 3}));
  EXPECT_TRUE(gab_encode(c, Matrix(1, 3)).is_zero());
  EXPECT_EQ(gab_encode(c, Matrix{{1}}).column(0), c.g());
  EXPECT_THROW(gab_encode(c, Matrix(2, 1)), std::invalid_argument);
}

TEST(GabSyndromes, Properties) {
  const TowerSpec t = TowerSpec::make(2, 4);
  const GabidulinCode c = gab_make(t, 4, 1, {1, 2, 4, 8});
  SplitMix64 rng(3);
  const Matrix a = gab_encode(c, random_matrix(1, 3, t.ext(), rng));
  EXPECT_TRUE(gab_syndromes(c, a).is_zero());

  // Rank-one error a * b with b over GF(2).
  Matrix e(4, 3);
  const Symbol value = 11;
  const std::vector<std::vector<Symbol>> b{{1, 0, 1}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}};
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t tt = 0; tt < 3; ++tt) e(j, tt) = b[j][tt] ? value : 0;
  }
  const Matrix s = gab_syndromes(c, e);
  EXPECT_EQ(gab_syndromes(c, add(t.ext(), a, e)), s);
  EXPECT_EQ(s.rows(), 3u);
  EXPECT_EQ(rank_ext(psi_image(t, s, 3), t.ext()), 1u);
  EXPECT_EQ(gab_error_rank(t, e), 1u);
}

TEST(GabDependency, SpecExamples) {
  const TowerSpec t = TowerSpec::make(2, 3);
  const auto dep = gab_find_dependency(t, Matrix{{2, 1}, {3, 2}}, 2);
  ASSERT_TRUE(dep.has_value());
  EXPECT_EQ(dep->f_star, 1u);
  EXPECT_EQ(dep->lambda, (std::vector<Symbol>{2}));

  const auto zero = gab_find_dependency(t, Matrix{{0, 0}, {3, 2}}, 2);
  ASSERT_TRUE(zero.has_value());
  EXPECT_EQ(zero->f_star, 0u);
}

// Direct solve of S_(f+1) = sum_j lambda_j S_(f+1-j)^[j] for the lambdas.
std::optional<std::vector<Symbol>> direct_key_solve(const TowerSpec& t, const Matrix& s, std::size_t f) {
  Matrix a(s.cols(), f), b(s.cols(), 1);
  for (std::size_t col = 0; col < s.cols(); ++col) {
    for (std::size_t j = 1; j <= f; ++j) a(col, j - 1) = t.frobenius(s(f - j, col), static_cast<std::int64_t>(j));
    b(col, 0) = s(f, col);
  }
  auto x = solve_unique(t.ext(), a, b);
  if (!x) return std::nullopt;
  return x->column(0);
}

TEST(GabDependency, RecoversKnownLambdaAndMatchesDirectSolve) {
  for (auto [m, f, l] : {std::tuple{8u, 2u, 4u}, std::tuple{4u, 1u, 2u}, std::tuple{5u, 2u, 3u},
                         std::tuple{4u, 2u, 2u}}) {
    const TowerSpec t = TowerSpec::make(2, m);
    const FieldSpec& ext = t.ext();
    SplitMix64 rng(m * 100 + f * 10 + l);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
      Matrix s = random_matrix(f + 1, l, ext, rng);
      std::vector<Symbol> lambda(f);
      for (auto& x : lambda) x = static_cast<Symbol>(rng.uniform_below(ext.size()));
      for (std::size_t col = 0; col < l; ++col) {
        Symbol acc = 0;
        for (std::size_t j = 1; j <= f; ++j) {
          acc = ext.add(acc, ext.mul(lambda[j - 1], t.frobenius(s(f - j, col), static_cast<std::int64_t>(j))));
        }
        s(f, col) = acc;
      }
      if (rank_ext(psi_image(t, s, f), ext) < f) continue;
      ++checked;
      const auto dep = gab_find_dependency(t, s, f + 1);
      ASSERT_TRUE(dep.has_value());
      ASSERT_EQ(dep->f_star, f);
      ASSERT_EQ(dep->lambda, lambda);
      if (l >= f) {
        const auto direct = direct_key_solve(t, s, f);
        ASSERT_TRUE(direct.has_value());
        ASSERT_EQ(*direct, lambda);
      }
    }
    EXPECT_GT(checked, 50);
  }
}

TEST(ErrorSpan, SpecExamples) {
  const TowerSpec t = TowerSpec::make(2, 4);
  EXPECT_EQ(error_span_roots(t, LinearizedPoly{{2}}), (std::vector<Symbol>{2}));
  EXPECT_EQ(error_span_roots(t, LinearizedPoly{{1, 0}}), (std::vector<Symbol>{1, 6}));
  // x^4 = x inside GF(8) only holds on GF(2).
  EXPECT_FALSE(error_span_roots(TowerSpec::make(2, 3), LinearizedPoly{{1, 0}}).has_value());
}

TEST(ErrorSpan, RootSpacesAreClosed) {
  for (auto [q, m] : {std::pair{2u, 4u}, std::pair{2u, 5u}, std::pair{3u, 3u}}) {
    const TowerSpec t = TowerSpec::make(q, m);
    const FieldSpec& f = t.ext();
    SplitMix64 rng(q * m);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t deg = 1 + rng.uniform_below(3);
      LinearizedPoly poly;
      for (std::size_t j = 0; j < deg; ++j) poly.coeffs.push_back(static_cast<Symbol>(rng.uniform_below(f.size())));
      std::set<Symbol> roots;
      for (Symbol x = 0; x < f.size(); ++x) {
        if (poly.evaluate(t, x) == 0) roots.insert(x);
      }
      for (auto a : roots) {
        for (auto b : roots) ASSERT_TRUE(roots.count(f.add(a, b)));
        for (Symbol c = 0; c < q; ++c) ASSERT_TRUE(roots.count(f.mul(c, a)));
      }
      std::size_t dim = 0;
      for (std::size_t size = 1; size < roots.size(); size *= q) ++dim;
      const auto basis = error_span_roots(t, poly);
      ASSERT_EQ(basis.has_value(), dim == deg);
      if (basis) {
        for (auto b : *basis) ASSERT_TRUE(roots.count(b));
        Matrix col(basis->size(), 1);
        col.set_column(0, *basis);
        ASSERT_EQ(rank_q(col, t), deg);
      }
    }
  }
}

TEST(ErrorSpan, KeyEquationPolynomialVanishesOnErrorValues) {
  const TowerSpec t = TowerSpec::make(2, 6);
  const GabidulinCode c = gab_make(t, 6, 2, poly_basis(2, 6));  // d = 5
  SplitMix64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix e = sample_span_error(6, 3, 2, t, rng);
    const Matrix s = gab_syndromes(c, e);
    const auto dep = gab_find_dependency(t, s, 3);
    if (!dep || dep->f_star != 2) continue;
    const auto poly = LinearizedPoly::from_key_equation(t.ext(), dep->lambda);
    ASSERT_TRUE(poly.has_value());
    for (auto x : e.data()) ASSERT_EQ(poly->evaluate(t, x), 0u);
  }
  EXPECT_FALSE(LinearizedPoly::from_key_equation(t.ext(), {3, 0}).has_value());
}

TEST(GabReconstruct, ZeroAndRoundTrip) {
  const TowerSpec t = TowerSpec::make(2, 4);
  const GabidulinCode c = gab_make(t, 4, 1, {1, 2, 4, 8});
  EXPECT_EQ(gab_reconstruct(c, Matrix(1, 3), {5}), std::nullopt);
  EXPECT_EQ(gab_reconstruct(c, Matrix(2, 3), {}), Matrix(4, 3));

  SplitMix64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix e = sample_span_error(4, 3, 1, t, rng);
    const Matrix s = gab_syndromes(c, e);
    Symbol value = 0;
    for (auto x : e.data()) value = std::max(value, x);
    const auto got = gab_reconstruct(c, s, {value});
    ASSERT_TRUE(got.has_value());
    ASSERT_EQ(*got, e);
  }
}

TEST(GabDecode, Examples) {
  const TowerSpec t = TowerSpec::make(2, 4);
  const GabidulinCode c = gab_make(t, 4, 1, {1, 2, 4, 8});
  SplitMix64 rng(6);
  const Matrix a = gab_encode(c, random_matrix(1, 3, t.ext(), rng));
  const auto clean = gab_decode(c, 3, a);
  ASSERT_TRUE(clean.ok());
  EXPECT_EQ(clean.f_star, 0u);
  EXPECT_EQ(clean.codeword, a);

  for (int trial = 0; trial < 100; ++trial) {
    const Matrix e = sample_span_error(4, 3, 1, t, rng);
    const auto out = gab_decode(c, 3, add(t.ext(), a, e), DecodeOptions{true});
    ASSERT_TRUE(out.ok());
    ASSERT_EQ(out.codeword, a);
    ASSERT_EQ(out.error_matrix, e);
    ASSERT_EQ(out.counters.syndrome_rows, 2u);
  }

  int detected = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix e = sample_span_error(4, 3, 3, t, rng);
    const auto out = gab_decode(c, 3, add(t.ext(), a, e), DecodeOptions{true});
    ASSERT_FALSE(out.ok() && out.codeword == a);
    if (!out.ok()) ++detected;
  }
  EXPECT_GT(detected, 50);
  EXPECT_THROW(gab_decode(c, 2, a), std::invalid_argument);
}

TEST(GabDecode, RankTwoAtLengthFive) {
  const TowerSpec t = TowerSpec::make(2, 5);
  const GabidulinCode c = gab_make(t, 5, 2, poly_basis(2, 5));  // d = 4, radius 2
  SplitMix64 rng(19);
  int exact = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix a = gab_encode(c, random_matrix(2, 3, t.ext(), rng));
    const Matrix e = sample_span_error(5, 3, 2, t, rng);
    const auto out = gab_decode(c, 3, add(t.ext(), a, e));
    const bool full_rank = rank_ext(psi_image(t, gab_syndromes(c, e), 2), t.ext()) == 2;
    if (full_rank) {
      ASSERT_TRUE(out.ok());
      ASSERT_EQ(out.codeword, a);
      ASSERT_EQ(gab_error_rank(t, out.error_matrix), 2u);
      ++exact;
    } else {
      ASSERT_FALSE(out.ok() && out.codeword == a);
    }
  }
  EXPECT_GT(exact, 150);
}

}  // namespace
}  // namespace irscollab
