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
 * @file analysis.hpp
 * @brief Failure-probability bounds, exact dependence probabilities, frame
 * error rate sums and Monte Carlo estimators for both decoders.
 *
 * Bounds and sums are exact rationals; use to_decimal or to_double only for
 * output.
 */

#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>

#include "irscollab/gabidulin.hpp"
#include "irscollab/rng.hpp"
#include "irscollab/rs_codes.hpp"

namespace irscollab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using Real = boost::multiprecision::cpp_bin_float_50;

/// Exact value of a decimal literal such as "0.05" or "1e-3". @throws std::invalid_argument
Rational parse_decimal(std::string_view text);
/// General-format decimal with the given significant digits.
std::string to_decimal(const Rational& x, int digits = 20);
double to_double(const Rational& x);

/// 0 for f < 2, q^-(l+1-f) for 2 <= f <= f_max(l, d), else 1.
Rational p_fail_bound_irs(std::size_t f, std::size_t l, std::uint64_t q, std::size_t d);

/// Probability that f uniform nonzero vectors of GF(q)^l are linearly dependent.
Rational p_dep_exact(std::size_t f, std::size_t l, std::uint64_t q);

/// p_dep_exact inside the decoding radius, 1 beyond it.
Rational p_dep_clipped(std::size_t f, std::size_t l, std::uint64_t q, std::size_t d);

/// 0 for f < 2, min(1, 4 (q^m)^-(l+1-f)) for 2 <= f <= min(l, d-2), else 1.
Rational p_fail_bound_gab(std::size_t f, std::size_t l, std::uint64_t q, std::size_t m,
                          std::size_t d);

/**
 * sum_(t=2..N) C(N,t) P(t) p^t (1-p)^(N-t) with P = p_fail_bound_irs.
 * @throws std::invalid_argument when p is outside [0, 1] or N < 2
 */
Rational fer_bound(const Rational& p, std::size_t n_rows, std::size_t l, std::uint64_t q,
                   std::size_t d);
/// Same sum with P = p_dep_clipped.
Rational fer_exact(const Rational& p, std::size_t n_rows, std::size_t l, std::uint64_t q,
                   std::size_t d);

struct Interval {
  double low = 0.0;
  double high = 1.0;

  bool contains(double x) const noexcept { return low <= x && x <= high; }
};

/// Wilson score interval for hits out of trials at normal quantile z.
Interval wilson_interval(std::uint64_t hits, std::uint64_t trials, double z = 1.96);

struct FailureEstimate {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;        // detected by the decoder
  std::uint64_t miscorrections = 0;  // reported success with a wrong codeword
  std::uint64_t criterion_mismatches = 0;  // Gabidulin runs only
  std::uint64_t seed = 0;

  std::uint64_t unsuccessful() const noexcept { return failures + miscorrections; }
  /// (failures + miscorrections) / trials.
  Rational estimate() const;
  double estimate_value() const;
  /// 95% Wilson interval of estimate().
  Interval wilson_ci(double z = 1.96) const;
};

struct MonteCarloOptions {
  std::uint64_t seed = 0;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Passed to the decoder.
  bool verify = false;
  /// Draw error entries from the prime subfield instead of the whole field.
  bool prime_subfield_errors = false;
};

/// f distinct rows get uniform nonzero error vectors; the codeword is zero.
FailureEstimate mc_irs_failure(const IRSCode& code, std::size_t f, std::uint64_t trials,
                               const MonteCarloOptions& options = {});

/**
 * Uniform n x l matrix over GF(q^m) whose n x (l m) expansion over GF(q) has
 * rank f, as X Z with X n x f and Z f x (l m) of full rank over GF(q).
 */
Matrix sample_rank_f(std::size_t n, std::size_t l, std::size_t f, const TowerSpec& tower,
                     SplitMix64& rng);

/**
 * Uniform n x l error whose entries span an f-dimensional GF(q)-subspace;
 * this is sample_rank_f on n l entries, reshaped.
 */
Matrix sample_span_error(std::size_t n, std::size_t l, std::size_t f, const TowerSpec& tower,
                         SplitMix64& rng);

/**
 * Value-side rank-f errors through gab_decode. Each trial is also checked
 * against the full-rank test of psi_image; disagreements land in
 * criterion_mismatches.
 */
FailureEstimate mc_gab_failure(const GabidulinCode& code, std::size_t l, std::size_t f,
                               std::uint64_t trials, const MonteCarloOptions& options = {});

/// Every row independently erroneous with probability p.
FailureEstimate concat_channel_sim(const IRSCode& code, const Rational& p, std::uint64_t trials,
                                   const MonteCarloOptions& options = {});

}  // namespace irscollab
