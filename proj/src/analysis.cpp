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

#include "irscollab/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "irscollab/irs_collab.hpp"

namespace irscollab {

// --- exact numbers ----------------------------------------------------------

Rational parse_decimal(std::string_view text) {
  auto bad = [&]() { return std::invalid_argument("not a decimal number: " + std::string(text)); };
  if (text.empty()) throw bad();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_decimal(text.substr(0, slash));
    const Rational den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw bad();
    return num / den;
  }
  std::size_t i = 0;
  bool minus = false;
  if (text[0] == '+' || text[0] == '-') minus = text[i++] == '-';
  BigInt mantissa = 0;
  long long scale = 0;
  bool any_digit = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    mantissa = mantissa * 10 + (text[i++] - '0');
    any_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      mantissa = mantissa * 10 + (text[i++] - '0');
      --scale;
      any_digit = true;
    }
  }
  if (!any_digit) throw bad();
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
    long long exponent = 0;
    bool exp_digit = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      exponent = exponent * 10 + (text[i++] - '0');
      exp_digit = true;
      if (exponent > 100000) throw bad();
    }
    if (!exp_digit) throw bad();
    scale += negative ? -exponent : exponent;
  }
  if (i != text.size()) throw bad();
  const BigInt ten_power = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::llabs(scale)));
  if (minus) mantissa = -mantissa;
  if (scale >= 0) return Rational(mantissa * ten_power);
  return Rational(mantissa, ten_power);
}

std::string to_decimal(const Rational& x, int digits) {
  const Real value = Real(boost::multiprecision::numerator(x)) /
                     Real(boost::multiprecision::denominator(x));
  return value.str(digits);
}

double to_double(const Rational& x) {
  const Real value = Real(boost::multiprecision::numerator(x)) /
                     Real(boost::multiprecision::denominator(x));
  return value.convert_to<double>();
}

namespace {

BigInt big_pow(std::uint64_t base, std::size_t exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

std::size_t radius(std::size_t l, std::size_t d) { return d >= 2 ? std::min(l, d - 2) : 0; }

}  // namespace

Rational p_fail_bound_irs(std::size_t f, std::size_t l, std::uint64_t q, std::size_t d) {
  if (f < 2) return 0;
  if (f > radius(l, d)) return 1;
  return Rational(BigInt(1), big_pow(q, l + 1 - f));
}

Rational p_dep_exact(std::size_t f, std::size_t l, std::uint64_t q) {
  if (f <= 1) return 0;
  if (f > l) return 1;
  const BigInt ql = big_pow(q, l);
  Rational independent = 1;
  for (std::size_t i = 1; i < f; ++i) independent *= Rational(ql - big_pow(q, i), ql - 1);
  return 1 - independent;
}

Rational p_dep_clipped(std::size_t f, std::size_t l, std::uint64_t q, std::size_t d) {
  if (f > radius(l, d)) return 1;
  return p_dep_exact(f, l, q);
}

Rational p_fail_bound_gab(std::size_t f, std::size_t l, std::uint64_t q, std::size_t m,
                          std::size_t d) {
  if (f < 2) return 0;
  if (f > radius(l, d)) return 1;
  const Rational bound(BigInt(4), big_pow(q, m * (l + 1 - f)));
  return bound > 1 ? Rational(1) : bound;
}

namespace {

Rational binomial_mixture(const Rational& p, std::size_t n_rows,
                          const std::function<Rational(std::size_t)>& weight) {
  if (p < 0 || p > 1) throw std::invalid_argument("probability outside [0, 1]");
  if (n_rows < 2) throw std::invalid_argument("need at least two rows");
  const BigInt a = boost::multiprecision::numerator(p);
  const BigInt b = boost::multiprecision::denominator(p);
  const BigInt c = b - a;
  std::vector<BigInt> a_pow(n_rows + 1, 1), c_pow(n_rows + 1, 1);
  for (std::size_t t = 1; t <= n_rows; ++t) {
    a_pow[t] = a_pow[t - 1] * a;
    c_pow[t] = c_pow[t - 1] * c;
  }
  BigInt binom = 1;  // C(N, t)
  Rational sum = 0;
  for (std::size_t t = 0; t <= n_rows; ++t) {
    if (t > 0) binom = binom * (n_rows - t + 1) / t;
    if (t < 2 || a_pow[t] == 0) continue;
    const Rational w = weight(t);
    if (w == 0) continue;
    sum += w * Rational(binom * a_pow[t] * c_pow[n_rows - t]);
  }
  return sum / Rational(boost::multiprecision::pow(b, static_cast<unsigned>(n_rows)));
}

}  // namespace

Rational fer_bound(const Rational& p, std::size_t n_rows, std::size_t l, std::uint64_t q,
                   std::size_t d) {
  return binomial_mixture(p, n_rows,
                          [&](std::size_t t) { return p_fail_bound_irs(t, l, q, d); });
}

Rational fer_exact(const Rational& p, std::size_t n_rows, std::size_t l, std::uint64_t q,
                   std::size_t d) {
  return binomial_mixture(p, n_rows, [&](std::size_t t) { return p_dep_clipped(t, l, q, d); });
}

Interval wilson_interval(std::uint64_t hits, std::uint64_t trials, double z) {
  if (trials == 0) return {};
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

Rational FailureEstimate::estimate() const {
  if (trials == 0) return 0;
  return Rational(BigInt(unsuccessful()), BigInt(trials));
}

double FailureEstimate::estimate_value() const { return to_double(estimate()); }

Interval FailureEstimate::wilson_ci(double z) const {
  return wilson_interval(unsuccessful(), trials, z);
}

// --- Monte Carlo ------------------------------------------------------------

namespace {

enum class Outcome { exact, failure, miscorrection };

struct TrialResult {
  Outcome outcome = Outcome::exact;
  bool mismatch = false;
};

FailureEstimate run_trials(std::uint64_t trials, const MonteCarloOptions& options,
                           const std::function<TrialResult(SplitMix64&)>& body) {
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(trials, 1)));

  std::vector<FailureEstimate> partial(threads);
  std::vector<std::exception_ptr> errors(threads);
  auto worker = [&](unsigned id) {
    try {
      FailureEstimate& acc = partial[id];
      for (std::uint64_t i = id; i < trials; i += threads) {
        SplitMix64 rng(trial_seed(options.seed, i));
        const TrialResult r = body(rng);
        ++acc.trials;
        if (r.outcome == Outcome::failure) ++acc.failures;
        if (r.outcome == Outcome::miscorrection) ++acc.miscorrections;
        if (r.mismatch) ++acc.criterion_mismatches;
      }
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  FailureEstimate total;
  total.seed = options.seed;
  for (const auto& p : partial) {
    total.trials += p.trials;
    total.failures += p.failures;
    total.miscorrections += p.miscorrections;
    total.criterion_mismatches += p.criterion_mismatches;
  }
  return total;
}

void fill_nonzero_row(std::span<Symbol> row, std::uint64_t alphabet, SplitMix64& rng) {
  bool nonzero = false;
  while (!nonzero) {
    for (auto& x : row) {
      x = static_cast<Symbol>(rng.uniform_below(alphabet));
      nonzero = nonzero || x != 0;
    }
  }
}

template <typename Outcome_>
Outcome classify(const Outcome_& out) {
  if (!out.ok()) return Outcome::failure;
  return out.codeword.is_zero() ? Outcome::exact : Outcome::miscorrection;
}

Matrix random_full_rank(std::size_t rows, std::size_t cols, const FieldSpec& f,
                        SplitMix64& rng) {
  Matrix m(rows, cols);
  do {
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<Symbol>(rng.uniform_below(f.size()));
    }
  } while (rank(f, m) != std::min(rows, cols));
  return m;
}

}  // namespace

FailureEstimate mc_irs_failure(const IRSCode& code, std::size_t f, std::uint64_t trials,
                               const MonteCarloOptions& options) {
  const GRSCode& inner = code.inner();
  if (f > inner.n()) throw std::invalid_argument("more error rows than code positions");
  const std::uint64_t alphabet = options.prime_subfield_errors
                                     ? inner.field().characteristic()
                                     : inner.field().size();
  const DecodeOptions decode_options{options.verify};
  return run_trials(trials, options, [&](SplitMix64& rng) {
    std::vector<std::size_t> idx(inner.n());
    std::iota(idx.begin(), idx.end(), 0);
    Matrix y(inner.n(), code.l());
    for (std::size_t i = 0; i < f; ++i) {
      const auto pick = i + rng.uniform_below(inner.n() - i);
      std::swap(idx[i], idx[pick]);
      fill_nonzero_row(y.row(idx[i]), alphabet, rng);
    }
    return TrialResult{classify(decode(code, y, decode_options))};
  });
}

Matrix sample_rank_f(std::size_t n, std::size_t l, std::size_t f, const TowerSpec& tower,
                     SplitMix64& rng) {
  const std::size_t m = tower.m();
  if (f > std::min(n, l * m)) throw std::invalid_argument("rank exceeds matrix dimensions");
  Matrix out(n, l);
  if (f == 0) return out;
  const FieldSpec& base = tower.base();
  const Matrix x = random_full_rank(n, f, base, rng);
  const Matrix z = random_full_rank(f, l * m, base, rng);
  const Matrix prod = multiply(base, x, z);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t t = 0; t < l; ++t) {
      out(r, t) = tower.fold(prod.row(r).subspan(t * m, m));
    }
  }
  if (rank_q(out, tower) != f) throw std::logic_error("sampled matrix has the wrong rank");
  return out;
}

Matrix sample_span_error(std::size_t n, std::size_t l, std::size_t f, const TowerSpec& tower,
                         SplitMix64& rng) {
  const Matrix flat = sample_rank_f(n * l, 1, f, tower, rng);
  Matrix out(n, l);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t t = 0; t < l; ++t) out(r, t) = flat(r * l + t, 0);
  }
  return out;
}

FailureEstimate mc_gab_failure(const GabidulinCode& code, std::size_t l, std::size_t f,
                               std::uint64_t trials, const MonteCarloOptions& options) {
  const TowerSpec& tw = code.tower();
  const DecodeOptions decode_options{options.verify};
  const bool in_radius = f <= f_max(l, code.d());
  return run_trials(trials, options, [&](SplitMix64& rng) {
    const Matrix e = sample_span_error(code.n(), l, f, tw, rng);
    const auto out = gab_decode(code, l, e, decode_options);
    TrialResult r{classify(out)};
    bool predicted = in_radius;
    if (predicted && f > 0) {
      predicted = rank_ext(psi_image(tw, gab_syndromes(code, e), f), tw.ext()) == f;
    }
    r.mismatch = predicted != (r.outcome == Outcome::exact);
    return r;
  });
}

FailureEstimate concat_channel_sim(const IRSCode& code, const Rational& p, std::uint64_t trials,
                                   const MonteCarloOptions& options) {
  if (p < 0 || p > 1) throw std::invalid_argument("probability outside [0, 1]");
  const BigInt num = boost::multiprecision::numerator(p);
  const BigInt den = boost::multiprecision::denominator(p);
  if (den > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw std::invalid_argument("probability denominator exceeds 64 bits");
  }
  const auto a = num.convert_to<std::uint64_t>();
  const auto b = den.convert_to<std::uint64_t>();
  const GRSCode& inner = code.inner();
  const DecodeOptions decode_options{options.verify};
  return run_trials(trials, options, [&](SplitMix64& rng) {
    Matrix y(inner.n(), code.l());
    for (std::size_t r = 0; r < inner.n(); ++r) {
      if (rng.bernoulli(a, b)) fill_nonzero_row(y.row(r), inner.field().size(), rng);
    }
    return TrialResult{classify(decode(code, y, decode_options))};
  });
}

}  // namespace irscollab
