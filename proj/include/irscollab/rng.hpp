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
 * @file rng.hpp
 * @brief SplitMix64 and the per-trial seeding used by every Monte Carlo run.
 *
 * Trial i of a run with master seed s draws from SplitMix64(trial_seed(s, i)),
 * so results do not depend on how trials are scheduled across threads.
 */

#pragma once

#include <cstdint>

namespace irscollab {

/// SplitMix64 output finalizer.
std::uint64_t mix64(std::uint64_t z) noexcept;

/// Seed of trial index under a master seed.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) noexcept;

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;
  /// Uniform in [0, bound) by rejection. @throws std::invalid_argument for bound 0
  std::uint64_t uniform_below(std::uint64_t bound);
  /// True with probability numerator / denominator.
  bool bernoulli(std::uint64_t numerator, std::uint64_t denominator);

 private:
  std::uint64_t state_;
};

}  // namespace irscollab
