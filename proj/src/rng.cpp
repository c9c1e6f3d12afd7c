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

#include "irscollab/rng.hpp"

#include <limits>
#include <stdexcept>

namespace irscollab {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return mix64(master ^ mix64(index + kGamma));
}

std::uint64_t SplitMix64::next() noexcept {
  state_ += kGamma;
  return mix64(state_);
}

std::uint64_t SplitMix64::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty sampling range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t x = next();
  while (x > limit) x = next();
  return x % bound;
}

bool SplitMix64::bernoulli(std::uint64_t numerator, std::uint64_t denominator) {
  if (numerator > denominator) throw std::invalid_argument("probability above one");
  return uniform_below(denominator) < numerator;
}

}  // namespace irscollab
