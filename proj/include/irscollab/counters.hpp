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

#pragma once

#include <cstdint>

namespace irscollab {

/// Field-operation tally. Additions and subtractions both count as add.
struct OpCounters {
  std::uint64_t mul = 0;
  std::uint64_t add = 0;

  OpCounters& operator+=(const OpCounters& o) noexcept {
    mul += o.mul;
    add += o.add;
    return *this;
  }
};

}  // namespace irscollab
