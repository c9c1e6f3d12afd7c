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
 * @file spec_json.hpp
 * @brief JSON descriptors for fields, interleaved RS codes and Gabidulin codes.
 *
 * Field: {"p", "e", "modulus"?, "alpha"?}.
 * IRS code: {"field", "n", "k", "flavor", "shorten"?, "l"?}; n and k describe
 * the final (possibly shortened) code.
 * Gabidulin code: {"q", "m", "n", "k", "g"?, "l"?}; g defaults to the
 * polynomial basis 1, x, ..., x^(n-1).
 */

#pragma once

#include <stdexcept>

#include "irscollab/gabidulin.hpp"
#include "irscollab/rs_codes.hpp"
#include "json.hpp"

namespace irscollab {

/// Invalid descriptor contents.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json field_to_json(const FieldSpec& field);
FieldPtr field_from_json(const nlohmann::json& j);

nlohmann::json code_to_json(const IRSCode& code);
IRSCode code_from_json(const nlohmann::json& j);

struct GabidulinSetup {
  GabidulinCode code;
  std::size_t l;
};

nlohmann::json gabidulin_to_json(const GabidulinCode& code, std::size_t l);
GabidulinSetup gabidulin_from_json(const nlohmann::json& j);

/// Gabidulin descriptors carry "m" at top level.
bool is_gabidulin_spec(const nlohmann::json& j);

}  // namespace irscollab
