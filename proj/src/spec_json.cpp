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

#include "irscollab/spec_json.hpp"

namespace irscollab {

using nlohmann::json;

namespace {

template <typename T>
T get_required(const json& j, const char* key) {
  if (!j.contains(key)) throw SpecError(std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw SpecError(std::string("bad value for '") + key + "'");
  }
}

template <typename T>
T get_optional(const json& j, const char* key, T fallback) {
  return j.contains(key) ? get_required<T>(j, key) : fallback;
}

template <typename Fn>
auto wrap(Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const SpecError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  } catch (const std::out_of_range& e) {
    throw SpecError(e.what());
  }
}

}  // namespace

json field_to_json(const FieldSpec& field) {
  return {{"p", field.characteristic()},
          {"e", field.degree()},
          {"modulus", field.modulus()},
          {"alpha", field.primitive_element()}};
}

FieldPtr field_from_json(const json& j) {
  if (!j.is_object()) throw SpecError("field descriptor must be an object");
  const auto p = get_required<std::uint32_t>(j, "p");
  const auto e = get_optional<std::uint32_t>(j, "e", 1);
  const auto modulus = get_optional<std::vector<std::uint32_t>>(j, "modulus", {});
  std::optional<Symbol> alpha;
  if (j.contains("alpha")) alpha = get_required<Symbol>(j, "alpha");
  if (std::uint64_t size = 1; [&] {
        for (std::uint32_t i = 0; i < e; ++i) {
          size *= p;
          if (size > FieldSpec::kTableLimit) return true;
        }
        return false;
      }()) {
    throw SpecError("fields above 2^16 elements are not supported in descriptors");
  }
  return wrap([&] { return FieldSpec::make(p, e, modulus, alpha); });
}

json code_to_json(const IRSCode& code) {
  const GRSCode& inner = code.inner();
  json j = {{"field", field_to_json(inner.field())},
            {"n", inner.n()},
            {"k", inner.k()},
            {"flavor", std::string(to_string(inner.flavor()))},
            {"l", code.l()}};
  if (inner.shortened_by()) j["shorten"] = inner.shortened_by();
  if (inner.flavor() == CodeFlavor::generic) j["v"] = inner.locators();
  return j;
}

IRSCode code_from_json(const json& j) {
  if (!j.is_object()) throw SpecError("code descriptor must be an object");
  if (!j.contains("field")) throw SpecError("missing key 'field'");
  FieldPtr field = field_from_json(j.at("field"));
  const auto n = get_required<std::size_t>(j, "n");
  const auto k = get_required<std::size_t>(j, "k");
  const auto l = get_optional<std::size_t>(j, "l", 1);
  const auto flavor_name = get_optional<std::string>(j, "flavor", "rs_star");
  const auto flavor = parse_flavor(flavor_name);
  if (!flavor) throw SpecError("unknown flavor '" + flavor_name + "'");
  const std::size_t q = field->size();

  return wrap([&] {
    GRSCode inner = [&] {
      switch (*flavor) {
        case CodeFlavor::generic:
          return GRSCode::make_generic(field, get_required<std::vector<Symbol>>(j, "v"), k);
        case CodeFlavor::rs:
          return GRSCode::make_rs(field, k);
        case CodeFlavor::rs_star:
        case CodeFlavor::shortened_rs_star: {
          std::size_t s = get_optional<std::size_t>(j, "shorten", 0);
          if (*flavor == CodeFlavor::shortened_rs_star && !j.contains("shorten")) {
            if (n > q) throw SpecError("n exceeds field size");
            s = q - n;
          }
          return GRSCode::make_rs_star(field, k + s).shorten(s);
        }
      }
      throw SpecError("unknown flavor");
    }();
    if (inner.n() != n || inner.k() != k) {
      throw SpecError("descriptor n/k do not match the constructed code (" +
                      std::to_string(inner.n()) + "," + std::to_string(inner.k()) + ")");
    }
    return IRSCode(std::move(inner), l);
  });
}

json gabidulin_to_json(const GabidulinCode& code, std::size_t l) {
  return {{"q", code.tower().q()}, {"m", code.tower().m()}, {"n", code.n()},
          {"k", code.k()},         {"g", code.g()},         {"l", l}};
}

GabidulinSetup gabidulin_from_json(const json& j) {
  if (!j.is_object()) throw SpecError("code descriptor must be an object");
  const auto q = get_required<std::uint32_t>(j, "q");
  const auto m = get_required<std::uint32_t>(j, "m");
  const auto n = get_required<std::size_t>(j, "n");
  const auto k = get_required<std::size_t>(j, "k");
  const auto l = get_optional<std::size_t>(j, "l", 1);
  return wrap([&] {
    TowerSpec tower = TowerSpec::make(q, m);
    std::vector<Symbol> g;
    if (j.contains("g")) {
      g = get_required<std::vector<Symbol>>(j, "g");
    } else {
      Symbol beta = 1;
      for (std::size_t i = 0; i < n; ++i, beta *= q) g.push_back(beta);
    }
    if (l < 1) throw SpecError("interleaving degree must be at least 1");
    return GabidulinSetup{GabidulinCode::make(std::move(tower), n, k, std::move(g)), l};
  });
}

bool is_gabidulin_spec(const json& j) { return j.is_object() && j.contains("m"); }

}  // namespace irscollab
