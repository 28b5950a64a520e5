// Copyright 2026 The symlu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "symlu/cli.hpp"
#include "symlu/error.hpp"
#include "symlu/states.hpp"

namespace symlu::cli {

namespace {

using nlohmann::json;

constexpr double kMixtureTolerance = 1e-6;

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

Complex read_complex(const json& j, const char* field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  fail(std::string("'") + field + "' must be a number or a [re, im] pair");
}

std::size_t read_count(const json& j, const char* field) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    fail(std::string("'") + field + "' must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

PauliOperator from_pauli(std::size_t n, const json& terms) {
  if (!terms.is_object()) fail("'pauli' must be an object of index -> coefficient");
  PauliOperator rho(n);
  for (const auto& [key, value] : terms.items()) {
    if (key.size() != n) fail("index '" + key + "' does not have length " + std::to_string(n));
    if (!value.is_number()) fail("coefficient of '" + key + "' is not a number");
    try {
      rho.add(PauliIndex::parse(key), value.get<double>());
    } catch (const Error& e) {
      fail("bad index '" + key + "': " + e.what());
    }
  }
  return rho;
}

NamedStateSpec read_preset(std::size_t n, const json& p) {
  if (!p.is_object() || !p.contains("kind") || !p["kind"].is_string()) {
    fail("'preset' must be an object with a string 'kind'");
  }
  NamedStateSpec spec;
  spec.kind = p["kind"].get<std::string>();
  spec.n = n;
  for (const auto& [key, value] : p.items()) {
    if (key == "kind") continue;
    if (key == "n") {
      if (read_count(value, "n") != n) fail("preset 'n' disagrees with the document 'n'");
    } else if (key == "k") {
      spec.k = read_count(value, "k");
    } else if (key == "a" || key == "d") {
      if (!value.is_number()) fail("'" + key + "' must be a number");
      (key == "a" ? spec.a : spec.d) = value.get<double>();
    } else if (key == "alpha") {
      spec.alpha = read_complex(value, "alpha");
    } else if (key == "beta") {
      spec.beta = read_complex(value, "beta");
    } else if (key == "weights") {
      if (!value.is_array()) fail("'weights' must be an array");
      for (const auto& w : value) {
        if (!w.is_number()) fail("'weights' entries must be numbers");
        spec.weights.push_back(w.get<double>());
      }
    } else {
      fail("unknown preset field '" + key + "'");
    }
  }
  return spec;
}

PauliOperator from_document(const json& doc, std::optional<std::size_t> inherited_n,
                            const Tolerances& tol) {
  if (!doc.is_object()) fail("state document must be an object");
  std::size_t n = 0;
  if (doc.contains("n")) {
    n = read_count(doc["n"], "n");
    if (inherited_n && *inherited_n != n) fail("mixture component has a different 'n'");
  } else if (inherited_n) {
    n = *inherited_n;
  } else {
    fail("missing 'n'");
  }
  if (n == 0 || n > kMaxPauliQubits) fail("'n' out of range");

  const int payloads = static_cast<int>(doc.contains("pauli")) +
                       static_cast<int>(doc.contains("preset")) +
                       static_cast<int>(doc.contains("mixture"));
  if (payloads != 1) fail("exactly one of 'pauli', 'preset', 'mixture' is required");
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "pauli" && key != "preset" && key != "mixture") {
      fail("unknown field '" + key + "'");
    }
  }

  if (doc.contains("pauli")) return from_pauli(n, doc["pauli"]);
  if (doc.contains("preset")) {
    const NamedStateSpec spec = read_preset(n, doc["preset"]);
    try {
      return build_named_state(spec, tol);
    } catch (const Error& e) {
      fail(std::string("preset '") + spec.kind + "': " + e.what());
    }
  }

  const json& parts = doc["mixture"];
  if (!parts.is_array() || parts.empty()) fail("'mixture' must be a nonempty array");
  PauliOperator rho(n);
  double total = 0.0;
  for (const auto& entry : parts) {
    if (!entry.is_object() || !entry.contains("weight") || !entry.contains("state") ||
        !entry["weight"].is_number()) {
      fail("mixture entries must be objects with numeric 'weight' and a 'state'");
    }
    const double w = entry["weight"].get<double>();
    total += w;
    rho += w * from_document(entry["state"], n, tol);
  }
  if (std::abs(total - 1.0) > kMixtureTolerance) fail("mixture weights do not sum to 1");
  return rho;
}

}  // namespace

PauliOperator parse_state(std::string_view text, const Tolerances& tol) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  return from_document(doc, std::nullopt, tol);
}

PauliOperator load_state(const std::string& path, const Tolerances& tol) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state(buf.str(), tol);
}

}  // namespace symlu::cli
