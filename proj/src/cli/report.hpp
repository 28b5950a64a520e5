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

#pragma once

#include <string>

#include "json.hpp"

namespace symlu::cli {

/// Deterministic JSON: keys sorted, floats printed with 12 significant
/// digits, magnitudes below 1e-12 printed as 0.
std::string format_json(const nlohmann::json& report);

/// Indented "key: value" listing of the same report.
std::string format_text(const nlohmann::json& report);

}  // namespace symlu::cli
