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

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symlu/pauli.hpp"
#include "symlu/tolerances.hpp"

namespace symlu::cli {

/// Malformed state document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a state document. The top-level object carries "n" and exactly one
/// of "pauli" (index string -> real coefficient), "preset" (a named state)
/// or "mixture" (list of {"weight", "state"} objects whose weights sum to 1).
PauliOperator parse_state(std::string_view text, const Tolerances& tol = {});

PauliOperator load_state(const std::string& path, const Tolerances& tol = {});

/// Runs one command; returns the process exit code. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symlu::cli
