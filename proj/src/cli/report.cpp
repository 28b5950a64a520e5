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

#include "report.hpp"

#include <cmath>
#include <cstdio>

namespace symlu::cli {

namespace {

using nlohmann::json;

constexpr double kPrintZero = 1e-12;

std::string number(double x) {
  if (std::abs(x) < kPrintZero) x = 0.0;  // also turns -0 into 0
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string scalar(const json& j) {
  switch (j.type()) {
    case json::value_t::number_float:
      return number(j.get<double>());
    case json::value_t::string:
      return j.dump();
    default:
      return j.dump();
  }
}

bool is_flat_array(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (e.is_object()) return false;
    if (e.is_array() && !is_flat_array(e)) return false;
  }
  return true;
}

void write_json(const json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {  // std::map order: sorted
      if (!first) out += ",\n";
      first = false;
      out += inner + json(key).dump() + ": ";
      write_json(value, indent + 1, out);
    }
    out += "\n" + pad + "}";
  } else if (j.is_array()) {
    if (is_flat_array(j)) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ", ";
        write_json(j[i], indent + 1, out);
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += inner;
      write_json(j[i], indent + 1, out);
    }
    out += "\n" + pad + "]";
  } else {
    out += scalar(j);
  }
}

std::string inline_value(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) s += ", ";
      s += inline_value(j[i]);
    }
    return s + "]";
  }
  return scalar(j);
}

void write_text(const json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out += pad + key + ":\n";
      write_text(value, indent + 1, out);
    } else if (value.is_array() && !is_flat_array(value)) {
      out += pad + key + ":\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        out += pad + "  [" + std::to_string(i) + "]\n";
        if (value[i].is_object()) {
          write_text(value[i], indent + 2, out);
        } else {
          out += pad + "    " + inline_value(value[i]) + "\n";
        }
      }
    } else {
      out += pad + key + ": " + inline_value(value) + "\n";
    }
  }
}

}  // namespace

std::string format_json(const json& report) {
  std::string out;
  write_json(report, 0, out);
  out += "\n";
  return out;
}

std::string format_text(const json& report) {
  std::string out;
  write_text(report, 0, out);
  return out;
}

}  // namespace symlu::cli
