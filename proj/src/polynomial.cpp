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

#include "symlu/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace symlu {

Polynomial3 Polynomial3::constant(double c) { return monomial({0, 0, 0}, c); }

Polynomial3 Polynomial3::monomial(const Exponents& e, double c) {
  Polynomial3 p;
  p.add(e, c);
  return p;
}

Polynomial3 Polynomial3::radius_squared() {
  Polynomial3 p;
  p.add({2, 0, 0}, 1.0);
  p.add({0, 2, 0}, 1.0);
  p.add({0, 0, 2}, 1.0);
  return p;
}

Polynomial3 Polynomial3::planar_radius_squared() {
  Polynomial3 p;
  p.add({2, 0, 0}, 1.0);
  p.add({0, 2, 0}, 1.0);
  return p;
}

double Polynomial3::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0.0 : it->second;
}

void Polynomial3::add(const Exponents& e, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

int Polynomial3::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

double Polynomial3::max_abs() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

Polynomial3 Polynomial3::pruned(double tol) const {
  Polynomial3 p;
  for (const auto& [e, c] : terms_) {
    if (std::abs(c) > tol) p.terms_.emplace_hint(p.terms_.end(), e, c);
  }
  return p;
}

Polynomial3 Polynomial3::pow(int k) const {
  Polynomial3 result = constant(1.0);
  for (int i = 0; i < k; ++i) result = result * *this;
  return result;
}

std::string Polynomial3::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  char buf[64];
  for (const auto& [e, c] : terms_) {
    std::snprintf(buf, sizeof buf, "%s%.12g", out.empty() ? "" : " + ", c);
    out += buf;
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      out += "xyz"[v];
      if (e[v] > 1) out += "^" + std::to_string(e[v]);
    }
  }
  return out;
}

Polynomial3& Polynomial3::operator+=(const Polynomial3& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

Polynomial3& Polynomial3::operator-=(const Polynomial3& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

Polynomial3& Polynomial3::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial3 operator*(const Polynomial3& p, const Polynomial3& q) {
  Polynomial3 r;
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) {
      r.add({ep[0] + eq[0], ep[1] + eq[1], ep[2] + eq[2]}, cp * cq);
    }
  }
  return r;
}

double max_abs_diff(const Polynomial3& p, const Polynomial3& q) {
  return (p - q).max_abs();
}

}  // namespace symlu
