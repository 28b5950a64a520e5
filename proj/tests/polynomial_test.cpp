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

#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "symlu/polynomial.hpp"

namespace symlu {
namespace {

TEST(Polynomial3, ConstructorsAndDegree) {
  EXPECT_EQ(Polynomial3().degree(), -1);
  EXPECT_EQ(Polynomial3::constant(2.0).degree(), 0);
  const Polynomial3 r2 = Polynomial3::radius_squared();
  EXPECT_EQ(r2.degree(), 2);
  EXPECT_DOUBLE_EQ(r2.coeff({2, 0, 0}), 1.0);
  EXPECT_DOUBLE_EQ(r2.coeff({0, 0, 2}), 1.0);
  EXPECT_DOUBLE_EQ(r2.coeff({1, 1, 0}), 0.0);
  EXPECT_DOUBLE_EQ(Polynomial3::planar_radius_squared().coeff({0, 0, 2}), 0.0);
}

TEST(Polynomial3, ProductExpandsBinomially) {
  const Polynomial3 p = (Polynomial3::x() + Polynomial3::z()).pow(3);
  EXPECT_DOUBLE_EQ(p.coeff({3, 0, 0}), 1.0);
  EXPECT_DOUBLE_EQ(p.coeff({2, 0, 1}), 3.0);
  EXPECT_DOUBLE_EQ(p.coeff({1, 0, 2}), 3.0);
  EXPECT_DOUBLE_EQ(p.coeff({0, 0, 3}), 1.0);
  EXPECT_EQ(p.terms().size(), 4u);
}

TEST(Polynomial3, RingIdentities) {
  testing::Rng rng(41);
  const Polynomial3 f = testing::random_polynomial(2, rng);
  const Polynomial3 g = testing::random_polynomial(2, rng);
  const Polynomial3 h = testing::random_polynomial(1, rng);
  EXPECT_LT(max_abs_diff(f * (g + h), f * g + f * h), 1e-14);
  EXPECT_LT(max_abs_diff(f * g, g * f), 1e-14);
  EXPECT_LT(max_abs_diff(f * Polynomial3::constant(1.0), f), 0.0 + 1e-16);
  EXPECT_TRUE((f - f).pruned(0.0).empty());
}

TEST(Polynomial3, AdditionCancelsTerms) {
  Polynomial3 p = Polynomial3::z();
  p -= Polynomial3::z();
  EXPECT_EQ(p.degree(), -1);
  EXPECT_DOUBLE_EQ(p.max_abs(), 0.0);
}

TEST(Polynomial3, TextForm) {
  const Polynomial3 p = 2.0 * Polynomial3::x() + Polynomial3::constant(-0.5);
  EXPECT_FALSE(p.str().empty());
  EXPECT_EQ(Polynomial3().str(), "0");
}

}  // namespace
}  // namespace symlu
