// Copyright 2026 The rtwalk Authors
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
//
#include "rtwalk/numeric.h"

#include <cmath>
#include <cstdlib>

#include <gtest/gtest.h>

namespace rtwalk {
namespace {

namespace bmp = boost::multiprecision;

TEST(FactorialTest, SmallValues) {
  EXPECT_EQ(Factorial(0), 1);
  EXPECT_EQ(Factorial(10), 3628800);
  EXPECT_EQ(FallingFactorial(7, 3), 210);
  EXPECT_EQ(Binomial(10, 4), 210);
  EXPECT_EQ(Binomial(4, 5), 0);
  EXPECT_EQ(Binomial(4, -1), 0);
}

TEST(LogTest, MatchesLgammaAndBigValues) {
  for (int n : {0, 1, 5, 50, 500, 3000}) {
    EXPECT_NEAR(static_cast<double>(LogFactorial(n)), std::lgamma(n + 1.0), 1e-9 * (n + 1));
  }
  const BigInt big = Factorial(300);
  EXPECT_NEAR(static_cast<double>(Log(big)), std::lgamma(301.0), 1e-9);
  EXPECT_NEAR(static_cast<double>(ToReal(Rational(1, 3))), 1.0 / 3, 1e-16);
  // 113-bit mantissa: 1 + 2^-100 survives the conversion.
  const Rational tiny = Rational(1) + Rational(BigInt(1), BigInt(1) << 100);
  EXPECT_GT(ToReal(tiny), Real(1));
}

TEST(PowTest, Exact) {
  EXPECT_EQ(Pow(Rational(2, 3), 0), 1);
  EXPECT_EQ(Pow(Rational(2, 3), 5), Rational(32, 243));
  EXPECT_EQ(Pow(Rational(-1, 2), 3), Rational(-1, 8));
}

TEST(ToStringTest, RationalsAsFractions) {
  EXPECT_EQ(ToString(Rational(5207, 117649)), "5207/117649");
  EXPECT_EQ(ToString(Rational(4, 2)), "2");
  EXPECT_EQ(ToString(BigInt(-12)), "-12");
}

TEST(CompensatedSumTest, RecoversSmallTerms) {
  CompensatedSum s;
  s.Add(Real(1));
  for (int k = 0; k < 1000; ++k) s.Add(Real("1e-40"));
  s.Add(Real(-1));
  EXPECT_NEAR(static_cast<double>(s.value() * Real("1e37")), 1.0, 1e-12);
}

TEST(LogSumExpTest, StableForHugeAndTinyTerms) {
  LogSumExp l;
  EXPECT_TRUE(l.empty());
  l.Add(Real(-20000));
  l.Add(Real(-20000));
  EXPECT_NEAR(static_cast<double>(l.value() + 20000), std::log(2.0), 1e-12);
  LogSumExp h;
  h.Add(Real(5000));
  h.Add(Real(0));
  EXPECT_NEAR(static_cast<double>(h.value()), 5000.0, 1e-12);
}

TEST(CapFromEnvironmentTest, ReadsOverride) {
  ::unsetenv("RTWALK_CAP");
  EXPECT_EQ(CapFromEnvironment(17), 17);
  ::setenv("RTWALK_CAP", "123", 1);
  EXPECT_EQ(CapFromEnvironment(17), 123);
  ::setenv("RTWALK_CAP", "junk", 1);
  EXPECT_THROW(CapFromEnvironment(17), std::invalid_argument);
  ::unsetenv("RTWALK_CAP");
}

}  // namespace
}  // namespace rtwalk
