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
#ifndef RTWALK_NUMERIC_H_
#define RTWALK_NUMERIC_H_

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/float128.hpp>

namespace rtwalk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 113-bit binary mantissa. All reported distances and bounds use this type.
using Real = boost::multiprecision::float128;

// Thrown when an enumeration or matrix would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an operation needs a nonempty permutation set S_M.
class EmptyStateSpace : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

BigInt Factorial(int n);

// n! / (n-k)!; zero when k > n. Requires k >= 0.
BigInt FallingFactorial(int n, int k);

// Zero when k < 0 or k > n.
BigInt Binomial(int n, int k);

// log(n!) in Real precision, via a cached table.
Real LogFactorial(int n);

// Natural log of a positive integer of any size (no overflow to inf).
Real Log(const BigInt& x);

Real ToReal(const BigInt& x);
Real ToReal(const Rational& x);

// Integer power with exact rational arithmetic.
Rational Pow(const Rational& base, unsigned exponent);

// "num/den", or just "num" when the denominator is 1.
std::string ToString(const Rational& x);
std::string ToString(const BigInt& x);

// Shortest round-trip-ish decimal form with 20 significant digits.
std::string ToString(const Real& x, int digits = 20);

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void Add(const Real& x);
  Real value() const { return sum_ + correction_; }

 private:
  Real sum_ = 0;
  Real correction_ = 0;
};

// Streaming log-sum-exp accumulator: value() returns log(sum exp(x_i)).
class LogSumExp {
 public:
  void Add(const Real& log_term);
  bool empty() const { return !has_terms_; }
  Real value() const;

 private:
  bool has_terms_ = false;
  Real max_ = 0;
  CompensatedSum scaled_;
};

// Reads RTWALK_CAP from the environment; `fallback` when unset. Throws
// std::invalid_argument unless the value is a positive integer.
std::int64_t CapFromEnvironment(std::int64_t fallback);

inline constexpr std::int64_t kDefaultEnumerationCap = 10'000'000;
inline constexpr std::int64_t kDefaultMatrixCap = 50'000;
inline constexpr std::int64_t kDefaultChainCap = 5'000'000;

}  // namespace rtwalk

#endif  // RTWALK_NUMERIC_H_
