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

#include <cstdlib>
#include <iomanip>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rtwalk {
namespace {

// x = mantissa * 2^exponent with mantissa in [2^120, 2^121) for large x.
struct Split {
  Real mantissa;
  long exponent;
};

Split SplitMagnitude(const BigInt& x) {
  BigInt a = boost::multiprecision::abs(x);
  if (a == 0) return {Real(0), 0};
  const long msb = static_cast<long>(boost::multiprecision::msb(a));
  const long shift = msb > 120 ? msb - 120 : 0;
  BigInt top = a >> shift;
  const BigInt mask = (BigInt(1) << 64) - 1;
  const auto hi = static_cast<std::uint64_t>(top >> 64);
  const auto lo = static_cast<std::uint64_t>(top & mask);
  Real m = boost::multiprecision::ldexp(Real(hi), 64) + Real(lo);
  if (x < 0) m = -m;
  return {m, shift};
}

}  // namespace

BigInt Factorial(int n) {
  if (n < 0) throw std::invalid_argument("Factorial of a negative number");
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

BigInt FallingFactorial(int n, int k) {
  if (k < 0) throw std::invalid_argument("FallingFactorial with k < 0");
  if (k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= (n - i);
  return r;
}

BigInt Binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

Real LogFactorial(int n) {
  if (n < 0) throw std::invalid_argument("LogFactorial of a negative number");
  static std::mutex mu;
  static std::vector<Real> table{Real(0)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= n) {
    const auto k = static_cast<int>(table.size());
    table.push_back(table.back() + boost::multiprecision::log(Real(k)));
  }
  return table[n];
}

Real Log(const BigInt& x) {
  if (x <= 0) throw std::domain_error("Log of a nonpositive integer");
  const Split s = SplitMagnitude(x);
  static const Real kLn2 = boost::multiprecision::log(Real(2));
  return boost::multiprecision::log(s.mantissa) + Real(s.exponent) * kLn2;
}

Real ToReal(const BigInt& x) {
  const Split s = SplitMagnitude(x);
  return boost::multiprecision::ldexp(s.mantissa, static_cast<int>(s.exponent));
}

Real ToReal(const Rational& x) {
  const Split num = SplitMagnitude(boost::multiprecision::numerator(x));
  const Split den = SplitMagnitude(boost::multiprecision::denominator(x));
  return boost::multiprecision::ldexp(num.mantissa / den.mantissa,
                                      static_cast<int>(num.exponent - den.exponent));
}

Rational Pow(const Rational& base, unsigned exponent) {
  // numerator and denominator are coprime, so their powers stay coprime.
  BigInt num = boost::multiprecision::pow(boost::multiprecision::numerator(base), exponent);
  BigInt den = boost::multiprecision::pow(boost::multiprecision::denominator(base), exponent);
  return Rational(num, den);
}

std::string ToString(const Rational& x) {
  const BigInt& den = boost::multiprecision::denominator(x);
  if (den == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

std::string ToString(const BigInt& x) { return x.str(); }

std::string ToString(const Real& x, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

void CompensatedSum::Add(const Real& x) {
  const Real t = sum_ + x;
  if (boost::multiprecision::abs(sum_) >= boost::multiprecision::abs(x)) {
    correction_ += (sum_ - t) + x;
  } else {
    correction_ += (x - t) + sum_;
  }
  sum_ = t;
}

void LogSumExp::Add(const Real& log_term) {
  if (!has_terms_) {
    has_terms_ = true;
    max_ = log_term;
    scaled_.Add(Real(1));
    return;
  }
  if (log_term <= max_) {
    scaled_.Add(boost::multiprecision::exp(log_term - max_));
    return;
  }
  // Rescale the running sum to the new maximum.
  const Real factor = boost::multiprecision::exp(max_ - log_term);
  CompensatedSum rescaled;
  rescaled.Add(scaled_.value() * factor);
  rescaled.Add(Real(1));
  scaled_ = rescaled;
  max_ = log_term;
}

Real LogSumExp::value() const {
  if (!has_terms_) {
    return -std::numeric_limits<Real>::infinity();
  }
  return max_ + boost::multiprecision::log(scaled_.value());
}

std::int64_t CapFromEnvironment(std::int64_t fallback) {
  const char* raw = std::getenv("RTWALK_CAP");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || v <= 0) {
    throw std::invalid_argument(std::string("RTWALK_CAP must be a positive integer, got '") +
                                raw + "'");
  }
  return v;
}

}  // namespace rtwalk
