// Copyright 2026 The corpus2know Authors
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

#ifndef C2K_RATIONAL_HPP
#define C2K_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "c2k/errors.hpp"

namespace c2k {

// Exact ratio of two 64-bit integers, normalized (positive denominator,
// reduced by gcd). Report values are kept exact and only rounded at
// display time.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw PreconditionError("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator+(const Rational& o) const {
    return Rational(mul(num_, o.den_) + mul(o.num_, den_), mul(den_, o.den_));
  }
  Rational operator-(const Rational& o) const {
    return Rational(mul(num_, o.den_) - mul(o.num_, den_), mul(den_, o.den_));
  }
  Rational operator*(const Rational& o) const {
    return Rational(mul(num_, o.num_), mul(den_, o.den_));
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw PreconditionError("rational division by zero");
    return Rational(mul(num_, o.den_), mul(den_, o.num_));
  }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
  }
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

  // "num/den"; integers print without the denominator.
  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > INT64_MAX || p < INT64_MIN) throw PreconditionError("rational overflow");
    return static_cast<std::int64_t>(p);
  }

  std::int64_t num_;
  std::int64_t den_;
};

enum class RoundingMode { half_up, floor, ceiling };

std::string rounding_mode_name(RoundingMode m);
RoundingMode rounding_mode_from_string(const std::string& s);

// value*100 scaled to `decimals` fractional digits and rounded per mode.
// half_up rounds a remainder of exactly one half away from zero.
std::int64_t scaled_percent(const Rational& value, int decimals, RoundingMode mode);

// Decimal rendering of value*100, e.g. 335/1433 -> "24" (0 digits, ceiling)
// or 817/2701 -> "30.25" (2 digits, half_up). No percent sign.
std::string percent_string(const Rational& value, int decimals, RoundingMode mode);

}  // namespace c2k

#endif  // C2K_RATIONAL_HPP
