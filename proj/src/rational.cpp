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

#include "c2k/rational.hpp"

namespace c2k {

std::string rounding_mode_name(RoundingMode m) {
  switch (m) {
    case RoundingMode::half_up: return "half-up";
    case RoundingMode::floor: return "floor";
    case RoundingMode::ceiling: return "ceiling";
  }
  return "half-up";
}

RoundingMode rounding_mode_from_string(const std::string& s) {
  if (s == "half-up" || s == "half_up") return RoundingMode::half_up;
  if (s == "floor") return RoundingMode::floor;
  if (s == "ceiling" || s == "ceil") return RoundingMode::ceiling;
  throw ValidationError("unknown rounding mode: " + s);
}

std::int64_t scaled_percent(const Rational& value, int decimals, RoundingMode mode) {
  __int128 scale = 100;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  __int128 n = static_cast<__int128>(value.num()) * scale;
  __int128 d = value.den();
  // floor division with remainder in [0, d)
  __int128 q = n / d;
  __int128 r = n % d;
  if (r < 0) {
    q -= 1;
    r += d;
  }
  switch (mode) {
    case RoundingMode::floor:
      break;
    case RoundingMode::ceiling:
      if (r > 0) q += 1;
      break;
    case RoundingMode::half_up:
      if (2 * r >= d) q += 1;
      break;
  }
  return static_cast<std::int64_t>(q);
}

std::string percent_string(const Rational& value, int decimals, RoundingMode mode) {
  std::int64_t s = scaled_percent(value, decimals, mode);
  bool neg = s < 0;
  if (neg) s = -s;
  std::int64_t pow10 = 1;
  for (int i = 0; i < decimals; ++i) pow10 *= 10;
  std::string out = std::to_string(s / pow10);
  if (decimals > 0) {
    std::string frac = std::to_string(s % pow10);
    out += "." + std::string(static_cast<std::size_t>(decimals) - frac.size(), '0') + frac;
  }
  return neg ? "-" + out : out;
}

}  // namespace c2k
