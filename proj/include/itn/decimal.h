// Copyright 2026 The itnforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ITN_DECIMAL_H_
#define ITN_DECIMAL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace itn {

// Exact decimal value: an unsigned integer part plus a literal fraction-digit
// string. No binary floating point is involved anywhere, so "eight four"
// renders as ".84" and never as ".8399999...". Trailing zeros in the fraction
// are preserved ("1.50" stays "1.50").
struct Decimal {
  uint64_t units = 0;
  std::string frac;  // fraction digits, possibly empty

  static Decimal FromInt(uint64_t v) { return Decimal{v, {}}; }

  // Parses "3649.84", "20", ".5" is rejected (no leading-dot forms in scope).
  static std::optional<Decimal> Parse(std::string_view s);

  bool IsInteger() const { return frac.empty(); }

  std::string ToString() const {
    std::string out = std::to_string(units);
    if (!frac.empty()) {
      out.push_back('.');
      out += frac;
    }
    return out;
  }

  bool operator==(const Decimal& other) const = default;
};

inline std::optional<Decimal> Decimal::Parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  Decimal d;
  size_t i = 0;
  if (s[0] < '0' || s[0] > '9') return std::nullopt;
  uint64_t units = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
    uint64_t digit = static_cast<uint64_t>(s[i] - '0');
    if (units > (UINT64_MAX - digit) / 10) return std::nullopt;  // overflow
    units = units * 10 + digit;
    ++i;
  }
  d.units = units;
  if (i < s.size()) {
    if (s[i] != '.') return std::nullopt;
    ++i;
    if (i == s.size()) return std::nullopt;  // trailing dot
    while (i < s.size()) {
      if (s[i] < '0' || s[i] > '9') return std::nullopt;
      d.frac.push_back(s[i]);
      ++i;
    }
  }
  return d;
}

}  // namespace itn

#endif  // ITN_DECIMAL_H_
