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

#include "itn/number_grammar.h"

#include <algorithm>
#include <map>

namespace itn {

namespace {

constexpr size_t kMaxDigitRun = 18;  // fits uint64 without overflow

const std::map<std::string_view, int>& UnitsTeens() {
  static const auto* kMap = new std::map<std::string_view, int>{
      {"one", 1},      {"two", 2},       {"three", 3},    {"four", 4},
      {"five", 5},     {"six", 6},       {"seven", 7},    {"eight", 8},
      {"nine", 9},     {"ten", 10},      {"eleven", 11},  {"twelve", 12},
      {"thirteen", 13}, {"fourteen", 14}, {"fifteen", 15}, {"sixteen", 16},
      {"seventeen", 17}, {"eighteen", 18}, {"nineteen", 19},
  };
  return *kMap;
}

const std::map<std::string_view, int>& Tens() {
  static const auto* kMap = new std::map<std::string_view, int>{
      {"twenty", 20}, {"thirty", 30},  {"forty", 40},  {"fifty", 50},
      {"sixty", 60},  {"seventy", 70}, {"eighty", 80}, {"ninety", 90},
  };
  return *kMap;
}

const std::map<std::string_view, uint64_t>& Magnitudes() {
  static const auto* kMap = new std::map<std::string_view, uint64_t>{
      {"thousand", 1000ull},
      {"million", 1000000ull},
      {"billion", 1000000000ull},
      {"trillion", 1000000000000ull},
  };
  return *kMap;
}

// Ordinal word -> its cardinal word. Ordinals re-parse through the cardinal
// grammar after substituting the final word.
const std::map<std::string_view, std::string_view>& OrdinalToCardinal() {
  static const auto* kMap = new std::map<std::string_view, std::string_view>{
      {"first", "one"},          {"second", "two"},
      {"third", "three"},        {"fourth", "four"},
      {"fifth", "five"},         {"sixth", "six"},
      {"seventh", "seven"},      {"eighth", "eight"},
      {"ninth", "nine"},         {"tenth", "ten"},
      {"eleventh", "eleven"},    {"twelfth", "twelve"},
      {"thirteenth", "thirteen"}, {"fourteenth", "fourteen"},
      {"fifteenth", "fifteen"},  {"sixteenth", "sixteen"},
      {"seventeenth", "seventeen"}, {"eighteenth", "eighteen"},
      {"nineteenth", "nineteen"}, {"twentieth", "twenty"},
      {"thirtieth", "thirty"},   {"fortieth", "forty"},
      {"fiftieth", "fifty"},     {"sixtieth", "sixty"},
      {"seventieth", "seventy"}, {"eightieth", "eighty"},
      {"ninetieth", "ninety"},   {"hundredth", "hundred"},
      {"thousandth", "thousand"}, {"millionth", "million"},
      {"billionth", "billion"},  {"trillionth", "trillion"},
  };
  return *kMap;
}

const std::map<std::string_view, std::string_view>& CardinalToOrdinal() {
  static const auto* kMap = [] {
    auto* m = new std::map<std::string_view, std::string_view>;
    for (const auto& [ord, card] : OrdinalToCardinal()) (*m)[card] = ord;
    return m;
  }();
  return *kMap;
}

const char* kDigitWords[10] = {"zero", "one", "two",   "three", "four",
                               "five", "six", "seven", "eight", "nine"};

std::string_view LowerAt(const std::vector<Token>& toks, size_t i) {
  return toks[i].lower;
}

bool IsWordToken(const std::vector<Token>& toks, size_t i) {
  return toks[i].kind == TokenKind::kWord;
}

struct SmallParse {
  uint64_t value = 0;
  size_t len = 0;
};

// teen | tens [unit] | unit, values 1..99.
std::optional<SmallParse> ParseBelow100(const std::vector<Token>& toks,
                                        size_t i, size_t end) {
  if (i >= end || !IsWordToken(toks, i)) return std::nullopt;
  std::string_view w = LowerAt(toks, i);
  auto ut = UnitsTeens().find(w);
  if (ut != UnitsTeens().end()) {
    return SmallParse{static_cast<uint64_t>(ut->second), 1};
  }
  auto tens = Tens().find(w);
  if (tens != Tens().end()) {
    uint64_t v = static_cast<uint64_t>(tens->second);
    if (i + 1 < end && IsWordToken(toks, i + 1)) {
      auto unit = UnitsTeens().find(LowerAt(toks, i + 1));
      if (unit != UnitsTeens().end() && unit->second <= 9) {
        return SmallParse{v + static_cast<uint64_t>(unit->second), 2};
      }
    }
    return SmallParse{v, 1};
  }
  return std::nullopt;
}

struct GroupParse {
  uint64_t value = 0;
  size_t len = 0;
  bool used_and = false;
};

// unit "hundred" [["and"] below100] | below100, values 1..999.
std::optional<GroupParse> ParseBelow1000(const std::vector<Token>& toks,
                                         size_t i, size_t end, bool allow_and) {
  if (i >= end || !IsWordToken(toks, i)) return std::nullopt;
  auto unit = UnitsTeens().find(LowerAt(toks, i));
  if (unit != UnitsTeens().end() && unit->second <= 9 && i + 1 < end &&
      IsWordToken(toks, i + 1) && LowerAt(toks, i + 1) == "hundred") {
    GroupParse g;
    g.value = static_cast<uint64_t>(unit->second) * 100;
    g.len = 2;
    size_t j = i + 2;
    if (allow_and && j < end && IsWordToken(toks, j) && LowerAt(toks, j) == "and") {
      if (auto rest = ParseBelow100(toks, j + 1, end)) {
        g.value += rest->value;
        g.len = (j + 1 + rest->len) - i;
        g.used_and = true;
        return g;
      }
    }
    if (auto rest = ParseBelow100(toks, j, end)) {
      g.value += rest->value;
      g.len += rest->len;
    }
    return g;
  }
  if (auto small = ParseBelow100(toks, i, end)) {
    return GroupParse{small->value, small->len, false};
  }
  return std::nullopt;
}

size_t MagnitudeZeros(uint64_t mag) {
  size_t z = 0;
  while (mag >= 10) {
    mag /= 10;
    ++z;
  }
  return z;
}

struct CompParse {
  uint64_t value = 0;
  size_t len = 0;
  bool used_and = false;
};

// Full compositional integer, with the digit-fill continuation after the
// last magnitude group.
std::optional<CompParse> ParseCompositional(const std::vector<Token>& toks,
                                            size_t start, size_t end,
                                            bool allow_and) {
  if (start >= end || !IsWordToken(toks, start)) return std::nullopt;
  if (LowerAt(toks, start) == "zero") return CompParse{0, 1, false};

  CompParse out;
  uint64_t last_mag = UINT64_MAX;
  size_t i = start;
  while (true) {
    auto group = ParseBelow1000(toks, i, end, allow_and);
    if (!group) break;
    size_t after = i + group->len;
    uint64_t mag = 0;
    if (after < end && IsWordToken(toks, after)) {
      auto it = Magnitudes().find(LowerAt(toks, after));
      if (it != Magnitudes().end()) mag = it->second;
    }
    if (mag != 0 && mag < last_mag) {
      out.value += group->value * mag;
      out.len = (after + 1) - start;
      out.used_and |= group->used_and;
      last_mag = mag;
      i = after + 1;
      // Digit-fill continuation: exactly as many single-digit words as the
      // magnitude has zeros, ending at a non-digit boundary, fill the places
      // below the magnitude ("three thousand six four nine" -> 3649).
      size_t zeros = MagnitudeZeros(mag);
      if (i + zeros <= end) {
        bool all_digits = true;
        uint64_t fill = 0;
        for (size_t k = 0; k < zeros; ++k) {
          int d = IsWordToken(toks, i + k) ? DigitWordValue(LowerAt(toks, i + k))
                                           : -1;
          if (d < 0) {
            all_digits = false;
            break;
          }
          fill = fill * 10 + static_cast<uint64_t>(d);
        }
        bool boundary =
            i + zeros == end ||
            !(IsWordToken(toks, i + zeros) &&
              DigitWordValue(LowerAt(toks, i + zeros)) >= 0);
        if (all_digits && boundary) {
          out.value += fill;
          out.len += zeros;
          return out;
        }
      }
      continue;
    }
    // No magnitude follows (or a non-decreasing one): the group is the tail.
    out.value += group->value;
    out.len = after - start;
    out.used_and |= group->used_and;
    break;
  }
  if (out.len == 0) return std::nullopt;
  return out;
}

// below100 head plus hundreds tail: "nineteen eighty four" -> 1984,
// "twenty one oh five" -> 2105, "nineteen hundred" -> 1900.
std::optional<SmallParse> ParsePairRead(const std::vector<Token>& toks,
                                        size_t start, size_t end) {
  auto head = ParseBelow100(toks, start, end);
  if (!head) return std::nullopt;
  size_t j = start + head->len;
  if (j >= end || !IsWordToken(toks, j)) return std::nullopt;
  std::string_view w = LowerAt(toks, j);
  if (w == "hundred") {
    return SmallParse{head->value * 100, head->len + 1};
  }
  if (w == "oh" || w == "zero") {
    if (j + 1 < end && IsWordToken(toks, j + 1)) {
      auto unit = UnitsTeens().find(LowerAt(toks, j + 1));
      if (unit != UnitsTeens().end() && unit->second <= 9) {
        return SmallParse{head->value * 100 + static_cast<uint64_t>(unit->second),
                          head->len + 2};
      }
    }
    return std::nullopt;
  }
  auto tail = ParseBelow100(toks, j, end);
  if (tail && tail->value >= 10) {
    return SmallParse{head->value * 100 + tail->value, head->len + tail->len};
  }
  return std::nullopt;
}

// Run of single-digit words, two or more, not led by "oh".
std::optional<SmallParse> ParseDigitRead(const std::vector<Token>& toks,
                                         size_t start, size_t end) {
  if (start >= end || !IsWordToken(toks, start)) return std::nullopt;
  if (LowerAt(toks, start) == "oh") return std::nullopt;
  uint64_t value = 0;
  size_t len = 0;
  while (start + len < end && len < kMaxDigitRun &&
         IsWordToken(toks, start + len)) {
    int d = DigitWordValue(LowerAt(toks, start + len));
    if (d < 0) break;
    value = value * 10 + static_cast<uint64_t>(d);
    ++len;
  }
  if (len < 2) return std::nullopt;
  return SmallParse{value, len};
}

int StylePriority(NumberStyle s) {
  switch (s) {
    case NumberStyle::kDecimal:
      return 5;
    case NumberStyle::kCompositional:
      return 4;
    case NumberStyle::kCompositionalAnd:
      return 3;
    case NumberStyle::kPairRead:
      return 2;
    case NumberStyle::kDigitRead:
      return 1;
    default:
      return 0;
  }
}

void Consider(std::optional<ParsedNumber>* best, const ParsedNumber& cand) {
  if (!*best || cand.consumed > (*best)->consumed ||
      (cand.consumed == (*best)->consumed &&
       StylePriority(cand.style) > StylePriority((*best)->style))) {
    *best = cand;
  }
}

// Integer candidates at `start`, excluding the decimal wrapper.
std::optional<ParsedNumber> ParseIntegerNumber(const std::vector<Token>& toks,
                                               size_t start, size_t end) {
  std::optional<ParsedNumber> best;
  if (auto comp = ParseCompositional(toks, start, end, false)) {
    Consider(&best, {Decimal::FromInt(comp->value),
                     NumberStyle::kCompositional, comp->len});
  }
  if (auto comp_and = ParseCompositional(toks, start, end, true)) {
    if (comp_and->used_and) {
      Consider(&best, {Decimal::FromInt(comp_and->value),
                       NumberStyle::kCompositionalAnd, comp_and->len});
    }
  }
  if (auto pair = ParsePairRead(toks, start, end)) {
    Consider(&best, {Decimal::FromInt(pair->value), NumberStyle::kPairRead,
                     pair->len});
  }
  if (auto digits = ParseDigitRead(toks, start, end)) {
    Consider(&best, {Decimal::FromInt(digits->value), NumberStyle::kDigitRead,
                     digits->len});
  }
  return best;
}

}  // namespace

const char* NumberStyleName(NumberStyle style) {
  switch (style) {
    case NumberStyle::kCompositional:
      return "Compositional";
    case NumberStyle::kCompositionalAnd:
      return "CompositionalAnd";
    case NumberStyle::kPairRead:
      return "PairRead";
    case NumberStyle::kDigitRead:
      return "DigitRead";
    case NumberStyle::kDecimal:
      return "Decimal";
    case NumberStyle::kOrdinal:
      return "Ordinal";
    case NumberStyle::kFraction:
      return "Fraction";
  }
  return "Unknown";
}

int DigitWordValue(std::string_view word) {
  if (word == "oh") return 0;
  for (int d = 0; d < 10; ++d) {
    if (word == kDigitWords[d]) return d;
  }
  return -1;
}

int UnitsTeenWordValue(std::string_view word) {
  auto it = UnitsTeens().find(word);
  return it == UnitsTeens().end() ? -1 : it->second;
}

int TensWordValue(std::string_view word) {
  auto it = Tens().find(word);
  return it == Tens().end() ? -1 : it->second;
}

bool IsOrdinalWord(std::string_view word) {
  return OrdinalToCardinal().count(word) > 0;
}

std::string DigitWord(char digit, bool oh_for_zero) {
  if (digit == '0' && oh_for_zero) return "oh";
  return kDigitWords[digit - '0'];
}

std::optional<ParsedNumber> ParseNumber(const std::vector<Token>& tokens,
                                        size_t start, size_t limit) {
  if (start >= tokens.size()) return std::nullopt;
  size_t end = tokens.size();
  if (limit < end - start) end = start + limit;

  std::optional<ParsedNumber> best = ParseIntegerNumber(tokens, start, end);

  // Decimal wrapper: integer head, "point", one or more digit words.
  // The longest integer head that is directly followed by "point" wins;
  // heads are re-parsed with a hard boundary at the "point" token so the
  // digit-fill rule sees the same horizon.
  for (size_t p = start + 1; p < end; ++p) {
    if (!IsWordToken(tokens, p) || LowerAt(tokens, p) != "point") continue;
    auto head = ParseIntegerNumber(tokens, start, p);
    if (!head || start + head->consumed != p) continue;
    size_t fi = p + 1;
    std::string frac;
    while (fi < end && IsWordToken(tokens, fi)) {
      int d = DigitWordValue(LowerAt(tokens, fi));
      if (d < 0) break;
      frac.push_back(static_cast<char>('0' + d));
      ++fi;
    }
    if (frac.empty()) continue;
    ParsedNumber dec;
    dec.value = Decimal{head->value.units, frac};
    dec.style = NumberStyle::kDecimal;
    dec.consumed = fi - start;
    Consider(&best, dec);
  }
  return best;
}

std::optional<ParsedNumber> ParseOrdinal(const std::vector<Token>& tokens,
                                         size_t start, size_t limit) {
  if (start >= tokens.size()) return std::nullopt;
  size_t end = tokens.size();
  if (limit < end - start) end = start + limit;
  // 20 words covers the longest compositional ordinal below a trillion.
  size_t scan_end = std::min(end, start + 20);

  for (size_t last = scan_end; last-- > start;) {
    if (!IsWordToken(tokens, last)) continue;
    auto ord = OrdinalToCardinal().find(LowerAt(tokens, last));
    if (ord == OrdinalToCardinal().end()) continue;

    std::vector<Token> words;
    words.reserve(last - start + 2);
    for (size_t k = start; k < last; ++k) {
      if (!IsWordToken(tokens, k)) {
        words.clear();
        break;
      }
      words.push_back(tokens[k]);
    }
    if (last > start && words.empty()) continue;
    words.push_back(MakeToken(std::string(ord->second)));

    auto comp = ParseCompositional(words, 0, words.size(), false);
    if (comp && comp->len == words.size()) {
      return ParsedNumber{Decimal::FromInt(comp->value), NumberStyle::kOrdinal,
                          last - start + 1};
    }
    // A bare magnitude ordinal means one of it: "hundredth" -> 100.
    if (last == start) {
      std::vector<Token> with_one;
      with_one.push_back(MakeToken("one"));
      with_one.push_back(MakeToken(std::string(ord->second)));
      auto alt = ParseCompositional(with_one, 0, 2, false);
      if (alt && alt->len == 2) {
        return ParsedNumber{Decimal::FromInt(alt->value), NumberStyle::kOrdinal,
                            1};
      }
    }
  }
  return std::nullopt;
}

namespace {

// Denominator word -> value. Returns 0 when the word is not a denominator.
// The `plural` flag reports whether the surface carried a plural "s".
uint64_t DenominatorValue(std::string_view word, bool* plural) {
  *plural = false;
  if (word == "half") return 2;
  if (word == "halves") {
    *plural = true;
    return 2;
  }
  if (word == "quarter") return 4;
  if (word == "quarters") {
    *plural = true;
    return 4;
  }
  std::string_view base = word;
  if (base.size() > 1 && base.back() == 's') {
    base.remove_suffix(1);
    *plural = true;
  }
  if (base == "first" || base == "second") return 0;
  auto it = OrdinalToCardinal().find(base);
  if (it == OrdinalToCardinal().end()) return 0;
  std::string_view card = it->second;
  if (auto v = UnitsTeenWordValue(card); v > 0) return static_cast<uint64_t>(v);
  if (auto v = TensWordValue(card); v > 0) return static_cast<uint64_t>(v);
  if (card == "hundred") return 100;
  auto mag = Magnitudes().find(card);
  if (mag != Magnitudes().end()) return mag->second;
  return 0;
}

}  // namespace

std::optional<ParsedFraction> ParseFraction(const std::vector<Token>& tokens,
                                            size_t start, size_t limit) {
  if (start >= tokens.size()) return std::nullopt;
  size_t end = tokens.size();
  if (limit < end - start) end = start + limit;

  auto num = ParseIntegerNumber(tokens, start, end);
  if (!num || !num->value.IsInteger() || num->value.units == 0) {
    return std::nullopt;
  }
  size_t j = start + num->consumed;
  if (j >= end || !IsWordToken(tokens, j)) return std::nullopt;
  bool plural = false;
  uint64_t den = DenominatorValue(LowerAt(tokens, j), &plural);
  if (den == 0) return std::nullopt;
  uint64_t n = num->value.units;
  if ((n == 1) == plural) return std::nullopt;  // number agreement
  return ParsedFraction{n, den, num->consumed + 1};
}

namespace {

void AppendBelow100(uint64_t v, std::vector<std::string>* out) {
  if (v >= 20) {
    for (const auto& [w, tv] : Tens()) {
      if (static_cast<uint64_t>(tv) == v - v % 10) {
        out->emplace_back(w);
        break;
      }
    }
    v %= 10;
    if (v == 0) return;
  }
  if (v > 0) {
    for (const auto& [w, uv] : UnitsTeens()) {
      if (static_cast<uint64_t>(uv) == v) {
        out->emplace_back(w);
        return;
      }
    }
  }
}

void AppendBelow1000(uint64_t v, bool and_mode, std::vector<std::string>* out) {
  uint64_t hundreds = v / 100;
  uint64_t rest = v % 100;
  if (hundreds > 0) {
    AppendBelow100(hundreds, out);
    out->emplace_back("hundred");
    if (rest > 0 && and_mode) out->emplace_back("and");
  }
  if (rest > 0) AppendBelow100(rest, out);
}

std::vector<std::string> CompositionalWords(uint64_t v, bool and_mode) {
  if (v == 0) return {"zero"};
  std::vector<std::string> out;
  static const std::pair<const char*, uint64_t> kMags[] = {
      {"trillion", 1000000000000ull},
      {"billion", 1000000000ull},
      {"million", 1000000ull},
      {"thousand", 1000ull},
  };
  for (const auto& [word, mag] : kMags) {
    if (v >= mag) {
      AppendBelow1000(v / mag, and_mode, &out);
      out.emplace_back(word);
      v %= mag;
    }
  }
  if (v > 0) AppendBelow1000(v, and_mode, &out);
  return out;
}

}  // namespace

std::optional<std::vector<std::string>> VerbalizeCardinal(uint64_t value,
                                                          NumberStyle style,
                                                          bool oh_for_zero) {
  switch (style) {
    case NumberStyle::kCompositional:
      return CompositionalWords(value, false);
    case NumberStyle::kCompositionalAnd:
      return CompositionalWords(value, true);
    case NumberStyle::kPairRead: {
      if (value < 100 || value > 9999) return std::nullopt;
      std::vector<std::string> out;
      AppendBelow100(value / 100, &out);
      uint64_t tail = value % 100;
      if (tail == 0) {
        out.emplace_back("hundred");
      } else if (tail < 10) {
        out.emplace_back("oh");
        AppendBelow100(tail, &out);
      } else {
        AppendBelow100(tail, &out);
      }
      return out;
    }
    case NumberStyle::kDigitRead: {
      std::string digits = std::to_string(value);
      std::vector<std::string> out;
      out.reserve(digits.size());
      for (char c : digits) {
        // A lone zero is always "zero": bare "oh" is not a number reading.
        bool oh = oh_for_zero && digits.size() > 1;
        out.push_back(DigitWord(c, oh));
      }
      return out;
    }
    default:
      return std::nullopt;
  }
}

std::vector<std::string> VerbalizeDecimal(const Decimal& value) {
  std::vector<std::string> out = CompositionalWords(value.units, false);
  if (!value.frac.empty()) {
    out.emplace_back("point");
    for (char c : value.frac) out.push_back(DigitWord(c));
  }
  return out;
}

std::optional<std::vector<std::string>> VerbalizeOrdinal(uint64_t value) {
  if (value == 0) return std::nullopt;
  std::vector<std::string> words = CompositionalWords(value, false);
  auto it = CardinalToOrdinal().find(words.back());
  if (it == CardinalToOrdinal().end()) return std::nullopt;
  words.back() = std::string(it->second);
  // A pure magnitude speaks bare: 100 is "hundredth", not "one hundredth".
  // The latter reads as the fraction 1/100, and keeping the two spoken
  // forms distinct lets both survive a round trip.
  if (words.size() == 2 && words[0] == "one" &&
      (it->first == "hundred" || Magnitudes().count(it->first) > 0)) {
    words.erase(words.begin());
  }
  return words;
}

std::optional<std::vector<std::string>> VerbalizeFraction(
    uint64_t numerator, uint64_t denominator) {
  if (numerator == 0 || denominator < 2) return std::nullopt;
  std::vector<std::string> out = CompositionalWords(numerator, false);
  bool plural = numerator > 1;
  std::string den_word;
  if (denominator == 2) {
    den_word = plural ? "halves" : "half";
  } else if (denominator == 4) {
    den_word = plural ? "quarters" : "quarter";
  } else {
    auto ord = VerbalizeOrdinal(denominator);
    if (!ord || ord->size() != 1) return std::nullopt;
    den_word = (*ord)[0];
    if (den_word == "second") return std::nullopt;
    if (plural) den_word.push_back('s');
  }
  out.push_back(std::move(den_word));
  return out;
}

std::string OrdinalSuffix(uint64_t value) {
  uint64_t mod100 = value % 100;
  if (mod100 >= 11 && mod100 <= 13) return "th";
  switch (value % 10) {
    case 1:
      return "st";
    case 2:
      return "nd";
    case 3:
      return "rd";
    default:
      return "th";
  }
}

std::string RenderWritten(const ParsedNumber& number) {
  if (number.style == NumberStyle::kOrdinal) {
    return number.value.ToString() + OrdinalSuffix(number.value.units);
  }
  return number.value.ToString();
}

}  // namespace itn
