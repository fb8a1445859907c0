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

#include "itn/tagger.h"

#include <algorithm>

namespace itn {

namespace {

bool IsWord(const std::vector<Token>& toks, size_t i) {
  return i < toks.size() && toks[i].kind == TokenKind::kWord;
}

std::string_view Lower(const std::vector<Token>& toks, size_t i) {
  return toks[i].lower;
}

int ClassPriority(SemioticClass cls) {
  switch (cls) {
    case SemioticClass::kPhone:
      return 10;
    case SemioticClass::kDate:
      return 9;
    case SemioticClass::kTime:
      return 8;
    case SemioticClass::kCurrency:
      return 7;
    case SemioticClass::kPercent:
      return 6;
    case SemioticClass::kMeasure:
      return 5;
    case SemioticClass::kFraction:
      return 4;
    case SemioticClass::kOrdinal:
      return 3;
    case SemioticClass::kDecimal:
      return 2;
    case SemioticClass::kCardinal:
    case SemioticClass::kYear:
      return 1;
    default:
      return 0;
  }
}

void Consider(std::vector<EntitySpan>* candidates, EntitySpan span) {
  candidates->push_back(std::move(span));
}

// Phone numbers are runs of digit words where "N hundred" contributes N00
// ("one eight hundred ..." starts 1-800). The run must fill one of the
// grammar's digit templates exactly.
std::optional<EntitySpan> MatchPhone(const Grammar& g,
                                     const std::vector<Token>& toks, size_t i) {
  if (!g.phone_enabled()) return std::nullopt;
  std::string digits;
  size_t j = i;
  while (IsWord(toks, j)) {
    int unit = UnitsTeenWordValue(Lower(toks, j));
    if (unit >= 1 && unit <= 9 && IsWord(toks, j + 1) &&
        Lower(toks, j + 1) == "hundred") {
      digits.push_back(static_cast<char>('0' + unit));
      digits += "00";
      j += 2;
      continue;
    }
    int d = DigitWordValue(Lower(toks, j));
    if (d < 0) break;
    digits.push_back(static_cast<char>('0' + d));
    ++j;
  }
  if (digits.empty()) return std::nullopt;
  for (const auto& pattern : g.phone_patterns) {
    if (pattern.Matches(digits)) {
      EntitySpan span;
      span.cls = SemioticClass::kPhone;
      span.begin = i;
      span.end = j;
      span.phone_written = pattern.Render(digits);
      return span;
    }
  }
  return std::nullopt;
}

struct DayParse {
  int day = 0;
  size_t len = 0;
  bool ordinal = false;
};

// Day-of-month readings at position i: an ordinal ("twenty ninth") or a
// small compositional cardinal ("twenty nine", "five"). Both lengths of the
// cardinal form are reported, since the right split ("twenty | two thousand
// four" versus "twenty two | thousand four") only falls out once the year
// behind it is parsed.
std::vector<DayParse> ParseDays(const std::vector<Token>& toks, size_t i) {
  std::vector<DayParse> out;
  if (auto ord = ParseOrdinal(toks, i, 2)) {
    uint64_t v = ord->value.units;
    if (v >= 1 && v <= 31) {
      out.push_back({static_cast<int>(v), ord->consumed, true});
    }
  }
  for (size_t take = 2; take >= 1; --take) {
    auto num = ParseNumber(toks, i, take);
    if (num && num->consumed == take && num->value.IsInteger() &&
        num->style == NumberStyle::kCompositional && num->value.units >= 1 &&
        num->value.units <= 31) {
      out.push_back({static_cast<int>(num->value.units), take, false});
    }
    if (take == 1) break;
  }
  return out;
}

// Year 1000..2099, spoken pair-read ("twenty twelve", "nineteen hundred")
// or compositionally ("two thousand nine").
std::optional<int> ParseYear(const std::vector<Token>& toks, size_t i,
                             size_t* len) {
  for (size_t take = 4; take >= 2; --take) {
    auto num = ParseNumber(toks, i, take);
    if (!num || num->consumed != take || !num->value.IsInteger()) continue;
    if (num->style != NumberStyle::kPairRead &&
        num->style != NumberStyle::kCompositional &&
        num->style != NumberStyle::kCompositionalAnd) {
      continue;
    }
    uint64_t v = num->value.units;
    if (v >= 1000 && v <= 2099) {
      *len = take;
      return static_cast<int>(v);
    }
  }
  return std::nullopt;
}

std::optional<EntitySpan> MatchDate(const Grammar& g,
                                    const std::vector<Token>& toks, size_t i) {
  if (!IsWord(toks, i)) return std::nullopt;
  auto month = g.months.find(std::string(Lower(toks, i)));
  if (month == g.months.end()) return std::nullopt;

  EntitySpan best;
  bool found = false;
  auto consider = [&](const EntitySpan& cand) {
    if (!found || cand.end > best.end) {
      best = cand;
      found = true;
    }
  };

  EntitySpan base;
  base.cls = SemioticClass::kDate;
  base.begin = i;
  base.month = month->second;
  base.month_surface = toks[i].surface;

  for (const DayParse& day : ParseDays(toks, i + 1)) {
    EntitySpan with_day = base;
    with_day.day = day.day;
    with_day.day_ordinal = day.ordinal;
    with_day.end = i + 1 + day.len;
    consider(with_day);

    size_t year_at = i + 1 + day.len;
    bool comma = false;
    if (year_at < toks.size() && toks[year_at].surface == ",") {
      comma = true;
      ++year_at;
    }
    size_t year_len = 0;
    if (auto year = ParseYear(toks, year_at, &year_len)) {
      EntitySpan full = with_day;
      full.year = *year;
      full.date_comma = comma;
      full.end = year_at + year_len;
      consider(full);
    }
  }
  size_t year_len = 0;
  if (auto year = ParseYear(toks, i + 1, &year_len)) {
    EntitySpan with_year = base;
    with_year.year = *year;
    with_year.end = i + 1 + year_len;
    consider(with_year);
  }
  if (!found) return std::nullopt;
  return best;
}

// Minutes after an hour word: "oh five" (05), "ten".."nineteen", or a tens
// word optionally followed by a unit ("twenty nine"). Returns -1 when the
// following tokens are not minutes.
int ParseMinutes(const std::vector<Token>& toks, size_t i, size_t* len) {
  *len = 0;
  if (!IsWord(toks, i)) return -1;
  std::string_view w = Lower(toks, i);
  if (w == "oh" || w == "zero") {
    if (IsWord(toks, i + 1)) {
      int d = UnitsTeenWordValue(Lower(toks, i + 1));
      if (d >= 1 && d <= 9) {
        *len = 2;
        return d;
      }
    }
    return -1;
  }
  int teen = UnitsTeenWordValue(w);
  if (teen >= 10) {
    *len = 1;
    return teen;
  }
  int tens = TensWordValue(w);
  if (tens >= 20 && tens <= 50) {
    if (IsWord(toks, i + 1)) {
      int d = UnitsTeenWordValue(Lower(toks, i + 1));
      if (d >= 1 && d <= 9) {
        *len = 2;
        return tens + d;
      }
    }
    *len = 1;
    return tens;
  }
  return -1;
}

// Meridiem marker at i: single token ("am", "pm") or the two-token spelled
// form ("a m", "p m").
Meridiem MatchMeridiem(const Grammar& g, const std::vector<Token>& toks,
                       size_t i, size_t* len) {
  *len = 0;
  if (!IsWord(toks, i)) return Meridiem::kNone;
  if (IsWord(toks, i + 1)) {
    std::string two = std::string(Lower(toks, i)) + " " +
                      std::string(Lower(toks, i + 1));
    auto it = g.meridiem.find(two);
    if (it != g.meridiem.end()) {
      *len = 2;
      return it->second == "am" ? Meridiem::kAm : Meridiem::kPm;
    }
  }
  auto it = g.meridiem.find(std::string(Lower(toks, i)));
  if (it != g.meridiem.end()) {
    *len = 1;
    return it->second == "am" ? Meridiem::kAm : Meridiem::kPm;
  }
  return Meridiem::kNone;
}

// Times need context beyond the bare words: "ten twenty nine" is a number
// unless a meridiem or o'clock follows, a time zone word comes right after,
// "at" comes right before, or an earlier time was already seen in the
// sentence (that last trigger keeps "noon or two or four" working and is
// limited to coordinated positions).
std::optional<EntitySpan> MatchTime(const Grammar& g,
                                    const std::vector<Token>& toks, size_t i,
                                    bool time_seen) {
  if (!IsWord(toks, i)) return std::nullopt;

  auto named = g.time_words.find(std::string(Lower(toks, i)));
  if (named != g.time_words.end()) {
    EntitySpan span;
    span.cls = SemioticClass::kTime;
    span.begin = i;
    span.end = i + 1;
    span.hour = named->second.hour;
    span.minute = named->second.minute;
    span.meridiem = named->second.meridiem;
    return span;
  }

  int hour = UnitsTeenWordValue(Lower(toks, i));
  if (hour < 1 || hour > 12) return std::nullopt;
  size_t j = i + 1;

  size_t min_len = 0;
  int minute = ParseMinutes(toks, j, &min_len);
  if (minute >= 0) j += min_len;

  bool oclock = false;
  if (minute < 0 && IsWord(toks, j) && Lower(toks, j) == "o'clock") {
    oclock = true;
    ++j;
  }

  size_t mer_len = 0;
  Meridiem mer = MatchMeridiem(g, toks, j, &mer_len);
  if (mer != Meridiem::kNone) j += mer_len;

  bool prev_at = i > 0 && toks[i - 1].lower == "at";
  bool prev_coord =
      i > 0 && (toks[i - 1].lower == "or" || toks[i - 1].lower == "and" ||
                toks[i - 1].surface == ",");
  bool zone_follows = j < toks.size() && toks[j].kind == TokenKind::kWord &&
                      g.time_zones.count(std::string(Lower(toks, j))) > 0;

  bool ok = mer != Meridiem::kNone || oclock;
  if (!ok && minute >= 0) ok = zone_follows || prev_at || time_seen;
  if (!ok && minute < 0) ok = prev_at || (time_seen && prev_coord);
  if (!ok) return std::nullopt;

  EntitySpan span;
  span.cls = SemioticClass::kTime;
  span.begin = i;
  span.end = j;
  span.hour = hour;
  span.minute = minute < 0 ? 0 : minute;
  span.meridiem = mer;
  return span;
}

std::optional<ParsedNumber> AmountAt(const std::vector<Token>& toks, size_t i) {
  return ParseNumber(toks, i);
}

std::optional<EntitySpan> MatchCurrency(const Grammar& g,
                                        const std::vector<Token>& toks,
                                        size_t i) {
  auto num = AmountAt(toks, i);
  if (!num) return std::nullopt;
  size_t j = i + num->consumed;
  if (!IsWord(toks, j)) return std::nullopt;
  std::string word(Lower(toks, j));
  EntitySpan span;
  span.begin = i;
  span.end = j + 1;
  span.value = num->value;
  span.style = num->style;
  if (auto it = g.currency.find(word); it != g.currency.end()) {
    span.cls = SemioticClass::kCurrency;
    span.currency_symbol = it->second;
    return span;
  }
  if (g.currency_minor.count(word)) {
    span.cls = SemioticClass::kCurrency;
    span.minor_word = word;
    return span;
  }
  return std::nullopt;
}

std::optional<EntitySpan> MatchPercent(const Grammar& g,
                                       const std::vector<Token>& toks,
                                       size_t i) {
  (void)g;
  auto num = AmountAt(toks, i);
  if (!num) return std::nullopt;
  size_t j = i + num->consumed;
  if (!IsWord(toks, j) || Lower(toks, j) != "percent") return std::nullopt;
  EntitySpan span;
  span.cls = SemioticClass::kPercent;
  span.begin = i;
  span.end = j + 1;
  span.value = num->value;
  span.style = num->style;
  return span;
}

std::optional<EntitySpan> MatchMeasure(const Grammar& g,
                                       const std::vector<Token>& toks,
                                       size_t i) {
  auto num = AmountAt(toks, i);
  if (!num) return std::nullopt;
  size_t j = i + num->consumed;
  if (!IsWord(toks, j)) return std::nullopt;
  auto unit = g.units.find(std::string(Lower(toks, j)));
  if (unit == g.units.end()) return std::nullopt;
  EntitySpan span;
  span.cls = SemioticClass::kMeasure;
  span.begin = i;
  span.end = j + 1;
  span.value = num->value;
  span.style = num->style;
  span.unit_written = unit->second;
  return span;
}

std::optional<EntitySpan> MatchFraction(const std::vector<Token>& toks,
                                        size_t i) {
  auto frac = ParseFraction(toks, i);
  if (!frac) return std::nullopt;
  EntitySpan span;
  span.cls = SemioticClass::kFraction;
  span.begin = i;
  span.end = i + frac->consumed;
  span.frac_numerator = frac->numerator;
  span.frac_denominator = frac->denominator;
  span.style = NumberStyle::kFraction;
  return span;
}

std::optional<EntitySpan> MatchOrdinal(const std::vector<Token>& toks,
                                       size_t i) {
  auto ord = ParseOrdinal(toks, i);
  if (!ord) return std::nullopt;
  EntitySpan span;
  span.cls = SemioticClass::kOrdinal;
  span.begin = i;
  span.end = i + ord->consumed;
  span.value = ord->value;
  span.style = NumberStyle::kOrdinal;
  return span;
}

std::optional<EntitySpan> MatchNumber(const std::vector<Token>& toks,
                                      size_t i) {
  auto num = ParseNumber(toks, i);
  if (!num) return std::nullopt;
  EntitySpan span;
  span.begin = i;
  span.end = i + num->consumed;
  span.value = num->value;
  span.style = num->style;
  if (num->style == NumberStyle::kDecimal) {
    span.cls = SemioticClass::kDecimal;
  } else if (num->style == NumberStyle::kPairRead && num->consumed >= 2 &&
             num->value.IsInteger() && num->value.units >= 1000 &&
             num->value.units <= 2099) {
    span.cls = SemioticClass::kYear;
  } else {
    span.cls = SemioticClass::kCardinal;
  }
  return span;
}

}  // namespace

std::vector<EntitySpan> Tag(const Grammar& grammar, const Sentence& sentence) {
  const auto& toks = sentence.tokens;
  std::vector<EntitySpan> spans;
  bool time_seen = false;

  size_t i = 0;
  while (i < toks.size()) {
    if (toks[i].kind == TokenKind::kPunctuation ||
        toks[i].kind == TokenKind::kSymbol) {
      ++i;
      continue;
    }
    std::vector<EntitySpan> candidates;
    if (auto s = MatchPhone(grammar, toks, i)) Consider(&candidates, *s);
    if (auto s = MatchDate(grammar, toks, i)) Consider(&candidates, *s);
    if (auto s = MatchTime(grammar, toks, i, time_seen)) {
      Consider(&candidates, *s);
    }
    if (auto s = MatchCurrency(grammar, toks, i)) Consider(&candidates, *s);
    if (auto s = MatchPercent(grammar, toks, i)) Consider(&candidates, *s);
    if (auto s = MatchMeasure(grammar, toks, i)) Consider(&candidates, *s);
    if (auto s = MatchFraction(toks, i)) Consider(&candidates, *s);
    if (auto s = MatchOrdinal(toks, i)) Consider(&candidates, *s);
    if (auto s = MatchNumber(toks, i)) Consider(&candidates, *s);

    if (candidates.empty()) {
      ++i;
      continue;
    }
    auto best = std::max_element(
        candidates.begin(), candidates.end(),
        [](const EntitySpan& a, const EntitySpan& b) {
          if (a.end != b.end) return a.end < b.end;
          return ClassPriority(a.cls) < ClassPriority(b.cls);
        });
    if (best->cls == SemioticClass::kTime) time_seen = true;
    i = best->end;
    spans.push_back(std::move(*best));
  }

  // A single span holding every non-punctuation token renders dates in their
  // formal form ("October 20, 2020" instead of the fragment spelling).
  if (spans.size() == 1) {
    bool covers = true;
    for (size_t k = 0; k < toks.size(); ++k) {
      if (toks[k].kind == TokenKind::kPunctuation) continue;
      if (k < spans[0].begin || k >= spans[0].end) {
        covers = false;
        break;
      }
    }
    spans[0].covers_sentence = covers;
  }
  return spans;
}

}  // namespace itn
