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

#include "itn/tn.h"

#include <cctype>

namespace itn {

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

bool HasDigit(std::string_view s) {
  for (char c : s) {
    if (c >= '0' && c <= '9') return true;
  }
  return false;
}

bool IsUpper(char c) { return c >= 'A' && c <= 'Z'; }

// Joins "dr" + "." back into one token wherever the grammar knows the
// dotted form, so abbreviation periods stop looking like sentence
// punctuation.
Sentence MergeAbbreviations(const Grammar& g, const Sentence& raw) {
  Sentence merged;
  merged.raw = raw.raw;
  for (size_t i = 0; i < raw.tokens.size(); ++i) {
    if (raw.tokens[i].kind == TokenKind::kWord &&
        i + 1 < raw.tokens.size() && raw.tokens[i + 1].surface == "." &&
        g.abbreviations.count(raw.tokens[i].lower + ".")) {
      merged.tokens.push_back(MakeToken(raw.tokens[i].surface + "."));
      ++i;
      continue;
    }
    merged.tokens.push_back(raw.tokens[i]);
  }
  return merged;
}

// Years read in pairs ("nineteen eighty four"), except the two thousands
// and round 1000, which are spoken compositionally.
std::vector<std::string> YearWords(int year) {
  auto v = static_cast<uint64_t>(year);
  if ((year >= 2000 && year <= 2009) || year == 1000) {
    return *VerbalizeCardinal(v, NumberStyle::kCompositional);
  }
  return *VerbalizeCardinal(v, NumberStyle::kPairRead);
}

class Normalizer {
 public:
  Normalizer(const Grammar& g, const std::string& text) : g_(g) {
    result_.written_tokens = MergeAbbreviations(g, Tokenize(text));
  }

  TnResult Run() {
    const auto& toks = result_.written_tokens.tokens;
    size_t i = 0;
    while (i < toks.size()) {
      const Token& tok = toks[i];
      if (tok.kind == TokenKind::kPunctuation) {
        result_.removed_punct.push_back({i, tok.surface});
        ++i;
        continue;
      }
      if (tok.kind == TokenKind::kWord && !HasDigit(tok.surface)) {
        if (g_.abbreviations.count(tok.lower)) {
          i = EmitAbbreviation(i);
          continue;
        }
        if (g_.months.count(tok.lower) && TryDate(i, &i)) continue;
        Push(tok.lower);
        ++i;
        continue;
      }
      if (tok.kind == TokenKind::kNumber ||
          (tok.kind == TokenKind::kWord && HasDigit(tok.surface))) {
        // Word tokens with digits still carry number shapes like "3rd".
        if (TryNumberToken(i, &i)) continue;
      }
      if (HasDigit(tok.surface)) {
        EmitMixed(i);
        ++i;
        continue;
      }
      // Symbols with no letters or digits pass through untouched.
      result_.spoken.tokens.push_back(tok);
      ++i;
    }
    result_.spoken.raw = Detokenize(result_.spoken);
    return std::move(result_);
  }

 private:
  void Push(const std::string& word) {
    result_.spoken.tokens.push_back(MakeToken(word));
  }

  void PushAll(const std::vector<std::string>& words) {
    for (const auto& w : words) Push(w);
  }

  void Record(size_t wb, size_t we, size_t sb, SemioticClass cls,
              NumberStyle style, const Decimal& value) {
    TnExpansion e;
    e.written_begin = wb;
    e.written_end = we;
    e.spoken_begin = sb;
    e.spoken_end = result_.spoken.tokens.size();
    const auto& toks = result_.written_tokens.tokens;
    for (size_t k = wb; k < we; ++k) {
      if (k > wb) e.written += " ";
      e.written += toks[k].surface;
    }
    e.cls = cls;
    e.style = style;
    e.value = value;
    result_.expansions.push_back(std::move(e));
  }

  size_t EmitAbbreviation(size_t i) {
    size_t sb = result_.spoken.tokens.size();
    auto expansion = ExpandAbbreviation(g_, result_.written_tokens, i);
    if (expansion) {
      for (const auto& tok : Tokenize(*expansion).tokens) Push(tok.lower);
    } else {
      // Known dotted token but no applicable rule: keep the word, lose the
      // dot, so the spoken side stays punctuation free.
      std::string bare = result_.written_tokens.tokens[i].lower;
      if (!bare.empty() && bare.back() == '.') bare.pop_back();
      Push(bare);
    }
    Record(i, i + 1, sb, SemioticClass::kPlainWord,
           NumberStyle::kCompositional, Decimal{});
    return i + 1;
  }

  // "october 20, 2020" / "march 2021" / "june 3" after a month word.
  bool TryDate(size_t i, size_t* next) {
    const auto& toks = result_.written_tokens.tokens;
    int day = 0;
    bool day_ordinal = false;
    size_t day_len = 0;
    size_t j = i + 1;
    if (j < toks.size() &&
        (toks[j].kind == TokenKind::kNumber ||
         (toks[j].kind == TokenKind::kWord && HasDigit(toks[j].surface)))) {
      const std::string& s = toks[j].surface;
      if (AllDigits(s) && s.size() <= 2) {
        int v = std::stoi(s);
        if (v >= 1 && v <= 31) {
          day = v;
          day_len = 1;
        }
      } else if (s.size() >= 3 && s.size() <= 4 &&
                 AllDigits(s.substr(0, s.size() - 2))) {
        std::string suffix = s.substr(s.size() - 2);
        int v = std::stoi(s.substr(0, s.size() - 2));
        if (v >= 1 && v <= 31 && suffix == OrdinalSuffix(v)) {
          day = v;
          day_ordinal = true;
          day_len = 1;
        }
      }
    }

    auto year_at = [&](size_t pos) -> int {
      if (pos >= toks.size() || toks[pos].kind != TokenKind::kNumber) return 0;
      const std::string& s = toks[pos].surface;
      if (!AllDigits(s) || s.size() != 4) return 0;
      int v = std::stoi(s);
      return (v >= 1000 && v <= 2099) ? v : 0;
    };

    size_t end = 0;
    int year = 0;
    size_t comma_index = SIZE_MAX;
    if (day > 0) {
      size_t after_day = j + day_len;
      size_t ypos = after_day;
      bool comma = false;
      if (ypos < toks.size() && toks[ypos].surface == ",") {
        comma = true;
        ++ypos;
      }
      if (int y = year_at(ypos)) {
        year = y;
        end = ypos + 1;
        if (comma) comma_index = after_day;
      } else {
        end = after_day;
      }
    } else if (int y = year_at(j)) {
      year = y;
      end = j + 1;
    } else {
      return false;
    }

    size_t sb = result_.spoken.tokens.size();
    Push(toks[i].lower);
    if (day > 0) {
      if (day_ordinal) {
        PushAll(*VerbalizeOrdinal(static_cast<uint64_t>(day)));
      } else {
        PushAll(*VerbalizeCardinal(static_cast<uint64_t>(day),
                                   NumberStyle::kCompositional));
      }
    }
    if (year > 0) PushAll(YearWords(year));
    if (comma_index != SIZE_MAX) {
      result_.removed_punct.push_back({comma_index, ","});
    }
    Record(i, end, sb, SemioticClass::kDate, NumberStyle::kCompositional,
           Decimal::FromInt(static_cast<uint64_t>(year)));
    *next = end;
    return true;
  }

  bool TryNumberToken(size_t i, size_t* next) {
    const auto& toks = result_.written_tokens.tokens;
    const std::string& s = toks[i].surface;
    size_t sb = result_.spoken.tokens.size();

    // "7:45" and "12:00".
    if (auto colon = s.find(':'); colon != std::string::npos) {
      std::string hs = s.substr(0, colon);
      std::string ms = s.substr(colon + 1);
      if (AllDigits(hs) && hs.size() <= 2 && AllDigits(ms) && ms.size() == 2) {
        int hour = std::stoi(hs);
        int minute = std::stoi(ms);
        if (hour >= 1 && hour <= 12 && minute <= 59) {
          PushAll(*VerbalizeCardinal(static_cast<uint64_t>(hour),
                                     NumberStyle::kCompositional));
          if (minute >= 1 && minute <= 9) {
            Push("oh");
            Push(DigitWord(static_cast<char>('0' + minute)));
          } else if (minute >= 10) {
            PushAll(*VerbalizeCardinal(static_cast<uint64_t>(minute),
                                       NumberStyle::kCompositional));
          }
          Record(i, i + 1, sb, SemioticClass::kTime,
                 NumberStyle::kCompositional, Decimal{});
          *next = i + 1;
          return true;
        }
      }
    }

    // Phone-shaped: digits and separators matching a grammar template.
    if (s.find('-') != std::string::npos && g_.phone_enabled()) {
      std::string digits;
      bool clean = true;
      for (char c : s) {
        if (c >= '0' && c <= '9') {
          digits.push_back(c);
        } else if (c != '-') {
          clean = false;
          break;
        }
      }
      if (clean) {
        for (const auto& pattern : g_.phone_patterns) {
          if (pattern.Matches(digits)) {
            for (char c : digits) Push(DigitWord(c));
            Record(i, i + 1, sb, SemioticClass::kPhone,
                   NumberStyle::kDigitRead, Decimal{});
            *next = i + 1;
            return true;
          }
        }
      }
    }

    // "$3649.84", "$20".
    if (s.size() > 1 && s[0] == '$') {
      if (auto value = Decimal::Parse(s.substr(1))) {
        PushAll(VerbalizeDecimal(*value));
        std::string word;
        bool singular = value->IsInteger() && value->units == 1;
        auto sit = g_.currency_singular.find("$");
        auto pit = g_.currency_words.find("$");
        if (singular && sit != g_.currency_singular.end()) {
          word = sit->second;
        } else if (pit != g_.currency_words.end()) {
          word = pit->second;
        }
        if (!word.empty()) {
          Push(word);
          Record(i, i + 1, sb, SemioticClass::kCurrency,
                 NumberStyle::kCompositional, *value);
          *next = i + 1;
          return true;
        }
      }
    }

    // "42%", "42.5%".
    if (s.size() > 1 && s.back() == '%') {
      if (auto value = Decimal::Parse(s.substr(0, s.size() - 1))) {
        PushAll(VerbalizeDecimal(*value));
        Push("percent");
        Record(i, i + 1, sb, SemioticClass::kPercent,
               NumberStyle::kCompositional, *value);
        *next = i + 1;
        return true;
      }
    }

    // "23rd", "101st".
    if (s.size() >= 3) {
      std::string suffix = s.substr(s.size() - 2);
      std::string head = s.substr(0, s.size() - 2);
      if (AllDigits(head) &&
          (suffix == "st" || suffix == "nd" || suffix == "rd" ||
           suffix == "th")) {
        if (auto value = Decimal::Parse(head);
            value && suffix == OrdinalSuffix(value->units)) {
          if (auto words = VerbalizeOrdinal(value->units)) {
            PushAll(*words);
            Record(i, i + 1, sb, SemioticClass::kOrdinal,
                   NumberStyle::kOrdinal, *value);
            *next = i + 1;
            return true;
          }
        }
      }
    }

    // "3/4".
    if (auto slash = s.find('/'); slash != std::string::npos) {
      std::string ns = s.substr(0, slash);
      std::string ds = s.substr(slash + 1);
      if (AllDigits(ns) && AllDigits(ds)) {
        auto n = Decimal::Parse(ns);
        auto d = Decimal::Parse(ds);
        if (n && d) {
          if (auto words = VerbalizeFraction(n->units, d->units)) {
            PushAll(*words);
            Record(i, i + 1, sb, SemioticClass::kFraction,
                   NumberStyle::kFraction, Decimal{});
            *next = i + 1;
            return true;
          }
        }
      }
    }

    // Plain decimals and integers; integers may bind a following unit word
    // ("12 km" -> "twelve kilometers").
    if (auto value = Decimal::Parse(s)) {
      if (!value->IsInteger()) {
        PushAll(VerbalizeDecimal(*value));
        Record(i, i + 1, sb, SemioticClass::kDecimal,
               NumberStyle::kCompositional, *value);
        *next = i + 1;
        return true;
      }
      uint64_t v = value->units;
      if (i + 1 < toks.size() && toks[i + 1].kind == TokenKind::kWord) {
        const std::string& unit_written = toks[i + 1].lower;
        bool singular = v == 1;
        const auto& first = singular ? g_.unit_singular : g_.unit_plural;
        const auto& second = singular ? g_.unit_plural : g_.unit_singular;
        std::string unit_spoken;
        if (auto it = first.find(unit_written); it != first.end()) {
          unit_spoken = it->second;
        } else if (auto it2 = second.find(unit_written); it2 != second.end()) {
          unit_spoken = it2->second;
        }
        if (!unit_spoken.empty()) {
          PushAll(*VerbalizeCardinal(v, NumberStyle::kCompositional));
          Push(unit_spoken);
          Record(i, i + 2, sb, SemioticClass::kMeasure,
                 NumberStyle::kCompositional, *value);
          *next = i + 2;
          return true;
        }
      }
      if (s.size() == 4 && v >= 1000 && v <= 2099) {
        PushAll(YearWords(static_cast<int>(v)));
        Record(i, i + 1, sb, SemioticClass::kYear, NumberStyle::kPairRead,
               *value);
        *next = i + 1;
        return true;
      }
      PushAll(*VerbalizeCardinal(v, NumberStyle::kCompositional));
      Record(i, i + 1, sb, SemioticClass::kCardinal,
             NumberStyle::kCompositional, *value);
      *next = i + 1;
      return true;
    }
    return false;
  }

  // Letter runs become lowercased words, digit runs are spelled digit by
  // digit, anything else is dropped. Keeps the no-digits guarantee for
  // tokens like "x86" without pretending they round-trip.
  void EmitMixed(size_t i) {
    const std::string& s = result_.written_tokens.tokens[i].surface;
    std::string word;
    auto flush = [&] {
      if (!word.empty()) {
        Push(AsciiLower(word));
        word.clear();
      }
    };
    for (char c : s) {
      if (c >= '0' && c <= '9') {
        flush();
        Push(DigitWord(c));
      } else if (std::isalpha(static_cast<unsigned char>(c)) ||
                 c == '\'') {
        word.push_back(c);
      } else {
        flush();
      }
    }
    flush();
  }

  const Grammar& g_;
  TnResult result_;
};

}  // namespace

TnResult Tn(const Grammar& grammar, const std::string& written) {
  return Normalizer(grammar, written).Run();
}

Sentence WrittenForRestoration(const TnResult& result) {
  Sentence out;
  out.raw = result.written_tokens.raw;
  const auto& toks = result.written_tokens.tokens;
  for (size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].kind == TokenKind::kPunctuation) {
      bool inside_expansion = false;
      for (const auto& e : result.expansions) {
        if (i > e.written_begin && i + 1 < e.written_end) {
          inside_expansion = true;
          break;
        }
      }
      if (inside_expansion) continue;
    }
    out.tokens.push_back(toks[i]);
  }
  return out;
}

std::optional<std::string> ExpandAbbreviation(const Grammar& grammar,
                                              const Sentence& sentence,
                                              size_t index) {
  if (index >= sentence.tokens.size()) return std::nullopt;
  auto entry = grammar.abbreviations.find(sentence.tokens[index].lower);
  if (entry == grammar.abbreviations.end()) return std::nullopt;

  const Token* left = nullptr;
  const Token* right = nullptr;
  if (index > 0 && sentence.tokens[index - 1].kind == TokenKind::kWord) {
    left = &sentence.tokens[index - 1];
  }
  if (index + 1 < sentence.tokens.size() &&
      sentence.tokens[index + 1].kind == TokenKind::kWord) {
    right = &sentence.tokens[index + 1];
  }

  for (const auto& rule : entry->second.rules) {
    switch (rule.condition) {
      case AbbreviationEntry::Condition::kNextCapital:
        if (right && !right->surface.empty() && IsUpper(right->surface[0])) {
          return rule.expansion;
        }
        break;
      case AbbreviationEntry::Condition::kPrevCapital:
        if (left && !left->surface.empty() && IsUpper(left->surface[0])) {
          return rule.expansion;
        }
        break;
      case AbbreviationEntry::Condition::kNextWord:
        if (right) return rule.expansion;
        break;
      case AbbreviationEntry::Condition::kPrevWord:
        if (left) return rule.expansion;
        break;
      case AbbreviationEntry::Condition::kDefault:
        return rule.expansion;
    }
  }
  return std::nullopt;
}

}  // namespace itn
