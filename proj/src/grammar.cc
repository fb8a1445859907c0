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

#include "itn/grammar.h"

#include <cctype>
#include <fstream>
#include <sstream>

#include "itn/token.h"

namespace itn {

GrammarError::GrammarError(Kind kind, const std::string& file, int line,
                           const std::string& message)
    : std::runtime_error(file + ":" + std::to_string(line) + ": " + message),
      kind_(kind),
      file_(file),
      line_(line) {}

bool operator==(const TimeOfDay& a, const TimeOfDay& b) {
  return a.hour == b.hour && a.minute == b.minute && a.meridiem == b.meridiem;
}

bool operator==(const AbbreviationEntry::Rule& a,
                const AbbreviationEntry::Rule& b) {
  return a.condition == b.condition && a.expansion == b.expansion;
}

bool operator==(const AbbreviationEntry& a, const AbbreviationEntry& b) {
  return a.rules == b.rules;
}

bool operator==(const PhonePattern& a, const PhonePattern& b) {
  return a.pattern == b.pattern && a.digit_count == b.digit_count;
}

bool Grammar::operator==(const Grammar& other) const {
  return schema_version == other.schema_version && locale == other.locale &&
         months == other.months && month_names == other.month_names &&
         weekdays == other.weekdays && currency == other.currency &&
         currency_words == other.currency_words &&
         currency_singular == other.currency_singular &&
         currency_minor == other.currency_minor && units == other.units &&
         time_words == other.time_words && time_zones == other.time_zones &&
         meridiem == other.meridiem && phone_patterns == other.phone_patterns &&
         abbreviations == other.abbreviations &&
         unit_singular == other.unit_singular &&
         unit_plural == other.unit_plural;
}

bool PhonePattern::Matches(const std::string& digits) const {
  if (digits.size() != digit_count) return false;
  size_t di = 0;
  for (char c : pattern) {
    if (c == '-') continue;
    if (c != 'X' && c != digits[di]) return false;
    ++di;
  }
  return true;
}

std::string PhonePattern::Render(const std::string& digits) const {
  if (!Matches(digits)) return {};
  std::string out;
  size_t di = 0;
  for (char c : pattern) {
    if (c == '-') {
      out.push_back('-');
    } else {
      out.push_back(digits[di++]);
    }
  }
  return out;
}

namespace {

std::string Trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

class LexiconParser {
 public:
  explicit LexiconParser(Grammar* grammar) : g_(grammar) {}

  void ParseText(std::string_view text, const std::string& filename) {
    file_ = filename;
    line_no_ = 0;
    section_.clear();
    saw_schema_version_ = false;
    std::istringstream stream{std::string(text)};
    std::string line;
    while (std::getline(stream, line)) {
      ++line_no_;
      HandleLine(line);
    }
    if (!saw_schema_version_) {
      Fail(GrammarError::Kind::kSyntax, "missing required schema_version key");
    }
  }

 private:
  [[noreturn]] void Fail(GrammarError::Kind kind, const std::string& msg) {
    throw GrammarError(kind, file_, line_no_, msg);
  }

  void HandleLine(const std::string& raw) {
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    line = Trim(line);
    if (line.empty()) return;

    if (line.front() == '[') {
      if (line.back() != ']') {
        Fail(GrammarError::Kind::kSyntax, "unterminated section header");
      }
      section_ = Trim(line.substr(1, line.size() - 2));
      if (!IsKnownSection(section_)) {
        Fail(GrammarError::Kind::kSyntax, "unknown section [" + section_ + "]");
      }
      return;
    }

    auto eq = line.find('=');
    if (section_.empty()) {
      if (eq == std::string::npos) {
        Fail(GrammarError::Kind::kSyntax,
             "expected key = value before any section");
      }
      TopLevel(Trim(line.substr(0, eq)), Trim(line.substr(eq + 1)));
      return;
    }
    if (IsListSection(section_)) {
      if (eq != std::string::npos) {
        Fail(GrammarError::Kind::kSyntax,
             "list section [" + section_ + "] takes bare items, not key = value");
      }
      ListItem(line);
      return;
    }
    if (eq == std::string::npos) {
      Fail(GrammarError::Kind::kSyntax, "expected key = value");
    }
    KeyValue(Trim(line.substr(0, eq)), Trim(line.substr(eq + 1)));
  }

  static bool IsKnownSection(const std::string& s) {
    return s == "months" || s == "weekdays" || s == "currency" ||
           s == "currency_minor" || s == "units" || s == "time_words" ||
           s == "time_zones" || s == "meridiem" || s == "phone" ||
           s == "abbreviations";
  }

  static bool IsListSection(const std::string& s) {
    return s == "weekdays" || s == "currency_minor" || s == "time_zones" ||
           s == "phone";
  }

  void TopLevel(const std::string& key, const std::string& value) {
    if (key == "schema_version") {
      if (saw_schema_version_) {
        Fail(GrammarError::Kind::kDuplicateKey, "duplicate schema_version");
      }
      saw_schema_version_ = true;
      int v = ParseInt(value, 1, 1000000);
      if (v != kGrammarSchemaVersion) {
        Fail(GrammarError::Kind::kSyntax,
             "unsupported schema_version " + value + " (expected " +
                 std::to_string(kGrammarSchemaVersion) + ")");
      }
      g_->schema_version = v;
      return;
    }
    if (key == "locale") {
      if (!g_->locale.empty() && g_->locale != value) {
        Fail(GrammarError::Kind::kSyntax,
             "locale " + value + " conflicts with earlier locale " + g_->locale);
      }
      g_->locale = value;
      return;
    }
    Fail(GrammarError::Kind::kSyntax, "unknown top-level key " + key);
  }

  int ParseInt(const std::string& s, int min, int max) {
    if (s.empty()) Fail(GrammarError::Kind::kSyntax, "expected integer");
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') {
        Fail(GrammarError::Kind::kSyntax, "expected integer, got " + s);
      }
      v = v * 10 + (c - '0');
      if (v > max) break;
    }
    if (v < min || v > max) {
      Fail(GrammarError::Kind::kSyntax, "integer " + s + " out of range");
    }
    return v;
  }

  void ListItem(const std::string& item) {
    if (section_ == "weekdays") {
      if (!g_->weekdays.insert(item).second) {
        Fail(GrammarError::Kind::kDuplicateKey, "duplicate weekday " + item);
      }
    } else if (section_ == "currency_minor") {
      if (!g_->currency_minor.insert(item).second) {
        Fail(GrammarError::Kind::kDuplicateKey,
             "duplicate minor currency word " + item);
      }
    } else if (section_ == "time_zones") {
      if (!g_->time_zones.insert(item).second) {
        Fail(GrammarError::Kind::kDuplicateKey, "duplicate time zone " + item);
      }
    } else if (section_ == "phone") {
      AddPhonePattern(item);
    }
  }

  void AddPhonePattern(const std::string& pattern) {
    PhonePattern p;
    p.pattern = pattern;
    for (char c : pattern) {
      if (c == 'X' || (c >= '0' && c <= '9')) {
        ++p.digit_count;
      } else if (c != '-') {
        Fail(GrammarError::Kind::kSyntax,
             "phone pattern may contain only X, digits and '-': " + pattern);
      }
    }
    if (p.digit_count == 0) {
      Fail(GrammarError::Kind::kSyntax, "phone pattern has no digit slots");
    }
    for (const auto& existing : g_->phone_patterns) {
      if (existing.pattern == pattern) {
        Fail(GrammarError::Kind::kDuplicateKey,
             "duplicate phone pattern " + pattern);
      }
    }
    g_->phone_patterns.push_back(std::move(p));
  }

  void KeyValue(const std::string& key, const std::string& value) {
    if (key.empty()) Fail(GrammarError::Kind::kSyntax, "empty key");
    if (section_ == "months") {
      int v = ParseInt(value, 1, 12);
      if (!g_->months.emplace(key, v).second) {
        Fail(GrammarError::Kind::kDuplicateKey, "duplicate month " + key);
      }
      if (g_->month_names.empty()) g_->month_names.assign(13, "");
      if (g_->month_names[v].empty()) {
        std::string name = key;
        if (name[0] >= 'a' && name[0] <= 'z') {
          name[0] = static_cast<char>(name[0] - 'a' + 'A');
        }
        g_->month_names[v] = name;
      }
    } else if (section_ == "currency") {
      if (!g_->currency.emplace(key, value).second) {
        Fail(GrammarError::Kind::kDuplicateKey, "duplicate currency word " + key);
      }
      // The written renderer needs one spoken word per symbol; prefer the
      // plural since amounts other than one dominate, but keep the singular
      // separately for exact-one amounts.
      auto it = g_->currency_words.find(value);
      bool plural = !key.empty() && key.back() == 's';
      if (it == g_->currency_words.end()) {
        g_->currency_words.emplace(value, key);
      } else if (plural && (it->second.empty() || it->second.back() != 's')) {
        it->second = key;
      }
      if (!plural) g_->currency_singular.emplace(value, key);
    } else if (section_ == "units") {
      if (!g_->units.emplace(key, value).second) {
        Fail(GrammarError::Kind::kDuplicateKey, "duplicate unit " + key);
      }
      bool plural = !key.empty() && key.back() == 's';
      auto& slot = plural ? g_->unit_plural : g_->unit_singular;
      slot.emplace(value, key);  // first spelling wins
    } else if (section_ == "time_words") {
      TimeOfDay tod = ParseTimeOfDay(value);
      if (!g_->time_words.emplace(key, tod).second) {
        Fail(GrammarError::Kind::kDuplicateKey, "duplicate time word " + key);
      }
    } else if (section_ == "meridiem") {
      if (value != "am" && value != "pm") {
        Fail(GrammarError::Kind::kSyntax,
             "meridiem value must be am or pm, got " + value);
      }
      if (!g_->meridiem.emplace(key, value).second) {
        Fail(GrammarError::Kind::kDuplicateKey, "duplicate meridiem " + key);
      }
    } else if (section_ == "abbreviations") {
      AddAbbreviation(key, value);
    } else {
      Fail(GrammarError::Kind::kSyntax, "section [" + section_ +
                                            "] does not accept key = value");
    }
  }

  TimeOfDay ParseTimeOfDay(const std::string& value) {
    // "12:00 pm" or "7:30".
    TimeOfDay tod;
    size_t colon = value.find(':');
    if (colon == std::string::npos) {
      Fail(GrammarError::Kind::kSyntax, "time value must look like H:MM");
    }
    tod.hour = ParseInt(Trim(value.substr(0, colon)), 1, 12);
    std::string rest = Trim(value.substr(colon + 1));
    size_t space = rest.find(' ');
    std::string minutes = space == std::string::npos ? rest : rest.substr(0, space);
    if (minutes.size() != 2) {
      Fail(GrammarError::Kind::kSyntax, "time minutes must be two digits");
    }
    tod.minute = ParseInt(minutes, 0, 59);
    if (space != std::string::npos) {
      std::string mer = Trim(rest.substr(space + 1));
      if (mer == "am") {
        tod.meridiem = Meridiem::kAm;
      } else if (mer == "pm") {
        tod.meridiem = Meridiem::kPm;
      } else {
        Fail(GrammarError::Kind::kSyntax, "bad meridiem " + mer);
      }
    }
    return tod;
  }

  void AddAbbreviation(const std::string& key, const std::string& value) {
    if (g_->abbreviations.count(key)) {
      Fail(GrammarError::Kind::kDuplicateKey, "duplicate abbreviation " + key);
    }
    AbbreviationEntry entry;
    std::istringstream parts{value};
    std::string part;
    while (std::getline(parts, part, ',')) {
      part = Trim(part);
      if (part.empty()) continue;
      auto colon = part.rfind(':');
      if (colon == std::string::npos) {
        Fail(GrammarError::Kind::kSyntax,
             "abbreviation rule needs expansion:condition, got " + part);
      }
      AbbreviationEntry::Rule rule;
      rule.expansion = Trim(part.substr(0, colon));
      std::string cond = Trim(part.substr(colon + 1));
      if (cond == "next_capital") {
        rule.condition = AbbreviationEntry::Condition::kNextCapital;
      } else if (cond == "prev_capital") {
        rule.condition = AbbreviationEntry::Condition::kPrevCapital;
      } else if (cond == "next_word") {
        rule.condition = AbbreviationEntry::Condition::kNextWord;
      } else if (cond == "prev_word") {
        rule.condition = AbbreviationEntry::Condition::kPrevWord;
      } else if (cond == "default") {
        rule.condition = AbbreviationEntry::Condition::kDefault;
      } else {
        Fail(GrammarError::Kind::kSyntax, "unknown condition " + cond);
      }
      if (rule.expansion.empty()) {
        Fail(GrammarError::Kind::kSyntax, "empty expansion in " + value);
      }
      entry.rules.push_back(std::move(rule));
    }
    if (entry.rules.empty()) {
      Fail(GrammarError::Kind::kSyntax, "abbreviation has no rules");
    }
    g_->abbreviations.emplace(key, std::move(entry));
  }

  Grammar* g_;
  std::string file_;
  int line_no_ = 0;
  std::string section_;
  bool saw_schema_version_ = false;
};

}  // namespace

Grammar CompileGrammarText(std::string_view text, const std::string& filename) {
  Grammar g;
  LexiconParser parser(&g);
  parser.ParseText(text, filename);
  return g;
}

Grammar CompileGrammar(const std::vector<std::string>& paths) {
  if (paths.empty()) {
    throw GrammarError(GrammarError::Kind::kIo, "<none>", 0,
                       "no lexicon files given");
  }
  Grammar g;
  LexiconParser parser(&g);
  for (const auto& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw GrammarError(GrammarError::Kind::kIo, path, 0,
                         "cannot open lexicon file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    parser.ParseText(buf.str(), path);
  }
  return g;
}

const Grammar& DefaultGrammar() {
  static const Grammar* kGrammar = new Grammar(
      CompileGrammarText(DefaultGrammarText(), "<builtin>"));
  return *kGrammar;
}

}  // namespace itn
