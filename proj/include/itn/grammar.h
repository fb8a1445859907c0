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

#ifndef ITN_GRAMMAR_H_
#define ITN_GRAMMAR_H_

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace itn {

// Lexicon files are line-oriented: "# comment", "[section]" headers, and
// either "key = value" rows or bare list items depending on the section.
// See data/grammar_en_us.lex for the reference file and the full section
// catalog. schema_version must be 1.
constexpr int kGrammarSchemaVersion = 1;

class GrammarError : public std::runtime_error {
 public:
  enum class Kind { kSyntax, kDuplicateKey, kIo };

  GrammarError(Kind kind, const std::string& file, int line,
               const std::string& message);

  Kind kind() const { return kind_; }
  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  std::string file_;
  int line_;
};

enum class Meridiem { kNone, kAm, kPm };

struct TimeOfDay {
  int hour = 0;    // 1..12
  int minute = 0;  // 0..59
  Meridiem meridiem = Meridiem::kNone;
};

// One abbreviation with context-conditioned expansions, evaluated in a fixed
// order: next_capital, prev_capital, next_word, prev_word, default. The first
// rule whose condition holds wins, so "dr." can expand to "doctor" before a
// capitalized name and "drive" after one.
struct AbbreviationEntry {
  enum class Condition { kNextCapital, kPrevCapital, kNextWord, kPrevWord,
                         kDefault };
  struct Rule {
    Condition condition;
    std::string expansion;
  };
  std::vector<Rule> rules;
};

// A phone digit template such as "XXX-XXX-XXXX" or "1-XXX-XXX-XXXX".
// "X" matches any digit, a literal digit must match itself, and "-" marks
// where separators go in the written form.
struct PhonePattern {
  std::string pattern;
  size_t digit_count = 0;

  // Written form for a digit string of matching length, or empty when the
  // literals disagree.
  std::string Render(const std::string& digits) const;
  bool Matches(const std::string& digits) const;
};

struct Grammar {
  int schema_version = 0;
  std::string locale;

  std::map<std::string, int> months;            // spoken word -> 1..12
  std::vector<std::string> month_names;         // [1..12] -> written name
  std::set<std::string> weekdays;
  std::map<std::string, std::string> currency;  // word -> symbol ("dollars"->"$")
  std::map<std::string, std::string> currency_words;     // symbol -> plural word
  std::map<std::string, std::string> currency_singular;  // symbol -> singular
  std::set<std::string> currency_minor;         // "cents", "pence"
  std::map<std::string, std::string> units;     // spoken word -> written form
  std::map<std::string, TimeOfDay> time_words;  // "noon" -> 12:00 pm
  std::set<std::string> time_zones;
  std::map<std::string, std::string> meridiem;  // "a m" -> "am"
  std::vector<PhonePattern> phone_patterns;     // empty disables phone tagging
  std::map<std::string, AbbreviationEntry> abbreviations;  // "dr." -> rules

  bool phone_enabled() const { return !phone_patterns.empty(); }

  // Written unit form -> spoken words, split into singular and plural
  // ("km" -> kilometer / kilometers). Derived from `units` at compile time.
  std::map<std::string, std::string> unit_singular;
  std::map<std::string, std::string> unit_plural;

  bool operator==(const Grammar& other) const;
};

bool operator==(const TimeOfDay& a, const TimeOfDay& b);
bool operator==(const AbbreviationEntry& a, const AbbreviationEntry& b);
bool operator==(const AbbreviationEntry::Rule& a,
                const AbbreviationEntry::Rule& b);
bool operator==(const PhonePattern& a, const PhonePattern& b);

// Compiles one or more lexicon files into a Grammar. Later files extend
// earlier ones; a key redefined anywhere is a DuplicateKey error, and
// malformed lines raise Syntax errors naming the file and line.
Grammar CompileGrammar(const std::vector<std::string>& paths);

// Same, from an in-memory lexicon body. `filename` is used in errors only.
Grammar CompileGrammarText(std::string_view text, const std::string& filename);

// The built-in en-US grammar, also shipped as data/grammar_en_us.lex.
const std::string& DefaultGrammarText();
const Grammar& DefaultGrammar();

}  // namespace itn

#endif  // ITN_GRAMMAR_H_
