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
//
// Grammar for spoken English numbers. One written value has many spoken
// readings ("2105" can be "two thousand one hundred five", "twenty one oh
// five", "two one zero five", ...). Each reading style gets its own parser
// and verbalizer so the mapping is exact in both directions.

#ifndef ITN_NUMBER_GRAMMAR_H_
#define ITN_NUMBER_GRAMMAR_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "itn/decimal.h"
#include "itn/token.h"

namespace itn {

enum class NumberStyle {
  kCompositional,     // "two thousand one hundred five"
  kCompositionalAnd,  // "two thousand one hundred and five"
  kPairRead,          // "twenty one oh five"
  kDigitRead,         // "two one zero five"
  kDecimal,           // "three point one four"
  kOrdinal,           // "twenty ninth"
  kFraction,          // "three quarters"
};

const char* NumberStyleName(NumberStyle style);

struct ParsedNumber {
  Decimal value;
  NumberStyle style = NumberStyle::kCompositional;
  size_t consumed = 0;  // token count
};

struct ParsedFraction {
  uint64_t numerator = 0;
  uint64_t denominator = 1;
  size_t consumed = 0;
};

// Parses the longest spoken number starting at tokens[start], looking at most
// `limit` tokens ahead. All styles compete; on equal length the winner is
// Decimal > Compositional > CompositionalAnd > PairRead > DigitRead.
//
// A compositional head ending in a magnitude word may be continued by exactly
// as many single-digit words as the magnitude has zeros, which fills the
// low-order places: "three thousand six four nine" is 3649. The continuation
// applies only when the digit words end at a style boundary (end of input,
// "point", or any non-digit word), so "two thousand five" stays 2005.
//
// Appending tokens that cannot extend the match never changes the result.
std::optional<ParsedNumber> ParseNumber(const std::vector<Token>& tokens,
                                        size_t start, size_t limit = SIZE_MAX);

// Parses a spoken ordinal ("twenty ninth" -> 29, "hundredth" -> 100).
std::optional<ParsedNumber> ParseOrdinal(const std::vector<Token>& tokens,
                                         size_t start, size_t limit = SIZE_MAX);

// Parses a spoken fraction: cardinal numerator plus a denominator word
// ("three quarters" -> 3/4, "one half" -> 1/2). Denominator words are
// singular for numerator one and plural otherwise; "second(s)" is never a
// denominator so time expressions stay untouched.
std::optional<ParsedFraction> ParseFraction(const std::vector<Token>& tokens,
                                            size_t start,
                                            size_t limit = SIZE_MAX);

// Spoken words for an integer in the given style, or nullopt when the style
// cannot express the value (PairRead covers 100..9999 only, DigitRead and
// PairRead are integer readings by construction). DigitRead may speak zero
// digits as "oh" when oh_for_zero is set, except as the only word: a bare
// "oh" is never emitted.
std::optional<std::vector<std::string>> VerbalizeCardinal(
    uint64_t value, NumberStyle style, bool oh_for_zero = false);

// "3649.84" -> "three thousand six hundred forty nine point eight four".
// Fraction digits are spoken one at a time so trailing zeros survive.
std::vector<std::string> VerbalizeDecimal(const Decimal& value);

// "29" -> "twenty ninth". Zero has no ordinal form.
std::optional<std::vector<std::string>> VerbalizeOrdinal(uint64_t value);

// "3/4" -> "three quarters". Only single-word denominators are supported
// (2..20, tens to 90, 100, 1000 and the large magnitudes).
std::optional<std::vector<std::string>> VerbalizeFraction(uint64_t numerator,
                                                          uint64_t denominator);

// Written digit form: "2105", "3649.84", ordinals as "29th" / "101st".
std::string RenderWritten(const ParsedNumber& number);

// "st" / "nd" / "rd" / "th", with the 11..13 exception.
std::string OrdinalSuffix(uint64_t value);

// Word-class probes shared with the entity tagger and the verbalizer.
int DigitWordValue(std::string_view word);      // zero/oh/one..nine, else -1
int UnitsTeenWordValue(std::string_view word);  // one..nineteen, else -1
int TensWordValue(std::string_view word);       // twenty..ninety, else -1
bool IsOrdinalWord(std::string_view word);
std::string DigitWord(char digit, bool oh_for_zero = false);

}  // namespace itn

#endif  // ITN_NUMBER_GRAMMAR_H_
