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

#ifndef ITN_TAGGER_H_
#define ITN_TAGGER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "itn/decimal.h"
#include "itn/grammar.h"
#include "itn/number_grammar.h"
#include "itn/token.h"

namespace itn {

// One tagged entity over a half-open token interval [begin, end) of a spoken
// sentence. The payload carries everything the renderer needs, so rendering
// never re-reads the source tokens.
struct EntitySpan {
  SemioticClass cls = SemioticClass::kPlainWord;
  size_t begin = 0;
  size_t end = 0;

  // Numeric classes (Cardinal, Year, Ordinal, Decimal, Percent, Currency,
  // Measure amounts).
  Decimal value;
  NumberStyle style = NumberStyle::kCompositional;

  // Fraction.
  uint64_t frac_numerator = 0;
  uint64_t frac_denominator = 0;

  // Date. Fields are 0 when absent; month_surface keeps the spoken month
  // token spelling for fragment rendering; date_comma records a comma
  // absorbed between day and year.
  int month = 0;
  int day = 0;
  bool day_ordinal = false;
  int year = 0;
  std::string month_surface;
  bool date_comma = false;

  // Time.
  int hour = -1;
  int minute = -1;
  Meridiem meridiem = Meridiem::kNone;

  // Currency.
  std::string currency_symbol;
  std::string minor_word;  // "cents" style minor-unit spans

  // Measure.
  std::string unit_written;

  // Phone.
  std::string phone_written;

  // True when this span covers every non-punctuation token of the sentence;
  // dates then render in their formal written form.
  bool covers_sentence = false;
};

// Tags all entity spans in the sentence: spans are non-overlapping, sorted,
// chosen leftmost-longest. When two candidates start at the same token with
// the same length, class priority decides:
// Phone > Date > Time > Currency > Percent > Measure > Fraction > Ordinal >
// Decimal > Cardinal. Tokens outside every span are plain words.
std::vector<EntitySpan> Tag(const Grammar& grammar, const Sentence& sentence);

}  // namespace itn

#endif  // ITN_TAGGER_H_
