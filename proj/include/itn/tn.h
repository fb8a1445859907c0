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
// Written -> spoken normalization. Turns written sentences into the word
// sequences a speaker would produce, recording what was expanded and which
// punctuation was dropped; paired with punctuation restoration this
// manufactures aligned spoken/written training data.

#ifndef ITN_TN_H_
#define ITN_TN_H_

#include <optional>
#include <string>
#include <vector>

#include "itn/decimal.h"
#include "itn/grammar.h"
#include "itn/number_grammar.h"
#include "itn/token.h"

namespace itn {

struct RemovedPunct {
  size_t written_index;  // token index in the written (merged) sentence
  std::string surface;
};

struct TnExpansion {
  size_t written_begin = 0;  // token span in the written (merged) sentence
  size_t written_end = 0;
  size_t spoken_begin = 0;  // token span in the spoken output
  size_t spoken_end = 0;
  std::string written;  // original surface text of the span
  SemioticClass cls = SemioticClass::kPlainWord;
  NumberStyle style = NumberStyle::kCompositional;
  Decimal value;  // meaningful for numeric expansions
};

struct TnResult {
  // Lowercase spoken words, free of punctuation tokens and digits.
  Sentence spoken;
  // The written sentence as tokenized for normalization: abbreviations such
  // as "dr." are single tokens here. Pass this (not a re-tokenization of the
  // raw text) to RestorePunctuation so consumed abbreviation periods are not
  // re-inserted.
  Sentence written_tokens;
  std::vector<RemovedPunct> removed_punct;
  std::vector<TnExpansion> expansions;
};

// Normalizes a written sentence into its spoken form. Never fails: tokens
// outside every rule pass through lowercased, and tokens that mix letters
// and digits are spelled out so the output carries no digit characters.
TnResult Tn(const Grammar& grammar, const std::string& written);

// The written sentence with punctuation that an expansion consumed removed
// (the comma of "October 20, 2020" belongs to the date's written form, not
// to the sentence). Use this as the written side of RestorePunctuation so
// entity-internal marks are left for the renderer to reproduce and only
// free-standing punctuation is carried back into the spoken form.
Sentence WrittenForRestoration(const TnResult& result);

// Expansion for the abbreviation token at `index`, decided by its neighbor
// tokens and the grammar's context rules. nullopt when the token is not a
// known abbreviation or no rule applies.
std::optional<std::string> ExpandAbbreviation(const Grammar& grammar,
                                              const Sentence& sentence,
                                              size_t index);

}  // namespace itn

#endif  // ITN_TN_H_
