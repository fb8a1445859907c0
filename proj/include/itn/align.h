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

#ifndef ITN_ALIGN_H_
#define ITN_ALIGN_H_

#include <cstddef>
#include <vector>

#include "itn/token.h"

namespace itn {

enum class EditOp {
  kMatch,       // a[i] == b[j]
  kSubstitute,  // a[i] replaced by b[j]
  kDelete,      // a[i] has no counterpart
  kInsert,      // b[j] has no counterpart
};

struct AlignStep {
  EditOp op;
  size_t a_index;  // valid except for kInsert
  size_t b_index;  // valid except for kDelete
};

struct Alignment {
  std::vector<AlignStep> steps;  // in sequence order
  size_t distance = 0;           // unit-cost edit distance
};

// Unit-cost Levenshtein alignment of two token sequences. Ties in the
// backtrace are pinned, preferring match, then insert, then substitute,
// then delete, walking from the end; extra b-side tokens therefore trail
// the a-side token they follow. Every caller that depends on the exact op
// sequence (punctuation restoration, error attribution, ITN tagging)
// shares this one implementation.
Alignment LevenshteinAlign(const std::vector<Token>& a,
                           const std::vector<Token>& b,
                           bool case_insensitive);

// Moves written punctuation into a spoken (punctuation-free) rendering of
// the same sentence. The written words (punctuation excluded) are aligned
// case-insensitively with the spoken tokens, and each written punctuation
// token is inserted where the next written word landed, so it follows the
// complete spoken expansion of the word before it. Marks with nothing
// landing after them trail the sentence. Spoken tokens are untouched.
Sentence RestorePunctuation(const Sentence& written, const Sentence& spoken);

enum class ItnTag { kItn, kNitn };

// Tags each written reference token: tokens that also occur in the spoken
// reading (aligned, case-insensitive) are plain carried-over words (N-ITN),
// the rest were produced by normalization (ITN). Tokenization here is
// whitespace-level, matching WER scoring.
std::vector<ItnTag> TagItn(const Sentence& spoken, const Sentence& written);

}  // namespace itn

#endif  // ITN_ALIGN_H_
