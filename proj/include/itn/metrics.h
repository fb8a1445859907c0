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

#ifndef ITN_METRICS_H_
#define ITN_METRICS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "itn/align.h"
#include "itn/grammar.h"
#include "itn/token.h"

namespace itn {

// A written reference sentence with a per-word ITN / N-ITN tag, usually from
// TagItn against the spoken source. Words are whitespace tokens; scoring
// compares surfaces case-sensitively.
struct TaggedReference {
  Sentence words;
  std::vector<ItnTag> tags;  // one per word

  // Optional per-word entity class ("Cardinal", "Date", ...). When present
  // (same length as words), corpus scoring also reports per-class rows.
  std::vector<std::string> classes;
};

// Word error rates split by reference-word tag. Ratios are plain fractions
// (not percentages) and can exceed 1.0: insertions count as errors but add
// nothing to the denominator. A zero denominator leaves the ratio unset.
struct EvalReport {
  size_t ref_words = 0;
  size_t ref_itn_words = 0;
  size_t errors_total = 0;  // always errors_itn + errors_nitn
  size_t errors_itn = 0;
  size_t errors_nitn = 0;
  std::optional<double> wer;
  std::optional<double> i_wer;
  std::optional<double> ni_wer;

  // Per entity-class error counts and reference-word counts, filled only when
  // the references carry class annotations.
  std::map<std::string, size_t> class_errors;
  std::map<std::string, size_t> class_ref_words;
};

class MetricsError : public std::runtime_error {
 public:
  explicit MetricsError(const std::string& message)
      : std::runtime_error(message) {}
};

// Builds a TaggedReference for a (spoken, written) pair by aligning the two
// and tagging written words absent from the spoken reading as ITN.
TaggedReference MakeTaggedReference(const std::string& spoken,
                                    const std::string& written);

// Scores one hypothesis against one tagged reference. Substitutions and
// deletions are charged to the tag of the reference word involved;
// insertions to the nearest preceding reference word (sentence-initial
// insertions to the first reference word). Throws MetricsError on an empty
// reference.
EvalReport ScoreSentence(const TaggedReference& ref, const Sentence& hyp);

// Micro-averaged corpus score: error and word counts are summed across
// sentences before dividing. Throws MetricsError on an empty corpus.
EvalReport ScoreCorpus(const std::vector<TaggedReference>& refs,
                       const std::vector<Sentence>& hyps);

// Entity-class label per reference word, for per-class breakdowns. The
// spoken source is tagged with the rule engine's own tagger, each spoken
// word inherits the class of the span covering it, and reference words take
// the class of the spoken word they align with (PlainWord when unaligned).
std::vector<std::string> ClassifyReferenceWords(const Grammar& grammar,
                                                const std::string& spoken,
                                                const Sentence& ref_words);

// Maps a semiotic class name to the reporting group used in corpus
// breakdowns: "Numbers", "Units", "Date Time", or "Misc".
std::string ClassGroup(const std::string& class_name);

}  // namespace itn

#endif  // ITN_METRICS_H_
