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
// Parallel-corpus manufacturing: written sentences from templates, written
// -> spoken conversion with punctuation carried back into the spoken side,
// and synthetic augmentation that replaces a cardinal's reading with a
// randomly chosen alternative style.

#ifndef ITN_DATAGEN_H_
#define ITN_DATAGEN_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "itn/grammar.h"
#include "itn/rng.h"
#include "itn/token.h"

namespace itn {

enum class Provenance { kTnGenerated, kSynthetic };

const char* ProvenanceName(Provenance p);
std::optional<Provenance> ParseProvenance(const std::string& name);

struct ParallelPair {
  std::string spoken;
  std::string written;
  Provenance provenance = Provenance::kTnGenerated;
  std::vector<SemioticClass> entity_classes;
};

// All spoken readings of a cardinal, one per applicable style, deduplicated:
// compositional, compositional with "and", pair read, and digit-by-digit
// with both "zero" and "oh". Every returned string parses back to value.
// value must be below 10^12.
std::vector<std::string> GenCardinalVariants(uint64_t value);

// Converts written lines to (spoken, written) pairs, one line at a time so
// callers can stream. Each line is normalized to spoken form, free-standing
// punctuation is restored into the spoken text by alignment, and the pair is
// emitted as TnGenerated. When synthetic_ratio is positive, that fraction of
// cardinal-bearing lines additionally emits a Synthetic twin whose cardinal
// is respoken in a random alternative style; a twin is dropped (and logged
// to skipped, when given) unless running the engine over its spoken side
// reproduces the written side exactly. Output is deterministic in
// (lines, seed, synthetic_ratio).
class CorpusBuilder {
 public:
  CorpusBuilder(const Grammar& grammar, uint64_t seed, double synthetic_ratio);

  // Appends this line's pairs (none for an empty line, one, or two) to out.
  void AddLine(const std::string& line, std::vector<ParallelPair>* out,
               std::vector<std::string>* skipped);

 private:
  const Grammar& grammar_;
  SplitMix64 rng_;
  double synthetic_ratio_;
  size_t line_number_ = 0;
};

// Runs a CorpusBuilder over every line and collects the result.
std::vector<ParallelPair> BuildCorpus(const Grammar& grammar,
                                      const std::vector<std::string>& lines,
                                      uint64_t seed, double synthetic_ratio,
                                      std::vector<std::string>* skipped);

// Deterministic written-form sentences drawn from a fixed template
// catalog covering every entity class the grammar handles: cardinals,
// decimals, currency, percentages, measures, dates, times, phone numbers,
// ordinals, fractions, years, and plain sentences with punctuation.
std::vector<std::string> GenerateWrittenSentences(uint64_t seed, size_t count);

struct CorpusStats {
  size_t pairs = 0;
  size_t tn_generated = 0;
  size_t synthetic = 0;
  size_t written_words = 0;
  size_t itn_words = 0;  // written words tagged ITN against the spoken side
  std::optional<double> itn_density;
  std::map<std::string, size_t> class_counts;
};

CorpusStats ComputeCorpusStats(const std::vector<ParallelPair>& pairs);

}  // namespace itn

#endif  // ITN_DATAGEN_H_
