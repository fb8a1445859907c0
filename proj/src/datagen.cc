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

#include "itn/datagen.h"

#include <algorithm>
#include <array>

#include "itn/align.h"
#include "itn/number_grammar.h"
#include "itn/renderer.h"
#include "itn/rng.h"
#include "itn/tn.h"

namespace itn {

namespace {

constexpr uint64_t kMaxVariantValue = 1000000000000ULL;  // 10^12

std::string JoinWords(const std::vector<std::string>& words) {
  std::string out;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += words[i];
  }
  return out;
}

// Template vocabulary. Pool words must stay clear of everything the tagger
// can reinterpret: no number or digit words, no ordinal words, no months,
// units, currency or time vocabulary, no "and"/"or" (they can glue onto an
// adjacent number), and "at" only directly before a time slot.
using Pool = std::vector<std::string>;

const Pool& Subjects() {
  static const Pool* kPool = new Pool{
      "the team",     "the committee", "the crew",
      "the council",  "the visitors",  "the neighbors",
  };
  return *kPool;
}

const Pool& Verbs() {
  static const Pool* kPool = new Pool{
      "counted", "recorded", "reported", "collected",
      "shipped", "reviewed", "sorted",   "labeled",
  };
  return *kPool;
}

const Pool& Objects() {
  static const Pool* kPool = new Pool{
      "votes",   "letters",   "parcels", "tickets",
      "entries", "responses", "samples", "boxes",
  };
  return *kPool;
}

const Pool& Tails() {
  static const Pool* kPool = new Pool{
      "before lunch",   "after the meeting", "during the festival",
      "without delay",  "near the harbor",   "in the village",
  };
  return *kPool;
}

const Pool& Adverbials() {
  static const Pool* kPool = new Pool{
      "this spring", "last season", "over the quarter", "since the merger",
  };
  return *kPool;
}

const Pool& QuotedWords() {
  static const Pool* kPool = new Pool{
      "closed", "welcome", "sold", "private", "reserved",
  };
  return *kPool;
}

const Pool& MonthsLower() {
  static const Pool* kPool = new Pool{
      "january", "february", "march",     "april",   "may",      "june",
      "july",    "august",   "september", "october", "november", "december",
  };
  return *kPool;
}

const Pool& Zones() {
  static const Pool* kPool = new Pool{"gmt", "utc", "est", "pst", "cst", "mst"};
  return *kPool;
}

// Written singular/plural forms of the measure units the grammar covers.
const std::vector<std::pair<std::string, std::string>>& UnitForms() {
  static const auto* kUnits = new std::vector<std::pair<std::string, std::string>>{
      {"km", "km"},     {"kg", "kg"},       {"m", "m"},
      {"g", "g"},       {"mile", "miles"},  {"inch", "inches"},
      {"foot", "feet"}, {"degree", "degrees"}, {"lb", "lbs"},
  };
  return *kUnits;
}

const std::string& Pick(SplitMix64& rng, const Pool& pool) {
  return pool[rng.Below(pool.size())];
}

uint64_t Range(SplitMix64& rng, uint64_t lo, uint64_t hi) {
  return lo + rng.Below(hi - lo + 1);
}

// Cardinal slot values avoid 1 so plural objects stay grammatical.
uint64_t PluralCount(SplitMix64& rng, uint64_t lo, uint64_t hi) {
  uint64_t n = Range(rng, lo, hi);
  return n == 1 ? 21 : n;
}

std::string TwoDigitsStr(uint64_t v) {
  std::string s = std::to_string(v);
  return s.size() < 2 ? "0" + s : s;
}

std::string Digits(SplitMix64& rng, size_t count) {
  std::string out;
  for (size_t i = 0; i < count; ++i) {
    out.push_back(static_cast<char>('0' + rng.Below(10)));
  }
  return out;
}

std::string PlainSentence(SplitMix64& rng) {
  return Pick(rng, Subjects()) + " " + Pick(rng, Verbs()) + " the " +
         Pick(rng, Objects()) + " " + Pick(rng, Tails()) + ".";
}

std::string CommaSentence(SplitMix64& rng) {
  return Pick(rng, Subjects()) + ", " + Pick(rng, Tails()) + ", " +
         Pick(rng, Verbs()) + " the " + Pick(rng, Objects()) + ".";
}

std::string QuotedSentence(SplitMix64& rng) {
  return "the sign read \"" + Pick(rng, QuotedWords()) + "\" in red paint.";
}

std::string PossessiveSentence(SplitMix64& rng) {
  return "the captain's log mentioned " +
         std::to_string(PluralCount(rng, 2, 9999)) + " " +
         Pick(rng, Objects()) + ".";
}

std::string CardinalSentence(SplitMix64& rng) {
  return Pick(rng, Subjects()) + " " + Pick(rng, Verbs()) + " " +
         std::to_string(PluralCount(rng, 0, 999999)) + " " +
         Pick(rng, Objects()) + " " + Pick(rng, Tails()) + ".";
}

std::string BigCardinalSentence(SplitMix64& rng) {
  return "the ledger showed " +
         std::to_string(Range(rng, 1000000, 99999999999ULL)) + " " +
         Pick(rng, Objects()) + " in total.";
}

std::string DecimalSentence(SplitMix64& rng) {
  return "the gauge read " + std::to_string(Range(rng, 0, 9999)) + "." +
         Digits(rng, 1 + rng.Below(4)) + " at the dock.";
}

std::string CurrencySentence(SplitMix64& rng) {
  return "the invoice totaled $" + std::to_string(Range(rng, 1, 99999)) + " " +
         Pick(rng, Tails()) + ".";
}

std::string CurrencyCentsSentence(SplitMix64& rng) {
  return "the meal cost $" + std::to_string(Range(rng, 1, 9999)) + "." +
         Digits(rng, 2) + " altogether.";
}

std::string MinorCurrencySentence(SplitMix64& rng) {
  uint64_t n = Range(rng, 1, 99);
  return "the stamp cost " + std::to_string(n) +
         (n == 1 ? " cent." : " cents.");
}

std::string PercentSentence(SplitMix64& rng) {
  return "turnout rose " + std::to_string(Range(rng, 1, 100)) + "% " +
         Pick(rng, Adverbials()) + ".";
}

std::string PercentDecimalSentence(SplitMix64& rng) {
  return "the rate fell " + std::to_string(Range(rng, 0, 99)) + "." +
         Digits(rng, 1) + "% overnight.";
}

std::string MeasureSentence(SplitMix64& rng) {
  uint64_t n = Range(rng, 1, 500);
  const auto& unit = UnitForms()[rng.Below(UnitForms().size())];
  return "the trail runs " + std::to_string(n) + " " +
         (n == 1 ? unit.first : unit.second) + " " + Pick(rng, Tails()) + ".";
}

std::string DateSentence(SplitMix64& rng) {
  return "the statue arrived on " + Pick(rng, MonthsLower()) + " " +
         std::to_string(Range(rng, 1, 28)) + " " +
         std::to_string(Range(rng, 1000, 2099)) + " " + Pick(rng, Tails()) +
         ".";
}

std::string DateOrdinalSentence(SplitMix64& rng) {
  // Ordinal days only survive a round trip in the formal whole-sentence
  // form; embedded dates always come back with a bare day number.
  uint64_t day = Range(rng, 1, 28);
  std::string month = Pick(rng, MonthsLower());
  month[0] = static_cast<char>(month[0] - 'a' + 'A');
  return month + " " + std::to_string(day) + OrdinalSuffix(day) + ", " +
         std::to_string(Range(rng, 1000, 2099)) + ".";
}

std::string MonthYearSentence(SplitMix64& rng) {
  return "the archive dates from " + Pick(rng, MonthsLower()) + " " +
         std::to_string(Range(rng, 1000, 2099)) + ".";
}

std::string FormalDateSentence(SplitMix64& rng) {
  std::string month = Pick(rng, MonthsLower());
  month[0] = static_cast<char>(month[0] - 'a' + 'A');
  return month + " " + std::to_string(Range(rng, 1, 28)) + ", " +
         std::to_string(Range(rng, 1000, 2099)) + ".";
}

std::string TimeMeridiemSentence(SplitMix64& rng) {
  return "the shuttle departs at " + std::to_string(Range(rng, 1, 12)) + ":" +
         TwoDigitsStr(rng.Below(60)) + (rng.Below(2) == 0 ? " am " : " pm ") +
         Pick(rng, Tails()) + ".";
}

std::string TimeZoneSentence(SplitMix64& rng) {
  return "the call starts at " + std::to_string(Range(rng, 1, 12)) + ":" +
         TwoDigitsStr(rng.Below(60)) + " " + Pick(rng, Zones()) + " " +
         Pick(rng, Adverbials()) + ".";
}

std::string TimeBareSentence(SplitMix64& rng) {
  return "the gates open at " + std::to_string(Range(rng, 1, 12)) + ":" +
         TwoDigitsStr(rng.Below(60)) + " sharp.";
}

std::string PhoneSentence(SplitMix64& rng) {
  return "call " + Digits(rng, 3) + "-" + Digits(rng, 3) + "-" +
         Digits(rng, 4) + " for details.";
}

std::string TollFreeSentence(SplitMix64& rng) {
  return "dial 1-" + Digits(rng, 3) + "-" + Digits(rng, 3) + "-" +
         Digits(rng, 4) + " to register.";
}

std::string OrdinalSentence(SplitMix64& rng) {
  uint64_t n = Range(rng, 1, 999);
  return "she finished in " + std::to_string(n) + OrdinalSuffix(n) +
         " place overall.";
}

std::string YearSentence(SplitMix64& rng) {
  return "the bridge opened in " + std::to_string(Range(rng, 1000, 2099)) +
         " " + Pick(rng, Tails()) + ".";
}

std::string FractionSentence(SplitMix64& rng) {
  static const uint64_t kDenominators[] = {2, 3, 4, 5, 8, 10, 16};
  uint64_t d = kDenominators[rng.Below(std::size(kDenominators))];
  uint64_t n = Range(rng, 1, d - 1);
  return "the tank was " + std::to_string(n) + "/" + std::to_string(d) +
         " full by evening.";
}

std::string MultiEntitySentence(SplitMix64& rng) {
  return "the shop sold " + std::to_string(PluralCount(rng, 2, 500)) + " " +
         Pick(rng, Objects()) + " for $" + std::to_string(Range(rng, 1, 9999)) +
         " on " + Pick(rng, MonthsLower()) + " " +
         std::to_string(Range(rng, 1, 28)) + " " +
         std::to_string(Range(rng, 1000, 2099)) + ".";
}

}  // namespace

const char* ProvenanceName(Provenance p) {
  return p == Provenance::kTnGenerated ? "tn_generated" : "synthetic";
}

std::optional<Provenance> ParseProvenance(const std::string& name) {
  if (name == "tn_generated") return Provenance::kTnGenerated;
  if (name == "synthetic") return Provenance::kSynthetic;
  return std::nullopt;
}

std::vector<std::string> GenCardinalVariants(uint64_t value) {
  std::vector<std::string> out;
  auto add = [&out](std::optional<std::vector<std::string>> words) {
    if (!words) return;
    std::string s = JoinWords(*words);
    if (std::find(out.begin(), out.end(), s) == out.end()) {
      out.push_back(std::move(s));
    }
  };
  add(VerbalizeCardinal(value, NumberStyle::kCompositional));
  add(VerbalizeCardinal(value, NumberStyle::kCompositionalAnd));
  add(VerbalizeCardinal(value, NumberStyle::kPairRead));
  add(VerbalizeCardinal(value, NumberStyle::kDigitRead, false));
  add(VerbalizeCardinal(value, NumberStyle::kDigitRead, true));
  return out;
}

CorpusBuilder::CorpusBuilder(const Grammar& grammar, uint64_t seed,
                             double synthetic_ratio)
    : grammar_(grammar), rng_(seed), synthetic_ratio_(synthetic_ratio) {}

void CorpusBuilder::AddLine(const std::string& line,
                            std::vector<ParallelPair>* out,
                            std::vector<std::string>* skipped) {
  ++line_number_;
  if (line.empty()) return;

  TnResult tn = Tn(grammar_, line);
  Sentence restorable = WrittenForRestoration(tn);
  Sentence spoken = RestorePunctuation(restorable, tn.spoken);

  ParallelPair pair;
  pair.spoken = spoken.raw;
  pair.written = line;
  pair.provenance = Provenance::kTnGenerated;
  for (const auto& e : tn.expansions) {
    if (e.cls != SemioticClass::kPlainWord) {
      pair.entity_classes.push_back(e.cls);
    }
  }
  out->push_back(pair);

  if (synthetic_ratio_ <= 0.0) return;
  // One uniform draw per line keeps the stream reproducible whether or not
  // the line carries a cardinal.
  double u = rng_.NextDouble();

  std::vector<const TnExpansion*> cardinals;
  for (const auto& e : tn.expansions) {
    if (e.cls == SemioticClass::kCardinal && e.value.IsInteger() &&
        e.value.units < kMaxVariantValue) {
      cardinals.push_back(&e);
    }
  }
  if (u >= synthetic_ratio_ || cardinals.empty()) return;

  const TnExpansion& target = *cardinals[rng_.Below(cardinals.size())];
  std::vector<std::string> variants = GenCardinalVariants(target.value.units);
  const std::string& variant = variants[rng_.Below(variants.size())];

  Sentence spliced;
  for (size_t k = 0; k < target.spoken_begin; ++k) {
    spliced.tokens.push_back(tn.spoken.tokens[k]);
  }
  for (const Token& tok : SplitWords(variant).tokens) {
    spliced.tokens.push_back(tok);
  }
  for (size_t k = target.spoken_end; k < tn.spoken.tokens.size(); ++k) {
    spliced.tokens.push_back(tn.spoken.tokens[k]);
  }

  Sentence restored = RestorePunctuation(restorable, spliced);
  std::string check = Itn(grammar_, restored.raw);
  if (check != line) {
    if (skipped != nullptr) {
      skipped->push_back("line " + std::to_string(line_number_) +
                         ": synthetic variant \"" + variant +
                         "\" does not round-trip, dropped");
    }
    return;
  }
  ParallelPair synthetic = pair;
  synthetic.spoken = restored.raw;
  synthetic.provenance = Provenance::kSynthetic;
  out->push_back(std::move(synthetic));
}

std::vector<ParallelPair> BuildCorpus(const Grammar& grammar,
                                      const std::vector<std::string>& lines,
                                      uint64_t seed, double synthetic_ratio,
                                      std::vector<std::string>* skipped) {
  CorpusBuilder builder(grammar, seed, synthetic_ratio);
  std::vector<ParallelPair> out;
  for (const std::string& line : lines) {
    builder.AddLine(line, &out, skipped);
  }
  return out;
}

std::vector<std::string> GenerateWrittenSentences(uint64_t seed,
                                                  size_t count) {
  using TemplateFn = std::string (*)(SplitMix64&);
  static constexpr std::array<TemplateFn, 26> kTemplates = {
      PlainSentence,         CommaSentence,
      QuotedSentence,        PossessiveSentence,
      CardinalSentence,      BigCardinalSentence,
      DecimalSentence,       CurrencySentence,
      CurrencyCentsSentence, MinorCurrencySentence,
      PercentSentence,       PercentDecimalSentence,
      MeasureSentence,       DateSentence,
      DateOrdinalSentence,   MonthYearSentence,
      FormalDateSentence,    TimeMeridiemSentence,
      TimeZoneSentence,      TimeBareSentence,
      PhoneSentence,         TollFreeSentence,
      OrdinalSentence,       YearSentence,
      FractionSentence,      MultiEntitySentence,
  };

  SplitMix64 rng(seed);
  std::vector<std::string> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    out.push_back(kTemplates[rng.Below(kTemplates.size())](rng));
  }
  return out;
}

CorpusStats ComputeCorpusStats(const std::vector<ParallelPair>& pairs) {
  CorpusStats stats;
  stats.pairs = pairs.size();
  for (const auto& pair : pairs) {
    if (pair.provenance == Provenance::kTnGenerated) {
      ++stats.tn_generated;
    } else {
      ++stats.synthetic;
    }
    Sentence written = SplitWords(pair.written);
    Sentence spoken = SplitWords(pair.spoken);
    if (!written.tokens.empty()) {
      std::vector<ItnTag> tags = TagItn(spoken, written);
      stats.written_words += written.tokens.size();
      for (ItnTag tag : tags) {
        if (tag == ItnTag::kItn) ++stats.itn_words;
      }
    }
    for (SemioticClass cls : pair.entity_classes) {
      ++stats.class_counts[SemioticClassName(cls)];
    }
  }
  if (stats.written_words > 0) {
    stats.itn_density = static_cast<double>(stats.itn_words) /
                        static_cast<double>(stats.written_words);
  }
  return stats;
}

}  // namespace itn
