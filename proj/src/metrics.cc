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

#include "itn/metrics.h"

#include "itn/tagger.h"

namespace itn {

namespace {

void FinishRatios(EvalReport* r) {
  if (r->ref_words > 0) {
    r->wer = static_cast<double>(r->errors_total) /
             static_cast<double>(r->ref_words);
  }
  if (r->ref_itn_words > 0) {
    r->i_wer = static_cast<double>(r->errors_itn) /
               static_cast<double>(r->ref_itn_words);
  }
  size_t nitn = r->ref_words - r->ref_itn_words;
  if (nitn > 0) {
    r->ni_wer = static_cast<double>(r->errors_nitn) /
                static_cast<double>(nitn);
  }
}

}  // namespace

TaggedReference MakeTaggedReference(const std::string& spoken,
                                    const std::string& written) {
  TaggedReference ref;
  ref.words = SplitWords(written);
  ref.tags = TagItn(SplitWords(spoken), ref.words);
  return ref;
}

EvalReport ScoreSentence(const TaggedReference& ref, const Sentence& hyp) {
  if (ref.words.tokens.empty()) {
    throw MetricsError("empty reference sentence");
  }
  if (ref.tags.size() != ref.words.tokens.size()) {
    throw MetricsError("reference tags do not match reference words");
  }
  bool with_classes = !ref.classes.empty();
  if (with_classes && ref.classes.size() != ref.words.tokens.size()) {
    throw MetricsError("reference classes do not match reference words");
  }

  EvalReport r;
  r.ref_words = ref.words.tokens.size();
  for (ItnTag tag : ref.tags) {
    if (tag == ItnTag::kItn) ++r.ref_itn_words;
  }
  if (with_classes) {
    for (const auto& cls : ref.classes) ++r.class_ref_words[cls];
  }

  // Scoring is case-sensitive: the hypothesis is expected to reproduce the
  // written reference exactly, capitalization included.
  Alignment a = LevenshteinAlign(ref.words.tokens, hyp.tokens,
                                 /*case_insensitive=*/false);
  auto charge = [&](size_t ref_index) {
    ++r.errors_total;
    if (ref.tags[ref_index] == ItnTag::kItn) {
      ++r.errors_itn;
    } else {
      ++r.errors_nitn;
    }
    if (with_classes) ++r.class_errors[ref.classes[ref_index]];
  };

  size_t last_ref = 0;
  for (const AlignStep& step : a.steps) {
    switch (step.op) {
      case EditOp::kMatch:
        last_ref = step.a_index;
        break;
      case EditOp::kSubstitute:
        charge(step.a_index);
        last_ref = step.a_index;
        break;
      case EditOp::kDelete:
        charge(step.a_index);
        last_ref = step.a_index;
        break;
      case EditOp::kInsert:
        charge(last_ref);
        break;
    }
  }
  FinishRatios(&r);
  return r;
}

EvalReport ScoreCorpus(const std::vector<TaggedReference>& refs,
                       const std::vector<Sentence>& hyps) {
  if (refs.empty()) throw MetricsError("empty corpus");
  if (refs.size() != hyps.size()) {
    throw MetricsError("corpus reference and hypothesis counts differ");
  }
  EvalReport total;
  for (size_t i = 0; i < refs.size(); ++i) {
    EvalReport r = ScoreSentence(refs[i], hyps[i]);
    total.ref_words += r.ref_words;
    total.ref_itn_words += r.ref_itn_words;
    total.errors_total += r.errors_total;
    total.errors_itn += r.errors_itn;
    total.errors_nitn += r.errors_nitn;
    for (const auto& [cls, n] : r.class_errors) total.class_errors[cls] += n;
    for (const auto& [cls, n] : r.class_ref_words) {
      total.class_ref_words[cls] += n;
    }
  }
  FinishRatios(&total);
  return total;
}

std::vector<std::string> ClassifyReferenceWords(const Grammar& grammar,
                                                const std::string& spoken,
                                                const Sentence& ref_words) {
  Sentence spoken_tokens = Tokenize(spoken);
  std::vector<EntitySpan> spans = Tag(grammar, spoken_tokens);

  std::vector<SemioticClass> token_class(spoken_tokens.tokens.size(),
                                         SemioticClass::kPlainWord);
  for (const auto& span : spans) {
    for (size_t i = span.begin; i < span.end && i < token_class.size(); ++i) {
      token_class[i] = span.cls;
    }
  }

  // Fold token classes down to whitespace words ("20," is one word made of
  // two tokens); a word takes the class of its first classified token.
  std::vector<size_t> word_of_token;
  DetokenizeWithMap(spoken_tokens, &word_of_token);
  size_t word_count = spoken_tokens.tokens.empty()
                          ? 0
                          : word_of_token.back() + 1;
  std::vector<std::string> spoken_word_class(word_count, "PlainWord");
  for (size_t t = 0; t < token_class.size(); ++t) {
    if (token_class[t] == SemioticClass::kPlainWord) continue;
    std::string& slot = spoken_word_class[word_of_token[t]];
    if (slot == "PlainWord") slot = SemioticClassName(token_class[t]);
  }

  Sentence spoken_words = SplitWords(Detokenize(spoken_tokens));
  std::vector<std::string> out(ref_words.tokens.size(), "PlainWord");
  Alignment a = LevenshteinAlign(ref_words.tokens, spoken_words.tokens,
                                 /*case_insensitive=*/true);
  for (const AlignStep& step : a.steps) {
    if (step.op == EditOp::kMatch || step.op == EditOp::kSubstitute) {
      if (step.b_index < spoken_word_class.size()) {
        out[step.a_index] = spoken_word_class[step.b_index];
      }
    }
  }
  return out;
}

std::string ClassGroup(const std::string& class_name) {
  if (class_name == "Cardinal" || class_name == "Ordinal" ||
      class_name == "Decimal" || class_name == "Fraction" ||
      class_name == "Year" || class_name == "Percent" ||
      class_name == "Currency") {
    return "Numbers";
  }
  if (class_name == "Measure") return "Units";
  if (class_name == "Date" || class_name == "Time") return "Date Time";
  return "Misc";
}

}  // namespace itn
