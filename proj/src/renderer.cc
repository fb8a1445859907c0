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

#include "itn/renderer.h"

#include <stdexcept>

#include "itn/number_grammar.h"

namespace itn {

namespace {

std::string TwoDigits(int v) {
  std::string out = std::to_string(v);
  if (out.size() < 2) out.insert(out.begin(), '0');
  return out;
}

std::string RenderDate(const EntitySpan& span) {
  if (span.month < 1 || span.month > 12) {
    throw std::logic_error("date span without a month");
  }
  std::string out;
  if (span.covers_sentence) {
    // Formal form: "October 20, 2020" / "October 2020" / "October 20".
    out = span.month_surface;
    if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') {
      out[0] = static_cast<char>(out[0] - 'a' + 'A');
    }
    if (span.day > 0) {
      out += " " + std::to_string(span.day);
      if (span.day_ordinal) out += OrdinalSuffix(span.day);
    }
    if (span.year > 0) {
      if (span.day > 0) out += ",";
      out += " " + std::to_string(span.year);
    }
    return out;
  }
  // Fragment form keeps the spoken spelling and only writes a comma when one
  // was absorbed from the input. The day is always a bare number here; an
  // ordinal reading ("twenty ninth") still comes out as "29".
  out = span.month_surface;
  if (span.day > 0) {
    out += " " + std::to_string(span.day);
  }
  if (span.year > 0) {
    if (span.day > 0 && span.date_comma) out += ",";
    out += " " + std::to_string(span.year);
  }
  return out;
}

std::string RenderTime(const EntitySpan& span) {
  if (span.hour < 1 || span.hour > 12 || span.minute < 0 || span.minute > 59) {
    throw std::logic_error("time span out of range");
  }
  std::string out = std::to_string(span.hour) + ":" + TwoDigits(span.minute);
  if (span.meridiem == Meridiem::kAm) out += " am";
  if (span.meridiem == Meridiem::kPm) out += " pm";
  return out;
}

}  // namespace

std::string Render(const Grammar& grammar, const EntitySpan& span) {
  (void)grammar;
  switch (span.cls) {
    case SemioticClass::kCardinal:
    case SemioticClass::kYear:
    case SemioticClass::kDecimal:
      return span.value.ToString();
    case SemioticClass::kOrdinal:
      if (!span.value.IsInteger()) {
        throw std::logic_error("ordinal span with fraction digits");
      }
      return span.value.ToString() + OrdinalSuffix(span.value.units);
    case SemioticClass::kFraction:
      if (span.frac_denominator < 2) {
        throw std::logic_error("fraction span without denominator");
      }
      return std::to_string(span.frac_numerator) + "/" +
             std::to_string(span.frac_denominator);
    case SemioticClass::kDate:
      return RenderDate(span);
    case SemioticClass::kTime:
      return RenderTime(span);
    case SemioticClass::kCurrency:
      if (!span.minor_word.empty()) {
        return span.value.ToString() + " " + span.minor_word;
      }
      if (span.currency_symbol.empty()) {
        throw std::logic_error("currency span without symbol");
      }
      return span.currency_symbol + span.value.ToString();
    case SemioticClass::kPercent:
      return span.value.ToString() + "%";
    case SemioticClass::kMeasure:
      if (span.unit_written.empty()) {
        throw std::logic_error("measure span without unit");
      }
      return span.value.ToString() + " " + span.unit_written;
    case SemioticClass::kPhone:
      if (span.phone_written.empty()) {
        throw std::logic_error("phone span without rendered digits");
      }
      return span.phone_written;
    case SemioticClass::kPlainWord:
      break;
  }
  throw std::logic_error("span class is not renderable");
}

ItnOutput ItnWithSpans(const Grammar& grammar, const std::string& spoken) {
  Sentence sent = Tokenize(spoken);
  std::vector<EntitySpan> spans = Tag(grammar, sent);

  Sentence out;
  size_t si = 0;
  size_t i = 0;
  while (i < sent.tokens.size()) {
    if (si < spans.size() && spans[si].begin == i) {
      bool rendered = false;
      try {
        std::string written = Render(grammar, spans[si]);
        for (auto& tok : Tokenize(written).tokens) {
          out.tokens.push_back(std::move(tok));
        }
        rendered = true;
      } catch (const std::logic_error&) {
        // Fail open: a span that cannot render keeps its spoken tokens.
      }
      if (!rendered) {
        for (size_t k = spans[si].begin; k < spans[si].end; ++k) {
          out.tokens.push_back(sent.tokens[k]);
        }
      }
      i = spans[si].end;
      ++si;
      continue;
    }
    out.tokens.push_back(sent.tokens[i]);
    ++i;
  }

  ItnOutput result;
  result.text = Detokenize(out);
  result.spans = std::move(spans);
  return result;
}

std::string Itn(const Grammar& grammar, const std::string& spoken) {
  return ItnWithSpans(grammar, spoken).text;
}

}  // namespace itn
