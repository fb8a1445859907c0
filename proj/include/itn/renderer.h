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

#ifndef ITN_RENDERER_H_
#define ITN_RENDERER_H_

#include <string>
#include <vector>

#include "itn/grammar.h"
#include "itn/tagger.h"
#include "itn/token.h"

namespace itn {

// Written form of one tagged span ("$3649.84", "October 20, 2020",
// "12:00 pm"). Throws std::logic_error on a span whose payload cannot be
// rendered; itn() treats that as a per-span failure and copies the source.
std::string Render(const Grammar& grammar, const EntitySpan& span);

struct ItnOutput {
  std::string text;
  std::vector<EntitySpan> spans;  // spans over the spoken token sequence
};

// Full inverse normalization: tokenize, tag, render each span, copy plain
// tokens verbatim, detokenize. Deterministic, and running it on its own
// output changes nothing (written forms contain no spoken-number words).
std::string Itn(const Grammar& grammar, const std::string& spoken);

// Same, also reporting the spans that produced the output.
ItnOutput ItnWithSpans(const Grammar& grammar, const std::string& spoken);

}  // namespace itn

#endif  // ITN_RENDERER_H_
