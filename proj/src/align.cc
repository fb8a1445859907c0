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

#include "itn/align.h"

#include <algorithm>

namespace itn {

namespace {

bool TokenEq(const Token& a, const Token& b, bool case_insensitive) {
  return case_insensitive ? a.lower == b.lower : a.surface == b.surface;
}

}  // namespace

Alignment LevenshteinAlign(const std::vector<Token>& a,
                           const std::vector<Token>& b,
                           bool case_insensitive) {
  const size_t n = a.size();
  const size_t m = b.size();
  // Full DP table; sentences are short so quadratic memory is fine and the
  // backtrace stays simple.
  std::vector<std::vector<size_t>> d(n + 1, std::vector<size_t>(m + 1, 0));
  for (size_t i = 0; i <= n; ++i) d[i][0] = i;
  for (size_t j = 0; j <= m; ++j) d[0][j] = j;
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      size_t diag = d[i - 1][j - 1] +
                    (TokenEq(a[i - 1], b[j - 1], case_insensitive) ? 0 : 1);
      size_t del = d[i - 1][j] + 1;
      size_t ins = d[i][j - 1] + 1;
      d[i][j] = std::min({diag, del, ins});
    }
  }

  Alignment out;
  out.distance = d[n][m];
  size_t i = n;
  size_t j = m;
  std::vector<AlignStep> rev;
  // Ties are pinned by walking from the end and preferring, in order,
  // Match, Insert, Substitute, Delete. Preferring Insert over Substitute
  // makes extra hypothesis words trail the reference word they follow
  // ("$20" -> "20 dollars" aligns as a substitution plus an insertion after
  // it), which is what error attribution needs.
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && TokenEq(a[i - 1], b[j - 1], case_insensitive) &&
        d[i][j] == d[i - 1][j - 1]) {
      rev.push_back({EditOp::kMatch, i - 1, j - 1});
      --i;
      --j;
      continue;
    }
    if (j > 0 && d[i][j] == d[i][j - 1] + 1) {
      rev.push_back({EditOp::kInsert, 0, j - 1});
      --j;
      continue;
    }
    if (i > 0 && j > 0 && d[i][j] == d[i - 1][j - 1] + 1) {
      rev.push_back({EditOp::kSubstitute, i - 1, j - 1});
      --i;
      --j;
      continue;
    }
    rev.push_back({EditOp::kDelete, i - 1, 0});
    --i;
  }
  out.steps.assign(rev.rbegin(), rev.rend());
  return out;
}

Sentence RestorePunctuation(const Sentence& written, const Sentence& spoken) {
  const auto& wt = written.tokens;
  const auto& st = spoken.tokens;

  // Punctuation stays out of the alignment: a written token can expand to
  // several spoken words ("2020" -> "twenty twenty"), and a mark aligned as
  // its own token would swallow the trailing words of such an expansion.
  std::vector<size_t> word_index;
  std::vector<Token> words;
  word_index.reserve(wt.size());
  words.reserve(wt.size());
  for (size_t k = 0; k < wt.size(); ++k) {
    if (wt[k].kind != TokenKind::kPunctuation) {
      word_index.push_back(k);
      words.push_back(wt[k]);
    }
  }

  Alignment alignment = LevenshteinAlign(words, st, /*case_insensitive=*/true);

  // Spoken index each written word landed on; deleted words get none.
  std::vector<long> landed(wt.size(), -1);
  for (const AlignStep& step : alignment.steps) {
    if (step.op == EditOp::kMatch || step.op == EditOp::kSubstitute) {
      landed[word_index[step.a_index]] = static_cast<long>(step.b_index);
    }
  }

  // A mark goes in front of wherever the next written word landed, which
  // leaves it after the complete spoken expansion of the word it follows.
  // With nothing landing after it, it trails the sentence.
  std::vector<std::vector<Token>> before(st.size() + 1);
  for (size_t k = 0; k < wt.size(); ++k) {
    if (wt[k].kind != TokenKind::kPunctuation) continue;
    size_t slot = st.size();
    for (size_t j = k + 1; j < wt.size(); ++j) {
      if (wt[j].kind == TokenKind::kPunctuation) continue;
      if (landed[j] >= 0) {
        slot = static_cast<size_t>(landed[j]);
        break;
      }
    }
    before[slot].push_back(wt[k]);
  }

  Sentence out;
  for (size_t j = 0; j <= st.size(); ++j) {
    for (auto& p : before[j]) out.tokens.push_back(std::move(p));
    if (j < st.size()) out.tokens.push_back(st[j]);
  }
  out.raw = Detokenize(out);
  return out;
}

std::vector<ItnTag> TagItn(const Sentence& spoken, const Sentence& written) {
  Alignment alignment =
      LevenshteinAlign(written.tokens, spoken.tokens, /*case_insensitive=*/true);
  std::vector<ItnTag> tags(written.tokens.size(), ItnTag::kItn);
  for (const AlignStep& step : alignment.steps) {
    if (step.op == EditOp::kMatch) tags[step.a_index] = ItnTag::kNitn;
  }
  return tags;
}

}  // namespace itn
