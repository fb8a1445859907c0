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

#ifndef ITN_TOKEN_H_
#define ITN_TOKEN_H_

#include <string>
#include <string_view>
#include <vector>

namespace itn {

enum class TokenKind {
  kWord,
  kNumber,
  kPunctuation,
  kSymbol,
};

// The semiotic class of a normalizable entity. PlainWord marks tokens that
// belong to no entity span and must be copied through unchanged.
enum class SemioticClass {
  kCardinal,
  kOrdinal,
  kFraction,
  kDecimal,
  kYear,
  kDate,
  kTime,
  kCurrency,
  kPercent,
  kMeasure,
  kPhone,
  kPlainWord,
};

const char* SemioticClassName(SemioticClass cls);

struct Token {
  std::string surface;  // non-empty, no internal whitespace
  std::string lower;    // case-folded surface
  TokenKind kind = TokenKind::kWord;

  bool operator==(const Token& other) const = default;
};

// Builds a token from a surface string, classifying its kind and folding case.
Token MakeToken(std::string surface);

struct Sentence {
  std::vector<Token> tokens;
  std::string raw;

  bool empty() const { return tokens.empty(); }
  size_t size() const { return tokens.size(); }
};

// ASCII-only case folding. Bytes outside [A-Z] pass through unchanged, so the
// result is locale-independent and reproducible.
std::string AsciiLower(std::string_view s);

// Splits text on whitespace, then peels leading opener punctuation and
// trailing closer punctuation into separate tokens. "$" stays attached as a
// prefix when a digit follows ("$5"); "%" stays attached as a suffix when a
// digit precedes ("4%"). Internal punctuation ("don't", "3649.84", "12:00",
// "1-800-255-7828") is never split. Deterministic; empty input gives an
// empty Sentence.
Sentence Tokenize(const std::string& text);

// Whitespace-only split: punctuation stays attached ("20," is one token).
// This is the tokenization used for WER scoring and ITN/N-ITN tagging.
Sentence SplitWords(const std::string& text);

// Joins token surfaces with single spaces, reattaching punctuation: closers
// (, . ! ? ; : ) ] }) take no preceding space, openers (( [ {) take no
// following space, and quotes alternate open/close.
std::string Detokenize(const Sentence& s);

// Detokenize, additionally reporting for each token the index of the
// whitespace-separated word it ends up in ("20" and "," both map to the
// word "20,"). word_of_token is resized to s.tokens.size().
std::string DetokenizeWithMap(const Sentence& s,
                              std::vector<size_t>* word_of_token);

}  // namespace itn

#endif  // ITN_TOKEN_H_
