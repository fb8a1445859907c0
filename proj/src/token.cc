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

#include "itn/token.h"

#include <cctype>

namespace itn {

namespace {

bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }
bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
bool IsAsciiPunct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0 &&
         static_cast<unsigned char>(c) < 0x80;
}

bool IsOpener(char c) {
  switch (c) {
    case '(':
    case '[':
    case '{':
    case '"':
    case '\'':
    case '$':
      return true;
    default:
      return false;
  }
}

bool IsCloser(char c) {
  switch (c) {
    case ',':
    case '.':
    case '!':
    case '?':
    case ';':
    case ':':
    case ')':
    case ']':
    case '}':
    case '"':
    case '\'':
    case '%':
      return true;
    default:
      return false;
  }
}

}  // namespace

const char* SemioticClassName(SemioticClass cls) {
  switch (cls) {
    case SemioticClass::kCardinal:
      return "Cardinal";
    case SemioticClass::kOrdinal:
      return "Ordinal";
    case SemioticClass::kFraction:
      return "Fraction";
    case SemioticClass::kDecimal:
      return "Decimal";
    case SemioticClass::kYear:
      return "Year";
    case SemioticClass::kDate:
      return "Date";
    case SemioticClass::kTime:
      return "Time";
    case SemioticClass::kCurrency:
      return "Currency";
    case SemioticClass::kPercent:
      return "Percent";
    case SemioticClass::kMeasure:
      return "Measure";
    case SemioticClass::kPhone:
      return "Phone";
    case SemioticClass::kPlainWord:
      return "PlainWord";
  }
  return "Unknown";
}

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

Token MakeToken(std::string surface) {
  Token tok;
  tok.lower = AsciiLower(surface);
  bool has_alpha = false;
  bool has_digit = false;
  bool all_punct = !surface.empty();
  for (char c : surface) {
    if (IsAsciiAlpha(c)) has_alpha = true;
    if (IsAsciiDigit(c)) has_digit = true;
    if (!IsAsciiPunct(c)) all_punct = false;
  }
  if (all_punct) {
    tok.kind = TokenKind::kPunctuation;
  } else if (has_digit && !has_alpha) {
    tok.kind = TokenKind::kNumber;
  } else if (has_alpha) {
    tok.kind = TokenKind::kWord;
  } else {
    tok.kind = TokenKind::kSymbol;
  }
  tok.surface = std::move(surface);
  return tok;
}

namespace {

// Splits one whitespace-free chunk into tokens, appending to out.
void SplitChunk(std::string_view chunk, std::vector<Token>* out) {
  // Peel leading openers. "$" is only peeled when no digit follows it, so
  // "$5" survives as one token while a stray "$" becomes punctuation.
  while (!chunk.empty() && IsOpener(chunk.front())) {
    if (chunk.front() == '$' && chunk.size() > 1 && IsAsciiDigit(chunk[1])) {
      break;
    }
    out->push_back(MakeToken(std::string(1, chunk.front())));
    chunk.remove_prefix(1);
  }
  // Peel trailing closers into a pending stack. "%" stays attached when the
  // preceding character is a digit ("4%").
  std::vector<char> pending;
  while (!chunk.empty() && IsCloser(chunk.back())) {
    if (chunk.back() == '%' && chunk.size() > 1 &&
        IsAsciiDigit(chunk[chunk.size() - 2])) {
      break;
    }
    pending.push_back(chunk.back());
    chunk.remove_suffix(1);
  }
  if (!chunk.empty()) out->push_back(MakeToken(std::string(chunk)));
  for (auto it = pending.rbegin(); it != pending.rend(); ++it) {
    out->push_back(MakeToken(std::string(1, *it)));
  }
}

}  // namespace

Sentence Tokenize(const std::string& text) {
  Sentence sent;
  sent.raw = text;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    size_t j = i;
    while (j < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    if (j > i) SplitChunk(std::string_view(text).substr(i, j - i), &sent.tokens);
    i = j;
  }
  return sent;
}

Sentence SplitWords(const std::string& text) {
  Sentence sent;
  sent.raw = text;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    size_t j = i;
    while (j < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    if (j > i) sent.tokens.push_back(MakeToken(text.substr(i, j - i)));
    i = j;
  }
  return sent;
}

std::string Detokenize(const Sentence& s) {
  return DetokenizeWithMap(s, nullptr);
}

std::string DetokenizeWithMap(const Sentence& s,
                              std::vector<size_t>* word_of_token) {
  std::string out;
  if (word_of_token != nullptr) {
    word_of_token->assign(s.tokens.size(), 0);
  }
  size_t word = 0;
  bool suppress_space = false;
  bool dquote_open = false;
  bool squote_open = false;
  for (size_t k = 0; k < s.tokens.size(); ++k) {
    const std::string& surf = s.tokens[k].surface;
    bool no_space_before = false;
    bool no_space_after = false;
    if (surf.size() == 1) {
      char c = surf[0];
      switch (c) {
        case ',':
        case '.':
        case '!':
        case '?':
        case ';':
        case ':':
        case ')':
        case ']':
        case '}':
        case '%':
          no_space_before = true;
          break;
        case '(':
        case '[':
        case '{':
        case '$':
          no_space_after = true;
          break;
        case '"':
          if (dquote_open) {
            no_space_before = true;
          } else {
            no_space_after = true;
          }
          dquote_open = !dquote_open;
          break;
        case '\'':
          if (squote_open) {
            no_space_before = true;
          } else {
            no_space_after = true;
          }
          squote_open = !squote_open;
          break;
        default:
          break;
      }
    }
    if (k > 0 && !suppress_space && !no_space_before) {
      out.push_back(' ');
      ++word;
    }
    if (word_of_token != nullptr) (*word_of_token)[k] = word;
    out += surf;
    suppress_space = no_space_after;
  }
  return out;
}

}  // namespace itn
