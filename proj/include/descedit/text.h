// Copyright 2026 The Descedit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Tokenization, normalization and span surgery shared by every module.
//
// Tokens keep byte offsets into the text they came from, so edits can cut
// character ranges out of the original string and leave the rest of its
// formatting untouched.

#ifndef DESCEDIT_TEXT_H_
#define DESCEDIT_TEXT_H_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace descedit {

// Error raised for invalid input, configuration or I/O. Messages are meant
// for the person running the tool.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Token {
  std::string text;
  std::size_t begin = 0;  // byte offset into the source text
  std::size_t end = 0;    // one past the last byte
};

// Half-open token index range [start, end).
struct TokenSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  bool empty() const { return end <= start; }
  friend bool operator==(const TokenSpan&, const TokenSpan&) = default;
};

bool IsAsciiPunct(char c);
bool IsSpace(char c);

// True for tokens made only of ASCII punctuation.
bool IsPunctToken(std::string_view token);

// ".", "!" or "?".
bool IsSentenceTerminal(std::string_view token);

// Whitespace split, with ASCII punctuation broken out into one-character
// tokens. Hyphens and apostrophes inside words ("green-apple", "don't") and
// periods or commas between digits ("1.5", "1,000") stay inside the token.
std::vector<Token> Tokenize(std::string_view text);

// Token strings only.
std::vector<std::string> TokenStrings(std::string_view text);

std::string ToLower(std::string_view text);

// Lowercase, collapse whitespace runs to one space, trim both ends.
std::string NormalizeText(std::string_view text);

// Drops leading and trailing punctuation and whitespace.
std::string StripPunctEnds(std::string_view text);

std::string JoinTokens(std::span<const std::string> tokens,
                       std::string_view separator = " ");

// Sentence spans over `tokens`. A sentence ends after a run of terminal
// punctuation or where the source text has a newline between two tokens.
// Abbreviations are not special-cased.
std::vector<TokenSpan> SplitSentences(std::string_view text,
                                      std::span<const Token> tokens);

// Removes the tokens in `span` from `text` and repairs the seams: no doubled
// separators, no separator left at the start of a sentence or dangling
// before its end, and a standalone comma left in front of a word goes too.
// Whitespace is trimmed so the neighbours end up one separator apart.
// Returns the edited text; may be empty when nothing else remains.
std::string RemoveSpan(std::string_view text, std::span<const Token> tokens,
                       TokenSpan span);

// Replaces the characters covered by `span` with `replacement`. An empty
// replacement behaves exactly like RemoveSpan.
std::string ReplaceSpan(std::string_view text, std::span<const Token> tokens,
                        TokenSpan span, std::string_view replacement);

// True when the text holds at least one non-punctuation token.
bool HasWordToken(std::string_view text);

}  // namespace descedit

#endif  // DESCEDIT_TEXT_H_
