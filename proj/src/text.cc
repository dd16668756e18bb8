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

#include "descedit/text.h"

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace descedit {
namespace {

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

bool IsWordChar(char c) { return !IsSpace(c) && !IsAsciiPunct(c); }

bool IsAlnumOrHigh(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z');
}

// Punctuation at `i` that belongs to the surrounding word.
bool IsInnerPunct(std::string_view text, std::size_t i) {
  if (i == 0 || i + 1 >= text.size()) return false;
  const char c = text[i];
  const char prev = text[i - 1];
  const char next = text[i + 1];
  if (c == '-' || c == '\'') return IsAlnumOrHigh(prev) && IsAlnumOrHigh(next);
  if (c == '.' || c == ',') return IsDigit(prev) && IsDigit(next);
  return false;
}

bool IsSeparator(const Token& token) {
  return token.text == "," || token.text == ";" || token.text == ":";
}

bool AllSpace(std::string_view text) {
  return std::all_of(text.begin(), text.end(), IsSpace);
}

}  // namespace

bool IsAsciiPunct(char c) {
  return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') ||
         (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsPunctToken(std::string_view token) {
  return !token.empty() && std::all_of(token.begin(), token.end(), IsAsciiPunct);
}

bool IsSentenceTerminal(std::string_view token) {
  return token == "." || token == "!" || token == "?";
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (IsSpace(text[i])) {
      ++i;
      continue;
    }
    if (IsAsciiPunct(text[i])) {
      tokens.push_back({std::string(1, text[i]), i, i + 1});
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() &&
           (IsWordChar(text[j]) || IsInnerPunct(text, j))) {
      ++j;
    }
    tokens.push_back({std::string(text.substr(i, j - i)), i, j});
    i = j;
  }
  return tokens;
}

std::vector<std::string> TokenStrings(std::string_view text) {
  std::vector<std::string> out;
  for (auto& token : Tokenize(text)) out.push_back(std::move(token.text));
  return out;
}

std::string ToLower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string NormalizeText(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (const char c : text) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back((c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a')
                                         : c);
  }
  return out;
}

std::string StripPunctEnds(std::string_view text) {
  auto strip = [](char c) { return IsSpace(c) || IsAsciiPunct(c); };
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && strip(text[b])) ++b;
  while (e > b && strip(text[e - 1])) --e;
  return std::string(text.substr(b, e - b));
}

std::string JoinTokens(std::span<const std::string> tokens,
                       std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += separator;
    out += tokens[i];
  }
  return out;
}

std::vector<TokenSpan> SplitSentences(std::string_view text,
                                      std::span<const Token> tokens) {
  std::vector<TokenSpan> sentences;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < tokens.size()) {
    bool boundary = false;
    if (IsSentenceTerminal(tokens[i].text)) {
      while (i + 1 < tokens.size() && IsSentenceTerminal(tokens[i + 1].text)) {
        ++i;
      }
      boundary = true;
    } else if (i + 1 < tokens.size()) {
      const std::string_view gap =
          text.substr(tokens[i].end, tokens[i + 1].begin - tokens[i].end);
      boundary = gap.find('\n') != std::string_view::npos;
    }
    ++i;
    if (boundary || i == tokens.size()) {
      sentences.push_back({start, i});
      start = i;
    }
  }
  return sentences;
}

std::string RemoveSpan(std::string_view text, std::span<const Token> tokens,
                       TokenSpan span) {
  if (span.empty()) return std::string(text);
  std::size_t s = span.start;
  std::size_t e = span.end;
  const Token* left = s > 0 ? &tokens[s - 1] : nullptr;
  const Token* right = e < tokens.size() ? &tokens[e] : nullptr;
  const bool left_open = left == nullptr || IsSentenceTerminal(left->text);

  if (left_open && right != nullptr && IsSentenceTerminal(right->text)) {
    while (e < tokens.size() && IsSentenceTerminal(tokens[e].text)) ++e;
  } else if (left != nullptr && IsSeparator(*left) && right != nullptr &&
             IsSeparator(*right)) {
    ++e;
  } else if (left != nullptr && IsSeparator(*left) &&
             (right == nullptr || IsSentenceTerminal(right->text))) {
    --s;
  } else if (left_open && right != nullptr && IsSeparator(*right)) {
    ++e;
  } else if (left != nullptr && left->text == "," && left->begin > 0 &&
             IsSpace(text[left->begin - 1]) && right != nullptr &&
             !IsPunctToken(right->text)) {
    --s;
  }

  std::size_t b = tokens[s].begin;
  std::size_t end = tokens[e - 1].end;
  const bool nothing_before = AllSpace(text.substr(0, b));
  const bool nothing_after = AllSpace(text.substr(end));
  if (nothing_before && nothing_after) return {};
  if (nothing_before) {
    while (end < text.size() && IsSpace(text[end])) ++end;
    b = 0;
  } else if (nothing_after) {
    while (b > 0 && IsSpace(text[b - 1])) --b;
    end = text.size();
  } else {
    const bool space_before = IsSpace(text[b - 1]);
    const bool space_after = IsSpace(text[end]);
    if (space_before && space_after) {
      std::size_t after = end;
      while (after < text.size() && IsSpace(text[after])) ++after;
      std::size_t before = b;
      while (before > 0 && IsSpace(text[before - 1])) --before;
      const bool newline_after =
          text.substr(end, after - end).find('\n') != std::string_view::npos;
      const bool newline_before =
          text.substr(before, b - before).find('\n') != std::string_view::npos;
      if (newline_after && !newline_before) {
        b = before;
      } else {
        end = after;
      }
    } else if (space_before) {
      while (b > 0 && IsSpace(text[b - 1])) --b;
    }
  }
  std::string out(text.substr(0, b));
  out.append(text.substr(end));
  return out;
}

std::string ReplaceSpan(std::string_view text, std::span<const Token> tokens,
                        TokenSpan span, std::string_view replacement) {
  if (replacement.empty()) return RemoveSpan(text, tokens, span);
  if (span.empty()) return std::string(text);
  std::string out(text.substr(0, tokens[span.start].begin));
  out.append(replacement);
  out.append(text.substr(tokens[span.end - 1].end));
  return out;
}

bool HasWordToken(std::string_view text) {
  for (const Token& token : Tokenize(text)) {
    if (!IsPunctToken(token.text)) return true;
  }
  return false;
}

}  // namespace descedit
