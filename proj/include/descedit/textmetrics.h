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

// Edit distance and fuzzy matching on byte strings. Scores are integers in
// [0, 100]. All functions are pure.

#ifndef DESCEDIT_TEXTMETRICS_H_
#define DESCEDIT_TEXTMETRICS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace descedit {

inline constexpr int kDefaultMinScore = 60;

// Best-scoring token window of an attribute value inside a text.
struct MatchSpan {
  std::size_t start = 0;  // inclusive token index
  std::size_t end = 0;    // exclusive token index
  int score = 0;

  friend bool operator==(const MatchSpan&, const MatchSpan&) = default;
};

// Unit-cost insert/delete/substitute distance.
std::size_t Levenshtein(std::string_view a, std::string_view b);

// round(100 * (1 - lev / max(|a|, |b|, 1))) after NormalizeText on both
// sides; 100 when the normalized strings are equal.
int SimilarityRatio(std::string_view a, std::string_view b);

// Best SimilarityRatio of `needle` against every window of the normalized
// haystack that is as wide as the normalized needle. The whole haystack is
// also a candidate, so the result never drops below SimilarityRatio.
int PartialRatio(std::string_view needle, std::string_view haystack);

// Scans token windows of width 1 .. min(2k + 2, n), where k is the number of
// tokens in `attribute_value`, and returns the best window when it scores at
// least `min_score`. Windows are joined with single spaces and stripped of
// edge punctuation before scoring. Ties go to the shorter window, then the
// earlier one.
std::optional<MatchSpan> LocateAttributeSpan(
    std::span<const std::string> tokens, std::string_view attribute_value,
    int min_score = kDefaultMinScore);

// Tokenizes `text` first.
std::optional<MatchSpan> LocateAttributeSpan(
    std::string_view text, std::string_view attribute_value,
    int min_score = kDefaultMinScore);

// Score of the best window regardless of threshold; 0 for empty text.
int BestMatchScore(std::string_view text, std::string_view attribute_value);

}  // namespace descedit

#endif  // DESCEDIT_TEXTMETRICS_H_
