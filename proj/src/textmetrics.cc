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

#include "descedit/textmetrics.h"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "descedit/text.h"

namespace descedit {
namespace {

// Score for two strings that are already normalized.
int RawRatio(std::string_view a, std::string_view b) {
  if (a == b) return 100;
  const std::size_t longest = std::max<std::size_t>({a.size(), b.size(), 1});
  const std::size_t distance = Levenshtein(a, b);
  // Integer round-half-up of 100 * (longest - distance) / longest.
  return static_cast<int>((200 * (longest - distance) + longest) /
                          (2 * longest));
}

}  // namespace

std::size_t Levenshtein(std::string_view a, std::string_view b) {
  // Common affixes never contribute to the distance.
  while (!a.empty() && !b.empty() && a.front() == b.front()) {
    a.remove_prefix(1);
    b.remove_prefix(1);
  }
  while (!a.empty() && !b.empty() && a.back() == b.back()) {
    a.remove_suffix(1);
    b.remove_suffix(1);
  }
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return a.size();

  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[j] = std::min({above + 1, row[j - 1] + 1, diagonal + cost});
      diagonal = above;
    }
  }
  return row[b.size()];
}

int SimilarityRatio(std::string_view a, std::string_view b) {
  return RawRatio(NormalizeText(a), NormalizeText(b));
}

int PartialRatio(std::string_view needle, std::string_view haystack) {
  const std::string n = NormalizeText(needle);
  const std::string h = NormalizeText(haystack);
  int best = RawRatio(n, h);
  if (h.size() <= n.size()) return best;
  const std::string_view hv(h);
  for (std::size_t start = 0; start + n.size() <= h.size() && best < 100;
       ++start) {
    best = std::max(best, RawRatio(n, hv.substr(start, n.size())));
  }
  return best;
}

std::optional<MatchSpan> LocateAttributeSpan(
    std::span<const std::string> tokens, std::string_view attribute_value,
    int min_score) {
  const std::vector<std::string> value_tokens = TokenStrings(attribute_value);
  if (tokens.empty() || value_tokens.empty()) return std::nullopt;
  const std::string target =
      StripPunctEnds(NormalizeText(JoinTokens(value_tokens)));

  std::vector<std::string> lowered;
  lowered.reserve(tokens.size());
  for (const std::string& token : tokens) lowered.push_back(ToLower(token));

  const std::size_t max_width =
      std::min(2 * value_tokens.size() + 2, tokens.size());
  std::optional<MatchSpan> best;
  for (std::size_t width = 1; width <= max_width; ++width) {
    for (std::size_t start = 0; start + width <= tokens.size(); ++start) {
      std::string window = lowered[start];
      for (std::size_t k = start + 1; k < start + width; ++k) {
        window += ' ';
        window += lowered[k];
      }
      const int score = RawRatio(StripPunctEnds(window), target);
      if (!best || score > best->score) {
        best = MatchSpan{start, start + width, score};
      }
    }
  }
  if (!best || best->score < min_score) return std::nullopt;
  return best;
}

std::optional<MatchSpan> LocateAttributeSpan(std::string_view text,
                                             std::string_view attribute_value,
                                             int min_score) {
  const std::vector<std::string> tokens = TokenStrings(text);
  return LocateAttributeSpan(std::span<const std::string>(tokens),
                             attribute_value, min_score);
}

int BestMatchScore(std::string_view text, std::string_view attribute_value) {
  const auto match = LocateAttributeSpan(text, attribute_value, 0);
  return match ? match->score : 0;
}

}  // namespace descedit
