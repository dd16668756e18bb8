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

// Blank fillers: turn a MaskedInstance back into a full description whose
// filled-in words avoid a set of forbidden (attribute) tokens.

#ifndef DESCEDIT_FILLER_H_
#define DESCEDIT_FILLER_H_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "descedit/augment.h"
#include "descedit/lexicon.h"

namespace descedit {

struct FillConstraint {
  TokenSet forbidden_tokens;  // lowercased, punctuation excluded
  std::size_t max_fill_len = 8;
};

// Forbids every word token of `attribute_value`.
FillConstraint ConstraintFor(std::string_view attribute_value,
                             std::size_t max_fill_len = 8);

struct FillResult {
  std::string text;                      // completed description
  std::vector<std::string> fill_tokens;  // what went where [FILL] was
  bool fell_back = false;                // no admissible fill; removed instead
};

// True when no fill token is forbidden.
bool RespectsConstraint(std::span<const std::string> fill_tokens,
                        const FillConstraint& constraint);

enum class FillerKind { kRemoval, kTemplate, kNgramLm };

std::string_view FillerKindName(FillerKind kind);
std::optional<FillerKind> ParseFillerKind(std::string_view name);

class Filler {
 public:
  virtual ~Filler() = default;
  virtual FillerKind kind() const = 0;
  virtual FillResult Fill(const MaskedInstance& instance,
                          const FillConstraint& constraint) const = 0;
};

// Splices `fill_tokens` into the instance's source text at the masked range.
// An empty fill deletes the range and smooths the punctuation around it.
std::string SpliceFill(const MaskedInstance& instance,
                       std::span<const std::string> fill_tokens);

class RemovalFiller : public Filler {
 public:
  FillerKind kind() const override { return FillerKind::kRemoval; }
  FillResult Fill(const MaskedInstance& instance,
                  const FillConstraint& constraint) const override;
};

// Inserts a fixed phrase looked up by category, minus forbidden tokens.
class TemplateFiller : public Filler {
 public:
  explicit TemplateFiller(std::map<std::string, std::string> table,
                          std::string default_phrase = "this item");

  FillerKind kind() const override { return FillerKind::kTemplate; }
  FillResult Fill(const MaskedInstance& instance,
                  const FillConstraint& constraint) const override;

 private:
  std::map<std::string, std::string> table_;
  std::string default_phrase_;
};

// Count tables of a word n-gram model over lowercased description tokens.
// Immutable once trained.
class NgramModel {
 public:
  NgramModel() = default;

  int order() const { return order_; }
  std::size_t vocabulary_size() const { return vocabulary_.size(); }

  // Add-one smoothed P(word | last order-1 tokens of context), with the
  // context padded by sentence-start markers.
  double Probability(std::span<const std::string> context,
                     const std::string& word) const;

  // Greedy next word: the most frequent admissible continuation of the
  // longest seen context, backing off to shorter contexts when every seen
  // continuation is forbidden. Ties go to the lexicographically smallest
  // word. Empty when nothing is admissible.
  std::optional<std::string> Next(std::span<const std::string> context,
                                  const TokenSet& forbidden) const;

  friend bool operator==(const NgramModel&, const NgramModel&) = default;
  friend NgramModel NgramTrain(std::span<const std::string> descriptions,
                               int order);

 private:
  using CountTable = std::map<std::string, std::size_t>;

  std::string ContextKey(std::span<const std::string> context,
                         std::size_t length) const;

  int order_ = 0;
  std::map<std::string, std::size_t> vocabulary_;  // unigram counts
  // Context key (lengths 1 .. order-1) -> continuation counts.
  std::map<std::string, CountTable> continuations_;
  std::map<std::string, std::size_t> context_totals_;
};

// Throws Error for order < 2 or an empty corpus.
NgramModel NgramTrain(std::span<const std::string> descriptions, int order);

// Greedy decoding from the left context of [FILL]. Stops at max_fill_len,
// when the model predicts punctuation, or when it would reproduce the token
// right after the blank. Falls back to removal, flagged, when the first step
// has no admissible word.
class NgramFiller : public Filler {
 public:
  explicit NgramFiller(std::shared_ptr<const NgramModel> model);

  FillerKind kind() const override { return FillerKind::kNgramLm; }
  FillResult Fill(const MaskedInstance& instance,
                  const FillConstraint& constraint) const override;

 private:
  std::shared_ptr<const NgramModel> model_;
};

}  // namespace descedit

#endif  // DESCEDIT_FILLER_H_
