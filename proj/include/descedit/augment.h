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

// Draft/edit pair synthesis.
//
// Model-based pairs mask one span of a description with [FILL] and let a
// Filler rewrite it; four masking policies choose the span. Rule-based pairs
// delete a sentence that mentions only one attribute, or an attribute whose
// words are all adjectives. Every deletion sample is emitted together with
// its swapped addition.

#ifndef DESCEDIT_AUGMENT_H_
#define DESCEDIT_AUGMENT_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "descedit/corpus.h"
#include "descedit/lexicon.h"
#include "descedit/rng.h"
#include "descedit/text.h"
#include "descedit/textmetrics.h"

namespace descedit {

class Filler;

inline constexpr std::string_view kFillToken = "[FILL]";

enum class MaskPolicy { kTfidfToken, kAttributePhrase, kConjunctionClause,
                        kRandomPhrase };

inline constexpr std::array<MaskPolicy, 4> kAllPolicies = {
    MaskPolicy::kTfidfToken, MaskPolicy::kAttributePhrase,
    MaskPolicy::kConjunctionClause, MaskPolicy::kRandomPhrase};

std::string_view PolicyName(MaskPolicy policy);

// A description with one span replaced by [FILL].
struct MaskedInstance {
  std::vector<std::string> masked_text;
  std::vector<std::string> removed_span;
  MaskPolicy policy = MaskPolicy::kTfidfToken;
  std::string source_id;
  // The unmasked description and the masked token range within
  // Tokenize(source_text); fillers splice into the original characters.
  std::string source_text;
  std::string category;
  TokenSpan span;

  // masked_text with removed_span put back in place of [FILL].
  std::vector<std::string> Reconstruct() const;
};

MaskedInstance MakeMaskedInstance(const ProductRecord& record,
                                  std::span<const Token> tokens,
                                  TokenSpan span, MaskPolicy policy);

// Selection weights over the four masking policies.
struct PolicyMix {
  double token_level = 0.50;
  double attribute_based = 0.25;
  double conjunction_based = 0.15;
  double random = 0.10;
  std::uint64_t seed = 0;

  // Throws Error unless every weight is >= 0 and they sum to 1 +- 1e-9.
  void Validate() const;

  double Weight(MaskPolicy policy) const;

  // Categorical draw from u in [0, 1).
  MaskPolicy Select(double u) const;

  // "t,a,c,r".
  static PolicyMix Parse(std::string_view text, std::uint64_t seed);
  std::string ToString() const;
};

// Document frequencies over normalized description tokens.
struct TfidfModel {
  std::unordered_map<std::string, std::size_t> document_frequency;
  std::size_t document_count = 0;

  // Unseen tokens count as appearing in one document.
  std::size_t Df(const std::string& normalized_token) const;
};

// Throws Error on an empty corpus.
TfidfModel TfidfFit(std::span<const ProductRecord> corpus);
TfidfModel TfidfFitDescriptions(std::span<const std::string> descriptions);

// Index of the token with the highest tf * ln(N / df), skipping stopwords
// and punctuation; ties go to the earliest index. Throws Error
// "no maskable token" when nothing is eligible.
std::size_t TfidfTopToken(std::span<const std::string> tokens,
                          const TfidfModel& model, const TokenSet& stopwords);

MaskedInstance MaskTokenLevel(const ProductRecord& record,
                              const TfidfModel& model,
                              const TokenSet& stopwords);

// Span of 2-5 tokens at a uniform position. Throws Error for descriptions
// under six tokens.
MaskedInstance MaskRandomPhrase(const ProductRecord& record, Rng& rng);

// Coordinating conjunctions that open a maskable clause.
bool IsClauseConjunction(std::string_view token);

// Removes one non-initial clause, with its leading conjunction, chosen
// uniformly over every sentence that has two or more clauses.
std::optional<MaskedInstance> MaskConjunctionClause(
    const ProductRecord& record, Rng& rng);

std::optional<MaskedInstance> MaskAttributePhrase(
    const ProductRecord& record, const AttributePair& attribute,
    int min_score = kDefaultMinScore);

std::optional<EditSample> RuleDeleteSentence(
    const ProductRecord& record, const AttributePair& attribute,
    int min_score = kDefaultMinScore);

std::optional<EditSample> RuleDeleteAdjective(
    const ProductRecord& record, const AttributePair& attribute,
    const TokenSet& adjectives, int min_score = kDefaultMinScore);

struct AugmentConfig {
  PolicyMix mix;
  int min_score = kDefaultMinScore;
  std::size_t max_fill_len = 8;
  TokenSet stopwords;
  TokenSet adjectives;
  // Also try the sentence and adjective deletion rules on each record.
  bool rule_strategies = true;
  unsigned workers = 1;
};

// What happened to one input record.
struct RecordOutcome {
  bool skipped_no_attributes = false;
  std::optional<MaskPolicy> selected;
  std::optional<MaskPolicy> applied;  // empty when every policy failed
  bool fill_fell_back = false;
  bool rule_sentence = false;
  bool rule_adjective = false;
  std::vector<EditSample> samples;
};

struct AugmentCounts {
  std::size_t records = 0;
  std::size_t skipped_no_attributes = 0;
  std::size_t skipped_infeasible = 0;
  std::array<std::size_t, 4> selected{};
  std::array<std::size_t, 4> applied{};
  std::size_t rule_sentence = 0;
  std::size_t rule_adjective = 0;
  std::size_t fill_fallbacks = 0;
  std::size_t del_samples = 0;
  std::size_t add_samples = 0;
};

struct AugmentResult {
  std::vector<EditSample> samples;
  std::vector<RecordOutcome> outcomes;  // one per input record
  AugmentCounts counts;
};

// Processes one record. Pure in (record, config, model, filler).
RecordOutcome AugmentRecord(const ProductRecord& record,
                            const AugmentConfig& config,
                            const TfidfModel& model, const Filler& filler);

// Runs AugmentRecord over all records on config.workers threads; output is
// in input order whatever the worker count.
AugmentResult BuildPairs(std::span<const ProductRecord> records,
                         const AugmentConfig& config, const TfidfModel& model,
                         const Filler& filler);

}  // namespace descedit

#endif  // DESCEDIT_AUGMENT_H_
