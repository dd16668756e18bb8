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

#include "descedit/filler.h"

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "descedit/text.h"

namespace descedit {
namespace {

constexpr std::string_view kSentenceStart = "<s>";
constexpr char kKeySeparator = '\x1f';

bool Admissible(const std::string& word, const TokenSet& forbidden) {
  return word != kFillToken && word != kSentenceStart &&
         !forbidden.contains(word);
}

FillResult Removal(const MaskedInstance& instance, bool fell_back) {
  FillResult result;
  result.text = SpliceFill(instance, {});
  result.fell_back = fell_back;
  return result;
}

}  // namespace

FillConstraint ConstraintFor(std::string_view attribute_value,
                             std::size_t max_fill_len) {
  FillConstraint constraint;
  constraint.max_fill_len = max_fill_len;
  for (const Token& token : Tokenize(attribute_value)) {
    if (!IsPunctToken(token.text)) {
      constraint.forbidden_tokens.insert(ToLower(token.text));
    }
  }
  return constraint;
}

bool RespectsConstraint(std::span<const std::string> fill_tokens,
                        const FillConstraint& constraint) {
  return std::none_of(fill_tokens.begin(), fill_tokens.end(),
                      [&](const std::string& token) {
                        return constraint.forbidden_tokens.contains(
                            ToLower(token));
                      });
}

std::string_view FillerKindName(FillerKind kind) {
  switch (kind) {
    case FillerKind::kRemoval:
      return "removal";
    case FillerKind::kTemplate:
      return "template";
    case FillerKind::kNgramLm:
      return "ngram";
  }
  return "removal";
}

std::optional<FillerKind> ParseFillerKind(std::string_view name) {
  for (const FillerKind kind :
       {FillerKind::kRemoval, FillerKind::kTemplate, FillerKind::kNgramLm}) {
    if (FillerKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string SpliceFill(const MaskedInstance& instance,
                       std::span<const std::string> fill_tokens) {
  const std::vector<Token> tokens = Tokenize(instance.source_text);
  return ReplaceSpan(instance.source_text, tokens, instance.span,
                     JoinTokens(fill_tokens));
}

FillResult RemovalFiller::Fill(const MaskedInstance& instance,
                               const FillConstraint&) const {
  return Removal(instance, false);
}

TemplateFiller::TemplateFiller(std::map<std::string, std::string> table,
                               std::string default_phrase)
    : table_(std::move(table)), default_phrase_(std::move(default_phrase)) {}

FillResult TemplateFiller::Fill(const MaskedInstance& instance,
                                const FillConstraint& constraint) const {
  const auto it = table_.find(NormalizeText(instance.category));
  const std::string& phrase = it == table_.end() ? default_phrase_ : it->second;
  std::vector<std::string> words;
  for (const Token& token : Tokenize(phrase)) {
    if (words.size() >= constraint.max_fill_len) break;
    if (constraint.forbidden_tokens.contains(ToLower(token.text))) continue;
    words.push_back(token.text);
  }
  if (!HasWordToken(JoinTokens(words))) return Removal(instance, true);
  FillResult result;
  result.text = SpliceFill(instance, words);
  result.fill_tokens = std::move(words);
  return result;
}

std::string NgramModel::ContextKey(std::span<const std::string> context,
                                   std::size_t length) const {
  std::string key;
  for (std::size_t i = 0; i < length; ++i) {
    // Pad on the left with sentence-start markers.
    const std::ptrdiff_t index = static_cast<std::ptrdiff_t>(context.size()) -
                                 static_cast<std::ptrdiff_t>(length) +
                                 static_cast<std::ptrdiff_t>(i);
    if (i > 0) key += kKeySeparator;
    key += index < 0 ? std::string(kSentenceStart)
                     : context[static_cast<std::size_t>(index)];
  }
  return key;
}

double NgramModel::Probability(std::span<const std::string> context,
                               const std::string& word) const {
  const std::string key =
      ContextKey(context, static_cast<std::size_t>(order_ - 1));
  std::size_t count = 0;
  std::size_t total = 0;
  if (const auto it = continuations_.find(key); it != continuations_.end()) {
    const auto w = it->second.find(word);
    count = w == it->second.end() ? 0 : w->second;
    total = context_totals_.at(key);
  }
  return static_cast<double>(count + 1) /
         static_cast<double>(total + vocabulary_.size());
}

std::optional<std::string> NgramModel::Next(
    std::span<const std::string> context, const TokenSet& forbidden) const {
  auto best_of = [&](const std::map<std::string, std::size_t>& counts)
      -> std::optional<std::string> {
    std::optional<std::string> best;
    std::size_t best_count = 0;
    // Map order makes the first maximum the lexicographically smallest.
    for (const auto& [word, count] : counts) {
      if (!Admissible(word, forbidden)) continue;
      if (!best || count > best_count) {
        best = word;
        best_count = count;
      }
    }
    return best;
  };
  for (std::size_t length = static_cast<std::size_t>(order_ - 1); length > 0;
       --length) {
    const auto it = continuations_.find(ContextKey(context, length));
    if (it == continuations_.end()) continue;
    if (auto word = best_of(it->second)) return word;
  }
  return best_of(vocabulary_);
}

NgramModel NgramTrain(std::span<const std::string> descriptions, int order) {
  if (order < 2) throw Error("n-gram order must be at least 2");
  if (descriptions.empty()) throw Error("n-gram training corpus is empty");
  NgramModel model;
  model.order_ = order;
  for (const std::string& description : descriptions) {
    std::vector<std::string> history;
    for (const Token& token : Tokenize(description)) {
      const std::string word = ToLower(token.text);
      ++model.vocabulary_[word];
      for (std::size_t length = 1; length < static_cast<std::size_t>(order);
           ++length) {
        const std::string key = model.ContextKey(history, length);
        ++model.continuations_[key][word];
        ++model.context_totals_[key];
      }
      history.push_back(word);
    }
  }
  if (model.vocabulary_.empty()) {
    throw Error("n-gram training corpus has no tokens");
  }
  return model;
}

NgramFiller::NgramFiller(std::shared_ptr<const NgramModel> model)
    : model_(std::move(model)) {
  if (!model_) throw Error("n-gram filler needs a trained model");
}

FillResult NgramFiller::Fill(const MaskedInstance& instance,
                             const FillConstraint& constraint) const {
  const auto fill_at = std::find(instance.masked_text.begin(),
                                 instance.masked_text.end(), kFillToken);
  std::vector<std::string> context;
  for (auto it = instance.masked_text.begin(); it != fill_at; ++it) {
    context.push_back(ToLower(*it));
  }
  std::optional<std::string> right;
  if (fill_at != instance.masked_text.end() &&
      fill_at + 1 != instance.masked_text.end()) {
    right = ToLower(*(fill_at + 1));
  }

  std::vector<std::string> words;
  while (words.size() < constraint.max_fill_len) {
    const auto next = model_->Next(context, constraint.forbidden_tokens);
    if (!next) {
      if (words.empty()) return Removal(instance, true);
      break;
    }
    if (IsPunctToken(*next) || (right && *next == *right)) break;
    words.push_back(*next);
    context.push_back(*next);
  }
  FillResult result;
  result.text = SpliceFill(instance, words);
  result.fill_tokens = std::move(words);
  return result;
}

}  // namespace descedit
