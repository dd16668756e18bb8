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

#include "descedit/augment.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_set>
#include <vector>

#include "descedit/filler.h"
#include "descedit/text.h"
#include "descedit/textmetrics.h"

namespace descedit {
namespace {

std::vector<std::string> Strings(std::span<const Token> tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& token : tokens) out.push_back(token.text);
  return out;
}

// Source characters covered by a token span.
std::string SpanText(std::string_view text, std::span<const Token> tokens,
                     TokenSpan span) {
  const std::size_t b = tokens[span.start].begin;
  return std::string(text.substr(b, tokens[span.end - 1].end - b));
}

EditSample MakeDeletion(const ProductRecord& record,
                        const AttributePair& attribute, std::string edit,
                        Provenance provenance) {
  EditSample sample;
  sample.attribute = attribute;
  sample.command = Command::kDel;
  sample.grounding = {record.title, record.category};
  sample.draft = record.description;
  sample.edit = std::move(edit);
  sample.provenance = provenance;
  return sample;
}

std::optional<EditSample> ValidDeletion(EditSample sample) {
  if (CheckEditSample(sample)) return std::nullopt;
  return sample;
}

// Fresh draws of a randomly placed span before moving to the next policy.
constexpr int kSpanDraws = 4;

std::string_view PseudoAttributeName(MaskPolicy policy) {
  switch (policy) {
    case MaskPolicy::kTfidfToken:
      return "keyword";
    case MaskPolicy::kConjunctionClause:
      return "clause";
    default:
      return "phrase";
  }
}

// Runs one masking policy. The attribute of the resulting sample is returned
// through `attribute`.
std::optional<MaskedInstance> TryMask(MaskPolicy policy,
                                      const ProductRecord& record,
                                      std::size_t target_attribute,
                                      const AugmentConfig& config,
                                      const TfidfModel& model, Rng& rng,
                                      AttributePair& attribute) {
  std::optional<MaskedInstance> instance;
  switch (policy) {
    case MaskPolicy::kAttributePhrase: {
      // Target attribute first, then the rest in record order.
      const std::size_t n = record.attributes.size();
      for (std::size_t k = 0; k < n && !instance; ++k) {
        const AttributePair& candidate =
            record.attributes[(target_attribute + k) % n];
        instance = MaskAttributePhrase(record, candidate, config.min_score);
        if (instance) attribute = candidate;
      }
      return instance;
    }
    case MaskPolicy::kTfidfToken:
      try {
        instance = MaskTokenLevel(record, model, config.stopwords);
      } catch (const Error&) {
        return std::nullopt;
      }
      break;
    case MaskPolicy::kRandomPhrase:
      try {
        instance = MaskRandomPhrase(record, rng);
      } catch (const Error&) {
        return std::nullopt;
      }
      break;
    case MaskPolicy::kConjunctionClause:
      instance = MaskConjunctionClause(record, rng);
      break;
  }
  if (!instance) return std::nullopt;

  // Name the sample after the record attribute whose best location in the
  // description overlaps the span; otherwise the removed text itself plays
  // the attribute.
  const std::vector<Token> tokens = Tokenize(record.description);
  const std::vector<std::string> words = Strings(tokens);
  std::optional<MatchSpan> best;
  for (const AttributePair& candidate : record.attributes) {
    const auto match = LocateAttributeSpan(
        std::span<const std::string>(words), candidate.value, config.min_score);
    if (!match || match->end <= instance->span.start ||
        match->start >= instance->span.end) {
      continue;
    }
    if (!best || match->score > best->score) {
      best = match;
      attribute = candidate;
    }
  }
  if (!best) {
    std::string value = SpanText(record.description, tokens, instance->span);
    if (!HasWordToken(value)) return std::nullopt;
    attribute = {std::string(PseudoAttributeName(policy)), std::move(value)};
  }
  return instance;
}

}  // namespace

std::string_view PolicyName(MaskPolicy policy) {
  switch (policy) {
    case MaskPolicy::kTfidfToken:
      return "tfidf_token";
    case MaskPolicy::kAttributePhrase:
      return "attribute_phrase";
    case MaskPolicy::kConjunctionClause:
      return "conjunction_clause";
    case MaskPolicy::kRandomPhrase:
      return "random_phrase";
  }
  return "tfidf_token";
}

std::vector<std::string> MaskedInstance::Reconstruct() const {
  std::vector<std::string> out;
  out.reserve(masked_text.size() + removed_span.size());
  for (const std::string& token : masked_text) {
    if (token == kFillToken) {
      out.insert(out.end(), removed_span.begin(), removed_span.end());
    } else {
      out.push_back(token);
    }
  }
  return out;
}

MaskedInstance MakeMaskedInstance(const ProductRecord& record,
                                  std::span<const Token> tokens,
                                  TokenSpan span, MaskPolicy policy) {
  MaskedInstance instance;
  for (std::size_t i = 0; i < span.start; ++i) {
    instance.masked_text.push_back(tokens[i].text);
  }
  instance.masked_text.emplace_back(kFillToken);
  for (std::size_t i = span.start; i < span.end; ++i) {
    instance.removed_span.push_back(tokens[i].text);
  }
  for (std::size_t i = span.end; i < tokens.size(); ++i) {
    instance.masked_text.push_back(tokens[i].text);
  }
  instance.policy = policy;
  instance.source_id = record.id;
  instance.source_text = record.description;
  instance.category = record.category;
  instance.span = span;
  return instance;
}

void PolicyMix::Validate() const {
  const double weights[] = {token_level, attribute_based, conjunction_based,
                            random};
  double sum = 0.0;
  for (const double w : weights) {
    if (!(w >= 0.0)) throw Error("policy mix weights must be >= 0");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error("policy mix must sum to 1 (got " + std::to_string(sum) + ")");
  }
}

double PolicyMix::Weight(MaskPolicy policy) const {
  switch (policy) {
    case MaskPolicy::kTfidfToken:
      return token_level;
    case MaskPolicy::kAttributePhrase:
      return attribute_based;
    case MaskPolicy::kConjunctionClause:
      return conjunction_based;
    case MaskPolicy::kRandomPhrase:
      return random;
  }
  return 0.0;
}

MaskPolicy PolicyMix::Select(double u) const {
  double cumulative = 0.0;
  MaskPolicy last = MaskPolicy::kTfidfToken;
  for (const MaskPolicy policy : kAllPolicies) {
    const double w = Weight(policy);
    if (w <= 0.0) continue;
    last = policy;
    cumulative += w;
    if (u < cumulative) return policy;
  }
  return last;
}

PolicyMix PolicyMix::Parse(std::string_view text, std::uint64_t seed) {
  std::vector<double> values;
  std::stringstream stream{std::string(text)};
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (NormalizeText(item.substr(used)) != "") throw Error("");
    } catch (const std::exception&) {
      throw Error("invalid --mix entry \"" + item + "\"");
    }
  }
  if (values.size() != 4) {
    throw Error("--mix needs four comma-separated weights t,a,c,r");
  }
  PolicyMix mix{values[0], values[1], values[2], values[3], seed};
  mix.Validate();
  return mix;
}

std::string PolicyMix::ToString() const {
  std::string out;
  for (const double weight :
       {token_level, attribute_based, conjunction_based, random}) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), weight);
    if (!out.empty()) out += ',';
    out.append(buffer, result.ptr);
  }
  return out;
}

std::size_t TfidfModel::Df(const std::string& normalized_token) const {
  const auto it = document_frequency.find(normalized_token);
  return it == document_frequency.end() ? 1 : it->second;
}

TfidfModel TfidfFitDescriptions(std::span<const std::string> descriptions) {
  if (descriptions.empty()) throw Error("tf-idf needs a non-empty corpus");
  TfidfModel model;
  model.document_count = descriptions.size();
  for (const std::string& description : descriptions) {
    std::unordered_set<std::string> seen;
    for (const Token& token : Tokenize(description)) {
      seen.insert(ToLower(token.text));
    }
    for (const std::string& token : seen) ++model.document_frequency[token];
  }
  return model;
}

TfidfModel TfidfFit(std::span<const ProductRecord> corpus) {
  std::vector<std::string> descriptions;
  descriptions.reserve(corpus.size());
  for (const ProductRecord& record : corpus) {
    descriptions.push_back(record.description);
  }
  return TfidfFitDescriptions(descriptions);
}

std::size_t TfidfTopToken(std::span<const std::string> tokens,
                          const TfidfModel& model, const TokenSet& stopwords) {
  std::vector<std::string> lowered;
  lowered.reserve(tokens.size());
  for (const std::string& token : tokens) lowered.push_back(ToLower(token));

  std::optional<std::size_t> best;
  double best_score = 0.0;
  const auto n = static_cast<double>(model.document_count);
  for (std::size_t i = 0; i < lowered.size(); ++i) {
    const std::string& token = lowered[i];
    if (IsPunctToken(token) || stopwords.contains(token)) continue;
    const auto tf = static_cast<double>(
        std::count(lowered.begin(), lowered.end(), token));
    const double score =
        tf * std::log(n / static_cast<double>(model.Df(token)));
    if (!best || score > best_score) {
      best = i;
      best_score = score;
    }
  }
  if (!best) throw Error("no maskable token");
  return *best;
}

MaskedInstance MaskTokenLevel(const ProductRecord& record,
                              const TfidfModel& model,
                              const TokenSet& stopwords) {
  const std::vector<Token> tokens = Tokenize(record.description);
  const std::vector<std::string> strings = Strings(tokens);
  const std::size_t index = TfidfTopToken(strings, model, stopwords);
  return MakeMaskedInstance(record, tokens, {index, index + 1},
                            MaskPolicy::kTfidfToken);
}

MaskedInstance MaskRandomPhrase(const ProductRecord& record, Rng& rng) {
  const std::vector<Token> tokens = Tokenize(record.description);
  if (tokens.size() < 6) throw Error("too short for phrase masking");
  const std::size_t length = rng.UniformInt(2, 5);
  const std::size_t start = rng.UniformInt(0, tokens.size() - length);
  return MakeMaskedInstance(record, tokens, {start, start + length},
                            MaskPolicy::kRandomPhrase);
}

bool IsClauseConjunction(std::string_view token) {
  const std::string lowered = ToLower(token);
  return lowered == "and" || lowered == "or" || lowered == "but" ||
         lowered == "nor" || lowered == "yet" || lowered == "so";
}

std::optional<MaskedInstance> MaskConjunctionClause(
    const ProductRecord& record, Rng& rng) {
  const std::vector<Token> tokens = Tokenize(record.description);
  std::vector<TokenSpan> candidates;
  for (const TokenSpan& sentence : SplitSentences(record.description, tokens)) {
    std::size_t end = sentence.end;
    while (end > sentence.start && IsSentenceTerminal(tokens[end - 1].text)) {
      --end;
    }
    std::vector<std::size_t> openings;
    for (std::size_t i = sentence.start + 1; i < end; ++i) {
      if (IsClauseConjunction(tokens[i].text)) openings.push_back(i);
    }
    for (std::size_t k = 0; k < openings.size(); ++k) {
      const std::size_t clause_end =
          k + 1 < openings.size() ? openings[k + 1] : end;
      bool has_word = false;
      for (std::size_t i = openings[k] + 1; i < clause_end; ++i) {
        has_word = has_word || !IsPunctToken(tokens[i].text);
      }
      if (has_word) candidates.push_back({openings[k], clause_end});
    }
  }
  if (candidates.empty()) return std::nullopt;
  const TokenSpan chosen = candidates[rng.UniformInt(0, candidates.size() - 1)];
  return MakeMaskedInstance(record, tokens, chosen,
                            MaskPolicy::kConjunctionClause);
}

std::optional<MaskedInstance> MaskAttributePhrase(
    const ProductRecord& record, const AttributePair& attribute,
    int min_score) {
  const std::vector<Token> tokens = Tokenize(record.description);
  const std::vector<std::string> strings = Strings(tokens);
  const auto match = LocateAttributeSpan(
      std::span<const std::string>(strings), attribute.value, min_score);
  if (!match) return std::nullopt;
  return MakeMaskedInstance(record, tokens, {match->start, match->end},
                            MaskPolicy::kAttributePhrase);
}

std::optional<EditSample> RuleDeleteSentence(const ProductRecord& record,
                                             const AttributePair& attribute,
                                             int min_score) {
  const std::vector<Token> tokens = Tokenize(record.description);
  const std::vector<std::string> strings = Strings(tokens);
  const auto match = LocateAttributeSpan(
      std::span<const std::string>(strings), attribute.value, min_score);
  if (!match) return std::nullopt;

  const std::vector<TokenSpan> sentences =
      SplitSentences(record.description, tokens);
  const auto sentence = std::find_if(
      sentences.begin(), sentences.end(), [&](const TokenSpan& s) {
        return s.start <= match->start && match->start < s.end;
      });
  if (sentence == sentences.end() || match->end > sentence->end) {
    return std::nullopt;
  }
  const std::span<const std::string> sentence_tokens(
      strings.data() + sentence->start, sentence->size());
  for (const AttributePair& other : record.attributes) {
    if (other == attribute) continue;
    if (LocateAttributeSpan(sentence_tokens, other.value, min_score)) {
      return std::nullopt;
    }
  }
  std::string edit = RemoveSpan(record.description, tokens, *sentence);
  if (!HasWordToken(edit)) return std::nullopt;
  return ValidDeletion(MakeDeletion(record, attribute, std::move(edit),
                                    Provenance::kRuleSentence));
}

std::optional<EditSample> RuleDeleteAdjective(const ProductRecord& record,
                                              const AttributePair& attribute,
                                              const TokenSet& adjectives,
                                              int min_score) {
  const std::vector<Token> tokens = Tokenize(record.description);
  const std::vector<std::string> strings = Strings(tokens);
  const auto match = LocateAttributeSpan(
      std::span<const std::string>(strings), attribute.value, min_score);
  if (!match) return std::nullopt;
  for (std::size_t i = match->start; i < match->end; ++i) {
    if (!adjectives.contains(ToLower(strings[i]))) return std::nullopt;
  }
  std::string edit =
      RemoveSpan(record.description, tokens, {match->start, match->end});
  if (!HasWordToken(edit)) return std::nullopt;
  return ValidDeletion(MakeDeletion(record, attribute, std::move(edit),
                                    Provenance::kRuleAdjective));
}

RecordOutcome AugmentRecord(const ProductRecord& record,
                            const AugmentConfig& config,
                            const TfidfModel& model, const Filler& filler) {
  RecordOutcome outcome;
  if (record.attributes.empty()) {
    outcome.skipped_no_attributes = true;
    return outcome;
  }
  Rng rng(DeriveSeed(config.mix.seed, record.id));
  const MaskPolicy selected = config.mix.Select(rng.UniformDouble());
  const std::size_t target = rng.UniformInt(0, record.attributes.size() - 1);
  outcome.selected = selected;

  std::vector<MaskPolicy> order = {selected};
  for (const MaskPolicy fallback :
       {MaskPolicy::kAttributePhrase, MaskPolicy::kTfidfToken,
        MaskPolicy::kConjunctionClause, MaskPolicy::kRandomPhrase}) {
    if (fallback != selected) order.push_back(fallback);
  }
  for (const MaskPolicy policy : order) {
    const bool random_span = policy == MaskPolicy::kConjunctionClause ||
                             policy == MaskPolicy::kRandomPhrase;
    for (int draw = 0; draw < (random_span ? kSpanDraws : 1); ++draw) {
      AttributePair attribute;
      const auto instance =
          TryMask(policy, record, target, config, model, rng, attribute);
      if (!instance) break;
      const FillResult fill = filler.Fill(
          *instance, ConstraintFor(attribute.value, config.max_fill_len));
      auto sample = ValidDeletion(MakeDeletion(record, attribute, fill.text,
                                               Provenance::kModelBased));
      if (!sample) continue;
      outcome.applied = policy;
      outcome.fill_fell_back = fill.fell_back;
      outcome.samples.push_back(*sample);
      outcome.samples.push_back(SwapToAdd(*sample));
      break;
    }
    if (outcome.applied) break;
  }

  if (config.rule_strategies) {
    const AttributePair& attribute = record.attributes[target];
    if (auto sample = RuleDeleteSentence(record, attribute, config.min_score)) {
      outcome.rule_sentence = true;
      outcome.samples.push_back(*sample);
      outcome.samples.push_back(SwapToAdd(*sample));
    }
    if (!config.adjectives.empty()) {
      if (auto sample = RuleDeleteAdjective(record, attribute,
                                            config.adjectives,
                                            config.min_score)) {
        outcome.rule_adjective = true;
        outcome.samples.push_back(*sample);
        outcome.samples.push_back(SwapToAdd(*sample));
      }
    }
  }
  return outcome;
}

AugmentResult BuildPairs(std::span<const ProductRecord> records,
                         const AugmentConfig& config, const TfidfModel& model,
                         const Filler& filler) {
  config.mix.Validate();
  AugmentResult result;
  result.outcomes.resize(records.size());

  const unsigned workers = std::max(1u, config.workers);
  if (workers == 1 || records.size() < 2) {
    for (std::size_t i = 0; i < records.size(); ++i) {
      result.outcomes[i] = AugmentRecord(records[i], config, model, filler);
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next++; i < records.size(); i = next++) {
        result.outcomes[i] = AugmentRecord(records[i], config, model, filler);
      }
    };
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work);
  }

  AugmentCounts& counts = result.counts;
  counts.records = records.size();
  for (const RecordOutcome& outcome : result.outcomes) {
    if (outcome.skipped_no_attributes) {
      ++counts.skipped_no_attributes;
      continue;
    }
    if (outcome.selected) {
      ++counts.selected[static_cast<std::size_t>(*outcome.selected)];
    }
    if (outcome.applied) {
      ++counts.applied[static_cast<std::size_t>(*outcome.applied)];
    }
    if (!outcome.applied) ++counts.skipped_infeasible;
    counts.rule_sentence += outcome.rule_sentence ? 1 : 0;
    counts.rule_adjective += outcome.rule_adjective ? 1 : 0;
    counts.fill_fallbacks += outcome.fill_fell_back ? 1 : 0;
    for (const EditSample& sample : outcome.samples) {
      (sample.command == Command::kDel ? counts.del_samples
                                       : counts.add_samples)++;
      result.samples.push_back(sample);
    }
  }
  return result;
}

}  // namespace descedit
