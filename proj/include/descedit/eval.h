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

// Output metrics: Attribute Edit (fuzzy presence of the attribute value in
// the output, 0-100, split by command), BLEU-4, ROUGE-1/2/L, a raw
// character Levenshtein baseline and Pearson correlation for validating a
// metric against human scores.

#ifndef DESCEDIT_EVAL_H_
#define DESCEDIT_EVAL_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "descedit/corpus.h"

namespace descedit {

// PartialRatio(attribute_value, output).
int AttributeEditScore(std::string_view output,
                       std::string_view attribute_value);

// Overall score: deletions count against the system, so ALL is
// (ADD - DEL) / 2.
double CombineAll(double add_mean, double del_mean);

struct BleuOptions {
  // When false a zero n-gram precision makes BLEU 0. When true a zero
  // match count is replaced by `epsilon`.
  bool smoothing = false;
  double epsilon = 0.1;
};

// Corpus BLEU over lowercased tokens, n = 1..4 with uniform weights and the
// brevity penalty exp(1 - r/c) when c < r; scaled to 0-100. An order with
// no n-grams on either side (all sentences shorter than n) counts as
// precision 1. Throws Error on empty or misaligned input.
double Bleu4(std::span<const std::string> hypotheses,
             std::span<const std::string> references,
             const BleuOptions& options = {});

struct RougeScores {
  double rouge1 = 0.0;
  double rouge2 = 0.0;
  double rougeL = 0.0;
};

// Mean per-pair F1 of unigram overlap, bigram overlap and longest common
// subsequence, scaled to 0-100. A pair with no n-grams on either side
// scores 100 if the token sequences are equal and 0 otherwise.
RougeScores Rouge(std::span<const std::string> hypotheses,
                  std::span<const std::string> references);

// Unnormalized character edit distance.
std::size_t CharLevenshteinBaseline(std::string_view output,
                                    std::string_view attribute_value);

struct PearsonResult {
  double coefficient = 0.0;
  double p_value = 1.0;  // two-sided, Student t with n - 2 dof
};

// Throws Error for fewer than three points, unequal lengths or a constant
// sequence ("undefined correlation").
PearsonResult Pearson(std::span<const double> x, std::span<const double> y);

struct MetricReport {
  std::optional<double> add_score;
  std::optional<double> del_score;
  std::optional<double> all_score;
  double bleu4 = 0.0;
  double rouge1 = 0.0;
  double rouge2 = 0.0;
  double rougeL = 0.0;
  std::size_t add_count = 0;
  std::size_t del_count = 0;
};

// Scores `outputs` (aligned 1:1 with `samples`) against each sample's
// attribute and gold edit. Means are per-sample.
MetricReport Evaluate(std::span<const EditSample> samples,
                      std::span<const std::string> outputs,
                      const BleuOptions& bleu = {});

std::string ReportToJson(const MetricReport& report);
std::string ReportToTable(const MetricReport& report);

}  // namespace descedit

#endif  // DESCEDIT_EVAL_H_
