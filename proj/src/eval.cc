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

#include "descedit/eval.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

#include "descedit/text.h"
#include "descedit/textmetrics.h"
#include "json.hpp"

namespace descedit {
namespace {

using NgramCounts = std::map<std::string, std::size_t>;

std::vector<std::string> LowerTokens(std::string_view text) {
  std::vector<std::string> out;
  for (const Token& token : Tokenize(text)) out.push_back(ToLower(token.text));
  return out;
}

NgramCounts CountNgrams(const std::vector<std::string>& tokens,
                        std::size_t n) {
  NgramCounts counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (std::size_t k = i + 1; k < i + n; ++k) {
      key += '\x1f';
      key += tokens[k];
    }
    ++counts[key];
  }
  return counts;
}

std::size_t ClippedOverlap(const NgramCounts& hypothesis,
                           const NgramCounts& reference) {
  std::size_t overlap = 0;
  for (const auto& [gram, count] : hypothesis) {
    const auto it = reference.find(gram);
    if (it != reference.end()) overlap += std::min(count, it->second);
  }
  return overlap;
}

std::size_t NgramTotal(std::size_t length, std::size_t n) {
  return length >= n ? length - n + 1 : 0;
}

std::size_t LongestCommonSubsequence(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = 0;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      row[j] = a[i - 1] == b[j - 1] ? diagonal + 1 : std::max(above, row[j - 1]);
      diagonal = above;
    }
  }
  return row[b.size()];
}

// 2 * overlap / (hyp + ref) as a percentage; both-empty pairs score by
// sequence equality.
double F1(std::size_t overlap, std::size_t hypothesis_total,
          std::size_t reference_total, bool sequences_equal) {
  if (hypothesis_total + reference_total == 0) {
    return sequences_equal ? 100.0 : 0.0;
  }
  return 100.0 * 2.0 * static_cast<double>(overlap) /
         static_cast<double>(hypothesis_total + reference_total);
}

void CheckAligned(std::span<const std::string> hypotheses,
                  std::span<const std::string> references) {
  if (hypotheses.empty()) throw Error("empty evaluation corpus");
  if (hypotheses.size() != references.size()) {
    throw Error("hypotheses and references differ in count (" +
                std::to_string(hypotheses.size()) + " vs " +
                std::to_string(references.size()) + ")");
  }
}

std::string Format(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", value);
  return buffer;
}

}  // namespace

int AttributeEditScore(std::string_view output,
                       std::string_view attribute_value) {
  return PartialRatio(attribute_value, output);
}

double CombineAll(double add_mean, double del_mean) {
  return (add_mean - del_mean) / 2.0;
}

double Bleu4(std::span<const std::string> hypotheses,
             std::span<const std::string> references,
             const BleuOptions& options) {
  CheckAligned(hypotheses, references);
  std::size_t hypothesis_length = 0;
  std::size_t reference_length = 0;
  std::size_t matched[4] = {};
  std::size_t hypothesis_total[4] = {};
  std::size_t reference_total[4] = {};
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    const auto hyp = LowerTokens(hypotheses[i]);
    const auto ref = LowerTokens(references[i]);
    hypothesis_length += hyp.size();
    reference_length += ref.size();
    for (std::size_t n = 1; n <= 4; ++n) {
      matched[n - 1] += ClippedOverlap(CountNgrams(hyp, n), CountNgrams(ref, n));
      hypothesis_total[n - 1] += NgramTotal(hyp.size(), n);
      reference_total[n - 1] += NgramTotal(ref.size(), n);
    }
  }
  if (hypothesis_length == 0) return reference_length == 0 ? 100.0 : 0.0;

  double log_sum = 0.0;
  for (std::size_t n = 0; n < 4; ++n) {
    double precision;
    if (hypothesis_total[n] == 0) {
      precision = reference_total[n] == 0 ? 1.0 : 0.0;
    } else if (matched[n] == 0) {
      precision = options.smoothing ? options.epsilon /
                                          static_cast<double>(hypothesis_total[n])
                                    : 0.0;
    } else {
      precision = static_cast<double>(matched[n]) /
                  static_cast<double>(hypothesis_total[n]);
    }
    if (precision <= 0.0) return 0.0;
    log_sum += std::log(precision);
  }
  const double c = static_cast<double>(hypothesis_length);
  const double r = static_cast<double>(reference_length);
  const double brevity = c < r ? std::exp(1.0 - r / c) : 1.0;
  return 100.0 * brevity * std::exp(log_sum / 4.0);
}

RougeScores Rouge(std::span<const std::string> hypotheses,
                  std::span<const std::string> references) {
  CheckAligned(hypotheses, references);
  RougeScores sum;
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    const auto hyp = LowerTokens(hypotheses[i]);
    const auto ref = LowerTokens(references[i]);
    const bool equal = hyp == ref;
    sum.rouge1 += F1(ClippedOverlap(CountNgrams(hyp, 1), CountNgrams(ref, 1)),
                     hyp.size(), ref.size(), equal);
    sum.rouge2 += F1(ClippedOverlap(CountNgrams(hyp, 2), CountNgrams(ref, 2)),
                     NgramTotal(hyp.size(), 2), NgramTotal(ref.size(), 2),
                     equal);
    sum.rougeL += F1(LongestCommonSubsequence(hyp, ref), hyp.size(),
                     ref.size(), equal);
  }
  const auto n = static_cast<double>(hypotheses.size());
  return {sum.rouge1 / n, sum.rouge2 / n, sum.rougeL / n};
}

std::size_t CharLevenshteinBaseline(std::string_view output,
                                    std::string_view attribute_value) {
  return Levenshtein(output, attribute_value);
}

PearsonResult Pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error("pearson needs equal-length inputs");
  if (x.size() < 3) throw Error("pearson needs at least three points");
  const auto n = static_cast<double>(x.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) throw Error("undefined correlation");
  PearsonResult result;
  result.coefficient = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  const double dof = n - 2.0;
  const double r2 = result.coefficient * result.coefficient;
  if (r2 >= 1.0) {
    result.p_value = 0.0;
  } else {
    const double t = result.coefficient * std::sqrt(dof / (1.0 - r2));
    const boost::math::students_t dist(dof);
    result.p_value = 2.0 * boost::math::cdf(complement(dist, std::abs(t)));
  }
  return result;
}

MetricReport Evaluate(std::span<const EditSample> samples,
                      std::span<const std::string> outputs,
                      const BleuOptions& bleu) {
  if (samples.size() != outputs.size()) {
    throw Error("outputs are not aligned with samples (" +
                std::to_string(outputs.size()) + " outputs, " +
                std::to_string(samples.size()) + " samples)");
  }
  if (samples.empty()) throw Error("empty evaluation corpus");
  MetricReport report;
  double add_sum = 0.0, del_sum = 0.0;
  std::vector<std::string> references;
  references.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double score =
        AttributeEditScore(outputs[i], samples[i].attribute.value);
    if (samples[i].command == Command::kAdd) {
      add_sum += score;
      ++report.add_count;
    } else {
      del_sum += score;
      ++report.del_count;
    }
    references.push_back(samples[i].edit);
  }
  if (report.add_count > 0) {
    report.add_score = add_sum / static_cast<double>(report.add_count);
  }
  if (report.del_count > 0) {
    report.del_score = del_sum / static_cast<double>(report.del_count);
  }
  if (report.add_score && report.del_score) {
    report.all_score = CombineAll(*report.add_score, *report.del_score);
  }
  report.bleu4 = Bleu4(outputs, references, bleu);
  const RougeScores rouge = Rouge(outputs, references);
  report.rouge1 = rouge.rouge1;
  report.rouge2 = rouge.rouge2;
  report.rougeL = rouge.rougeL;
  return report;
}

std::string ReportToJson(const MetricReport& report) {
  nlohmann::ordered_json json;
  auto optional = [](const std::optional<double>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  json["add"] = optional(report.add_score);
  json["del"] = optional(report.del_score);
  json["all"] = optional(report.all_score);
  json["rouge1"] = report.rouge1;
  json["rouge2"] = report.rouge2;
  json["rougeL"] = report.rougeL;
  json["bleu4"] = report.bleu4;
  json["add_count"] = report.add_count;
  json["del_count"] = report.del_count;
  return json.dump(2);
}

std::string ReportToTable(const MetricReport& report) {
  auto cell = [](const std::optional<double>& v) {
    return v ? Format(*v) : std::string("-");
  };
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"ADD", cell(report.add_score)},
      {"DEL", cell(report.del_score)},
      {"ALL", cell(report.all_score)},
      {"R-1", Format(report.rouge1)},
      {"R-2", Format(report.rouge2)},
      {"R-L", Format(report.rougeL)},
      {"B-4", Format(report.bleu4)},
  };
  std::string out = "metric   value\n";
  for (const auto& [name, value] : rows) {
    out += name + std::string(9 - name.size(), ' ') + value + '\n';
  }
  out += "samples  " + std::to_string(report.add_count) + " add, " +
         std::to_string(report.del_count) + " del\n";
  return out;
}

}  // namespace descedit
