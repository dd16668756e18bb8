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

// Batch front end: augment | edit | evaluate | stats | validate-metric.
// Each Run* function is what the matching subcommand executes; they return a
// process exit status and report problems on `err`.

#ifndef DESCEDIT_CLI_H_
#define DESCEDIT_CLI_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "descedit/augment.h"
#include "descedit/editor.h"
#include "descedit/filler.h"

namespace descedit {

struct RunConfig {
  std::string subcommand;
  std::filesystem::path input;
  std::filesystem::path output;
  std::filesystem::path outputs;     // evaluate / validate-metric: system outputs
  std::filesystem::path samples;     // validate-metric: gold samples
  std::filesystem::path scores_csv;  // evaluate: (model, add, del) rows
  std::filesystem::path manifest;    // augment: defaults to <output>.manifest.json
  std::filesystem::path stopwords;
  std::filesystem::path adjectives;
  std::filesystem::path templates;
  PolicyMix mix;
  FillerKind filler = FillerKind::kRemoval;
  int ngram_order = 3;
  std::size_t max_fill_len = 8;
  int min_score = kDefaultMinScore;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  bool rules = true;
  AddPosition add_position = AddPosition::kAfterFirstSentence;
  bool bleu_smoothing = false;
};

// Canonical JSON of the settings that affect results, and its FNV-1a hash
// in hex.
std::string ConfigJson(const RunConfig& config);
std::string ConfigHash(const RunConfig& config);

int RunAugment(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunEdit(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunEvaluate(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunStats(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunValidateMetric(const RunConfig& config, std::ostream& out,
                      std::ostream& err);

// Parses argv and dispatches.
int RunCli(int argc, char** argv);

}  // namespace descedit

#endif  // DESCEDIT_CLI_H_
