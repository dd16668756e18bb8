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

#include "descedit/cli.h"

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "descedit/augment.h"
#include "descedit/corpus.h"
#include "descedit/editor.h"
#include "descedit/eval.h"
#include "descedit/filler.h"
#include "descedit/lexicon.h"
#include "descedit/rng.h"
#include "descedit/text.h"
#include "json.hpp"

namespace descedit {
namespace {

using Json = nlohmann::ordered_json;

std::string_view AddPositionName(AddPosition position) {
  switch (position) {
    case AddPosition::kAfterFirstSentence:
      return "after-first-sentence";
    case AddPosition::kSentenceInitial:
      return "sentence-initial";
    case AddPosition::kMidSentence:
      return "mid-sentence";
  }
  return "after-first-sentence";
}

void WriteText(const std::string& text, const std::filesystem::path& path,
               std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error("write failed: " + path.string());
}

void Require(const std::filesystem::path& path, const char* flag) {
  if (path.empty()) throw Error(std::string(flag) + " is required");
}

std::unique_ptr<Filler> MakeFiller(const RunConfig& config,
                                   std::span<const ProductRecord> records) {
  switch (config.filler) {
    case FillerKind::kRemoval:
      return std::make_unique<RemovalFiller>();
    case FillerKind::kTemplate:
      return std::make_unique<TemplateFiller>(
          config.templates.empty() ? std::map<std::string, std::string>{}
                                   : LoadTemplateTable(config.templates));
    case FillerKind::kNgramLm: {
      std::vector<std::string> descriptions;
      for (const ProductRecord& record : records) {
        descriptions.push_back(record.description);
      }
      return std::make_unique<NgramFiller>(std::make_shared<NgramModel>(
          NgramTrain(descriptions, config.ngram_order)));
    }
  }
  return std::make_unique<RemovalFiller>();
}

// One row of `edit` input: an EditSample without the gold edit.
struct EditRequest {
  AttributePair attribute;
  Command command = Command::kDel;
  Grounding grounding;
  std::string draft;
};

EditRequest ParseEditRequest(const std::string& line, std::size_t number) {
  const std::string where = "line " + std::to_string(number) + ": ";
  Json json;
  try {
    json = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw Error(where + "malformed JSON (" + e.what() + ")");
  }
  auto field = [&](const char* key) {
    const auto it = json.find(key);
    if (it == json.end()) throw Error(where + "missing field \"" + key + "\"");
    if (!it->is_string()) {
      throw Error(where + "invalid field \"" + key + "\" (expected a string)");
    }
    return it->get<std::string>();
  };
  EditRequest request;
  request.attribute = {field("attribute_name"), field("attribute_value")};
  const auto command = ParseCommand(field("command"));
  if (!command) throw Error(where + "invalid field \"command\"");
  request.command = *command;
  request.grounding = {field("title"), field("category")};
  request.draft = field("draft");
  if (auto violation = CheckAttributePair(request.attribute)) {
    throw Error(where + "invariant violated: " + *violation);
  }
  if (NormalizeText(request.grounding.title).empty()) {
    throw Error(where + "invariant violated: title non-empty");
  }
  if (NormalizeText(request.draft).empty()) {
    throw Error(where + "invariant violated: draft non-empty");
  }
  return request;
}

std::vector<std::string> ReadOutputTexts(const std::filesystem::path& path) {
  JsonlLineReader reader(path);
  std::vector<std::string> texts;
  std::string line;
  while (reader.Next(line)) {
    const std::string where =
        path.string() + ": line " + std::to_string(reader.line_number()) + ": ";
    Json json;
    try {
      json = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw Error(where + "malformed JSON (" + e.what() + ")");
    }
    const auto it = json.find("text");
    if (it == json.end() || !it->is_string()) {
      throw Error(where + "missing or invalid field \"text\"");
    }
    texts.push_back(it->get<std::string>());
  }
  return texts;
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream stream(line);
  std::string cell;
  while (std::getline(stream, cell, ',')) {
    const auto first = cell.find_first_not_of(" \t");
    const auto last = cell.find_last_not_of(" \t");
    cells.push_back(first == std::string::npos
                        ? std::string()
                        : cell.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

bool ParseNumber(const std::string& text, double& value) {
  try {
    std::size_t used = 0;
    value = std::stod(text, &used);
    return used == text.size();
  } catch (const std::exception&) {
    return false;
  }
}

// Numeric CSV rows after an optional header. `label_columns` leading cells
// are kept as text.
struct CsvRow {
  std::string label;
  std::vector<double> values;
};

std::vector<CsvRow> ReadCsv(const std::filesystem::path& path,
                            std::size_t value_columns) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<CsvRow> rows;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (NormalizeText(line).empty()) continue;
    const std::vector<std::string> cells = SplitCsvLine(line);
    if (cells.size() != value_columns + 1) {
      throw Error(path.string() + ": line " + std::to_string(number) +
                  ": expected " + std::to_string(value_columns + 1) +
                  " columns");
    }
    CsvRow row{cells[0], {}};
    bool numeric = true;
    for (std::size_t k = 1; k < cells.size(); ++k) {
      double value = 0.0;
      numeric = numeric && ParseNumber(cells[k], value);
      row.values.push_back(value);
    }
    if (!numeric) {
      if (rows.empty() && number == 1) continue;  // header
      throw Error(path.string() + ": line " + std::to_string(number) +
                  ": non-numeric score");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string Fixed(double value, int decimals) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  return buffer;
}

Json PearsonJson(const PearsonResult& result) {
  Json json;
  json["coefficient"] = result.coefficient;
  json["p_value"] = result.p_value;
  return json;
}

template <typename Fn>
int Guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace

std::string ConfigJson(const RunConfig& config) {
  Json json;
  json["subcommand"] = config.subcommand;
  json["input"] = config.input.string();
  json["output"] = config.output.string();
  json["outputs"] = config.outputs.string();
  json["samples"] = config.samples.string();
  json["scores_csv"] = config.scores_csv.string();
  json["stopwords"] = config.stopwords.string();
  json["adjectives"] = config.adjectives.string();
  json["templates"] = config.templates.string();
  json["mix"] = config.mix.ToString();
  json["seed"] = config.seed;
  json["filler"] = FillerKindName(config.filler);
  json["ngram_order"] = config.ngram_order;
  json["max_fill_len"] = config.max_fill_len;
  json["min_score"] = config.min_score;
  json["rules"] = config.rules;
  json["add_position"] = AddPositionName(config.add_position);
  json["bleu_smoothing"] = config.bleu_smoothing;
  return json.dump();
}

std::string ConfigHash(const RunConfig& config) {
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(Fnv1a64(ConfigJson(config))));
  return buffer;
}

int RunAugment(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    Require(config.input, "--input");
    Require(config.output, "--output");
    PolicyMix mix = config.mix;
    mix.seed = config.seed;
    mix.Validate();

    const std::vector<ProductRecord> records =
        ReadProductRecords(config.input);
    AugmentConfig augment;
    augment.mix = mix;
    augment.min_score = config.min_score;
    augment.max_fill_len = config.max_fill_len;
    augment.rule_strategies = config.rules;
    augment.workers = config.workers;
    if (!config.stopwords.empty()) {
      augment.stopwords = LoadTokenSet(config.stopwords);
    }
    if (!config.adjectives.empty()) {
      augment.adjectives = LoadTokenSet(config.adjectives);
    }
    const std::unique_ptr<Filler> filler = MakeFiller(config, records);
    const TfidfModel model = records.empty() ? TfidfModel{} : TfidfFit(records);
    const AugmentResult result = BuildPairs(records, augment, model, *filler);
    WriteEditSamples(result.samples, config.output);

    const AugmentCounts& counts = result.counts;
    Json manifest;
    manifest["subcommand"] = "augment";
    manifest["seed"] = config.seed;
    manifest["config_hash"] = ConfigHash(config);
    manifest["config"] = Json::parse(ConfigJson(config));
    manifest["records"] = counts.records;
    manifest["skipped_no_attributes"] = counts.skipped_no_attributes;
    manifest["skipped_infeasible"] = counts.skipped_infeasible;
    Json selected, applied, by_source;
    for (const MaskPolicy policy : kAllPolicies) {
      const auto k = static_cast<std::size_t>(policy);
      selected[std::string(PolicyName(policy))] = counts.selected[k];
      applied[std::string(PolicyName(policy))] = counts.applied[k];
      by_source[std::string(PolicyName(policy))] = 2 * counts.applied[k];
    }
    by_source["rule_sentence"] = 2 * counts.rule_sentence;
    by_source["rule_adjective"] = 2 * counts.rule_adjective;
    manifest["policy_selected"] = std::move(selected);
    manifest["policy_applied"] = std::move(applied);
    manifest["samples_by_source"] = std::move(by_source);
    manifest["fill_fallbacks"] = counts.fill_fallbacks;
    manifest["del_samples"] = counts.del_samples;
    manifest["add_samples"] = counts.add_samples;
    manifest["samples"] = result.samples.size();
    const std::filesystem::path manifest_path =
        config.manifest.empty()
            ? std::filesystem::path(config.output.string() + ".manifest.json")
            : config.manifest;
    WriteText(manifest.dump(2) + "\n", manifest_path, out);
    out << "augment: " << counts.records << " records -> "
        << result.samples.size() << " samples (" << counts.skipped_no_attributes
        << " without attributes, " << counts.skipped_infeasible
        << " without a model-based pair)\n";
    return 0;
  });
}

int RunEdit(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    Require(config.input, "--input");
    Require(config.output, "--output");
    EditorOptions options;
    options.min_score = config.min_score;
    options.add_position = config.add_position;
    JsonlLineReader reader(config.input);
    std::vector<std::string> lines;
    std::size_t no_ops = 0;
    std::string line;
    while (reader.Next(line)) {
      const EditRequest request = ParseEditRequest(line, reader.line_number());
      const EditResult result =
          ApplyCommand(request.draft, request.attribute, request.command,
                       request.grounding, options);
      Json row;
      row["id"] = lines.size();
      row["text"] = result.text;
      row["no_op"] = result.no_op;
      lines.push_back(row.dump());
      no_ops += result.no_op ? 1 : 0;
    }
    WriteLines(lines, config.output);
    out << "edit: " << lines.size() << " rows, " << no_ops << " no-ops\n";
    return 0;
  });
}

int RunEvaluate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    if (!config.scores_csv.empty()) {
      // Regenerate the ALL column from per-system (ADD, DEL) means.
      std::string table = "model,add,del,all\n";
      for (const CsvRow& row : ReadCsv(config.scores_csv, 2)) {
        table += row.label + "," + Fixed(row.values[0], 2) + "," +
                 Fixed(row.values[1], 2) + "," +
                 Fixed(CombineAll(row.values[0], row.values[1]), 3) + "\n";
      }
      WriteText(table, config.output, out);
      return 0;
    }
    Require(config.input, "--input");
    Require(config.outputs, "--outputs");
    const std::vector<EditSample> samples = ReadEditSamples(config.input);
    const std::vector<std::string> outputs = ReadOutputTexts(config.outputs);
    if (samples.size() != outputs.size()) {
      throw Error("misaligned inputs: " + std::to_string(samples.size()) +
                  " gold samples vs " + std::to_string(outputs.size()) +
                  " outputs");
    }
    BleuOptions bleu;
    bleu.smoothing = config.bleu_smoothing;
    const MetricReport report = Evaluate(samples, outputs, bleu);
    if (!config.output.empty()) {
      WriteText(ReportToJson(report) + "\n", config.output, out);
    }
    out << ReportToTable(report);
    return 0;
  });
}

int RunStats(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    Require(config.input, "--input");
    const std::vector<EditSample> samples = ReadEditSamples(config.input);
    Json json;
    for (const auto& [name, stats] : ComputeStatsByProvenance(samples)) {
      Json entry;
      entry["sample_count"] = stats.sample_count;
      entry["mean_draft_len"] = stats.mean_draft_len;
      entry["mean_edit_len"] = stats.mean_edit_len;
      entry["category_count"] = stats.category_count;
      entry["mean_title_len"] = stats.mean_title_len;
      entry["mean_attribute_len"] = stats.mean_attribute_len;
      json[name] = std::move(entry);
    }
    WriteText(json.dump(2) + "\n", config.output, out);
    return 0;
  });
}

int RunValidateMetric(const RunConfig& config, std::ostream& out,
                      std::ostream& err) {
  return Guarded(err, [&] {
    Require(config.input, "--input");
    const std::vector<CsvRow> rows = ReadCsv(config.input, 2);
    std::vector<double> human, metric;
    for (const CsvRow& row : rows) {
      human.push_back(row.values[0]);
      metric.push_back(row.values[1]);
    }
    Json json;
    json["n"] = rows.size();
    json["attribute_edit"] = PearsonJson(Pearson(human, metric));

    // Baseline: raw character distance between the output and the
    // attribute value, for rows whose sample_id indexes the gold file.
    if (!config.samples.empty() || !config.outputs.empty()) {
      Require(config.samples, "--samples");
      Require(config.outputs, "--outputs");
      const std::vector<EditSample> samples = ReadEditSamples(config.samples);
      const std::vector<std::string> outputs = ReadOutputTexts(config.outputs);
      if (samples.size() != outputs.size()) {
        throw Error("misaligned inputs: " + std::to_string(samples.size()) +
                    " gold samples vs " + std::to_string(outputs.size()) +
                    " outputs");
      }
      std::vector<double> distance;
      for (const CsvRow& row : rows) {
        double index = 0.0;
        if (!ParseNumber(row.label, index) || index < 0 ||
            index >= static_cast<double>(samples.size()) ||
            index != static_cast<double>(static_cast<std::size_t>(index))) {
          throw Error("sample_id \"" + row.label +
                      "\" is not a line index into --samples");
        }
        const auto i = static_cast<std::size_t>(index);
        distance.push_back(static_cast<double>(
            CharLevenshteinBaseline(outputs[i], samples[i].attribute.value)));
      }
      json["char_levenshtein"] = PearsonJson(Pearson(human, distance));
    }
    WriteText(json.dump(2) + "\n", config.output, out);
    return 0;
  });
}

int RunCli(int argc, char** argv) {
  CLI::App app{"Draft/command/edit corpus toolkit for product descriptions"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with flag values");

  RunConfig config;
  std::string mix = "0.5,0.25,0.15,0.1";
  std::string filler = "removal";
  std::string add_position = "after-first-sentence";
  bool no_rules = false;

  auto shared = [&](CLI::App* sub) {
    sub->add_option("--input", config.input, "Input file");
    sub->add_option("--output", config.output, "Output file");
    sub->add_option("--seed", config.seed, "Seed for every random choice")
        ->capture_default_str();
    sub->add_option("--min-score", config.min_score,
                    "Fuzzy-match threshold (0-100)")
        ->capture_default_str()
        ->check(CLI::Range(0, 100));
    sub->add_option("--stopwords", config.stopwords,
                    "Stopword lexicon, one token per line");
    sub->add_option("--adjectives", config.adjectives,
                    "Adjective lexicon, one token per line");
    sub->add_option("--mix", mix,
                    "Policy weights tfidf,attribute,conjunction,random")
        ->capture_default_str();
    sub->add_option("--filler", filler, "removal | template | ngram")
        ->capture_default_str()
        ->check(CLI::IsMember({"removal", "template", "ngram"}));
    sub->add_option("--workers", config.workers, "Worker threads")
        ->capture_default_str()
        ->check(CLI::Range(1u, 256u));
  };

  CLI::App* augment = app.add_subcommand("augment", "Synthesize edit pairs");
  shared(augment);
  augment->add_option("--manifest", config.manifest,
                      "Run manifest (default <output>.manifest.json)");
  augment->add_option("--templates", config.templates,
                      "category<TAB>phrase table for --filler template");
  augment->add_option("--ngram-order", config.ngram_order, "n-gram order")
      ->capture_default_str()
      ->check(CLI::Range(2, 8));
  augment->add_option("--max-fill-len", config.max_fill_len,
                      "Longest fill in tokens")
      ->capture_default_str();
  augment->add_flag("--no-rules", no_rules,
                    "Skip sentence and adjective deletion rules");

  CLI::App* edit = app.add_subcommand("edit", "Apply commands to drafts");
  shared(edit);
  edit->add_option("--add-position", add_position,
                   "after-first-sentence | sentence-initial | mid-sentence")
      ->capture_default_str()
      ->check(CLI::IsMember(
          {"after-first-sentence", "sentence-initial", "mid-sentence"}));

  CLI::App* evaluate = app.add_subcommand("evaluate", "Score system outputs");
  shared(evaluate);
  evaluate->add_option("--outputs", config.outputs,
                       "System outputs, {\"id\",\"text\"} per line");
  evaluate->add_option("--scores-csv", config.scores_csv,
                       "CSV of model,add,del; prints the ALL column");
  evaluate->add_flag("--bleu-smoothing", config.bleu_smoothing,
                     "Floor zero n-gram precisions instead of scoring 0");

  CLI::App* stats = app.add_subcommand("stats", "Corpus statistics");
  shared(stats);

  CLI::App* validate =
      app.add_subcommand("validate-metric", "Correlate metric with humans");
  shared(validate);
  validate->add_option("--samples", config.samples,
                       "Gold samples for the Levenshtein baseline");
  validate->add_option("--outputs", config.outputs,
                       "System outputs for the Levenshtein baseline");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    config.mix = PolicyMix::Parse(mix, config.seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  config.filler = *ParseFillerKind(filler);
  config.rules = !no_rules;
  if (add_position == "sentence-initial") {
    config.add_position = AddPosition::kSentenceInitial;
  } else if (add_position == "mid-sentence") {
    config.add_position = AddPosition::kMidSentence;
  }

  if (augment->parsed()) {
    config.subcommand = "augment";
    return RunAugment(config, std::cout, std::cerr);
  }
  if (edit->parsed()) {
    config.subcommand = "edit";
    return RunEdit(config, std::cout, std::cerr);
  }
  if (evaluate->parsed()) {
    config.subcommand = "evaluate";
    return RunEvaluate(config, std::cout, std::cerr);
  }
  if (stats->parsed()) {
    config.subcommand = "stats";
    return RunStats(config, std::cout, std::cerr);
  }
  config.subcommand = "validate-metric";
  return RunValidateMetric(config, std::cout, std::cerr);
}

}  // namespace descedit
