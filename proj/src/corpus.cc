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

#include "descedit/corpus.h"

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "descedit/text.h"
#include "descedit/textmetrics.h"
#include "json.hpp"

namespace descedit {
namespace {

using Json = nlohmann::ordered_json;

bool BlankAfterTrim(std::string_view text) {
  return NormalizeText(text).empty();
}

std::string Dump(const Json& json) {
  try {
    return json.dump(-1, ' ', false, Json::error_handler_t::strict);
  } catch (const Json::type_error& e) {
    throw Error(std::string("cannot serialize record: ") + e.what());
  }
}

std::string LinePrefix(std::size_t line_number) {
  return "line " + std::to_string(line_number) + ": ";
}

Json ParseLine(std::string_view line, std::size_t line_number) {
  try {
    Json json = Json::parse(line);
    if (!json.is_object()) {
      throw Error(LinePrefix(line_number) + "expected a JSON object");
    }
    return json;
  } catch (const Json::parse_error& e) {
    throw Error(LinePrefix(line_number) + "malformed JSON (" + e.what() + ")");
  }
}

std::string GetString(const Json& json, const char* key,
                      std::size_t line_number) {
  const auto it = json.find(key);
  if (it == json.end()) {
    throw Error(LinePrefix(line_number) + "missing field \"" + key + "\"");
  }
  if (!it->is_string()) {
    throw Error(LinePrefix(line_number) + "invalid field \"" + key +
                "\" (expected a string)");
  }
  return it->get<std::string>();
}

std::size_t TokenCount(std::string_view text) { return Tokenize(text).size(); }

std::size_t AttributeWordCount(const AttributePair& attribute) {
  std::size_t count = 0;
  for (const auto& text : {attribute.name, attribute.value}) {
    for (const Token& token : Tokenize(text)) {
      if (!IsPunctToken(token.text)) ++count;
    }
  }
  return count;
}

void WriteFile(std::span<const std::string> lines,
               const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  for (const std::string& line : lines) {
    out << line << '\n';
  }
  out.flush();
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace

std::string_view CommandLiteral(Command command) {
  return command == Command::kAdd ? "[ADD]" : "[DEL]";
}

std::optional<Command> ParseCommand(std::string_view literal) {
  if (literal == "[ADD]") return Command::kAdd;
  if (literal == "[DEL]") return Command::kDel;
  return std::nullopt;
}

std::string_view ProvenanceName(Provenance provenance) {
  switch (provenance) {
    case Provenance::kHuman:
      return "human";
    case Provenance::kModelBased:
      return "model_based";
    case Provenance::kRuleSentence:
      return "rule_sentence";
    case Provenance::kRuleAdjective:
      return "rule_adjective";
  }
  return "human";
}

std::optional<Provenance> ParseProvenance(std::string_view name) {
  for (const Provenance p :
       {Provenance::kHuman, Provenance::kModelBased, Provenance::kRuleSentence,
        Provenance::kRuleAdjective}) {
    if (ProvenanceName(p) == name) return p;
  }
  return std::nullopt;
}

std::optional<std::string> CheckAttributePair(const AttributePair& attribute) {
  if (BlankAfterTrim(attribute.name)) return "attribute name non-empty";
  if (BlankAfterTrim(attribute.value)) return "attribute value non-empty";
  return std::nullopt;
}

std::optional<std::string> CheckProductRecord(const ProductRecord& record) {
  if (BlankAfterTrim(record.title)) return "title non-empty";
  if (BlankAfterTrim(record.description)) return "description non-empty";
  for (const AttributePair& attribute : record.attributes) {
    if (auto violation = CheckAttributePair(attribute)) return violation;
  }
  return std::nullopt;
}

std::optional<std::string> CheckEditSample(const EditSample& sample) {
  if (auto violation = CheckAttributePair(sample.attribute)) return violation;
  if (BlankAfterTrim(sample.grounding.title)) return "title non-empty";
  if (BlankAfterTrim(sample.draft)) return "draft non-empty";
  if (BlankAfterTrim(sample.edit)) return "edit non-empty";
  if (sample.draft == sample.edit) return "draft differs from edit";
  const int draft_score = BestMatchScore(sample.draft, sample.attribute.value);
  const int edit_score = BestMatchScore(sample.edit, sample.attribute.value);
  if (sample.command == Command::kDel && !(edit_score < draft_score)) {
    return "deletion lowers the attribute match score";
  }
  if (sample.command == Command::kAdd && !(edit_score > draft_score)) {
    return "addition raises the attribute match score";
  }
  return std::nullopt;
}

EditSample SwapToAdd(const EditSample& sample) {
  if (sample.command != Command::kDel) {
    throw Error("swap requires a deletion sample");
  }
  EditSample swapped = sample;
  swapped.command = Command::kAdd;
  std::swap(swapped.draft, swapped.edit);
  return swapped;
}

CorpusStats ComputeStats(std::span<const EditSample> samples) {
  CorpusStats stats;
  stats.sample_count = samples.size();
  if (samples.empty()) return stats;
  std::set<std::string> categories;
  std::size_t draft = 0, edit = 0, title = 0, attribute = 0;
  for (const EditSample& sample : samples) {
    draft += TokenCount(sample.draft);
    edit += TokenCount(sample.edit);
    title += TokenCount(sample.grounding.title);
    attribute += AttributeWordCount(sample.attribute);
    categories.insert(sample.grounding.category);
  }
  const auto n = static_cast<double>(samples.size());
  stats.mean_draft_len = static_cast<double>(draft) / n;
  stats.mean_edit_len = static_cast<double>(edit) / n;
  stats.mean_title_len = static_cast<double>(title) / n;
  stats.mean_attribute_len = static_cast<double>(attribute) / n;
  stats.category_count = categories.size();
  return stats;
}

std::map<std::string, CorpusStats> ComputeStatsByProvenance(
    std::span<const EditSample> samples) {
  std::map<std::string, std::vector<EditSample>> groups;
  for (const EditSample& sample : samples) {
    groups[std::string(ProvenanceName(sample.provenance))].push_back(sample);
  }
  std::map<std::string, CorpusStats> out;
  out["all"] = ComputeStats(samples);
  for (const auto& [name, group] : groups) out[name] = ComputeStats(group);
  return out;
}

std::string ToJsonLine(const EditSample& sample) {
  Json json;
  json["attribute_name"] = sample.attribute.name;
  json["attribute_value"] = sample.attribute.value;
  json["command"] = CommandLiteral(sample.command);
  json["title"] = sample.grounding.title;
  json["category"] = sample.grounding.category;
  json["draft"] = sample.draft;
  json["edit"] = sample.edit;
  json["provenance"] = ProvenanceName(sample.provenance);
  return Dump(json);
}

std::string ToJsonLine(const ProductRecord& record) {
  Json json;
  json["id"] = record.id;
  json["title"] = record.title;
  json["category"] = record.category;
  Json attributes = Json::array();
  for (const AttributePair& attribute : record.attributes) {
    Json pair;
    pair["name"] = attribute.name;
    pair["value"] = attribute.value;
    attributes.push_back(std::move(pair));
  }
  json["attributes"] = std::move(attributes);
  json["description"] = record.description;
  return Dump(json);
}

EditSample ParseEditSample(std::string_view line, std::size_t line_number) {
  const Json json = ParseLine(line, line_number);
  EditSample sample;
  sample.attribute.name = GetString(json, "attribute_name", line_number);
  sample.attribute.value = GetString(json, "attribute_value", line_number);
  const std::string command = GetString(json, "command", line_number);
  const auto parsed_command = ParseCommand(command);
  if (!parsed_command) {
    throw Error(LinePrefix(line_number) +
                "invalid field \"command\" (expected \"[ADD]\" or \"[DEL]\", "
                "got \"" + command + "\")");
  }
  sample.command = *parsed_command;
  sample.grounding.title = GetString(json, "title", line_number);
  sample.grounding.category = GetString(json, "category", line_number);
  sample.draft = GetString(json, "draft", line_number);
  sample.edit = GetString(json, "edit", line_number);
  const std::string provenance = GetString(json, "provenance", line_number);
  const auto parsed_provenance = ParseProvenance(provenance);
  if (!parsed_provenance) {
    throw Error(LinePrefix(line_number) +
                "invalid field \"provenance\" (got \"" + provenance + "\")");
  }
  sample.provenance = *parsed_provenance;
  if (auto violation = CheckEditSample(sample)) {
    throw Error(LinePrefix(line_number) + "invariant violated: " + *violation);
  }
  return sample;
}

ProductRecord ParseProductRecord(std::string_view line,
                                 std::size_t line_number) {
  const Json json = ParseLine(line, line_number);
  ProductRecord record;
  record.id = GetString(json, "id", line_number);
  record.title = GetString(json, "title", line_number);
  record.category = GetString(json, "category", line_number);
  const auto it = json.find("attributes");
  if (it == json.end()) {
    throw Error(LinePrefix(line_number) + "missing field \"attributes\"");
  }
  if (!it->is_array()) {
    throw Error(LinePrefix(line_number) +
                "invalid field \"attributes\" (expected an array)");
  }
  for (const Json& pair : *it) {
    if (!pair.is_object()) {
      throw Error(LinePrefix(line_number) +
                  "invalid field \"attributes\" (expected {name, value})");
    }
    record.attributes.push_back({GetString(pair, "name", line_number),
                                 GetString(pair, "value", line_number)});
  }
  record.description = GetString(json, "description", line_number);
  if (auto violation = CheckProductRecord(record)) {
    throw Error(LinePrefix(line_number) + "invariant violated: " + *violation);
  }
  return record;
}

JsonlLineReader::JsonlLineReader(const std::filesystem::path& path)
    : path_(path), in_(path, std::ios::binary) {
  if (!in_) throw Error("cannot open " + path.string());
}

bool JsonlLineReader::Next(std::string& line) {
  while (std::getline(in_, line)) {
    ++line_number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return true;
  }
  if (in_.bad()) throw Error("read failed: " + path_.string());
  return false;
}

std::vector<EditSample> ReadEditSamples(const std::filesystem::path& path) {
  JsonlLineReader reader(path);
  std::vector<EditSample> samples;
  std::string line;
  while (reader.Next(line)) {
    samples.push_back(ParseEditSample(line, reader.line_number()));
  }
  return samples;
}

std::vector<ProductRecord> ReadProductRecords(
    const std::filesystem::path& path) {
  JsonlLineReader reader(path);
  std::vector<ProductRecord> records;
  std::string line;
  while (reader.Next(line)) {
    records.push_back(ParseProductRecord(line, reader.line_number()));
  }
  return records;
}

void WriteEditSamples(std::span<const EditSample> samples,
                      const std::filesystem::path& path) {
  std::vector<std::string> lines;
  lines.reserve(samples.size());
  for (const EditSample& sample : samples) lines.push_back(ToJsonLine(sample));
  WriteFile(lines, path);
}

void WriteProductRecords(std::span<const ProductRecord> records,
                         const std::filesystem::path& path) {
  std::vector<std::string> lines;
  lines.reserve(records.size());
  for (const ProductRecord& record : records) {
    lines.push_back(ToJsonLine(record));
  }
  WriteFile(lines, path);
}

void WriteLines(std::span<const std::string> lines,
                const std::filesystem::path& path) {
  WriteFile(lines, path);
}

}  // namespace descedit
