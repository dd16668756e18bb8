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

// Product records, draft/command/edit samples and their JSON-lines files.
//
// EditSample lines carry exactly these keys, in this order:
//   attribute_name, attribute_value, command, title, category, draft, edit,
//   provenance
// ProductRecord lines carry:
//   id, title, category, attributes ([{name, value}, ...]), description

#ifndef DESCEDIT_CORPUS_H_
#define DESCEDIT_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "descedit/textmetrics.h"

namespace descedit {

struct AttributePair {
  std::string name;
  std::string value;

  // "name: value", the form used in model inputs and by the editor.
  std::string Render() const { return name + ": " + value; }
  friend bool operator==(const AttributePair&, const AttributePair&) = default;
};

enum class Command { kAdd, kDel };

// "[ADD]" or "[DEL]".
std::string_view CommandLiteral(Command command);
std::optional<Command> ParseCommand(std::string_view literal);

enum class Provenance { kHuman, kModelBased, kRuleSentence, kRuleAdjective };

std::string_view ProvenanceName(Provenance provenance);
std::optional<Provenance> ParseProvenance(std::string_view name);

struct Grounding {
  std::string title;
  std::string category;
  friend bool operator==(const Grounding&, const Grounding&) = default;
};

struct ProductRecord {
  std::string id;
  std::string title;
  std::string category;
  std::vector<AttributePair> attributes;
  std::string description;
  friend bool operator==(const ProductRecord&, const ProductRecord&) = default;
};

struct EditSample {
  AttributePair attribute;
  Command command = Command::kDel;
  Grounding grounding;
  std::string draft;
  std::string edit;
  Provenance provenance = Provenance::kHuman;
  friend bool operator==(const EditSample&, const EditSample&) = default;
};

// Table-2 style summary. Lengths are in tokens (punctuation included);
// attribute length counts the name and value words.
struct CorpusStats {
  std::size_t sample_count = 0;
  double mean_draft_len = 0.0;
  double mean_edit_len = 0.0;
  std::size_t category_count = 0;
  double mean_title_len = 0.0;
  double mean_attribute_len = 0.0;
  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

// Returns the name of the first violated invariant, or nothing when the
// value is valid. Sample checks include the attribute-presence condition:
// a deletion must lower the best match score of the attribute value, an
// addition must raise it.
std::optional<std::string> CheckAttributePair(const AttributePair& attribute);
std::optional<std::string> CheckProductRecord(const ProductRecord& record);
std::optional<std::string> CheckEditSample(const EditSample& sample);

// Exchanges draft and edit of a deletion sample and turns it into an
// addition. Throws Error for samples that are already additions.
EditSample SwapToAdd(const EditSample& sample);

CorpusStats ComputeStats(std::span<const EditSample> samples);

// Aggregate stats followed by one entry per provenance present.
std::map<std::string, CorpusStats> ComputeStatsByProvenance(
    std::span<const EditSample> samples);

// Canonical single-line JSON (no trailing newline).
std::string ToJsonLine(const EditSample& sample);
std::string ToJsonLine(const ProductRecord& record);

// Parse one line; throws Error naming the missing/invalid field or the
// violated invariant. `line_number` is only used in messages.
EditSample ParseEditSample(std::string_view line, std::size_t line_number);
ProductRecord ParseProductRecord(std::string_view line,
                                 std::size_t line_number);

// Streams non-empty lines from a file, remembering the line number.
class JsonlLineReader {
 public:
  explicit JsonlLineReader(const std::filesystem::path& path);

  // Next non-empty line, or false at end of file.
  bool Next(std::string& line);
  std::size_t line_number() const { return line_number_; }

 private:
  std::filesystem::path path_;
  std::ifstream in_;
  std::size_t line_number_ = 0;
};

std::vector<EditSample> ReadEditSamples(const std::filesystem::path& path);
std::vector<ProductRecord> ReadProductRecords(
    const std::filesystem::path& path);

// One record per line, LF endings. Throws Error with the path on failure.
void WriteEditSamples(std::span<const EditSample> samples,
                      const std::filesystem::path& path);
void WriteProductRecords(std::span<const ProductRecord> records,
                         const std::filesystem::path& path);

// Writes `lines`, each followed by LF.
void WriteLines(std::span<const std::string> lines,
                const std::filesystem::path& path);

}  // namespace descedit

#endif  // DESCEDIT_CORPUS_H_
