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


#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "descedit/corpus.h"
#include "descedit/text.h"
#include "gtest/gtest.h"

namespace descedit {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("descedit_corpus_" + std::to_string(std::random_device{}()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void Spit(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

const char kClaspDraft[] =
    "brass magnetic clasps, column, silver size:about 8mm wide, ..., just add "
    "to the end of your diy bracelets crimp in the hole.";
const char kClaspEdit[] =
    "brass magnetic clasps, silver size:about 8mm wide, ..., just add to the "
    "end of your diy bracelets crimp in the hole.";

EditSample ClaspSample() {
  return {{"shape", "column"},
          Command::kDel,
          {"magnetic clasps", "jewelry"},
          kClaspDraft,
          kClaspEdit,
          Provenance::kHuman};
}

std::vector<EditSample> Fixture() {
  std::vector<EditSample> samples;
  samples.push_back(ClaspSample());
  samples.push_back(SwapToAdd(ClaspSample()));
  samples.push_back({{"color", "navy blue"},
                     Command::kDel,
                     {"wool scarf \"classic\"", "scarves"},
                     "a warm scarf in navy blue.\nhand wash only.",
                     "a warm scarf.\nhand wash only.",
                     Provenance::kRuleSentence});
  samples.push_back({{"feature", "waterproof"},
                     Command::kDel,
                     {"hiking boot", "shoes"},
                     "waterproof and durable boots \xC3\xA9t\xC3\xA9.",
                     "durable boots \xC3\xA9t\xC3\xA9.",
                     Provenance::kRuleAdjective});
  samples.push_back({{"size", "xl"},
                     Command::kDel,
                     {"tee", ""},
                     "cotton tee, size xl, soft.",
                     "cotton tee, soft.",
                     Provenance::kModelBased});
  return samples;
}

TEST(Command, Literals) {
  EXPECT_EQ(CommandLiteral(Command::kAdd), "[ADD]");
  EXPECT_EQ(CommandLiteral(Command::kDel), "[DEL]");
  EXPECT_EQ(ParseCommand("[DEL]"), Command::kDel);
  EXPECT_EQ(ParseCommand("DEL"), std::nullopt);
}

TEST(CheckEditSample, AcceptsFixture) {
  for (const EditSample& sample : Fixture()) {
    EXPECT_EQ(CheckEditSample(sample), std::nullopt) << sample.draft;
  }
}

TEST(CheckEditSample, RejectsViolations) {
  EditSample sample = ClaspSample();
  sample.edit = sample.draft;
  EXPECT_EQ(CheckEditSample(sample), "draft differs from edit");
  sample = ClaspSample();
  sample.command = Command::kAdd;
  EXPECT_TRUE(CheckEditSample(sample).has_value());
  sample = ClaspSample();
  sample.draft = " ";
  EXPECT_EQ(CheckEditSample(sample), "draft non-empty");
  sample = ClaspSample();
  sample.grounding.title = "";
  EXPECT_TRUE(CheckEditSample(sample).has_value());
}

TEST(SwapToAdd, ExchangesDraftAndEdit) {
  const EditSample add = SwapToAdd(ClaspSample());
  EXPECT_EQ(add.command, Command::kAdd);
  EXPECT_EQ(add.draft, kClaspEdit);
  EXPECT_EQ(add.edit, kClaspDraft);
  EXPECT_EQ(add.attribute, ClaspSample().attribute);
  EXPECT_EQ(add.grounding, ClaspSample().grounding);
  EXPECT_EQ(add.provenance, ClaspSample().provenance);
  EXPECT_NE(add.edit.find("column"), std::string::npos);
  EXPECT_EQ(CheckEditSample(add), std::nullopt);

  EditSample back = add;
  std::swap(back.draft, back.edit);
  back.command = Command::kDel;
  EXPECT_EQ(back, ClaspSample());
}

TEST(SwapToAdd, RejectsAddSamples) {
  try {
    SwapToAdd(SwapToAdd(ClaspSample()));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "swap requires a deletion sample");
  }
}

TEST(Jsonl, KeyOrder) {
  const std::string line = ToJsonLine(ClaspSample());
  const std::vector<std::string> keys = {
      "\"attribute_name\"", "\"attribute_value\"", "\"command\"", "\"title\"",
      "\"category\"",       "\"draft\"",           "\"edit\"",
      "\"provenance\""};
  std::size_t last = 0;
  for (const std::string& key : keys) {
    const std::size_t at = line.find(key);
    ASSERT_NE(at, std::string::npos) << key;
    EXPECT_GE(at, last);
    last = at;
  }
  EXPECT_NE(line.find("\"[DEL]\""), std::string::npos);
}

TEST(Jsonl, RoundTripIsByteIdentical) {
  TempDir dir;
  const std::vector<EditSample> samples = Fixture();
  WriteEditSamples(samples, dir / "a.jsonl");
  const std::vector<EditSample> read = ReadEditSamples(dir / "a.jsonl");
  EXPECT_EQ(read, samples);
  WriteEditSamples(read, dir / "b.jsonl");
  EXPECT_EQ(Slurp(dir / "a.jsonl"), Slurp(dir / "b.jsonl"));
  const std::string bytes = Slurp(dir / "a.jsonl");
  EXPECT_EQ(std::count(bytes.begin(), bytes.end(), '\n'), 5);
  EXPECT_EQ(bytes.find('\r'), std::string::npos);
}

TEST(Jsonl, EmptyAndSingle) {
  TempDir dir;
  WriteEditSamples({}, dir / "empty.jsonl");
  EXPECT_EQ(Slurp(dir / "empty.jsonl"), "");
  EXPECT_TRUE(ReadEditSamples(dir / "empty.jsonl").empty());
  const std::vector<EditSample> one = {ClaspSample()};
  WriteEditSamples(one, dir / "one.jsonl");
  const std::string bytes = Slurp(dir / "one.jsonl");
  EXPECT_EQ(std::count(bytes.begin(), bytes.end(), '\n'), 1);
  EXPECT_EQ(bytes.back(), '\n');
}

TEST(Jsonl, ErrorNamesLineAndInvariant) {
  TempDir dir;
  EditSample bad = Fixture()[2];
  std::string lines = ToJsonLine(Fixture()[0]) + "\n" +
                      ToJsonLine(Fixture()[1]) + "\n";
  std::string third = ToJsonLine(bad);
  const std::string quoted = "\"" + std::string("a warm scarf in navy blue.") +
                             "\\nhand wash only.\"";
  const std::size_t at = third.find(quoted);
  ASSERT_NE(at, std::string::npos);
  third.replace(at, quoted.size(), "\"\"");
  Spit(dir / "bad.jsonl", lines + third + "\n");
  try {
    ReadEditSamples(dir / "bad.jsonl");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    const std::string message = e.what();
    EXPECT_NE(message.find("line 3"), std::string::npos) << message;
    EXPECT_NE(message.find("draft non-empty"), std::string::npos) << message;
  }
}

TEST(Jsonl, ErrorNamesMissingField) {
  TempDir dir;
  Spit(dir / "bad.jsonl", "{\"attribute_name\":\"a\"}\n");
  try {
    ReadEditSamples(dir / "bad.jsonl");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    const std::string message = e.what();
    EXPECT_NE(message.find("line 1"), std::string::npos) << message;
    EXPECT_NE(message.find("attribute_value"), std::string::npos) << message;
  }
  Spit(dir / "bad2.jsonl", "not json\n");
  EXPECT_THROW(ReadEditSamples(dir / "bad2.jsonl"), Error);
  EXPECT_THROW(ReadEditSamples(dir / "missing.jsonl"), Error);
}

TEST(Jsonl, ProductRecordsRoundTrip) {
  TempDir dir;
  const std::vector<ProductRecord> records = {
      {"p1", "lamp", "home", {{"color", "red"}, {"size", "xl"}}, "a red lamp."},
      {"p2", "mug", "kitchen", {}, "a plain mug."}};
  WriteProductRecords(records, dir / "r.jsonl");
  EXPECT_EQ(ReadProductRecords(dir / "r.jsonl"), records);
  const std::string line = ToJsonLine(records[0]);
  EXPECT_LT(line.find("\"id\""), line.find("\"title\""));
  EXPECT_LT(line.find("\"category\""), line.find("\"attributes\""));
  EXPECT_LT(line.find("\"attributes\""), line.find("\"description\""));
}

TEST(ComputeStats, EmptyIsZero) {
  EXPECT_EQ(ComputeStats({}), CorpusStats{});
}

TEST(ComputeStats, HandCounts) {
  std::vector<EditSample> samples(2, ClaspSample());
  samples[0].draft = "one two three four";
  samples[0].edit = "one two";
  samples[1].draft = "one two three four five ,";
  samples[1].edit = "one";
  samples[1].grounding.category = "other";
  samples[0].attribute = {"shape", "tall column"};
  samples[1].attribute = {"color", "red"};
  const CorpusStats stats = ComputeStats(samples);
  EXPECT_EQ(stats.sample_count, 2u);
  EXPECT_DOUBLE_EQ(stats.mean_draft_len, 5.0);
  EXPECT_DOUBLE_EQ(stats.mean_edit_len, 1.5);
  EXPECT_EQ(stats.category_count, 2u);
  EXPECT_DOUBLE_EQ(stats.mean_title_len, 2.0);
  EXPECT_DOUBLE_EQ(stats.mean_attribute_len, 2.5);
}

TEST(ComputeStats, OrderInvariant) {
  std::vector<EditSample> samples = Fixture();
  const CorpusStats expected = ComputeStats(samples);
  std::mt19937 gen(1);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(samples.begin(), samples.end(), gen);
    const CorpusStats stats = ComputeStats(samples);
    EXPECT_DOUBLE_EQ(stats.mean_draft_len, expected.mean_draft_len);
    EXPECT_DOUBLE_EQ(stats.mean_edit_len, expected.mean_edit_len);
    EXPECT_DOUBLE_EQ(stats.mean_title_len, expected.mean_title_len);
    EXPECT_DOUBLE_EQ(stats.mean_attribute_len, expected.mean_attribute_len);
    EXPECT_EQ(stats.category_count, expected.category_count);
  }
}

TEST(ComputeStats, ByProvenance) {
  const auto by = ComputeStatsByProvenance(Fixture());
  EXPECT_EQ(by.at("all").sample_count, 5u);
  EXPECT_EQ(by.at("human").sample_count, 2u);
  EXPECT_EQ(by.at("rule_sentence").sample_count, 1u);
}

}  // namespace
}  // namespace descedit
