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


#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "descedit/cli.h"
#include "descedit/corpus.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "support/synthetic.h"

namespace descedit {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("descedit_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path Path(const std::string& name) const { return dir_ / name; }

  static std::string Slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  static void Spit(const fs::path& path, const std::string& text) {
    std::ofstream(path, std::ios::binary) << text;
  }

  RunConfig AugmentConfig() const {
    RunConfig config;
    config.subcommand = "augment";
    config.input = Path("records.jsonl");
    config.output = Path("pairs.jsonl");
    config.seed = 11;
    return config;
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, AugmentManifestCountsSumToSamples) {
  const auto records = testing::GenerateProducts(200, 3);
  WriteProductRecords(records, Path("records.jsonl"));
  RunConfig config = AugmentConfig();
  ASSERT_EQ(RunAugment(config, out_, err_), 0) << err_.str();
  const auto samples = ReadEditSamples(Path("pairs.jsonl"));
  const Json manifest =
      Json::parse(Slurp(Path("pairs.jsonl.manifest.json")));
  std::size_t total = 0;
  for (const auto& [name, count] : manifest["samples_by_source"].items()) {
    total += count.get<std::size_t>();
  }
  EXPECT_EQ(total, samples.size());
  EXPECT_EQ(manifest["samples"].get<std::size_t>(), samples.size());
  EXPECT_EQ(manifest["seed"].get<std::uint64_t>(), 11u);
  EXPECT_EQ(manifest["config_hash"].get<std::string>(), ConfigHash(config));
  std::size_t selected = 0;
  for (const auto& [name, count] : manifest["policy_selected"].items()) {
    selected += count.get<std::size_t>();
  }
  EXPECT_EQ(selected, 200u);
}

TEST_F(CliTest, AugmentIsRepeatable) {
  WriteProductRecords(testing::GenerateProducts(150, 4), Path("records.jsonl"));
  RunConfig config = AugmentConfig();
  config.filler = FillerKind::kNgramLm;
  ASSERT_EQ(RunAugment(config, out_, err_), 0) << err_.str();
  const std::string first = Slurp(Path("pairs.jsonl"));
  const std::string first_manifest = Slurp(Path("pairs.jsonl.manifest.json"));
  config.workers = 3;
  ASSERT_EQ(RunAugment(config, out_, err_), 0) << err_.str();
  EXPECT_EQ(Slurp(Path("pairs.jsonl")), first);
  EXPECT_FALSE(first.empty());
  EXPECT_NE(ConfigHash(config), ConfigHash(AugmentConfig()));
}

TEST_F(CliTest, AugmentRejectsBadMix) {
  WriteProductRecords(testing::GenerateProducts(5, 4), Path("records.jsonl"));
  RunConfig config = AugmentConfig();
  config.mix.token_level = 0.9;
  EXPECT_NE(RunAugment(config, out_, err_), 0);
  EXPECT_NE(err_.str().find("sum"), std::string::npos) << err_.str();
}

TEST_F(CliTest, AugmentMissingInput) {
  RunConfig config = AugmentConfig();
  EXPECT_NE(RunAugment(config, out_, err_), 0);
  EXPECT_NE(err_.str().find("records.jsonl"), std::string::npos);
}

TEST_F(CliTest, EditClaspDeletion) {
  Json row;
  row["attribute_name"] = "shape";
  row["attribute_value"] = "column";
  row["command"] = "[DEL]";
  row["title"] = "magnetic clasps";
  row["category"] = "jewelry";
  row["draft"] =
      "brass magnetic clasps, column, silver size:about 8mm wide, ..., just "
      "add to the end of your diy bracelets crimp in the hole.";
  Json add = row;
  add["command"] = "[ADD]";
  Spit(Path("in.jsonl"), row.dump() + "\n" + add.dump() + "\n");
  RunConfig config;
  config.input = Path("in.jsonl");
  config.output = Path("out.jsonl");
  ASSERT_EQ(RunEdit(config, out_, err_), 0) << err_.str();
  std::istringstream lines(Slurp(Path("out.jsonl")));
  std::string line;
  ASSERT_TRUE(std::getline(lines, line));
  Json first = Json::parse(line);
  EXPECT_EQ(first["id"], 0);
  EXPECT_EQ(first["text"],
            "brass magnetic clasps, silver size:about 8mm wide, ..., just add "
            "to the end of your diy bracelets crimp in the hole.");
  EXPECT_EQ(first["no_op"], false);
  ASSERT_TRUE(std::getline(lines, line));
  Json second = Json::parse(line);
  EXPECT_EQ(second["text"], row["draft"]);
  EXPECT_EQ(second["no_op"], true);
}

TEST_F(CliTest, EditEmptyInput) {
  Spit(Path("in.jsonl"), "");
  RunConfig config;
  config.input = Path("in.jsonl");
  config.output = Path("out.jsonl");
  EXPECT_EQ(RunEdit(config, out_, err_), 0) << err_.str();
  EXPECT_EQ(Slurp(Path("out.jsonl")), "");
}

TEST_F(CliTest, EditSchemaViolation) {
  Spit(Path("in.jsonl"), "{\"attribute_name\":\"a\"}\n");
  RunConfig config;
  config.input = Path("in.jsonl");
  config.output = Path("out.jsonl");
  EXPECT_NE(RunEdit(config, out_, err_), 0);
  EXPECT_NE(err_.str().find("line 1"), std::string::npos) << err_.str();
}

TEST_F(CliTest, EvaluateGoldAndMisaligned) {
  const std::vector<EditSample> samples = {
      {{"color", "navy"}, Command::kDel, {"scarf", "c"},
       "a navy scarf. warm.", "a scarf. warm.", Provenance::kHuman},
      {{"color", "navy"}, Command::kAdd, {"scarf", "c"},
       "a scarf. warm.", "a navy scarf. warm.", Provenance::kHuman}};
  WriteEditSamples(samples, Path("gold.jsonl"));
  std::string outputs;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    outputs += Json{{"id", i}, {"text", samples[i].edit}}.dump() + "\n";
  }
  Spit(Path("outputs.jsonl"), outputs);
  RunConfig config;
  config.input = Path("gold.jsonl");
  config.outputs = Path("outputs.jsonl");
  config.output = Path("report.json");
  ASSERT_EQ(RunEvaluate(config, out_, err_), 0) << err_.str();
  const Json report = Json::parse(Slurp(Path("report.json")));
  EXPECT_DOUBLE_EQ(report["bleu4"].get<double>(), 100.0);
  EXPECT_NE(out_.str().find("B-4"), std::string::npos);

  Spit(Path("outputs.jsonl"),
       Json{{"id", 0}, {"text", samples[0].edit}}.dump() + "\n");
  EXPECT_NE(RunEvaluate(config, out_, err_), 0);
  EXPECT_NE(err_.str().find("2 gold samples vs 1 outputs"), std::string::npos)
      << err_.str();
}

TEST_F(CliTest, EvaluateScoresCsvRegeneratesAll) {
  Spit(Path("scores.csv"),
       "model,add,del\nalpha,56.32,55.57\nbeta,58.47,90.00\n"
       "gamma,87.29,58.09\n");
  RunConfig config;
  config.scores_csv = Path("scores.csv");
  config.output = Path("all.csv");
  ASSERT_EQ(RunEvaluate(config, out_, err_), 0) << err_.str();
  std::istringstream table(Slurp(Path("all.csv")));
  std::string line;
  std::getline(table, line);
  EXPECT_EQ(line, "model,add,del,all");
  const std::vector<std::pair<std::string, double>> expected = {
      {"alpha", 0.37}, {"beta", -15.76}, {"gamma", 14.60}};
  for (const auto& [model, all] : expected) {
    ASSERT_TRUE(std::getline(table, line));
    EXPECT_EQ(line.substr(0, line.find(',')), model);
    EXPECT_NEAR(std::stod(line.substr(line.rfind(',') + 1)), all, 0.01)
        << line;
  }
}

TEST_F(CliTest, StatsPerProvenance) {
  const std::vector<EditSample> samples = {
      {{"color", "navy"}, Command::kDel, {"scarf", "c"},
       "a navy scarf. warm.", "a scarf. warm.", Provenance::kRuleSentence}};
  WriteEditSamples(samples, Path("gold.jsonl"));
  RunConfig config;
  config.input = Path("gold.jsonl");
  ASSERT_EQ(RunStats(config, out_, err_), 0) << err_.str();
  const Json stats = Json::parse(out_.str());
  EXPECT_EQ(stats["all"]["sample_count"], 1);
  EXPECT_EQ(stats["rule_sentence"]["sample_count"], 1);
  EXPECT_DOUBLE_EQ(stats["all"]["mean_draft_len"].get<double>(), 6.0);
}

TEST_F(CliTest, ValidateMetric) {
  Spit(Path("human.csv"),
       "sample_id,human_score,metric_score\n0,1,2\n1,2,1\n2,3,4\n3,4,3\n"
       "4,5,6\n");
  RunConfig config;
  config.input = Path("human.csv");
  ASSERT_EQ(RunValidateMetric(config, out_, err_), 0) << err_.str();
  const Json result = Json::parse(out_.str());
  EXPECT_NEAR(result["attribute_edit"]["coefficient"].get<double>(),
              0.8219949365, 1e-9);

  std::vector<EditSample> samples;
  std::string outputs;
  for (int i = 0; i < 5; ++i) {
    samples.push_back({{"color", "navy"}, Command::kDel, {"scarf", "c"},
                       "a navy scarf.", "a scarf.", Provenance::kHuman});
    outputs += Json{{"id", i},
                    {"text", std::string(std::size_t(i) * 3, 'x') + "navy"}}
                   .dump() +
               "\n";
  }
  WriteEditSamples(samples, Path("gold.jsonl"));
  Spit(Path("outputs.jsonl"), outputs);
  config.samples = Path("gold.jsonl");
  config.outputs = Path("outputs.jsonl");
  std::ostringstream second;
  ASSERT_EQ(RunValidateMetric(config, second, err_), 0) << err_.str();
  const Json with_baseline = Json::parse(second.str());
  EXPECT_NEAR(with_baseline["char_levenshtein"]["coefficient"].get<double>(),
              1.0, 1e-9);
}

}  // namespace
}  // namespace descedit
