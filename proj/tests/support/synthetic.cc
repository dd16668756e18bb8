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


#include "support/synthetic.h"

#include <array>
#include <set>
#include <string_view>

#include "descedit/rng.h"

namespace descedit::testing {
namespace {

constexpr std::array<std::string_view, 12> kNouns = {
    "bottle", "lamp",   "jacket", "backpack", "charger", "pillow",
    "mug",    "kettle", "blanket", "speaker", "helmet",  "wallet"};
constexpr std::array<std::string_view, 10> kPlainAdjectives = {
    "sturdy", "elegant", "compact", "practical", "stylish",
    "simple", "modern",  "classic", "reliable",  "handy"};
constexpr std::array<std::string_view, 8> kPlantedAdjectives = {
    "waterproof", "breathable", "lightweight", "foldable",
    "washable",   "adjustable", "portable",    "reusable"};
constexpr std::array<std::string_view, 8> kAttributeNames = {
    "material", "style", "pattern", "brand line",
    "finish",   "series", "model",  "collection"};
constexpr std::array<std::string_view, 6> kLeads = {
    "it features", "made with", "designed around", "the set includes",
    "you will receive", "comes in"};
constexpr std::array<std::string_view, 6> kTails = {
    "for daily use", "for the whole family", "as a gift",
    "for home and office", "in every season", "for travel"};
constexpr std::array<std::string_view, 14> kStopwords = {
    "this", "is",  "it",  "the", "a",  "and", "for",
    "with", "in",  "as",  "you", "of", "to",  "every"};

std::string_view Pick(auto const& list, Rng& rng) {
  return list[rng.UniformInt(0, list.size() - 1)];
}

// Draws from `list` without repeating anything already in `used`.
std::string Fresh(auto const& list, Rng& rng, std::set<std::string>& used) {
  for (;;) {
    std::string word(Pick(list, rng));
    if (used.insert(word).second) return word;
  }
}

}  // namespace

std::string PseudoWord(std::uint64_t seed) {
  static constexpr std::string_view kOnsets[] = {
      "zr", "kv", "pl", "dr", "gm", "tsh", "vl", "br", "skr", "fn", "xh", "qu"};
  static constexpr std::string_view kVowels[] = {"a", "e", "i", "o", "u", "y"};
  static constexpr std::string_view kCodas[] = {"k", "n", "x", "r", "z", "m"};
  Rng rng(seed);
  std::string word;
  for (int s = 0; s < 3; ++s) {
    word += kOnsets[rng.UniformInt(0, std::size(kOnsets) - 1)];
    word += kVowels[rng.UniformInt(0, std::size(kVowels) - 1)];
  }
  word += kCodas[rng.UniformInt(0, std::size(kCodas) - 1)];
  return word;
}

std::vector<ProductRecord> GenerateProducts(std::size_t count,
                                            std::uint64_t seed) {
  std::vector<ProductRecord> records;
  records.reserve(count);
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    ProductRecord record;
    record.id = "p" + std::to_string(i);
    const std::string noun(Pick(kNouns, rng));
    record.category = "category " + std::to_string(rng.UniformInt(0, 39));
    record.title = PseudoWord(rng.UniformInt(0, ~0ull)) + " " + noun + " " +
                   std::to_string(rng.UniformInt(100, 999));

    const std::size_t attribute_count = rng.UniformInt(2, 4);
    const bool adjective_attribute = rng.UniformInt(0, 2) == 0;
    std::set<std::string> used_names;
    std::set<std::string> used_words;
    std::vector<std::string> sentences;
    std::string opening =
        "this " + noun + " is " + Fresh(kPlainAdjectives, rng, used_words);
    if (adjective_attribute) {
      const std::string adjective(Pick(kPlantedAdjectives, rng));
      record.attributes.push_back({"feature", adjective});
      opening += " , " + adjective;
    }
    opening += " and " + Fresh(kPlainAdjectives, rng, used_words) + " .";
    sentences.push_back(opening);

    while (record.attributes.size() < attribute_count) {
      std::string name(Pick(kAttributeNames, rng));
      if (!used_names.insert(name).second) continue;
      std::string value = PseudoWord(rng.UniformInt(0, ~0ull));
      if (rng.UniformInt(0, 3) == 0) {
        value += " " + PseudoWord(rng.UniformInt(0, ~0ull));
      }
      record.attributes.push_back({name, value});
      sentences.push_back(Fresh(kLeads, rng, used_words) + " " + value + " " +
                          Fresh(kTails, rng, used_words) + " .");
    }
    sentences.push_back("easy to clean and " +
                        Fresh(kPlainAdjectives, rng, used_words) + " .");

    for (std::size_t k = 0; k < sentences.size(); ++k) {
      if (k > 0) record.description += ' ';
      record.description += sentences[k];
    }
    records.push_back(std::move(record));
  }
  return records;
}

TokenSet SyntheticAdjectives() {
  TokenSet set;
  for (auto word : kPlantedAdjectives) set.emplace(word);
  for (auto word : kPlainAdjectives) set.emplace(word);
  return set;
}

TokenSet SyntheticStopwords() {
  TokenSet set;
  for (auto word : kStopwords) set.emplace(word);
  return set;
}

}  // namespace descedit::testing
