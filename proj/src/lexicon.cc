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

#include "descedit/lexicon.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <string>

#include "descedit/text.h"

namespace descedit {

TokenSet LoadTokenSet(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lexicon " + path.string());
  TokenSet tokens;
  std::string line;
  while (std::getline(in, line)) {
    std::string token = NormalizeText(line);
    if (!token.empty()) tokens.insert(std::move(token));
  }
  return tokens;
}

std::map<std::string, std::string> LoadTemplateTable(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open template table " + path.string());
  std::map<std::string, std::string> table;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (NormalizeText(line).empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(path.string() + ": line " + std::to_string(line_number) +
                  ": expected \"category<TAB>phrase\"");
    }
    table[NormalizeText(line.substr(0, tab))] =
        NormalizeText(line.substr(tab + 1));
  }
  return table;
}

}  // namespace descedit
