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

// Plain-text resources: token lexicons (one token per line) and the
// category-to-phrase table used by the template filler (tab-separated).

#ifndef DESCEDIT_LEXICON_H_
#define DESCEDIT_LEXICON_H_

#include <filesystem>
#include <map>
#include <string>
#include <unordered_set>

namespace descedit {

// Lowercased tokens.
using TokenSet = std::unordered_set<std::string>;

// Blank lines are skipped; entries are trimmed and lowercased.
TokenSet LoadTokenSet(const std::filesystem::path& path);

// Keys are normalized categories. Lines without a tab are an error.
std::map<std::string, std::string> LoadTemplateTable(
    const std::filesystem::path& path);

}  // namespace descedit

#endif  // DESCEDIT_LEXICON_H_
