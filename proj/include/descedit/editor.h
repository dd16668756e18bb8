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

// Rule-based executor of <attribute, command> edits on a draft description,
// and the flat "[SEP]" input format for sequence-to-sequence editors.

#ifndef DESCEDIT_EDITOR_H_
#define DESCEDIT_EDITOR_H_

#include <optional>
#include <string>
#include <string_view>

#include "descedit/corpus.h"
#include "descedit/textmetrics.h"

namespace descedit {

inline constexpr std::string_view kSeparatorToken = "[SEP]";

// Where an added attribute goes.
enum class AddPosition {
  kAfterFirstSentence,  // "first sentence. name: value. rest"
  kSentenceInitial,     // "name: value. draft"
  kMidSentence,         // "first sentence, name: value. rest"
};

struct EditorOptions {
  int min_score = kDefaultMinScore;
  AddPosition add_position = AddPosition::kAfterFirstSentence;
};

struct EditResult {
  std::string text;
  bool no_op = false;  // text is the unchanged draft
};

// Del removes every window that matches the attribute value at min_score
// and smooths the punctuation; it is a no-op when nothing matches, when the
// result would be empty, or when the attribute score would not drop. Add is
// a no-op when the value already matches; otherwise it inserts
// "name: value" at the configured position.
EditResult ApplyCommand(std::string_view draft, const AttributePair& attribute,
                        Command command, const Grounding& grounding,
                        const EditorOptions& options = {});

// "name: value [SEP] [ADD|DEL] [SEP] title [SEP] category [SEP] draft".
std::string SerializeModelInput(const AttributePair& attribute,
                                Command command, const Grounding& grounding,
                                std::string_view draft);

struct ModelInput {
  AttributePair attribute;
  Command command = Command::kDel;
  Grounding grounding;
  std::string draft;
  friend bool operator==(const ModelInput&, const ModelInput&) = default;
};

// Inverse of SerializeModelInput for fields without a separator literal.
std::optional<ModelInput> ParseModelInput(std::string_view serialized);

}  // namespace descedit

#endif  // DESCEDIT_EDITOR_H_
