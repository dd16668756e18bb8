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

#include "descedit/editor.h"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "descedit/text.h"
#include "descedit/textmetrics.h"

namespace descedit {
namespace {

constexpr std::string_view kSpacedSeparator = " [SEP] ";

// Deleting one occurrence at a time, at most this many times.
constexpr int kMaxDeletions = 16;

std::string InsertAttribute(std::string_view draft,
                            const AttributePair& attribute,
                            AddPosition position) {
  const std::string rendered = attribute.Render();
  const std::vector<Token> tokens = Tokenize(draft);
  const std::vector<TokenSpan> sentences = SplitSentences(draft, tokens);
  std::string out(draft);
  switch (position) {
    case AddPosition::kSentenceInitial: {
      const std::size_t at = tokens.front().begin;
      out.insert(at, rendered + ". ");
      return out;
    }
    case AddPosition::kMidSentence: {
      std::size_t last = sentences.front().end - 1;
      while (last > sentences.front().start &&
             IsSentenceTerminal(tokens[last].text)) {
        --last;
      }
      out.insert(tokens[last].end, ", " + rendered);
      return out;
    }
    case AddPosition::kAfterFirstSentence:
      break;
  }
  if (sentences.size() >= 2) {
    out.insert(tokens[sentences[1].start].begin, rendered + ". ");
    return out;
  }
  const Token& last = tokens.back();
  out.erase(last.end);
  if (IsSentenceTerminal(last.text)) {
    out += " " + rendered + ".";
  } else {
    out += ", " + rendered;
  }
  return out;
}

}  // namespace

EditResult ApplyCommand(std::string_view draft, const AttributePair& attribute,
                        Command command, const Grounding& /*grounding*/,
                        const EditorOptions& options) {
  const EditResult unchanged{std::string(draft), true};
  if (!HasWordToken(draft)) return unchanged;

  if (command == Command::kAdd) {
    if (LocateAttributeSpan(draft, attribute.value, options.min_score)) {
      return unchanged;
    }
    return {InsertAttribute(draft, attribute, options.add_position), false};
  }

  std::string text(draft);
  bool removed = false;
  for (int round = 0; round < kMaxDeletions; ++round) {
    const std::vector<Token> tokens = Tokenize(text);
    std::vector<std::string> strings;
    strings.reserve(tokens.size());
    for (const Token& token : tokens) strings.push_back(token.text);
    const auto match = LocateAttributeSpan(
        std::span<const std::string>(strings), attribute.value,
        options.min_score);
    if (!match) break;
    std::string next = RemoveSpan(text, tokens, {match->start, match->end});
    if (!HasWordToken(next)) break;
    text = std::move(next);
    removed = true;
  }
  if (!removed || PartialRatio(attribute.value, text) >=
                      PartialRatio(attribute.value, draft)) {
    return unchanged;
  }
  return {std::move(text), false};
}

std::string SerializeModelInput(const AttributePair& attribute,
                                Command command, const Grounding& grounding,
                                std::string_view draft) {
  std::string out = attribute.Render();
  for (const std::string_view field :
       {CommandLiteral(command), std::string_view(grounding.title),
        std::string_view(grounding.category), draft}) {
    out += kSpacedSeparator;
    out += field;
  }
  return out;
}

std::optional<ModelInput> ParseModelInput(std::string_view serialized) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto at = serialized.find(kSpacedSeparator);
    if (at == std::string_view::npos) break;
    fields.push_back(serialized.substr(0, at));
    serialized.remove_prefix(at + kSpacedSeparator.size());
  }
  fields.push_back(serialized);
  if (fields.size() != 5) return std::nullopt;

  const auto colon = fields[0].find(": ");
  if (colon == std::string_view::npos) return std::nullopt;
  const auto command = ParseCommand(fields[1]);
  if (!command) return std::nullopt;
  ModelInput input;
  input.attribute = {std::string(fields[0].substr(0, colon)),
                     std::string(fields[0].substr(colon + 2))};
  input.command = *command;
  input.grounding = {std::string(fields[2]), std::string(fields[3])};
  input.draft = std::string(fields[4]);
  return input;
}

}  // namespace descedit
