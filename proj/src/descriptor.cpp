// Copyright 2026 The Satz Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "satz/descriptor.hpp"

#include <charconv>
#include <fstream>

#include "satz/error.hpp"

namespace satz {

CategoryMapping CategoryMapping::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open category mapping " + path.string());
  const std::string file = path.string();

  CategoryMapping mapping;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool blank = true;
    for (char c : line) {
      if (c == '#') break;
      if (c != ' ' && c != '\t') {
        blank = false;
        break;
      }
    }
    if (blank) continue;

    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
      throw ParseError(file, line_no, "expected 'TAG<tab>slot'");
    const std::string tag = line.substr(0, tab);
    const std::string slot_text = line.substr(tab + 1);
    std::size_t slot = 0;
    const auto [ptr, ec] = std::from_chars(
        slot_text.data(), slot_text.data() + slot_text.size(), slot);
    if (ec != std::errc() || ptr != slot_text.data() + slot_text.size())
      throw ParseError(file, line_no, "slot must be an integer, got '" +
                                          slot_text + "'");
    if (mapping.tag_to_slot_.count(tag))
      throw ParseError(file, line_no, "duplicate tag '" + tag + "'");
    try {
      mapping.set(tag, slot);
    } catch (const ConfigError& e) {
      throw ParseError(file, line_no, e.what());
    }
  }
  if (mapping.size() == 0)
    throw ConfigError("category mapping " + path.string() + " is empty");
  return mapping;
}

void CategoryMapping::set(const std::string& tag, std::size_t slot) {
  if (slot >= kDescriptorSize)
    throw ConfigError("category slot " + std::to_string(slot) +
                      " out of range");
  if (slot == category::kFlagCapitalized ||
      slot == category::kFlagCapAfterCandidate)
    throw ConfigError("slot " + std::to_string(slot) +
                      " is reserved for capitalization flags");
  tag_to_slot_[tag] = slot;
}

std::optional<std::size_t> CategoryMapping::category(
    std::string_view tag) const {
  const auto it = tag_to_slot_.find(std::string(tag));
  if (it == tag_to_slot_.end()) return std::nullopt;
  return it->second;
}

DescriptorArray map_to_categories(const TagFrequencies& tags,
                                  const CategoryMapping& mapping,
                                  UnmappedTagLog* log) {
  DescriptorArray slots{};
  for (const auto& [tag, freq] : tags.entries) {
    const auto slot = mapping.category(tag);
    if (slot) {
      slots[*slot] += freq;
    } else {
      slots[category::kOthers] += freq;
      if (log) log->note(tag);
    }
  }
  return slots;
}

DescriptorArray build_descriptor(const Token& token,
                                 const TagFrequencies& tags,
                                 const CategoryMapping& mapping,
                                 bool prev_is_candidate,
                                 UnmappedTagLog* log) {
  DescriptorArray descriptor = map_to_categories(tags, mapping, log);
  double total = 0.0;
  for (std::size_t i = 0; i < kDescriptorSize; ++i) total += descriptor[i];
  if (total <= 0.0)
    throw Error("token '" + token.text + "' has no category mass");
  for (std::size_t i = 0; i < kDescriptorSize; ++i) descriptor[i] /= total;

  descriptor[category::kFlagCapitalized] =
      token.starts_capitalized ? 1.0 : 0.0;
  descriptor[category::kFlagCapAfterCandidate] =
      (token.starts_capitalized && prev_is_candidate) ? 1.0 : 0.0;
  return descriptor;
}

DescriptorArray padding_descriptor() {
  DescriptorArray descriptor{};
  descriptor[category::kOthers] = 1.0;
  return descriptor;
}

}  // namespace satz
