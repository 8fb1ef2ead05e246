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

#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "satz/lexicon.hpp"
#include "satz/token.hpp"

namespace satz {

// Each token is summarized as 20 values: 18 part-of-speech category
// probabilities that sum to one, plus two binary capitalization flags.
inline constexpr std::size_t kDescriptorSize = 20;

using DescriptorArray = std::array<double, kDescriptorSize>;

// Fixed slot assignments within a descriptor.
namespace category {
inline constexpr std::size_t kOthers = 0;
inline constexpr std::size_t kNoun = 1;
inline constexpr std::size_t kVerb = 2;
inline constexpr std::size_t kArticle = 3;
inline constexpr std::size_t kModifier = 4;
inline constexpr std::size_t kConjunction = 5;
inline constexpr std::size_t kPronoun = 6;
inline constexpr std::size_t kPreposition = 7;
inline constexpr std::size_t kProperNoun = 8;
inline constexpr std::size_t kNumber = 9;
inline constexpr std::size_t kCommaSemicolon = 10;
inline constexpr std::size_t kLeftParen = 11;
inline constexpr std::size_t kRightParen = 12;
inline constexpr std::size_t kNonPunctChar = 13;
inline constexpr std::size_t kPossessive = 14;
inline constexpr std::size_t kColonDash = 15;
inline constexpr std::size_t kAbbreviation = 16;
inline constexpr std::size_t kFlagCapitalized = 17;
inline constexpr std::size_t kFlagCapAfterCandidate = 18;
inline constexpr std::size_t kEosPunct = 19;
}  // namespace category

// Part-of-speech tag -> category slot table, read from a file of
// tab-separated "TAG index" lines ('#' starts a comment). Slots 17 and 18
// are reserved for the capitalization flags and may not be assigned.
class CategoryMapping {
 public:
  static CategoryMapping load(const std::filesystem::path& path);

  void set(const std::string& tag, std::size_t slot);
  std::optional<std::size_t> category(std::string_view tag) const;
  std::size_t size() const { return tag_to_slot_.size(); }

 private:
  std::map<std::string, std::size_t> tag_to_slot_;
};

// Tags without a mapping entry fall into the catch-all slot; this records
// them so the omission is visible.
struct UnmappedTagLog {
  std::map<std::string, std::size_t> counts;

  void note(const std::string& tag) { ++counts[tag]; }
  bool empty() const { return counts.empty(); }
};

// Raw (unnormalized) per-slot frequency mass for a tag set. The flag slots
// stay zero.
DescriptorArray map_to_categories(const TagFrequencies& tags,
                                  const CategoryMapping& mapping,
                                  UnmappedTagLog* log = nullptr);

// The full descriptor: category slots normalized to sum to one, flag 17 set
// for a capitalized token, flag 18 set when the token is capitalized and
// directly follows a possible sentence boundary.
DescriptorArray build_descriptor(const Token& token,
                                 const TagFrequencies& tags,
                                 const CategoryMapping& mapping,
                                 bool prev_is_candidate,
                                 UnmappedTagLog* log = nullptr);

// Descriptor used beyond the ends of the token stream: all mass in the
// catch-all slot, flags clear.
DescriptorArray padding_descriptor();

}  // namespace satz
