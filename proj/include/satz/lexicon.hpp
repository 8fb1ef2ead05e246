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

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "satz/token.hpp"

namespace satz {

enum class TagSource {
  Lexicon,    // straight dictionary entry
  Heuristic,  // guessed for an unknown word
  Mixed,      // dictionary entry adjusted (e.g. proper-noun share added)
};

// Part-of-speech tags with their observed frequencies for one word.
struct TagFrequencies {
  std::map<std::string, double> entries;
  TagSource source = TagSource::Lexicon;

  double total() const;
  bool contains(std::string_view tag) const;

  bool operator==(const TagFrequencies&) const = default;
};

// Knobs for the unknown-word guesses and capitalization handling.
struct HeuristicParams {
  // Share of probability mass given to the proper-noun tag for an unknown
  // capitalized word, and for a known word seen capitalized. Both in (0, 1].
  double proper_noun_unknown_freq_fraction = 0.9;
  double proper_noun_known_freq_fraction = 0.5;
  // Last-resort tag set for words nothing else matches.
  std::map<std::string, double> desperation_tags = {
      {"NN", 1.0}, {"VB", 1.0}, {"JJ", 1.0}, {"NP", 1.0}};
  // Tags for unknown hyphenated words.
  std::map<std::string, double> hyphen_tags = {{"JJ", 1.0}, {"NN", 1.0}};
};

// Returns a copy of `tags` adjusted so the NP tag holds exactly `share` of
// the new total. Requires share in [0, 1] and some non-NP mass (except for
// share = 1, which collapses everything onto NP).
TagFrequencies with_proper_noun_share(const TagFrequencies& tags,
                                      double share);

struct LexiconPaths {
  std::filesystem::path words;
  std::filesystem::path abbreviations;
  std::filesystem::path chars;
  std::filesystem::path endings;
  std::filesystem::path proper_nouns;

  // The conventional file names inside one directory.
  static LexiconPaths in_dir(const std::filesystem::path& dir);
};

// Word -> tag-frequency dictionary plus the unknown-word machinery.
//
// Dictionary files hold one entry per line: the word, then one or more
// TAG/freq fields, all tab-separated with no trailing tab. '#' starts a
// comment line. Lookups are case-sensitive first, then fall back to a
// case-insensitive match, then to heuristics.
class Lexicon {
 public:
  static Lexicon load(const LexiconPaths& paths);
  static Lexicon load_dir(const std::filesystem::path& dir);

  // Tag frequencies for a token. Sentinel tokens are rejected.
  TagFrequencies lookup(const Token& token,
                        const HeuristicParams& params = {}) const;

  // The unknown-word path only (also used when a lookup misses).
  TagFrequencies heuristic_tags(const Token& token,
                                const HeuristicParams& params = {}) const;

  bool contains(std::string_view word) const;
  bool is_abbreviation(std::string_view word) const;  // case-insensitive
  bool is_proper_noun(std::string_view word) const;

  // Raw abbreviation spellings, for the tokenizer.
  const std::set<std::string>& abbreviations() const { return abbreviations_; }

  std::size_t word_count() const { return words_.size(); }

  // A reduced lexicon holding only the first `keep_words` word entries in
  // file order; abbreviation entries are always retained. Character and
  // ending tables are unaffected.
  Lexicon truncated(std::size_t keep_words) const;

  TokenizerOptions tokenizer_options(std::string sentinel = "</s>") const;

 private:
  std::map<std::string, TagFrequencies> words_;
  std::vector<std::string> word_order_;            // file order of words_
  std::map<std::string, std::string> folded_keys_; // lowercase -> words_ key
  std::map<std::string, TagFrequencies> chars_;
  std::vector<std::pair<std::string, TagFrequencies>> endings_;  // lowercase
  std::set<std::string> abbreviations_;        // as spelled
  std::set<std::string> folded_abbreviations_;
  std::set<std::string> proper_nouns_;

  void add_word(const std::string& word, const TagFrequencies& tags,
                const std::string& file, std::size_t line);
  void rebuild_folded_keys();
};

}  // namespace satz
