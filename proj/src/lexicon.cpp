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

#include "satz/lexicon.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "satz/error.hpp"
#include "satz/text.hpp"

namespace satz {

double TagFrequencies::total() const {
  double sum = 0.0;
  for (const auto& [tag, freq] : entries) sum += freq;
  return sum;
}

bool TagFrequencies::contains(std::string_view tag) const {
  return entries.find(std::string(tag)) != entries.end();
}

TagFrequencies with_proper_noun_share(const TagFrequencies& tags,
                                      double share) {
  if (!(share >= 0.0 && share <= 1.0))
    throw ArgumentError("proper-noun share must be in [0, 1]");
  TagFrequencies out;
  out.source = TagSource::Mixed;
  if (share == 1.0) {
    out.entries["NP"] = 1.0;
    return out;
  }
  out.entries = tags.entries;
  out.entries.erase("NP");
  const double rest = out.total();
  if (rest <= 0.0)
    throw ArgumentError("tag set has no mass besides the proper-noun tag");
  if (share > 0.0) out.entries["NP"] = rest * share / (1.0 - share);
  return out;
}

namespace {

struct DictEntry {
  std::string word;
  TagFrequencies tags;
  std::size_t line = 0;
};

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

double parse_frequency(const std::string& field, const std::string& file,
                       std::size_t line) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value) ||
      value <= 0.0)
    throw ParseError(file, line,
                     "frequency must be a positive number, got '" + field +
                         "'");
  return value;
}

std::vector<DictEntry> parse_dict_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open dictionary file " + path.string());
  const std::string file = path.string();

  std::vector<DictEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank_or_comment(line)) continue;

    const auto fields = split_tabs(line);
    if (fields.size() < 2)
      throw ParseError(file, line_no, "expected word and TAG/freq fields");
    for (const auto& field : fields)
      if (field.empty())
        throw ParseError(file, line_no,
                         "empty field (double or trailing tab?)");

    DictEntry entry;
    entry.word = fields[0];
    entry.line = line_no;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      const std::string& field = fields[i];
      const std::size_t slash = field.rfind('/');
      if (slash == std::string::npos || slash == 0)
        throw ParseError(file, line_no,
                         "tag field must look like TAG/freq, got '" + field +
                             "'");
      const std::string tag = field.substr(0, slash);
      const double freq = parse_frequency(field.substr(slash + 1), file,
                                          line_no);
      if (entry.tags.entries.count(tag))
        throw ParseError(file, line_no, "duplicate tag '" + tag + "'");
      entry.tags.entries[tag] = freq;
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace

LexiconPaths LexiconPaths::in_dir(const std::filesystem::path& dir) {
  LexiconPaths paths;
  paths.words = dir / "words.dict";
  paths.abbreviations = dir / "abbrev.dict";
  paths.chars = dir / "chars.dict";
  paths.endings = dir / "endings.dict";
  paths.proper_nouns = dir / "propnoun.dict";
  return paths;
}

void Lexicon::add_word(const std::string& word, const TagFrequencies& tags,
                       const std::string& file, std::size_t line) {
  auto [it, inserted] = words_.try_emplace(word, tags);
  if (inserted) {
    word_order_.push_back(word);
    return;
  }
  for (const auto& [tag, freq] : tags.entries) {
    const auto existing = it->second.entries.find(tag);
    if (existing != it->second.entries.end() && existing->second != freq)
      throw ParseError(file, line,
                       "conflicting frequencies for tag '" + tag +
                           "' of word '" + word + "'");
    it->second.entries[tag] = freq;
  }
}

void Lexicon::rebuild_folded_keys() {
  folded_keys_.clear();
  for (const auto& word : word_order_)
    folded_keys_.try_emplace(text::lower_copy(word), word);
}

Lexicon Lexicon::load(const LexiconPaths& paths) {
  Lexicon lex;

  for (const auto& entry : parse_dict_file(paths.words))
    lex.add_word(entry.word, entry.tags, paths.words.string(), entry.line);
  for (const auto& entry : parse_dict_file(paths.abbreviations)) {
    lex.add_word(entry.word, entry.tags, paths.abbreviations.string(),
                 entry.line);
    lex.abbreviations_.insert(entry.word);
    lex.folded_abbreviations_.insert(text::lower_copy(entry.word));
  }

  for (const auto& entry : parse_dict_file(paths.proper_nouns)) {
    lex.add_word(entry.word, entry.tags, paths.proper_nouns.string(),
                 entry.line);
    lex.proper_nouns_.insert(entry.word);
  }

  for (const auto& entry : parse_dict_file(paths.chars)) {
    if (!lex.chars_.try_emplace(entry.word, entry.tags).second)
      throw ParseError(paths.chars.string(), entry.line,
                       "duplicate entry '" + entry.word + "'");
  }
  for (const auto& entry : parse_dict_file(paths.endings)) {
    const std::string suffix = text::lower_copy(entry.word);
    for (const auto& [existing, tags] : lex.endings_)
      if (existing == suffix)
        throw ParseError(paths.endings.string(), entry.line,
                         "duplicate ending '" + entry.word + "'");
    lex.endings_.emplace_back(suffix, entry.tags);
  }
  if (lex.endings_.empty())
    throw ConfigError("ending dictionary " + paths.endings.string() +
                      " has no entries");

  lex.rebuild_folded_keys();
  return lex;
}

Lexicon Lexicon::load_dir(const std::filesystem::path& dir) {
  return load(LexiconPaths::in_dir(dir));
}

bool Lexicon::contains(std::string_view word) const {
  return words_.find(std::string(word)) != words_.end();
}

bool Lexicon::is_abbreviation(std::string_view word) const {
  return folded_abbreviations_.count(text::lower_copy(word)) > 0;
}

bool Lexicon::is_proper_noun(std::string_view word) const {
  return proper_nouns_.count(std::string(word)) > 0;
}

TagFrequencies Lexicon::lookup(const Token& token,
                               const HeuristicParams& params) const {
  if (token.kind == TokenKind::Sentinel)
    throw ArgumentError("sentinel tokens have no tag frequencies");
  if (token.kind == TokenKind::Number) {
    TagFrequencies tags;
    tags.entries["CD"] = 1.0;
    tags.source = TagSource::Heuristic;
    return tags;
  }

  const auto finish_known = [&](const TagFrequencies& entry) {
    // A capitalized word whose entry is not already a proper noun may be
    // one anyway (a name, a sentence-initial word): give the NP tag a
    // fixed share of the mass.
    if (token.starts_capitalized && !entry.contains("NP") &&
        params.proper_noun_known_freq_fraction > 0.0)
      return with_proper_noun_share(entry, params.proper_noun_known_freq_fraction);
    TagFrequencies out = entry;
    out.source = TagSource::Lexicon;
    return out;
  };

  const auto exact = words_.find(token.text);
  if (exact != words_.end()) return finish_known(exact->second);

  const std::string folded = text::lower_copy(token.text);
  const auto by_fold = folded_keys_.find(folded);
  if (by_fold != folded_keys_.end() && by_fold->second != token.text)
    return finish_known(words_.at(by_fold->second));

  auto chars_it = chars_.find(token.text);
  if (chars_it == chars_.end()) chars_it = chars_.find(folded);
  if (chars_it != chars_.end()) {
    TagFrequencies out = chars_it->second;
    out.source = TagSource::Lexicon;
    return out;
  }

  return heuristic_tags(token, params);
}

TagFrequencies Lexicon::heuristic_tags(const Token& token,
                                       const HeuristicParams& params) const {
  TagFrequencies out;
  out.source = TagSource::Heuristic;
  if (token.text.empty()) throw ArgumentError("empty token text");

  // 1. Anything containing a digit counts as a number.
  bool has_digit = false;
  bool has_hyphen = false;
  {
    std::size_t pos = 0;
    while (pos < token.text.size()) {
      const char32_t cp = text::decode(token.text, pos);
      if (text::is_digit(cp)) has_digit = true;
      if (cp == U'-') has_hyphen = true;
    }
  }
  if (has_digit) {
    out.entries["CD"] = 1.0;
    return out;
  }

  // 2. Unlisted punctuation led by a sentence-ending character.
  {
    std::size_t pos = 0;
    const char32_t first = text::decode(token.text, pos);
    if (first == U'.' || first == U'!' || first == U'?') {
      out.entries["."] = 1.0;
      return out;
    }
  }

  // 3. Longest recognized word ending.
  {
    const std::string folded = text::lower_copy(token.text);
    const TagFrequencies* best = nullptr;
    std::size_t best_len = 0;
    for (const auto& [suffix, tags] : endings_) {
      if (folded.size() <= suffix.size()) continue;
      if (suffix.size() < best_len) continue;
      if (folded.compare(folded.size() - suffix.size(), suffix.size(),
                         suffix) != 0)
        continue;
      best = &tags;
      best_len = suffix.size();
    }
    if (best) {
      out.entries = best->entries;
      return out;
    }
  }

  // 4. Hyphenated words pattern as modifiers or nouns.
  if (has_hyphen) {
    out.entries = params.hyphen_tags;
    return out;
  }

  // 5. An internal or trailing period marks an abbreviation.
  if (token.text.find('.') != std::string::npos) {
    out.entries["ABR"] = 1.0;
    return out;
  }

  // 6. Unknown capitalized words are mostly proper nouns.
  if (token.starts_capitalized) {
    TagFrequencies base;
    base.entries = params.desperation_tags;
    base.entries.erase("NP");
    if (base.entries.empty()) base.entries = params.desperation_tags;
    TagFrequencies mixed =
        with_proper_noun_share(base, params.proper_noun_unknown_freq_fraction);
    mixed.source = TagSource::Heuristic;
    return mixed;
  }

  // 7. Desperation: an open-class guess.
  out.entries = params.desperation_tags;
  if (out.entries.empty())
    throw ConfigError("desperation tag set is empty");
  return out;
}

Lexicon Lexicon::truncated(std::size_t keep_words) const {
  Lexicon lex;
  lex.chars_ = chars_;
  lex.endings_ = endings_;
  lex.abbreviations_ = abbreviations_;
  lex.folded_abbreviations_ = folded_abbreviations_;
  for (std::size_t i = 0; i < word_order_.size(); ++i) {
    const std::string& word = word_order_[i];
    if (i >= keep_words && !is_abbreviation(word)) continue;
    lex.words_.emplace(word, words_.at(word));
    lex.word_order_.push_back(word);
    if (proper_nouns_.count(word)) lex.proper_nouns_.insert(word);
  }
  lex.rebuild_folded_keys();
  return lex;
}

TokenizerOptions Lexicon::tokenizer_options(std::string sentinel) const {
  TokenizerOptions options;
  options.sentinel = std::move(sentinel);
  options.abbreviations = abbreviations_;
  return options;
}

}  // namespace satz
