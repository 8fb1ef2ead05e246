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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace satz {

// Word pools the generator assembles sentences from. The standard pools
// line up with the bundled dictionaries: common words are listed there,
// surnames and exclamations deliberately are not (they exercise the
// unknown-word heuristics).
struct GeneratorVocabulary {
  std::vector<std::string> pronouns;       // capitalized subjects
  std::vector<std::string> nouns;
  std::vector<std::string> verbs;          // past tense
  std::vector<std::string> adjectives;
  std::vector<std::string> continuations;  // lowercase, follow "..."
  std::vector<std::string> prepositions;
  std::vector<std::string> titles;         // listed abbreviations ("Dr.")
  std::vector<std::string> surnames;
  std::vector<std::string> companies;      // known proper nouns
  std::vector<std::string> company_suffixes;  // listed abbreviations ("Inc.")
  std::vector<std::string> exclamations;   // quoted one-word shouts
  std::vector<std::string> places;         // known proper nouns

  static GeneratorVocabulary standard();
};

// Every sentence contributes exactly one true boundary; the mid-sentence
// feature rates each add a non-boundary candidate, so the corpus lower
// bound is roughly 1 / (1 + sum of mid rates).
struct GeneratorSpec {
  std::size_t sentences = 500;
  std::uint64_t seed = 0;

  // Mid-sentence features (each adds a candidate with label 0).
  double titled_name_rate = 0.25;   // "Dr. Watson" as the subject
  double mid_ellipsis_rate = 0.05;  // "... then" inside the sentence
  double mid_quote_rate = 0.04;     // '"Stop!" and' inside the sentence
  // Adds a decimal number ("5.4"), which is one token and no candidate.
  double decimal_rate = 0.10;

  // How sentences end (draws are exclusive; remainder ends with a plain
  // period). Every style yields exactly one candidate with label 1.
  double eos_abbrev_rate = 0.08;    // "... Acme Inc. </s>"
  double quote_eos_rate = 0.06;     // '... "Enough". </s>'
  double ellipsis_eos_rate = 0.04;  // "... the door... </s>"
  double question_eos_rate = 0.05;  // "Was the door safe? </s>"

  std::size_t max_extra_phrases = 1;  // sentence-length variation
  std::string sentinel = "</s>";
  GeneratorVocabulary vocabulary = GeneratorVocabulary::standard();
};

struct GeneratedCorpus {
  std::string text;  // one sentence per line, sentinel after each boundary
  std::size_t sentences = 0;
  std::size_t candidates = 0;  // exact ground truth by construction
  std::size_t boundaries = 0;
  double lower_bound = 0.0;    // boundaries / candidates
  // Feature breakdown, mostly for the gen subcommand's report.
  std::size_t titled_names = 0;
  std::size_t mid_ellipses = 0;
  std::size_t mid_quotes = 0;
  std::size_t decimals = 0;
};

GeneratedCorpus generate_corpus(const GeneratorSpec& spec);
GeneratedCorpus generate_corpus(GeneratorSpec spec, std::uint64_t seed);

}  // namespace satz
