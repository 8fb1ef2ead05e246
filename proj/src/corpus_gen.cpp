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

#include "satz/corpus_gen.hpp"

#include <random>

#include "satz/error.hpp"
#include "satz/random.hpp"

namespace satz {

GeneratorVocabulary GeneratorVocabulary::standard() {
  GeneratorVocabulary v;
  v.pronouns = {"He", "She", "They", "We"};
  v.nouns = {"plan",   "door",   "house",  "report", "office",
             "market", "river",  "garden", "letter", "meeting",
             "price",  "team",   "road",   "paper",  "window"};
  v.verbs = {"said",   "walked", "moved",   "opened", "fixed",
             "watched", "called", "crossed", "reached"};
  v.adjectives = {"safe", "old", "new", "quiet", "large", "small", "empty",
                  "dark"};
  v.continuations = {"then", "later", "again", "slowly", "quietly"};
  v.prepositions = {"to", "in", "on", "at", "with", "for", "under", "over",
                    "near"};
  v.titles = {"Dr.", "Mr.", "Mrs.", "Prof.", "Col.", "Sen.", "Gen."};
  // Surnames and exclamations are chosen to stay out of the stock lexicon
  // and off its suffix table, so they exercise the capitalized-unknown rule.
  v.surnames = {"Watson", "Morstan", "Gray", "Hyde", "Marlow", "Quint"};
  v.companies = {"Acme", "Apex", "Orion"};
  v.company_suffixes = {"Inc.", "Corp.", "Co.", "Ltd."};
  v.exclamations = {"Enough", "Stop", "Wait", "Hush"};
  v.places = {"London", "Berkeley", "Dover"};
  return v;
}

namespace {

enum class Ending { Normal, Abbrev, QuoteEos, EllipsisEos, Question };

void check_rate(double rate, const char* name) {
  if (!(rate >= 0.0 && rate <= 1.0))
    throw ArgumentError(std::string(name) + " must be in [0, 1]");
}

void check_pool(const std::vector<std::string>& pool, const char* name) {
  if (pool.empty())
    throw ArgumentError(std::string("generator vocabulary pool '") + name +
                        "' is empty");
}

const std::string& pick(std::mt19937_64& gen,
                        const std::vector<std::string>& pool) {
  return pool[rng::bounded(gen, pool.size())];
}

}  // namespace

GeneratedCorpus generate_corpus(const GeneratorSpec& spec) {
  if (spec.sentences == 0)
    throw ArgumentError("sentence count must be positive");
  check_rate(spec.titled_name_rate, "titled_name_rate");
  check_rate(spec.mid_ellipsis_rate, "mid_ellipsis_rate");
  check_rate(spec.mid_quote_rate, "mid_quote_rate");
  check_rate(spec.decimal_rate, "decimal_rate");
  check_rate(spec.eos_abbrev_rate, "eos_abbrev_rate");
  check_rate(spec.quote_eos_rate, "quote_eos_rate");
  check_rate(spec.ellipsis_eos_rate, "ellipsis_eos_rate");
  check_rate(spec.question_eos_rate, "question_eos_rate");
  if (spec.eos_abbrev_rate + spec.quote_eos_rate + spec.ellipsis_eos_rate +
          spec.question_eos_rate >
      1.0)
    throw ArgumentError("sentence-ending rates must sum to at most 1");
  const GeneratorVocabulary& v = spec.vocabulary;
  check_pool(v.pronouns, "pronouns");
  check_pool(v.nouns, "nouns");
  check_pool(v.verbs, "verbs");
  check_pool(v.adjectives, "adjectives");
  check_pool(v.continuations, "continuations");
  check_pool(v.prepositions, "prepositions");
  check_pool(v.titles, "titles");
  check_pool(v.surnames, "surnames");
  check_pool(v.companies, "companies");
  check_pool(v.company_suffixes, "company_suffixes");
  check_pool(v.exclamations, "exclamations");
  check_pool(v.places, "places");

  std::mt19937_64 gen(spec.seed);
  GeneratedCorpus corpus;
  corpus.sentences = spec.sentences;

  std::vector<std::string> words;
  for (std::size_t s = 0; s < spec.sentences; ++s) {
    words.clear();

    Ending ending = Ending::Normal;
    {
      const double u = rng::unit_uniform(gen);
      double edge = spec.eos_abbrev_rate;
      if (u < edge) {
        ending = Ending::Abbrev;
      } else if (u < (edge += spec.quote_eos_rate)) {
        ending = Ending::QuoteEos;
      } else if (u < (edge += spec.ellipsis_eos_rate)) {
        ending = Ending::EllipsisEos;
      } else if (u < (edge += spec.question_eos_rate)) {
        ending = Ending::Question;
      }
    }
    const bool titled = rng::bernoulli(gen, spec.titled_name_rate);
    const bool is_question = ending == Ending::Question;
    // The question template has no room for mid-sentence clauses.
    const bool mid_quote =
        !is_question && rng::bernoulli(gen, spec.mid_quote_rate);
    const bool mid_ellipsis =
        !is_question && rng::bernoulli(gen, spec.mid_ellipsis_rate);
    const bool decimal =
        ending == Ending::Normal && rng::bernoulli(gen, spec.decimal_rate);

    if (titled) ++corpus.titled_names;
    if (mid_quote) ++corpus.mid_quotes;
    if (mid_ellipsis) ++corpus.mid_ellipses;
    if (decimal) ++corpus.decimals;
    corpus.candidates += 1 + (titled ? 1 : 0) + (mid_quote ? 1 : 0) +
                         (mid_ellipsis ? 1 : 0);
    ++corpus.boundaries;

    if (is_question) {
      words.push_back("Was");
      if (titled) {
        words.push_back(pick(gen, v.titles));
        words.push_back(pick(gen, v.surnames));
      } else {
        words.push_back("the");
        words.push_back(pick(gen, v.nouns));
      }
      words.push_back(pick(gen, v.adjectives) + "?");
    } else {
      if (titled) {
        words.push_back(pick(gen, v.titles));
        words.push_back(pick(gen, v.surnames));
      } else if (rng::bernoulli(gen, 0.5)) {
        words.push_back(pick(gen, v.pronouns));
      } else {
        words.push_back("The");
        words.push_back(pick(gen, v.nouns));
      }

      words.push_back(pick(gen, v.verbs));
      if (mid_quote) {
        words.push_back("\"" + pick(gen, v.exclamations) + "!\"");
        words.push_back("and");
        words.push_back(pick(gen, v.verbs));
      }
      if (mid_ellipsis) {
        words.push_back("the");
        words.push_back(pick(gen, v.nouns) + "...");
        words.push_back(pick(gen, v.continuations));
        words.push_back(pick(gen, v.verbs));
      }

      switch (ending) {
        case Ending::Normal: {
          if (decimal) {
            words.push_back("to");
            words.push_back(std::to_string(1 + rng::bounded(gen, 98)) + "." +
                            std::to_string(rng::bounded(gen, 10)));
            words.push_back("percent");
          } else {
            switch (rng::bounded(gen, 5)) {
              case 0:
                words.push_back("the");
                words.push_back(pick(gen, v.nouns));
                break;
              case 1:
                words.push_back("a");
                words.push_back(pick(gen, v.nouns));
                break;
              case 2:
                words.push_back("the");
                words.push_back(pick(gen, v.adjectives));
                words.push_back(pick(gen, v.nouns));
                break;
              case 3:
                words.push_back(pick(gen, v.prepositions));
                words.push_back("the");
                words.push_back(pick(gen, v.nouns));
                break;
              default:
                words.push_back("in");
                words.push_back(pick(gen, v.places));
                break;
            }
          }
          const std::size_t extra =
              spec.max_extra_phrases == 0
                  ? 0
                  : rng::bounded(gen, spec.max_extra_phrases + 1);
          for (std::size_t e = 0; e < extra; ++e) {
            words.push_back(pick(gen, v.prepositions));
            words.push_back("the");
            words.push_back(pick(gen, v.nouns));
          }
          words.back() += ".";
          break;
        }
        case Ending::Abbrev:
          words.push_back("for");
          words.push_back(pick(gen, v.companies));
          words.push_back(pick(gen, v.company_suffixes));
          break;
        case Ending::QuoteEos:
          words.push_back("\"" + pick(gen, v.exclamations) + "\".");
          break;
        case Ending::EllipsisEos:
          words.push_back("the");
          words.push_back(pick(gen, v.nouns) + "...");
          break;
        case Ending::Question:
          break;  // handled above
      }
    }

    for (std::size_t w = 0; w < words.size(); ++w) {
      if (w) corpus.text.push_back(' ');
      corpus.text.append(words[w]);
    }
    corpus.text.push_back(' ');
    corpus.text.append(spec.sentinel);
    corpus.text.push_back('\n');
  }

  corpus.lower_bound = static_cast<double>(corpus.boundaries) /
                       static_cast<double>(corpus.candidates);
  return corpus;
}

GeneratedCorpus generate_corpus(GeneratorSpec spec, std::uint64_t seed) {
  spec.seed = seed;
  return generate_corpus(spec);
}

}  // namespace satz
