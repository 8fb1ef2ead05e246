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
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace satz {

enum class TokenKind {
  Word,      // letters, possibly with hyphens, apostrophes or periods
  Number,    // digit-led tokens of digits plus internal . and ,
  Punct,     // punctuation run
  Sentinel,  // boundary marker, e.g. "</s>"
};

struct Token {
  std::string text;
  TokenKind kind = TokenKind::Word;
  std::size_t byte_offset = 0;       // start position in the source text
  bool starts_capitalized = false;   // first code point is uppercase

  bool operator==(const Token&) const = default;
};

struct TokenizerOptions {
  std::string sentinel = "</s>";
  // Known abbreviations ("mr.", "u.s.", ...). Matching is case-insensitive,
  // so entries may be given in any case. A period following a word is only
  // attached to it when the result is a listed abbreviation or matches the
  // single-letter pattern ("J.", "U.S.").
  std::set<std::string> abbreviations;
};

std::vector<Token> tokenize(std::string_view text,
                            const TokenizerOptions& options);

// Convenience overload with no abbreviation list.
std::vector<Token> tokenize(std::string_view text,
                            std::string_view sentinel = "</s>");

// A place in the token stream where a sentence boundary may occur: a
// punctuation token starting with '.', '!' or '?', or a word token that
// ends in a period (an abbreviation).
struct CandidateSite {
  std::size_t index = 0;        // token index
  char32_t trailing_char = 0;   // '.', '!' or '?'

  bool operator==(const CandidateSite&) const = default;
};

bool is_candidate_token(const Token& token);

std::vector<CandidateSite> find_candidates(const std::vector<Token>& tokens);

}  // namespace satz
