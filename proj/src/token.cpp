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

#include "satz/token.hpp"

#include "satz/text.hpp"

namespace satz {

namespace {

bool is_eos_punct(char32_t cp) { return cp == U'.' || cp == U'!' || cp == U'?'; }

bool is_dash(char32_t cp) {
  return cp == U'-' || cp == 0x2013 || cp == 0x2014;  // -, en dash, em dash
}

bool is_quote(char32_t cp) { return cp == U'"' || cp == U'\'' || cp == U'`'; }

char32_t peek(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) return 0;
  return text::decode(text, pos);
}

// Called with `dot` at a period that follows letters. Returns the byte
// position where the token should end: past the attached abbreviation
// periods, or `dot` itself when the period does not belong to the word.
//
// The longest extension of the form .letters .letters ... (with optional
// trailing period) that case-insensitively matches a listed abbreviation is
// attached. Failing that, sequences of single letters separated by periods
// and ending in one ("J.", "U.S.") are attached as initials.
std::size_t abbrev_extension(std::string_view text, std::size_t start,
                             std::size_t dot,
                             const std::set<std::string>& abbreviations) {
  std::vector<std::size_t> ends;      // candidate token end positions
  std::vector<std::size_t> dot_ends;  // the subset that ends with a period
  bool single_runs = true;

  // Is the leading run a single letter?
  {
    std::size_t p = start;
    char32_t first = text::decode(text, p);
    if (p != dot || !text::is_letter(first)) single_runs = false;
  }

  std::size_t p = dot;
  while (p < text.size()) {
    std::size_t q = p;
    if (text::decode(text, q) != U'.') break;
    p = q;
    ends.push_back(p);
    dot_ends.push_back(p);
    std::size_t run_cps = 0;
    while (p < text.size()) {
      q = p;
      if (!text::is_letter(text::decode(text, q))) break;
      p = q;
      ++run_cps;
    }
    if (run_cps == 0) break;
    ends.push_back(p);
    if (run_cps != 1) single_runs = false;
  }

  for (auto it = ends.rbegin(); it != ends.rend(); ++it) {
    const auto folded =
        text::lower_copy(text.substr(start, *it - start));
    if (abbreviations.count(folded)) return *it;
  }
  if (single_runs && !dot_ends.empty()) return dot_ends.back();
  return dot;
}

Token scan_wordish(std::string_view text, std::size_t& pos,
                   const std::set<std::string>& abbreviations) {
  const std::size_t start = pos;
  std::size_t p = pos;
  char32_t first_cp = 0;
  bool any_letter = false;
  bool numeric_run = true;  // nothing but digits (and grouped . ,) so far

  while (p < text.size()) {
    std::size_t q = p;
    const char32_t cp = text::decode(text, q);
    if (text::is_alnum(cp)) {
      if (p == start) first_cp = cp;
      if (!text::is_digit(cp)) {
        any_letter = true;
        numeric_run = false;
      }
      p = q;
      continue;
    }
    if (cp == U'-' && text::is_alnum(peek(text, q))) {
      numeric_run = false;
      p = q;
      continue;
    }
    if (cp == U'\'' && any_letter) {
      std::size_t r = q;
      const char32_t next = peek(text, r);
      if (!text::is_letter(next)) break;
      if (next == U's' || next == U'S') {
        // Trailing 's is split off as a possessive token; an embedded one
        // ("isn't", "o'clock") stays part of the word.
        std::size_t after = r;
        text::decode(text, after);
        if (!text::is_alnum(peek(text, after))) break;
      }
      numeric_run = false;
      p = q;
      continue;
    }
    if ((cp == U'.' || cp == U',') && numeric_run && !any_letter &&
        p != start && text::is_digit(peek(text, q))) {
      p = q;  // decimal point or digit grouping: "3.5", "1,234"
      continue;
    }
    if (cp == U'.' && any_letter) {
      p = abbrev_extension(text, start, p, abbreviations);
      break;
    }
    break;
  }

  Token token;
  token.text = std::string(text.substr(start, p - start));
  token.kind = (text::is_digit(first_cp) && !any_letter) ? TokenKind::Number
                                                         : TokenKind::Word;
  token.byte_offset = start;
  token.starts_capitalized = text::is_upper(first_cp);
  pos = p;
  return token;
}

Token scan_punct(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  std::size_t p = pos;
  const char32_t cp = text::decode(text, p);
  if (is_eos_punct(cp)) {
    // Group runs like "..." and "?!" into one token.
    while (p < text.size()) {
      std::size_t q = p;
      if (!is_eos_punct(text::decode(text, q))) break;
      p = q;
    }
  } else if (is_dash(cp)) {
    while (p < text.size()) {
      std::size_t q = p;
      if (!is_dash(text::decode(text, q))) break;
      p = q;
    }
  } else if (is_quote(cp)) {
    // Only identical quote characters group ("``", "''").
    while (p < text.size()) {
      std::size_t q = p;
      if (text::decode(text, q) != cp) break;
      p = q;
    }
  }
  Token token;
  token.text = std::string(text.substr(start, p - start));
  token.kind = TokenKind::Punct;
  token.byte_offset = start;
  pos = p;
  return token;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text,
                            const TokenizerOptions& options) {
  std::set<std::string> abbreviations;
  for (const auto& a : options.abbreviations)
    abbreviations.insert(text::lower_copy(a));

  const std::string_view sentinel = options.sentinel;
  bool sentinel_ends_alnum = false;
  if (!sentinel.empty()) {
    std::string_view tail = sentinel;
    std::size_t p = 0, last = 0;
    while (p < tail.size()) {
      last = p;
      text::decode(tail, p);
    }
    std::size_t q = last;
    sentinel_ends_alnum = text::is_alnum(text::decode(tail, q));
  }

  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t q = pos;
    const char32_t cp = text::decode(text, q);
    if (text::is_space(cp)) {
      pos = q;
      continue;
    }
    if (!sentinel.empty() && text.substr(pos).starts_with(sentinel)) {
      // A sentinel spelled with a trailing alphanumeric must not match a
      // prefix of a longer word.
      const bool boundary =
          !sentinel_ends_alnum ||
          !text::is_alnum(peek(text, pos + sentinel.size()));
      if (boundary) {
        Token token;
        token.text = std::string(sentinel);
        token.kind = TokenKind::Sentinel;
        token.byte_offset = pos;
        tokens.push_back(std::move(token));
        pos += sentinel.size();
        continue;
      }
    }
    if (text::is_alnum(cp)) {
      tokens.push_back(scan_wordish(text, pos, abbreviations));
      continue;
    }
    if (cp == U'\'') {
      // Possessive marker split off by scan_wordish: emit "'s" whole.
      std::size_t r = q;
      const char32_t next = peek(text, r);
      if (next == U's' || next == U'S') {
        text::decode(text, r);
        if (!text::is_alnum(peek(text, r))) {
          Token token;
          token.text = std::string(text.substr(pos, r - pos));
          token.kind = TokenKind::Word;
          token.byte_offset = pos;
          tokens.push_back(std::move(token));
          pos = r;
          continue;
        }
      }
    }
    tokens.push_back(scan_punct(text, pos));
  }
  return tokens;
}

std::vector<Token> tokenize(std::string_view text, std::string_view sentinel) {
  TokenizerOptions options;
  options.sentinel = std::string(sentinel);
  return tokenize(text, options);
}

bool is_candidate_token(const Token& token) {
  if (token.text.empty()) return false;
  if (token.kind == TokenKind::Punct) {
    std::size_t p = 0;
    return is_eos_punct(text::decode(token.text, p));
  }
  return token.kind == TokenKind::Word && token.text.back() == '.';
}

std::vector<CandidateSite> find_candidates(const std::vector<Token>& tokens) {
  std::vector<CandidateSite> sites;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& token = tokens[i];
    if (!is_candidate_token(token)) continue;
    char32_t trailing = U'.';
    if (token.kind == TokenKind::Punct) {
      std::size_t p = 0;
      trailing = text::decode(token.text, p);
    }
    sites.push_back(CandidateSite{i, trailing});
  }
  return sites;
}

}  // namespace satz
