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
#include <string>
#include <string_view>

// Minimal UTF-8 handling and character classification. Case pairs cover
// ASCII, Latin-1 Supplement and Latin Extended-A, which is enough for the
// Western European corpora this toolkit targets; anything else passes
// through unchanged.

namespace satz::text {

// Decodes the code point starting at `pos` and advances `pos` past it.
// Throws DecodeError on invalid sequences.
char32_t decode(std::string_view s, std::size_t& pos);

void append_utf8(std::string& out, char32_t cp);

bool is_space(char32_t cp);
bool is_digit(char32_t cp);
bool is_letter(char32_t cp);
bool is_upper(char32_t cp);
bool is_lower(char32_t cp);

char32_t to_lower(char32_t cp);
char32_t to_upper(char32_t cp);

inline bool is_alnum(char32_t cp) { return is_letter(cp) || is_digit(cp); }

// Letter-wise case conversion of a whole UTF-8 string; non-letters are
// copied through untouched.
std::string lower_copy(std::string_view s);
std::string upper_copy(std::string_view s);

// True if the first code point of `s` is an uppercase letter.
bool starts_upper(std::string_view s);

}  // namespace satz::text
