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

#include "satz/text.hpp"

#include "satz/error.hpp"

namespace satz::text {

char32_t decode(std::string_view s, std::size_t& pos) {
  if (pos >= s.size()) throw DecodeError("decode past end of input", pos);
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) {
    ++pos;
    return b0;
  }
  int extra;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    extra = 1;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    extra = 2;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    extra = 3;
    cp = b0 & 0x07;
  } else {
    throw DecodeError("invalid UTF-8 lead byte", pos);
  }
  if (pos + extra >= s.size())
    throw DecodeError("truncated UTF-8 sequence", pos);
  for (int i = 1; i <= extra; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80)
      throw DecodeError("invalid UTF-8 continuation byte", pos + i);
    cp = (cp << 6) | (b & 0x3F);
  }
  // Reject overlong encodings and out-of-range values.
  static constexpr char32_t kMin[4] = {0, 0x80, 0x800, 0x10000};
  if (cp < kMin[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
    throw DecodeError("invalid UTF-8 code point", pos);
  pos += extra + 1;
  return cp;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_space(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\f':
    case U'\v':
    case 0x00A0:  // no-break space
    case 0x2028:  // line separator
    case 0x2029:  // paragraph separator
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;  // en quad .. hair space
  }
}

bool is_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

bool is_letter(char32_t cp) {
  if (cp < 0x80)
    return (cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z');
  if (cp >= 0xC0 && cp <= 0xFF) return cp != 0xD7 && cp != 0xF7;
  if (cp >= 0x100 && cp <= 0x17F) return true;
  // Treat other non-ASCII, non-punctuation code points as letters so that
  // unexpected scripts stay inside word tokens instead of splitting them.
  if (cp >= 0x2000 && cp <= 0x206F) return false;  // general punctuation
  if (cp >= 0xA0 && cp <= 0xBF) return false;      // Latin-1 punctuation
  return cp > 0x7F && !is_space(cp);
}

bool is_upper(char32_t cp) { return cp != to_lower(cp); }

bool is_lower(char32_t cp) { return cp != to_upper(cp); }

char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  // Latin-1 Supplement: À..Þ map to à..þ, except the multiplication sign.
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp >= 0x100 && cp <= 0x137) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp >= 0x139 && cp <= 0x148) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp >= 0x14A && cp <= 0x177) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp == 0x178) return 0xFF;  // Ÿ -> ÿ
  if (cp >= 0x179 && cp <= 0x17E) return (cp % 2 == 1) ? cp + 1 : cp;
  return cp;
}

char32_t to_upper(char32_t cp) {
  if (cp >= U'a' && cp <= U'z') return cp - 0x20;
  // Latin-1 Supplement: à..þ map to À..Þ except the division sign; ß has no
  // single-code-point uppercase and stays as-is.
  if (cp >= 0xE0 && cp <= 0xFE && cp != 0xF7) return cp - 0x20;
  if (cp == 0xFF) return 0x178;  // ÿ -> Ÿ
  if (cp >= 0x101 && cp <= 0x137) return (cp % 2 == 1) ? cp - 1 : cp;
  if (cp >= 0x13A && cp <= 0x148) return (cp % 2 == 0) ? cp - 1 : cp;
  if (cp >= 0x14B && cp <= 0x177) return (cp % 2 == 1) ? cp - 1 : cp;
  if (cp >= 0x17A && cp <= 0x17E) return (cp % 2 == 0) ? cp - 1 : cp;
  return cp;
}

namespace {

template <char32_t (*Convert)(char32_t)>
std::string convert_copy(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) append_utf8(out, Convert(decode(s, pos)));
  return out;
}

}  // namespace

std::string lower_copy(std::string_view s) { return convert_copy<to_lower>(s); }

std::string upper_copy(std::string_view s) { return convert_copy<to_upper>(s); }

bool starts_upper(std::string_view s) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  return is_upper(decode(s, pos));
}

}  // namespace satz::text
