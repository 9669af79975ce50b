// Copyright 2026 The Acrokit Authors.
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

#include "acrokit/unicode.h"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace acrokit {

std::vector<char32_t> DecodeUtf8(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  const auto *s = reinterpret_cast<const uint8_t *>(text.data());
  int32_t i = 0;
  const auto length = static_cast<int32_t>(text.size());
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    out.push_back(c < 0 ? U'\uFFFD' : static_cast<char32_t>(c));
  }
  return out;
}

std::vector<CodePointAt> DecodeUtf8WithOffsets(std::string_view text) {
  std::vector<CodePointAt> out;
  out.reserve(text.size());
  const auto *s = reinterpret_cast<const uint8_t *>(text.data());
  int32_t i = 0;
  const auto length = static_cast<int32_t>(text.size());
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    out.push_back({c < 0 ? U'\uFFFD' : static_cast<char32_t>(c),
                   static_cast<size_t>(start), static_cast<size_t>(i)});
  }
  return out;
}

std::string EncodeUtf8(char32_t cp) {
  uint8_t buf[U8_MAX_LENGTH];
  int32_t n = 0;
  UBool error = false;
  U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(cp), error);
  if (error) return "\xEF\xBF\xBD";
  return std::string(reinterpret_cast<char *>(buf), n);
}

bool IsUpper(char32_t cp) {
  const int8_t type = u_charType(static_cast<UChar32>(cp));
  return type == U_UPPERCASE_LETTER || type == U_TITLECASE_LETTER;
}

bool IsLetter(char32_t cp) { return u_isalpha(static_cast<UChar32>(cp)); }
bool IsDigit(char32_t cp) { return u_isdigit(static_cast<UChar32>(cp)); }
bool IsAlnum(char32_t cp) { return IsLetter(cp) || IsDigit(cp); }
bool IsSpace(char32_t cp) { return u_isUWhiteSpace(static_cast<UChar32>(cp)); }

char32_t ToLower(char32_t cp) {
  return static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp)));
}

std::string Lowercase(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : DecodeUtf8(text)) out += EncodeUtf8(ToLower(cp));
  return out;
}

int CodePointLength(std::string_view text) {
  const auto *s = reinterpret_cast<const uint8_t *>(text.data());
  int32_t i = 0;
  const auto length = static_cast<int32_t>(text.size());
  int count = 0;
  while (i < length) {
    U8_FWD_1(s, i, length);
    ++count;
  }
  return count;
}

OffsetMap::OffsetMap(std::string_view text) : code_point_at_(text.size() + 1) {
  const auto *s = reinterpret_cast<const uint8_t *>(text.data());
  int32_t i = 0;
  const auto length = static_cast<int32_t>(text.size());
  int count = 0;
  while (i < length) {
    const int32_t start = i;
    U8_FWD_1(s, i, length);
    for (int32_t b = start; b < i; ++b) code_point_at_[b] = count;
    ++count;
  }
  code_point_at_[text.size()] = count;
}

int OffsetMap::ToCodePoint(size_t byte) const {
  return code_point_at_.at(byte);
}

}  // namespace acrokit
