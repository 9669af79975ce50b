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

#ifndef ACROKIT_UNICODE_H_
#define ACROKIT_UNICODE_H_

#include <string>
#include <string_view>
#include <vector>

namespace acrokit {

// Code points of a UTF-8 string. Malformed sequences decode to U+FFFD.
std::vector<char32_t> DecodeUtf8(std::string_view text);
std::string EncodeUtf8(char32_t cp);

struct CodePointAt {
  char32_t cp;
  size_t start;  // byte offsets
  size_t end;
};

// Like DecodeUtf8, keeping the byte range of every code point.
std::vector<CodePointAt> DecodeUtf8WithOffsets(std::string_view text);

bool IsUpper(char32_t cp);  // Lu or Lt
bool IsLetter(char32_t cp);
bool IsDigit(char32_t cp);
bool IsAlnum(char32_t cp);
bool IsSpace(char32_t cp);
char32_t ToLower(char32_t cp);

std::string Lowercase(std::string_view text);

// Number of code points in a UTF-8 string.
int CodePointLength(std::string_view text);

// Maps byte offsets into code point offsets for one string.
class OffsetMap {
 public:
  explicit OffsetMap(std::string_view text);

  // byte must be a code point boundary in [0, size].
  int ToCodePoint(size_t byte) const;

 private:
  std::vector<int> code_point_at_;
};

}  // namespace acrokit

#endif  // ACROKIT_UNICODE_H_
