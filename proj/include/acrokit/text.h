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

#ifndef ACROKIT_TEXT_H_
#define ACROKIT_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace acrokit {

// A token with byte offsets into the source text.
struct Token {
  std::string text;
  size_t start = 0;  // inclusive
  size_t end = 0;    // exclusive
  bool is_word = false;  // contains a letter or digit

  bool operator==(const Token &other) const = default;
};

// Tokenized text. Tokens are sorted, non-overlapping and only whitespace
// separates consecutive tokens, so the source can be rebuilt from the tokens
// and the gaps between them.
class TokenSequence {
 public:
  TokenSequence() = default;
  TokenSequence(std::string source, std::vector<Token> tokens);

  const std::string &source() const { return source_; }
  const std::vector<Token> &tokens() const { return tokens_; }
  const Token &operator[](int i) const { return tokens_[i]; }
  int size() const { return static_cast<int>(tokens_.size()); }
  bool empty() const { return tokens_.empty(); }

  // Whitespace between token i-1 and token i (leading whitespace for i = 0,
  // trailing whitespace for i = size()).
  std::string_view GapBefore(int i) const;

  // True when a blank line separates token i from the token before it.
  bool ParagraphBreakBefore(int i) const;

  // True for tokens that end a sentence: runs of periods, "!" and "?".
  bool IsSentenceEnd(int i) const;

  // Token range [begin, end) of the sentence containing token i.
  std::pair<int, int> SentenceAround(int i) const;

  // Joins the texts of tokens [begin, end) with single spaces.
  std::string Render(int begin, int end) const;

  // Source bytes covered by tokens [begin, end).
  std::string_view Surface(int begin, int end) const;

 private:
  std::string source_;
  std::vector<Token> tokens_;
};

// Splits on whitespace, detaches the punctuation ( ) , ; : ! ? " and
// trailing periods, and emits every hyphen as its own token. Commas, colons
// and periods between two digits stay inside the token ("3,781,739").
// A trailing period stays attached when the token already holds a period
// ("i.e.", "U.S.").
TokenSequence Tokenize(std::string_view text);

// Rebuilds the source from token texts and the recorded gaps.
std::string Detokenize(const TokenSequence &seq);

// A balanced, innermost "( ... )" pair.
struct ParenSite {
  int open_idx = 0;
  int close_idx = 0;
  int before_idx = -1;  // token preceding "(", -1 at the start of the text

  int inside_begin() const { return open_idx + 1; }
  int inside_end() const { return close_idx; }
  int inside_size() const { return close_idx - open_idx - 1; }

  bool operator==(const ParenSite &other) const = default;
};

// Maximum number of tokens between the parentheses of a site.
inline constexpr int kMaxParenInside = 20;

// Finds innermost balanced parenthesis pairs with a non-empty interior of at
// most kMaxParenInside tokens. Pairs that enclose another pair are skipped,
// as are unmatched parentheses. Sites are ordered by open_idx.
std::vector<ParenSite> FindParenSites(const TokenSequence &seq);

// For every token, whether it lies strictly inside some balanced pair of
// parentheses (at any nesting depth).
std::vector<bool> ParenthesizedMask(const TokenSequence &seq);

}  // namespace acrokit

#endif  // ACROKIT_TEXT_H_
