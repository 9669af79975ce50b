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

#include "acrokit/text.h"

#include <algorithm>
#include <utility>

#include "acrokit/unicode.h"

namespace acrokit {

namespace {

bool IsDetached(char32_t cp) {
  switch (cp) {
    case U'(': case U')': case U';': case U'!': case U'?': case U'"':
    case U'“': case U'”':
      return true;
    default:
      return false;
  }
}

bool IsHyphen(char32_t cp) {
  return cp == U'-' || cp == U'‐' || cp == U'‑';
}

class Splitter {
 public:
  Splitter(std::string_view text, std::vector<Token> *out)
      : text_(text), out_(out) {}

  // Splits one whitespace-free chunk.
  void Chunk(const std::vector<CodePointAt> &cps) {
    int piece_begin = 0;
    for (int k = 0; k < static_cast<int>(cps.size()); ++k) {
      const char32_t cp = cps[k].cp;
      bool split = IsDetached(cp) || IsHyphen(cp);
      if (cp == U',' || cp == U':') {
        const bool digits_around = k > 0 && k + 1 < static_cast<int>(cps.size()) &&
                                   IsDigit(cps[k - 1].cp) && IsDigit(cps[k + 1].cp);
        split = !digits_around;
      }
      if (!split) continue;
      Piece(cps, piece_begin, k);
      Emit(cps[k].start, cps[k].end);
      piece_begin = k + 1;
    }
    Piece(cps, piece_begin, static_cast<int>(cps.size()));
  }

 private:
  // Emits cps[begin, end), detaching trailing periods.
  void Piece(const std::vector<CodePointAt> &cps, int begin, int end) {
    if (begin >= end) return;
    int body_end = end;
    while (body_end > begin && cps[body_end - 1].cp == U'.') --body_end;
    if (body_end == end || body_end == begin) {
      Emit(cps[begin].start, cps[end - 1].end);
      return;
    }
    bool inner_period = false;
    for (int k = begin; k < body_end; ++k) inner_period |= cps[k].cp == U'.';
    if (inner_period && IsLetter(cps[body_end - 1].cp)) {
      Emit(cps[begin].start, cps[end - 1].end);
      return;
    }
    Emit(cps[begin].start, cps[body_end - 1].end);
    Emit(cps[body_end].start, cps[end - 1].end);
  }

  void Emit(size_t start, size_t end) {
    Token token;
    token.text = std::string(text_.substr(start, end - start));
    token.start = start;
    token.end = end;
    for (char32_t cp : DecodeUtf8(token.text)) {
      if (IsAlnum(cp)) {
        token.is_word = true;
        break;
      }
    }
    out_->push_back(std::move(token));
  }

  std::string_view text_;
  std::vector<Token> *out_;
};

}  // namespace

TokenSequence::TokenSequence(std::string source, std::vector<Token> tokens)
    : source_(std::move(source)), tokens_(std::move(tokens)) {}

std::string_view TokenSequence::GapBefore(int i) const {
  const size_t from = i == 0 ? 0 : tokens_[i - 1].end;
  const size_t to = i == size() ? source_.size() : tokens_[i].start;
  return std::string_view(source_).substr(from, to - from);
}

bool TokenSequence::ParagraphBreakBefore(int i) const {
  if (i <= 0 || i >= size()) return false;
  const std::string_view gap = GapBefore(i);
  return std::count(gap.begin(), gap.end(), '\n') >= 2;
}

bool TokenSequence::IsSentenceEnd(int i) const {
  const std::string &t = tokens_[i].text;
  if (t == "!" || t == "?") return true;
  return !t.empty() && t.find_first_not_of('.') == std::string::npos;
}

std::pair<int, int> TokenSequence::SentenceAround(int i) const {
  int begin = i;
  while (begin > 0 && !IsSentenceEnd(begin - 1) && !ParagraphBreakBefore(begin)) {
    --begin;
  }
  int end = i;
  while (end < size()) {
    const bool final = IsSentenceEnd(end);
    ++end;
    if (final || ParagraphBreakBefore(end)) break;
  }
  return {begin, end};
}

std::string TokenSequence::Render(int begin, int end) const {
  std::string out;
  for (int i = begin; i < end; ++i) {
    if (i > begin) out += ' ';
    out += tokens_[i].text;
  }
  return out;
}

std::string_view TokenSequence::Surface(int begin, int end) const {
  if (begin >= end) return {};
  const size_t from = tokens_[begin].start;
  return std::string_view(source_).substr(from, tokens_[end - 1].end - from);
}

TokenSequence Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  Splitter splitter(text, &tokens);

  std::vector<CodePointAt> chunk;
  for (const CodePointAt &c : DecodeUtf8WithOffsets(text)) {
    if (IsSpace(c.cp)) {
      if (!chunk.empty()) splitter.Chunk(chunk);
      chunk.clear();
    } else {
      chunk.push_back(c);
    }
  }
  if (!chunk.empty()) splitter.Chunk(chunk);
  return TokenSequence(std::string(text), std::move(tokens));
}

std::string Detokenize(const TokenSequence &seq) {
  std::string out;
  for (int i = 0; i < seq.size(); ++i) {
    out += seq.GapBefore(i);
    out += seq[i].text;
  }
  out += seq.GapBefore(seq.size());
  return out;
}

std::vector<ParenSite> FindParenSites(const TokenSequence &seq) {
  struct Open {
    int idx;
    bool has_child;
  };
  std::vector<Open> stack;
  std::vector<ParenSite> sites;
  for (int i = 0; i < seq.size(); ++i) {
    const std::string &t = seq[i].text;
    if (t == "(") {
      stack.push_back({i, false});
    } else if (t == ")" && !stack.empty()) {
      const Open open = stack.back();
      stack.pop_back();
      if (!stack.empty()) stack.back().has_child = true;
      const int inside = i - open.idx - 1;
      if (open.has_child || inside == 0 || inside > kMaxParenInside) continue;
      sites.push_back({open.idx, i, open.idx - 1});
    }
  }
  std::sort(sites.begin(), sites.end(),
            [](const ParenSite &a, const ParenSite &b) { return a.open_idx < b.open_idx; });
  return sites;
}

std::vector<bool> ParenthesizedMask(const TokenSequence &seq) {
  std::vector<bool> mask(seq.size(), false);
  std::vector<int> stack;
  for (int i = 0; i < seq.size(); ++i) {
    if (seq[i].text == "(") {
      stack.push_back(i);
    } else if (seq[i].text == ")" && !stack.empty()) {
      for (int k = stack.back() + 1; k < i; ++k) mask[k] = true;
      stack.pop_back();
    }
  }
  return mask;
}

}  // namespace acrokit
