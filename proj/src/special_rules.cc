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

#include <algorithm>
#include <regex>

#include "acrokit/identifier.h"
#include "acrokit/unicode.h"

namespace acrokit {

namespace {

bool IsRomanNumeral(const std::string &word) {
  static const std::regex roman("^(X{0,3})(IX|IV|V?I{0,3})$");
  return !word.empty() && std::regex_match(word, roman);
}

// Interior of a site that is a hyphenated word sequence such as "ABC - II".
// Returns the word tokens, or nothing when the interior has another shape.
std::vector<int> HyphenatedParts(const TokenSequence &seq, const ParenSite &site) {
  std::vector<int> parts;
  for (int i = site.inside_begin(); i < site.inside_end(); ++i) {
    const bool expect_word = (i - site.inside_begin()) % 2 == 0;
    if (expect_word != seq[i].is_word) return {};
    if (!expect_word && seq[i].text != "-") return {};
    if (expect_word) parts.push_back(i);
  }
  if (parts.size() < 2 || !seq[site.inside_end() - 1].is_word) return {};
  return parts;
}

std::optional<AcronymPair> MatchHyphenated(const TokenSequence &seq,
                                           const ParenSite &site) {
  const std::vector<int> parts = HyphenatedParts(seq, site);
  if (parts.empty()) return std::nullopt;
  const std::string compound(seq.Surface(site.inside_begin(), site.inside_end()));
  if (!IsAcronym(compound)) return std::nullopt;
  const AcronymSpan acronym{site.inside_begin(), site.inside_end(), compound};

  const std::string &last = seq[parts.back()].text;
  if (IsRomanNumeral(last)) {
    std::string core;
    for (size_t k = 0; k + 1 < parts.size(); ++k) core += seq[parts[k]].text;
    auto window = WindowBefore(seq, site.open_idx, WindowWordLimit(CodePointLength(core)));
    if (!window) return std::nullopt;
    // A numeral already spelled out at the end of the long-form is kept in
    // place rather than appended a second time.
    int numeral_at = -1;
    for (int i = window->end - 1; i >= window->begin; --i) {
      if (!seq[i].is_word) continue;
      if (seq[i].text == last) numeral_at = i;
      break;
    }
    if (numeral_at >= 0) window->end = numeral_at;
    auto match = window->end > window->begin ? MatchCascade(seq, core, *window) : std::nullopt;
    if (!match) return std::nullopt;
    LongFormSpan long_form = match->long_form;
    if (numeral_at >= 0 && long_form.end == numeral_at) {
      long_form.end = numeral_at + 1;
      long_form.text = seq.Render(long_form.begin, long_form.end);
    } else {
      long_form.text += " " + last;
    }
    return AcronymPair{acronym, std::move(long_form), Rule::kSpecialRoman};
  }

  const int length = static_cast<int>(AcronymLetters(compound).size());
  auto window = WindowBefore(seq, site.open_idx, WindowWordLimit(length));
  if (!window) return std::nullopt;
  auto match = MatchCascade(seq, compound, *window);
  if (!match) return std::nullopt;
  return AcronymPair{acronym, std::move(match->long_form), Rule::kSpecialHyphen};
}

std::vector<std::string> CueTokens(const std::string &phrase) {
  std::vector<std::string> out;
  const TokenSequence seq = Tokenize(phrase);
  for (const Token &t : seq.tokens()) out.push_back(Lowercase(t.text));
  return out;
}

bool CueAt(const TokenSequence &seq, int at, const std::vector<std::string> &cue) {
  if (cue.empty() || at + static_cast<int>(cue.size()) > seq.size()) return false;
  for (size_t k = 0; k < cue.size(); ++k) {
    if (Lowercase(seq[at + k].text) != cue[k]) return false;
  }
  return true;
}

}  // namespace

std::vector<AcronymPair> ApplySpecialRules(const TokenSequence &seq,
                                           const std::vector<AcronymSpan> &unpaired,
                                           const IdentifierOptions &options) {
  std::vector<AcronymPair> pairs;
  std::vector<bool> open(seq.size(), false);
  for (const AcronymSpan &acronym : unpaired) {
    for (int i = acronym.begin; i < acronym.end; ++i) open[i] = true;
  }
  auto claim = [&](const AcronymSpan &acronym) {
    for (int i = acronym.begin; i < acronym.end; ++i) open[i] = false;
  };

  const std::vector<ParenSite> sites = FindParenSites(seq);
  for (const ParenSite &site : sites) {
    if (!open[site.inside_begin()] && seq[site.inside_begin()].is_word &&
        IsAcronym(seq[site.inside_begin()].text)) {
      continue;  // already defined by the general rules
    }
    if (auto pair = MatchHyphenated(seq, site)) {
      claim(pair->acronym);
      pairs.push_back(std::move(*pair));
    }
  }

  const std::vector<bool> parenthesized = ParenthesizedMask(seq);
  for (const CuePhrase &cue : options.cues) {
    const std::vector<std::string> tokens = CueTokens(cue.phrase);
    if (tokens.empty()) continue;

    if (cue.form == CueForm::kAcronymFirst) {
      for (const AcronymSpan &acronym : unpaired) {
        if (!open[acronym.begin] || parenthesized[acronym.begin]) continue;
        if (!CueAt(seq, acronym.end, tokens)) continue;
        const int after = acronym.end + static_cast<int>(tokens.size());
        const int limit = WindowWordLimit(CodePointLength(acronym.text));
        auto window = WindowAfter(seq, after, limit);
        if (!window) continue;
        if (auto match = MatchCascade(seq, acronym.text, *window)) {
          claim(acronym);
          pairs.push_back({acronym, std::move(match->long_form), Rule::kSpecialTemplate});
        }
      }
      continue;
    }

    // "long-form (cue ACRONYM)"
    for (const ParenSite &site : sites) {
      const int at = site.inside_begin() + static_cast<int>(tokens.size());
      if (at + 1 != site.inside_end() || !CueAt(seq, site.inside_begin(), tokens)) continue;
      auto it = std::find_if(unpaired.begin(), unpaired.end(),
                             [&](const AcronymSpan &a) { return a.begin == at; });
      if (it == unpaired.end() || !open[at]) continue;
      const int limit = WindowWordLimit(CodePointLength(it->text));
      auto window = WindowBefore(seq, site.open_idx, limit);
      if (!window) continue;
      if (auto match = MatchCascade(seq, it->text, *window)) {
        claim(*it);
        pairs.push_back({*it, std::move(match->long_form), Rule::kSpecialTemplate});
      }
    }
  }
  return pairs;
}

}  // namespace acrokit
