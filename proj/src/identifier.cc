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

#include "acrokit/identifier.h"

#include <algorithm>
#include <map>
#include <utility>

#include "acrokit/unicode.h"

namespace acrokit {

namespace {

constexpr std::string_view kRuleNames[] = {
    "InitialCapitals", "CharacterMatch", "BoundedSchwartz",
    "SpecialTemplate", "SpecialHyphen",  "SpecialRoman",
};

bool IsCapitalized(std::string_view word) {
  const std::vector<char32_t> cps = DecodeUtf8(word);
  return !cps.empty() && IsUpper(cps.front());
}

char32_t Initial(std::string_view word) {
  const std::vector<char32_t> cps = DecodeUtf8(word);
  return cps.empty() ? U'\0' : ToLower(cps.front());
}

std::vector<int> WordsIn(const TokenSequence &seq, const CandidateWindow &window) {
  std::vector<int> words;
  for (int i = window.begin; i < window.end; ++i) {
    if (seq[i].is_word) words.push_back(i);
  }
  return words;
}

LongFormSpan MakeSpan(const TokenSequence &seq, int begin, int end) {
  return {begin, end, seq.Render(begin, end)};
}

// Right-to-left subsequence search over words[0, count). Returns the indices
// (into words) of the first and last contributing words.
std::optional<std::pair<int, int>> Schwartz(
    const std::vector<std::u32string> &chars, int count,
    const std::u32string &letters) {
  int w = count - 1;
  int c = w >= 0 ? static_cast<int>(chars[w].size()) - 1 : -1;
  int first_word = -1;
  int last_word = -1;
  for (int s = static_cast<int>(letters.size()) - 1; s >= 0; --s) {
    const char32_t target = letters[s];
    bool found = false;
    while (w >= 0 && !found) {
      while (c >= 0) {
        const bool word_start = c == 0 || !IsAlnum(chars[w][c - 1]);
        if (chars[w][c] == target && (s > 0 || word_start)) {
          found = true;
          break;
        }
        --c;
      }
      if (!found) {
        --w;
        if (w >= 0) c = static_cast<int>(chars[w].size()) - 1;
      }
    }
    if (!found) return std::nullopt;
    if (last_word < 0) last_word = w;
    first_word = w;
    --c;
  }
  return std::make_pair(first_word, last_word);
}

}  // namespace

std::string_view RuleName(Rule rule) {
  return kRuleNames[static_cast<int>(rule)];
}

std::optional<Rule> ParseRule(std::string_view name) {
  for (int i = 0; i < static_cast<int>(std::size(kRuleNames)); ++i) {
    if (kRuleNames[i] == name) return static_cast<Rule>(i);
  }
  return std::nullopt;
}

bool IsAcronym(std::string_view word) {
  const std::vector<char32_t> cps = DecodeUtf8(word);
  const int length = static_cast<int>(cps.size());
  if (length < kMinAcronymLength || length > kMaxAcronymLength) return false;
  int alnum = 0;
  int upper = 0;
  for (char32_t cp : cps) {
    if (!IsAlnum(cp)) continue;
    ++alnum;
    if (IsUpper(cp)) ++upper;
  }
  // 60% as an exact integer comparison.
  return alnum > 0 && 5 * upper >= 3 * alnum;
}

std::vector<AcronymSpan> DetectAcronyms(const TokenSequence &seq) {
  std::vector<AcronymSpan> out;
  for (int i = 0; i < seq.size(); ++i) {
    if (seq[i].is_word && IsAcronym(seq[i].text)) out.push_back({i, i + 1, seq[i].text});
  }
  return out;
}

std::u32string AcronymLetters(std::string_view acronym) {
  std::u32string letters;
  for (char32_t cp : DecodeUtf8(acronym)) {
    if (IsAlnum(cp)) letters += ToLower(cp);
  }
  return letters;
}

int WindowWordLimit(int acronym_length) {
  return std::min(acronym_length + 5, 2 * acronym_length);
}

std::optional<CandidateWindow> WindowBefore(const TokenSequence &seq, int end,
                                            int limit) {
  auto is_boundary = [&](int i) {
    return seq[i].text == ")" || seq.IsSentenceEnd(i) || seq.ParagraphBreakBefore(i + 1);
  };
  int words = 0;
  int begin = end;
  int i = end - 1;
  for (; i >= 0 && words < limit; --i) {
    if (is_boundary(i)) break;
    if (seq[i].is_word) {
      ++words;
      begin = i;
    }
  }
  if (words == 0) return std::nullopt;
  CandidateWindow window{begin, end, -1, Anchor::kRight};
  if (words == limit) {
    for (int k = begin - 1; k >= 0; --k) {
      if (is_boundary(k) || seq[k].text == "(" || seq.ParagraphBreakBefore(k + 1)) break;
      if (seq[k].is_word) {
        window.context_idx = k;
        break;
      }
    }
  }
  return window;
}

std::optional<CandidateWindow> WindowAfter(const TokenSequence &seq, int begin,
                                           int limit) {
  int words = 0;
  int end = begin;
  for (int i = begin; i < seq.size() && words < limit; ++i) {
    const std::string &t = seq[i].text;
    if (i > begin && seq.ParagraphBreakBefore(i)) break;
    if (seq.IsSentenceEnd(i) || t == "(" || t == ")" || t == "," || t == ";") break;
    if (seq[i].is_word) {
      ++words;
      end = i + 1;
    }
  }
  if (words == 0) return std::nullopt;
  return CandidateWindow{begin, end, -1, Anchor::kLeft};
}

std::optional<CandidateWindow> CandidateWindowFor(const TokenSequence &seq,
                                                  const AcronymSpan &acronym,
                                                  const ParenSite &site) {
  const int length = CodePointLength(acronym.text);
  return WindowBefore(seq, site.open_idx, WindowWordLimit(length));
}

std::optional<LongFormSpan> MatchInitialCapitals(const TokenSequence &seq,
                                                 std::string_view acronym,
                                                 const CandidateWindow &window) {
  const std::u32string letters = AcronymLetters(acronym);
  const std::vector<int> words = WordsIn(seq, window);
  if (letters.empty() || words.empty()) return std::nullopt;

  std::vector<int> capitals;
  if (window.anchor == Anchor::kRight) {
    if (window.context_idx >= 0 && IsCapitalized(seq[window.context_idx].text)) {
      return std::nullopt;
    }
    for (int i : words) {
      if (IsCapitalized(seq[i].text)) capitals.push_back(i);
    }
  } else {
    if (!IsCapitalized(seq[words.front()].text)) return std::nullopt;
    for (int i : words) {
      if (capitals.size() == letters.size()) break;
      if (IsCapitalized(seq[i].text)) capitals.push_back(i);
    }
  }
  if (capitals.size() != letters.size()) return std::nullopt;
  for (size_t k = 0; k < capitals.size(); ++k) {
    if (Initial(seq[capitals[k]].text) != letters[k]) return std::nullopt;
  }
  return MakeSpan(seq, capitals.front(), capitals.back() + 1);
}

std::optional<LongFormSpan> MatchCharacter(const TokenSequence &seq,
                                           std::string_view acronym,
                                           const CandidateWindow &window) {
  const std::u32string letters = AcronymLetters(acronym);
  const std::vector<int> words = WordsIn(seq, window);
  const size_t n = letters.size();
  if (n == 0 || words.size() < n) return std::nullopt;
  const size_t offset = window.anchor == Anchor::kRight ? words.size() - n : 0;
  for (size_t k = 0; k < n; ++k) {
    if (Initial(seq[words[offset + k]].text) != letters[k]) return std::nullopt;
  }
  return MakeSpan(seq, words[offset], words[offset + n - 1] + 1);
}

std::optional<LongFormSpan> MatchBoundedSchwartz(const TokenSequence &seq,
                                                 std::string_view acronym,
                                                 const CandidateWindow &window) {
  const std::u32string letters = AcronymLetters(acronym);
  const std::vector<int> words = WordsIn(seq, window);
  if (letters.empty() || words.empty()) return std::nullopt;
  std::vector<std::u32string> chars;
  for (int i : words) {
    std::u32string lowered;
    for (char32_t cp : DecodeUtf8(seq[i].text)) lowered += ToLower(cp);
    chars.push_back(std::move(lowered));
  }

  const int count = static_cast<int>(words.size());
  if (window.anchor == Anchor::kRight) {
    const auto match = Schwartz(chars, count, letters);
    if (!match) return std::nullopt;
    return MakeSpan(seq, words[match->first], words[match->second] + 1);
  }
  // Left anchor: the shortest prefix whose last word contributes.
  for (int prefix = 1; prefix <= count; ++prefix) {
    const auto match = Schwartz(chars, prefix, letters);
    if (match && match->second == prefix - 1) {
      return MakeSpan(seq, words[match->first], words[match->second] + 1);
    }
  }
  return std::nullopt;
}

std::optional<RuleMatch> MatchCascade(const TokenSequence &seq,
                                      std::string_view acronym,
                                      const CandidateWindow &window) {
  if (auto span = MatchInitialCapitals(seq, acronym, window)) {
    return RuleMatch{std::move(*span), Rule::kInitialCapitals};
  }
  if (auto span = MatchCharacter(seq, acronym, window)) {
    return RuleMatch{std::move(*span), Rule::kCharacterMatch};
  }
  if (auto span = MatchBoundedSchwartz(seq, acronym, window)) {
    return RuleMatch{std::move(*span), Rule::kBoundedSchwartz};
  }
  return std::nullopt;
}

std::vector<CuePhrase> DefaultCuePhrases() {
  return {
      {"stands for", CueForm::kAcronymFirst},
      {", short for", CueForm::kAcronymFirst},
      {"abbreviated", CueForm::kParenthesized},
  };
}

Identifier::Identifier(IdentifierOptions options) : options_(std::move(options)) {}

AIAnnotation Identifier::Identify(std::string_view text) const {
  return Identify(Tokenize(text));
}

AIAnnotation Identifier::Identify(const TokenSequence &seq) const {
  AIAnnotation annotation;
  annotation.acronyms = DetectAcronyms(seq);

  std::vector<int> acronym_at(seq.size(), -1);
  for (int k = 0; k < static_cast<int>(annotation.acronyms.size()); ++k) {
    acronym_at[annotation.acronyms[k].begin] = k;
  }
  std::vector<bool> paired(seq.size(), false);

  for (const ParenSite &site : FindParenSites(seq)) {
    // long-form (short-form)
    const int inner = site.inside_begin();
    const bool lone = site.inside_size() == 1 || seq[inner + 1].text == "," ||
                      seq[inner + 1].text == ";";
    if (acronym_at[inner] >= 0 && !paired[inner] && lone) {
      const AcronymSpan &acronym = annotation.acronyms[acronym_at[inner]];
      if (auto window = CandidateWindowFor(seq, acronym, site)) {
        if (auto match = MatchCascade(seq, acronym.text, *window)) {
          annotation.pairs.push_back({acronym, std::move(match->long_form), match->rule});
          paired[inner] = true;
          continue;
        }
      }
    }

    // short-form (long-form); a parenthesized acronym is never a long form.
    const int before = site.before_idx;
    if (before < 0 || acronym_at[before] < 0 || paired[before]) continue;
    if (acronym_at[inner] >= 0) continue;
    const AcronymSpan &acronym = annotation.acronyms[acronym_at[before]];
    int inside_end = site.inside_end();
    for (int i = site.inside_begin(); i < site.inside_end(); ++i) {
      if (seq[i].text == "," || seq[i].text == ";") {
        inside_end = i;
        break;
      }
    }
    CandidateWindow window{site.inside_begin(), inside_end, -1, Anchor::kRight};
    const int words = static_cast<int>(WordsIn(seq, window).size());
    if (words == 0 || words > WindowWordLimit(CodePointLength(acronym.text))) continue;
    if (auto match = MatchCascade(seq, acronym.text, window)) {
      annotation.pairs.push_back({acronym, std::move(match->long_form), match->rule});
      paired[before] = true;
    }
  }

  std::vector<AcronymSpan> unpaired;
  for (const AcronymSpan &acronym : annotation.acronyms) {
    if (!paired[acronym.begin]) unpaired.push_back(acronym);
  }
  for (AcronymPair &pair : ApplySpecialRules(seq, unpaired, options_)) {
    const bool known = std::find(annotation.acronyms.begin(), annotation.acronyms.end(),
                                 pair.acronym) != annotation.acronyms.end();
    if (!known) annotation.acronyms.push_back(pair.acronym);
    annotation.pairs.push_back(std::move(pair));
  }

  std::sort(annotation.acronyms.begin(), annotation.acronyms.end(),
            [](const AcronymSpan &a, const AcronymSpan &b) {
              return a.begin != b.begin ? a.begin < b.begin : a.end > b.end;
            });
  std::sort(annotation.pairs.begin(), annotation.pairs.end(),
            [](const AcronymPair &a, const AcronymPair &b) {
              return a.acronym.begin != b.acronym.begin ? a.acronym.begin < b.acronym.begin
                                                        : a.acronym.end > b.acronym.end;
            });
  return annotation;
}

AIAnnotation Identify(std::string_view text) {
  static const Identifier *identifier = new Identifier();
  return identifier->Identify(text);
}

std::vector<DefinitionRow> SummarizeDefinitions(const AIAnnotation &annotation) {
  struct Form {
    int count = 0;
    size_t first = 0;
    const AcronymPair *latest = nullptr;
  };
  std::map<std::string, std::map<std::string, Form>> by_acronym;
  for (size_t k = 0; k < annotation.pairs.size(); ++k) {
    const AcronymPair &pair = annotation.pairs[k];
    Form &form = by_acronym[pair.acronym.text][NormalizeLongForm(pair.long_form.text)];
    if (form.count++ == 0) form.first = k;
    form.latest = &pair;
  }

  std::vector<DefinitionRow> rows;
  for (const auto &[acronym, forms] : by_acronym) {
    const Form *best = nullptr;
    for (const auto &[key, form] : forms) {
      if (best == nullptr || form.count > best->count ||
          (form.count == best->count && form.first < best->first)) {
        best = &form;
      }
    }
    rows.push_back({acronym, best->latest->long_form.text, best->latest->rule});
  }
  return rows;
}

std::string NormalizeLongForm(std::string_view long_form) {
  const TokenSequence seq = Tokenize(long_form);
  std::string out;
  for (int i = 0; i < seq.size(); ++i) {
    if (i > 0) out += ' ';
    const std::string &word = seq[i].text;
    int letters = 0;
    int upper = 0;
    for (char32_t cp : DecodeUtf8(word)) {
      if (!IsLetter(cp)) continue;
      ++letters;
      if (IsUpper(cp)) ++upper;
    }
    const bool keep_case = letters > 0 && 5 * upper >= 3 * letters;
    out += keep_case ? word : Lowercase(word);
  }
  return out;
}

}  // namespace acrokit
