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

#ifndef ACROKIT_IDENTIFIER_H_
#define ACROKIT_IDENTIFIER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acrokit/text.h"

namespace acrokit {

// Rules that can produce an acronym definition, in the order they are tried
// at a parenthesis site (first three) followed by the special-case rules.
enum class Rule {
  kInitialCapitals,
  kCharacterMatch,
  kBoundedSchwartz,
  kSpecialTemplate,
  kSpecialHyphen,
  kSpecialRoman,
};

std::string_view RuleName(Rule rule);
std::optional<Rule> ParseRule(std::string_view name);

// An acronym mention covering tokens [begin, end). Mentions found by the
// detector cover one token; hyphenated mentions such as "ABC-II" span the
// parts and hyphens.
struct AcronymSpan {
  int begin = 0;
  int end = 0;
  std::string text;

  bool operator==(const AcronymSpan &other) const = default;
};

// A long-form covering tokens [begin, end). text is the tokens joined by
// single spaces, plus any re-appended roman numeral.
struct LongFormSpan {
  int begin = 0;
  int end = 0;
  std::string text;

  bool operator==(const LongFormSpan &other) const = default;
};

struct AcronymPair {
  AcronymSpan acronym;
  LongFormSpan long_form;
  Rule rule = Rule::kInitialCapitals;

  bool operator==(const AcronymPair &other) const = default;
};

// Result of identification on one text. Every paired acronym also appears in
// acronyms; acronyms are ordered by position.
struct AIAnnotation {
  std::vector<AcronymSpan> acronyms;
  std::vector<AcronymPair> pairs;

  bool operator==(const AIAnnotation &other) const = default;
};

// Acronym detector thresholds.
inline constexpr int kMinAcronymLength = 2;
inline constexpr int kMaxAcronymLength = 10;
inline constexpr double kMinUppercaseRatio = 0.6;

// True when the word has 2 to 10 code points and at least 60% of its letters
// and digits are uppercase letters. Punctuation does not count toward the
// ratio, and letters of uncased scripts count as lowercase.
bool IsAcronym(std::string_view word);

std::vector<AcronymSpan> DetectAcronyms(const TokenSequence &seq);

// Lowercased letters and digits of an acronym: the characters matched
// against long-form words.
std::u32string AcronymLetters(std::string_view acronym);

// Number of words examined for a long-form: min(|A| + 5, 2 * |A|).
int WindowWordLimit(int acronym_length);

// Which end of a candidate window the long-form is expected to touch.
enum class Anchor {
  kRight,  // long-form (short-form): the window ends at "("
  kLeft,   // "X stands for Y": the window starts after the cue
};

// Token range [begin, end) searched for a long-form. context_idx is the word
// just outside the window's far edge when the window was cut by the word
// limit rather than by a boundary, -1 otherwise.
struct CandidateWindow {
  int begin = 0;
  int end = 0;
  int context_idx = -1;
  Anchor anchor = Anchor::kRight;

  bool operator==(const CandidateWindow &other) const = default;
};

// Up to `limit` words immediately before token `end`, stopping at sentence
// ends, paragraph breaks and a prior ")". Absent when no word qualifies.
std::optional<CandidateWindow> WindowBefore(const TokenSequence &seq, int end,
                                            int limit);

// Up to `limit` words starting at token `begin`, stopping at sentence ends,
// paragraph breaks, parentheses, commas and semicolons.
std::optional<CandidateWindow> WindowAfter(const TokenSequence &seq, int begin,
                                           int limit);

// Window for the long-form (short-form) template at a site whose interior is
// the acronym.
std::optional<CandidateWindow> CandidateWindowFor(const TokenSequence &seq,
                                                  const AcronymSpan &acronym,
                                                  const ParenSite &site);

// The three general rules. Each returns the matched sub-span of the window.
//
// Initial Capitals: the initials of the capitalized words in the window,
// concatenated in order, spell the acronym; lowercase words between them are
// kept in the span. With a right anchor every capitalized word of the window
// must take part, and a capitalized context word just past the window's edge
// rejects the match, since the window may have cut a longer name.
std::optional<LongFormSpan> MatchInitialCapitals(const TokenSequence &seq,
                                                 std::string_view acronym,
                                                 const CandidateWindow &window);

// Character Match: the initials of the last (first, for a left anchor) |A|
// words of the window spell the acronym.
std::optional<LongFormSpan> MatchCharacter(const TokenSequence &seq,
                                           std::string_view acronym,
                                           const CandidateWindow &window);

// Bounded Schwartz: acronym characters are found right to left as a
// subsequence of the window's characters, the first one at a word start. The
// span runs from the word holding the first character to the word holding
// the last one, so both boundary words contribute.
std::optional<LongFormSpan> MatchBoundedSchwartz(const TokenSequence &seq,
                                                 std::string_view acronym,
                                                 const CandidateWindow &window);

struct RuleMatch {
  LongFormSpan long_form;
  Rule rule;
};

// Tries Initial Capitals, Character Match and Bounded Schwartz in that order.
std::optional<RuleMatch> MatchCascade(const TokenSequence &seq,
                                      std::string_view acronym,
                                      const CandidateWindow &window);

// How a cue phrase relates the acronym and its definition.
enum class CueForm {
  kAcronymFirst,   // "CNN stands for convolutional neural network"
  kParenthesized,  // "convolutional neural network (abbreviated CNN)"
};

struct CuePhrase {
  std::string phrase;
  CueForm form = CueForm::kAcronymFirst;

  bool operator==(const CuePhrase &other) const = default;
};

std::vector<CuePhrase> DefaultCuePhrases();

struct IdentifierOptions {
  std::vector<CuePhrase> cues = DefaultCuePhrases();
};

// Reads cue phrases from a TOML file of [[cue]] tables with `phrase` and
// `form` ("acronym-first" or "parenthesized") keys. Throws
// std::runtime_error on unreadable or invalid files.
IdentifierOptions LoadIdentifierOptions(const std::string &path);

// Special-case rules for acronyms the general rules left undefined:
// cue-phrase templates, hyphenated acronyms in parentheses and acronyms with
// a trailing roman numeral. `unpaired` lists the detector's acronyms that
// have no definition yet. Cue templates are ignored inside parentheses,
// except for the parenthesized cue form itself.
std::vector<AcronymPair> ApplySpecialRules(const TokenSequence &seq,
                                           const std::vector<AcronymSpan> &unpaired,
                                           const IdentifierOptions &options);

class Identifier {
 public:
  explicit Identifier(IdentifierOptions options = {});

  AIAnnotation Identify(const TokenSequence &seq) const;
  AIAnnotation Identify(std::string_view text) const;

  const IdentifierOptions &options() const { return options_; }

 private:
  IdentifierOptions options_;
};

AIAnnotation Identify(std::string_view text);

// One row of a document's acronym glossary.
struct DefinitionRow {
  std::string acronym;
  std::string long_form;
  Rule rule = Rule::kInitialCapitals;

  bool operator==(const DefinitionRow &other) const = default;
};

// Collapses the pairs of a document into one row per acronym. When an acronym
// is defined more than once, the long-form defined most often wins, ties going
// to the one defined first; the row shows the wording and rule of that
// long-form's latest definition. Rows are sorted by acronym.
std::vector<DefinitionRow> SummarizeDefinitions(const AIAnnotation &annotation);

// Canonical long-form text: tokens joined by single spaces, each word
// lowercased unless at least 60% of its letters are uppercase.
std::string NormalizeLongForm(std::string_view long_form);

}  // namespace acrokit

#endif  // ACROKIT_IDENTIFIER_H_
