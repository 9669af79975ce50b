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


#ifndef ACROKIT_EVALUATOR_H_
#define ACROKIT_EVALUATOR_H_

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "acrokit/identifier.h"

namespace acrokit {

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PRF {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Harmonic mean; 0 when p + r == 0.
double HarmonicF1(double precision, double recall);

// 0/0 ratios are 0.
PRF ScoreCounts(int64_t true_positives, int64_t predicted, int64_t gold);

using TokenRange = std::pair<int, int>;  // [begin, end)

struct SpanSet {
  std::set<TokenRange> acronyms;
  std::set<TokenRange> long_forms;

  bool operator==(const SpanSet &other) const = default;
};

// Acronym mentions and the long forms of all pairs.
SpanSet SpansOf(const AIAnnotation &annotation);

struct AIDocument {
  std::string id;
  SpanSet spans;
};

struct AIScore {
  PRF acronym;
  PRF long_form;
  double macro_f1 = 0.0;
};

// Exact span matching, counts pooled over documents. Throws
// EvaluationError naming every id present on one side only.
AIScore ScoreAI(const std::vector<AIDocument> &gold,
                const std::vector<AIDocument> &pred);

double MacroF1(double acronym_f1, double long_form_f1);

struct ADGold {
  std::string id;
  std::string label;
};

struct ADScore {
  PRF macro;  // each field averaged over gold classes
  int64_t samples = 0;
  int64_t missing = 0;
  int64_t correct = 0;
};

// predictions maps sample id to the chosen long form; absent ids count as
// wrong.
ADScore ScoreAD(const std::vector<ADGold> &gold,
                const std::map<std::string, std::string> &predictions);

// Table rows with percentages to two decimals.
std::string FormatAIReport(const std::string &system, const AIScore &score);
std::string FormatADReport(const std::string &system, const ADScore &score);

}  // namespace acrokit

#endif  // ACROKIT_EVALUATOR_H_
