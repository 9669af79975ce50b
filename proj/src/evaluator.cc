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


#include "acrokit/evaluator.h"

#include <cstdio>

namespace acrokit {

double HarmonicF1(double precision, double recall) {
  if (precision + recall <= 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

PRF ScoreCounts(int64_t true_positives, int64_t predicted, int64_t gold) {
  PRF prf;
  if (predicted > 0) prf.precision = static_cast<double>(true_positives) / predicted;
  if (gold > 0) prf.recall = static_cast<double>(true_positives) / gold;
  prf.f1 = HarmonicF1(prf.precision, prf.recall);
  return prf;
}

double MacroF1(double acronym_f1, double long_form_f1) {
  return (acronym_f1 + long_form_f1) / 2.0;
}

SpanSet SpansOf(const AIAnnotation &annotation) {
  SpanSet spans;
  for (const AcronymSpan &a : annotation.acronyms) spans.acronyms.insert({a.begin, a.end});
  for (const AcronymPair &p : annotation.pairs) {
    spans.long_forms.insert({p.long_form.begin, p.long_form.end});
  }
  return spans;
}

namespace {

struct Tally {
  int64_t tp = 0;
  int64_t predicted = 0;
  int64_t gold = 0;

  void Add(const std::set<TokenRange> &g, const std::set<TokenRange> &p) {
    gold += static_cast<int64_t>(g.size());
    predicted += static_cast<int64_t>(p.size());
    for (const TokenRange &span : p) tp += g.count(span);
  }
};

std::map<std::string, const SpanSet *> Index(const std::vector<AIDocument> &docs,
                                             const char *side) {
  std::map<std::string, const SpanSet *> index;
  for (const AIDocument &doc : docs) {
    if (!index.emplace(doc.id, &doc.spans).second) {
      throw EvaluationError(std::string("duplicate ") + side + " document id " + doc.id);
    }
  }
  return index;
}

}  // namespace

AIScore ScoreAI(const std::vector<AIDocument> &gold,
                const std::vector<AIDocument> &pred) {
  const auto gold_index = Index(gold, "gold");
  const auto pred_index = Index(pred, "pred");
  std::string unmatched;
  for (const auto &[id, spans] : gold_index) {
    if (!pred_index.count(id)) unmatched += " gold:" + id;
  }
  for (const auto &[id, spans] : pred_index) {
    if (!gold_index.count(id)) unmatched += " pred:" + id;
  }
  if (!unmatched.empty()) throw EvaluationError("unmatched documents:" + unmatched);

  Tally acronyms;
  Tally long_forms;
  for (const auto &[id, g] : gold_index) {
    const SpanSet *p = pred_index.at(id);
    acronyms.Add(g->acronyms, p->acronyms);
    long_forms.Add(g->long_forms, p->long_forms);
  }
  AIScore score;
  score.acronym = ScoreCounts(acronyms.tp, acronyms.predicted, acronyms.gold);
  score.long_form = ScoreCounts(long_forms.tp, long_forms.predicted, long_forms.gold);
  score.macro_f1 = MacroF1(score.acronym.f1, score.long_form.f1);
  return score;
}

ADScore ScoreAD(const std::vector<ADGold> &gold,
                const std::map<std::string, std::string> &predictions) {
  std::map<std::string, Tally> classes;
  for (const ADGold &g : gold) ++classes[g.label].gold;
  ADScore score;
  score.samples = static_cast<int64_t>(gold.size());
  for (const ADGold &g : gold) {
    auto it = predictions.find(g.id);
    if (it == predictions.end()) {
      ++score.missing;
      continue;
    }
    auto cls = classes.find(it->second);
    if (cls != classes.end()) ++cls->second.predicted;
    if (it->second == g.label) {
      ++classes[g.label].tp;
      ++score.correct;
    }
  }
  if (classes.empty()) return score;
  for (const auto &[label, tally] : classes) {
    const PRF prf = ScoreCounts(tally.tp, tally.predicted, tally.gold);
    score.macro.precision += prf.precision;
    score.macro.recall += prf.recall;
    score.macro.f1 += prf.f1;
  }
  const double n = static_cast<double>(classes.size());
  score.macro.precision /= n;
  score.macro.recall /= n;
  score.macro.f1 /= n;
  return score;
}

std::string FormatAIReport(const std::string &system, const AIScore &score) {
  char line[512];
  std::snprintf(line, sizeof(line),
                "%-12s | %6s %6s %6s | %6s %6s %6s | %8s\n"
                "%-12s | %6.2f %6.2f %6.2f | %6.2f %6.2f %6.2f | %8.2f\n",
                "Model", "Acr P", "Acr R", "Acr F1", "LF P", "LF R", "LF F1",
                "Macro F1", system.c_str(), 100 * score.acronym.precision,
                100 * score.acronym.recall, 100 * score.acronym.f1,
                100 * score.long_form.precision, 100 * score.long_form.recall,
                100 * score.long_form.f1, 100 * score.macro_f1);
  return line;
}

std::string FormatADReport(const std::string &system, const ADScore &score) {
  char line[256];
  std::snprintf(line, sizeof(line),
                "%-12s | %6s %6s %6s\n%-12s | %6.2f %6.2f %6.2f\n", "Model", "P",
                "R", "F1", system.c_str(), 100 * score.macro.precision,
                100 * score.macro.recall, 100 * score.macro.f1);
  return line;
}

}  // namespace acrokit
