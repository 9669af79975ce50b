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


#ifndef ACROKIT_PREDICTOR_H_
#define ACROKIT_PREDICTOR_H_

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "acrokit/glossary.h"
#include "acrokit/identifier.h"
#include "acrokit/model.h"
#include "acrokit/text.h"

namespace acrokit {

// Loaded chunk models and the acronym routing table. Immutable once built.
class ModelStore {
 public:
  ModelStore() = default;

  // Loads every *.json model in dir. Throws ModelError if two models claim
  // the same acronym.
  static ModelStore LoadDir(const std::string &dir);

  void Add(ModelParams params);

  // Model owning acronym, or nullptr.
  const ModelParams *Route(const std::string &acronym) const;

  int size() const { return static_cast<int>(models_.size()); }
  bool empty() const { return models_.empty(); }

 private:
  std::vector<std::shared_ptr<const ModelParams>> models_;
  std::map<std::string, const ModelParams *> routes_;
};

enum class PredictionSource {
  kDictionary,         // single glossary candidate
  kModel,              // chunk model, masked to the candidates
  kFrequencyFallback,  // ambiguous, but no model owns the acronym
  kUnknown,            // not in the glossary
};

std::string_view PredictionSourceName(PredictionSource source);

struct ScoredCandidate {
  std::string long_form;
  double score = 0.0;

  bool operator==(const ScoredCandidate &other) const = default;
};

struct RankedPrediction {
  std::string acronym;  // glossary key the query resolved to
  PredictionSource source = PredictionSource::kUnknown;
  std::vector<ScoredCandidate> candidates;  // non-increasing scores
  std::string chosen;                       // empty when unknown

  bool operator==(const RankedPrediction &other) const = default;
};

// Candidates outside the routed model's label space score 0 and follow the
// scored ones in glossary order. The frequency fallback scores candidates by
// relative frequency.
RankedPrediction Predict(const std::vector<std::string> &tokens, int acronym_idx,
                         const Glossary &glossary, const ModelStore &models);

// Predicts the mention using its context in seq.
RankedPrediction Predict(const TokenSequence &seq, const AcronymSpan &acronym,
                         const Glossary &glossary, const ModelStore &models,
                         int max_tokens = 128);

// Convenience: tokenizes text and predicts the acronym starting at token
// acronym_idx.
RankedPrediction Predict(std::string_view text, int acronym_idx,
                         const Glossary &glossary, const ModelStore &models);

}  // namespace acrokit

#endif  // ACROKIT_PREDICTOR_H_
