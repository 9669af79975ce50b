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


#include "acrokit/predictor.h"

#include <algorithm>
#include <filesystem>

#include "acrokit/miner.h"

namespace acrokit {

ModelStore ModelStore::LoadDir(const std::string &dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ModelError("not a directory: " + dir);
  std::vector<fs::path> paths;
  for (const auto &entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      paths.push_back(entry.path());
    }
  }
  std::sort(paths.begin(), paths.end());
  ModelStore store;
  for (const fs::path &path : paths) store.Add(LoadModel(path.string()));
  return store;
}

void ModelStore::Add(ModelParams params) {
  params.Validate();
  auto model = std::make_shared<const ModelParams>(std::move(params));
  for (const std::string &acronym : model->acronyms) {
    if (!routes_.emplace(acronym, model.get()).second) {
      throw ModelError("acronym " + acronym + " is owned by two models");
    }
  }
  models_.push_back(std::move(model));
}

const ModelParams *ModelStore::Route(const std::string &acronym) const {
  auto it = routes_.find(acronym);
  return it == routes_.end() ? nullptr : it->second;
}

std::string_view PredictionSourceName(PredictionSource source) {
  switch (source) {
    case PredictionSource::kDictionary: return "dictionary";
    case PredictionSource::kModel: return "model";
    case PredictionSource::kFrequencyFallback: return "frequency";
    case PredictionSource::kUnknown: return "unknown";
  }
  return "unknown";
}

RankedPrediction Predict(const std::vector<std::string> &tokens, int acronym_idx,
                         const Glossary &glossary, const ModelStore &models) {
  RankedPrediction prediction;
  if (acronym_idx < 0 || acronym_idx >= static_cast<int>(tokens.size())) {
    return prediction;
  }
  std::optional<GlossaryEntry> entry = glossary.Lookup(tokens[acronym_idx]);
  if (!entry) return prediction;
  prediction.acronym = entry->acronym;

  if (!entry->ambiguous()) {
    prediction.source = PredictionSource::kDictionary;
    prediction.candidates.push_back({entry->candidates[0].long_form, 1.0});
  } else if (const ModelParams *model = models.Route(entry->acronym)) {
    prediction.source = PredictionSource::kModel;
    std::vector<int> mask;
    std::vector<std::string> unscored;
    for (const Candidate &c : entry->candidates) {
      const int k = model->LabelIndex(c.long_form);
      if (k >= 0) {
        mask.push_back(k);
      } else {
        unscored.push_back(c.long_form);
      }
    }
    if (!mask.empty()) {
      const Vector logits =
          Classify(*model, Encode(*model, PrepareInput(*model, tokens, acronym_idx)));
      const Vector scores = MaskedSoftmax(logits, mask);
      for (size_t k = 0; k < mask.size(); ++k) {
        prediction.candidates.push_back(
            {model->label_space[mask[k]], scores(static_cast<Eigen::Index>(k))});
      }
      std::stable_sort(prediction.candidates.begin(), prediction.candidates.end(),
                       [](const ScoredCandidate &a, const ScoredCandidate &b) {
                         return a.score > b.score;
                       });
      for (std::string &lf : unscored) prediction.candidates.push_back({lf, 0.0});
    } else {
      prediction.source = PredictionSource::kFrequencyFallback;
    }
  } else {
    prediction.source = PredictionSource::kFrequencyFallback;
  }

  if (prediction.source == PredictionSource::kFrequencyFallback) {
    const double total = static_cast<double>(entry->total_frequency());
    for (const Candidate &c : entry->candidates) {
      prediction.candidates.push_back({c.long_form, c.frequency / total});
    }
  }
  prediction.chosen = prediction.candidates.front().long_form;
  return prediction;
}

RankedPrediction Predict(const TokenSequence &seq, const AcronymSpan &acronym,
                         const Glossary &glossary, const ModelStore &models,
                         int max_tokens) {
  const Context context = BuildContext(seq, acronym, max_tokens);
  return Predict(context.tokens, context.acronym_idx, glossary, models);
}

RankedPrediction Predict(std::string_view text, int acronym_idx,
                         const Glossary &glossary, const ModelStore &models) {
  const TokenSequence seq = Tokenize(text);
  if (acronym_idx < 0 || acronym_idx >= seq.size()) return {};
  const AcronymSpan span{acronym_idx, acronym_idx + 1, seq[acronym_idx].text};
  return Predict(seq, span, glossary, models);
}

}  // namespace acrokit
