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


#ifndef ACROKIT_TRAINER_H_
#define ACROKIT_TRAINER_H_

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "acrokit/config.h"
#include "acrokit/miner.h"
#include "acrokit/model.h"

namespace acrokit {

class TrainingDiverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EpochLog {
  int epoch = 0;
  double mean_loss = 0.0;
  double dev_accuracy = -1.0;  // -1 without a dev split
};

struct TrainResult {
  ModelParams params;
  std::vector<EpochLog> log;
  int best_epoch = 0;
  double best_dev_accuracy = -1.0;
};

// Labels seen for each acronym; used to mask dev predictions.
using CandidateMap = std::map<std::string, std::set<std::string>>;

CandidateMap CandidatesFromSamples(const std::vector<ADSample> &samples);

// Accuracy with logits masked to each acronym's candidates.
double MaskedAccuracy(const ModelParams &params,
                      const std::vector<ADSample> &samples,
                      const CandidateMap &candidates);

// Mini-batch SGD on cross-entropy over the whole label space with global
// gradient-norm clipping. Keeps the parameters of the best dev epoch and stops
// after config.patience epochs without improvement; without dev samples it
// runs config.max_epochs. Throws TrainingDiverged on a non-finite loss.
TrainResult TrainChunk(const Chunk &chunk, const std::vector<ADSample> &train,
                       const std::vector<ADSample> &dev,
                       const TrainConfig &config);

// Same as TrainChunk with an explicit embedding table.
TrainResult TrainChunk(const Chunk &chunk, const std::vector<ADSample> &train,
                       const std::vector<ADSample> &dev,
                       const TrainConfig &config, EmbeddingTable embedding);

struct GradientCheckResult {
  double max_relative_error = 0.0;
  std::string worst_parameter;
  double gradient_norm = 0.0;
};

// Compares LossAndGradients against central differences for every weight.
// With ffn_only the LSTM weights are frozen and not checked.
GradientCheckResult GradientCheck(const ModelParams &params,
                                  const EncodedInput &input, int gold,
                                  double epsilon, bool ffn_only = false);

}  // namespace acrokit

#endif  // ACROKIT_TRAINER_H_
