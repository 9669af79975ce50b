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


#include "acrokit/trainer.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

namespace acrokit {
namespace {

struct Example {
  EncodedInput input;
  int gold = 0;
};

std::vector<Example> Encode(const ModelParams &params,
                            const std::vector<ADSample> &samples) {
  std::vector<Example> examples;
  examples.reserve(samples.size());
  for (const ADSample &sample : samples) {
    const int gold = params.LabelIndex(sample.label);
    if (gold < 0) {
      throw ModelError("sample " + sample.id + " has label outside the chunk: " +
                       sample.label);
    }
    examples.push_back({PrepareInput(params, sample.tokens, sample.acronym_idx), gold});
  }
  return examples;
}

std::vector<std::string> Vocabulary(const std::vector<ADSample> &train,
                                    const std::vector<ADSample> &dev) {
  std::vector<std::string> words;
  for (const auto *part : {&train, &dev}) {
    for (const ADSample &sample : *part) {
      words.insert(words.end(), sample.tokens.begin(), sample.tokens.end());
    }
  }
  return words;
}

}  // namespace

CandidateMap CandidatesFromSamples(const std::vector<ADSample> &samples) {
  CandidateMap candidates;
  for (const ADSample &sample : samples) candidates[sample.acronym].insert(sample.label);
  return candidates;
}

double MaskedAccuracy(const ModelParams &params,
                      const std::vector<ADSample> &samples,
                      const CandidateMap &candidates) {
  if (samples.empty()) return 0.0;
  int correct = 0;
  for (const ADSample &sample : samples) {
    const Vector logits = Classify(
        params, Encode(params, PrepareInput(params, sample.tokens, sample.acronym_idx)));
    std::vector<int> mask;
    auto it = candidates.find(sample.acronym);
    if (it != candidates.end()) {
      for (const std::string &label : it->second) {
        const int k = params.LabelIndex(label);
        if (k >= 0) mask.push_back(k);
      }
    }
    if (mask.empty()) {
      mask.resize(params.label_space.size());
      std::iota(mask.begin(), mask.end(), 0);
    }
    int best = mask[0];
    for (int k : mask) {
      if (logits(k) > logits(best)) best = k;
    }
    if (params.label_space[best] == sample.label) ++correct;
  }
  return static_cast<double>(correct) / samples.size();
}

TrainResult TrainChunk(const Chunk &chunk, const std::vector<ADSample> &train,
                       const std::vector<ADSample> &dev,
                       const TrainConfig &config) {
  const std::vector<std::string> words = Vocabulary(train, dev);
  EmbeddingTable embedding =
      config.embeddings_path.empty()
          ? EmbeddingTable::Random(words, config.embedding_dim, config.seed)
          : EmbeddingTable::LoadText(config.embeddings_path, words);
  return TrainChunk(chunk, train, dev, config, std::move(embedding));
}

TrainResult TrainChunk(const Chunk &chunk, const std::vector<ADSample> &train,
                       const std::vector<ADSample> &dev,
                       const TrainConfig &config, EmbeddingTable embedding) {
  if (train.empty()) throw ModelError("chunk " + chunk.chunk_id + " has no training samples");
  ModelShape shape;
  shape.hidden_size = config.hidden_size;
  shape.ffn_size = config.ffn_size;
  shape.max_length = config.max_length;
  TrainResult result;
  result.params = InitModel(std::move(embedding), chunk.label_space, shape, config.seed);
  ModelParams &params = result.params;
  params.chunk_id = chunk.chunk_id;
  params.acronyms = chunk.acronyms;

  const std::vector<Example> examples = Encode(params, train);
  const CandidateMap candidates = CandidatesFromSamples(train);
  std::vector<int> order(examples.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(config.seed);
  Gradients grads(params);
  ModelParams best = params;
  int stale = 0;

  for (int epoch = 1; epoch <= config.max_epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    double total_loss = 0.0;
    for (size_t start = 0; start < order.size(); start += config.batch_size) {
      const size_t stop = std::min(order.size(), start + config.batch_size);
      grads.SetZero();
      for (size_t b = start; b < stop; ++b) {
        const Example &ex = examples[order[b]];
        const double loss = LossAndGradients(params, ex.input, ex.gold, &grads);
        if (!std::isfinite(loss)) {
          throw TrainingDiverged("non-finite loss in chunk " + chunk.chunk_id +
                                 " at epoch " + std::to_string(epoch) +
                                 " on sample " + train[order[b]].id);
        }
        total_loss += loss;
      }
      grads.Scale(1.0 / static_cast<double>(stop - start));
      const double norm = std::sqrt(grads.SquaredNorm());
      if (!std::isfinite(norm)) {
        throw TrainingDiverged("non-finite gradient in chunk " + chunk.chunk_id);
      }
      if (config.clip_norm > 0 && norm > config.clip_norm) {
        grads.Scale(config.clip_norm / norm);
      }
      ApplyGradients(grads, config.learning_rate, &params);
    }

    EpochLog entry;
    entry.epoch = epoch;
    entry.mean_loss = total_loss / static_cast<double>(examples.size());
    if (!dev.empty()) {
      entry.dev_accuracy = MaskedAccuracy(params, dev, candidates);
      if (entry.dev_accuracy > result.best_dev_accuracy) {
        result.best_dev_accuracy = entry.dev_accuracy;
        result.best_epoch = epoch;
        best = params;
        stale = 0;
      } else {
        ++stale;
      }
    } else {
      result.best_epoch = epoch;
    }
    result.log.push_back(entry);
    if (!dev.empty() && (stale >= config.patience || result.best_dev_accuracy >= 1.0)) {
      break;
    }
  }
  if (!dev.empty()) params = std::move(best);
  return result;
}

GradientCheckResult GradientCheck(const ModelParams &params,
                                  const EncodedInput &input, int gold,
                                  double epsilon, bool ffn_only) {
  Gradients analytic(params);
  LossAndGradients(params, input, gold, &analytic, !ffn_only);
  GradientCheckResult result;
  result.gradient_norm = std::sqrt(analytic.SquaredNorm());

  ModelParams probe = params;
  auto check = [&](const std::string &name, double *weight, double grad) {
    const double saved = *weight;
    *weight = saved + epsilon;
    const double plus = LossAndGradients(probe, input, gold, nullptr);
    *weight = saved - epsilon;
    const double minus = LossAndGradients(probe, input, gold, nullptr);
    *weight = saved;
    const double numeric = (plus - minus) / (2 * epsilon);
    const double scale = std::max({std::abs(numeric), std::abs(grad), 1e-8});
    const double error = std::abs(numeric - grad) / scale;
    if (error > result.max_relative_error) {
      result.max_relative_error = error;
      result.worst_parameter = name;
    }
  };
  auto check_block = [&](const std::string &name, auto &weights, const auto &grads) {
    for (Eigen::Index i = 0; i < weights.size(); ++i) {
      check(name, weights.data() + i, grads.data()[i]);
    }
  };
  if (!ffn_only) {
    check_block("forward.input", probe.forward.input, analytic.forward.input);
    check_block("forward.recurrent", probe.forward.recurrent, analytic.forward.recurrent);
    check_block("forward.bias", probe.forward.bias, analytic.forward.bias);
    check_block("backward.input", probe.backward.input, analytic.backward.input);
    check_block("backward.recurrent", probe.backward.recurrent, analytic.backward.recurrent);
    check_block("backward.bias", probe.backward.bias, analytic.backward.bias);
  }
  check_block("hidden_w", probe.hidden_w, analytic.hidden_w);
  check_block("hidden_b", probe.hidden_b, analytic.hidden_b);
  check_block("output_w", probe.output_w, analytic.output_w);
  check_block("output_b", probe.output_b, analytic.output_b);
  return result;
}

}  // namespace acrokit
