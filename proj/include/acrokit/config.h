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


#ifndef ACROKIT_CONFIG_H_
#define ACROKIT_CONFIG_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace acrokit {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Hyperparameters for training one chunk model.
struct TrainConfig {
  int embedding_dim = 50;
  int hidden_size = 64;
  int ffn_size = 64;
  double learning_rate = 0.05;
  int batch_size = 32;
  int max_length = 128;
  int max_epochs = 30;
  int patience = 5;
  double clip_norm = 5.0;
  uint64_t seed = 13;
  std::string embeddings_path;  // empty: seeded random embeddings
};

// Missing keys keep their defaults. Throws ConfigError.
TrainConfig LoadTrainConfig(const std::string &path);

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 5000;
  int64_t max_text_bytes = 1 << 20;
  int default_top_k = 10;
  std::string glossary_path;
  std::string models_dir;
  std::string static_dir;
  std::string cues_path;
};

// Reads path (if non-empty) and then applies the ACRO_GLOSSARY, ACRO_MODELS,
// ACRO_PORT, ACRO_MAX_TEXT_BYTES, ACRO_STATIC_DIR and ACRO_CUES environment
// overrides.
ServiceConfig LoadServiceConfig(const std::string &path);

}  // namespace acrokit

#endif  // ACROKIT_CONFIG_H_
