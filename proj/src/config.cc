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


#include "acrokit/config.h"

#include <cstdlib>
#include <optional>
#include <string>

#include "acrokit/identifier.h"
#include "toml.hpp"

namespace acrokit {
namespace {

toml::table ParseFile(const std::string &path) {
  try {
    return toml::parse_file(path);
  } catch (const toml::parse_error &e) {
    throw ConfigError(path + ": " + std::string(e.description()));
  }
}

template <typename T>
void Read(const toml::table &table, std::string_view key, T *out) {
  const toml::node *node = table.get(key);
  if (node == nullptr) return;
  std::optional<T> value = node->value<T>();
  if (!value) throw ConfigError("bad value for key '" + std::string(key) + "'");
  *out = *value;
}

void ReadInt(const toml::table &table, std::string_view key, int *out) {
  int64_t value = *out;
  Read(table, key, &value);
  if (value < 0 || value > (1 << 30)) {
    throw ConfigError("out of range: '" + std::string(key) + "'");
  }
  *out = static_cast<int>(value);
}

const char *Env(const char *name) {
  const char *value = std::getenv(name);
  return value != nullptr && *value != '\0' ? value : nullptr;
}

int64_t ParseInteger(const char *name, const char *value) {
  char *end = nullptr;
  const long long parsed = std::strtoll(value, &end, 10);
  if (end == value || *end != '\0' || parsed < 0) {
    throw ConfigError(std::string(name) + " is not a non-negative integer");
  }
  return parsed;
}

}  // namespace

IdentifierOptions LoadIdentifierOptions(const std::string &path) {
  const toml::table table = ParseFile(path);
  IdentifierOptions options;
  const toml::array *cues = table["cue"].as_array();
  if (cues == nullptr) return options;
  options.cues.clear();
  for (const toml::node &node : *cues) {
    const toml::table *cue = node.as_table();
    if (cue == nullptr) throw ConfigError(path + ": [[cue]] must be a table");
    CuePhrase phrase;
    std::string form = "acronym-first";
    Read(*cue, "phrase", &phrase.phrase);
    Read(*cue, "form", &form);
    if (phrase.phrase.empty()) throw ConfigError(path + ": cue without phrase");
    if (form == "acronym-first") {
      phrase.form = CueForm::kAcronymFirst;
    } else if (form == "parenthesized") {
      phrase.form = CueForm::kParenthesized;
    } else {
      throw ConfigError(path + ": unknown cue form '" + form + "'");
    }
    options.cues.push_back(std::move(phrase));
  }
  return options;
}

TrainConfig LoadTrainConfig(const std::string &path) {
  const toml::table table = ParseFile(path);
  TrainConfig config;
  ReadInt(table, "embedding_dim", &config.embedding_dim);
  ReadInt(table, "hidden_size", &config.hidden_size);
  ReadInt(table, "ffn_size", &config.ffn_size);
  Read(table, "learning_rate", &config.learning_rate);
  ReadInt(table, "batch_size", &config.batch_size);
  ReadInt(table, "max_length", &config.max_length);
  ReadInt(table, "max_epochs", &config.max_epochs);
  ReadInt(table, "patience", &config.patience);
  Read(table, "clip_norm", &config.clip_norm);
  int64_t seed = static_cast<int64_t>(config.seed);
  Read(table, "seed", &seed);
  config.seed = static_cast<uint64_t>(seed);
  Read(table, "embeddings", &config.embeddings_path);
  if (config.embedding_dim < 1 || config.hidden_size < 1 ||
      config.ffn_size < 1 || config.batch_size < 1 || config.max_length < 1) {
    throw ConfigError(path + ": sizes must be positive");
  }
  if (!(config.learning_rate > 0)) {
    throw ConfigError(path + ": learning_rate must be positive");
  }
  return config;
}

ServiceConfig LoadServiceConfig(const std::string &path) {
  ServiceConfig config;
  if (!path.empty()) {
    const toml::table table = ParseFile(path);
    Read(table, "host", &config.host);
    ReadInt(table, "port", &config.port);
    Read(table, "max_text_bytes", &config.max_text_bytes);
    ReadInt(table, "top_k", &config.default_top_k);
    Read(table, "glossary", &config.glossary_path);
    Read(table, "models", &config.models_dir);
    Read(table, "static_dir", &config.static_dir);
    Read(table, "cues", &config.cues_path);
  }
  if (const char *v = Env("ACRO_GLOSSARY")) config.glossary_path = v;
  if (const char *v = Env("ACRO_MODELS")) config.models_dir = v;
  if (const char *v = Env("ACRO_STATIC_DIR")) config.static_dir = v;
  if (const char *v = Env("ACRO_CUES")) config.cues_path = v;
  if (const char *v = Env("ACRO_PORT")) {
    config.port = static_cast<int>(ParseInteger("ACRO_PORT", v));
  }
  if (const char *v = Env("ACRO_MAX_TEXT_BYTES")) {
    config.max_text_bytes = ParseInteger("ACRO_MAX_TEXT_BYTES", v);
  }
  if (config.port > 65535) throw ConfigError("port out of range");
  return config;
}

}  // namespace acrokit
