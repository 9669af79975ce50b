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
#include <filesystem>
#include <fstream>
#include <string>

#include "acrokit/identifier.h"
#include "gtest/gtest.h"

namespace acrokit {
namespace {

class ConfigTest : public ::testing::Test {
 protected:
  std::string Write(const std::string &name, const std::string &content) {
    const std::string path =
        (std::filesystem::temp_directory_path() / ("acrokit_config_" + name)).string();
    std::ofstream(path) << content;
    return path;
  }
};

TEST_F(ConfigTest, ShippedCueFileMatchesDefaults) {
  const IdentifierOptions options =
      LoadIdentifierOptions(std::string(ACROKIT_SOURCE_DIR) + "/config/cues.toml");
  EXPECT_EQ(options.cues, DefaultCuePhrases());
}

TEST_F(ConfigTest, CustomCues) {
  const IdentifierOptions options = LoadIdentifierOptions(Write(
      "cues.toml",
      "[[cue]]\nphrase = \"means\"\n\n[[cue]]\nphrase = \"aka\"\nform = \"parenthesized\"\n"));
  ASSERT_EQ(options.cues.size(), 2u);
  EXPECT_EQ(options.cues[0], (CuePhrase{"means", CueForm::kAcronymFirst}));
  EXPECT_EQ(options.cues[1], (CuePhrase{"aka", CueForm::kParenthesized}));
}

TEST_F(ConfigTest, BadCueForm) {
  EXPECT_THROW(LoadIdentifierOptions(Write("bad.toml", "[[cue]]\nphrase=\"x\"\nform=\"y\"\n")),
               ConfigError);
  EXPECT_THROW(LoadIdentifierOptions(Write("broken.toml", "[[cue]\n")), ConfigError);
}

TEST_F(ConfigTest, TrainConfig) {
  const TrainConfig config =
      LoadTrainConfig(Write("train.toml", "hidden_size = 8\nlearning_rate = 0.1\nseed = 3\n"));
  EXPECT_EQ(config.hidden_size, 8);
  EXPECT_DOUBLE_EQ(config.learning_rate, 0.1);
  EXPECT_EQ(config.seed, 3u);
  EXPECT_EQ(config.batch_size, 32);
  EXPECT_EQ(config.embedding_dim, 50);
  EXPECT_THROW(LoadTrainConfig(Write("train_bad.toml", "hidden_size = 0\n")), ConfigError);
  EXPECT_THROW(LoadTrainConfig(Write("train_type.toml", "hidden_size = \"x\"\n")),
               ConfigError);
  const TrainConfig shipped =
      LoadTrainConfig(std::string(ACROKIT_SOURCE_DIR) + "/config/train.toml");
  EXPECT_EQ(shipped.hidden_size, 64);
  EXPECT_EQ(shipped.max_length, 128);
}

TEST_F(ConfigTest, ServiceConfigWithEnvironmentOverrides) {
  const std::string path =
      Write("service.toml", "port = 6000\nglossary = \"g.json\"\nmax_text_bytes = 10\n");
  ServiceConfig config = LoadServiceConfig(path);
  EXPECT_EQ(config.port, 6000);
  EXPECT_EQ(config.glossary_path, "g.json");
  EXPECT_EQ(config.max_text_bytes, 10);

  setenv("ACRO_PORT", "7001", 1);
  setenv("ACRO_GLOSSARY", "other.json", 1);
  config = LoadServiceConfig(path);
  unsetenv("ACRO_PORT");
  unsetenv("ACRO_GLOSSARY");
  EXPECT_EQ(config.port, 7001);
  EXPECT_EQ(config.glossary_path, "other.json");

  setenv("ACRO_MAX_TEXT_BYTES", "lots", 1);
  EXPECT_THROW(LoadServiceConfig(path), ConfigError);
  unsetenv("ACRO_MAX_TEXT_BYTES");

  const ServiceConfig defaults = LoadServiceConfig("");
  EXPECT_EQ(defaults.port, 5000);
  EXPECT_EQ(defaults.max_text_bytes, 1 << 20);
}

}  // namespace
}  // namespace acrokit
