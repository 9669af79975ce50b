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


#ifndef ACROKIT_TESTS_SUPPORT_SYNTHETIC_H_
#define ACROKIT_TESTS_SUPPORT_SYNTHETIC_H_

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "acrokit/glossary.h"
#include "acrokit/miner.h"

namespace acrokit::testing {

// Unique lowercase pseudo-words built from syllables.
class WordFactory {
 public:
  explicit WordFactory(uint64_t seed) : rng_(seed) {}

  std::string Word(char initial = 0);
  std::string Acronym(int min_length, int max_length);

  std::mt19937_64 &rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::set<std::string> used_;
};

// Tokens mixing ASCII, accented, titlecase, caseless-script and digit
// characters, 1..12 code points long.
std::vector<std::string> RandomTokens(int count, uint64_t seed);

struct SyntheticADConfig {
  int acronyms = 20;
  int long_forms = 3;
  int samples_per_long_form = 200;
  int topic_words = 25;
  int min_topical = 3;  // topic words per context, up to half its length
  int filler_words = 60;
  int min_length = 8;
  int max_length = 16;
  uint64_t seed = 7;
};

// Each (acronym, long form) has its own topic vocabulary; contexts mix
// shared filler with at least min_topical topic words, so a bag-of-words classifier
// separates the classes exactly.
struct SyntheticAD {
  std::vector<ADSample> samples;
  Glossary glossary;
};

SyntheticAD MakeSyntheticAD(const SyntheticADConfig &config);

// Documents defining acronyms with "long form (ACR)" sentences, with a skewed
// number of long forms per acronym, plus undefined mentions and filler.
std::vector<Document> MakeSyntheticCorpus(int documents, uint64_t seed);

}  // namespace acrokit::testing

#endif  // ACROKIT_TESTS_SUPPORT_SYNTHETIC_H_
