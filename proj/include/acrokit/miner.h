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


#ifndef ACROKIT_MINER_H_
#define ACROKIT_MINER_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "acrokit/glossary.h"
#include "acrokit/identifier.h"
#include "acrokit/text.h"

namespace acrokit {

inline constexpr int kDefaultContextTokens = 128;
inline constexpr int64_t kDefaultChunkSize = 100000;

struct Document {
  std::string id;
  std::string text;
  std::string corpus;
};

struct ADSample {
  std::string id;
  std::string doc;
  std::string corpus;
  std::string acronym;
  std::vector<std::string> tokens;
  int acronym_idx = 0;
  std::string label;  // normalized long form

  bool operator==(const ADSample &other) const = default;
};

// Context tokens for one acronym mention: the mention's sentence padded with
// whole neighbouring sentences (previous first) while the total stays within
// max_tokens. A multi-token acronym collapses to one token. Tokens in
// [excise_begin, excise_end) are dropped. A sentence longer than max_tokens
// is cut symmetrically around the acronym.
struct Context {
  std::vector<std::string> tokens;
  int acronym_idx = 0;
};

Context BuildContext(const TokenSequence &seq, const AcronymSpan &acronym,
                     int max_tokens, int excise_begin = -1, int excise_end = -1);

struct MinedPair {
  std::string acronym;
  std::string long_form;  // normalized
  Rule rule = Rule::kInitialCapitals;
};

struct MinedDocument {
  std::vector<MinedPair> pairs;
  std::vector<ADSample> samples;
};

// One pair and one sample per local definition. Sample ids are
// "<corpus>/<doc id>#<k>".
MinedDocument MineDocument(const Document &doc, const Identifier &identifier,
                           int max_tokens = kDefaultContextTokens);

struct MinedCorpus {
  Glossary glossary;
  std::vector<ADSample> samples;
};

MinedCorpus MineCorpus(const std::vector<Document> &docs,
                       const Identifier &identifier,
                       int max_tokens = kDefaultContextTokens);

struct Chunk {
  std::string chunk_id;
  std::vector<std::string> acronyms;     // sorted
  std::vector<std::string> label_space;  // sorted, unique
  std::map<std::string, int64_t> sample_counts;
  int64_t total = 0;

  bool operator==(const Chunk &other) const = default;
};

struct ChunkManifest {
  std::vector<Chunk> chunks;
  int64_t chunk_size_limit = kDefaultChunkSize;
  uint64_t seed = 0;

  // Index into chunks, or -1.
  int ChunkOf(const std::string &acronym) const;
  const Chunk *Find(const std::string &chunk_id) const;

  bool operator==(const ChunkManifest &other) const = default;
};

// First-fit decreasing over acronym groups (ties by first appearance). A
// group larger than the limit gets a chunk of its own.
ChunkManifest AssignChunks(const std::vector<ADSample> &samples,
                           int64_t chunk_size_limit, uint64_t seed = 0);

struct SplitCounts {
  int train = 0;
  int dev = 0;
  int test = 0;

  bool operator==(const SplitCounts &other) const = default;
};

// 80/10/10 by floor with the remainder in test; n < 3 puts one sample in
// train and the rest in test. For n >= 10 a test share above 0.1n + 1 gives
// one sample back to whichever of train/dev is further below its quota.
SplitCounts SplitSizes(int n);

struct DatasetSplits {
  std::vector<int> train;  // indices into the sample list
  std::vector<int> dev;
  std::vector<int> test;
};

// Stratified by (acronym, label); each group is shuffled with a generator
// seeded from seed and the group key.
DatasetSplits Split(const std::vector<ADSample> &samples, uint64_t seed);

std::vector<Document> ReadDocumentsJsonl(const std::string &path);

std::string SampleToJson(const ADSample &sample);
ADSample SampleFromJson(std::string_view line);
std::vector<ADSample> ReadSamplesJsonl(const std::string &path);
void WriteSamplesJsonl(const std::string &path,
                       const std::vector<ADSample> &samples);

std::string ManifestToJson(const ChunkManifest &manifest);
ChunkManifest ManifestFromJson(std::string_view json);

// Writes glossary.json, manifest.json, splits.json and one
// samples-<chunk>.jsonl per chunk into out_dir.
void WriteDataset(const std::string &out_dir, const MinedCorpus &corpus,
                  const ChunkManifest &manifest, const DatasetSplits &splits);

struct ChunkData {
  Chunk chunk;
  std::vector<ADSample> train;
  std::vector<ADSample> dev;
  std::vector<ADSample> test;
};

// Reads one chunk's samples, partitioned by splits.json from the manifest's
// directory.
ChunkData LoadChunkData(const std::string &manifest_path,
                        const std::string &chunk_id);

}  // namespace acrokit

#endif  // ACROKIT_MINER_H_
