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


#include "acrokit/miner.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace acrokit {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

// Token range [lo, hi) of seq rendered as context tokens.
class ContextRange {
 public:
  ContextRange(const AcronymSpan &acronym, int excise_begin, int excise_end)
      : acronym_(acronym), excise_begin_(excise_begin), excise_end_(excise_end) {}

  bool Excised(int i) const {
    return i >= excise_begin_ && i < excise_end_ &&
           !(i >= acronym_.begin && i < acronym_.end);
  }

  // Number of context tokens produced by [lo, hi).
  int Weight(int lo, int hi) const {
    int n = 0;
    for (int i = lo; i < hi; ++i) {
      if (i > acronym_.begin && i < acronym_.end) continue;
      if (!Excised(i)) ++n;
    }
    return n;
  }

  Context Render(const TokenSequence &seq, int lo, int hi) const {
    Context context;
    for (int i = lo; i < hi; ++i) {
      if (i == acronym_.begin) {
        context.acronym_idx = static_cast<int>(context.tokens.size());
        context.tokens.push_back(acronym_.text);
        i = acronym_.end - 1;
        continue;
      }
      if (!Excised(i)) context.tokens.push_back(seq[i].text);
    }
    return context;
  }

 private:
  const AcronymSpan &acronym_;
  int excise_begin_;
  int excise_end_;
};

uint64_t Fnv1a(std::string_view text, uint64_t hash = 1469598103934665603ull) {
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string ReadWhole(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteWhole(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace

Context BuildContext(const TokenSequence &seq, const AcronymSpan &acronym,
                     int max_tokens, int excise_begin, int excise_end) {
  const ContextRange range(acronym, excise_begin, excise_end);
  auto [lo, hi] = seq.SentenceAround(acronym.begin);
  hi = std::max(hi, acronym.end);
  if (range.Weight(lo, hi) > max_tokens) {
    // Grow outwards from the acronym one token at a time.
    int left = acronym.begin;
    int right = acronym.end;
    int weight = 1;
    bool take_left = true;
    while (weight < max_tokens && (left > lo || right < hi)) {
      if ((take_left && left > lo) || right >= hi) {
        --left;
        if (!range.Excised(left)) ++weight;
      } else {
        if (!range.Excised(right)) ++weight;
        ++right;
      }
      take_left = !take_left;
    }
    return range.Render(seq, left, right);
  }
  int weight = range.Weight(lo, hi);
  bool grow_left = lo > 0;
  bool grow_right = hi < seq.size();
  while (grow_left || grow_right) {
    if (grow_left) {
      const int prev = seq.SentenceAround(lo - 1).first;
      const int extra = range.Weight(prev, lo);
      if (weight + extra <= max_tokens) {
        weight += extra;
        lo = prev;
        grow_left = lo > 0;
      } else {
        grow_left = false;
      }
    }
    if (grow_right) {
      const int next = seq.SentenceAround(hi).second;
      const int extra = range.Weight(hi, next);
      if (weight + extra <= max_tokens) {
        weight += extra;
        hi = next;
        grow_right = hi < seq.size();
      } else {
        grow_right = false;
      }
    }
  }
  return range.Render(seq, lo, hi);
}

MinedDocument MineDocument(const Document &doc, const Identifier &identifier,
                           int max_tokens) {
  MinedDocument mined;
  const TokenSequence seq = Tokenize(doc.text);
  const AIAnnotation annotation = identifier.Identify(seq);
  for (const AcronymPair &pair : annotation.pairs) {
    const std::string label = NormalizeLongForm(pair.long_form.text);
    mined.pairs.push_back({pair.acronym.text, label, pair.rule});

    Context context = BuildContext(seq, pair.acronym, max_tokens,
                                   pair.long_form.begin, pair.long_form.end);
    ADSample sample;
    sample.id = doc.corpus + "/" + doc.id + "#" +
                std::to_string(mined.samples.size());
    sample.doc = doc.id;
    sample.corpus = doc.corpus;
    sample.acronym = pair.acronym.text;
    sample.tokens = std::move(context.tokens);
    sample.acronym_idx = context.acronym_idx;
    sample.label = label;
    mined.samples.push_back(std::move(sample));
  }
  return mined;
}

MinedCorpus MineCorpus(const std::vector<Document> &docs,
                       const Identifier &identifier, int max_tokens) {
  MinedCorpus corpus;
  for (const Document &doc : docs) {
    MinedDocument mined = MineDocument(doc, identifier, max_tokens);
    for (const MinedPair &pair : mined.pairs) {
      corpus.glossary.AddPair(pair.acronym, pair.long_form, doc.corpus);
    }
    for (ADSample &sample : mined.samples) {
      corpus.samples.push_back(std::move(sample));
    }
  }
  return corpus;
}

int ChunkManifest::ChunkOf(const std::string &acronym) const {
  for (size_t i = 0; i < chunks.size(); ++i) {
    if (std::binary_search(chunks[i].acronyms.begin(), chunks[i].acronyms.end(),
                           acronym)) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

const Chunk *ChunkManifest::Find(const std::string &chunk_id) const {
  for (const Chunk &chunk : chunks) {
    if (chunk.chunk_id == chunk_id) return &chunk;
  }
  return nullptr;
}

ChunkManifest AssignChunks(const std::vector<ADSample> &samples,
                           int64_t chunk_size_limit, uint64_t seed) {
  struct Group {
    std::string acronym;
    int64_t size = 0;
    int first = 0;
    std::set<std::string> labels;
  };
  std::vector<Group> groups;
  std::unordered_map<std::string, int> index;
  for (size_t i = 0; i < samples.size(); ++i) {
    auto [it, inserted] = index.try_emplace(samples[i].acronym, groups.size());
    if (inserted) groups.push_back({samples[i].acronym, 0, static_cast<int>(i), {}});
    Group &group = groups[it->second];
    ++group.size;
    group.labels.insert(samples[i].label);
  }
  std::stable_sort(groups.begin(), groups.end(),
                   [](const Group &a, const Group &b) { return a.size > b.size; });

  struct Bin {
    std::vector<const Group *> groups;
    int64_t total = 0;
    bool dedicated = false;
  };
  std::vector<Bin> bins;
  for (const Group &group : groups) {
    Bin *target = nullptr;
    if (group.size <= chunk_size_limit) {
      for (Bin &bin : bins) {
        if (!bin.dedicated && bin.total + group.size <= chunk_size_limit) {
          target = &bin;
          break;
        }
      }
    }
    if (target == nullptr) {
      bins.push_back({});
      target = &bins.back();
      target->dedicated = group.size > chunk_size_limit;
    }
    target->groups.push_back(&group);
    target->total += group.size;
  }

  ChunkManifest manifest;
  manifest.chunk_size_limit = chunk_size_limit;
  manifest.seed = seed;
  for (size_t b = 0; b < bins.size(); ++b) {
    Chunk chunk;
    char id[24];
    std::snprintf(id, sizeof(id), "%03zu", b);
    chunk.chunk_id = id;
    std::set<std::string> labels;
    for (const Group *group : bins[b].groups) {
      chunk.acronyms.push_back(group->acronym);
      chunk.sample_counts[group->acronym] = group->size;
      labels.insert(group->labels.begin(), group->labels.end());
    }
    std::sort(chunk.acronyms.begin(), chunk.acronyms.end());
    chunk.label_space.assign(labels.begin(), labels.end());
    chunk.total = bins[b].total;
    manifest.chunks.push_back(std::move(chunk));
  }
  return manifest;
}

SplitCounts SplitSizes(int n) {
  if (n <= 0) return {};
  if (n < 3) return {1, 0, n - 1};
  SplitCounts counts{8 * n / 10, n / 10, 0};
  counts.test = n - counts.train - counts.dev;
  if (n >= 10 && 10 * counts.test > n + 10) {
    // Deficits in tenths of a sample.
    const int train_deficit = 8 * n - 10 * counts.train;
    const int dev_deficit = n - 10 * counts.dev;
    if (dev_deficit > train_deficit) {
      ++counts.dev;
    } else {
      ++counts.train;
    }
    --counts.test;
  }
  return counts;
}

DatasetSplits Split(const std::vector<ADSample> &samples, uint64_t seed) {
  std::vector<std::pair<std::string, std::vector<int>>> groups;
  std::unordered_map<std::string, int> index;
  for (size_t i = 0; i < samples.size(); ++i) {
    std::string key = samples[i].acronym;
    key += '\0';
    key += samples[i].label;
    auto [it, inserted] = index.try_emplace(key, groups.size());
    if (inserted) groups.emplace_back(key, std::vector<int>{});
    groups[it->second].second.push_back(static_cast<int>(i));
  }
  DatasetSplits splits;
  for (auto &[key, members] : groups) {
    std::mt19937_64 rng(Fnv1a(key, seed ^ 1469598103934665603ull));
    std::shuffle(members.begin(), members.end(), rng);
    const SplitCounts counts = SplitSizes(static_cast<int>(members.size()));
    auto it = members.begin();
    splits.train.insert(splits.train.end(), it, it + counts.train);
    it += counts.train;
    splits.dev.insert(splits.dev.end(), it, it + counts.dev);
    it += counts.dev;
    splits.test.insert(splits.test.end(), it, members.end());
  }
  for (auto *part : {&splits.train, &splits.dev, &splits.test}) {
    std::sort(part->begin(), part->end());
  }
  return splits;
}

std::vector<Document> ReadDocumentsJsonl(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<Document> docs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json record = json::parse(line);
      Document doc;
      doc.id = record.at("id").get<std::string>();
      doc.text = record.at("text").get<std::string>();
      doc.corpus = record.value("corpus", std::string("default"));
      docs.push_back(std::move(doc));
    } catch (const json::exception &e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " +
                               e.what());
    }
  }
  return docs;
}

std::string SampleToJson(const ADSample &sample) {
  ordered_json record;
  record["id"] = sample.id;
  record["doc"] = sample.doc;
  record["corpus"] = sample.corpus;
  record["acronym"] = sample.acronym;
  record["acronym_idx"] = sample.acronym_idx;
  record["label"] = sample.label;
  record["tokens"] = sample.tokens;
  return record.dump();
}

ADSample SampleFromJson(std::string_view line) {
  const json record = json::parse(line);
  ADSample sample;
  sample.id = record.at("id").get<std::string>();
  sample.doc = record.value("doc", std::string());
  sample.corpus = record.value("corpus", std::string());
  sample.acronym = record.at("acronym").get<std::string>();
  sample.acronym_idx = record.at("acronym_idx").get<int>();
  sample.label = record.at("label").get<std::string>();
  sample.tokens = record.at("tokens").get<std::vector<std::string>>();
  if (sample.acronym_idx < 0 ||
      sample.acronym_idx >= static_cast<int>(sample.tokens.size())) {
    throw std::runtime_error("sample " + sample.id + ": acronym_idx out of range");
  }
  return sample;
}

std::vector<ADSample> ReadSamplesJsonl(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<ADSample> samples;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      samples.push_back(SampleFromJson(line));
    } catch (const std::exception &e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " +
                               e.what());
    }
  }
  return samples;
}

void WriteSamplesJsonl(const std::string &path,
                       const std::vector<ADSample> &samples) {
  std::string content;
  for (const ADSample &sample : samples) {
    content += SampleToJson(sample);
    content += '\n';
  }
  WriteWhole(path, content);
}

std::string ManifestToJson(const ChunkManifest &manifest) {
  ordered_json root;
  root["version"] = 1;
  root["seed"] = manifest.seed;
  root["chunk_size_limit"] = manifest.chunk_size_limit;
  root["chunks"] = ordered_json::array();
  for (const Chunk &chunk : manifest.chunks) {
    ordered_json item;
    item["chunk_id"] = chunk.chunk_id;
    item["acronyms"] = chunk.acronyms;
    item["label_space"] = chunk.label_space;
    item["sample_counts"] = chunk.sample_counts;
    item["total"] = chunk.total;
    root["chunks"].push_back(std::move(item));
  }
  return root.dump(2);
}

ChunkManifest ManifestFromJson(std::string_view text) {
  try {
    const json root = json::parse(text);
    if (root.at("version") != 1) throw std::runtime_error("unsupported manifest version");
    ChunkManifest manifest;
    manifest.seed = root.at("seed").get<uint64_t>();
    manifest.chunk_size_limit = root.at("chunk_size_limit").get<int64_t>();
    for (const json &item : root.at("chunks")) {
      Chunk chunk;
      chunk.chunk_id = item.at("chunk_id").get<std::string>();
      chunk.acronyms = item.at("acronyms").get<std::vector<std::string>>();
      chunk.label_space = item.at("label_space").get<std::vector<std::string>>();
      chunk.sample_counts =
          item.at("sample_counts").get<std::map<std::string, int64_t>>();
      chunk.total = item.at("total").get<int64_t>();
      manifest.chunks.push_back(std::move(chunk));
    }
    return manifest;
  } catch (const json::exception &e) {
    throw std::runtime_error(std::string("malformed manifest: ") + e.what());
  }
}

void WriteDataset(const std::string &out_dir, const MinedCorpus &corpus,
                  const ChunkManifest &manifest, const DatasetSplits &splits) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  corpus.glossary.Save((dir / "glossary.json").string());
  WriteWhole((dir / "manifest.json").string(), ManifestToJson(manifest) + "\n");

  ordered_json split_json;
  split_json["seed"] = manifest.seed;
  const std::pair<const char *, const std::vector<int> *> parts[] = {
      {"train", &splits.train}, {"dev", &splits.dev}, {"test", &splits.test}};
  for (const auto &[name, indices] : parts) {
    ordered_json ids = ordered_json::array();
    for (int i : *indices) ids.push_back(corpus.samples[i].id);
    split_json[name] = std::move(ids);
  }
  WriteWhole((dir / "splits.json").string(), split_json.dump() + "\n");

  std::map<std::string, std::vector<ADSample>> by_chunk;
  for (const ADSample &sample : corpus.samples) {
    const int c = manifest.ChunkOf(sample.acronym);
    if (c < 0) throw std::runtime_error("sample without chunk: " + sample.id);
    by_chunk[manifest.chunks[c].chunk_id].push_back(sample);
  }
  for (const Chunk &chunk : manifest.chunks) {
    WriteSamplesJsonl((dir / ("samples-" + chunk.chunk_id + ".jsonl")).string(),
                      by_chunk[chunk.chunk_id]);
  }
}

ChunkData LoadChunkData(const std::string &manifest_path,
                        const std::string &chunk_id) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::path(manifest_path).parent_path();
  const ChunkManifest manifest = ManifestFromJson(ReadWhole(manifest_path));
  const Chunk *chunk = manifest.Find(chunk_id);
  if (chunk == nullptr) throw std::runtime_error("no chunk '" + chunk_id + "'");

  std::unordered_map<std::string, int> part_of;
  try {
    const json splits = json::parse(ReadWhole((dir / "splits.json").string()));
    const char *names[] = {"train", "dev", "test"};
    for (int p = 0; p < 3; ++p) {
      for (const json &id : splits.at(names[p])) part_of[id.get<std::string>()] = p;
    }
  } catch (const json::exception &e) {
    throw std::runtime_error(std::string("malformed splits.json: ") + e.what());
  }

  ChunkData data;
  data.chunk = *chunk;
  for (ADSample &sample :
       ReadSamplesJsonl((dir / ("samples-" + chunk_id + ".jsonl")).string())) {
    auto it = part_of.find(sample.id);
    if (it == part_of.end()) {
      throw std::runtime_error("sample " + sample.id + " missing from splits.json");
    }
    std::vector<ADSample> *parts[] = {&data.train, &data.dev, &data.test};
    parts[it->second]->push_back(std::move(sample));
  }
  return data;
}

}  // namespace acrokit
