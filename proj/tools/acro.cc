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


// Command-line front end: identify, mine, train, expand, eval, serve, stats.

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "acrokit/annotation_json.h"
#include "acrokit/benchmark.h"
#include "acrokit/config.h"
#include "acrokit/evaluator.h"
#include "acrokit/glossary.h"
#include "acrokit/identifier.h"
#include "acrokit/miner.h"
#include "acrokit/predictor.h"
#include "acrokit/service.h"
#include "acrokit/trainer.h"
#include "json.hpp"

namespace {

using json = nlohmann::json;
using namespace acrokit;

std::string ReadInput(const std::string &text, const std::string &path) {
  if (!text.empty()) return text;
  std::stringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

Identifier MakeIdentifier(const std::string &cues) {
  return Identifier(cues.empty() ? IdentifierOptions{} : LoadIdentifierOptions(cues));
}

void PrintWarnings(const std::vector<std::string> &warnings) {
  for (const std::string &w : warnings) std::cerr << "warning: " << w << "\n";
}

struct IdentifyArgs {
  std::string text;
  std::string input;
  std::string cues;
  std::string format = "json";
};

int RunIdentify(const IdentifyArgs &args) {
  const std::string text = ReadInput(args.text, args.input);
  const TokenSequence seq = Tokenize(text);
  const AIAnnotation annotation = MakeIdentifier(args.cues).Identify(seq);
  if (args.format == "tsv") {
    for (const DefinitionRow &row : SummarizeDefinitions(annotation)) {
      std::cout << row.acronym << "\t" << row.long_form << "\t" << RuleName(row.rule)
                << "\n";
    }
  } else {
    std::cout << AnnotationToJson(seq, annotation).dump(2) << "\n";
  }
  return 0;
}

struct MineArgs {
  std::string input;
  std::string out_dir;
  std::string cues;
  int64_t chunk_size = kDefaultChunkSize;
  uint64_t seed = 13;
  int max_context = kDefaultContextTokens;
};

int RunMine(const MineArgs &args) {
  const std::vector<Document> docs = ReadDocumentsJsonl(args.input);
  const MinedCorpus corpus = MineCorpus(docs, MakeIdentifier(args.cues), args.max_context);
  const ChunkManifest manifest = AssignChunks(corpus.samples, args.chunk_size, args.seed);
  const DatasetSplits splits = Split(corpus.samples, args.seed);
  WriteDataset(args.out_dir, corpus, manifest, splits);
  const GlossaryStats stats = corpus.glossary.Stats();
  std::cerr << docs.size() << " documents, " << corpus.samples.size() << " samples, "
            << stats.unique_acronyms << " acronyms, " << stats.unique_long_forms
            << " long forms, " << manifest.chunks.size() << " chunks\n";
  return 0;
}

struct TrainArgs {
  std::string manifest;
  std::vector<std::string> chunks;
  std::string config;
  std::string out_dir;
};

int RunTrain(const TrainArgs &args) {
  const TrainConfig config =
      args.config.empty() ? TrainConfig{} : LoadTrainConfig(args.config);
  std::vector<std::string> chunk_ids = args.chunks;
  if (chunk_ids.empty()) {
    std::ifstream in(args.manifest);
    std::stringstream buffer;
    buffer << in.rdbuf();
    for (const Chunk &chunk : ManifestFromJson(buffer.str()).chunks) {
      chunk_ids.push_back(chunk.chunk_id);
    }
  }
  std::filesystem::create_directories(args.out_dir);
  for (const std::string &id : chunk_ids) {
    const ChunkData data = LoadChunkData(args.manifest, id);
    const TrainResult result = TrainChunk(data.chunk, data.train, data.dev, config);
    const std::filesystem::path base = std::filesystem::path(args.out_dir) / id;
    SaveModel(result.params, base.string() + ".json");
    json log = json::array();
    for (const EpochLog &e : result.log) {
      log.push_back({{"epoch", e.epoch}, {"loss", e.mean_loss}, {"dev_accuracy", e.dev_accuracy}});
      std::cerr << "chunk " << id << " epoch " << e.epoch << " loss " << e.mean_loss
                << " dev " << e.dev_accuracy << "\n";
    }
    const double test = data.test.empty()
                            ? -1.0
                            : MaskedAccuracy(result.params, data.test,
                                             CandidatesFromSamples(data.train));
    std::ofstream(base.string() + ".log") << json{{"chunk_id", id},
                                                  {"best_epoch", result.best_epoch},
                                                  {"best_dev_accuracy", result.best_dev_accuracy},
                                                  {"test_accuracy", test},
                                                  {"epochs", log}}
                                                 .dump(2)
                                          << "\n";
    std::cerr << "chunk " << id << " best epoch " << result.best_epoch << " test "
              << test << "\n";
  }
  return 0;
}

struct ExpandArgs {
  std::string text;
  std::string input;
  std::string glossary;
  std::string models;
  std::string cues;
  int top_k = 10;
  std::string format = "json";
};

int RunExpand(const ExpandArgs &args) {
  const std::string text = ReadInput(args.text, args.input);
  const Glossary glossary = Glossary::Load(args.glossary);
  const ModelStore models =
      args.models.empty() ? ModelStore{} : ModelStore::LoadDir(args.models);
  const TokenSequence seq = Tokenize(text);
  const AIAnnotation annotation = MakeIdentifier(args.cues).Identify(seq);
  std::set<std::string> local;
  for (const AcronymPair &pair : annotation.pairs) local.insert(pair.acronym.text);

  json out = json::array();
  for (size_t i = 0; i < annotation.acronyms.size(); ++i) {
    const AcronymSpan &mention = annotation.acronyms[i];
    if (local.count(mention.text)) continue;
    const RankedPrediction prediction = Predict(seq, mention, glossary, models);
    if (args.format == "text") {
      std::cout << mention.text << " [" << PredictionSourceName(prediction.source) << "]\n";
      int shown = 0;
      for (const ScoredCandidate &c : prediction.candidates) {
        if (shown++ >= args.top_k) break;
        std::cout << "  " << c.score << "\t" << c.long_form << "\n";
      }
    } else {
      json item = PredictionToJson(prediction, args.top_k);
      item["occurrence"] = i;
      item["text"] = mention.text;
      out.push_back(std::move(item));
    }
  }
  if (args.format != "text") std::cout << out.dump(2) << "\n";
  return 0;
}

struct EvalArgs {
  std::string gold;
  std::string pred;
  std::string cues;
  std::string dictionary;
  std::string models;
  std::string train;
  std::string dev;
  std::string config;
  std::string system = "acrokit";
  bool json_report = false;
};

int RunEvalAI(const EvalArgs &args) {
  std::vector<std::string> warnings;
  const std::vector<AIRecord> gold = LoadAIRecords(args.gold, &warnings);
  std::vector<AIDocument> gold_docs;
  std::vector<AIDocument> pred_docs;
  for (const AIRecord &r : gold) gold_docs.push_back({r.id, r.spans});
  if (!args.pred.empty()) {
    for (const AIRecord &r : LoadAIRecords(args.pred, &warnings)) {
      pred_docs.push_back({r.id, r.spans});
    }
  } else {
    const Identifier identifier = MakeIdentifier(args.cues);
    for (const AIRecord &r : gold) pred_docs.push_back(PredictAIRecord(r, identifier));
  }
  PrintWarnings(warnings);
  const AIScore score = ScoreAI(gold_docs, pred_docs);
  if (args.json_report) {
    auto prf = [](const PRF &p) {
      return json{{"precision", p.precision}, {"recall", p.recall}, {"f1", p.f1}};
    };
    std::cout << json{{"system", args.system},
                      {"documents", gold_docs.size()},
                      {"acronym", prf(score.acronym)},
                      {"long_form", prf(score.long_form)},
                      {"macro_f1", score.macro_f1}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << FormatAIReport(args.system, score);
  }
  return 0;
}

std::map<std::string, std::string> ReadADPredictions(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();
  std::vector<json> records;
  if (content.find_first_not_of(" \t\r\n") != std::string::npos &&
      content[content.find_first_not_of(" \t\r\n")] == '[') {
    for (json &r : json::parse(content)) records.push_back(std::move(r));
  } else {
    std::istringstream lines(content);
    std::string line;
    while (std::getline(lines, line)) {
      if (!line.empty()) records.push_back(json::parse(line));
    }
  }
  std::map<std::string, std::string> predictions;
  for (const json &r : records) {
    const json &chosen = r.contains("chosen") ? r.at("chosen") : r.at("expansion");
    if (chosen.is_string()) {
      predictions[r.at("id").get<std::string>()] = NormalizeLongForm(chosen.get<std::string>());
    }
  }
  return predictions;
}

int RunEvalAD(const EvalArgs &args) {
  const std::vector<ADSample> gold = LoadADRecords(args.gold);
  std::vector<ADGold> gold_labels;
  for (const ADSample &s : gold) gold_labels.push_back({s.id, s.label});

  std::map<std::string, std::string> predictions;
  if (!args.pred.empty()) {
    predictions = ReadADPredictions(args.pred);
  } else {
    if (args.dictionary.empty()) {
      throw std::runtime_error("eval ad needs --pred or --dictionary");
    }
    std::vector<std::string> warnings;
    const Glossary glossary = LoadADDictionary(args.dictionary, &warnings);
    PrintWarnings(warnings);
    ModelStore models;
    if (!args.models.empty()) {
      models = ModelStore::LoadDir(args.models);
    } else if (!args.train.empty()) {
      const TrainConfig config =
          args.config.empty() ? TrainConfig{} : LoadTrainConfig(args.config);
      std::vector<ADSample> train;
      for (ADSample &s : LoadADRecords(args.train)) {
        std::optional<std::string> key = glossary.ResolveKey(s.acronym);
        if (!key) continue;
        s.acronym = *key;
        train.push_back(std::move(s));
      }
      std::vector<ADSample> dev;
      if (!args.dev.empty()) {
        for (ADSample &s : LoadADRecords(args.dev)) {
          std::optional<std::string> key = glossary.ResolveKey(s.acronym);
          if (!key) continue;
          s.acronym = *key;
          dev.push_back(std::move(s));
        }
      }
      const ChunkManifest manifest = AssignChunks(train, kDefaultChunkSize, config.seed);
      for (const Chunk &chunk : manifest.chunks) {
        std::vector<ADSample> chunk_train;
        std::vector<ADSample> chunk_dev;
        auto in_chunk = [&](const ADSample &s) {
          const int c = manifest.ChunkOf(s.acronym);
          return c >= 0 && manifest.chunks[c].chunk_id == chunk.chunk_id;
        };
        std::copy_if(train.begin(), train.end(), std::back_inserter(chunk_train), in_chunk);
        std::copy_if(dev.begin(), dev.end(), std::back_inserter(chunk_dev), in_chunk);
        std::cerr << "training chunk " << chunk.chunk_id << " (" << chunk_train.size()
                  << " samples)\n";
        models.Add(TrainChunk(chunk, chunk_train, chunk_dev, config).params);
      }
    }
    for (const ADSample &s : gold) {
      const RankedPrediction p = Predict(s.tokens, s.acronym_idx, glossary, models);
      if (!p.chosen.empty()) predictions[s.id] = p.chosen;
    }
  }
  const ADScore score = ScoreAD(gold_labels, predictions);
  if (args.json_report) {
    std::cout << json{{"system", args.system},
                      {"samples", score.samples},
                      {"missing", score.missing},
                      {"correct", score.correct},
                      {"precision", score.macro.precision},
                      {"recall", score.macro.recall},
                      {"f1", score.macro.f1}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << FormatADReport(args.system, score);
  }
  return 0;
}

acrokit::HttpServer *active_server = nullptr;

void HandleSignal(int) {
  if (active_server != nullptr) active_server->Stop();
}

int RunServe(const std::string &config_path, int port) {
  ServiceConfig config = LoadServiceConfig(config_path);
  if (port > 0) config.port = port;
  const AcronymService service = AcronymService::FromConfig(config);
  HttpServer server(service);
  active_server = &server;
  std::signal(SIGINT, HandleSignal);
  std::signal(SIGTERM, HandleSignal);
  std::cerr << "listening on " << config.host << ":" << config.port << "\n";
  if (!server.Listen(config.host, config.port)) {
    std::cerr << "cannot listen on " << config.host << ":" << config.port << "\n";
    return 1;
  }
  return 0;
}

int RunStats(const std::string &path) {
  const GlossaryStats stats = Glossary::Load(path).Stats();
  std::cout << json{{"unique_acronyms", stats.unique_acronyms},
                    {"unique_long_forms", stats.unique_long_forms},
                    {"ambiguous_acronyms", stats.ambiguous_acronyms},
                    {"avg_long_forms_per_acronym", stats.avg_long_forms_per_acronym}}
                   .dump(2)
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Acronym identification, glossary mining and disambiguation"};
  app.require_subcommand(1);

  IdentifyArgs identify;
  CLI::App *identify_cmd = app.add_subcommand("identify", "Find acronyms and local definitions");
  identify_cmd->add_option("--text", identify.text, "Text to analyse");
  identify_cmd->add_option("--input", identify.input, "File to analyse (default stdin)");
  identify_cmd->add_option("--cues", identify.cues, "Cue phrase config (TOML)");
  identify_cmd->add_option("--format", identify.format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));

  MineArgs mine;
  CLI::App *mine_cmd = app.add_subcommand("mine", "Build glossary and samples from a corpus");
  mine_cmd->add_option("--input", mine.input, "Corpus JSONL")->required();
  mine_cmd->add_option("--out-dir", mine.out_dir, "Output directory")->required();
  mine_cmd->add_option("--chunk-size", mine.chunk_size, "Samples per chunk");
  mine_cmd->add_option("--seed", mine.seed, "Split seed");
  mine_cmd->add_option("--max-context", mine.max_context, "Context tokens per sample");
  mine_cmd->add_option("--cues", mine.cues, "Cue phrase config (TOML)");

  TrainArgs train;
  CLI::App *train_cmd = app.add_subcommand("train", "Train chunk models");
  train_cmd->add_option("--manifest", train.manifest, "manifest.json from mine")->required();
  train_cmd->add_option("--chunk", train.chunks, "Chunk id (repeatable; default all)");
  train_cmd->add_option("--config", train.config, "Training config (TOML)");
  train_cmd->add_option("--out", train.out_dir, "Model directory")->required();

  ExpandArgs expand;
  CLI::App *expand_cmd = app.add_subcommand("expand", "Disambiguate undefined acronyms");
  expand_cmd->add_option("--text", expand.text, "Text to analyse");
  expand_cmd->add_option("--input", expand.input, "File to analyse (default stdin)");
  expand_cmd->add_option("--glossary", expand.glossary, "glossary.json")->required();
  expand_cmd->add_option("--models", expand.models, "Model directory");
  expand_cmd->add_option("--cues", expand.cues, "Cue phrase config (TOML)");
  expand_cmd->add_option("--top-k", expand.top_k, "Candidates to show");
  expand_cmd->add_option("--format", expand.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  EvalArgs eval;
  CLI::App *eval_cmd = app.add_subcommand("eval", "Score against benchmark files");
  eval_cmd->require_subcommand(1);
  CLI::App *eval_ai = eval_cmd->add_subcommand("ai", "Acronym identification");
  CLI::App *eval_ad = eval_cmd->add_subcommand("ad", "Acronym disambiguation");
  for (CLI::App *cmd : {eval_ai, eval_ad}) {
    cmd->add_option("--gold", eval.gold, "Gold records")->required();
    cmd->add_option("--pred", eval.pred, "Predicted records");
    cmd->add_option("--system", eval.system, "System name in the report");
    cmd->add_flag("--json", eval.json_report, "JSON report");
  }
  eval_ai->add_option("--cues", eval.cues, "Cue phrase config (TOML)");
  eval_ad->add_option("--dictionary", eval.dictionary, "Acronym dictionary JSON");
  eval_ad->add_option("--models", eval.models, "Model directory");
  eval_ad->add_option("--train", eval.train, "Training records");
  eval_ad->add_option("--dev", eval.dev, "Development records");
  eval_ad->add_option("--config", eval.config, "Training config (TOML)");

  std::string serve_config;
  int serve_port = 0;
  CLI::App *serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  serve_cmd->add_option("--config", serve_config, "Service config (TOML)");
  serve_cmd->add_option("--port", serve_port, "Port (overrides config)");

  std::string stats_glossary;
  CLI::App *stats_cmd = app.add_subcommand("stats", "Glossary statistics");
  stats_cmd->add_option("--glossary", stats_glossary, "glossary.json")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (identify_cmd->parsed()) return RunIdentify(identify);
    if (mine_cmd->parsed()) return RunMine(mine);
    if (train_cmd->parsed()) return RunTrain(train);
    if (expand_cmd->parsed()) return RunExpand(expand);
    if (eval_ai->parsed()) return RunEvalAI(eval);
    if (eval_ad->parsed()) return RunEvalAD(eval);
    if (serve_cmd->parsed()) return RunServe(serve_config, serve_port);
    if (stats_cmd->parsed()) return RunStats(stats_glossary);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
