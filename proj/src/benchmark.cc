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


#include "acrokit/benchmark.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace acrokit {

using json = nlohmann::json;

namespace {

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw EvaluationError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<json> ParseRecords(std::string_view content) {
  std::vector<json> records;
  const size_t first = content.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return records;
  try {
    if (content[first] == '[') {
      for (json &record : json::parse(content)) records.push_back(std::move(record));
      return records;
    }
    std::istringstream lines{std::string(content)};
    std::string line;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      records.push_back(json::parse(line));
    }
  } catch (const json::parse_error &e) {
    throw EvaluationError(std::string("malformed benchmark file: ") + e.what());
  }
  return records;
}

std::string RecordId(const json &record, size_t index) {
  if (record.contains("id")) {
    const json &id = record["id"];
    return id.is_string() ? id.get<std::string>() : id.dump();
  }
  return "#" + std::to_string(index);
}

}  // namespace

SpanSet SpansFromBio(const std::vector<std::string> &labels, const std::string &id,
                     std::vector<std::string> *warnings) {
  SpanSet spans;
  std::string open;  // "short", "long" or empty
  int begin = 0;
  auto close = [&](int end) {
    if (open == "short") spans.acronyms.insert({begin, end});
    if (open == "long") spans.long_forms.insert({begin, end});
    open.clear();
  };
  const int n = static_cast<int>(labels.size());
  for (int i = 0; i < n; ++i) {
    const std::string &tag = labels[i];
    if (tag == "O") {
      close(i);
      continue;
    }
    const bool inside = tag.rfind("I-", 0) == 0;
    if (!inside && tag.rfind("B-", 0) != 0) {
      throw EvaluationError("record " + id + ": unknown tag '" + tag + "'");
    }
    const std::string type = tag.substr(2);
    if (type != "short" && type != "long") {
      throw EvaluationError("record " + id + ": unknown tag '" + tag + "'");
    }
    if (inside && open == type) continue;
    if (inside && warnings != nullptr) {
      warnings->push_back("record " + id + ": token " + std::to_string(i) + " tag " +
                          tag + " without preceding B-" + type + ", read as B-" + type);
    }
    close(i);
    open = type;
    begin = i;
  }
  close(n);
  return spans;
}

std::vector<AIRecord> ParseAIRecords(std::string_view content,
                                     std::vector<std::string> *warnings) {
  std::vector<AIRecord> records;
  const std::vector<json> raw = ParseRecords(content);
  for (size_t k = 0; k < raw.size(); ++k) {
    const json &item = raw[k];
    AIRecord record;
    record.id = RecordId(item, k);
    try {
      record.tokens = item.at("tokens").get<std::vector<std::string>>();
      const auto labels = item.at("labels").get<std::vector<std::string>>();
      if (labels.size() != record.tokens.size()) {
        throw EvaluationError("record " + record.id + ": " +
                              std::to_string(labels.size()) + " labels for " +
                              std::to_string(record.tokens.size()) + " tokens");
      }
      record.spans = SpansFromBio(labels, record.id, warnings);
    } catch (const json::exception &e) {
      throw EvaluationError("record " + record.id + ": " + e.what());
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<AIRecord> LoadAIRecords(const std::string &path,
                                    std::vector<std::string> *warnings) {
  return ParseAIRecords(ReadFile(path), warnings);
}

AIDocument PredictAIRecord(const AIRecord &record, const Identifier &identifier) {
  std::string text;
  std::vector<int> owner;
  for (size_t i = 0; i < record.tokens.size(); ++i) {
    if (i > 0) {
      text += ' ';
      owner.push_back(-1);
    }
    text += record.tokens[i];
    owner.resize(text.size(), static_cast<int>(i));
  }
  const TokenSequence seq = Tokenize(text);
  const AIAnnotation annotation = identifier.Identify(seq);

  auto map_span = [&](int begin, int end) -> TokenRange {
    return {owner[seq[begin].start], owner[seq[end - 1].end - 1] + 1};
  };
  AIDocument doc;
  doc.id = record.id;
  for (const AcronymSpan &a : annotation.acronyms) {
    doc.spans.acronyms.insert(map_span(a.begin, a.end));
  }
  for (const AcronymPair &p : annotation.pairs) {
    doc.spans.long_forms.insert(map_span(p.long_form.begin, p.long_form.end));
  }
  return doc;
}

std::vector<ADSample> ParseADRecords(std::string_view content) {
  std::vector<ADSample> samples;
  const std::vector<json> raw = ParseRecords(content);
  for (size_t k = 0; k < raw.size(); ++k) {
    const json &item = raw[k];
    ADSample sample;
    sample.id = RecordId(item, k);
    try {
      sample.tokens = item.at("tokens").get<std::vector<std::string>>();
      sample.acronym_idx = item.at("acronym").get<int>();
      sample.label = NormalizeLongForm(item.at("expansion").get<std::string>());
    } catch (const json::exception &e) {
      throw EvaluationError("record " + sample.id + ": " + e.what());
    }
    if (sample.acronym_idx < 0 ||
        sample.acronym_idx >= static_cast<int>(sample.tokens.size())) {
      throw EvaluationError("record " + sample.id + ": acronym index out of range");
    }
    sample.acronym = sample.tokens[sample.acronym_idx];
    sample.doc = sample.id;
    samples.push_back(std::move(sample));
  }
  return samples;
}

std::vector<ADSample> LoadADRecords(const std::string &path) {
  return ParseADRecords(ReadFile(path));
}

Glossary ParseADDictionary(std::string_view content,
                           std::vector<std::string> *warnings) {
  json root;
  try {
    root = json::parse(content);
  } catch (const json::parse_error &e) {
    throw EvaluationError(std::string("malformed dictionary: ") + e.what());
  }
  if (!root.is_object()) throw EvaluationError("dictionary must be a JSON object");
  Glossary glossary;
  for (const auto &[acronym, forms] : root.items()) {
    if (!IsAcronym(acronym)) {
      if (warnings != nullptr) {
        warnings->push_back("dictionary key '" + acronym + "' is not an acronym, skipped");
      }
      continue;
    }
    if (!forms.is_array()) {
      throw EvaluationError("dictionary entry " + acronym + " must be a list");
    }
    for (const json &lf : forms) {
      if (!lf.is_string()) {
        throw EvaluationError("dictionary entry " + acronym + " has a non-string");
      }
      glossary.AddPair(acronym, lf.get<std::string>(), "benchmark");
    }
  }
  return glossary;
}

Glossary LoadADDictionary(const std::string &path, std::vector<std::string> *warnings) {
  return ParseADDictionary(ReadFile(path), warnings);
}

}  // namespace acrokit
