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


#ifndef ACROKIT_BENCHMARK_H_
#define ACROKIT_BENCHMARK_H_

#include <string>
#include <string_view>
#include <vector>

#include "acrokit/evaluator.h"
#include "acrokit/glossary.h"
#include "acrokit/identifier.h"
#include "acrokit/miner.h"

namespace acrokit {

// Adapters for the scientific-text AI/AD benchmark files. Records are read
// from a JSON array or from JSON lines.

// AI record: {"id", "tokens": [...], "labels": [...]} with tags O, B-short,
// I-short, B-long, I-long.
struct AIRecord {
  std::string id;
  std::vector<std::string> tokens;
  SpanSet spans;
};

// An I- tag that does not continue a span of the same type opens a new span;
// a warning naming the record is appended. Unknown tags throw
// EvaluationError.
SpanSet SpansFromBio(const std::vector<std::string> &labels, const std::string &id,
                     std::vector<std::string> *warnings);

std::vector<AIRecord> ParseAIRecords(std::string_view content,
                                     std::vector<std::string> *warnings);
std::vector<AIRecord> LoadAIRecords(const std::string &path,
                                    std::vector<std::string> *warnings);

// Runs the identifier on the space-joined record tokens and maps its spans
// back to record token indices.
AIDocument PredictAIRecord(const AIRecord &record, const Identifier &identifier);

// AD record: {"id", "tokens": [...], "acronym": token index, "expansion"}.
std::vector<ADSample> ParseADRecords(std::string_view content);
std::vector<ADSample> LoadADRecords(const std::string &path);

// Dictionary: {"<acronym>": ["<long form>", ...]}. Keys the detector rejects
// are skipped with a warning.
Glossary ParseADDictionary(std::string_view content,
                           std::vector<std::string> *warnings);
Glossary LoadADDictionary(const std::string &path,
                          std::vector<std::string> *warnings);

}  // namespace acrokit

#endif  // ACROKIT_BENCHMARK_H_
