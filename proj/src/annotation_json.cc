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


#include "acrokit/annotation_json.h"

#include "acrokit/unicode.h"

namespace acrokit {

using json = nlohmann::json;

namespace {

json SpanJson(const TokenSequence &seq, const OffsetMap &offsets, int begin,
              int end, const std::string &text) {
  json span;
  span["text"] = text;
  span["surface"] = std::string(seq.Surface(begin, end));
  span["start"] = offsets.ToCodePoint(seq[begin].start);
  span["end"] = offsets.ToCodePoint(seq[end - 1].end);
  span["tokens"] = {begin, end};
  return span;
}

}  // namespace

json AnnotationToJson(const TokenSequence &seq, const AIAnnotation &annotation) {
  const OffsetMap offsets(seq.source());
  json out;
  out["acronyms"] = json::array();
  for (size_t i = 0; i < annotation.acronyms.size(); ++i) {
    const AcronymSpan &a = annotation.acronyms[i];
    json span = SpanJson(seq, offsets, a.begin, a.end, a.text);
    span["id"] = i;
    out["acronyms"].push_back(std::move(span));
  }
  out["pairs"] = json::array();
  for (const AcronymPair &pair : annotation.pairs) {
    json item;
    item["acronym"] = nullptr;
    for (size_t i = 0; i < annotation.acronyms.size(); ++i) {
      if (annotation.acronyms[i] == pair.acronym) item["acronym"] = i;
    }
    item["rule"] = std::string(RuleName(pair.rule));
    item["long_form"] = SpanJson(seq, offsets, pair.long_form.begin,
                                 pair.long_form.end, pair.long_form.text);
    out["pairs"].push_back(std::move(item));
  }
  return out;
}

json PredictionToJson(const RankedPrediction &prediction, int top_k) {
  json out;
  out["acronym"] = prediction.acronym.empty() ? json(nullptr) : json(prediction.acronym);
  out["source"] = std::string(PredictionSourceName(prediction.source));
  out["chosen"] = prediction.chosen.empty() ? json(nullptr) : json(prediction.chosen);
  out["candidates"] = json::array();
  for (const ScoredCandidate &c : prediction.candidates) {
    if (top_k > 0 && static_cast<int>(out["candidates"].size()) >= top_k) break;
    out["candidates"].push_back({{"long_form", c.long_form}, {"score", c.score}});
  }
  return out;
}

json GlossaryEntryToJson(const GlossaryEntry &entry) {
  json out;
  out["acronym"] = entry.acronym;
  out["ambiguous"] = entry.ambiguous();
  out["candidates"] = json::array();
  for (const Candidate &c : entry.candidates) {
    out["candidates"].push_back(
        {{"long_form", c.long_form}, {"frequency", c.frequency}, {"sources", c.sources}});
  }
  return out;
}

}  // namespace acrokit
