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


#ifndef ACROKIT_ANNOTATION_JSON_H_
#define ACROKIT_ANNOTATION_JSON_H_

#include "acrokit/glossary.h"
#include "acrokit/identifier.h"
#include "acrokit/predictor.h"
#include "acrokit/text.h"
#include "json.hpp"

namespace acrokit {

// Offsets are code points into seq.source(). Spans carry both "surface" (the
// exact source text) and "text" (tokens joined by spaces).
//
//   {"acronyms": [{"id", "text", "surface", "start", "end", "tokens": [b, e]}],
//    "pairs": [{"acronym": id, "rule", "long_form": {...same span fields}}]}
nlohmann::json AnnotationToJson(const TokenSequence &seq,
                                const AIAnnotation &annotation);

// At most top_k candidates (all when top_k <= 0).
nlohmann::json PredictionToJson(const RankedPrediction &prediction, int top_k);

nlohmann::json GlossaryEntryToJson(const GlossaryEntry &entry);

}  // namespace acrokit

#endif  // ACROKIT_ANNOTATION_JSON_H_
