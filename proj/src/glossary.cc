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


#include "acrokit/glossary.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "acrokit/identifier.h"
#include "acrokit/unicode.h"
#include "json.hpp"

namespace acrokit {

using ordered_json = nlohmann::ordered_json;

int64_t GlossaryEntry::total_frequency() const {
  int64_t total = 0;
  for (const Candidate &c : candidates) total += c.frequency;
  return total;
}

void Glossary::AddPair(std::string_view acronym, std::string_view long_form,
                       std::string_view source, int64_t count) {
  if (!IsAcronym(acronym)) {
    throw GlossaryError(GlossaryError::Kind::kInvalidAcronym,
                        "not an acronym: '" + std::string(acronym) + "'");
  }
  if (count < 1) {
    throw GlossaryError(GlossaryError::Kind::kMalformed, "count must be >= 1");
  }
  const std::string normalized = NormalizeLongForm(long_form);
  if (normalized.empty()) {
    throw GlossaryError(GlossaryError::Kind::kMalformed,
                        "empty long form for '" + std::string(acronym) + "'");
  }
  std::set<std::string> sources;
  if (!source.empty()) sources.emplace(source);
  Insert(std::string(acronym), normalized, count, sources);
}

void Glossary::Insert(const std::string &acronym, const std::string &long_form,
                      int64_t count, const std::set<std::string> &sources) {
  auto &forms = entries_[acronym];
  if (forms.empty()) folded_[Lowercase(acronym)].insert(acronym);
  auto [it, inserted] = forms.try_emplace(long_form);
  if (inserted) {
    ++long_form_count_;
    if (forms.size() == 2) ++ambiguous_count_;
  }
  it->second.frequency += count;
  it->second.sources.insert(sources.begin(), sources.end());
}

void Glossary::Merge(const Glossary &other) {
  for (const auto &[acronym, forms] : other.entries_) {
    for (const auto &[long_form, form] : forms) {
      Insert(acronym, long_form, form.frequency, form.sources);
    }
  }
}

std::optional<std::string> Glossary::ResolveKey(std::string_view acronym) const {
  const std::string key(acronym);
  if (entries_.count(key)) return key;
  auto it = folded_.find(Lowercase(acronym));
  if (it == folded_.end()) return std::nullopt;
  const std::string *best = nullptr;
  int64_t best_total = -1;
  for (const std::string &variant : it->second) {
    int64_t total = 0;
    for (const auto &[lf, form] : entries_.at(variant)) total += form.frequency;
    if (total > best_total) {
      best = &variant;
      best_total = total;
    }
  }
  return *best;
}

GlossaryEntry Glossary::Materialize(const std::string &key) const {
  GlossaryEntry entry;
  entry.acronym = key;
  for (const auto &[long_form, form] : entries_.at(key)) {
    entry.candidates.push_back({long_form, form.frequency, form.sources});
  }
  std::stable_sort(entry.candidates.begin(), entry.candidates.end(),
                   [](const Candidate &a, const Candidate &b) {
                     return a.frequency > b.frequency;
                   });
  return entry;
}

std::optional<GlossaryEntry> Glossary::Lookup(std::string_view acronym) const {
  std::optional<std::string> key = ResolveKey(acronym);
  if (!key) return std::nullopt;
  return Materialize(*key);
}

GlossaryStats Glossary::Stats() const {
  GlossaryStats stats;
  stats.unique_acronyms = static_cast<int64_t>(entries_.size());
  stats.unique_long_forms = long_form_count_;
  stats.ambiguous_acronyms = ambiguous_count_;
  if (stats.unique_acronyms > 0) {
    stats.avg_long_forms_per_acronym =
        static_cast<double>(long_form_count_) / stats.unique_acronyms;
  }
  return stats;
}

std::vector<std::string> Glossary::Acronyms() const {
  std::vector<std::string> keys;
  keys.reserve(entries_.size());
  for (const auto &[key, forms] : entries_) keys.push_back(key);
  return keys;
}

std::string Glossary::ToJson() const {
  ordered_json entries = ordered_json::object();
  for (const auto &[key, forms] : entries_) {
    ordered_json candidates = ordered_json::array();
    for (const Candidate &c : Materialize(key).candidates) {
      ordered_json item;
      item["lf"] = c.long_form;
      item["freq"] = c.frequency;
      item["sources"] = c.sources;
      candidates.push_back(std::move(item));
    }
    entries[key]["candidates"] = std::move(candidates);
  }
  ordered_json root;
  root["version"] = kFormatVersion;
  root["entries"] = std::move(entries);
  return root.dump();
}

Glossary Glossary::FromJson(std::string_view text) {
  using Kind = GlossaryError::Kind;
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw GlossaryError(Kind::kMalformed, e.what());
  }
  if (!root.is_object() || !root.contains("version")) {
    throw GlossaryError(Kind::kMalformed, "missing version");
  }
  if (root["version"] != kFormatVersion) {
    throw GlossaryError(Kind::kVersion,
                        "unsupported glossary version " + root["version"].dump());
  }
  if (!root.contains("entries") || !root["entries"].is_object()) {
    throw GlossaryError(Kind::kMalformed, "missing entries object");
  }
  Glossary glossary;
  try {
    for (const auto &[acronym, entry] : root["entries"].items()) {
      if (!IsAcronym(acronym)) {
        throw GlossaryError(Kind::kMalformed, "not an acronym: '" + acronym + "'");
      }
      const auto &candidates = entry.at("candidates");
      if (!candidates.is_array() || candidates.empty()) {
        throw GlossaryError(Kind::kMalformed, "no candidates for " + acronym);
      }
      for (const auto &c : candidates) {
        const std::string lf = c.at("lf").get<std::string>();
        const int64_t freq = c.at("freq").get<int64_t>();
        const auto sources = c.at("sources").get<std::set<std::string>>();
        if (freq < 1 || lf.empty()) {
          throw GlossaryError(Kind::kMalformed, "bad candidate for " + acronym);
        }
        if (glossary.entries_.count(acronym) &&
            glossary.entries_.at(acronym).count(lf)) {
          throw GlossaryError(Kind::kMalformed,
                              "duplicate long form '" + lf + "' for " + acronym);
        }
        glossary.Insert(acronym, lf, freq, sources);
      }
    }
  } catch (const nlohmann::json::exception &e) {
    throw GlossaryError(Kind::kMalformed, e.what());
  }
  return glossary;
}

void Glossary::Save(const std::string &path) const {
  std::ofstream out(path, std::ios::binary);
  out << ToJson() << '\n';
  if (!out) {
    throw GlossaryError(GlossaryError::Kind::kIo, "cannot write " + path);
  }
}

Glossary Glossary::Load(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GlossaryError(GlossaryError::Kind::kIo, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return FromJson(buffer.str());
}

}  // namespace acrokit
