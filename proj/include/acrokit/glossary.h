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


#ifndef ACROKIT_GLOSSARY_H_
#define ACROKIT_GLOSSARY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace acrokit {

struct Candidate {
  std::string long_form;
  int64_t frequency = 0;
  std::set<std::string> sources;

  bool operator==(const Candidate &other) const = default;
};

struct GlossaryEntry {
  std::string acronym;
  std::vector<Candidate> candidates;  // frequency descending, then long form

  bool ambiguous() const { return candidates.size() >= 2; }
  int64_t total_frequency() const;

  bool operator==(const GlossaryEntry &other) const = default;
};

struct GlossaryStats {
  int64_t unique_acronyms = 0;
  int64_t unique_long_forms = 0;  // summed over acronyms
  int64_t ambiguous_acronyms = 0;
  double avg_long_forms_per_acronym = 0.0;

  bool operator==(const GlossaryStats &other) const = default;
};

class GlossaryError : public std::runtime_error {
 public:
  enum class Kind { kIo, kMalformed, kVersion, kInvalidAcronym };

  GlossaryError(Kind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class Glossary {
 public:
  static constexpr int kFormatVersion = 1;

  // Adds count occurrences of long_form for acronym. The long form is
  // normalized first. Throws kInvalidAcronym if acronym fails the detector.
  void AddPair(std::string_view acronym, std::string_view long_form,
               std::string_view source, int64_t count = 1);

  void Merge(const Glossary &other);

  // Exact key first, then case-insensitive. Among several case variants the
  // one with the highest total frequency wins, ties to the smaller key.
  std::optional<GlossaryEntry> Lookup(std::string_view acronym) const;

  // Canonical key Lookup would resolve to.
  std::optional<std::string> ResolveKey(std::string_view acronym) const;

  GlossaryStats Stats() const;

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  std::vector<std::string> Acronyms() const;

  std::string ToJson() const;
  static Glossary FromJson(std::string_view json);

  void Save(const std::string &path) const;
  static Glossary Load(const std::string &path);

  bool operator==(const Glossary &other) const {
    return entries_ == other.entries_;
  }

 private:
  struct Form {
    int64_t frequency = 0;
    std::set<std::string> sources;

    bool operator==(const Form &other) const = default;
  };

  void Insert(const std::string &acronym, const std::string &long_form,
              int64_t count, const std::set<std::string> &sources);
  GlossaryEntry Materialize(const std::string &key) const;

  std::map<std::string, std::map<std::string, Form>> entries_;
  std::map<std::string, std::set<std::string>> folded_;  // lowercase -> keys
  int64_t long_form_count_ = 0;
  int64_t ambiguous_count_ = 0;
};

}  // namespace acrokit

#endif  // ACROKIT_GLOSSARY_H_
