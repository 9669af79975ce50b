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

#include <filesystem>
#include <fstream>
#include <random>

#include "gtest/gtest.h"
#include "support/synthetic.h"

namespace acrokit {
namespace {

std::string TempPath(const std::string &name) {
  return (std::filesystem::temp_directory_path() / ("acrokit_glossary_" + name)).string();
}

Glossary RandomGlossary(uint64_t seed, int pairs) {
  testing::WordFactory words(seed);
  std::mt19937_64 &rng = words.rng();
  std::vector<std::string> acronyms;
  for (int i = 0; i < 15; ++i) acronyms.push_back(words.Acronym(2, 4));
  acronyms.push_back("NaN");
  acronyms.push_back("NAN");
  std::vector<std::string> forms;
  for (int i = 0; i < 25; ++i) forms.push_back(words.Word() + " " + words.Word());
  const char *corpora[] = {"wiki", "arxiv", "pmc"};
  Glossary g;
  for (int i = 0; i < pairs; ++i) {
    g.AddPair(acronyms[rng() % acronyms.size()], forms[rng() % forms.size()],
              corpora[rng() % 3], 1 + static_cast<int64_t>(rng() % 3));
  }
  return g;
}

TEST(GlossaryTest, DuplicatePairsIncrementFrequency) {
  Glossary g;
  g.AddPair("AD", "acronym disambiguation", "wiki");
  g.AddPair("AD", "Acronym  Disambiguation", "arxiv");
  const auto entry = g.Lookup("AD");
  ASSERT_TRUE(entry);
  ASSERT_EQ(entry->candidates.size(), 1u);
  EXPECT_EQ(entry->candidates[0].frequency, 2);
  EXPECT_EQ(entry->candidates[0].sources, (std::set<std::string>{"arxiv", "wiki"}));
  EXPECT_FALSE(entry->ambiguous());
}

TEST(GlossaryTest, DistinctFormsMakeEntryAmbiguous) {
  Glossary g;
  g.AddPair("AD", "acronym disambiguation", "wiki");
  g.AddPair("AD", "Alzheimer's disease", "pmc");
  const auto entry = g.Lookup("AD");
  ASSERT_TRUE(entry);
  EXPECT_TRUE(entry->ambiguous());
  EXPECT_EQ(entry->candidates.size(), 2u);
}

TEST(GlossaryTest, RejectsNonAcronyms) {
  Glossary g;
  try {
    g.AddPair("ai", "artificial intelligence", "wiki");
    FAIL() << "expected an error";
  } catch (const GlossaryError &e) {
    EXPECT_EQ(e.kind(), GlossaryError::Kind::kInvalidAcronym);
  }
  EXPECT_TRUE(g.empty());
}

TEST(GlossaryTest, LookupOrderingAndFallback) {
  Glossary g;
  g.AddPair("GDP", "gross domestic product", "wiki", 5);
  g.AddPair("GDP", "gross domestic production", "wiki", 5);
  g.AddPair("GDP", "guanosine diphosphate", "pmc", 2);
  const auto entry = g.Lookup("GDP");
  ASSERT_TRUE(entry);
  EXPECT_EQ(entry->candidates[0].long_form, "gross domestic product");
  EXPECT_EQ(entry->candidates[1].long_form, "gross domestic production");
  EXPECT_EQ(entry->candidates[2].long_form, "guanosine diphosphate");
  EXPECT_FALSE(g.Lookup("ZZZZ"));

  g.AddPair("AD", "acronym disambiguation", "wiki");
  const auto folded = g.Lookup("ad");
  ASSERT_TRUE(folded);
  EXPECT_EQ(folded->acronym, "AD");
}

TEST(GlossaryTest, FallbackPrefersMostFrequentVariant) {
  Glossary g;
  g.AddPair("NaN", "not a number", "wiki", 1);
  g.AddPair("NAN", "nucleus accumbens", "pmc", 3);
  EXPECT_EQ(g.ResolveKey("nan"), "NAN");
  EXPECT_EQ(g.ResolveKey("NaN"), "NaN");
  g.AddPair("NaN", "not a number", "wiki", 2);
  EXPECT_EQ(g.ResolveKey("nan"), "NAN");  // tie goes to the smaller key
  EXPECT_FALSE(g.ResolveKey("nana"));
}

TEST(GlossaryTest, Stats) {
  Glossary g;
  EXPECT_EQ(g.Stats(), GlossaryStats{});
  g.AddPair("AD", "acronym disambiguation", "wiki");
  g.AddPair("AD", "Alzheimer's disease", "pmc");
  const GlossaryStats stats = g.Stats();
  EXPECT_EQ(stats.unique_acronyms, 1);
  EXPECT_EQ(stats.unique_long_forms, 2);
  EXPECT_EQ(stats.ambiguous_acronyms, 1);
  EXPECT_DOUBLE_EQ(stats.avg_long_forms_per_acronym, 2.0);
}

TEST(GlossaryTest, StatsMatchRecount) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const Glossary g = RandomGlossary(seed, 200);
    int64_t forms = 0, ambiguous = 0;
    for (const std::string &key : g.Acronyms()) {
      const auto entry = g.Lookup(key);
      ASSERT_FALSE(entry->candidates.empty());
      forms += static_cast<int64_t>(entry->candidates.size());
      ambiguous += entry->ambiguous();
    }
    const GlossaryStats stats = g.Stats();
    EXPECT_EQ(stats.unique_acronyms, g.size());
    EXPECT_EQ(stats.unique_long_forms, forms);
    EXPECT_EQ(stats.ambiguous_acronyms, ambiguous);
    EXPECT_DOUBLE_EQ(stats.avg_long_forms_per_acronym * stats.unique_acronyms,
                     static_cast<double>(forms));
  }
}

TEST(GlossaryTest, MergeIsCommutative) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const Glossary a = RandomGlossary(seed, 150);
    const Glossary b = RandomGlossary(seed + 100, 150);
    Glossary ab = a;
    ab.Merge(b);
    Glossary ba = b;
    ba.Merge(a);
    EXPECT_EQ(ab, ba);
    EXPECT_EQ(ab.Stats(), ba.Stats());
    EXPECT_EQ(ab.ToJson(), ba.ToJson());
  }
}

TEST(GlossaryTest, SaveLoadRoundTrip) {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const Glossary g = RandomGlossary(seed, 120);
    const std::string path = TempPath("roundtrip.json");
    g.Save(path);
    const Glossary loaded = Glossary::Load(path);
    EXPECT_EQ(loaded, g);
    EXPECT_EQ(loaded.Stats(), g.Stats());
  }
}

TEST(GlossaryTest, EmptySerialization) {
  EXPECT_EQ(Glossary().ToJson(), R"({"version":1,"entries":{}})");
}

TEST(GlossaryTest, SerializationFormat) {
  Glossary g;
  g.AddPair("AD", "acronym disambiguation", "wiki", 2);
  g.AddPair("AD", "Alzheimer's disease", "pmc");
  EXPECT_EQ(g.ToJson(),
            R"({"version":1,"entries":{"AD":{"candidates":[)"
            R"({"lf":"acronym disambiguation","freq":2,"sources":["wiki"]},)"
            R"({"lf":"alzheimer's disease","freq":1,"sources":["pmc"]}]}}})");
}

TEST(GlossaryTest, LoadErrors) {
  auto kind_of = [](const std::string &json) {
    try {
      Glossary::FromJson(json);
    } catch (const GlossaryError &e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  const int malformed = static_cast<int>(GlossaryError::Kind::kMalformed);
  EXPECT_EQ(kind_of(R"({"version":1,"entries":{"AD":{"cand)"), malformed);
  EXPECT_EQ(kind_of(R"({"version":2,"entries":{}})"),
            static_cast<int>(GlossaryError::Kind::kVersion));
  EXPECT_EQ(kind_of(R"({"entries":{}})"), malformed);
  EXPECT_EQ(kind_of(R"({"version":1,"entries":{"AD":{"candidates":[]}}})"), malformed);
  EXPECT_EQ(kind_of(R"({"version":1,"entries":{"ad":{"candidates":[{"lf":"x","freq":1,"sources":[]}]}}})"),
            malformed);
  EXPECT_EQ(kind_of(R"({"version":1,"entries":{"AD":{"candidates":[{"lf":"x","freq":0,"sources":[]}]}}})"),
            malformed);
  try {
    Glossary::Load(TempPath("does_not_exist.json"));
    FAIL();
  } catch (const GlossaryError &e) {
    EXPECT_EQ(e.kind(), GlossaryError::Kind::kIo);
  }

  const std::string path = TempPath("truncated.json");
  Glossary g;
  g.AddPair("AD", "acronym disambiguation", "wiki");
  const std::string full = g.ToJson();
  std::ofstream(path) << full.substr(0, full.size() / 2);
  EXPECT_THROW(Glossary::Load(path), GlossaryError);
}

}  // namespace
}  // namespace acrokit
