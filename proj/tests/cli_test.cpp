// Copyright 2026 The tildeiso Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tildeiso/isometry.hpp"
#include "tildeiso/word.hpp"

namespace tildeiso::cli {
namespace {

using nlohmann::json;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "tildeiso");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::set<std::string> words_of(const json& doc) {
  std::set<std::string> out;
  for (const auto& w : doc["words"]) out.insert(w["word"].get<std::string>());
  return out;
}

TEST(Dist, Examples) {
  const auto r = invoke({"--json", "dist", "110111", "101101"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.doc()["tilde"], 2);
  EXPECT_EQ(r.doc()["hamming"], 3);
  EXPECT_FALSE(r.doc().contains("transformations"));

  const auto t = invoke({"--json", "dist", "101", "010", "--show-transforms"});
  EXPECT_EQ(t.doc()["transformations"].size(), 4U);

  EXPECT_EQ(invoke({"--json", "dist", "1", "1"}).doc()["tilde"], 0);
}

TEST(Dist, Errors) {
  EXPECT_EQ(invoke({"dist", "1", "10"}).code, kExitUsage);
  EXPECT_EQ(invoke({"dist", "1a", "10"}).code, kExitInvalidWord);
  EXPECT_EQ(invoke({"dist", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
}

TEST(Transforms, Cap) {
  const auto r = invoke({"--json", "transforms", "000000", "111111", "--cap", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.doc()["transformations"].size(), 3U);
  EXPECT_EQ(r.doc()["truncated"], true);
}

TEST(Overlaps, RecordShape) {
  const auto r = invoke({"--json", "overlaps", "1011000", "--q", "2"});
  ASSERT_EQ(r.code, kExitOk);
  const json recs = r.doc()["overlaps"];
  ASSERT_FALSE(recs.empty());
  for (const auto& rec : recs) {
    EXPECT_EQ(rec["q"], 2);
    EXPECT_TRUE(rec["geometry"].is_string());
    EXPECT_TRUE(rec["condition_tilde"].is_boolean());
  }
  const auto all = invoke({"--json", "overlaps", "1100"}).doc()["overlaps"];
  EXPECT_EQ(all.size(), 3U);
  EXPECT_TRUE(all[0]["geometry"].is_null());
  EXPECT_TRUE(all[0]["condition_tilde"].is_null());
  EXPECT_EQ(all[1]["geometry"], "adjacent");
  const auto c1 = invoke({"--json", "overlaps", "1011000", "--q", "2"}).doc()["overlaps"];
  EXPECT_EQ(c1.back()["geometry"], "non-adjacent");
  const auto wide = invoke({"--json", "overlaps", "11110000"}).doc()["overlaps"];
  EXPECT_TRUE(wide[3]["transformations"].is_null());
  EXPECT_EQ(all[1]["alignment"]["top"], "$110");
  EXPECT_EQ(invoke({"overlaps", "1"}).code, kExitUsage);
}

TEST(Classify, Verdicts) {
  const auto a = invoke({"--json", "classify", "1010"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.doc()["tilde_isometric"], false);
  EXPECT_EQ(a.doc()["ham_isometric"], true);
  EXPECT_EQ(a.doc()["cases"][0]["case"], "C3");
  EXPECT_EQ(a.doc()["cases"][0]["confirmed"], true);
  EXPECT_TRUE(a.doc()["anomalies"].empty());

  const auto b = invoke({"--json", "classify", "111000"});
  EXPECT_EQ(b.doc()["tilde_isometric"], true);
  EXPECT_EQ(b.doc()["ham_isometric"], false);
  EXPECT_TRUE(b.doc()["witness"].is_null());

  const auto c = invoke({"--json", "classify", "0"});
  EXPECT_EQ(c.code, kExitOk);
  EXPECT_EQ(c.doc()["tilde_isometric"], true);
}

TEST(Classify, InvalidWord) {
  EXPECT_EQ(invoke({"classify", "2x"}).code, kExitInvalidWord);
  EXPECT_EQ(invoke({"classify", ""}).code, kExitInvalidWord);
}

TEST(Classify, WitnessVerifiesThroughCli) {
  for (const char* f : {"1010", "101", "1100", "1011000", "10010110", "0101001010", "100011"}) {
    const auto c = invoke({"--json", "classify", f}).doc();
    ASSERT_EQ(c["tilde_isometric"], false) << f;
    const auto v = invoke({"--json", "verify", f, c["witness"]["u"].get<std::string>(),
                           c["witness"]["v"].get<std::string>()});
    EXPECT_EQ(v.code, kExitOk);
    EXPECT_EQ(v.doc()["status"], "confirmed") << f;
  }
}

TEST(Verify, Refutation) {
  const auto r = invoke({"--json", "verify", "100011", "100101011", "100010011"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.doc()["status"], "refuted");
  EXPECT_EQ(r.doc()["failed_condition"], "free_transformation");
  EXPECT_EQ(r.doc()["certificate"]["ops"], json::array({"R4", "S5"}));
  EXPECT_EQ(invoke({"verify", "100011", "1001", "100"}).code, kExitUsage);
}

TEST(Witness, Candidates) {
  const auto r = invoke({"--json", "witness", "1100"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.doc()["witness"]["u"], "110100");
  EXPECT_EQ(r.doc()["witness"]["v"], "101010");
  EXPECT_EQ(r.doc()["candidates"][0]["case"], "C5");
}

TEST(Enumerate, Examples) {
  const auto four = invoke({"--json", "enumerate", "--len", "4", "--filter", "non-isometric"});
  ASSERT_EQ(four.code, kExitOk);
  const auto w4 = words_of(four.doc());
  for (const char* w : {"1010", "0101", "1100"}) EXPECT_TRUE(w4.count(w)) << w;

  const auto three = words_of(invoke({"--json", "enumerate", "--len", "3", "--filter", "non-isometric"}).doc());
  EXPECT_TRUE(three.count("101"));
  EXPECT_TRUE(three.count("010"));

  const auto one = invoke({"--json", "enumerate", "--len", "1"}).doc();
  EXPECT_EQ(one["counts"]["isometric"], 2);
  EXPECT_EQ(one["counts"]["total"], 2);

  EXPECT_EQ(invoke({"enumerate", "--len", "17"}).code, kExitUsage);
  EXPECT_EQ(invoke({"enumerate", "--len", "0"}).code, kExitUsage);
}

TEST(Enumerate, ListsAreSortedAndComplementClosed) {
  for (int n = 2; n <= 9; ++n) {
    const auto doc = invoke({"--json", "enumerate", "--len", std::to_string(n), "--filter",
                             "non-isometric"}).doc();
    std::vector<std::string> listed;
    for (const auto& w : doc["words"]) listed.push_back(w["word"]);
    EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end()));
    const std::set<std::string> set(listed.begin(), listed.end());
    for (const auto& w : set) {
      EXPECT_TRUE(set.count(complement(Word::parse(w)).str())) << w;
    }
  }
}

TEST(Enumerate, CanonicalKeepsOnePerOrbit) {
  const auto all = invoke({"--json", "enumerate", "--len", "6"}).doc();
  const auto canon = invoke({"--json", "enumerate", "--len", "6", "--canonical"}).doc();
  std::set<std::string> reps;
  for (const auto& w : all["words"]) {
    reps.insert(symmetry_closure(Word::parse(w["word"].get<std::string>())).front().str());
  }
  EXPECT_EQ(canon["words"].size(), reps.size());
}

TEST(Oracle, Example) {
  const auto r = invoke({"--json", "oracle", "1010", "--max-len", "5"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.doc()["verdict"], "violation");
  EXPECT_EQ(r.doc()["violation"]["m"], 5);
  const json doc = r.doc();
  bool found = false;
  for (const auto& p : doc["minimal_pairs"]) found |= p == json::array({"10110", "11000"});
  EXPECT_TRUE(found);

  const auto iso = invoke({"--json", "oracle", "111000", "--max-len", "10", "--first-violation"});
  EXPECT_EQ(iso.doc()["verdict"], "no_violation");
  EXPECT_EQ(invoke({"oracle", "10", "--max-len", "40"}).code, kExitUsage);
}

TEST(Cube, Formats) {
  EXPECT_EQ(invoke({"cube", "--len", "1", "--format", "edgelist"}).out, "0 1\n");
  const auto dot = invoke({"cube", "--len", "2", "--format", "dot"}).out;
  EXPECT_NE(dot.find("\"01\" -- \"10\";"), std::string::npos);
  const auto js = json::parse(invoke({"cube", "--len", "3", "--avoid", "11", "--format", "json"}).out);
  EXPECT_EQ(js["nodes"].size(), 5U);
  EXPECT_EQ(invoke({"cube", "--len", "40"}).code, kExitUsage);
  EXPECT_EQ(invoke({"cube", "--len", "3", "--avoid", "1z"}).code, kExitInvalidWord);
}

TEST(Cube, WritesFile) {
  const std::string path = ::testing::TempDir() + "tildeiso_cube_test.txt";
  const auto r = invoke({"cube", "--len", "2", "--format", "edgelist", "--out", path});
  EXPECT_EQ(r.code, kExitOk);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), "00 01\n00 10\n01 10\n01 11\n10 11\n");
  std::remove(path.c_str());
}

TEST(Compare, Examples) {
  const auto a = invoke({"--json", "compare", "111000"}).doc();
  EXPECT_EQ(a["tilde_isometric"], true);
  EXPECT_EQ(a["ham_isometric"], false);
  EXPECT_EQ(a["agreement"], false);
  const auto b = invoke({"--json", "compare", "1010"}).doc();
  EXPECT_EQ(b["tilde_isometric"], false);
  EXPECT_EQ(b["ham_isometric"], true);
  const auto c = invoke({"--json", "compare", "11"}).doc();
  EXPECT_EQ(c["tilde_isometric"], true);
  EXPECT_EQ(c["ham_isometric"], true);
  EXPECT_EQ(c["agreement"], true);
}

TEST(Output, JsonIsDeterministicAndRoundTrips) {
  const std::vector<std::vector<std::string>> cases = {
      {"classify", "0101001010"}, {"enumerate", "--len", "7"}, {"oracle", "1100", "--max-len", "8"},
      {"overlaps", "1101110101101"}, {"dist", "0110", "1001", "--show-transforms"}};
  for (const auto& args : cases) {
    std::vector<std::string> one{"--json", "--threads", "1"}, many{"--json", "--threads", "4"};
    one.insert(one.end(), args.begin(), args.end());
    many.insert(many.end(), args.begin(), args.end());
    const auto a = invoke(one), b = invoke(many), c = invoke(one);
    EXPECT_EQ(a.out, b.out) << args[0];
    EXPECT_EQ(a.out, c.out) << args[0];
    EXPECT_EQ(json::parse(a.out).dump(2) + "\n", a.out) << args[0];
    EXPECT_EQ(a.out.find('\r'), std::string::npos);
  }
}

TEST(Output, TextModeCarriesTheSameFields) {
  const auto r = invoke({"compare", "111000"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("tilde_isometric"), std::string::npos);
  EXPECT_NE(r.out.find("ham_isometric"), std::string::npos);
}

TEST(Output, QuietSuppressesDiagnostics) {
  EXPECT_FALSE(invoke({"classify", "2x"}).err.empty());
  EXPECT_TRUE(invoke({"--quiet", "classify", "2x"}).err.empty());
}

}  // namespace
}  // namespace tildeiso::cli
