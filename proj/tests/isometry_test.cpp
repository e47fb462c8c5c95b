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

#include "tildeiso/isometry.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "tildeiso/error.hpp"

namespace tildeiso {
namespace {

Word W(const char* s) { return Word::parse(s); }

const CaseMatch* find_match(const std::vector<CaseMatch>& ms, CaseId id, std::size_t length) {
  for (const auto& m : ms) {
    if (m.case_id == id && m.length() == length) return &m;
  }
  return nullptr;
}

std::string ops_text(const std::vector<EditOp>& ops) {
  std::string s;
  for (const auto& op : ops) s += (s.empty() ? "" : ",") + op.str();
  return s;
}

void expect_pair(const WitnessPair& p, const char* u, const char* v) {
  const bool same = p.u.str() == u && p.v.str() == v;
  const bool swapped = p.u.str() == v && p.v.str() == u;
  EXPECT_TRUE(same || swapped) << p.u.str() << " " << p.v.str();
}

TEST(Symmetry, Names) {
  EXPECT_EQ(Symmetry{}.str(), "identity");
  EXPECT_EQ((Symmetry{true, true, false}).str(), "complement+reverse");
  EXPECT_EQ((Symmetry{false, false, true}).str(), "row-exchange");
  EXPECT_EQ(to_string(CaseId::kC4), "C4");
}

TEST(Symmetry, Closure) {
  EXPECT_EQ(symmetry_closure(W("1010")), (std::vector<Word>{W("0101"), W("1010")}));
  EXPECT_EQ(symmetry_closure(W("111000")), (std::vector<Word>{W("000111"), W("111000")}));
  EXPECT_EQ(symmetry_closure(W("0")), (std::vector<Word>{W("0"), W("1")}));
  EXPECT_EQ(symmetry_closure(W("0010")).size(), 4U);
  for (const Symmetry s : {Symmetry{true, false, false}, Symmetry{false, true, false},
                           Symmetry{true, true, true}}) {
    EXPECT_EQ(apply_symmetry(s, apply_symmetry(s, W("0010111"))), W("0010111"));
  }
}

TEST(Classify, SingleSwapOverlap) {
  const auto ms = classify(W("101"));
  ASSERT_EQ(ms.size(), 1U);
  EXPECT_EQ(ms[0].case_id, CaseId::kC0);
  EXPECT_EQ(ms[0].length(), 2U);
  EXPECT_EQ(ms[0].shift(), 1U);
}

TEST(Classify, AlternatingBlock) {
  const auto ms = classify(W("1010"));
  ASSERT_EQ(ms.size(), 1U);
  EXPECT_EQ(ms[0].case_id, CaseId::kC3);
  EXPECT_EQ(ms[0].length(), 3U);
  EXPECT_EQ(ms[0].shift(), 1U);
  EXPECT_TRUE(ms[0].symmetry.row_exchange);
  EXPECT_EQ(ms[0].block_position, 1U);
}

TEST(Classify, AnchoredBlock) {
  const auto ms = classify(W("1100"));
  ASSERT_EQ(ms.size(), 1U);
  EXPECT_EQ(ms[0].case_id, CaseId::kC5);
  EXPECT_EQ(ms[0].length(), 2U);
  EXPECT_EQ(ms[0].frame.str(), "0011");
}

TEST(Classify, NoMatch) {
  EXPECT_TRUE(classify(W("111000")).empty());
  EXPECT_TRUE(classify(W("010110000")).empty());
  EXPECT_TRUE(classify(W("11")).empty());
}

TEST(Classify, NonAdjacentPair) {
  const auto ms = classify(W("1011000"));
  const CaseMatch* m = find_match(ms, CaseId::kC1, 3);
  ASSERT_NE(m, nullptr);
  EXPECT_EQ(m->shift(), 4U);
  EXPECT_EQ(ops_text(m->transformation), "R1,R3");
}

TEST(Classify, TwoSwaps) {
  const auto ms = classify(W("10010110"));
  const CaseMatch* m = find_match(ms, CaseId::kC2, 4);
  ASSERT_NE(m, nullptr);
  EXPECT_EQ(ops_text(m->transformation), "S1,S3");
}

TEST(Classify, OrderAndUniqueness) {
  for (unsigned n = 2; n <= 11; ++n) {
    for (std::uint64_t c = 0; c < (1U << n); ++c) {
      const auto ms = classify(Word::from_code(n, c));
      for (std::size_t k = 1; k < ms.size(); ++k) {
        ASSERT_LE(std::pair(ms[k - 1].shift(), ms[k - 1].case_id),
                  std::pair(ms[k].shift(), ms[k].case_id));
        ASSERT_FALSE(ms[k - 1].shift() == ms[k].shift() && ms[k - 1].case_id == ms[k].case_id);
      }
    }
  }
}

TEST(Classify, TooShort) {
  try {
    classify(W("1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooShort);
  }
}

TEST(BuildWitness, Examples) {
  expect_pair(build_witness(W("1010"), classify(W("1010"))[0]), "10110", "11000");
  expect_pair(build_witness(W("101"), classify(W("101"))[0]), "1001", "1111");
  expect_pair(build_witness(W("1100"), classify(W("1100"))[0]), "110100", "101010");

  const auto c2 = classify(W("10010110"));
  const WitnessPair p = build_witness(W("10010110"), *find_match(c2, CaseId::kC2, 4));
  EXPECT_EQ(p.construction, Construction::kAlphaBeta);
  expect_pair(p, "100101010110", "100110100110");

  const auto c1 = classify(W("1011000"));
  const WitnessPair q = build_witness(W("1011000"), *find_match(c1, CaseId::kC1, 3));
  EXPECT_EQ(q.construction, Construction::kAlphaPsiBoundary);
  expect_pair(q, "10110011000", "10101001000");
  EXPECT_EQ(q.verified, Verification::kUnchecked);
}

TEST(BuildWitness, ForeignMatchIsRejected) {
  const auto ms = classify(W("1010"));
  try {
    build_witness(W("1100"), ms[0]);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConstructionFailure);
  }
}

TEST(VerifyWitness, PaperPairs) {
  EXPECT_EQ(verify_witness(W("1010"), W("11000"), W("10110")).status, Verification::kConfirmed);
  EXPECT_EQ(verify_witness(W("1100"), W("110100"), W("101010")).status, Verification::kConfirmed);
  EXPECT_EQ(verify_witness(W("1011000"), W("10110011000"), W("10101001000")).status,
            Verification::kConfirmed);
  EXPECT_EQ(verify_witness(W("10010110"), W("100101010110"), W("100110100110")).status,
            Verification::kConfirmed);
}

TEST(VerifyWitness, RefutedWithCertificate) {
  const auto check = verify_witness(W("100011"), W("100101011"), W("100010011"));
  EXPECT_EQ(check.status, Verification::kRefuted);
  EXPECT_EQ(check.failed, WitnessCondition::kFreeTransformation);
  EXPECT_EQ(check.distance, 2U);
  ASSERT_TRUE(check.certificate.has_value());
  EXPECT_EQ(check.certificate->str(), "R4,S5");
  EXPECT_TRUE(replays(*check.certificate));
  EXPECT_TRUE(is_f_free_transformation(*check.certificate, W("100011")));
}

TEST(VerifyWitness, ReplacementPairAfterLongPrefixIsRefuted) {
  // S6 then S5 is an f-free geodesic between these two.
  const auto check = verify_witness(W("1011000"), W("10110011000"), W("10111001000"));
  EXPECT_EQ(check.status, Verification::kRefuted);
  EXPECT_EQ(check.failed, WitnessCondition::kFreeTransformation);
}

TEST(VerifyWitness, OtherConditions) {
  const auto same = verify_witness(W("1010"), W("11000"), W("11000"));
  EXPECT_EQ(same.status, Verification::kRefuted);
  EXPECT_EQ(same.failed, WitnessCondition::kDistance);
  const auto near = verify_witness(W("1010"), W("11000"), W("11001"));
  EXPECT_EQ(near.failed, WitnessCondition::kDistance);
  const auto dirty = verify_witness(W("1010"), W("10100"), W("11011"));
  EXPECT_EQ(dirty.failed, WitnessCondition::kNotFree);
  try {
    verify_witness(W("1010"), W("1"), W("11"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
}

TEST(VerifyWitness, MatchesFullEnumeration) {
  testing::WordGen gen(51);
  for (int trial = 0; trial < 3000; ++trial) {
    const Word f = gen.word(2, 4);
    const std::size_t m = gen.between(f.size(), 9);
    const Word u = Word::parse(gen.bits(m));
    const Word v = Word::parse(gen.bits(m));
    const auto check = verify_witness(f, u, v);
    const std::size_t d = tilde_distance(u, v);
    bool want = d >= 2 && is_free(u, f) && is_free(v, f);
    if (want) {
      for (const auto& t : enumerate_minimal_transformations(u, v, std::nullopt).items) {
        if (is_f_free_transformation(t, f)) {
          want = false;
          break;
        }
      }
    }
    ASSERT_EQ(check.status == Verification::kConfirmed, want)
        << f.str() << " " << u.str() << " " << v.str();
    EXPECT_EQ(check.distance, d);
    if (check.failed == WitnessCondition::kFreeTransformation) {
      ASSERT_TRUE(check.certificate.has_value());
      EXPECT_TRUE(is_f_free_transformation(*check.certificate, f));
      EXPECT_EQ(check.certificate->length(), d);
      EXPECT_EQ(check.certificate->words.back(), v);
    }
  }
}

TEST(Decide, Verdicts) {
  EXPECT_FALSE(is_tilde_isometric(W("1010")));
  EXPECT_FALSE(is_tilde_isometric(W("101")));
  EXPECT_FALSE(is_tilde_isometric(W("1100")));
  EXPECT_FALSE(is_tilde_isometric(W("1011000")));
  EXPECT_FALSE(is_tilde_isometric(W("10010110")));
  EXPECT_TRUE(is_tilde_isometric(W("111000")));
  EXPECT_TRUE(is_tilde_isometric(W("1110000")));
  EXPECT_TRUE(is_tilde_isometric(W("1111000")));
  EXPECT_TRUE(is_tilde_isometric(W("010110000")));
  EXPECT_TRUE(is_tilde_isometric(W("0")));
}

TEST(Decide, OneZeroZeroZeroOneOneHasAWitness) {
  // (1000011, 1100111): both geodesics R2,R5 and R5,R2 pass through a word
  // containing 100011.
  const Word f = W("100011");
  const auto check = verify_witness(f, W("1000011"), W("1100111"));
  EXPECT_EQ(check.status, Verification::kConfirmed);
  const auto verdict = decide_tilde_isometry(f);
  EXPECT_FALSE(verdict.isometric);
  ASSERT_TRUE(verdict.witness.has_value());
  expect_pair(*verdict.witness, "1000011", "1100111");
  EXPECT_EQ(oracle_check(f, 7, true).verdict, OracleVerdict::kViolation);
}

TEST(Decide, Evidence) {
  const auto one = decide_tilde_isometry(W("1"));
  EXPECT_TRUE(one.isometric);
  EXPECT_EQ(one.reason, "no overlap lengths");
  const auto none = decide_tilde_isometry(W("111000"));
  EXPECT_TRUE(none.isometric);
  EXPECT_EQ(none.reason, "no case matched");
  EXPECT_FALSE(none.oracle.has_value());
  const auto yes = decide_tilde_isometry(W("1010"));
  EXPECT_FALSE(yes.isometric);
  ASSERT_TRUE(yes.witness.has_value());
  EXPECT_EQ(yes.witness->verified, Verification::kConfirmed);
  EXPECT_TRUE(yes.anomalies.empty());
  ASSERT_EQ(yes.outcomes.size(), 1U);
  EXPECT_EQ(yes.outcomes[0].status, Verification::kConfirmed);
}

TEST(Hamming, Verdicts) {
  EXPECT_FALSE(is_ham_isometric(W("111000")));
  EXPECT_FALSE(is_ham_isometric(W("1100")));
  EXPECT_TRUE(is_ham_isometric(W("1010")));
  EXPECT_TRUE(is_ham_isometric(W("10010110")));
  EXPECT_THROW(is_ham_isometric(W("1")), Error);
}

TEST(Hamming, DivergesFromTilde) {
  EXPECT_TRUE(is_tilde_isometric(W("111000")));
  EXPECT_FALSE(is_ham_isometric(W("111000")));
  EXPECT_FALSE(is_tilde_isometric(W("1010")));
  EXPECT_TRUE(is_ham_isometric(W("1010")));
}

TEST(IsometryProperties, VerdictInvariantUnderSymmetry) {
  for (unsigned n = 1; n <= 10; ++n) {
    for (std::uint64_t c = 0; c < (1U << n); ++c) {
      const Word f = Word::from_code(n, c);
      const bool base = is_tilde_isometric(f);
      for (const Word& g : symmetry_closure(f)) ASSERT_EQ(is_tilde_isometric(g), base) << f.str();
    }
  }
}

TEST(IsometryProperties, EveryMatchConfirms) {
  for (unsigned n = 2; n <= 12; ++n) {
    for (std::uint64_t c = 0; c < (1U << n); ++c) {
      const Word f = Word::from_code(n, c);
      for (const auto& m : classify(f)) {
        const WitnessPair p = build_witness(f, m);
        ASSERT_EQ(verify_witness(f, p.u, p.v).status, Verification::kConfirmed)
            << f.str() << " " << to_string(m.case_id) << " l=" << m.length();
      }
    }
  }
}

TEST(IsometryProperties, FirstPairIsFreeAndSecondBlockedExactlyUnderCondition) {
  for (unsigned n = 2; n <= 10; ++n) {
    for (std::uint64_t c = 0; c < (1U << n); ++c) {
      const Word f = Word::from_code(n, c);
      for (const auto& rec : q_overlaps(f, 2)) {
        const Word pre = prefix(f, rec.shift);
        bool any_blocked = false;
        for (const OpPair& p : op_pairs(rec)) {
          if (p.is_chained_swaps()) continue;
          const Word alpha = pre + apply(p.first, f);
          const Word beta = pre + apply(p.second, f);
          ASSERT_TRUE(is_free(alpha, f)) << f.str() << " r=" << rec.shift;
          ASSERT_EQ(!is_free(beta, f), condition_tilde(f, rec, p)) << f.str() << " r=" << rec.shift;
          any_blocked = any_blocked || !is_free(beta, f);
        }
        ASSERT_EQ(any_blocked, overlap_satisfies_condition_tilde(f, rec)) << f.str();
      }
    }
  }
}

TEST(IsometryProperties, ClassifierMatchesBruteForceOnShortWords) {
  for (unsigned n = 2; n <= 5; ++n) {
    for (std::uint64_t c = 0; c < (1U << n); ++c) {
      const std::string f = testing::bits(n, c);
      const bool brute = testing::brute_isometric(f, std::min(2 * n + 1, 10U));
      ASSERT_EQ(is_tilde_isometric(Word::parse(f)), brute) << f;
    }
  }
}

TEST(IsometryProperties, ClassifierMatchesOracle) {
  for (unsigned n = 2; n <= 8; ++n) {
    for (std::uint64_t c = 0; c < (1U << n); ++c) {
      const Word f = Word::from_code(n, c);
      IsometryOptions opts;
      opts.oracle_fallback = false;
      const auto verdict = decide_tilde_isometry(f, opts);
      ASSERT_TRUE(verdict.anomalies.empty()) << f.str();
      OracleOptions oo;
      oo.max_len = default_oracle_bound(f);
      oo.measure_restricted_distance = false;
      const bool oracle = oracle_check(f, oo).verdict == OracleVerdict::kNoViolation;
      ASSERT_EQ(verdict.isometric, oracle) << f.str();
    }
  }
}

TEST(IsometryProperties, ThreadsDoNotChangeVerdict) {
  IsometryOptions many;
  many.threads = 3;
  for (const char* text : {"1010", "111000", "100011", "010110000", "0101001010"}) {
    const auto a = decide_tilde_isometry(W(text));
    const auto b = decide_tilde_isometry(W(text), many);
    EXPECT_EQ(a.isometric, b.isometric);
    EXPECT_EQ(a.reason, b.reason);
  }
}

}  // namespace
}  // namespace tildeiso
