// Copyright 2026 The netcon Authors
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

#include "netcon/evaluator.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "netcon/generators.h"
#include "test_util.h"

namespace netcon {
namespace {

TEST(EvaluateSequenceTest, SingleEdge) {
  const Instance inst(Network(2, {{0, 1, 5}}), {{0, 1, 2, {}}});
  const ConnectionReport r = EvaluateSequence(inst, BuildSequence{0});
  EXPECT_EQ(r.times, (std::vector<std::int64_t>{5}));
  EXPECT_EQ(r.objective, 10);
}

TEST(EvaluateSequenceTest, PathBothOrders) {
  const Instance inst = testing::PathABC();
  const ConnectionReport ab_first = EvaluateSequence(inst, BuildSequence{0, 1});
  EXPECT_EQ(ab_first.times, (std::vector<std::int64_t>{1, 3, 3}));
  EXPECT_EQ(ab_first.objective, 9);
  EXPECT_EQ(EvaluateSequence(inst, BuildSequence{1, 0}).objective, 14);
}

TEST(EvaluateSequenceTest, PairWaitsForWholePath) {
  const Instance inst(Network(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}}), {{1, 2, 1, {}}});
  EXPECT_EQ(EvaluateSequence(inst, BuildSequence{2, 0, 1}).times[0], 3);
}

TEST(EvaluateSequenceTest, TrailingEdgesDoNotChangeTimes) {
  const Instance inst(testing::UnitSquare(), {{0, 1, 4, {}}});
  EXPECT_EQ(EvaluateSequence(inst, BuildSequence{0}).objective, 4);
  EXPECT_EQ(EvaluateSequence(inst, BuildSequence{0, 1, 2, 3}).objective, 4);
}

TEST(EvaluateSequenceTest, MaxLateness) {
  const Instance inst(Network(3, {{0, 1, 1}, {1, 2, 1}}), {{0, 1, 1, 1}, {0, 2, 1, 2}},
                      Objective::kMaxLateness);
  EXPECT_EQ(EvaluateSequence(inst, BuildSequence{0, 1}).objective, 0);
  EXPECT_EQ(EvaluateSequence(inst, BuildSequence{1, 0}).objective, 1);
}

TEST(EvaluateSequenceTest, Errors) {
  const Instance inst = testing::PathABC();
  EXPECT_THROW(EvaluateSequence(inst, BuildSequence{0}), EvaluationError);
  EXPECT_THROW(EvaluateSequence(inst, BuildSequence{0, 0, 1}), EvaluationError);
  EXPECT_THROW(EvaluateSequence(inst, BuildSequence{0, 2}), EvaluationError);
  EXPECT_THROW(EvaluateSequence(inst, BuildSequence{-1, 0, 1}), EvaluationError);
}

TEST(ValidateSequenceTest, AcceptsCorrectReport) {
  const Instance inst = testing::PathABC();
  const BuildSequence seq{0, 1};
  const Verdict v = ValidateSequence(inst, seq, EvaluateSequence(inst, seq));
  EXPECT_TRUE(v.accepted);
  EXPECT_TRUE(v.discrepancies.empty());
}

TEST(ValidateSequenceTest, NamesTheWrongPair) {
  const Instance inst = testing::PathABC();
  const BuildSequence seq{0, 1};
  ConnectionReport claimed = EvaluateSequence(inst, seq);
  claimed.times[1] += 1;
  const Verdict v = ValidateSequence(inst, seq, claimed);
  EXPECT_FALSE(v.accepted);
  ASSERT_EQ(v.discrepancies.size(), 1U);
  EXPECT_NE(v.discrepancies[0].find("pair 1 2"), std::string::npos);
}

TEST(ValidateSequenceTest, RejectsInvalidSequence) {
  const Instance inst = testing::PathABC();
  const Verdict v = ValidateSequence(inst, BuildSequence{1}, {{1, 3, 3}, 9});
  EXPECT_FALSE(v.accepted);
}

TEST(ValidateSequenceTest, SelfChecksOnRandomInstances) {
  Rng rng(99);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorParams g = testing::SmallParams(GeneratorKind::kRandomGraph, 7, 3, seed);
    g.edge_count = 10;
    const Instance inst = Generate(g);
    BuildSequence seq(10);
    std::iota(seq.begin(), seq.end(), 0);
    for (size_t i = seq.size() - 1; i > 0; --i) {
      std::swap(seq[i], seq[static_cast<size_t>(rng.Uniform(0, static_cast<std::int64_t>(i)))]);
    }
    EXPECT_TRUE(ValidateSequence(inst, seq, EvaluateSequence(inst, seq)).accepted);
  }
}

TEST(FormatTest, SolutionRoundTrip) {
  const Instance inst = testing::PathABC();
  const BuildSequence seq{0, 1};
  const std::string text = FormatSolution(inst, EvaluateSequence(inst, seq), seq);
  EXPECT_EQ(text,
            "pair 0 1 t=1\npair 0 2 t=3\npair 1 2 t=3\nobjective 9\nsequence\n0\n1\n");
  const ParsedSolution parsed = ParseSolution(inst, text);
  EXPECT_TRUE(parsed.has_report);
  EXPECT_EQ(parsed.sequence, seq);
  EXPECT_EQ(parsed.claimed, EvaluateSequence(inst, seq));
}

TEST(FormatTest, BareSequence) {
  const ParsedSolution parsed = ParseSolution(testing::PathABC(), "sequence\n1\n0\n");
  EXPECT_FALSE(parsed.has_report);
  EXPECT_EQ(parsed.sequence, (BuildSequence{1, 0}));
}

TEST(FormatTest, MalformedSolutions) {
  const Instance inst = testing::PathABC();
  EXPECT_THROW(ParseSolution(inst, "0\n1\n"), ParseError);
  EXPECT_THROW(ParseSolution(inst, "sequence\n0 1\n"), ParseError);
  EXPECT_THROW(ParseSolution(inst, "pair 0 1 t=1\nsequence\n0\n1\n"), ParseError);
  EXPECT_THROW(ParseSolution(inst, "pair 2 3 t=1\nobjective 1\nsequence\n0\n"), ParseError);
}

}  // namespace
}  // namespace netcon
