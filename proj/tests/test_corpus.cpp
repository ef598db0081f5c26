/*
   Copyright 2026 The cyclotome Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <gtest/gtest.h>

#include "cyclotome/corpus.hpp"

using namespace cyclotome;

TEST(Golden, SixFixtures) {
    const auto& ex = golden_examples();
    ASSERT_EQ(ex.size(), 6u);
    EXPECT_EQ(ex[0].n, 26u);
    EXPECT_EQ(ex[0].k, 6u);
    EXPECT_EQ(ex[0].d, 9u);
    EXPECT_EQ(expected_distribution(ex[0]).enumerator(), "1 + 52z^9 + 676z^18");
    EXPECT_EQ(ex[4].enumerator.size(), 22u);
    EXPECT_EQ(ex[4].enumerator.back(), (std::pair<std::uint64_t, std::string>{42, "10460353203"}));
    EXPECT_EQ(ex[5].delta, 2u);
    EXPECT_EQ(ex[5].n, 24u);
    std::vector<std::uint64_t> ws;
    for (const auto& [w, c] : ex[5].enumerator)
        if (w) ws.push_back(w);
    EXPECT_EQ(ws, (std::vector<std::uint64_t>{12, 16, 18, 20, 22, 24}));
}

TEST(Golden, FixturesAreSelfConsistent) {
    // Each printed enumerator counts every input once.
    for (const auto& ex : golden_examples()) {
        const auto d = expected_distribution(ex);
        std::uint64_t r = 1;
        for (std::uint32_t i = 0; i < ex.spec.s * ex.spec.m; ++i) r *= ex.spec.p;
        EXPECT_EQ(d.total(), big_pow(BigInt(r), ex.spec.t)) << ex.name;
        EXPECT_EQ(d.min_distance(), ex.d) << ex.name;
    }
}

TEST(Corpus, FullRunPassesWithExpectedMethods) {
    const auto results = run_corpus();
    ASSERT_EQ(results.size(), 6u);
    const std::vector<std::vector<std::string>> methods{
        {"closed", "tsum", "naive"}, {"closed", "tsum", "naive"}, {"closed", "tsum", "naive"},
        {"closed", "tsum"},          {"closed", "sampling"},      {"closed", "tsum", "naive"}};
    for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_TRUE(results[i].pass) << results[i].name;
        for (const auto& d : results[i].diffs) ADD_FAILURE() << d.field << ": " << d.expected << " / " << d.actual;
        EXPECT_EQ(results[i].methods, methods[i]) << results[i].name;
    }
}

TEST(Corpus, PerturbedFrequencyIsReported) {
    GoldenExample ex = golden_examples()[0];
    ex.enumerator[1].second = "53";
    const auto res = run_example(ex);
    EXPECT_FALSE(res.pass);
    ASSERT_FALSE(res.diffs.empty());
    EXPECT_EQ(res.diffs[0].field, "weights/closed");
    EXPECT_EQ(res.diffs[0].actual, "weight 9: 53 vs 52");
}

TEST(Corpus, PerturbedPolynomialIsReported) {
    GoldenExample ex = golden_examples()[5];
    ex.h = "x^4 + 1";
    const auto res = run_example(ex);
    EXPECT_FALSE(res.pass);
    ASSERT_EQ(res.diffs.size(), 1u);
    EXPECT_EQ(res.diffs[0].field, "h");
}

TEST(Corpus, ClosedOnlyModePasses) {
    VerificationCaps caps;
    caps.naive = 0;
    caps.tsum = 0;
    caps.samples = 2000;
    for (const auto& r : run_corpus(caps)) {
        EXPECT_TRUE(r.pass) << r.name;
        EXPECT_EQ(r.methods.front(), "closed");
        EXPECT_EQ(std::count(r.methods.begin(), r.methods.end(), "naive"), 0);
    }
}
