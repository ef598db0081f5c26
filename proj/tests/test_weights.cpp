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

#include <numeric>
#include <random>

#include "cyclotome/error.hpp"
#include "cyclotome/weights.hpp"
#include "oracles.hpp"

using namespace cyclotome;
using oracle::spec;

namespace {

using Table = std::map<std::uint64_t, std::uint64_t>;

const CodeSpec kTernary = spec(3, 1, 3, 2, 2, 1, {0, 1}, GfpPoly{1, 2, 0, 1});
const CodeSpec kOrder2 = spec(7, 1, 2, 2, 2, 1, {0, 1}, GfpPoly{3, 6, 1});
const CodeSpec kSemi = spec(5, 1, 2, 3, 3, 1, {0, 1, 2}, GfpPoly{2, 4, 1});
const CodeSpec kOrder3 = spec(7, 1, 3, 3, 3, 1, {0, 1, 2}, GfpPoly{4, 0, 6, 1});
const CodeSpec kBinary = spec(2, 1, 6, 7, 7, 1, {0, 1, 2, 3, 4, 5, 6}, GfpPoly{1, 1, 0, 1, 1, 0, 1});
const CodeSpec kE3T2 = spec(7, 1, 2, 3, 2, 2, {0, 1}, GfpPoly{3, 6, 1});
const CodeSpec kBelow = spec(5, 1, 3, 4, 3, 1, {0, 1, 2}, GfpPoly{3, 3, 0, 1});
// Main assumptions hold and N = 1, but rows 0, 2, 4 of B are dependent.
const CodeSpec kDependent = spec(7, 1, 1, 6, 3, 1, {0, 1, 3});

Errc error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::InvalidArgument;
}

/// Valid specs over small fields covering N = 1, N = 2, semiprimitive, t = e and t < e.
std::vector<CodeSpec> small_valid_grid() {
    std::vector<CodeSpec> out;
    struct T {
        std::uint32_t p, s, m;
    };
    for (T f : {T{2, 1, 4}, T{3, 1, 2}, T{3, 1, 3}, T{5, 1, 2}, T{7, 1, 2}, T{2, 2, 2}, T{2, 1, 6}, T{3, 1, 4},
                T{13, 1, 1}, T{11, 1, 2}}) {
        std::uint64_t r = 1;
        for (std::uint32_t i = 0; i < f.s * f.m; ++i) r *= f.p;
        for (std::uint32_t e = 2; e <= 5; ++e) {
            if ((r - 1) % e) continue;
            for (std::uint32_t t = 2; t <= e; ++t) {
                std::uint64_t rt = 1;
                for (std::uint32_t i = 0; i < t; ++i) rt *= r;
                if (rt > 150'000) continue;
                for (std::int64_t a : {1, 2, 3, 4}) {
                    std::vector<std::int64_t> d(t);
                    std::iota(d.begin(), d.end(), 0);
                    auto sp = spec(f.p, f.s, f.m, e, t, a, d);
                    const auto c = CyclicCode::build(sp);
                    if (validate_assumptions(c.tower(), sp).all_hold()) out.push_back(sp);
                }
            }
        }
    }
    return out;
}

}  // namespace

TEST(Distribution, EnumeratorAndSummaries) {
    WeightDistribution d;
    d.n = 26;
    d.k = 6;
    d.entries = {{0, 1}, {9, 52}, {18, 676}};
    EXPECT_EQ(d.enumerator(), "1 + 52z^9 + 676z^18");
    EXPECT_EQ(d.min_distance(), 9u);
    EXPECT_EQ(d.total(), 729);
    EXPECT_EQ(d.first_moment(), 52 * 9 + 676 * 18);
    EXPECT_EQ(d.count(5), 0);
    auto e = d;
    EXPECT_EQ(first_difference(d, e), "");
    e.entries[18] = 677;
    EXPECT_EQ(first_difference(d, e), "weight 18: 676 vs 677");
}

TEST(Classify, NamedSpecs) {
    auto tag = [](const CodeSpec& sp) { return classify(CyclicCode::build(sp)).tag(); };
    EXPECT_EQ(tag(kTernary), "Thm1");
    EXPECT_EQ(tag(kOrder2), "Thm2/Cor1-L2");
    EXPECT_EQ(tag(kSemi), "Thm2/Cor2-semiprimitive");
    EXPECT_EQ(tag(kOrder3), "Thm2/Cor3-L3");
    EXPECT_EQ(tag(kBinary), "Thm2/Cor4-index2");
    EXPECT_EQ(tag(kE3T2), "Thm4");
    EXPECT_EQ(tag(kBelow), "Thm3");
}

TEST(Classify, UnsupportedCarriesFirstFailure) {
    const auto dep = classify(CyclicCode::build(kDependent));
    EXPECT_EQ(dep.theorem, Theorem::Unsupported);
    EXPECT_NE(dep.failed.find("dependent"), std::string::npos);

    auto zero_a = kTernary;
    zero_a.a = 0;
    const auto bad = classify(CyclicCode::build(zero_a));
    EXPECT_EQ(bad.theorem, Theorem::Unsupported);
    EXPECT_NE(bad.failed.find("condition i"), std::string::npos);

    // t < e with N = 2 outside e = 3, t = 2.
    const auto open = classify(CyclicCode::build(spec(3, 1, 4, 4, 2, 2, {0, 1})));
    ASSERT_EQ(open.theorem, Theorem::Unsupported) << open.tag();
    EXPECT_FALSE(open.failed.empty());
    EXPECT_EQ(error_of([&] { wd_closed(CyclicCode::build(spec(3, 1, 4, 4, 2, 2, {0, 1})), open); }),
              Errc::Unsupported);
}

TEST(Naive, NamedEnumerators) {
    EXPECT_EQ(oracle::as_map(wd_naive(CyclicCode::build(kTernary))), (Table{{0, 1}, {9, 52}, {18, 676}}));
    EXPECT_EQ(oracle::as_map(wd_naive(CyclicCode::build(kE3T2))),
              (Table{{0, 1}, {12, 72}, {16, 72}, {18, 264}, {20, 864}, {22, 864}, {24, 264}}));
}

TEST(Naive, MatchesCodewordOracleAndIsThreadIndependent) {
    for (const auto& sp : small_valid_grid()) {
        const auto c = CyclicCode::build(sp);
        std::uint64_t rt = input_space_size(c, 50'000);
        if (rt > 50'000) continue;
        const auto one = wd_naive(c, kDefaultNaiveCap, 1);
        EXPECT_EQ(oracle::as_map(one), oracle::weights_by_codeword(c)) << describe(sp);
        EXPECT_EQ(wd_naive(c, kDefaultNaiveCap, 3), one);
    }
}

TEST(Naive, CapExceeded) {
    EXPECT_EQ(error_of([] { wd_naive(CyclicCode::build(kTernary), 100); }), Errc::CapExceeded);
    EXPECT_EQ(error_of([] { wd_tsum(CyclicCode::build(kTernary), 100); }), Errc::CapExceeded);
}

TEST(TSum, LargeOrderThreeEnumerator) {
    const auto d = wd_tsum(CyclicCode::build(kOrder3));
    const Table expect{{0, 1},         {90, 342},       {96, 342},       {108, 342},      {180, 38988},
                       {186, 77976},   {192, 38988},    {198, 77976},    {204, 77976},    {216, 38988},
                       {270, 1481544}, {276, 4444632},  {282, 4444632},  {288, 5926176},  {294, 8889264},
                       {300, 4444632}, {306, 4444632},  {312, 4444632},  {324, 1481544}};
    EXPECT_EQ(oracle::as_map(d), expect);
    EXPECT_EQ(d.total(), 343 * 343 * 343);
}

TEST(TSum, EqualsNaiveOnGridIncludingUnsupported) {
    auto grid = small_valid_grid();
    grid.push_back(kDependent);
    for (const auto& sp : grid) {
        const auto c = CyclicCode::build(sp);
        const auto naive = wd_naive(c);
        EXPECT_EQ(wd_tsum(c), naive) << describe(sp);
        EXPECT_EQ(wd_tsum(c, kDefaultTsumCap, 2), naive) << describe(sp);
        EXPECT_EQ(naive.total(), big_pow(BigInt(c.tower().r()), sp.t));
    }
}

TEST(TProfile, CountsSumToEAndDetermineWeight) {
    const auto c = CyclicCode::build(kSemi);
    const auto& F = c.tower();
    const auto periods = periods_exact(F, 3);
    std::map<std::vector<std::uint32_t>, std::uint64_t> weight_of;
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(F.r() - 1));
    for (int trial = 0; trial < 3000; ++trial) {
        std::vector<Element> x(3);
        for (auto& xi : x) xi = Element{pick(rng)};
        const auto prof = t_profile(c, x);
        EXPECT_EQ(prof.zeros + std::accumulate(prof.class_counts.begin(), prof.class_counts.end(), 0u), 3u);
        auto key = prof.class_counts;
        key.push_back(prof.zeros);
        const auto w = hamming_weight(codeword(c, x));
        auto [it, fresh] = weight_of.emplace(key, w);
        if (!fresh) ASSERT_EQ(it->second, w);
    }
}

TEST(Closed, BelowEWithNOne) {
    const auto c = CyclicCode::build(kBelow);
    EXPECT_EQ(c.params().a_i, (std::vector<std::uint64_t>{1, 32, 63}));
    EXPECT_EQ(c.params().N, 1u);
    const auto d = wd_closed(c, classify(c));
    EXPECT_EQ(oracle::as_map(d), (Table{{0, 1}, {50, 744}, {75, 61008}, {100, 1891372}}));
    EXPECT_EQ(d.min_distance(), 50u);
    EXPECT_EQ(wd_tsum(c), d);
}

TEST(Closed, OrderTwoPeriods) {
    const auto c = CyclicCode::build(kOrder2);
    EXPECT_EQ(oracle::as_map(wd_closed(c, classify(c))),
              (Table{{0, 1}, {18, 48}, {24, 48}, {36, 576}, {42, 1152}, {48, 576}}));
}

TEST(Closed, SemiprimitiveAggregatesCoincidingWeights) {
    const auto c = CyclicCode::build(kSemi);
    const auto d = wd_closed(c, classify(c));
    EXPECT_EQ(oracle::as_map(d),
              (Table{{0, 1}, {4, 24}, {8, 240}, {12, 1280}, {16, 3840}, {20, 6144}, {24, 4096}}));
    // Periods of order 3 in GF(25): one class at 4, two at -1 + ... recompute the weight-8 sources by hand.
    const auto ms = DistinctPeriodMultiset::from_exact(periods_exact(c.tower(), 3));
    ASSERT_EQ(ms.mu(), 2u);
    // Two zero arguments and one in the singleton class, or one zero and two in the pair.
    const Rational zero_part = Rational(24, 3);
    std::vector<std::pair<std::array<int, 3>, BigInt>> to_eight;
    for (int u0 = 0; u0 <= 3; ++u0)
        for (int u1 = 0; u0 + u1 <= 3; ++u1) {
            const int u2 = 3 - u0 - u1;
            const Rational T = zero_part * u0 + ms.entries[0].value * u1 + ms.entries[1].value * u2;
            if (weight_from_T(c, T) != 8) continue;
            const BigInt freq = factorial(3) / (factorial(u0) * factorial(u1) * factorial(u2)) *
                                big_pow(BigInt(8), 3 - u0) * big_pow(BigInt(ms.entries[0].classes), u1) *
                                big_pow(BigInt(ms.entries[1].classes), u2);
            to_eight.push_back({{u0, u1, u2}, freq});
        }
    ASSERT_EQ(to_eight.size(), 2u);
    EXPECT_EQ(to_eight[0].second + to_eight[1].second, 240);
}

TEST(Closed, E3T2FromPeriods) {
    const auto c = CyclicCode::build(kE3T2);
    const auto d = wd_closed(c, classify(c));
    EXPECT_EQ(oracle::as_map(d), (Table{{0, 1}, {12, 72}, {16, 72}, {18, 264}, {20, 864}, {22, 864}, {24, 264}}));
    EXPECT_EQ(claimed_min_distance(c, classify(c)), 12u);
}

TEST(Closed, IndexTwoLargeEnumerator) {
    const auto c = CyclicCode::build(kBinary);
    const auto d = wd_closed(c, classify(c));
    EXPECT_EQ(d.entries.size(), 22u);
    EXPECT_EQ(d.count(42), BigInt("10460353203"));
    EXPECT_EQ(d.count(32), BigInt("875957725629"));
    EXPECT_EQ(d.total(), big_pow(BigInt(64), 7));
}

TEST(Closed, DependentRowsRejected) {
    const auto c = CyclicCode::build(kDependent);
    EXPECT_EQ(error_of([&] { theorem3_table(c); }), Errc::IndependenceFails);
}

TEST(Closed, AgreesWithEnumerationOnGrid) {
    std::set<std::string> tags;
    for (const auto& sp : small_valid_grid()) {
        const auto c = CyclicCode::build(sp);
        const auto cls = classify(c);
        if (cls.theorem == Theorem::Unsupported) continue;
        tags.insert(cls.tag());
        const auto closed = wd_closed(c, cls);
        EXPECT_EQ(closed, wd_tsum(c)) << describe(sp) << " " << cls.tag();
        for (const auto& inv : check_invariants(c, cls, closed)) EXPECT_TRUE(inv.ok) << inv.name << ": " << inv.detail;
    }
    EXPECT_TRUE(tags.count("Thm1"));
    EXPECT_TRUE(tags.count("Thm3"));
    EXPECT_TRUE(tags.count("Thm2/Cor1-L2"));
    EXPECT_TRUE(tags.count("Thm2/Cor2-semiprimitive"));
}

TEST(Closed, InvariantToChoiceOfPrimitiveElement) {
    for (GfpPoly mod : {GfpPoly{3, 6, 1}, GfpPoly{3, 1, 1}, GfpPoly{5, 1, 1}}) {
        if (!gfp::is_primitive(mod, 7)) continue;
        auto sp = kE3T2;
        sp.modulus = mod;
        const auto c = CyclicCode::build(sp);
        EXPECT_EQ(oracle::as_map(wd_naive(c)),
                  (Table{{0, 1}, {12, 72}, {16, 72}, {18, 264}, {20, 864}, {22, 864}, {24, 264}}));
    }
    for (GfpPoly mod : {GfpPoly{1, 1, 0, 0, 0, 0, 1}, GfpPoly{1, 1, 0, 1, 1, 0, 1}, GfpPoly{1, 0, 0, 0, 0, 1, 1}}) {
        auto sp = kBinary;
        sp.modulus = mod;
        const auto c = CyclicCode::build(sp);
        EXPECT_EQ(wd_closed(c, classify(c)), wd_closed(CyclicCode::build(kBinary), classify(CyclicCode::build(kBinary))));
    }
}

TEST(Identities, BelowEAtTEqualsE) {
    for (std::uint64_t r : {9u, 25u, 27u, 49u})
        for (std::uint64_t e = 1; e <= 10; ++e)
            for (std::uint64_t u = 1; u <= e; ++u) EXPECT_EQ(theorem3_frequency(e, e, u, r), theorem1_frequency(e, u, r));
}

TEST(Identities, E3T2FrequenciesSumToRSquared) {
    for (std::uint64_t r = 5; r < 2000; r += 4) {
        const BigInt R(r);
        const BigInt sum = 1 + 2 * (3 * (R - 1) / 2) + 2 * ((R - 1) * (R - 5) / 8) + 2 * (3 * (R - 1) * (R - 1) / 8);
        EXPECT_EQ(sum, R * R) << r;
    }
}

TEST(Vanishing, CountsByPattern) {
    const auto c = CyclicCode::build(kBelow);
    const std::uint32_t one[] = {2};
    EXPECT_EQ(count_vanishing_patterns(c, one), 15252);
    EXPECT_EQ(count_vanishing_patterns(c, one), theorem3_frequency(4, 3, 2, 125) / 4);
    const std::uint32_t three[] = {0, 1, 3};
    EXPECT_EQ(count_vanishing_patterns(c, three), 0);
}

TEST(Vanishing, PatternsPartitionNonzeroInputs) {
    const auto c = CyclicCode::build(spec(3, 1, 2, 4, 2, 1, {0, 1}));
    BigInt total = 0;
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
        std::vector<std::uint32_t> E;
        for (std::uint32_t h = 0; h < 4; ++h)
            if (mask >> h & 1) E.push_back(h);
        total += count_vanishing_patterns(c, E);
    }
    EXPECT_EQ(total, 81 - 1);
}

TEST(CrossVerify, SmallSpecAllMethodsAgree) {
    const auto rep = cross_verify(CyclicCode::build(kTernary));
    EXPECT_TRUE(rep.naive && rep.tsum && rep.closed);
    EXPECT_TRUE(rep.methods_agreed);
    EXPECT_TRUE(rep.ok());
    EXPECT_FALSE(rep.sampling);
}

TEST(CrossVerify, UnsupportedStillComparesEnumerations) {
    const auto rep = cross_verify(CyclicCode::build(kDependent));
    EXPECT_EQ(rep.classification.theorem, Theorem::Unsupported);
    EXPECT_FALSE(rep.closed);
    EXPECT_TRUE(rep.naive && rep.tsum);
    EXPECT_TRUE(rep.methods_agreed);
    EXPECT_TRUE(rep.ok());
}

TEST(CrossVerify, ClosedOnlyWithSampling) {
    VerificationCaps caps;
    caps.samples = 20'000;
    const auto rep = cross_verify(CyclicCode::build(kBinary), caps);
    EXPECT_TRUE(rep.closed);
    EXPECT_FALSE(rep.naive);
    EXPECT_FALSE(rep.tsum);
    ASSERT_TRUE(rep.sampling);
    EXPECT_TRUE(rep.sampling->all_in_support);
    EXPECT_TRUE(rep.ok());
}

TEST(CrossVerify, DetectsWrongReference) {
    const auto c = CyclicCode::build(kTernary);
    auto d = wd_closed(c, classify(c));
    d.entries[9] += 1;
    d.entries[18] -= 1;
    const auto inv = check_invariants(c, classify(c), d);
    bool moment_ok = true;
    for (const auto& i : inv)
        if (i.name == "first moment") moment_ok = i.ok;
    EXPECT_FALSE(moment_ok);
}
