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

#include <algorithm>

#include "cyclotome/cyclotomy.hpp"
#include "cyclotome/error.hpp"
#include "oracles.hpp"

using namespace cyclotome;

namespace {

std::vector<Rational> sorted_exact(const GaussianPeriodSet& s) {
    std::vector<Rational> v;
    for (const auto& x : s.values) v.push_back(Rational(*x.rational_value()));
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Rational> sorted(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return v;
}

int legendre(std::int64_t a, std::int64_t L) {
    a %= L;
    if (a < 0) a += L;
    if (a == 0) return 0;
    std::int64_t r = 1, b = a, e = (L - 1) / 2;
    while (e) {
        if (e & 1) r = r * b % L;
        b = b * b % L;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

/// Class number of Q(sqrt(-L)), L > 3 prime, L = 3 mod 4: sum_{k<L/2} (k/L) / (2 - (2/L)).
std::int64_t class_number_formula(std::int64_t L) {
    std::int64_t s = 0;
    for (std::int64_t k = 1; k < L / 2 + 1; ++k) s += legendre(k, L);
    return s / (2 - legendre(2, L));
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

Errc error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::InvalidArgument;
}

}  // namespace

TEST(ClassTable, SizesAndIndex) {
    const auto F27 = FieldTower::build(3, 1, 3);
    const auto t1 = CyclotomicClassTable::build(F27, 1);
    EXPECT_EQ(t1.class_size(), 26u);
    const auto F49 = FieldTower::build(7, 1, 2);
    EXPECT_EQ(CyclotomicClassTable::build(F49, 2).class_size(), 24u);
    const auto F64 = FieldTower::build(2, 1, 6, GfpPoly{1, 1, 0, 1, 1, 0, 1});
    const auto t7 = CyclotomicClassTable::build(F64, 7);
    EXPECT_EQ(t7.class_size(), 9u);
    std::vector<int> counts(7, 0);
    for (std::uint32_t v = 1; v < 64; ++v) ++counts[t7.index(Element{v})];
    for (int c : counts) EXPECT_EQ(c, 9);
    EXPECT_EQ(t7.index(F64.gamma_power(7)), 0u);
    EXPECT_EQ(error_of([&] { CyclotomicClassTable::build(F64, 5); }), Errc::NotADivisor);
}

TEST(CyclotomicNumbers, OrderTwoSmallFields) {
    const auto M9 = cyclotomic_numbers(FieldTower::build(3, 1, 2), 2);
    EXPECT_EQ(M9, (std::vector<std::vector<std::uint64_t>>{{1, 2}, {2, 2}}));
    const auto M27 = cyclotomic_numbers(FieldTower::build(3, 1, 3), 2);
    EXPECT_EQ(M27, (std::vector<std::vector<std::uint64_t>>{{6, 7}, {6, 6}}));
}

TEST(CyclotomicNumbers, OrderOneIsRMinusTwo) {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {3, 3}, {5, 2}, {11, 1}}) {
        const auto F = FieldTower::build(p, 1, m);
        EXPECT_EQ(cyclotomic_numbers(F, 1)[0][0], F.r() - 2);
    }
}

TEST(CyclotomicNumbers, MatchSetIntersectionCounts) {
    struct C {
        std::uint32_t p, s, m, L;
    };
    for (C c : {C{2, 1, 6, 7}, C{2, 1, 6, 9}, C{3, 1, 4, 5}, C{7, 1, 2, 4}, C{13, 1, 2, 6}, C{2, 2, 2, 5}}) {
        const auto F = FieldTower::build(c.p, c.s, c.m);
        const auto M = cyclotomic_numbers(F, c.L);
        std::uint64_t total = 0;
        for (std::uint32_t i = 0; i < c.L; ++i)
            for (std::uint32_t j = 0; j < c.L; ++j) {
                ASSERT_EQ(M[i][j], oracle::cyclotomic_number(F, c.L, i, j)) << i << "," << j;
                total += M[i][j];
            }
        EXPECT_EQ(total, F.r() - 2);
    }
}

TEST(CyclotomicInteger, RationalityAndEquality) {
    CyclotomicInteger z(5);
    for (std::uint32_t c = 0; c < 5; ++c) z.add_root(c, 3);
    EXPECT_TRUE(z.is_rational());
    EXPECT_EQ(*z.rational_value(), 0);
    EXPECT_EQ(z, CyclotomicInteger::integer(5, 0));
    z.add_root(0, 2);
    EXPECT_EQ(*z.rational_value(), 2);
    CyclotomicInteger w(5);
    w.add_root(1);
    EXPECT_FALSE(w.is_rational());
    EXPECT_FALSE(w.rational_value().has_value());
    // zeta = -(1 + zeta^2 + zeta^3 + zeta^4)
    CyclotomicInteger v = CyclotomicInteger::integer(5, -1);
    for (std::uint32_t c : {2u, 3u, 4u}) v.add_root(c, -1);
    EXPECT_EQ(w, v);
    EXPECT_EQ(*w.scaled(0).rational_value(), 0);
}

TEST(PeriodsExact, OrderOneIsMinusOne) {
    const auto s = periods_exact(FieldTower::build(3, 1, 3), 1);
    EXPECT_EQ(*s.values[0].rational_value(), -1);
    EXPECT_EQ(s.modified_zero, 26);
}

TEST(PeriodsExact, NamedValues) {
    const auto F49 = FieldTower::build(7, 1, 2);
    const auto s49 = periods_exact(F49, 2);
    ASSERT_TRUE(s49.rational_values);
    EXPECT_EQ(*s49.rational_values, (std::vector<std::int64_t>{3, -4}));
    const auto F64 = FieldTower::build(2, 1, 6, GfpPoly{1, 1, 0, 1, 1, 0, 1});
    EXPECT_EQ(sorted_exact(periods_exact(F64, 7)),
              sorted({Rational(5), Rational(-3), Rational(-3), Rational(-3), Rational(1), Rational(1), Rational(1)}));
    EXPECT_EQ(*periods_exact(F64, 7).values[0].rational_value(), 5);
}

TEST(PeriodsExact, MatchFloatingCharacterSumsAndSumToMinusOne) {
    struct C {
        std::uint32_t p, s, m, L;
    };
    for (C c : {C{2, 1, 6, 7}, C{3, 1, 3, 2}, C{3, 1, 3, 13}, C{5, 1, 3, 31}, C{7, 1, 3, 3}, C{2, 2, 3, 9},
                C{13, 1, 2, 7}, C{3, 2, 2, 5}}) {
        const auto F = FieldTower::build(c.p, c.s, c.m);
        const auto s = periods_exact(F, c.L);
        CyclotomicInteger sum(c.p);
        for (std::uint32_t i = 0; i < c.L; ++i) {
            sum += s.values[i];
            // Evaluate the exact value numerically.
            std::complex<double> z = 0;
            for (std::uint32_t k = 0; k < c.p; ++k)
                z += static_cast<double>(s.values[i].counts()[k]) * std::polar(1.0, 2 * std::numbers::pi * k / c.p);
            const auto want = oracle::period(F, c.L, i);
            ASSERT_NEAR(z.real(), want.real(), 1e-6);
            ASSERT_NEAR(z.imag(), want.imag(), 1e-6);
            if (auto v = s.values[i].rational_value()) ASSERT_NEAR(want.real(), static_cast<double>(*v), 1e-6);
        }
        EXPECT_EQ(sum, CyclotomicInteger::integer(c.p, -1));
    }
}

TEST(PeriodsExact, IrrationalWhenSubgroupMissesPrimeField) {
    // Order-2 periods of GF(5): (-1 +- sqrt 5)/2.
    const auto s = periods_exact(FieldTower::build(5, 1, 1), 2);
    EXPECT_FALSE(s.rational_values);
    EXPECT_THROW(DistinctPeriodMultiset::from_exact(s), Error);
}

TEST(ModifiedPeriod, ZeroAndClasses) {
    const auto F = FieldTower::build(7, 1, 2);
    const auto s = periods_exact(F, 2);
    EXPECT_EQ(*modified_period(F, s, F.zero()).rational_value(), 24);
    EXPECT_EQ(*modified_period(F, s, F.gamma()).rational_value(), -4);
    EXPECT_EQ(*modified_period(F, s, F.gamma_power(2)).rational_value(), 3);
}

TEST(DistinctMultiset, GroupsEqualValues) {
    const std::vector<Rational> v{Rational(1), Rational(-3), Rational(1), Rational(5), Rational(-3), Rational(1)};
    const auto m = DistinctPeriodMultiset::from_values(v);
    ASSERT_EQ(m.mu(), 3u);
    EXPECT_EQ(m.entries[0].value, -3);
    EXPECT_EQ(m.entries[0].classes, 2u);
    EXPECT_EQ(m.entries[1].value, 1);
    EXPECT_EQ(m.entries[1].classes, 3u);
    EXPECT_EQ(m.entries[2].value, 5);
    EXPECT_EQ(m.total(), 6u);
}

TEST(ClosedForm, OrderTwoAt49) {
    const auto F = FieldTower::build(7, 1, 2);
    const auto cf = periods_closed_form(ClosedFormVariant::L2, F, 2);
    EXPECT_EQ(cf.values, (std::vector<Rational>{Rational(3), Rational(-4)}));
    EXPECT_EQ(std::get<L2Params>(cf.params).sqrt_r, 7u);
}

TEST(ClosedForm, OrderTwoIrrationalForOddDegree) {
    EXPECT_EQ(error_of([] { periods_closed_form(ClosedFormVariant::L2, FieldTower::build(3, 1, 3), 2); }),
              Errc::HypothesisNotMet);
    EXPECT_FALSE(closed_form_failure(ClosedFormVariant::L2, 3, 3, 2).empty());
}

TEST(ClosedForm, OrderTwoMatchesExactEverywhere) {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u})
        for (std::uint32_t sm = 2; ipow(p, sm) <= 2000; sm += 2) {
            const auto F = FieldTower::build(p, 1, sm);
            const auto cf = periods_closed_form(ClosedFormVariant::L2, F, 2);
            const auto ex = periods_exact(F, 2);
            EXPECT_EQ(Rational(*ex.values[0].rational_value()), cf.values[0]) << p << "^" << sm;
            EXPECT_EQ(Rational(*ex.values[1].rational_value()), cf.values[1]) << p << "^" << sm;
        }
}

TEST(ClosedForm, OrderThreeAt343) {
    const auto F = FieldTower::build(7, 1, 3);
    auto cf = periods_closed_form(ClosedFormVariant::L3, F, 3);
    const auto& prm = std::get<L3Params>(cf.params);
    EXPECT_EQ(abs(prm.c1), 1);
    EXPECT_EQ(abs(prm.d1), 1);
    EXPECT_EQ(prm.c1 * prm.c1 + 27 * prm.d1 * prm.d1, 4 * 7);
    EXPECT_EQ(sorted(cf.values), sorted({Rational(2), Rational(9), Rational(-12)}));
    const auto ex = periods_exact(F, 3);
    EXPECT_TRUE(align_labels(cf, ex));
    for (std::uint32_t i = 0; i < 3; ++i) EXPECT_EQ(cf.values[i], Rational(*ex.values[i].rational_value()));
}

TEST(ClosedForm, OrderThreeLargerCases) {
    struct C {
        std::uint32_t p, m;
    };
    for (C c : {C{7, 6}, C{13, 3}, C{19, 3}, C{31, 3}, C{37, 3}, C{43, 3}}) {
        const auto F = FieldTower::build(c.p, 1, c.m);
        auto cf = periods_closed_form(ClosedFormVariant::L3, F, 3);
        const auto& prm = std::get<L3Params>(cf.params);
        EXPECT_EQ(prm.c1 * prm.c1 + 27 * prm.d1 * prm.d1, 4 * BigInt(ipow(c.p, c.m / 3)));
        EXPECT_EQ(boost::multiprecision::gcd(prm.c1, BigInt(c.p)), 1);
        const auto ex = periods_exact(F, 3);
        EXPECT_EQ(sorted(cf.values), sorted_exact(ex)) << c.p << "^" << c.m;
        EXPECT_TRUE(align_labels(cf, ex));
    }
}

TEST(ClosedForm, SemiprimitiveMatchesExact) {
    struct C {
        std::uint32_t p, m, L;
    };
    // (p, s*m, L) with p^j = -1 mod L and 2j | s*m.
    for (C c : {C{3, 2, 4}, C{2, 2, 3}, C{2, 4, 5}, C{5, 2, 3}, C{5, 2, 6}, C{2, 6, 9}, C{3, 4, 5}, C{3, 4, 10},
                C{2, 10, 11}, C{7, 2, 4}, C{2, 6, 3}, C{3, 6, 7}, C{11, 2, 4}, C{2, 8, 17}}) {
        ASSERT_TRUE(closed_form_failure(ClosedFormVariant::Semiprimitive, c.p, c.m, c.L).empty())
            << c.p << " " << c.m << " " << c.L;
        const auto F = FieldTower::build(c.p, 1, c.m);
        const auto cf = periods_closed_form(ClosedFormVariant::Semiprimitive, F, c.L);
        const auto ex = periods_exact(F, c.L);
        for (std::uint32_t i = 0; i < c.L; ++i)
            EXPECT_EQ(cf.values[i], Rational(*ex.values[i].rational_value())) << c.p << "^" << c.m << " L=" << c.L;
    }
}

TEST(ClosedForm, IndexTwoAt64) {
    const auto F = FieldTower::build(2, 1, 6, GfpPoly{1, 1, 0, 1, 1, 0, 1});
    auto cf = periods_closed_form(ClosedFormVariant::Index2, F, 7);
    const auto& prm = std::get<Index2Params>(cf.params);
    EXPECT_EQ(prm.class_number, 1u);
    EXPECT_EQ(prm.a_qf, -1);
    EXPECT_EQ(prm.b_qf, 1);
    EXPECT_EQ(prm.k, 2u);
    EXPECT_EQ(prm.P, -4);
    EXPECT_EQ(prm.A, Rational(-3, 2));
    EXPECT_EQ(prm.B, Rational(-1, 2));
    EXPECT_EQ(cf.values[0], 5);
    for (std::uint32_t u : {1u, 2u, 4u}) EXPECT_EQ(cf.values[u], -3);
    for (std::uint32_t u : {3u, 5u, 6u}) EXPECT_EQ(cf.values[u], 1);
    const auto ex = periods_exact(F, 7);
    EXPECT_TRUE(align_labels(cf, ex));
    for (std::uint32_t i = 0; i < 7; ++i) EXPECT_EQ(cf.values[i], Rational(*ex.values[i].rational_value()));
}

TEST(ClosedForm, IndexTwoOtherInstances) {
    struct C {
        std::uint32_t p, m, L;
    };
    for (C c : {C{2, 3, 7}, C{11, 3, 7}, C{3, 5, 11}, C{5, 5, 11}, C{2, 11, 23}, C{2, 9, 7}}) {
        ASSERT_TRUE(closed_form_failure(ClosedFormVariant::Index2, c.p, c.m, c.L).empty())
            << c.p << " " << c.m << " " << c.L;
        const auto F = FieldTower::build(c.p, 1, c.m);
        auto cf = periods_closed_form(ClosedFormVariant::Index2, F, c.L);
        const auto ex = periods_exact(F, c.L);
        EXPECT_EQ(sorted(cf.values), sorted_exact(ex)) << c.p << "^" << c.m << " L=" << c.L;
        EXPECT_TRUE(align_labels(cf, ex));
    }
}

TEST(ClassNumber, NamedValues) {
    EXPECT_EQ(class_number_imag_quadratic(7), 1u);
    EXPECT_EQ(class_number_imag_quadratic(11), 1u);
    EXPECT_EQ(class_number_imag_quadratic(23), 3u);
    EXPECT_EQ(error_of([] { class_number_imag_quadratic(3); }), Errc::BadL);
    EXPECT_EQ(error_of([] { class_number_imag_quadratic(13); }), Errc::BadL);
    EXPECT_EQ(error_of([] { class_number_imag_quadratic(15); }), Errc::BadL);
}

TEST(ClassNumber, MatchesCharacterSumFormula) {
    for (std::uint32_t L = 7; L < 2000; L += 4)
        if (gfp::is_prime(L)) ASSERT_EQ(class_number_imag_quadratic(L), class_number_formula(L)) << L;
}

TEST(QuadraticPair, NamedSolutions) {
    EXPECT_EQ(solve_index2_ab(7, 2, 1), (QuadraticPair{-1, 1}));
    EXPECT_EQ(solve_index2_ab(7, 11, 1), (QuadraticPair{-4, 2}));
    EXPECT_EQ(solve_index2_ab(23, 2, 3), (QuadraticPair{-3, 1}));
}

TEST(QuadraticPair, SatisfiesAllConstraints) {
    for (std::uint32_t L : {7u, 11u, 19u, 23u, 31u, 43u, 47u})
        for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u}) {
            if (p == L || legendre(p, L) != 1) continue;
            const std::uint32_t h = class_number_imag_quadratic(L);
            if ((L - 1 + 2 * h) % 4) continue;
            const auto ab = solve_index2_ab(L, p, h);
            EXPECT_EQ(ab.a * ab.a + L * ab.b * ab.b, 4 * BigInt(ipow(p, h))) << L << " " << p;
            EXPECT_GT(ab.b, 0);
            EXPECT_NE(ab.b % p, 0);
            BigInt target = 2 * boost::multiprecision::powm(BigInt(p), BigInt((L - 1 + 2 * h) / 4), BigInt(L));
            BigInt lhs = ((ab.a + target) % L + L) % L;
            EXPECT_EQ(lhs, 0) << L << " " << p;
        }
}
