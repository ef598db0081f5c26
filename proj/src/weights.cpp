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


#include <functional>
#include <sstream>

#include "cyclotome/error.hpp"
#include "cyclotome/weights.hpp"

namespace cyclotome {

std::uint64_t WeightDistribution::min_distance() const {
    for (const auto& [w, c] : entries)
        if (w > 0 && c > 0) return w;
    return 0;
}

BigInt WeightDistribution::total() const {
    BigInt s = 0;
    for (const auto& [w, c] : entries) s += c;
    return s;
}

BigInt WeightDistribution::first_moment() const {
    BigInt s = 0;
    for (const auto& [w, c] : entries) s += c * w;
    return s;
}

BigInt WeightDistribution::count(std::uint64_t w) const {
    auto it = entries.find(w);
    return it == entries.end() ? BigInt(0) : it->second;
}

std::string WeightDistribution::enumerator() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : entries) {
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (w == 0) {
            os << c;
        } else {
            if (c != 1) os << c;
            os << "z^" << w;
        }
    }
    return first ? "0" : os.str();
}

TProfile t_profile(const CyclicCode& code, std::span<const Element> x) {
    const FieldTower& F = code.tower();
    const auto& d = code.params();
    if (x.size() != d.betas.size()) throw Error(Errc::InvalidArgument, "t_profile needs t field elements");
    TProfile prof;
    prof.class_counts.assign(d.N, 0);
    Element gh = F.one();
    for (std::uint32_t h = 0; h < code.spec().e; ++h) {
        Element y = F.zero();
        for (std::size_t tau = 0; tau < x.size(); ++tau) y = F.add(y, F.mul(x[tau], F.pow(d.betas[tau], h)));
        const Element arg = F.mul(gh, y);
        if (arg.value == 0)
            ++prof.zeros;
        else
            ++prof.class_counts[F.dlog(arg) % d.N];
        gh = F.mul(gh, d.g);
    }
    return prof;
}

std::string CaseClassification::tag() const {
    switch (theorem) {
        case Theorem::EqualN1:
            return "Thm1";
        case Theorem::EqualGeneral:
            if (!period_source) return "Thm2/exact";
            switch (*period_source) {
                case ClosedFormVariant::L2:
                    return "Thm2/Cor1-L2";
                case ClosedFormVariant::Semiprimitive:
                    return "Thm2/Cor2-semiprimitive";
                case ClosedFormVariant::L3:
                    return "Thm2/Cor3-L3";
                case ClosedFormVariant::Index2:
                    return "Thm2/Cor4-index2";
            }
            return "Thm2";
        case Theorem::BelowN1:
            return "Thm3";
        case Theorem::E3T2N2:
            return "Thm4";
        case Theorem::Unsupported:
            return "Unsupported";
    }
    return "Unsupported";
}

CaseClassification classify(const CyclicCode& code) {
    CaseClassification c;
    const FieldTower& F = code.tower();
    const auto& sp = code.spec();
    const std::uint64_t N = code.params().N;
    auto note = [&](std::string s) { c.trace.push_back(std::move(s)); };
    auto fail = [&](std::string s) {
        c.theorem = Theorem::Unsupported;
        c.failed = s;
        note("failed: " + s);
        return c;
    };

    const AssumptionReport rep = validate_assumptions(F, sp);
    if (!rep.cond_i.holds) return fail("condition i: " + rep.cond_i.detail);
    if (!rep.cond_ii.holds) return fail("condition ii: " + rep.cond_ii.detail);
    if (!rep.cond_iii.holds) return fail("condition iii: " + rep.cond_iii.detail);
    note("main assumptions hold");

    if (sp.t == sp.e) {
        note("t = e");
        if (N == 1) {
            note("N = 1");
            c.theorem = Theorem::EqualN1;
            return c;
        }
        c.theorem = Theorem::EqualGeneral;
        note("N = " + std::to_string(N));
        const auto v = applicable_variant(F.p(), F.degree(), static_cast<std::uint32_t>(N));
        if (v) {
            c.period_source = *v;
            note(std::string("periods by closed form: ") + std::string(variant_name(*v)));
        } else {
            note("periods computed exactly");
        }
        return c;
    }

    note("t < e");
    if (N == 1) {
        note("N = 1");
        if (!check_B_independence(F, sp)) return fail("some t rows of B are linearly dependent");
        note("every t rows of B are independent");
        c.theorem = Theorem::BelowN1;
        return c;
    }
    if (sp.e == 3 && sp.t == 2 && N == 2) {
        note("e = 3, t = 2, N = 2");
        c.theorem = Theorem::E3T2N2;
        return c;
    }
    return fail("t < e with N = " + std::to_string(N) + " has no closed form unless e = 3, t = 2, N = 2");
}

namespace {

WeightDistribution empty_for(const CyclicCode& code) {
    WeightDistribution d;
    d.n = code.length();
    d.k = code.dimension();
    return d;
}

void add(WeightDistribution& d, std::uint64_t w, const BigInt& c) {
    if (c == 0) return;
    d.entries[w] += c;
}

/// (q-1) r u / (delta e q), which must be an integer.
std::uint64_t scaled_weight(const CyclicCode& code, std::uint64_t u) {
    const FieldTower& F = code.tower();
    const Rational w = Rational(F.q() - 1) * F.r() * u / (Rational(code.params().delta) * code.spec().e * F.q());
    if (!is_integer(w))
        throw Error(Errc::NonIntegralWeight, "weight " + to_string(w) + " for " + describe(code.spec()));
    return static_cast<std::uint64_t>(boost::multiprecision::numerator(w));
}

}  // namespace

BigInt theorem1_frequency(std::uint64_t e, std::uint64_t u, std::uint64_t r) {
    return binomial(e, u) * big_pow(BigInt(r - 1), u);
}

BigInt theorem3_frequency(std::uint64_t e, std::uint64_t t, std::uint64_t u, std::uint64_t r) {
    BigInt s = 0;
    for (std::uint64_t k = 0; k < u; ++k) {
        BigInt term = binomial(e - t + u, k) * (big_pow(BigInt(r), u - k) - 1);
        if (k % 2)
            s -= term;
        else
            s += term;
    }
    return binomial(e, t - u) * s;
}

WeightDistribution theorem1_table(const CyclicCode& code) {
    WeightDistribution d = empty_for(code);
    const std::uint64_t e = code.spec().e;
    for (std::uint64_t u = 0; u <= e; ++u) add(d, scaled_weight(code, u), theorem1_frequency(e, u, code.tower().r()));
    return d;
}

WeightDistribution theorem2_table(const CyclicCode& code, const DistinctPeriodMultiset& periods) {
    WeightDistribution d = empty_for(code);
    const FieldTower& F = code.tower();
    const std::uint64_t e = code.spec().e;
    const std::uint64_t N = code.params().N;
    if (periods.total() != N)
        throw Error(Errc::InvalidArgument, "period multiset covers " + std::to_string(periods.total()) +
                                               " classes, need N = " + std::to_string(N));
    const std::size_t mu = periods.mu();
    const BigInt class_size = BigInt((F.r() - 1) / N);
    const BigInt e_fact = factorial(e);

    // u[0] counts zero arguments, u[j] arguments whose period is entries[j-1].
    std::vector<std::uint64_t> u(mu + 1, 0);
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t j, std::uint64_t left) {
        if (j == mu) {
            u[mu] = left;
            Rational T = Rational(u[0]) * (F.r() - 1) / N;
            BigInt freq = e_fact / factorial(u[0]) * big_pow(class_size, e - u[0]);
            for (std::size_t i = 1; i <= mu; ++i) {
                T += Rational(u[i]) * periods.entries[i - 1].value;
                freq /= factorial(u[i]);
                freq *= big_pow(BigInt(periods.entries[i - 1].classes), u[i]);
            }
            add(d, weight_from_T(code, T), freq);
            return;
        }
        for (std::uint64_t k = 0; k <= left; ++k) {
            u[j] = k;
            rec(j + 1, left - k);
        }
    };
    rec(0, e);
    return d;
}

WeightDistribution theorem3_table(const CyclicCode& code) {
    const auto& sp = code.spec();
    if (!check_B_independence(code.tower(), sp))
        throw Error(Errc::IndependenceFails, "some t rows of B are linearly dependent for " + describe(sp));
    WeightDistribution d = empty_for(code);
    add(d, 0, 1);
    for (std::uint64_t u = 1; u <= sp.t; ++u)
        add(d, scaled_weight(code, sp.e - sp.t + u), theorem3_frequency(sp.e, sp.t, u, code.tower().r()));
    return d;
}

WeightDistribution theorem4_table(const CyclicCode& code, const Rational& eta0, const Rational& eta1) {
    const FieldTower& F = code.tower();
    const std::uint64_t r = F.r();
    if (r % 4 != 1) throw Error(Errc::HypothesisNotMet, "e = 3, t = 2, N = 2 needs r = 1 mod 4");
    WeightDistribution d = empty_for(code);
    // Order-2 cyclotomic numbers for r = 1 mod 4: (0,0) = (r-5)/4, the others (r-1)/4.
    const BigInt half = BigInt((r - 1) / 2);
    const BigInt c00 = BigInt((r - 5) / 4);
    const BigInt c01 = BigInt((r - 1) / 4);
    const Rational bar0 = Rational(r - 1, 2);
    add(d, 0, 1);
    add(d, weight_from_T(code, 3 * eta0), half * c00);
    add(d, weight_from_T(code, 3 * eta1), half * c00);
    add(d, weight_from_T(code, 2 * eta0 + eta1), half * 3 * c01);
    add(d, weight_from_T(code, eta0 + 2 * eta1), half * 3 * c01);
    add(d, weight_from_T(code, bar0 + 2 * eta0), 3 * half);
    add(d, weight_from_T(code, bar0 + 2 * eta1), 3 * half);
    return d;
}

WeightDistribution wd_closed(const CyclicCode& code, const CaseClassification& cls) {
    const FieldTower& F = code.tower();
    const auto N = static_cast<std::uint32_t>(code.params().N);
    switch (cls.theorem) {
        case Theorem::EqualN1:
            return theorem1_table(code);
        case Theorem::EqualGeneral: {
            if (!cls.period_source) return theorem2_table(code, DistinctPeriodMultiset::from_exact(periods_exact(F, N)));
            const ClosedFormPeriods cf = periods_closed_form(*cls.period_source, F, N);
            return theorem2_table(code, DistinctPeriodMultiset::from_values(cf.values));
        }
        case Theorem::BelowN1:
            return theorem3_table(code);
        case Theorem::E3T2N2: {
            const ClosedFormPeriods cf = periods_closed_form(ClosedFormVariant::L2, F, 2);
            return theorem4_table(code, cf.values[0], cf.values[1]);
        }
        case Theorem::Unsupported:
            break;
    }
    throw Error(Errc::Unsupported, "no closed form for " + describe(code.spec()) +
                                       (cls.failed.empty() ? "" : ": " + cls.failed));
}

std::optional<std::uint64_t> claimed_min_distance(const CyclicCode& code, const CaseClassification& cls) {
    const FieldTower& F = code.tower();
    const auto& sp = code.spec();
    switch (cls.theorem) {
        case Theorem::EqualN1:
            return scaled_weight(code, 1);
        case Theorem::BelowN1:
            return scaled_weight(code, sp.e - sp.t + 1);
        case Theorem::E3T2N2: {
            const std::uint64_t sr = static_cast<std::uint64_t>(big_pow(F.p(), F.degree() / 2));
            const Rational w =
                Rational(2 * (F.q() - 1)) * (F.r() - sr) / (Rational(3) * F.q() * code.params().delta);
            if (!is_integer(w)) return std::nullopt;
            return static_cast<std::uint64_t>(boost::multiprecision::numerator(w));
        }
        default:
            return std::nullopt;
    }
}

std::string first_difference(const WeightDistribution& a, const WeightDistribution& b) {
    if (a.n != b.n) return "length " + std::to_string(a.n) + " vs " + std::to_string(b.n);
    auto ia = a.entries.begin();
    auto ib = b.entries.begin();
    while (ia != a.entries.end() || ib != b.entries.end()) {
        if (ib == b.entries.end() || (ia != a.entries.end() && ia->first < ib->first))
            return "weight " + std::to_string(ia->first) + ": " + to_decimal(ia->second) + " vs 0";
        if (ia == a.entries.end() || ib->first < ia->first)
            return "weight " + std::to_string(ib->first) + ": 0 vs " + to_decimal(ib->second);
        if (ia->second != ib->second)
            return "weight " + std::to_string(ia->first) + ": " + to_decimal(ia->second) + " vs " +
                   to_decimal(ib->second);
        ++ia;
        ++ib;
    }
    return "";
}

}  // namespace cyclotome
