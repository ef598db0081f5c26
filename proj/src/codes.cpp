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

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "cyclotome/codes.hpp"
#include "cyclotome/error.hpp"

namespace cyclotome {

namespace {

std::uint64_t mod_nonneg(std::int64_t a, std::uint64_t n) {
    const std::int64_t sn = static_cast<std::int64_t>(n);
    std::int64_t r = a % sn;
    return static_cast<std::uint64_t>(r < 0 ? r + sn : r);
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

/// Determinant of a square matrix over GF(r) by elimination.
Element determinant(const FieldTower& F, std::vector<std::vector<Element>> M) {
    const std::size_t k = M.size();
    Element det = F.one();
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && M[piv][col].value == 0) ++piv;
        if (piv == k) return F.zero();
        if (piv != col) {
            std::swap(M[piv], M[col]);
            det = F.neg(det);
        }
        det = F.mul(det, M[col][col]);
        const Element inv = F.inv(M[col][col]);
        for (std::size_t row = col + 1; row < k; ++row) {
            if (M[row][col].value == 0) continue;
            const Element f = F.mul(M[row][col], inv);
            for (std::size_t c = col; c < k; ++c) M[row][c] = F.sub(M[row][c], F.mul(f, M[col][c]));
        }
    }
    return det;
}

}  // namespace

std::string describe(const CodeSpec& spec) {
    std::ostringstream os;
    os << "(p,s,m,e,t,a)=(" << spec.p << ',' << spec.s << ',' << spec.m << ',' << spec.e << ',' << spec.t << ','
       << spec.a << ") delta=(";
    for (std::size_t i = 0; i < spec.deltas.size(); ++i) os << (i ? "," : "") << spec.deltas[i];
    os << ')';
    return os.str();
}

std::string_view method_name(ConditionIIIMethod m) noexcept {
    switch (m) {
        case ConditionIIIMethod::SmallN: return "N<=sqrt(r)";
        case ConditionIIIMethod::ProperDivisors: return "proper-divisor criterion";
        case ConditionIIIMethod::Direct: return "direct cosets";
    }
    return "?";
}

DerivedParams derive_params(const FieldTower& F, const CodeSpec& spec) {
    const std::uint64_t n1 = F.group_order();
    if (spec.e == 0 || n1 % spec.e)
        throw Error(Errc::EDoesNotDivide,
                    "e = " + std::to_string(spec.e) + " does not divide r - 1 = " + std::to_string(n1));
    if (spec.deltas.size() != spec.t)
        throw Error(Errc::InvalidArgument, "expected t = " + std::to_string(spec.t) + " deltas, got " +
                                               std::to_string(spec.deltas.size()));
    DerivedParams d;
    const std::uint64_t step = n1 / spec.e;
    const std::uint64_t a = mod_nonneg(spec.a, n1);
    std::uint64_t g = n1;
    for (auto delta : spec.deltas) {
        const std::uint64_t ai = (a + step * mod_nonneg(delta, spec.e)) % n1;
        d.a_i.push_back(ai);
        g = std::gcd(g, ai);
        d.betas.push_back(F.gamma_power(static_cast<std::int64_t>(step * mod_nonneg(delta, spec.e))));
    }
    d.delta = g;
    d.n = n1 / g;
    d.N = std::gcd(n1 / (F.q() - 1), a * spec.e);
    d.g = F.gamma_power(static_cast<std::int64_t>(a));
    return d;
}

AssumptionReport validate_assumptions(const FieldTower& F, const CodeSpec& spec) {
    AssumptionReport rep;
    const std::uint64_t n1 = F.group_order();
    const std::uint64_t r = F.r(), q = F.q();

    const bool e_divides = spec.e != 0 && n1 % spec.e == 0;
    const bool a_nonzero = mod_nonneg(spec.a, n1) != 0;
    rep.cond_i.holds = e_divides && a_nonzero;
    if (!a_nonzero)
        rep.cond_i.detail = "a = 0 mod r - 1";
    else if (!e_divides)
        rep.cond_i.detail = "e does not divide r - 1";
    else
        rep.cond_i.detail = "a != 0 mod r - 1 and e | r - 1";

    // ii) distinct Deltas mod e with gcd(Delta_i - Delta_1, e) = 1, under e >= t >= 2.
    rep.cond_ii.holds = true;
    if (spec.t < 2 || spec.t > spec.e) {
        rep.cond_ii = {false, "need e >= t >= 2"};
    } else if (spec.deltas.size() != spec.t) {
        rep.cond_ii = {false, "number of deltas differs from t"};
    } else {
        std::set<std::uint64_t> seen;
        for (auto dl : spec.deltas)
            if (!seen.insert(mod_nonneg(dl, spec.e)).second) {
                rep.cond_ii = {false, "Delta " + std::to_string(dl) + " repeated mod e"};
                break;
            }
        if (rep.cond_ii.holds) {
            std::int64_t g = spec.e;
            for (std::size_t i = 1; i < spec.deltas.size(); ++i)
                g = std::gcd(g, std::abs(spec.deltas[i] - spec.deltas[0]));
            rep.cond_ii = g == 1 ? ConditionVerdict{true, "deltas distinct, gcd = 1"}
                                 : ConditionVerdict{false, "gcd(Delta_i - Delta_1, e) = " + std::to_string(g)};
        }
    }

    if (!rep.cond_i.holds || !rep.cond_ii.holds) {
        rep.cond_iii = {false, "not checked: earlier condition failed"};
        return rep;
    }

    const DerivedParams d = derive_params(F, spec);
    // Sufficient criteria first.
    bool fast = false;
    if (d.N * d.N <= r) {
        fast = true;
        rep.method = ConditionIIIMethod::SmallN;
    } else {
        bool ok = true;
        for (std::uint64_t ell : gfp::divisors(spec.m)) {
            if (ell == spec.m) continue;
            if (d.N % (n1 / (ipow(q, ell) - 1)) == 0) ok = false;
        }
        if (ok) {
            fast = true;
            rep.method = ConditionIIIMethod::ProperDivisors;
        }
    }

    // Direct: the q-cyclotomic coset of -a_i has size m and the cosets are pairwise distinct.
    std::string why;
    std::set<std::vector<std::uint64_t>> cosets;
    bool direct = true;
    for (std::size_t i = 0; i < d.a_i.size() && direct; ++i) {
        auto cs = cyclotomic_coset(-static_cast<std::int64_t>(d.a_i[i]), q, r);
        if (cs.size() != spec.m) {
            direct = false;
            why = "deg h_{a_" + std::to_string(i + 1) + "} = " + std::to_string(cs.size()) + " != m";
        } else if (!cosets.insert(std::move(cs)).second) {
            direct = false;
            why = "h_{a_" + std::to_string(i + 1) + "} repeats an earlier factor";
        }
    }
    rep.direct_verdict = direct;
    rep.consistent = !fast || direct;
    if (!fast) rep.method = ConditionIIIMethod::Direct;
    rep.cond_iii.holds = direct;
    rep.cond_iii.detail = direct ? "via " + std::string(method_name(rep.method)) + ", confirmed by cosets" : why;
    return rep;
}

bool check_B_independence(const FieldTower& F, const CodeSpec& spec) {
    const DerivedParams d = derive_params(F, spec);
    const std::uint32_t e = spec.e, t = spec.t;
    if (t > e) return false;
    std::vector<std::vector<Element>> B(e, std::vector<Element>(t));
    for (std::uint32_t h = 0; h < e; ++h)
        for (std::uint32_t j = 0; j < t; ++j) B[h][j] = F.pow(d.betas[j], h);

    std::vector<std::uint32_t> rows(t);
    std::iota(rows.begin(), rows.end(), 0u);
    while (true) {
        std::vector<std::vector<Element>> M;
        for (auto rw : rows) M.push_back(B[rw]);
        if (determinant(F, std::move(M)).value == 0) return false;
        // next combination
        int i = static_cast<int>(t) - 1;
        while (i >= 0 && rows[i] == e - t + static_cast<std::uint32_t>(i)) --i;
        if (i < 0) break;
        ++rows[i];
        for (std::uint32_t j = i + 1; j < t; ++j) rows[j] = rows[j - 1] + 1;
    }
    return true;
}

CyclicCode CyclicCode::build(const CodeSpec& spec, std::uint64_t max_order) {
    return build(spec, FieldTower::build(spec.p, spec.s, spec.m, spec.modulus, max_order));
}

CyclicCode CyclicCode::build(const CodeSpec& spec, FieldTower tower) {
    if (tower.p() != spec.p || tower.s() != spec.s || tower.m() != spec.m)
        throw Error(Errc::InvalidArgument, "tower does not match the code's (p, s, m)");
    DerivedParams d = derive_params(tower, spec);
    return CyclicCode(spec, std::move(tower), std::move(d));
}

CodePolynomials build_polynomials(const CyclicCode& code) {
    const FieldTower& F = code.tower();
    const AssumptionReport rep = validate_assumptions(F, code.spec());
    if (!rep.all_hold()) {
        const auto& bad = !rep.cond_i.holds ? rep.cond_i : !rep.cond_ii.holds ? rep.cond_ii : rep.cond_iii;
        throw Error(Errc::AssumptionViolated, "main assumptions fail: " + bad.detail);
    }
    CodePolynomials out;
    out.h = Polynomial({F.one()});
    for (auto ai : code.params().a_i) {
        out.h_i.push_back(min_poly(F, F.gamma_power(-static_cast<std::int64_t>(ai))));
        out.h = mul(F, out.h, out.h_i.back());
    }
    auto [quot, rem] = divmod(F, x_pow_minus_one(F, code.length()), out.h);
    if (!rem.is_zero()) throw Error(Errc::DivisionNotExact, "h(x) does not divide x^n - 1");
    out.g = std::move(quot);
    return out;
}

std::vector<Element> codeword(const CyclicCode& code, std::span<const Element> x) {
    const FieldTower& F = code.tower();
    const auto& d = code.params();
    if (x.size() != d.a_i.size())
        throw Error(Errc::InvalidArgument, "codeword needs t = " + std::to_string(d.a_i.size()) + " field elements");
    std::vector<Element> word(d.n);
    for (std::uint64_t i = 0; i < d.n; ++i) {
        Element acc = F.zero();
        for (std::size_t j = 0; j < x.size(); ++j)
            acc = F.add(acc, F.mul(x[j], F.gamma_power(static_cast<std::int64_t>(d.a_i[j] * i % F.group_order()))));
        word[i] = F.trace(acc, Subfield::Q);
    }
    return word;
}

std::uint64_t hamming_weight(std::span<const Element> word) {
    return static_cast<std::uint64_t>(std::count_if(word.begin(), word.end(), [](Element c) { return c.value != 0; }));
}

std::uint64_t weight_from_T(const CyclicCode& code, const Rational& T) {
    const FieldTower& F = code.tower();
    const auto& d = code.params();
    const std::uint64_t e = code.spec().e;
    const Rational num = (Rational(F.group_order()) * e - Rational(d.N) * T) * (F.q() - 1);
    const Rational w = num / (Rational(e) * F.q() * d.delta);
    if (!is_integer(w) || w < 0 || w > Rational(d.n))
        throw Error(Errc::NonIntegralWeight, "T = " + to_string(T) + " gives weight " + to_string(w) + " for " +
                                                 describe(code.spec()));
    return static_cast<std::uint64_t>(boost::multiprecision::numerator(w));
}

std::uint64_t weight_via_T(const CyclicCode& code, const GaussianPeriodSet& periods, std::span<const Element> x) {
    const FieldTower& F = code.tower();
    const auto& d = code.params();
    if (periods.L != d.N)
        throw Error(Errc::InvalidArgument, "periods have order " + std::to_string(periods.L) + ", need N = " +
                                               std::to_string(d.N));
    if (x.size() != d.betas.size()) throw Error(Errc::InvalidArgument, "weight_via_T needs t field elements");
    CyclotomicInteger T(F.p());
    Element gh = F.one();
    for (std::uint32_t h = 0; h < code.spec().e; ++h) {
        Element y = F.zero();
        for (std::size_t tau = 0; tau < x.size(); ++tau) y = F.add(y, F.mul(x[tau], F.pow(d.betas[tau], h)));
        T += modified_period(F, periods, F.mul(gh, y));
        gh = F.mul(gh, d.g);
    }
    auto value = T.rational_value();
    if (!value) throw Error(Errc::NonIntegralWeight, "T is irrational for " + describe(code.spec()));
    return weight_from_T(code, Rational(*value));
}

}  // namespace cyclotome
