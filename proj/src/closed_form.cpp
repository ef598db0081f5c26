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

#include <numeric>

#include "cyclotome/cyclotomy.hpp"
#include "cyclotome/error.hpp"

namespace cyclotome {

namespace {

using boost::multiprecision::sqrt;

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    b %= mod;
    while (e) {
        if (e & 1) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * b % mod);
        b = static_cast<std::uint64_t>(static_cast<unsigned __int128>(b) * b % mod);
        e >>= 1;
    }
    return r;
}

std::int64_t mod_floor(const BigInt& a, std::int64_t m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return static_cast<std::int64_t>(r);
}

/// Least j >= 1 with p^j = -1 (mod L), or 0.
std::uint32_t semiprimitive_j(std::uint32_t p, std::uint32_t L) {
    std::uint64_t x = 1;
    for (std::uint32_t j = 1; j <= L; ++j) {
        x = x * p % L;
        if (x == L - 1) return j;
    }
    return 0;
}

bool is_qr(std::uint64_t u, std::uint32_t L) { return powmod(u, (L - 1) / 2, L) == 1; }

}  // namespace

std::string_view variant_name(ClosedFormVariant v) noexcept {
    switch (v) {
        case ClosedFormVariant::L2: return "L2";
        case ClosedFormVariant::L3: return "L3";
        case ClosedFormVariant::Semiprimitive: return "semiprimitive";
        case ClosedFormVariant::Index2: return "index2";
    }
    return "?";
}

std::string closed_form_failure(ClosedFormVariant variant, std::uint32_t p, std::uint32_t sm, std::uint32_t L) {
    const std::string Ls = std::to_string(L);
    switch (variant) {
        case ClosedFormVariant::L2:
            if (L != 2) return "L = " + Ls + " is not 2";
            if (p == 2) return "p must be odd";
            if (sm % 2) return "s*m is odd, so the order-2 periods are irrational";
            return "";
        case ClosedFormVariant::L3:
            if (L != 3) return "L = " + Ls + " is not 3";
            if (p % 3 != 1) return "p is not 1 mod 3";
            if (sm % 3) return "3 does not divide s*m";
            return "";
        case ClosedFormVariant::Semiprimitive: {
            if (L <= 2) return "L = " + Ls + " must exceed 2";
            if (p % L == 0) return "p divides L";
            const std::uint32_t j = semiprimitive_j(p, L);
            if (!j) return "no j with p^j = -1 mod " + Ls;
            if (sm % (2 * j)) return "2j = " + std::to_string(2 * j) + " does not divide s*m";
            return "";
        }
        case ClosedFormVariant::Index2:
            if (!gfp::is_prime(L)) return "L = " + Ls + " is not prime";
            if (L % 4 != 3) return "L = " + Ls + " is not 3 mod 4";
            if (L == 3) return "L = 3 is excluded";
            if (p % L == 0 || !is_qr(p, L)) return "p is not a quadratic residue mod " + Ls;
            if (sm % ((L - 1) / 2)) return "(L-1)/2 does not divide s*m";
            return "";
    }
    return "unknown variant";
}

std::optional<ClosedFormVariant> applicable_variant(std::uint32_t p, std::uint32_t sm, std::uint32_t L) {
    for (auto v : {ClosedFormVariant::L2, ClosedFormVariant::L3, ClosedFormVariant::Semiprimitive,
                   ClosedFormVariant::Index2})
        if (closed_form_failure(v, p, sm, L).empty()) return v;
    return std::nullopt;
}

std::uint32_t class_number_imag_quadratic(std::uint32_t L) {
    if (!gfp::is_prime(L) || L % 4 != 3 || L == 3)
        throw Error(Errc::BadL, "class number needs a prime L = 3 mod 4, L != 3; got " + std::to_string(L));
    // Reduced forms (a, b, c): b^2 - 4ac = -L, |b| <= a <= c, b >= 0 when |b| = a or a = c.
    std::uint32_t count = 0;
    for (std::int64_t a = 1; 3 * a * a <= static_cast<std::int64_t>(L); ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            const std::int64_t num = b * b + L;
            if (num % (4 * a)) continue;
            const std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;
            if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
            ++count;
        }
    }
    return count;
}

QuadraticPair solve_index2_ab(std::uint32_t L, std::uint32_t p, std::uint32_t h) {
    if ((L - 1 + 2 * h) % 4)
        throw Error(Errc::NoDiophantineSolution, "(L-1+2h)/4 is not an integer");
    const std::int64_t target = mod_floor(-2 * BigInt(powmod(p, (L - 1 + 2 * h) / 4, L)), L);
    const BigInt four_ph = 4 * big_pow(p, h);
    for (BigInt b = 1; L * b * b <= four_ph; ++b) {
        if (b % p == 0) continue;
        const BigInt rest = four_ph - L * b * b;
        const BigInt a = sqrt(rest);
        if (a * a != rest) continue;
        for (const BigInt& cand : {BigInt(-a), a})
            if (mod_floor(cand, L) == target) return {cand, b};
    }
    throw Error(Errc::NoDiophantineSolution, "no (a, b) with a^2 + " + std::to_string(L) + "b^2 = 4*" +
                                                 std::to_string(p) + "^" + std::to_string(h));
}

ClosedFormPeriods periods_closed_form(ClosedFormVariant variant, const FieldTower& F, std::uint32_t L) {
    if (L == 0 || F.group_order() % L)
        throw Error(Errc::NotADivisor,
                    "L = " + std::to_string(L) + " does not divide r - 1 = " + std::to_string(F.group_order()));
    const std::uint32_t p = F.p(), sm = F.degree();
    if (auto why = closed_form_failure(variant, p, sm, L); !why.empty())
        throw Error(Errc::HypothesisNotMet, std::string(variant_name(variant)) + ": " + why);

    ClosedFormPeriods out;
    out.variant = variant;
    out.L = L;
    out.values.assign(L, Rational(0));

    switch (variant) {
        case ClosedFormVariant::L2: {
            L2Params prm;
            prm.sqrt_r = static_cast<std::uint64_t>(big_pow(p, sm / 2));
            prm.p_is_1_mod_4 = p % 4 == 1;
            // (-1)^(sm-1) times i^sm when p = 3 mod 4; sm is even here.
            int sign = (sm - 1) % 2 ? -1 : 1;
            if (!prm.p_is_1_mod_4 && (sm / 2) % 2) sign = -sign;
            out.values[0] = Rational(-1 + sign * static_cast<std::int64_t>(prm.sqrt_r), 2);
            out.values[1] = -1 - out.values[0];
            out.params = prm;
            break;
        }
        case ClosedFormVariant::L3: {
            L3Params prm;
            prm.cube_root_r = big_pow(p, sm / 3);
            const BigInt target = 4 * prm.cube_root_r;
            bool found = false;
            for (BigInt d = 0; 27 * d * d <= target && !found; ++d) {
                const BigInt rest = target - 27 * d * d;
                const BigInt c = sqrt(rest);
                if (c * c != rest || c % p == 0) continue;
                // Integrality of eta_0 = (-1 - c1 R)/3 with R = 1 mod 3 forces c1 = -1 mod 3.
                prm.c1 = c % 3 == 2 ? c : BigInt(-c);
                prm.d1 = d;
                found = true;
            }
            if (!found) throw Error(Errc::NoDiophantineSolution, "no c1, d1 with 4p^(sm/3) = c1^2 + 27 d1^2");
            const Rational R(prm.cube_root_r);
            const Rational c1(prm.c1), d1(prm.d1);
            out.values[0] = (-1 - c1 * R) / 3;
            out.values[1] = (-1 + (c1 + 9 * d1) * R / 2) / 3;
            out.values[2] = (-1 + (c1 - 9 * d1) * R / 2) / 3;
            out.params = prm;
            break;
        }
        case ClosedFormVariant::Semiprimitive: {
            SemiprimitiveParams prm;
            prm.j = semiprimitive_j(p, L);
            prm.v = sm / (2 * prm.j);
            prm.sqrt_r = big_pow(p, std::uint64_t{prm.j} * prm.v);
            const BigInt pj1 = big_pow(p, prm.j) + 1;
            prm.case_a = prm.v % 2 == 1 && p % 2 == 1 && (pj1 / L) % 2 == 1;
            const Rational sr(prm.sqrt_r);
            if (prm.case_a) {
                for (std::uint32_t k = 0; k < L; ++k) out.values[k] = -(sr + 1) / L;
                out.values[L / 2] = ((L - 1) * sr - 1) / L;
            } else {
                const int sv = prm.v % 2 ? -1 : 1;  // (-1)^v
                for (std::uint32_t k = 1; k < L; ++k) out.values[k] = (sv * sr - 1) / L;
                out.values[0] = (-sv * Rational(L - 1) * sr - 1) / L;
            }
            out.params = prm;
            break;
        }
        case ClosedFormVariant::Index2: {
            Index2Params prm;
            prm.class_number = class_number_imag_quadratic(L);
            const std::uint32_t h = prm.class_number;
            const QuadraticPair ab = solve_index2_ab(L, p, h);
            prm.a_qf = ab.a;
            prm.b_qf = ab.b;
            prm.k = 2 * sm / (L - 1);
            const std::int64_t pexp_num = static_cast<std::int64_t>(prm.k) * (static_cast<std::int64_t>(L) - 1 - 2 * h);
            if (pexp_num % 4) throw Error(Errc::NoDiophantineSolution, "k(L-1-2h)/4 is not an integer");
            const std::int64_t pexp = pexp_num / 4;
            Rational P = pexp >= 0 ? Rational(big_pow(p, pexp)) : Rational(BigInt(1), big_pow(p, -pexp));
            if ((prm.k - 1) % 2) P = -P;
            // (a + b sqrt(-L))^k = X + Y sqrt(-L)
            BigInt X = 1, Y = 0;
            for (std::uint32_t i = 0; i < prm.k; ++i) {
                BigInt nx = X * ab.a - BigInt(L) * Y * ab.b;
                BigInt ny = X * ab.b + Y * ab.a;
                X = std::move(nx);
                Y = std::move(ny);
            }
            const BigInt two_k = big_pow(2, prm.k);
            prm.P = P;
            prm.A = Rational(X, two_k);
            prm.B = Rational(Y, two_k);
            const Rational PA = P * prm.A, PBL = P * prm.B * L;
            out.values[0] = (PA * (L - 1) - 1) / L;
            for (std::uint32_t u = 1; u < L; ++u)
                out.values[u] = is_qr(u, L) ? -(PA + PBL + 1) / L : -(PA - PBL + 1) / L;
            out.params = prm;
            break;
        }
    }
    return out;
}

bool align_labels(ClosedFormPeriods& closed, const GaussianPeriodSet& exact) {
    if (!exact.rational_values || exact.L != closed.L) return false;
    auto matches = [&](const std::vector<Rational>& vals) {
        for (std::size_t i = 0; i < vals.size(); ++i)
            if (vals[i] != Rational((*exact.rational_values)[i])) return false;
        return true;
    };
    if (matches(closed.values)) return true;

    std::vector<Rational> swapped = closed.values;
    if (closed.variant == ClosedFormVariant::L3) {
        std::swap(swapped[1], swapped[2]);
    } else if (closed.variant == ClosedFormVariant::Index2) {
        // Residues take the non-residue value and vice versa.
        Rational qr_val, nqr_val;
        for (std::uint32_t u = 1; u < closed.L; ++u) (is_qr(u, closed.L) ? qr_val : nqr_val) = closed.values[u];
        for (std::uint32_t u = 1; u < closed.L; ++u) swapped[u] = is_qr(u, closed.L) ? nqr_val : qr_val;
    } else {
        return false;
    }
    if (!matches(swapped)) return false;
    closed.values = std::move(swapped);
    closed.labels_swapped = true;
    if (auto* l3 = std::get_if<L3Params>(&closed.params)) l3->d1 = -l3->d1;
    if (auto* ix = std::get_if<Index2Params>(&closed.params)) {
        ix->b_qf = -ix->b_qf;
        ix->B = -ix->B;
    }
    return true;
}

}  // namespace cyclotome
