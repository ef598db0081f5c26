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

#include "cyclotome/error.hpp"
#include "cyclotome/gf.hpp"

namespace cyclotome {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

std::uint32_t least_primitive_root(std::uint32_t p) {
    if (p == 2) return 1;
    const auto factors = gfp::prime_factors(p - 1);
    for (std::uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto ell : factors) {
            std::uint64_t acc = 1, b = g;
            for (std::uint64_t e = (p - 1) / ell; e; e >>= 1) {
                if (e & 1) acc = acc * b % p;
                b = b * b % p;
            }
            if (acc == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    return 1;
}

GfpPoly smallest_primitive(std::uint32_t p, std::uint32_t d) {
    if (d == 1) return {(p - least_primitive_root(p)) % p, 1};
    // Lexicographic over (c0, c1, ..., c_{d-1}) with c0 most significant; c0 = 0 is reducible.
    std::uint64_t tail = 1;
    for (std::uint32_t i = 1; i < d; ++i) tail *= p;
    GfpPoly f(d + 1, 0);
    f[d] = 1;
    for (std::uint32_t c0 = 1; c0 < p; ++c0) {
        f[0] = c0;
        for (std::uint64_t idx = 0; idx < tail; ++idx) {
            std::uint64_t v = idx;
            for (std::uint32_t i = d - 1; i >= 1; --i) {
                f[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            if (gfp::is_primitive(f, p)) return f;
        }
    }
    throw Error(Errc::GammaNotPrimitive, "no primitive polynomial found");
}

}  // namespace

FieldTower FieldTower::build(std::uint32_t p, std::uint32_t s, std::uint32_t m, std::optional<GfpPoly> modulus,
                             std::uint64_t max_order) {
    if (!gfp::is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (s < 1 || m < 1) throw Error(Errc::InvalidArgument, "s and m must be positive");
    const std::uint32_t d = s * m;
    const std::uint64_t r = checked_pow(p, d, max_order);
    if (r > max_order)
        throw Error(Errc::TowerTooLarge, "field order " + std::to_string(p) + "^" + std::to_string(d) +
                                             " exceeds table cap " + std::to_string(max_order));

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->s = s;
    t->m = m;
    t->q = checked_pow(p, s, r);
    t->r = r;
    t->order = static_cast<std::uint32_t>(r - 1);

    if (modulus) {
        GfpPoly f = *modulus;
        for (auto c : f)
            if (c >= p) throw Error(Errc::InvalidArgument, "modulus coefficient out of range [0, p)");
        f = gfp::monic(std::move(f), p);
        if (gfp::degree(f) != static_cast<int>(d))
            throw Error(Errc::InvalidArgument, "modulus degree must equal s*m = " + std::to_string(d));
        if (!gfp::is_irreducible(f, p))
            throw Error(Errc::ModulusNotIrreducible, "modulus " + gfp::pretty(f) + " is reducible over GF(" +
                                                         std::to_string(p) + ")");
        t->modulus = std::move(f);
    } else {
        t->modulus = smallest_primitive(p, d);
    }

    const std::uint32_t n = t->order;
    t->exp.resize(n);
    t->log.assign(r, n);

    // Powers of the residue class of x, carried as coefficient vectors.
    std::vector<std::uint32_t> cur(d, 0);
    cur[0] = 1;
    if (d == 1) cur[0] = (p - t->modulus[0]) % p;  // x mod (x + c) = -c
    std::vector<std::uint32_t> pw(d);
    pw[0] = 1;
    for (std::uint32_t i = 1; i < d; ++i) pw[i] = pw[i - 1] * p;
    auto encode = [&] {
        std::uint32_t v = 0;
        for (std::uint32_t i = 0; i < d; ++i) v += cur[i] * pw[i];
        return v;
    };
    std::vector<std::uint32_t> x_cur = cur;  // gamma itself for d == 1
    if (d == 1) cur[0] = 1;
    for (std::uint32_t k = 0; k < n; ++k) {
        const std::uint32_t v = encode();
        if (t->log[v] != n || v == 0)
            throw Error(Errc::GammaNotPrimitive, "x is not primitive modulo " + gfp::pretty(t->modulus));
        t->exp[k] = v;
        t->log[v] = k;
        if (d == 1) {
            cur[0] = static_cast<std::uint32_t>(std::uint64_t{cur[0]} * x_cur[0] % p);
            continue;
        }
        const std::uint32_t top = cur[d - 1];
        for (std::uint32_t i = d - 1; i >= 1; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top) {
            for (std::uint32_t i = 0; i < d; ++i)
                cur[i] = static_cast<std::uint32_t>((cur[i] + std::uint64_t{p - top} * t->modulus[i]) % p);
        }
    }
    if (encode() != 1) throw Error(Errc::GammaNotPrimitive, "x does not have order r - 1");

    t->zech.resize(n);
    for (std::uint32_t k = 0; k < n; ++k) {
        const std::uint32_t v = t->exp[k];
        const std::uint32_t c0 = v % p;
        const std::uint32_t v1 = v - c0 + (c0 + 1) % p;
        t->zech[k] = t->log[v1];
    }

    FieldTower tower(t);

    // Traces: Tr_{r/q}(gamma^l) = sum_j gamma^(l q^j); Tr_{r/p} likewise with p and s*m terms.
    t->log_trace_q.assign(r, n);
    t->trace_p.assign(r, 0);
    const std::uint64_t qn = t->q % n, pn = p % n;
    for (std::uint32_t l = 0; l < n; ++l) {
        LogIndex acc = n;
        std::uint64_t e = l;
        for (std::uint32_t j = 0; j < m; ++j) {
            acc = tower.log_add(acc, static_cast<LogIndex>(e));
            e = n == 1 ? 0 : e * qn % n;
        }
        t->log_trace_q[l] = acc;
        acc = n;
        e = l;
        for (std::uint32_t j = 0; j < d; ++j) {
            acc = tower.log_add(acc, static_cast<LogIndex>(e));
            e = n == 1 ? 0 : e * pn % n;
        }
        t->trace_p[t->exp[l]] = acc == n ? 0 : t->exp[acc];
    }
    return tower;
}

Element FieldTower::from_coeffs(const GfpPoly& coeffs) const {
    if (coeffs.size() > degree()) throw Error(Errc::InvalidArgument, "too many coefficients for this field");
    std::uint32_t v = 0, pw = 1;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        v += (coeffs[i] % p()) * pw;
        pw *= p();
    }
    return Element{v};
}

GfpPoly FieldTower::coeffs(Element x) const {
    GfpPoly out(degree(), 0);
    std::uint32_t v = x.value;
    for (auto& c : out) {
        c = v % p();
        v /= p();
    }
    return out;
}

Element FieldTower::gamma_power(std::int64_t k) const noexcept {
    const std::int64_t n = t_->order;
    std::int64_t e = k % n;
    if (e < 0) e += n;
    return Element{t_->exp[static_cast<std::size_t>(e)]};
}

std::uint32_t FieldTower::dlog(Element x) const {
    if (x.value == 0 || x.value >= t_->r) throw Error(Errc::InvalidArgument, "dlog of zero or out-of-range element");
    return t_->log[x.value];
}

Element FieldTower::add(Element x, Element y) const noexcept { return from_log(log_add(log_of(x), log_of(y))); }

Element FieldTower::neg(Element x) const noexcept {
    if (x.value == 0 || t_->p == 2) return x;
    return from_log(log_mul(log_of(x), t_->order / 2));
}

Element FieldTower::mul(Element x, Element y) const noexcept { return from_log(log_mul(log_of(x), log_of(y))); }

Element FieldTower::inv(Element x) const {
    if (x.value == 0) throw Error(Errc::InvalidArgument, "inverse of zero");
    const std::uint32_t l = log_of(x);
    return from_log(l == 0 ? 0 : t_->order - l);
}

Element FieldTower::pow(Element x, std::uint64_t e) const noexcept {
    if (e == 0) return one();
    if (x.value == 0) return zero();
    const std::uint64_t n = t_->order;
    return from_log(static_cast<LogIndex>(std::uint64_t{log_of(x)} * (e % n) % n));
}

Element FieldTower::frobenius(Element x, std::uint32_t times) const noexcept {
    if (x.value == 0) return x;
    const std::uint64_t n = t_->order;
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i < times; ++i) e = e * t_->p % n;
    if (n == 1) e = 0;
    return from_log(static_cast<LogIndex>(std::uint64_t{log_of(x)} * e % std::max<std::uint64_t>(n, 1)));
}

Element FieldTower::trace(Element x, Subfield target) const noexcept {
    if (target == Subfield::P) return Element{t_->trace_p[x.value]};
    return from_log(t_->log_trace_q[log_of(x)]);
}

bool FieldTower::in_subfield_q(Element x) const noexcept { return pow(x, t_->q) == x; }

std::string FieldTower::format_subfield(Element c) const {
    if (s() == 1) return std::to_string(c.value);
    if (c.value == 0) return "0";
    const std::uint64_t step = t_->order / (t_->q - 1);
    return "w^" + std::to_string(log_of(c) / step);
}

std::vector<std::uint64_t> cyclotomic_coset(std::int64_t a, std::uint64_t q, std::uint64_t r) {
    const std::int64_t n = static_cast<std::int64_t>(r - 1);
    std::int64_t start = a % n;
    if (start < 0) start += n;
    std::vector<std::uint64_t> out;
    std::uint64_t x = static_cast<std::uint64_t>(start);
    do {
        out.push_back(x);
        x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * q) % static_cast<std::uint64_t>(n));
    } while (x != static_cast<std::uint64_t>(start));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cyclotome
