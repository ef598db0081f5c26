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
#include <charconv>
#include <sstream>

#include "cyclotome/error.hpp"
#include "cyclotome/gf.hpp"

namespace cyclotome::gfp {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> lo, hi;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

void trim(GfpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const GfpPoly& f) {
    for (std::size_t i = f.size(); i-- > 0;)
        if (f[i]) return static_cast<int>(i);
    return -1;
}

namespace {

std::uint32_t mulmod(std::uint64_t a, std::uint64_t b, std::uint32_t p) { return static_cast<std::uint32_t>(a * b % p); }

std::uint32_t invmod(std::uint32_t a, std::uint32_t p) {
    // p prime: a^(p-2)
    std::uint64_t result = 1, base = a % p;
    for (std::uint64_t e = p - 2; e; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

}  // namespace

GfpPoly monic(GfpPoly f, std::uint32_t p) {
    trim(f);
    if (f.empty() || f.back() == 1) return f;
    const std::uint32_t inv = invmod(f.back(), p);
    for (auto& c : f) c = mulmod(c, inv, p);
    return f;
}

GfpPoly sub(const GfpPoly& a, const GfpPoly& b, std::uint32_t p) {
    GfpPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint32_t x = i < a.size() ? a[i] : 0;
        std::uint32_t y = i < b.size() ? b[i] : 0;
        out[i] = (x + p - y) % p;
    }
    trim(out);
    return out;
}

GfpPoly rem(GfpPoly a, const GfpPoly& f, std::uint32_t p) {
    trim(a);
    const int df = degree(f);
    if (df < 0) throw Error(Errc::InvalidArgument, "polynomial division by zero");
    const std::uint32_t lead_inv = invmod(f[df], p);
    for (int da = degree(a); da >= df; da = degree(a)) {
        const std::uint32_t factor = mulmod(a[da], lead_inv, p);
        const int shift = da - df;
        for (int i = 0; i <= df; ++i) a[shift + i] = (a[shift + i] + p - mulmod(factor, f[i], p)) % p;
        trim(a);
    }
    return a;
}

GfpPoly mul_mod(const GfpPoly& a, const GfpPoly& b, const GfpPoly& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    GfpPoly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
    return rem(std::move(prod), f, p);
}

GfpPoly pow_mod(const GfpPoly& base, std::uint64_t exp, const GfpPoly& f, std::uint32_t p) {
    GfpPoly result = rem(GfpPoly{1}, f, p);
    GfpPoly b = rem(base, f, p);
    while (exp) {
        if (exp & 1) result = mul_mod(result, b, f, p);
        exp >>= 1;
        if (exp) b = mul_mod(b, b, f, p);
    }
    return result;
}

GfpPoly gcd(GfpPoly a, GfpPoly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        GfpPoly t = rem(a, b, p);
        a = std::move(b);
        b = std::move(t);
    }
    return monic(std::move(a), p);
}

bool is_irreducible(const GfpPoly& poly, std::uint32_t p) {
    GfpPoly f = monic(poly, p);
    const int d = degree(f);
    if (d < 1) return false;
    if (d == 1) return true;
    if (f[0] == 0) return false;

    // frob[k] = x^(p^k) mod f
    const GfpPoly x{0, 1};
    std::vector<GfpPoly> frob(static_cast<std::size_t>(d) + 1);
    frob[0] = x;
    for (int k = 1; k <= d; ++k) frob[k] = pow_mod(frob[k - 1], p, f, p);
    if (frob[d] != x) return false;
    for (std::uint64_t k : divisors(static_cast<std::uint64_t>(d))) {
        if (k == static_cast<std::uint64_t>(d)) continue;
        if (degree(gcd(sub(frob[k], x, p), f, p)) > 0) return false;
    }
    return true;
}

bool is_primitive(const GfpPoly& poly, std::uint32_t p) {
    if (!is_irreducible(poly, p)) return false;
    GfpPoly f = monic(poly, p);
    const int d = degree(f);
    std::uint64_t r = 1;
    for (int i = 0; i < d; ++i) {
        if (r > (std::uint64_t{1} << 62) / p) throw Error(Errc::TowerTooLarge, "field order overflows 64 bits");
        r *= p;
    }
    const GfpPoly x{0, 1};
    const GfpPoly one = rem(GfpPoly{1}, f, p);
    if (pow_mod(x, r - 1, f, p) != one) return false;
    for (std::uint64_t ell : prime_factors(r - 1))
        if (pow_mod(x, (r - 1) / ell, f, p) == one) return false;
    return true;
}

std::string format(const GfpPoly& f) {
    GfpPoly g = f;
    trim(g);
    if (g.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(g[i]);
    }
    return out;
}

GfpPoly parse(std::string_view text) {
    GfpPoly out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            throw Error(Errc::InvalidArgument, "bad polynomial coefficient '" + std::string(tok) + "'");
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

std::string pretty(const GfpPoly& f) {
    std::ostringstream os;
    bool first = true;
    for (int i = degree(f); i >= 0; --i) {
        if (!f[i]) continue;
        if (!first) os << " + ";
        first = false;
        if (f[i] != 1 || i == 0) os << f[i];
        if (i >= 1) os << 'x';
        if (i > 1) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace cyclotome::gfp
