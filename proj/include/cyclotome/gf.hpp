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

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cyclotome {

/// Polynomial over GF(p): coefficients in [0, p), ascending degree.
using GfpPoly = std::vector<std::uint32_t>;

namespace gfp {

bool is_prime(std::uint64_t n);
/// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// Positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

void trim(GfpPoly& f);
int degree(const GfpPoly& f);
GfpPoly monic(GfpPoly f, std::uint32_t p);
GfpPoly sub(const GfpPoly& a, const GfpPoly& b, std::uint32_t p);
GfpPoly rem(GfpPoly a, const GfpPoly& f, std::uint32_t p);
GfpPoly mul_mod(const GfpPoly& a, const GfpPoly& b, const GfpPoly& f, std::uint32_t p);
GfpPoly pow_mod(const GfpPoly& base, std::uint64_t exp, const GfpPoly& f, std::uint32_t p);
GfpPoly gcd(GfpPoly a, GfpPoly b, std::uint32_t p);

/// True iff `f` is irreducible over GF(p). Zero and constant polynomials are not.
bool is_irreducible(const GfpPoly& f, std::uint32_t p);
/// True iff `f` is irreducible and x has order p^deg - 1 modulo f.
bool is_primitive(const GfpPoly& f, std::uint32_t p);

/// "1,2,0,1" for x^3 + 2x + 1.
std::string format(const GfpPoly& f);
GfpPoly parse(std::string_view text);
/// Human-readable form, highest degree first.
std::string pretty(const GfpPoly& f);

}  // namespace gfp

/// An element of GF(r), encoded as sum_i c_i p^i over its coefficient vector (c_i in [0, p)).
struct Element {
    std::uint32_t value = 0;

    friend constexpr bool operator==(Element, Element) = default;
    friend constexpr auto operator<=>(Element, Element) = default;
};

/// Discrete logarithm base gamma; `FieldTower::zero_log()` stands for the zero element.
using LogIndex = std::uint32_t;

enum class Subfield { Q, P };

inline constexpr std::uint64_t kDefaultMaxOrder = std::uint64_t{1} << 21;

/// GF(p) ⊂ GF(q = p^s) ⊂ GF(r = q^m) with a primitive element gamma and its log tables.
/// Immutable after construction; copies share the tables.
class FieldTower {
   public:
    /// Without a modulus, the lexicographically smallest primitive polynomial (coefficients
    /// compared from the constant term up) of degree s*m is used. For s*m = 1 the modulus is
    /// x - g with g the least primitive root mod p.
    static FieldTower build(std::uint32_t p, std::uint32_t s, std::uint32_t m,
                            std::optional<GfpPoly> modulus = std::nullopt,
                            std::uint64_t max_order = kDefaultMaxOrder);

    std::uint32_t p() const noexcept { return t_->p; }
    std::uint32_t s() const noexcept { return t_->s; }
    std::uint32_t m() const noexcept { return t_->m; }
    std::uint32_t degree() const noexcept { return t_->s * t_->m; }
    std::uint64_t q() const noexcept { return t_->q; }
    std::uint64_t r() const noexcept { return t_->r; }
    /// r - 1, the order of the multiplicative group.
    std::uint32_t group_order() const noexcept { return t_->order; }
    const GfpPoly& modulus() const noexcept { return t_->modulus; }

    Element zero() const noexcept { return Element{0}; }
    Element one() const noexcept { return Element{1}; }
    Element gamma() const noexcept { return gamma_power(1); }
    /// The constant polynomial c (c reduced mod p).
    Element constant(std::uint64_t c) const noexcept { return Element{static_cast<std::uint32_t>(c % t_->p)}; }
    Element from_coeffs(const GfpPoly& coeffs) const;
    GfpPoly coeffs(Element x) const;

    Element gamma_power(std::int64_t k) const noexcept;
    /// Throws InvalidArgument for zero.
    std::uint32_t dlog(Element x) const;

    Element add(Element x, Element y) const noexcept;
    Element sub(Element x, Element y) const noexcept { return add(x, neg(y)); }
    Element neg(Element x) const noexcept;
    Element mul(Element x, Element y) const noexcept;
    Element inv(Element x) const;
    Element div(Element x, Element y) const { return mul(x, inv(y)); }
    Element pow(Element x, std::uint64_t e) const noexcept;
    /// x^(p^times)
    Element frobenius(Element x, std::uint32_t times = 1) const noexcept;

    Element trace(Element x, Subfield target) const noexcept;
    /// Tr_{r/p}(x) as an integer in [0, p).
    std::uint32_t trace_p(Element x) const noexcept { return t_->trace_p[x.value]; }
    bool in_subfield_q(Element x) const noexcept;

    /// Printed form of a GF(q) element: the integer c for s = 1; for s > 1, "0" or "w^k"
    /// with w = gamma^((r-1)/(q-1)).
    std::string format_subfield(Element c) const;

    // Log-domain arithmetic used by the enumeration kernels.
    LogIndex zero_log() const noexcept { return t_->order; }
    LogIndex log_of(Element x) const noexcept { return t_->log[x.value]; }
    Element from_log(LogIndex l) const noexcept {
        return l == t_->order ? Element{0} : Element{t_->exp[l]};
    }
    LogIndex log_mul(LogIndex a, LogIndex b) const noexcept {
        if (a == t_->order || b == t_->order) return t_->order;
        std::uint32_t s = a + b;
        return s >= t_->order ? s - t_->order : s;
    }
    LogIndex log_add(LogIndex a, LogIndex b) const noexcept {
        const std::uint32_t n = t_->order;
        if (a == n) return b;
        if (b == n) return a;
        std::uint32_t d = b >= a ? b - a : b + n - a;
        std::uint32_t z = t_->zech[d];
        if (z == n) return n;
        std::uint32_t s = a + z;
        return s >= n ? s - n : s;
    }
    /// Tr_{r/q} in the log domain.
    LogIndex log_trace_q(LogIndex l) const noexcept { return t_->log_trace_q[l]; }

   private:
    struct Tables {
        std::uint32_t p = 0, s = 0, m = 0;
        std::uint64_t q = 0, r = 0;
        std::uint32_t order = 0;
        GfpPoly modulus;
        std::vector<std::uint32_t> exp;          // exp[k] = gamma^k, k < r - 1
        std::vector<std::uint32_t> log;          // log[value], zero -> order
        std::vector<std::uint32_t> zech;         // zech[k] = log(1 + gamma^k)
        std::vector<std::uint32_t> trace_p;      // by value
        std::vector<std::uint32_t> log_trace_q;  // by log index, size r
    };
    explicit FieldTower(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
    std::shared_ptr<const Tables> t_;
};

/// {a q^j mod (r-1)}, ascending.
std::vector<std::uint64_t> cyclotomic_coset(std::int64_t a, std::uint64_t q, std::uint64_t r);

}  // namespace cyclotome
