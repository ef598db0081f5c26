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
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cyclotome/bigint.hpp"
#include "cyclotome/gf.hpp"

namespace cyclotome {

/// Cyclotomic classes C_i = gamma^i <gamma^L> of order L in GF(r)^*.
class CyclotomicClassTable {
   public:
    /// Throws NotADivisor unless L | r - 1.
    static CyclotomicClassTable build(const FieldTower& F, std::uint32_t L);

    std::uint32_t order() const noexcept { return L_; }
    std::uint64_t class_size() const noexcept { return F_.group_order() / L_; }
    /// Class of a nonzero element; throws InvalidArgument for zero.
    std::uint32_t index(Element x) const { return F_.dlog(x) % L_; }
    const FieldTower& tower() const noexcept { return F_; }

   private:
    CyclotomicClassTable(FieldTower F, std::uint32_t L) : F_(std::move(F)), L_(L) {}
    FieldTower F_;
    std::uint32_t L_;
};

/// L x L matrix of cyclotomic numbers (i, j) = |(C_i + 1) ∩ C_j|.
std::vector<std::vector<std::uint64_t>> cyclotomic_numbers(const FieldTower& F, std::uint32_t L);

/// sum_c counts[c] * zeta_p^c with zeta_p a primitive p-th root of unity.
class CyclotomicInteger {
   public:
    explicit CyclotomicInteger(std::uint32_t p) : counts_(p, 0) {}
    static CyclotomicInteger integer(std::uint32_t p, std::int64_t v);

    std::uint32_t p() const noexcept { return static_cast<std::uint32_t>(counts_.size()); }
    const std::vector<std::int64_t>& counts() const noexcept { return counts_; }

    void add_root(std::uint32_t c, std::int64_t mult = 1) { counts_[c] += mult; }
    CyclotomicInteger& operator+=(const CyclotomicInteger& other);
    CyclotomicInteger scaled(std::int64_t k) const;

    /// Rational iff c_1 = ... = c_{p-1}; the value is then c_0 - c_1.
    bool is_rational() const noexcept;
    std::optional<std::int64_t> rational_value() const noexcept;

    /// Equality as complex numbers, not as count vectors.
    friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b);

   private:
    std::vector<std::int64_t> counts_;
};

/// Gaussian periods eta_i = sum_{x in C_i} psi(x), psi the canonical additive character.
struct GaussianPeriodSet {
    std::uint32_t L = 1;
    std::vector<CyclotomicInteger> values;
    /// Present when every eta_i is a rational integer.
    std::optional<std::vector<std::int64_t>> rational_values;
    /// The modified period at 0, (r - 1) / L.
    std::int64_t modified_zero = 0;
};

/// Exact periods from trace-value tallies. Throws NotADivisor unless L | r - 1.
GaussianPeriodSet periods_exact(const FieldTower& F, std::uint32_t L);

/// (r-1)/L at v = 0, otherwise eta_{dlog(v) mod L}.
CyclotomicInteger modified_period(const FieldTower& F, const GaussianPeriodSet& set, Element v);

/// Distinct period values eta_j with the number tau_j of classes attaining each, ascending by value.
struct DistinctPeriodMultiset {
    struct Entry {
        Rational value;
        std::uint64_t classes = 0;
        friend bool operator==(const Entry&, const Entry&) = default;
    };
    std::vector<Entry> entries;

    std::size_t mu() const noexcept { return entries.size(); }
    std::uint64_t total() const;
    static DistinctPeriodMultiset from_values(std::span<const Rational> values);
    /// Throws HypothesisNotMet if some period is irrational.
    static DistinctPeriodMultiset from_exact(const GaussianPeriodSet& set);

    friend bool operator==(const DistinctPeriodMultiset&, const DistinctPeriodMultiset&) = default;
};

enum class ClosedFormVariant { L2, L3, Semiprimitive, Index2 };

std::string_view variant_name(ClosedFormVariant v) noexcept;

struct L2Params {
    std::uint64_t sqrt_r = 0;
    bool p_is_1_mod_4 = false;
};
/// 4 p^(sm/3) = c1^2 + 27 d1^2, gcd(c1, p) = 1.
struct L3Params {
    BigInt c1, d1;
    BigInt cube_root_r;
};
/// p^j = -1 mod L with j least, r = p^(2jv).
struct SemiprimitiveParams {
    std::uint32_t j = 0;
    std::uint32_t v = 0;
    bool case_a = false;
    BigInt sqrt_r;
};
/// a^2 + L b^2 = 4 p^h, with P, A, B for the exponent k = 2sm/(L-1).
struct Index2Params {
    std::uint32_t class_number = 0;
    BigInt a_qf, b_qf;
    std::uint32_t k = 0;
    Rational P, A, B;
};
using ClosedFormParams = std::variant<L2Params, L3Params, SemiprimitiveParams, Index2Params>;

struct ClosedFormPeriods {
    ClosedFormVariant variant = ClosedFormVariant::L2;
    std::uint32_t L = 0;
    /// Indexed by class.
    std::vector<Rational> values;
    ClosedFormParams params;
    /// Set by align_labels when the two non-principal values were exchanged.
    bool labels_swapped = false;
};

/// Empty string when the variant's hypotheses hold for (p, s*m, L); otherwise the failed condition.
std::string closed_form_failure(ClosedFormVariant variant, std::uint32_t p, std::uint32_t sm, std::uint32_t L);
/// First variant (L2, L3, semiprimitive, index 2) whose hypotheses hold.
std::optional<ClosedFormVariant> applicable_variant(std::uint32_t p, std::uint32_t sm, std::uint32_t L);

/// Period values from the classical closed forms. Throws HypothesisNotMet naming the failed
/// condition, NotADivisor, or NoDiophantineSolution.
ClosedFormPeriods periods_closed_form(ClosedFormVariant variant, const FieldTower& F, std::uint32_t L);

/// For L3 and index 2 the labelling of the two conjugate values depends on gamma. Exchanges them
/// when that makes the per-class values agree with `exact`; returns whether they now agree.
bool align_labels(ClosedFormPeriods& closed, const GaussianPeriodSet& exact);

/// Class number of Q(sqrt(-L)) by counting reduced forms of discriminant -L.
/// Throws BadL unless L is a prime = 3 mod 4 other than 3.
std::uint32_t class_number_imag_quadratic(std::uint32_t L);

struct QuadraticPair {
    BigInt a, b;
    friend bool operator==(const QuadraticPair&, const QuadraticPair&) = default;
};
/// a^2 + L b^2 = 4 p^h, a = -2 p^((L-1+2h)/4) mod L, b > 0, p ∤ b.
QuadraticPair solve_index2_ab(std::uint32_t L, std::uint32_t p, std::uint32_t h);

}  // namespace cyclotome
