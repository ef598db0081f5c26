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
#include <vector>

#include "cyclotome/bigint.hpp"
#include "cyclotome/cyclotomy.hpp"
#include "cyclotome/gf.hpp"
#include "cyclotome/poly.hpp"

namespace cyclotome {

/// Parameters of the trace code {(Tr_{r/q}(sum_j x_j gamma^(a_j i)))_{i<n}}.
struct CodeSpec {
    std::uint32_t p = 2, s = 1, m = 1;
    std::uint32_t e = 2, t = 2;
    std::int64_t a = 1;
    std::vector<std::int64_t> deltas;
    std::optional<GfpPoly> modulus;

    friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

std::string describe(const CodeSpec& spec);

struct DerivedParams {
    /// a_i = a + (r-1)/e * Delta_i mod r-1
    std::vector<std::uint64_t> a_i;
    std::uint64_t delta = 0;  // gcd(r-1, a_1, ..., a_t)
    std::uint64_t n = 0;      // (r-1)/delta
    std::uint64_t N = 0;      // gcd((r-1)/(q-1), a e)
    Element g;                // gamma^a
    std::vector<Element> betas;  // gamma^((r-1) Delta_tau / e)
};

/// Throws EDoesNotDivide unless e | r - 1; InvalidArgument if |deltas| != t.
DerivedParams derive_params(const FieldTower& F, const CodeSpec& spec);

struct ConditionVerdict {
    bool holds = false;
    std::string detail;
};

enum class ConditionIIIMethod { SmallN, ProperDivisors, Direct };
std::string_view method_name(ConditionIIIMethod m) noexcept;

struct AssumptionReport {
    ConditionVerdict cond_i, cond_ii, cond_iii;
    /// Which check settled condition iii: a sufficient criterion when it applied, otherwise the
    /// direct coset computation. The direct computation always runs.
    ConditionIIIMethod method = ConditionIIIMethod::Direct;
    bool direct_verdict = false;
    /// False only if a sufficient criterion held while the direct check failed.
    bool consistent = true;

    bool all_hold() const noexcept { return cond_i.holds && cond_ii.holds && cond_iii.holds; }
};

AssumptionReport validate_assumptions(const FieldTower& F, const CodeSpec& spec);

/// Every t x t minor of B (rows (beta_1^h, ..., beta_t^h), h < e) is nonsingular.
bool check_B_independence(const FieldTower& F, const CodeSpec& spec);

/// The tower, spec, and derived parameters of one code. Cheap to copy.
class CyclicCode {
   public:
    /// Builds the tower from (p, s, m, modulus) and derives parameters.
    static CyclicCode build(const CodeSpec& spec, std::uint64_t max_order = kDefaultMaxOrder);
    static CyclicCode build(const CodeSpec& spec, FieldTower tower);

    const FieldTower& tower() const noexcept { return F_; }
    const CodeSpec& spec() const noexcept { return spec_; }
    const DerivedParams& params() const noexcept { return params_; }
    std::uint64_t length() const noexcept { return params_.n; }
    std::uint64_t dimension() const noexcept { return std::uint64_t{spec_.t} * spec_.m; }

   private:
    CyclicCode(CodeSpec spec, FieldTower F, DerivedParams params)
        : spec_(std::move(spec)), F_(std::move(F)), params_(std::move(params)) {}
    CodeSpec spec_;
    FieldTower F_;
    DerivedParams params_;
};

struct CodePolynomials {
    std::vector<Polynomial> h_i;
    Polynomial h;  // parity-check polynomial
    Polynomial g;  // generator polynomial, (x^n - 1)/h
};

/// Throws AssumptionViolated if the assumptions fail, DivisionNotExact if h does not divide x^n - 1.
CodePolynomials build_polynomials(const CyclicCode& code);

/// i-th symbol is Tr_{r/q}(sum_j x_j gamma^(a_j i)), i < n. Throws InvalidArgument if |x| != t.
std::vector<Element> codeword(const CyclicCode& code, std::span<const Element> x);

std::uint64_t hamming_weight(std::span<const Element> word);

/// Weight from the character-sum total T: ((r-1)e - N T)(q-1) / (e q delta).
/// Throws NonIntegralWeight unless that is an integer in [0, n].
std::uint64_t weight_from_T(const CyclicCode& code, const Rational& T);

/// T(x) = sum_{h<e} modified_period(g^h sum_tau x_tau beta_tau^h), then weight_from_T.
/// `periods` must have order N.
std::uint64_t weight_via_T(const CyclicCode& code, const GaussianPeriodSet& periods, std::span<const Element> x);

}  // namespace cyclotome
