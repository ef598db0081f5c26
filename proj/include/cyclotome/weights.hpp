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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclotome/bigint.hpp"
#include "cyclotome/codes.hpp"
#include "cyclotome/cyclotomy.hpp"

namespace cyclotome {

/// Weight -> number of inputs x in GF(r)^t whose codeword has that weight.
struct WeightDistribution {
    std::map<std::uint64_t, BigInt> entries;
    std::uint64_t n = 0;
    std::uint64_t k = 0;

    /// Least nonzero weight, or 0 if there is none.
    std::uint64_t min_distance() const;
    BigInt total() const;
    BigInt first_moment() const;
    BigInt count(std::uint64_t w) const;
    /// "1 + 52z^9 + 676z^18"
    std::string enumerator() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// How many of the e arguments g^h sum_tau x_tau beta_tau^h are zero or lie in each class of order N.
struct TProfile {
    std::uint32_t zeros = 0;
    std::vector<std::uint32_t> class_counts;

    friend bool operator==(const TProfile&, const TProfile&) = default;
};

TProfile t_profile(const CyclicCode& code, std::span<const Element> x);

enum class Theorem { EqualN1, EqualGeneral, BelowN1, E3T2N2, Unsupported };

struct CaseClassification {
    Theorem theorem = Theorem::Unsupported;
    /// For EqualGeneral: closed-form period source, or nullopt for exact periods.
    std::optional<ClosedFormVariant> period_source;
    /// Hypotheses checked, in order.
    std::vector<std::string> trace;
    /// The first failed hypothesis when Unsupported.
    std::string failed;

    /// "Thm1", "Thm2/Cor4-index2", "Thm3", ...
    std::string tag() const;
};

CaseClassification classify(const CyclicCode& code);

inline constexpr std::uint64_t kDefaultNaiveCap = 10'000'000;
inline constexpr std::uint64_t kDefaultTsumCap = 100'000'000;

/// r^t, or cap + 1 if it exceeds cap.
std::uint64_t input_space_size(const CyclicCode& code, std::uint64_t cap);

/// Direct enumeration of every codeword. Throws CapExceeded when r^t > cap.
/// `threads` = 0 picks the hardware concurrency.
WeightDistribution wd_naive(const CyclicCode& code, std::uint64_t cap = kDefaultNaiveCap, unsigned threads = 0);

/// Tallies T-profiles over every input, then evaluates each distinct profile exactly once.
WeightDistribution wd_tsum(const CyclicCode& code, const GaussianPeriodSet& periods,
                           std::uint64_t cap = kDefaultTsumCap, unsigned threads = 0);
/// As above with exact periods of order N.
WeightDistribution wd_tsum(const CyclicCode& code, std::uint64_t cap = kDefaultTsumCap, unsigned threads = 0);

/// Closed-form tables, equal weights merged. Throws Unsupported or IndependenceFails.
WeightDistribution wd_closed(const CyclicCode& code, const CaseClassification& cls);

// Individual tables; each aggregates coinciding weights.
WeightDistribution theorem1_table(const CyclicCode& code);
WeightDistribution theorem2_table(const CyclicCode& code, const DistinctPeriodMultiset& periods);
WeightDistribution theorem3_table(const CyclicCode& code);
/// eta0, eta1: the two order-2 periods.
WeightDistribution theorem4_table(const CyclicCode& code, const Rational& eta0, const Rational& eta1);

/// binom(e, t-u) * sum_{k<u} (-1)^k binom(e-t+u, k) (r^(u-k) - 1)
BigInt theorem3_frequency(std::uint64_t e, std::uint64_t t, std::uint64_t u, std::uint64_t r);
/// binom(e, u) (r-1)^u
BigInt theorem1_frequency(std::uint64_t e, std::uint64_t u, std::uint64_t r);

/// Minimum distance stated by the applicable theorem, if it states one.
std::optional<std::uint64_t> claimed_min_distance(const CyclicCode& code, const CaseClassification& cls);

/// Number of nonzero x vanishing exactly on the linear forms sum_tau x_tau beta_tau^h, h in E.
/// Throws CapExceeded when r^t > cap.
BigInt count_vanishing_patterns(const CyclicCode& code, std::span<const std::uint32_t> E,
                                std::uint64_t cap = kDefaultNaiveCap);

struct VerificationCaps {
    std::uint64_t naive = kDefaultNaiveCap;
    std::uint64_t tsum = kDefaultTsumCap;
    /// Random codewords drawn when neither enumeration fits.
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    /// Observed counts may differ from the expected ones by this many standard deviations.
    double sigma_bound = 3.0;
    unsigned threads = 0;
};

struct InvariantCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct SampledWeight {
    std::uint64_t weight = 0;
    std::uint64_t observed = 0;
    double expected = 0;
    double sigma = 0;
};

struct SamplingReport {
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    bool all_in_support = true;
    double sigma_bound = 0;
    bool within_bound = true;
    std::vector<SampledWeight> per_weight;
};

struct VerificationReport {
    CaseClassification classification;
    std::optional<WeightDistribution> naive, tsum, closed;
    std::vector<std::string> skipped;
    bool methods_agreed = true;
    std::string first_difference;
    std::vector<InvariantCheck> invariants;
    std::optional<SamplingReport> sampling;

    /// The distribution reported to callers: closed, else tsum, else naive.
    const WeightDistribution* best() const;
    bool ok() const;
};

/// Identities every distribution must satisfy: total r^t, A_0 = 1, first moment, stated
/// minimum distance, and the weight-count bound for t = e.
std::vector<InvariantCheck> check_invariants(const CyclicCode& code, const CaseClassification& cls,
                                             const WeightDistribution& dist);

/// Draws uniform inputs from a seeded generator and weighs them with weight_via_T.
SamplingReport sample_against(const CyclicCode& code, const GaussianPeriodSet& periods,
                              const WeightDistribution& reference, std::uint64_t samples, std::uint64_t seed,
                              double sigma_bound = 3.0);

/// Runs every method that fits under the caps and compares them entry by entry.
VerificationReport cross_verify(const CyclicCode& code, const VerificationCaps& caps = {});

/// First entry where two distributions differ, or "" when equal.
std::string first_difference(const WeightDistribution& a, const WeightDistribution& b);

}  // namespace cyclotome
