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
#include <map>

#include "cyclotome/cyclotomy.hpp"
#include "cyclotome/error.hpp"

namespace cyclotome {

namespace {

void require_divisor(const FieldTower& F, std::uint32_t L) {
    if (L == 0 || F.group_order() % L != 0)
        throw Error(Errc::NotADivisor,
                    "L = " + std::to_string(L) + " does not divide r - 1 = " + std::to_string(F.group_order()));
}

constexpr std::uint64_t kMaxTallyCells = std::uint64_t{1} << 26;

}  // namespace

CyclotomicClassTable CyclotomicClassTable::build(const FieldTower& F, std::uint32_t L) {
    require_divisor(F, L);
    return CyclotomicClassTable(F, L);
}

std::vector<std::vector<std::uint64_t>> cyclotomic_numbers(const FieldTower& F, std::uint32_t L) {
    require_divisor(F, L);
    std::vector<std::vector<std::uint64_t>> M(L, std::vector<std::uint64_t>(L, 0));
    const LogIndex one = F.log_of(F.one());
    for (std::uint32_t k = 0; k < F.group_order(); ++k) {
        const LogIndex y = F.log_add(k, one);
        if (y == F.zero_log()) continue;
        ++M[k % L][y % L];
    }
    return M;
}

CyclotomicInteger CyclotomicInteger::integer(std::uint32_t p, std::int64_t v) {
    CyclotomicInteger z(p);
    z.counts_[0] = v;
    return z;
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& other) {
    if (other.p() != p()) throw Error(Errc::InvalidArgument, "cyclotomic integers over different p");
    for (std::size_t c = 0; c < counts_.size(); ++c) counts_[c] += other.counts_[c];
    return *this;
}

CyclotomicInteger CyclotomicInteger::scaled(std::int64_t k) const {
    CyclotomicInteger z = *this;
    for (auto& c : z.counts_) c *= k;
    return z;
}

bool CyclotomicInteger::is_rational() const noexcept {
    return std::all_of(counts_.begin() + 1, counts_.end(), [&](std::int64_t c) { return c == counts_[1]; });
}

std::optional<std::int64_t> CyclotomicInteger::rational_value() const noexcept {
    if (counts_.size() == 1) return counts_[0];
    if (!is_rational()) return std::nullopt;
    return counts_[0] - counts_[1];
}

bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    CyclotomicInteger d = a;
    d += b.scaled(-1);
    auto v = d.rational_value();
    return v && *v == 0;
}

GaussianPeriodSet periods_exact(const FieldTower& F, std::uint32_t L) {
    require_divisor(F, L);
    if (std::uint64_t{L} * F.p() > kMaxTallyCells)
        throw Error(Errc::TowerTooLarge, "period tally table L*p exceeds " + std::to_string(kMaxTallyCells));
    GaussianPeriodSet set;
    set.L = L;
    set.values.assign(L, CyclotomicInteger(F.p()));
    set.modified_zero = F.group_order() / L;
    for (std::uint32_t k = 0; k < F.group_order(); ++k)
        set.values[k % L].add_root(F.trace_p(F.from_log(k)));
    std::vector<std::int64_t> rational;
    for (const auto& v : set.values) {
        auto x = v.rational_value();
        if (!x) return set;
        rational.push_back(*x);
    }
    set.rational_values = std::move(rational);
    return set;
}

CyclotomicInteger modified_period(const FieldTower& F, const GaussianPeriodSet& set, Element v) {
    if (v.value == 0) return CyclotomicInteger::integer(F.p(), set.modified_zero);
    return set.values[F.dlog(v) % set.L];
}

std::uint64_t DistinctPeriodMultiset::total() const {
    std::uint64_t t = 0;
    for (const auto& e : entries) t += e.classes;
    return t;
}

DistinctPeriodMultiset DistinctPeriodMultiset::from_values(std::span<const Rational> values) {
    std::map<Rational, std::uint64_t> tally;
    for (const auto& v : values) ++tally[v];
    DistinctPeriodMultiset out;
    for (auto& [v, c] : tally) out.entries.push_back({v, c});
    return out;
}

DistinctPeriodMultiset DistinctPeriodMultiset::from_exact(const GaussianPeriodSet& set) {
    if (!set.rational_values)
        throw Error(Errc::HypothesisNotMet,
                    "Gaussian periods of order " + std::to_string(set.L) + " are not all rational");
    std::vector<Rational> vals(set.rational_values->begin(), set.rational_values->end());
    return from_values(vals);
}

}  // namespace cyclotome
