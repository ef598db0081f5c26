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
#include <bit>
#include <map>
#include <thread>
#include <unordered_map>

#include "cyclotome/error.hpp"
#include "cyclotome/weights.hpp"

namespace cyclotome {

std::uint64_t input_space_size(const CyclicCode& code, std::uint64_t cap) {
    const std::uint64_t r = code.tower().r();
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < code.spec().t; ++i) {
        if (total > cap / r) return cap == UINT64_MAX ? cap : cap + 1;
        total *= r;
    }
    return total;
}

namespace {

unsigned worker_count(unsigned requested, std::uint64_t first_digits) {
    unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::uint64_t>(n, first_digits));
}

/// Runs body(w) for w < workers, on threads when there is more than one.
template <class Body>
void run_workers(unsigned workers, Body&& body) {
    if (workers <= 1) {
        body(0u);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&body, w] { body(w); });
    for (auto& th : pool) th.join();
}

void require_under_cap(const CyclicCode& code, std::uint64_t cap, const char* what) {
    const std::uint64_t size = input_space_size(code, cap);
    if (size > cap)
        throw Error(Errc::CapExceeded, std::string(what) + ": r^t exceeds the cap of " + std::to_string(cap) +
                                           " inputs for " + describe(code.spec()));
}

/// Digit 0 is zero, digit d > 0 is gamma^(d-1).
inline LogIndex digit_log(const FieldTower& F, std::uint64_t d) {
    return d == 0 ? F.zero_log() : static_cast<LogIndex>(d - 1);
}

/// Enumerates all x in GF(r)^t in dlog-plus-zero order, keeping the e values
/// y_h = sum_tau x_tau beta_tau^h in the log domain. Worker w takes the first-coordinate
/// digits congruent to w mod `workers`.
class YEnumerator {
   public:
    explicit YEnumerator(const CyclicCode& code) : F_(code.tower()), t_(code.spec().t), e_(code.spec().e) {
        const auto order = F_.group_order();
        bexp_.assign(t_, std::vector<LogIndex>(e_));
        for (std::uint32_t tau = 0; tau < t_; ++tau) {
            const std::uint64_t lb = F_.dlog(code.params().betas[tau]);
            for (std::uint32_t h = 0; h < e_; ++h) bexp_[tau][h] = static_cast<LogIndex>(lb * h % order);
        }
    }

    template <class Visit>
    void run(unsigned w, unsigned workers, Visit&& visit) const {
        std::vector<std::vector<LogIndex>> prefix(t_ + 1, std::vector<LogIndex>(e_, F_.zero_log()));
        level(0, w, workers, prefix, visit);
    }

   private:
    template <class Visit>
    void level(std::uint32_t tau, unsigned w, unsigned workers, std::vector<std::vector<LogIndex>>& prefix,
               Visit& visit) const {
        const std::uint64_t r = F_.r();
        const std::uint64_t start = tau == 0 ? w : 0;
        const std::uint64_t step = tau == 0 ? workers : 1;
        const auto& acc = prefix[tau];
        auto& next = prefix[tau + 1];
        const auto& be = bexp_[tau];
        for (std::uint64_t d = start; d < r; d += step) {
            const LogIndex xl = digit_log(F_, d);
            if (xl == F_.zero_log()) {
                next = acc;
            } else {
                for (std::uint32_t h = 0; h < e_; ++h) next[h] = F_.log_add(acc[h], F_.log_mul(xl, be[h]));
            }
            if (tau + 1 == t_)
                visit(next.data());
            else
                level(tau + 1, w, workers, prefix, visit);
        }
    }

    const FieldTower& F_;
    std::uint32_t t_, e_;
    std::vector<std::vector<LogIndex>> bexp_;
};

}  // namespace

WeightDistribution wd_naive(const CyclicCode& code, std::uint64_t cap, unsigned threads) {
    require_under_cap(code, cap, "naive enumeration");
    const FieldTower& F = code.tower();
    const std::uint32_t t = code.spec().t;
    const std::uint64_t n = code.length();
    const std::uint64_t r = F.r();
    const std::uint32_t order = F.group_order();

    // pos[l][i] = a_l * i mod (r - 1)
    std::vector<std::vector<LogIndex>> pos(t, std::vector<LogIndex>(n));
    for (std::uint32_t l = 0; l < t; ++l)
        for (std::uint64_t i = 0; i < n; ++i)
            pos[l][i] = static_cast<LogIndex>(code.params().a_i[l] * i % order);

    const unsigned workers = worker_count(threads, r);
    std::vector<std::vector<std::uint64_t>> hist(workers, std::vector<std::uint64_t>(n + 1, 0));

    run_workers(workers, [&](unsigned w) {
        auto& H = hist[w];
        std::vector<std::vector<LogIndex>> prefix(t + 1, std::vector<LogIndex>(n, F.zero_log()));
        // Symbol i of the partial word is sum_{l < level} Tr(x_l gamma^(a_l i)), in the log domain.
        auto rec = [&](auto&& self, std::uint32_t l) -> void {
            const std::uint64_t start = l == 0 ? w : 0;
            const std::uint64_t step = l == 0 ? workers : 1;
            const auto& acc = prefix[l];
            auto& next = prefix[l + 1];
            const auto& ps = pos[l];
            for (std::uint64_t d = start; d < r; d += step) {
                const LogIndex xl = digit_log(F, d);
                if (l + 1 == t) {
                    std::uint64_t wt = 0;
                    if (xl == F.zero_log()) {
                        for (std::uint64_t i = 0; i < n; ++i) wt += acc[i] != F.zero_log();
                    } else {
                        for (std::uint64_t i = 0; i < n; ++i) {
                            std::uint32_t s = xl + ps[i];
                            if (s >= order) s -= order;
                            wt += F.log_add(acc[i], F.log_trace_q(s)) != F.zero_log();
                        }
                    }
                    ++H[wt];
                    continue;
                }
                if (xl == F.zero_log()) {
                    next = acc;
                } else {
                    for (std::uint64_t i = 0; i < n; ++i) {
                        std::uint32_t s = xl + ps[i];
                        if (s >= order) s -= order;
                        next[i] = F.log_add(acc[i], F.log_trace_q(s));
                    }
                }
                self(self, l + 1);
            }
        };
        rec(rec, 0);
    });

    WeightDistribution out;
    out.n = n;
    out.k = code.dimension();
    for (std::uint64_t wt = 0; wt <= n; ++wt) {
        std::uint64_t c = 0;
        for (const auto& H : hist) c += H[wt];
        if (c) out.entries[wt] = c;
    }
    return out;
}

WeightDistribution wd_tsum(const CyclicCode& code, const GaussianPeriodSet& periods, std::uint64_t cap,
                           unsigned threads) {
    require_under_cap(code, cap, "T-sum enumeration");
    const FieldTower& F = code.tower();
    const auto& prm = code.params();
    const std::uint32_t e = code.spec().e;
    const std::uint32_t N = static_cast<std::uint32_t>(prm.N);
    if (periods.L != N)
        throw Error(Errc::InvalidArgument, "periods have order " + std::to_string(periods.L) + ", need N = " +
                                               std::to_string(N));

    // Slot of an argument g^h y_h: its class in [0, N), or N for zero.
    const std::uint64_t lg = F.dlog(prm.g);
    std::vector<std::uint32_t> g_class(e);
    for (std::uint32_t h = 0; h < e; ++h) g_class[h] = static_cast<std::uint32_t>(lg * h % N);
    const auto slot = [&](LogIndex y, std::uint32_t h) -> std::uint32_t {
        if (y == F.zero_log()) return N;
        std::uint32_t c = y % N + g_class[h];
        return c >= N ? c - N : c;
    };

    // Each slot's count (at most e) takes `bits` bits of the key.
    const unsigned bits = static_cast<unsigned>(std::bit_width(e));
    const std::uint64_t key_bits = std::uint64_t{N + 1} * bits;
    const bool packed = key_bits <= 64;
    const bool flat = key_bits <= 22;
    std::vector<std::uint64_t> unit(N + 1, 0);
    if (packed)
        for (std::uint32_t sl = 0; sl <= N; ++sl) unit[sl] = std::uint64_t{1} << (sl * bits);

    const YEnumerator en(code);
    const unsigned workers = worker_count(threads, F.r());
    std::vector<std::vector<std::uint64_t>> flat_tally(workers);
    std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> hash_tally(workers);
    std::vector<std::map<std::vector<std::uint32_t>, std::uint64_t>> slow_tally(workers);

    run_workers(workers, [&](unsigned w) {
        if (flat) {
            auto& tally = flat_tally[w];
            tally.assign(std::size_t{1} << key_bits, 0);
            en.run(w, workers, [&](const LogIndex* y) {
                std::uint64_t key = 0;
                for (std::uint32_t h = 0; h < e; ++h) key += unit[slot(y[h], h)];
                ++tally[key];
            });
        } else if (packed) {
            auto& tally = hash_tally[w];
            en.run(w, workers, [&](const LogIndex* y) {
                std::uint64_t key = 0;
                for (std::uint32_t h = 0; h < e; ++h) key += unit[slot(y[h], h)];
                ++tally[key];
            });
        } else {
            auto& tally = slow_tally[w];
            std::vector<std::uint32_t> counts(N + 1);
            en.run(w, workers, [&](const LogIndex* y) {
                std::fill(counts.begin(), counts.end(), 0);
                for (std::uint32_t h = 0; h < e; ++h) ++counts[slot(y[h], h)];
                ++tally[counts];
            });
        }
    });

    // Merge into profile -> count, keyed by slot counts.
    std::map<std::vector<std::uint32_t>, std::uint64_t> profiles;
    const auto unpack = [&](std::uint64_t key) {
        std::vector<std::uint32_t> counts(N + 1);
        const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
        for (std::uint32_t sl = 0; sl <= N; ++sl) counts[sl] = static_cast<std::uint32_t>((key >> (sl * bits)) & mask);
        return counts;
    };
    for (unsigned w = 0; w < workers; ++w) {
        for (std::size_t key = 0; key < flat_tally[w].size(); ++key)
            if (flat_tally[w][key]) profiles[unpack(key)] += flat_tally[w][key];
        for (const auto& [key, c] : hash_tally[w]) profiles[unpack(key)] += c;
        for (const auto& [counts, c] : slow_tally[w]) profiles[counts] += c;
    }

    WeightDistribution out;
    out.n = code.length();
    out.k = code.dimension();
    for (const auto& [counts, c] : profiles) {
        CyclotomicInteger T = CyclotomicInteger::integer(F.p(), std::int64_t{counts[N]} * periods.modified_zero);
        for (std::uint32_t i = 0; i < N; ++i)
            if (counts[i]) T += periods.values[i].scaled(counts[i]);
        const auto value = T.rational_value();
        if (!value) throw Error(Errc::NonIntegralWeight, "T is irrational for " + describe(code.spec()));
        out.entries[weight_from_T(code, Rational(*value))] += c;
    }
    return out;
}

WeightDistribution wd_tsum(const CyclicCode& code, std::uint64_t cap, unsigned threads) {
    require_under_cap(code, cap, "T-sum enumeration");
    return wd_tsum(code, periods_exact(code.tower(), static_cast<std::uint32_t>(code.params().N)), cap, threads);
}

BigInt count_vanishing_patterns(const CyclicCode& code, std::span<const std::uint32_t> E, std::uint64_t cap) {
    require_under_cap(code, cap, "vanishing-pattern count");
    const std::uint32_t e = code.spec().e;
    if (e > 63) throw Error(Errc::InvalidArgument, "vanishing patterns need e < 64");
    std::uint64_t target = 0;
    for (auto h : E) {
        if (h >= e) throw Error(Errc::InvalidArgument, "index " + std::to_string(h) + " is not below e");
        target |= std::uint64_t{1} << h;
    }
    const FieldTower& F = code.tower();
    const YEnumerator en(code);
    const unsigned workers = worker_count(0, F.r());
    std::vector<std::uint64_t> hits(workers, 0);
    run_workers(workers, [&](unsigned w) {
        std::uint64_t c = 0;
        en.run(w, workers, [&](const LogIndex* y) {
            std::uint64_t mask = 0;
            for (std::uint32_t h = 0; h < e; ++h)
                if (y[h] == F.zero_log()) mask |= std::uint64_t{1} << h;
            c += mask == target;
        });
        hits[w] = c;
    });
    BigInt total = 0;
    for (auto c : hits) total += c;
    // x = 0 vanishes everywhere and is not counted.
    if (target == (e == 64 ? ~0ULL : (std::uint64_t{1} << e) - 1)) total -= 1;
    return total;
}

}  // namespace cyclotome
