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


#include <cmath>
#include <random>

#include "cyclotome/error.hpp"
#include "cyclotome/weights.hpp"

namespace cyclotome {

const WeightDistribution* VerificationReport::best() const {
    if (closed) return &*closed;
    if (tsum) return &*tsum;
    if (naive) return &*naive;
    return nullptr;
}

bool VerificationReport::ok() const {
    if (!best() || !methods_agreed) return false;
    for (const auto& c : invariants)
        if (!c.ok) return false;
    if (sampling && (!sampling->all_in_support || !sampling->within_bound)) return false;
    return true;
}

namespace {

std::size_t nonzero_weights(const WeightDistribution& d) {
    std::size_t k = 0;
    for (const auto& [w, c] : d.entries) k += w > 0 && c > 0;
    return k;
}

std::optional<std::uint64_t> weight_count_bound(const CyclicCode& code, const CaseClassification& cls) {
    const auto& sp = code.spec();
    switch (cls.theorem) {
        case Theorem::EqualN1:
            return sp.e;
        case Theorem::BelowN1:
            return sp.t;
        case Theorem::E3T2N2:
            return 6;
        case Theorem::EqualGeneral: {
            const auto set = periods_exact(code.tower(), static_cast<std::uint32_t>(code.params().N));
            if (!set.rational_values) return std::nullopt;
            const auto mu = DistinctPeriodMultiset::from_exact(set).mu();
            return static_cast<std::uint64_t>(binomial(mu + sp.e, sp.e) - 1);
        }
        default:
            return std::nullopt;
    }
}

}  // namespace

std::vector<InvariantCheck> check_invariants(const CyclicCode& code, const CaseClassification& cls,
                                             const WeightDistribution& dist) {
    std::vector<InvariantCheck> out;
    const FieldTower& F = code.tower();
    const BigInt inputs = big_pow(BigInt(F.r()), code.spec().t);

    {
        const BigInt tot = dist.total();
        out.push_back({"total", tot == inputs, to_decimal(tot) + " inputs, expected " + to_decimal(inputs)});
    }
    {
        const bool injective = validate_assumptions(F, code.spec()).cond_iii.holds;
        const BigInt a0 = dist.count(0);
        if (injective)
            out.push_back({"zero word once", a0 == 1, "A_0 = " + to_decimal(a0)});
        else
            out.push_back({"zero word once", true, "skipped: the input map is not injective"});
    }
    {
        // Every coordinate is balanced over GF(q).
        const BigInt moment = dist.first_moment();
        const BigInt expect = BigInt(code.length()) * inputs * (F.q() - 1) / F.q();
        out.push_back({"first moment", moment == expect, to_decimal(moment) + ", expected " + to_decimal(expect)});
    }
    if (const auto d = claimed_min_distance(code, cls)) {
        const auto got = dist.min_distance();
        out.push_back({"minimum distance", got == *d,
                       std::to_string(got) + ", stated " + std::to_string(*d)});
    }
    try {
        if (const auto bound = weight_count_bound(code, cls)) {
            const auto k = nonzero_weights(dist);
            out.push_back({"nonzero weight count", k <= *bound,
                           std::to_string(k) + " nonzero weights, bound " + std::to_string(*bound)});
        }
    } catch (const Error& err) {
        out.push_back({"nonzero weight count", true, std::string("skipped: ") + err.what()});
    }
    return out;
}

SamplingReport sample_against(const CyclicCode& code, const GaussianPeriodSet& periods,
                              const WeightDistribution& reference, std::uint64_t samples, std::uint64_t seed,
                              double sigma_bound) {
    const FieldTower& F = code.tower();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> digit(0, F.r() - 1);
    std::map<std::uint64_t, std::uint64_t> seen;
    std::vector<Element> x(code.spec().t);
    for (std::uint64_t i = 0; i < samples; ++i) {
        for (auto& xi : x) {
            const std::uint64_t d = digit(rng);
            xi = d == 0 ? F.zero() : F.gamma_power(static_cast<std::int64_t>(d - 1));
        }
        ++seen[weight_via_T(code, periods, x)];
    }

    SamplingReport rep;
    rep.samples = samples;
    rep.seed = seed;
    rep.sigma_bound = sigma_bound;
    const BigInt inputs = reference.total();
    for (const auto& [w, obs] : seen)
        if (reference.count(w) == 0) rep.all_in_support = false;
    for (const auto& [w, c] : reference.entries) {
        SampledWeight sw;
        sw.weight = w;
        auto it = seen.find(w);
        sw.observed = it == seen.end() ? 0 : it->second;
        const double prob = Rational(c, inputs).convert_to<double>();
        sw.expected = prob * static_cast<double>(samples);
        sw.sigma = std::sqrt(static_cast<double>(samples) * prob * (1.0 - prob));
        if (std::abs(static_cast<double>(sw.observed) - sw.expected) > sigma_bound * sw.sigma + 1e-9)
            rep.within_bound = false;
        rep.per_weight.push_back(sw);
    }
    for (const auto& [w, obs] : seen)
        if (reference.count(w) == 0) rep.per_weight.push_back({w, obs, 0.0, 0.0});
    return rep;
}

VerificationReport cross_verify(const CyclicCode& code, const VerificationCaps& caps) {
    VerificationReport rep;
    rep.classification = classify(code);
    const auto N = static_cast<std::uint32_t>(code.params().N);

    if (rep.classification.theorem != Theorem::Unsupported) {
        try {
            rep.closed = wd_closed(code, rep.classification);
        } catch (const Error& err) {
            rep.skipped.push_back(std::string("closed: ") + err.what());
        }
    } else {
        rep.skipped.push_back("closed: " + rep.classification.failed);
    }

    std::optional<GaussianPeriodSet> periods;
    const std::uint64_t inputs = input_space_size(code, std::max(caps.naive, caps.tsum));
    if (inputs <= caps.tsum) {
        try {
            periods = periods_exact(code.tower(), N);
            rep.tsum = wd_tsum(code, *periods, caps.tsum, caps.threads);
        } catch (const Error& err) {
            rep.skipped.push_back(std::string("tsum: ") + err.what());
        }
    } else {
        rep.skipped.push_back("tsum: r^t exceeds the cap of " + std::to_string(caps.tsum));
    }
    if (inputs <= caps.naive) {
        try {
            rep.naive = wd_naive(code, caps.naive, caps.threads);
        } catch (const Error& err) {
            rep.skipped.push_back(std::string("naive: ") + err.what());
        }
    } else {
        rep.skipped.push_back("naive: r^t exceeds the cap of " + std::to_string(caps.naive));
    }

    const std::pair<const char*, const std::optional<WeightDistribution>*> methods[] = {
        {"closed", &rep.closed}, {"tsum", &rep.tsum}, {"naive", &rep.naive}};
    const char* ref_name = nullptr;
    const WeightDistribution* ref = nullptr;
    for (const auto& [name, dist] : methods) {
        if (!*dist) continue;
        if (!ref) {
            ref = &**dist;
            ref_name = name;
            continue;
        }
        const std::string diff = first_difference(*ref, **dist);
        if (!diff.empty() && rep.methods_agreed) {
            rep.methods_agreed = false;
            rep.first_difference = std::string(ref_name) + " vs " + name + ": " + diff;
        }
    }

    if (const WeightDistribution* best = rep.best()) rep.invariants = check_invariants(code, rep.classification, *best);

    if (rep.closed && !rep.naive && !rep.tsum && caps.samples > 0) {
        try {
            if (!periods) periods = periods_exact(code.tower(), N);
            rep.sampling = sample_against(code, *periods, *rep.closed, caps.samples, caps.seed, caps.sigma_bound);
        } catch (const Error& err) {
            rep.skipped.push_back(std::string("sampling: ") + err.what());
        }
    }
    return rep;
}

}  // namespace cyclotome
