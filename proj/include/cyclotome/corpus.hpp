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
#include <string>
#include <utility>
#include <vector>

#include "cyclotome/codes.hpp"
#include "cyclotome/weights.hpp"

namespace cyclotome {

/// A worked example with every published quantity, used as a regression fixture.
struct GoldenExample {
    std::string name;
    CodeSpec spec;
    std::vector<std::uint64_t> a_i;
    std::uint64_t delta = 0, n = 0, N = 0;
    /// Polynomials in the pretty form "x^3 + 2x^2 + 1".
    std::vector<std::string> h_i;
    std::string h;
    std::uint64_t k = 0, d = 0;
    /// (weight, count) with counts as decimal strings.
    std::vector<std::pair<std::uint64_t, std::string>> enumerator;
    std::string classification;
};

const std::vector<GoldenExample>& golden_examples();

struct FieldDiff {
    std::string field, expected, actual;
};

struct CorpusResult {
    std::string name;
    bool pass = false;
    /// Methods whose distributions were computed and compared.
    std::vector<std::string> methods;
    std::vector<FieldDiff> diffs;
    VerificationReport verification;
};

CorpusResult run_example(const GoldenExample& ex, const VerificationCaps& caps = {});
/// Caps of 0 leave only the closed forms (plus sampling).
std::vector<CorpusResult> run_corpus(const VerificationCaps& caps = {});

WeightDistribution expected_distribution(const GoldenExample& ex);

}  // namespace cyclotome
