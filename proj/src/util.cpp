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

#include "cyclotome/bigint.hpp"
#include "cyclotome/error.hpp"

namespace cyclotome {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::ModulusNotIrreducible: return "ModulusNotIrreducible";
        case Errc::GammaNotPrimitive: return "GammaNotPrimitive";
        case Errc::TowerTooLarge: return "TowerTooLarge";
        case Errc::NotADivisor: return "NotADivisor";
        case Errc::HypothesisNotMet: return "HypothesisNotMet";
        case Errc::NoDiophantineSolution: return "NoDiophantineSolution";
        case Errc::BadL: return "BadL";
        case Errc::EDoesNotDivide: return "EDoesNotDivide";
        case Errc::AssumptionViolated: return "AssumptionViolated";
        case Errc::DivisionNotExact: return "DivisionNotExact";
        case Errc::NonIntegralWeight: return "NonIntegralWeight";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::Unsupported: return "Unsupported";
        case Errc::IndependenceFails: return "IndependenceFails";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt factorial(std::uint64_t n) {
    BigInt result = 1;
    for (std::uint64_t i = 2; i <= n; ++i) result *= i;
    return result;
}

BigInt big_pow(const BigInt& base, std::uint64_t exp) {
    BigInt result = 1, b = base;
    while (exp) {
        if (exp & 1) result *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return result;
}

bool is_integer(const Rational& v) { return boost::multiprecision::denominator(v) == 1; }

std::string to_string(const Rational& v) {
    if (is_integer(v)) return boost::multiprecision::numerator(v).str();
    return boost::multiprecision::numerator(v).str() + "/" + boost::multiprecision::denominator(v).str();
}

}  // namespace cyclotome
