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

#include <string>
#include <utility>
#include <vector>

#include "cyclotome/gf.hpp"

namespace cyclotome {

/// Polynomial with coefficients in GF(r), ascending degree, no trailing zeros.
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Element> coeffs);

    static Polynomial monomial(Element c, std::size_t deg);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Element>& coeffs() const noexcept { return c_; }
    Element operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Element{}; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

   private:
    std::vector<Element> c_;
};

Polynomial add(const FieldTower& F, const Polynomial& a, const Polynomial& b);
Polynomial sub(const FieldTower& F, const Polynomial& a, const Polynomial& b);
Polynomial mul(const FieldTower& F, const Polynomial& a, const Polynomial& b);
/// Quotient and remainder; throws InvalidArgument on division by zero.
std::pair<Polynomial, Polynomial> divmod(const FieldTower& F, const Polynomial& a, const Polynomial& b);
Element evaluate(const FieldTower& F, const Polynomial& f, Element x);

/// Every coefficient c satisfies c^q = c.
bool is_over_subfield(const FieldTower& F, const Polynomial& f);
/// x^n - 1.
Polynomial x_pow_minus_one(const FieldTower& F, std::size_t n);

/// Minimal polynomial of beta over GF(q): the product of (X - beta^(q^j)) over the distinct
/// conjugates. Throws InvalidArgument for beta = 0.
Polynomial min_poly(const FieldTower& F, Element beta);

/// Comma-separated GF(q) coefficients, ascending degree (see FieldTower::format_subfield).
std::string format(const FieldTower& F, const Polynomial& f);
/// "x^3 + 2x^2 + 1"
std::string pretty(const FieldTower& F, const Polynomial& f);

}  // namespace cyclotome
