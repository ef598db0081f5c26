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
#include <sstream>

#include "cyclotome/error.hpp"
#include "cyclotome/poly.hpp"

namespace cyclotome {

Polynomial::Polynomial(std::vector<Element> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().value == 0) c_.pop_back();
}

Polynomial Polynomial::monomial(Element c, std::size_t deg) {
    std::vector<Element> v(deg + 1);
    v[deg] = c;
    return Polynomial(std::move(v));
}

Polynomial add(const FieldTower& F, const Polynomial& a, const Polynomial& b) {
    std::vector<Element> out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(a[i], b[i]);
    return Polynomial(std::move(out));
}

Polynomial sub(const FieldTower& F, const Polynomial& a, const Polynomial& b) {
    std::vector<Element> out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(a[i], b[i]);
    return Polynomial(std::move(out));
}

Polynomial mul(const FieldTower& F, const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Element> out(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const FieldTower& F, const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(Errc::InvalidArgument, "polynomial division by zero");
    std::vector<Element> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial{}, a};
    std::vector<Element> quot(static_cast<std::size_t>(a.degree() - db + 1));
    const Element lead_inv = F.inv(b[db]);
    for (int i = a.degree(); i >= db; --i) {
        const Element c = F.mul(r[i], lead_inv);
        if (c.value == 0) continue;
        quot[i - db] = c;
        for (int j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b[j]));
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(r))};
}

Element evaluate(const FieldTower& F, const Polynomial& f, Element x) {
    Element acc{};
    for (int i = f.degree(); i >= 0; --i) acc = F.add(F.mul(acc, x), f[i]);
    return acc;
}

bool is_over_subfield(const FieldTower& F, const Polynomial& f) {
    return std::all_of(f.coeffs().begin(), f.coeffs().end(), [&](Element c) { return F.in_subfield_q(c); });
}

Polynomial x_pow_minus_one(const FieldTower& F, std::size_t n) {
    std::vector<Element> v(n + 1);
    v[0] = F.neg(F.one());
    v[n] = F.add(v[n], F.one());
    return Polynomial(std::move(v));
}

Polynomial min_poly(const FieldTower& F, Element beta) {
    if (beta.value == 0) throw Error(Errc::InvalidArgument, "minimal polynomial of zero requested");
    std::vector<Element> conj;
    Element c = beta;
    do {
        conj.push_back(c);
        c = F.frobenius(c, F.s());
    } while (c != beta);
    Polynomial f({F.one()});
    for (Element z : conj) f = mul(F, f, Polynomial({F.neg(z), F.one()}));
    if (!is_over_subfield(F, f)) throw Error(Errc::DivisionNotExact, "minimal polynomial left GF(q)");
    return f;
}

std::string format(const FieldTower& F, const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) out += ',';
        out += F.format_subfield(f[i]);
    }
    return out;
}

std::string pretty(const FieldTower& F, const Polynomial& f) {
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        if (f[i].value == 0) continue;
        if (!first) os << " + ";
        first = false;
        const std::string c = F.format_subfield(f[i]);
        if (c != "1" || i == 0) os << (F.s() > 1 && i > 0 ? "(" + c + ")" : c);
        if (i >= 1) os << 'x';
        if (i > 1) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace cyclotome
