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


#include "cyclotome/corpus.hpp"
#include "cyclotome/error.hpp"

namespace cyclotome {

namespace {

CodeSpec make_spec(std::uint32_t p, std::uint32_t s, std::uint32_t m, std::uint32_t e, std::uint32_t t,
                   std::int64_t a, std::vector<std::int64_t> deltas, GfpPoly modulus) {
    CodeSpec sp;
    sp.p = p;
    sp.s = s;
    sp.m = m;
    sp.e = e;
    sp.t = t;
    sp.a = a;
    sp.deltas = std::move(deltas);
    sp.modulus = std::move(modulus);
    return sp;
}

std::vector<GoldenExample> build_examples() {
    std::vector<GoldenExample> v;
    {
        GoldenExample g;
        g.name = "ternary N=1";
        g.spec = make_spec(3, 1, 3, 2, 2, 1, {0, 1}, {1, 2, 0, 1});
        g.a_i = {1, 14};
        g.delta = 1;
        g.n = 26;
        g.N = 1;
        g.h_i = {"x^3 + 2x^2 + 1", "x^3 + x^2 + 2"};
        g.h = "x^6 + 2x^4 + 2x^2 + 2";
        g.k = 6;
        g.d = 9;
        g.enumerator = {{0, "1"}, {9, "52"}, {18, "676"}};
        g.classification = "Thm1";
        v.push_back(std::move(g));
    }
    {
        GoldenExample g;
        g.name = "GF(7) order-2 periods";
        g.spec = make_spec(7, 1, 2, 2, 2, 1, {0, 1}, {3, 6, 1});
        g.a_i = {1, 25};
        g.delta = 1;
        g.n = 48;
        g.N = 2;
        g.h_i = {"x^2 + 2x + 5", "x^2 + 5x + 5"};
        g.h = "x^4 + 6x^2 + 4";
        g.k = 4;
        g.d = 18;
        g.enumerator = {{0, "1"}, {18, "48"}, {24, "48"}, {36, "576"}, {42, "1152"}, {48, "576"}};
        g.classification = "Thm2/Cor1-L2";
        v.push_back(std::move(g));
    }
    {
        GoldenExample g;
        g.name = "GF(5) semiprimitive";
        g.spec = make_spec(5, 1, 2, 3, 3, 1, {0, 1, 2}, {2, 4, 1});
        g.a_i = {1, 9, 17};
        g.delta = 1;
        g.n = 24;
        g.N = 3;
        g.h_i = {"x^2 + 2x + 3", "x^2 + 3", "x^2 + 3x + 3"};
        g.h = "x^6 + 2";
        g.k = 6;
        g.d = 4;
        g.enumerator = {{0, "1"},      {4, "24"},     {8, "240"},    {12, "1280"},
                        {16, "3840"},  {20, "6144"},  {24, "4096"}};
        g.classification = "Thm2/Cor2-semiprimitive";
        v.push_back(std::move(g));
    }
    {
        GoldenExample g;
        g.name = "GF(7) order-3 periods";
        g.spec = make_spec(7, 1, 3, 3, 3, 1, {0, 1, 2}, {4, 0, 6, 1});
        g.a_i = {1, 115, 229};
        g.delta = 1;
        g.n = 342;
        g.N = 3;
        g.h_i = {"x^3 + 5x + 2", "x^3 + 3x + 2", "x^3 + 6x + 2"};
        g.h = "x^9 + 6x^6 + 4x^3 + 1";
        g.k = 9;
        g.d = 90;
        g.enumerator = {{0, "1"},         {90, "342"},       {96, "342"},       {108, "342"},
                        {180, "38988"},   {186, "77976"},    {192, "38988"},    {198, "77976"},
                        {204, "77976"},   {216, "38988"},    {270, "1481544"},  {276, "4444632"},
                        {282, "4444632"}, {288, "5926176"},  {294, "8889264"},  {300, "4444632"},
                        {306, "4444632"}, {312, "4444632"},  {324, "1481544"}};
        g.classification = "Thm2/Cor3-L3";
        v.push_back(std::move(g));
    }
    {
        GoldenExample g;
        g.name = "binary index 2";
        g.spec = make_spec(2, 1, 6, 7, 7, 1, {0, 1, 2, 3, 4, 5, 6}, {1, 1, 0, 1, 1, 0, 1});
        g.a_i = {1, 10, 19, 28, 37, 46, 55};
        g.delta = 1;
        g.n = 63;
        g.N = 7;
        g.h_i = {"x^6 + x^5 + x^3 + x^2 + 1", "x^6 + x^5 + 1",         "x^6 + x^5 + x^2 + x + 1",
                 "x^6 + x^3 + 1",             "x^6 + x^5 + x^4 + x + 1", "x^6 + x + 1",
                 "x^6 + x^4 + x^3 + x + 1"};
        g.h = "x^42 + x^21 + 1";
        g.k = 42;
        g.d = 2;
        g.enumerator = {{0, "1"},
                        {2, "63"},
                        {4, "1890"},
                        {6, "35910"},
                        {8, "484785"},
                        {10, "4944807"},
                        {12, "39558456"},
                        {14, "254304360"},
                        {16, "1335097890"},
                        {18, "5785424190"},
                        {20, "20827527084"},
                        {22, "62482581252"},
                        {24, "156206453130"},
                        {26, "324428787270"},
                        {28, "556163635320"},
                        {30, "778629089448"},
                        {32, "875957725629"},
                        {34, "772903875555"},
                        {36, "515269250370"},
                        {38, "244074908070"},
                        {40, "73222472421"},
                        {42, "10460353203"}};
        g.classification = "Thm2/Cor4-index2";
        v.push_back(std::move(g));
    }
    {
        GoldenExample g;
        g.name = "GF(7) e=3 t=2";
        g.spec = make_spec(7, 1, 2, 3, 2, 2, {0, 1}, {3, 6, 1});
        g.a_i = {2, 18};
        g.delta = 2;
        g.n = 24;
        g.N = 2;
        g.h_i = {"x^2 + 6x + 4", "x^2 + 3x + 1"};
        g.h = "x^4 + 2x^3 + 2x^2 + 4x + 4";
        g.k = 4;
        g.d = 12;
        g.enumerator = {{0, "1"}, {12, "72"}, {16, "72"}, {18, "264"}, {20, "864"}, {22, "864"}, {24, "264"}};
        g.classification = "Thm4";
        v.push_back(std::move(g));
    }
    return v;
}

template <class T>
std::string join(const std::vector<T>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        if constexpr (std::is_same_v<T, std::string>)
            s += xs[i];
        else
            s += std::to_string(xs[i]);
    }
    return s;
}

}  // namespace

const std::vector<GoldenExample>& golden_examples() {
    static const std::vector<GoldenExample> examples = build_examples();
    return examples;
}

WeightDistribution expected_distribution(const GoldenExample& ex) {
    WeightDistribution d;
    d.n = ex.n;
    d.k = ex.k;
    for (const auto& [w, c] : ex.enumerator) d.entries[w] = BigInt(c);
    return d;
}

CorpusResult run_example(const GoldenExample& ex, const VerificationCaps& caps) {
    CorpusResult res;
    res.name = ex.name;
    auto check = [&](const std::string& field, const std::string& expected, const std::string& actual) {
        if (expected != actual) res.diffs.push_back({field, expected, actual});
    };

    try {
        const CyclicCode code = CyclicCode::build(ex.spec);
        const FieldTower& F = code.tower();
        const auto& prm = code.params();
        check("a_i", join(ex.a_i), join(prm.a_i));
        check("delta", std::to_string(ex.delta), std::to_string(prm.delta));
        check("n", std::to_string(ex.n), std::to_string(prm.n));
        check("N", std::to_string(ex.N), std::to_string(prm.N));
        check("k", std::to_string(ex.k), std::to_string(code.dimension()));

        const CodePolynomials polys = build_polynomials(code);
        std::vector<std::string> hs;
        for (const auto& hi : polys.h_i) hs.push_back(pretty(F, hi));
        check("h_i", join(ex.h_i), join(hs));
        check("h", ex.h, pretty(F, polys.h));

        res.verification = cross_verify(code, caps);
        const auto& ver = res.verification;
        check("classification", ex.classification, ver.classification.tag());

        const WeightDistribution expected = expected_distribution(ex);
        const std::pair<const char*, const std::optional<WeightDistribution>*> methods[] = {
            {"closed", &ver.closed}, {"tsum", &ver.tsum}, {"naive", &ver.naive}};
        for (const auto& [name, dist] : methods) {
            if (!*dist) continue;
            res.methods.push_back(name);
            const std::string diff = first_difference(expected, **dist);
            if (!diff.empty()) res.diffs.push_back({std::string("weights/") + name, expected.enumerator(), diff});
        }
        if (res.methods.empty()) res.diffs.push_back({"weights", expected.enumerator(), "no method ran"});
        if (const auto* best = ver.best()) check("d", std::to_string(ex.d), std::to_string(best->min_distance()));
        if (!ver.methods_agreed) res.diffs.push_back({"methods agree", "yes", ver.first_difference});
        for (const auto& inv : ver.invariants)
            if (!inv.ok) res.diffs.push_back({"invariant " + inv.name, "holds", inv.detail});
        if (ver.sampling) {
            res.methods.push_back("sampling");
            if (!ver.sampling->all_in_support) res.diffs.push_back({"sampling", "inside support", "outside"});
            if (!ver.sampling->within_bound)
                res.diffs.push_back({"sampling", "counts within bound", "outside the sigma bound"});
        }
    } catch (const Error& err) {
        res.diffs.push_back({"run", "no error", std::string(errc_name(err.code())) + ": " + err.what()});
    }
    res.pass = res.diffs.empty();
    return res;
}

std::vector<CorpusResult> run_corpus(const VerificationCaps& caps) {
    std::vector<CorpusResult> out;
    for (const auto& ex : golden_examples()) out.push_back(run_example(ex, caps));
    return out;
}

}  // namespace cyclotome
