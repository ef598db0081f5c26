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


#include "cyclotome/serialize.hpp"
#include "cyclotome/error.hpp"

namespace cyclotome {

namespace {

Json rational_json(const Rational& v) { return to_string(v); }

Json cyclotomic_json(const CyclotomicInteger& z) {
    if (auto v = z.rational_value()) return *v;
    return Json{{"zeta_counts", z.counts()}};
}

}  // namespace

Json to_json(const CodeSpec& spec) {
    Json j;
    j["p"] = spec.p;
    j["s"] = spec.s;
    j["m"] = spec.m;
    j["e"] = spec.e;
    j["t"] = spec.t;
    j["a"] = spec.a;
    j["deltas"] = spec.deltas;
    j["modulus"] = spec.modulus ? Json(gfp::format(*spec.modulus)) : Json(nullptr);
    return j;
}

CodeSpec spec_from_json(const Json& j) {
    try {
        CodeSpec sp;
        sp.p = j.at("p").get<std::uint32_t>();
        sp.s = j.at("s").get<std::uint32_t>();
        sp.m = j.at("m").get<std::uint32_t>();
        sp.e = j.at("e").get<std::uint32_t>();
        sp.t = j.at("t").get<std::uint32_t>();
        sp.a = j.at("a").get<std::int64_t>();
        sp.deltas = j.at("deltas").get<std::vector<std::int64_t>>();
        if (j.contains("modulus") && !j["modulus"].is_null()) sp.modulus = gfp::parse(j["modulus"].get<std::string>());
        return sp;
    } catch (const nlohmann::json::exception& err) {
        throw Error(Errc::InvalidArgument, std::string("bad spec JSON: ") + err.what());
    }
}

Json to_json(const WeightDistribution& dist) {
    Json j;
    j["n"] = dist.n;
    j["k"] = dist.k;
    j["d"] = dist.min_distance();
    Json ws = Json::array();
    for (const auto& [w, c] : dist.entries) ws.push_back(Json{{"w", w}, {"count", to_decimal(c)}});
    j["weights"] = ws;
    return j;
}

WeightDistribution distribution_from_json(const Json& j) {
    try {
        WeightDistribution d;
        d.n = j.at("n").get<std::uint64_t>();
        d.k = j.at("k").get<std::uint64_t>();
        for (const auto& e : j.at("weights")) d.entries[e.at("w").get<std::uint64_t>()] = BigInt(e.at("count").get<std::string>());
        return d;
    } catch (const nlohmann::json::exception& err) {
        throw Error(Errc::InvalidArgument, std::string("bad weight JSON: ") + err.what());
    } catch (const std::runtime_error& err) {
        throw Error(Errc::InvalidArgument, std::string("bad weight count: ") + err.what());
    }
}

Json to_json(const CaseClassification& cls) {
    Json j;
    j["tag"] = cls.tag();
    j["trace"] = cls.trace;
    j["failed"] = cls.failed.empty() ? Json(nullptr) : Json(cls.failed);
    return j;
}

Json to_json(const AssumptionReport& rep) {
    auto verdict = [](const ConditionVerdict& v) { return Json{{"holds", v.holds}, {"detail", v.detail}}; };
    Json j;
    j["i"] = verdict(rep.cond_i);
    j["ii"] = verdict(rep.cond_ii);
    j["iii"] = verdict(rep.cond_iii);
    j["iii_method"] = std::string(method_name(rep.method));
    j["iii_direct"] = rep.direct_verdict;
    j["consistent"] = rep.consistent;
    j["all_hold"] = rep.all_hold();
    return j;
}

Json to_json(const ClosedFormPeriods& cf) {
    Json j;
    j["variant"] = std::string(variant_name(cf.variant));
    j["L"] = cf.L;
    Json vals = Json::array();
    for (const auto& v : cf.values) vals.push_back(rational_json(v));
    j["values"] = vals;
    j["labels_swapped"] = cf.labels_swapped;
    Json prm;
    std::visit(
        [&](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, L2Params>) {
                prm["sqrt_r"] = p.sqrt_r;
                prm["p_is_1_mod_4"] = p.p_is_1_mod_4;
            } else if constexpr (std::is_same_v<P, L3Params>) {
                prm["c1"] = to_decimal(p.c1);
                prm["d1"] = to_decimal(p.d1);
                prm["cube_root_r"] = to_decimal(p.cube_root_r);
            } else if constexpr (std::is_same_v<P, SemiprimitiveParams>) {
                prm["j"] = p.j;
                prm["v"] = p.v;
                prm["case_a"] = p.case_a;
                prm["sqrt_r"] = to_decimal(p.sqrt_r);
            } else {
                prm["class_number"] = p.class_number;
                prm["a"] = to_decimal(p.a_qf);
                prm["b"] = to_decimal(p.b_qf);
                prm["k"] = p.k;
                prm["P"] = to_string(p.P);
                prm["A"] = to_string(p.A);
                prm["B"] = to_string(p.B);
            }
        },
        cf.params);
    j["params"] = prm;
    return j;
}

Json to_json(const GaussianPeriodSet& set) {
    Json j;
    j["L"] = set.L;
    Json vals = Json::array();
    for (const auto& v : set.values) vals.push_back(cyclotomic_json(v));
    j["values"] = vals;
    j["rational"] = set.rational_values.has_value();
    j["modified_zero"] = set.modified_zero;
    return j;
}

Json params_document(const CyclicCode& code) {
    const FieldTower& F = code.tower();
    const auto& prm = code.params();
    Json j;
    j["spec"] = to_json(code.spec());
    j["tower"] = Json{{"q", F.q()}, {"r", F.r()}, {"modulus", gfp::format(F.modulus())}};
    j["a_i"] = prm.a_i;
    j["delta"] = prm.delta;
    j["n"] = prm.n;
    j["N"] = prm.N;
    j["k"] = code.dimension();
    const AssumptionReport rep = validate_assumptions(F, code.spec());
    j["assumptions"] = to_json(rep);
    if (rep.all_hold()) {
        const CodePolynomials polys = build_polynomials(code);
        Json hs = Json::array();
        for (const auto& h : polys.h_i) hs.push_back(format(F, h));
        j["h_i"] = hs;
        j["h"] = format(F, polys.h);
        j["g"] = format(F, polys.g);
    } else {
        j["h_i"] = nullptr;
        j["h"] = nullptr;
        j["g"] = nullptr;
    }
    return j;
}

Json periods_document(const FieldTower& F, const GaussianPeriodSet& exact,
                      const std::optional<ClosedFormPeriods>& closed) {
    Json j = to_json(exact);
    j["p"] = F.p();
    j["r"] = F.r();
    j["modulus"] = gfp::format(F.modulus());
    j["closed_form"] = closed ? to_json(*closed) : Json(nullptr);
    return j;
}

Json weights_document(const CyclicCode& code, const CaseClassification& cls, const WeightDistribution& dist,
                      const std::string& method, bool methods_agreed) {
    Json j = to_json(dist);
    j["spec"] = to_json(code.spec());
    j["classification"] = to_json(cls);
    j["method"] = method;
    j["methods_agreed"] = methods_agreed;
    return j;
}

Json verification_document(const CyclicCode& code, const VerificationReport& rep) {
    Json j;
    j["spec"] = to_json(code.spec());
    j["classification"] = to_json(rep.classification);
    auto opt = [](const std::optional<WeightDistribution>& d) { return d ? to_json(*d) : Json(nullptr); };
    j["naive"] = opt(rep.naive);
    j["tsum"] = opt(rep.tsum);
    j["closed"] = opt(rep.closed);
    j["skipped"] = rep.skipped;
    j["methods_agreed"] = rep.methods_agreed;
    j["first_difference"] = rep.first_difference.empty() ? Json(nullptr) : Json(rep.first_difference);
    Json inv = Json::array();
    for (const auto& c : rep.invariants) inv.push_back(Json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    j["invariants"] = inv;
    if (rep.sampling) {
        const auto& s = *rep.sampling;
        Json per = Json::array();
        for (const auto& w : s.per_weight)
            per.push_back(Json{{"w", w.weight}, {"observed", w.observed}, {"expected", w.expected}, {"sigma", w.sigma}});
        j["sampling"] = Json{{"samples", s.samples},          {"seed", s.seed},
                             {"sigma_bound", s.sigma_bound},  {"all_in_support", s.all_in_support},
                             {"within_bound", s.within_bound}, {"per_weight", per}};
    } else {
        j["sampling"] = nullptr;
    }
    j["ok"] = rep.ok();
    return j;
}

Json corpus_document(const std::vector<CorpusResult>& results) {
    Json arr = Json::array();
    std::size_t passed = 0;
    for (const auto& r : results) {
        passed += r.pass;
        Json diffs = Json::array();
        for (const auto& d : r.diffs)
            diffs.push_back(Json{{"field", d.field}, {"expected", d.expected}, {"actual", d.actual}});
        arr.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"methods", r.methods}, {"diffs", diffs}});
    }
    return Json{{"examples", arr}, {"passed", passed}, {"total", results.size()}};
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace cyclotome
