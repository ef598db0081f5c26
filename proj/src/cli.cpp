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


#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "cyclotome/cli.hpp"
#include "cyclotome/corpus.hpp"
#include "cyclotome/error.hpp"
#include "cyclotome/serialize.hpp"

namespace cyclotome::cli {

namespace {

struct Config {
    std::uint32_t p = 0, s = 1, m = 0;
    std::uint32_t e = 0, t = 0;
    std::int64_t a = 1;
    std::string delta;
    std::string modulus;
    std::uint32_t L = 0;
    std::string method = "auto";
    std::optional<std::uint64_t> max_enum;
    std::uint64_t seed = 0;
    std::uint64_t samples = 1'000'000;
    bool json = false;
    bool raw = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_list(const std::string& text, const char* what) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string("--") + what + ": '" + item + "' is not an integer");
        }
    }
    return out;
}

std::optional<GfpPoly> parse_modulus(const std::string& text) {
    if (text.empty()) return std::nullopt;
    for (auto v : parse_list(text, "modulus"))
        if (v < 0) throw UsageError("--modulus: coefficients must be nonnegative");
    return gfp::parse(text);
}

CodeSpec spec_from(const Config& c) {
    CodeSpec sp;
    sp.p = c.p;
    sp.s = c.s;
    sp.m = c.m;
    sp.e = c.e;
    sp.t = c.t;
    sp.a = c.a;
    if (c.delta.empty()) {
        for (std::uint32_t i = 0; i < c.t; ++i) sp.deltas.push_back(i);
    } else {
        sp.deltas = parse_list(c.delta, "delta");
    }
    if (sp.deltas.size() != c.t)
        throw UsageError("--delta has " + std::to_string(sp.deltas.size()) + " entries but --t is " +
                         std::to_string(c.t));
    sp.modulus = parse_modulus(c.modulus);
    return sp;
}

std::uint64_t default_cap(std::uint64_t fallback) {
    if (const char* env = std::getenv("CYCLOTOME_MAX_ENUM")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("CYCLOTOME_MAX_ENUM: '") + env + "' is not a count");
        }
    }
    return fallback;
}

VerificationCaps caps_from(const Config& c) {
    VerificationCaps caps;
    caps.naive = c.max_enum ? *c.max_enum : default_cap(kDefaultNaiveCap);
    caps.tsum = c.max_enum ? *c.max_enum : default_cap(kDefaultTsumCap);
    caps.seed = c.seed;
    caps.samples = c.samples;
    return caps;
}

void print_distribution(std::ostream& out, const WeightDistribution& d) {
    out << "weight enumerator: " << d.enumerator() << '\n';
    std::size_t width = 5;
    for (const auto& [w, c] : d.entries) width = std::max(width, to_decimal(c).size());
    out << std::setw(8) << "weight" << "  " << std::setw(static_cast<int>(width)) << "count" << '\n';
    for (const auto& [w, c] : d.entries)
        out << std::setw(8) << w << "  " << std::setw(static_cast<int>(width)) << to_decimal(c) << '\n';
}

std::string field_name(const FieldTower& F) { return "GF(" + std::to_string(F.q()) + ")"; }

int cmd_params(const Config& c, std::ostream& out) {
    const CyclicCode code = CyclicCode::build(spec_from(c));
    if (c.json) {
        out << dump(params_document(code)) << '\n';
        return 0;
    }
    const FieldTower& F = code.tower();
    const auto& prm = code.params();
    out << "code      " << describe(code.spec()) << '\n';
    out << "field     q = " << F.q() << ", r = " << F.r() << ", modulus " << gfp::pretty(F.modulus()) << '\n';
    out << "a_i      ";
    for (auto a : prm.a_i) out << ' ' << a;
    out << "\ndelta     " << prm.delta << "\nn         " << prm.n << "\nN         " << prm.N << '\n';
    out << "[n, k]    [" << prm.n << ", " << code.dimension() << "]\n";
    const AssumptionReport rep = validate_assumptions(F, code.spec());
    auto line = [&](const char* name, const ConditionVerdict& v) {
        out << "condition " << name << ": " << (v.holds ? "holds" : "FAILS") << " (" << v.detail << ")\n";
    };
    line("i", rep.cond_i);
    line("ii", rep.cond_ii);
    line("iii", rep.cond_iii);
    out << "condition iii settled by " << method_name(rep.method) << (rep.consistent ? "" : " (INCONSISTENT)")
        << '\n';
    if (!rep.all_hold()) return 1;
    const CodePolynomials polys = build_polynomials(code);
    for (std::size_t i = 0; i < polys.h_i.size(); ++i)
        out << "h_" << i + 1 << "(x) = " << pretty(F, polys.h_i[i]) << '\n';
    out << "h(x) = " << pretty(F, polys.h) << '\n';
    out << "g(x) = " << pretty(F, polys.g) << '\n';
    return 0;
}

int cmd_periods(const Config& c, std::ostream& out) {
    const FieldTower F = FieldTower::build(c.p, c.s, c.m, parse_modulus(c.modulus));
    const GaussianPeriodSet exact = periods_exact(F, c.L);
    std::optional<ClosedFormPeriods> closed;
    std::string closed_note;
    bool agree = false;
    if (const auto v = applicable_variant(F.p(), F.degree(), c.L)) {
        try {
            closed = periods_closed_form(*v, F, c.L);
            agree = align_labels(*closed, exact);
        } catch (const Error& err) {
            closed_note = std::string(errc_name(err.code())) + ": " + err.what();
        }
    } else {
        closed_note = "no closed form applies";
    }
    if (c.json) {
        Json j = periods_document(F, exact, closed);
        j["closed_form_agrees"] = closed ? Json(agree) : Json(nullptr);
        if (c.raw) {
            Json tallies = Json::array();
            for (const auto& v : exact.values) tallies.push_back(v.counts());
            j["tallies"] = tallies;
        }
        out << dump(j) << '\n';
        return 0;
    }
    out << "L = " << c.L << ", r = " << F.r() << ", modified period at 0 = " << exact.modified_zero << '\n';
    for (std::uint32_t i = 0; i < exact.L; ++i) {
        out << "eta_" << i << " = ";
        if (auto v = exact.values[i].rational_value()) {
            out << *v;
        } else {
            out << "sum_c n_c zeta^c with n =";
            for (auto n : exact.values[i].counts()) out << ' ' << n;
        }
        out << '\n';
    }
    if (c.raw) {
        out << "trace tallies (how often Tr(x) = 0, 1, ..., p-1 over each class):\n";
        for (std::uint32_t i = 0; i < exact.L; ++i) {
            out << "class " << i << ':';
            for (auto n : exact.values[i].counts()) out << ' ' << n;
            out << '\n';
        }
    }
    if (!closed) {
        out << "closed form: " << closed_note << '\n';
        return 0;
    }
    out << "closed form: " << variant_name(closed->variant) << ' ' << dump(to_json(*closed)["params"]) << '\n';
    out << "closed-form values:";
    for (const auto& v : closed->values) out << ' ' << to_string(v);
    out << "\nagrees with exact: " << (agree ? "yes" : "NO") << (closed->labels_swapped ? " (labels swapped)" : "")
        << '\n';
    return agree ? 0 : 1;
}

int cmd_cyclonum(const Config& c, std::ostream& out) {
    const FieldTower F = FieldTower::build(c.p, c.s, c.m, parse_modulus(c.modulus));
    const auto M = cyclotomic_numbers(F, c.L);
    if (c.json) {
        out << dump(Json{{"L", c.L}, {"r", F.r()}, {"numbers", M}}) << '\n';
        return 0;
    }
    out << "cyclotomic numbers (i, j) of order " << c.L << " in GF(" << F.r() << ")\n";
    for (const auto& row : M) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << std::setw(6) << row[j];
        out << '\n';
    }
    return 0;
}

int cmd_weights(const Config& c, std::ostream& out) {
    const CyclicCode code = CyclicCode::build(spec_from(c));
    const VerificationCaps caps = caps_from(c);
    const CaseClassification cls = classify(code);
    const std::uint64_t inputs = input_space_size(code, std::max(caps.naive, caps.tsum));
    std::string method = c.method;
    if (method == "auto") {
        if (cls.theorem != Theorem::Unsupported)
            method = "closed";
        else if (inputs <= caps.tsum)
            method = "tsum";
        else if (inputs <= caps.naive)
            method = "naive";
        else
            throw Error(Errc::CapExceeded, "no closed form (" + cls.failed + ") and r^t exceeds the enumeration cap; "
                                           "raise --max-enum or CYCLOTOME_MAX_ENUM");
    }
    WeightDistribution dist;
    if (method == "closed")
        dist = wd_closed(code, cls);
    else if (method == "tsum")
        dist = wd_tsum(code, caps.tsum);
    else
        dist = wd_naive(code, caps.naive);

    if (c.json) {
        out << dump(weights_document(code, cls, dist, method, true)) << '\n';
        return 0;
    }
    out << '[' << dist.n << ", " << dist.k << ", " << dist.min_distance() << "] code over "
        << field_name(code.tower()) << ", " << cls.tag() << ", method " << method << '\n';
    print_distribution(out, dist);
    return 0;
}

int cmd_verify(const Config& c, std::ostream& out) {
    const CyclicCode code = CyclicCode::build(spec_from(c));
    const VerificationReport rep = cross_verify(code, caps_from(c));
    if (c.json) {
        out << dump(verification_document(code, rep)) << '\n';
        return rep.ok() ? 0 : 1;
    }
    out << "code: " << describe(code.spec()) << '\n';
    out << "classification: " << rep.classification.tag() << '\n';
    for (const auto& step : rep.classification.trace) out << "  " << step << '\n';
    const std::pair<const char*, const std::optional<WeightDistribution>*> methods[] = {
        {"closed", &rep.closed}, {"tsum", &rep.tsum}, {"naive", &rep.naive}};
    for (const auto& [name, d] : methods)
        if (*d) out << name << ": " << (*d)->enumerator() << '\n';
    for (const auto& s : rep.skipped) out << "skipped " << s << '\n';
    out << "methods agree: " << (rep.methods_agreed ? "yes" : "NO, " + rep.first_difference) << '\n';
    for (const auto& inv : rep.invariants)
        out << (inv.ok ? "ok   " : "FAIL ") << inv.name << ": " << inv.detail << '\n';
    if (rep.sampling) {
        const auto& s = *rep.sampling;
        out << "sampling: " << s.samples << " inputs, seed " << s.seed << ", "
            << (s.all_in_support ? "all weights in support" : "WEIGHT OUTSIDE SUPPORT") << ", "
            << (s.within_bound ? "counts within " : "COUNTS OUTSIDE ") << s.sigma_bound << " sigma\n";
    }
    out << "verification: " << (rep.ok() ? "ok" : "FAILED") << '\n';
    return rep.ok() ? 0 : 1;
}

int cmd_corpus(const Config& c, std::ostream& out) {
    const auto results = run_corpus(caps_from(c));
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.pass;
    if (c.json) {
        out << dump(corpus_document(results)) << '\n';
    } else {
        for (const auto& r : results) {
            out << (r.pass ? "PASS " : "FAIL ") << r.name << "  [";
            for (std::size_t i = 0; i < r.methods.size(); ++i) out << (i ? ", " : "") << r.methods[i];
            out << "]\n";
            for (const auto& d : r.diffs)
                out << "     " << d.field << ": expected " << d.expected << ", got " << d.actual << '\n';
        }
        out << passed << '/' << results.size() << " examples pass\n";
    }
    return passed == results.size() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weight distributions of trace cyclic codes from Gaussian periods"};
    app.require_subcommand(1);
    Config c;

    auto field_flags = [&](CLI::App* sub, bool need_m) {
        sub->add_option("--p", c.p, "characteristic")->required();
        sub->add_option("--s", c.s, "GF(q) has degree s over GF(p)");
        auto* m = sub->add_option("--m", c.m, "GF(r) has degree m over GF(q)");
        if (need_m) m->required();
        sub->add_option("--modulus", c.modulus, "defining polynomial of GF(r) over GF(p), ascending, e.g. 1,2,0,1");
        sub->add_flag("--json", c.json, "machine-readable output");
    };
    auto code_flags = [&](CLI::App* sub) {
        field_flags(sub, true);
        sub->add_option("--e", c.e, "e divides r - 1")->required();
        sub->add_option("--t", c.t, "number of exponents, 1 <= t <= e")->required();
        sub->add_option("--a", c.a, "base exponent");
        sub->add_option("--delta", c.delta, "comma list of t offsets (default 0,...,t-1)");
        sub->add_option("--max-enum", c.max_enum, "enumeration cap on r^t");
        sub->add_option("--seed", c.seed, "sampling seed");
    };

    auto* params = app.add_subcommand("params", "code parameters, polynomials, assumptions");
    code_flags(params);
    auto* periods = app.add_subcommand("periods", "Gaussian periods of order L, exact and closed form");
    field_flags(periods, true);
    periods->add_option("--L", c.L, "order")->required();
    periods->add_flag("--raw", c.raw, "also print the per-class trace tallies");
    auto* cyclonum = app.add_subcommand("cyclonum", "cyclotomic numbers of order L");
    field_flags(cyclonum, true);
    cyclonum->add_option("--L", c.L, "order")->required();
    auto* weights = app.add_subcommand("weights", "weight distribution");
    code_flags(weights);
    weights->add_option("--method", c.method, "auto, naive, tsum or closed")
        ->check(CLI::IsMember({"auto", "naive", "tsum", "closed"}));
    auto* verify = app.add_subcommand("verify", "run every feasible method and check invariants");
    code_flags(verify);
    verify->add_option("--samples", c.samples, "random inputs when enumeration is infeasible");
    auto* corpus = app.add_subcommand("corpus", "run the worked-example fixtures");
    corpus->add_flag("--json", c.json, "machine-readable output");
    corpus->add_option("--max-enum", c.max_enum, "enumeration cap on r^t");
    corpus->add_option("--seed", c.seed, "sampling seed");
    corpus->add_option("--samples", c.samples, "random inputs when enumeration is infeasible");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*params) return cmd_params(c, out);
        if (*periods) return cmd_periods(c, out);
        if (*cyclonum) return cmd_cyclonum(c, out);
        if (*weights) return cmd_weights(c, out);
        if (*verify) return cmd_verify(c, out);
        if (*corpus) return cmd_corpus(c, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
        return 1;
    }
    return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"cyclotome"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cyclotome::cli
