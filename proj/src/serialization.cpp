#include "tiledual/serialization.hpp"

namespace tiledual {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw std::invalid_argument(where + ": " + what);
}

const json& require_field(const json& j, const char* name, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(name);
    if (it == j.end()) fail(where, std::string("missing field '") + name + "'");
    return *it;
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const IntervalSet& s) {
    json out = json::array();
    for (const Interval& iv : s.parts()) out.push_back(json::array({iv.lo.str(), iv.hi.str()}));
    return out;
}

json to_json(const PeriodicSet& s) { return {{"p", s.p}, {"base", to_json(s.base)}}; }

json to_json(const TilingReport& r) {
    json violation = nullptr;
    if (r.overlap) {
        violation = {{"kind", "overlap"},
                     {"shifts", json::array({r.overlap->shift_a.str(), r.overlap->shift_b.str()})},
                     {"overlap", to_json(r.overlap->overlap)},
                     {"overlap_measure", r.overlap->overlap.measure().str()}};
    } else if (!r.uncovered.is_empty()) {
        violation = {{"kind", "uncovered"}, {"uncovered", to_json(r.uncovered)}};
    }
    return {{"verdict", r.verdict}, {"violation", violation}};
}

json to_json(const CongruenceDecomposition& d) {
    json pieces = json::object();
    for (const auto& [k, piece] : d.pieces) pieces[std::to_string(k)] = to_json(piece);
    return {{"pieces", pieces}};
}

json to_json(const LatticeSumResult& r) {
    return {{"value", r.value}, {"K", r.truncation_K}, {"tail_bound", r.tail_bound}};
}

json to_json(const CheckReport& r) {
    return {{"check", r.check},         {"passed", r.passed},   {"worst", r.worst},
            {"threshold", r.threshold}, {"params", r.params},   {"details", r.details}};
}

json to_json(const IsometryReport& r) {
    json riemann = json::array();
    for (const auto& rv : r.riemann_values) riemann.push_back({{"n", rv.n}, {"value", rv.value}, {"error", rv.error}});
    return {{"lhs", r.lhs},           {"riemann_values", riemann}, {"band_integral", r.band_integral},
            {"residual", r.residual}, {"params", r.params}};
}

json to_json(const Verdict& v) {
    json diags = json::array();
    for (const CheckReport& d : v.diagnostics) diags.push_back(to_json(d));
    return {{"tiling", to_json(v.tiling)},
            {"diagnostics", diags},
            {"all_diagnostics_passed", v.all_diagnostics_passed},
            {"consistent", v.consistent},
            {"params", v.params}};
}

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) fail(where, "expected a rational string like \"3/4\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
}

IntervalSet interval_set_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected a list of [lo, hi) pairs");
    std::vector<Interval> raw;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& pair = j[i];
        const std::string at = where + "[" + std::to_string(i) + "]";
        if (!pair.is_array() || pair.size() != 2) fail(at, "expected a two-element array");
        Rational lo = rational_from_json(pair[0], at + ".lo");
        Rational hi = rational_from_json(pair[1], at + ".hi");
        if (!(lo < hi)) fail(at, "requires lo < hi");
        raw.emplace_back(std::move(lo), std::move(hi));
    }
    return IntervalSet(std::move(raw));
}

PeriodicSet periodic_set_from_json(const json& j) {
    const json& pj = require_field(j, "p", "input");
    if (!pj.is_number_integer()) fail("input.p", "expected an integer");
    const long long p = pj.get<long long>();
    if (p < 2 || p > 1'000'000) fail("input.p", "p must be an integer >= 2");
    IntervalSet base = interval_set_from_json(require_field(j, "base", "input"), "input.base");
    try {
        return PeriodicSet(static_cast<int>(p), std::move(base));
    } catch (const std::exception& e) {
        fail("input", e.what());
    }
}

namespace {

TestFunction test_function_from_json(const json& j, const std::string& where) {
    const std::string kind = require_field(j, "kind", where).get<std::string>();
    if (kind == "indicator") {
        IndicatorCombination f;
        const json& terms = require_field(j, "terms", where);
        if (!terms.is_array() || terms.empty()) fail(where + ".terms", "expected a non-empty array");
        for (std::size_t i = 0; i < terms.size(); ++i) {
            const std::string at = where + ".terms[" + std::to_string(i) + "]";
            Rational coef = rational_from_json(require_field(terms[i], "coef", at), at + ".coef");
            IntervalSet set = interval_set_from_json(require_field(terms[i], "set", at), at + ".set");
            f.terms.emplace_back(std::move(coef), std::move(set));
        }
        return f;
    }
    if (kind == "bump") {
        Rational center = rational_from_json(require_field(j, "center", where), where + ".center");
        Rational halfwidth = rational_from_json(require_field(j, "halfwidth", where), where + ".halfwidth");
        double amplitude = std::exp(1.0);
        if (auto it = j.find("amplitude"); it != j.end()) {
            if (!it->is_number()) fail(where + ".amplitude", "expected a number");
            amplitude = it->get<double>();
        }
        try {
            return BumpFunction(std::move(center), std::move(halfwidth), amplitude);
        } catch (const std::exception& e) {
            fail(where, e.what());
        }
    }
    fail(where + ".kind", "unknown test function kind '" + kind + "'");
}

}  // namespace

Problem parse_problem(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("input: ") + e.what());
    }
    Problem problem{periodic_set_from_json(j), {}};
    if (auto it = j.find("test_functions"); it != j.end()) {
        if (!it->is_array()) fail("input.test_functions", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i)
            problem.test_functions.push_back(
                test_function_from_json((*it)[i], "input.test_functions[" + std::to_string(i) + "]"));
    }
    return problem;
}

RunConfig parse_options(const std::string& text) {
    json j;
    try {
        j = text.empty() ? json::object() : json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("options: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("options: expected an object");

    RunConfig cfg;
    auto get_number = [&](const char* name, double lo, double hi, double dflt) {
        auto it = j.find(name);
        if (it == j.end()) return dflt;
        if (!it->is_number()) fail(std::string("options.") + name, "expected a number");
        const double v = it->get<double>();
        if (!(v >= lo && v <= hi)) fail(std::string("options.") + name, "out of range");
        return v;
    };
    auto get_integer = [&](const char* name, long long lo, long long hi, long long dflt) {
        auto it = j.find(name);
        if (it == j.end()) return dflt;
        if (!it->is_number_integer()) fail(std::string("options.") + name, "expected an integer");
        const long long v = it->get<long long>();
        if (v < lo || v > hi) fail(std::string("options.") + name, "out of range");
        return v;
    };
    if (j.contains("tol")) cfg.tol = get_number("tol", 1e-12, 1.0, 0.0);
    if (auto it = j.find("seed"); it != j.end()) {
        if (!it->is_number_integer()) fail("options.seed", "expected an integer");
        cfg.seed = it->get<std::uint64_t>();
    }
    cfg.n_max = static_cast<int>(get_integer("n_max", 0, 64, cfg.n_max));
    cfg.k_max = get_integer("k_max", 2, 1'000'000'000'000LL, cfg.k_max);
    cfg.t_samples = static_cast<int>(get_integer("t_samples", 1, 1'000'000, cfg.t_samples));

    if (auto it = j.find("sweep"); it != j.end()) {
        const json& s = *it;
        if (!s.is_object()) fail("options.sweep", "expected an object");
        if (auto k = s.find("kind"); k != s.end()) cfg.sweep.kind = k->get<std::string>();
        if (cfg.sweep.kind != "plancherel" && cfg.sweep.kind != "comb")
            fail("options.sweep.kind", "expected \"plancherel\" or \"comb\"");
        cfg.sweep.points = static_cast<int>([&] {
            auto p = s.find("points");
            if (p == s.end()) return static_cast<double>(cfg.sweep.points);
            if (!p->is_number_integer() || p->get<long long>() < 1 || p->get<long long>() > 10'000'000)
                fail("options.sweep.points", "expected a positive integer");
            return p->get<double>();
        }());
        if (auto v = s.find("t_min"); v != s.end()) cfg.sweep.t_min = v->get<double>();
        if (auto v = s.find("t_max"); v != s.end()) cfg.sweep.t_max = v->get<double>();
        if (!(cfg.sweep.t_min <= cfg.sweep.t_max)) fail("options.sweep", "requires t_min <= t_max");
        if (auto v = s.find("n"); v != s.end()) {
            if (!v->is_number_integer() || v->get<long long>() < 0 || v->get<long long>() > 1000)
                fail("options.sweep.n", "expected a small non-negative integer");
            cfg.sweep.n = static_cast<int>(v->get<long long>());
        }
        if (auto v = s.find("offsets"); v != s.end()) {
            if (!v->is_array()) fail("options.sweep.offsets", "expected an array of rationals");
            for (std::size_t i = 0; i < v->size(); ++i)
                cfg.sweep.offsets.push_back(rational_from_json((*v)[i], "options.sweep.offsets"));
        }
    }
    return cfg;
}

json to_json(const RunConfig& cfg) {
    json offsets = json::array();
    for (const Rational& r : cfg.sweep.offsets) offsets.push_back(r.str());
    return {{"command", cfg.command},
            {"tol", cfg.tol ? json(*cfg.tol) : json(nullptr)},
            {"seed", cfg.seed},
            {"n_max", cfg.n_max},
            {"k_max", cfg.k_max},
            {"t_samples", cfg.t_samples},
            {"sweep",
             {{"kind", cfg.sweep.kind},
              {"points", cfg.sweep.points},
              {"t_min", cfg.sweep.t_min},
              {"t_max", cfg.sweep.t_max},
              {"n", cfg.sweep.n},
              {"offsets", offsets}}}};
}

}  // namespace tiledual
