#include <doctest.h>

#include "test_support.hpp"

#include "tiledual/serialization.hpp"

using namespace tiledual;
using nlohmann::json;
using ts::iset;
using ts::rat;

TEST_CASE("interval set JSON round trip is bit exact") {
    const IntervalSet s = iset({{"0", "1/2"}, {"3/2", "2"}});
    const json j = to_json(s);
    CHECK(j.dump() == R"([["0","1/2"],["3/2","2"]])");
    CHECK(interval_set_from_json(j, "t") == s);

    // big endpoints survive unchanged
    const IntervalSet big =
        iset({{"-123456789123456791/3", "123456789123456789123456789/987654321987654321987654321"}});
    CHECK(interval_set_from_json(to_json(big), "t") == big);

    std::mt19937_64 rng(8);
    for (int iter = 0; iter < 50; ++iter) {
        const IntervalSet s2 = ts::random_tiling_base(rng, 3, 4);
        CHECK(interval_set_from_json(to_json(s2), "t") == s2);
    }
}

TEST_CASE("periodic set JSON") {
    const PeriodicSet omega(2, iset({{"0", "1/2"}, {"3/2", "2"}}));
    const json j = to_json(omega);
    CHECK(j["p"] == 2);
    const PeriodicSet back = periodic_set_from_json(j);
    CHECK(back.p == 2);
    CHECK(back.base == omega.base);
}

TEST_CASE("problem parsing errors carry field context") {
    CHECK_THROWS_WITH_AS(parse_problem("{"), doctest::Contains("input:"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_problem(R"({"base": []})"), doctest::Contains("missing field 'p'"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_problem(R"({"p": 2})"), doctest::Contains("missing field 'base'"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_problem(R"({"p": 1, "base": []})"), doctest::Contains("p must be"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_problem(R"({"p": 2, "base": [["0", "0.5"]]})"), doctest::Contains("base[0]"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_problem(R"({"p": 2, "base": [["1", "1"]]})"), doctest::Contains("lo < hi"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_problem(R"({"p": 2, "base": [["0", "5/2"]]})"), doctest::Contains("not contained"),
                         std::invalid_argument);
    // valid problem with test functions
    const Problem p = parse_problem(
        R"({"p": 2, "base": [["0", "1"]],
            "test_functions": [
              {"kind": "indicator", "terms": [{"coef": "1", "set": [["0", "1"]]}]},
              {"kind": "bump", "center": "1/2", "halfwidth": "1/4"}]})");
    CHECK(p.test_functions.size() == 2);
    CHECK(std::holds_alternative<IndicatorCombination>(p.test_functions[0]));
    CHECK(std::holds_alternative<BumpFunction>(p.test_functions[1]));
}

TEST_CASE("options parsing") {
    const RunConfig defaults = parse_options("{}");
    CHECK(defaults.tol == 1e-6);
    CHECK(defaults.t_samples == 64);
    CHECK(defaults.k_max == 10'000'000);

    const RunConfig cfg = parse_options(
        R"({"tol": 1e-4, "seed": 99, "n_max": 1, "t_samples": 8,
            "sweep": {"kind": "comb", "points": 11, "t_min": 0.0, "t_max": 0.5, "n": 2}})");
    CHECK(cfg.tol == 1e-4);
    CHECK(cfg.seed == 99);
    CHECK(cfg.n_max == 1);
    CHECK(cfg.sweep.kind == "comb");
    CHECK(cfg.sweep.points == 11);

    CHECK_THROWS_AS(parse_options(R"({"tol": -1})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_options(R"({"tol": "big"})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_options(R"({"sweep": {"kind": "nope"}})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_options("[1]"), std::invalid_argument);
}

TEST_CASE("tiling report JSON shape") {
    const TilingReport good = tiles_by_residues(PeriodicSet(2, iset({{"0", "1"}})));
    const json jg = to_json(good);
    CHECK(jg["verdict"] == true);
    CHECK(jg["violation"].is_null());

    const TilingReport bad = tiles_by_residues(PeriodicSet(2, iset({{"0", "3/4"}, {"1", "5/4"}})));
    const json jb = to_json(bad);
    CHECK(jb["verdict"] == false);
    CHECK(jb["violation"]["kind"] == "overlap");
    CHECK(jb["violation"]["overlap_measure"] == "1/4");

    const TilingReport gap = tiles_by_residues(PeriodicSet(2, iset({{"0", "1/2"}})));
    const json jgap = to_json(gap);
    CHECK(jgap["violation"]["kind"] == "uncovered");
}

TEST_CASE("lattice sum result JSON shape") {
    const LatticeSumResult r = plancherel_sum(iset({{"0", "1"}}), {rat("0")}, 0.25, 1e-4);
    const json j = to_json(r);
    CHECK(j.contains("value"));
    CHECK(j.contains("K"));
    CHECK(j.contains("tail_bound"));
    CHECK(j["K"].get<long long>() == r.truncation_K);
}

TEST_CASE("verdict JSON embeds parameters and diagnostics") {
    VerdictConfig cfg;
    cfg.t_samples = 2;
    const Verdict v = duality_verdict(PeriodicSet(2, iset({{"0", "1"}})), cfg);
    const json j = to_json(v);
    CHECK(j["consistent"] == true);
    CHECK(j["tiling"]["verdict"] == true);
    CHECK(j["diagnostics"].size() == 4);
    CHECK(j["params"]["t_samples"] == 2);
    for (const auto& d : j["diagnostics"]) {
        CHECK(d.contains("check"));
        CHECK(d.contains("worst"));
        CHECK(d.contains("threshold"));
        CHECK(d.contains("params"));
    }
}
