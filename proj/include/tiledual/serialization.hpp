#pragma once

#include "tiledual/spectral.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tiledual {

// JSON wire formats. Rationals travel as "num/den" or integer strings and
// round-trip bit-exactly; interval sets are lists of [lo, hi) string pairs.

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const IntervalSet& s);
nlohmann::json to_json(const PeriodicSet& s);
nlohmann::json to_json(const TilingReport& r);
nlohmann::json to_json(const CongruenceDecomposition& d);
nlohmann::json to_json(const LatticeSumResult& r);
nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const IsometryReport& r);
nlohmann::json to_json(const Verdict& v);

Rational rational_from_json(const nlohmann::json& j, const std::string& where);
IntervalSet interval_set_from_json(const nlohmann::json& j, const std::string& where);
PeriodicSet periodic_set_from_json(const nlohmann::json& j);

/// A problem description: the periodic set plus optional test functions for
/// the isometry/periodization checks.
struct Problem {
    PeriodicSet set;
    std::vector<TestFunction> test_functions;
};

/// Parses a problem from JSON text; throws std::invalid_argument with field
/// context on malformed input.
Problem parse_problem(const std::string& text);

struct SweepSpec {
    std::string kind = "plancherel";  // or "comb"
    int points = 101;
    double t_min = 0.0;
    double t_max = 1.0;
    int n = 1;                        // comb order
    std::vector<Rational> offsets;    // plancherel offsets; {0} when empty
};

/// Run configuration shared by the C API and the CLI. A missing tol keeps
/// each command's own default (1e-6 for sweeps, the battery default for the
/// verdict diagnostics, which need a coarser truncation budget).
struct RunConfig {
    std::string command;  // check-tiling | check-spectral | complete | verdict | sweep
    std::optional<double> tol;
    std::uint64_t seed = 1;
    int n_max = 2;
    long long k_max = kDefaultKMax;
    int t_samples = 64;
    SweepSpec sweep;
};

/// Parses the options JSON (all fields optional); throws on invalid values.
RunConfig parse_options(const std::string& text);

nlohmann::json to_json(const RunConfig& cfg);

}  // namespace tiledual
