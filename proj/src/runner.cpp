#include "tiledual/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>

namespace tiledual {

using nlohmann::json;

namespace {

std::string iso_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Timestamps live only under "meta" so that reports are byte-identical for
// identical configs and seeds.
std::string envelope(const RunConfig& cfg, json report) {
    json out = {{"command", cfg.command},
                {"config", to_json(cfg)},
                {"report", std::move(report)},
                {"meta", {{"timestamp", iso_timestamp()}, {"version", version_string()}}}};
    return out.dump(2) + "\n";
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

RunOutcome run_check_tiling(const Problem& problem, const RunConfig& cfg) {
    const TilingReport report = tiles_by_residues(problem.set);
    return {report.verdict ? RunStatus::Ok : RunStatus::CheckFailed, envelope(cfg, to_json(report))};
}

RunOutcome run_check_spectral(const Problem& problem, const RunConfig& cfg) {
    VerdictConfig vcfg;
    if (cfg.tol) vcfg.tol = *cfg.tol;
    vcfg.t_samples = cfg.t_samples;
    vcfg.n_max = cfg.n_max;
    vcfg.seed = cfg.seed;
    vcfg.k_max = cfg.k_max;
    Verdict verdict = duality_verdict(problem.set, vcfg);

    // Optional user-supplied test functions feed extra isometry diagnostics.
    for (std::size_t i = 0; i < problem.test_functions.size(); ++i) {
        const IsometryReport iso =
            isometry_check(problem.set, problem.test_functions[i], cfg.n_max, vcfg.tol, cfg.k_max);
        CheckReport rep;
        rep.check = "isometry:test_function[" + std::to_string(i) + "]";
        rep.worst = iso.residual;
        rep.threshold = vcfg.isometry_threshold;
        rep.passed = iso.residual <= rep.threshold;
        rep.params = iso.params;
        rep.details = {{"lhs", iso.lhs}, {"band_integral", iso.band_integral}};
        verdict.diagnostics.push_back(std::move(rep));
    }
    const bool all = std::all_of(verdict.diagnostics.begin(), verdict.diagnostics.end(),
                                 [](const CheckReport& r) { return r.passed; });

    json report = {{"diagnostics", json::array()}, {"all_passed", all}};
    for (const CheckReport& d : verdict.diagnostics) report["diagnostics"].push_back(to_json(d));
    return {all ? RunStatus::Ok : RunStatus::CheckFailed, envelope(cfg, std::move(report))};
}

RunOutcome run_complete(const Problem& problem, const RunConfig& cfg) {
    try {
        const Completion completion = complete_to_tile(problem.set);
        json report = {{"residue", to_json(completion.residue)},
                       {"omega_tilde", to_json(completion.omega_tilde)},
                       {"verified", true}};
        return {RunStatus::Ok, envelope(cfg, std::move(report))};
    } catch (const CompletionError& e) {
        json report = {{"error",
                        {{"kind", "disjointness-violation"}, {"j", e.j}, {"overlap_measure", e.overlap.str()}}}};
        return {RunStatus::CheckFailed, envelope(cfg, std::move(report))};
    }
}

RunOutcome run_verdict(const Problem& problem, const RunConfig& cfg) {
    VerdictConfig vcfg;
    if (cfg.tol) vcfg.tol = *cfg.tol;
    vcfg.t_samples = cfg.t_samples;
    vcfg.n_max = cfg.n_max;
    vcfg.seed = cfg.seed;
    vcfg.k_max = cfg.k_max;
    const Verdict verdict = duality_verdict(problem.set, vcfg);
    return {verdict.consistent ? RunStatus::Ok : RunStatus::CheckFailed, envelope(cfg, to_json(verdict))};
}

RunOutcome run_sweep(const Problem& problem, const RunConfig& cfg) {
    const SweepSpec& sw = cfg.sweep;
    std::string csv = "t,value,tail_bound\n";
    const int points = sw.points;
    for (int i = 0; i < points; ++i) {
        const double t =
            points == 1 ? sw.t_min : sw.t_min + (sw.t_max - sw.t_min) * static_cast<double>(i) / (points - 1);
        double value = 0.0;
        double tail = 0.0;
        if (sw.kind == "comb") {
            value = comb_plancherel_check(problem.set.p, sw.n, t);
        } else {
            std::vector<Rational> offsets = sw.offsets;
            if (offsets.empty()) offsets.push_back(Rational(0));
            const LatticeSumResult r =
                plancherel_sum(problem.set.base, offsets, t, cfg.tol.value_or(1e-6), cfg.k_max);
            value = r.value;
            tail = r.tail_bound;
        }
        csv += format_double(t) + "," + format_double(value) + "," + format_double(tail) + "\n";
    }
    return {RunStatus::Ok, csv};
}

}  // namespace

const char* version_string() { return "0.1.0"; }

RunOutcome run_command(const Problem& problem, const RunConfig& config) {
    const std::string& cmd = config.command;
    try {
        if (cmd == "check-tiling") return run_check_tiling(problem, config);
        if (cmd == "check-spectral") return run_check_spectral(problem, config);
        if (cmd == "complete") return run_complete(problem, config);
        if (cmd == "verdict") return run_verdict(problem, config);
        if (cmd == "sweep") return run_sweep(problem, config);
    } catch (const TruncationError& e) {
        json report = {{"error", {{"kind", "truncation"}, {"message", e.what()}}}};
        return {RunStatus::CheckFailed, envelope(config, std::move(report))};
    }
    throw std::invalid_argument("unknown command '" + cmd + "'");
}

}  // namespace tiledual
