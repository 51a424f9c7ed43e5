// Batch front-end for the tiledual shared library. Reads a problem from a
// JSON file, runs one command through the C API and writes the report (JSON,
// or CSV for sweeps) to the output path or stdout. Exit code: 0 for
// true/consistent verdicts, 1 for violations or failed checks, 2 for input
// errors. Set TILEDUAL_LOG=info (or debug) for progress notes on stderr.

#include <CLI11.hpp>

#include "tiledual.h"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int log_level() {
    const char* env = std::getenv("TILEDUAL_LOG");
    if (!env || !*env) return 0;
    const std::string v = env;
    if (v == "debug" || v == "2") return 2;
    if (v == "0" || v == "off" || v == "silent") return 0;
    return 1;
}

void log_note(int level, const std::string& message) {
    if (log_level() >= level) std::cerr << "tiledual: " << message << "\n";
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tiling/spectral duality checks for p-periodic subsets of the real line"};
    app.set_version_flag("--version", td_version());

    std::string command;
    std::string input_path;
    std::string output_path;
    double tol = 1e-6;
    std::uint64_t seed = 1;
    int n_max = 2;
    int t_samples = 64;
    std::string sweep_kind = "plancherel";
    int sweep_points = 101;
    double sweep_t_min = 0.0;
    double sweep_t_max = 1.0;
    int sweep_n = 1;

    app.add_option("--command", command, "check-tiling | check-spectral | complete | verdict | sweep")->required();
    app.add_option("--input", input_path, "problem JSON file")->required();
    app.add_option("--output", output_path, "output file (stdout when omitted)");
    auto* tol_option = app.add_option("--tol", tol, "truncation tolerance for lattice sums");
    app.add_option("--seed", seed, "seed for deterministic sampling");
    app.add_option("--n-max", n_max, "largest truncation order n used by the diagnostics");
    app.add_option("--t-samples", t_samples, "sample count per numeric diagnostic");
    app.add_option("--sweep-kind", sweep_kind, "sweep curve: plancherel | comb");
    app.add_option("--sweep-points", sweep_points, "number of sweep grid points");
    app.add_option("--sweep-t-min", sweep_t_min, "sweep grid start");
    app.add_option("--sweep-t-max", sweep_t_max, "sweep grid end");
    app.add_option("--sweep-n", sweep_n, "comb sweep order n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    std::ifstream in(input_path);
    if (!in) {
        std::cerr << "tiledual: cannot open input file '" << input_path << "'\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string problem_text = buffer.str();

    log_note(1, "command " + command + " on " + input_path);
    const auto started = std::chrono::steady_clock::now();

    td_problem* problem = nullptr;
    td_status status = td_problem_parse(problem_text.c_str(), &problem);
    if (status != TD_OK) {
        std::cerr << "tiledual: " << td_last_error() << "\n";
        return 2;
    }

    char opts[512];
    std::snprintf(opts, sizeof(opts),
                  "{\"tol\": %.17g, \"seed\": %llu, \"n_max\": %d, \"t_samples\": %d,"
                  " \"sweep\": {\"kind\": \"%s\", \"points\": %d, \"t_min\": %.17g,"
                  " \"t_max\": %.17g, \"n\": %d}}",
                  tol, static_cast<unsigned long long>(seed), n_max, t_samples, json_escape(sweep_kind).c_str(),
                  sweep_points, sweep_t_min, sweep_t_max, sweep_n);
    log_note(2, std::string("options ") + opts);

    char* output = nullptr;
    status = td_run(problem, command.c_str(), opts, &output);
    td_problem_free(problem);

    if (status == TD_INVALID_INPUT || status == TD_INTERNAL_ERROR) {
        std::cerr << "tiledual: " << td_last_error() << "\n";
        td_string_free(output);
        return status == TD_INVALID_INPUT ? 2 : 1;
    }

    if (output) {
        if (output_path.empty()) {
            std::cout << output;
        } else {
            std::ofstream out(output_path);
            if (!out) {
                std::cerr << "tiledual: cannot open output file '" << output_path << "'\n";
                td_string_free(output);
                return 2;
            }
            out << output;
        }
    }
    td_string_free(output);

    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    char timing[64];
    std::snprintf(timing, sizeof(timing), "finished in %.3f s, exit %d", elapsed, static_cast<int>(status));
    log_note(1, timing);
    return static_cast<int>(status);
}
