#include "tiledual.h"

#include "tiledual/runner.hpp"

#include <cstdlib>
#include <cstring>
#include <new>

struct td_problem {
    tiledual::Problem value;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) return nullptr;
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

td_status fail(td_status code, const char* message) {
    t_last_error = message;
    return code;
}

}  // namespace

extern "C" {

const char* td_version(void) { return tiledual::version_string(); }

td_status td_problem_parse(const char* json_text, td_problem** out) {
    if (out) *out = nullptr;
    if (!json_text || !out) return fail(TD_INVALID_INPUT, "td_problem_parse: NULL argument");
    t_last_error.clear();
    try {
        auto problem = new td_problem{tiledual::parse_problem(json_text)};
        *out = problem;
        return TD_OK;
    } catch (const std::invalid_argument& e) {
        return fail(TD_INVALID_INPUT, e.what());
    } catch (const std::exception& e) {
        return fail(TD_INTERNAL_ERROR, e.what());
    }
}

void td_problem_free(td_problem* problem) { delete problem; }

td_status td_run(const td_problem* problem, const char* command, const char* options_json, char** output) {
    if (output) *output = nullptr;
    if (!problem || !command || !output) return fail(TD_INVALID_INPUT, "td_run: NULL argument");
    t_last_error.clear();
    try {
        tiledual::RunConfig config = tiledual::parse_options(options_json ? options_json : "{}");
        config.command = command;
        const tiledual::RunOutcome outcome = tiledual::run_command(problem->value, config);
        *output = dup_string(outcome.output);
        if (!*output) return fail(TD_INTERNAL_ERROR, "td_run: out of memory");
        if (outcome.status == tiledual::RunStatus::CheckFailed) t_last_error = "check failed; see report";
        return static_cast<td_status>(outcome.status);
    } catch (const std::invalid_argument& e) {
        return fail(TD_INVALID_INPUT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(TD_INTERNAL_ERROR, "out of memory");
    } catch (const std::exception& e) {
        return fail(TD_INTERNAL_ERROR, e.what());
    }
}

void td_string_free(char* s) { std::free(s); }

const char* td_last_error(void) { return t_last_error.c_str(); }

}  // extern "C"
