#include "cochain_net/cochain_net.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "commands.hpp"
#include "error.hpp"
#include "scenario.hpp"

struct cn_scenario {
    cochain::Scenario parsed;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

cn_status scenario_from(cochain::Scenario&& parsed, cn_scenario** out) {
    *out = new (std::nothrow) cn_scenario{std::move(parsed)};
    if (!*out) {
        g_last_error = "out of memory";
        return CN_ERROR;
    }
    return CN_OK;
}

} // namespace

extern "C" {

cn_status cn_scenario_load(const char* path, cn_scenario** out) {
    if (!path || !out) {
        g_last_error = "null argument";
        return CN_ERROR;
    }
    *out = nullptr;
    try {
        return scenario_from(cochain::load_scenario(path), out);
    } catch (const cochain::Error& e) {
        g_last_error = std::string(e.code()) + ": " + e.what();
        return CN_INVALID;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CN_ERROR;
    }
}

cn_status cn_scenario_parse(const char* toml_text, cn_scenario** out) {
    if (!toml_text || !out) {
        g_last_error = "null argument";
        return CN_ERROR;
    }
    *out = nullptr;
    try {
        return scenario_from(cochain::parse_scenario(toml_text), out);
    } catch (const cochain::Error& e) {
        g_last_error = std::string(e.code()) + ": " + e.what();
        return CN_INVALID;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CN_ERROR;
    }
}

void cn_scenario_free(cn_scenario* scenario) { delete scenario; }

cn_status cn_run(const cn_scenario* scenario, const char* command, const char* const* flags,
                 size_t nflags, char** json_out) {
    if (!command || !json_out || (nflags > 0 && !flags)) {
        g_last_error = "null argument";
        return CN_ERROR;
    }
    *json_out = nullptr;
    try {
        std::map<std::string, std::string> flag_map;
        for (size_t i = 0; i < nflags; ++i) {
            if (!flags[i]) continue;
            std::string entry(flags[i]);
            auto eq = entry.find('=');
            if (eq == std::string::npos) {
                flag_map[entry] = "true";
            } else {
                flag_map[entry.substr(0, eq)] = entry.substr(eq + 1);
            }
        }
        std::optional<cochain::Scenario> parsed;
        if (scenario) parsed = scenario->parsed;
        auto outcome = cochain::run_command(parsed, command, flag_map);
        *json_out = dup_string(outcome.json);
        if (!*json_out) {
            g_last_error = "out of memory";
            return CN_ERROR;
        }
        if (outcome.exit_code == 0) return CN_OK;
        if (outcome.exit_code == 3) return CN_INFEASIBLE;
        if (outcome.exit_code == 2) {
            g_last_error = outcome.json;
            return CN_INVALID;
        }
        g_last_error = outcome.json;
        return CN_ERROR;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CN_ERROR;
    }
}

char* cn_commands(void) {
    nlohmann::json names = nlohmann::json::array();
    for (const auto& name : cochain::command_names()) names.push_back(name);
    return dup_string(names.dump());
}

const char* cn_last_error(void) { return g_last_error.c_str(); }

void cn_string_free(char* s) { std::free(s); }

const char* cn_version(void) { return "0.1.0"; }

} // extern "C"
