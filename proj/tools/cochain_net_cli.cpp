// cochain-net: scenario-driven front end over the C API.
//
// Exit codes: 0 success, 2 parse/validation failure, 3 attack finished
// degenerate or with more than one candidate.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cochain_net/cochain_net.h"

namespace {

struct Invocation {
    std::string command;
    std::string scenario_path;
    std::vector<std::string> flags;
};

int run(const Invocation& inv) {
    cn_scenario* scenario = nullptr;
    if (!inv.scenario_path.empty()) {
        cn_status st = cn_scenario_load(inv.scenario_path.c_str(), &scenario);
        if (st != CN_OK) {
            std::fprintf(stderr, "error: %s\n", cn_last_error());
            return static_cast<int>(st);
        }
    }
    std::vector<const char*> flags;
    flags.reserve(inv.flags.size());
    for (const auto& f : inv.flags) flags.push_back(f.c_str());

    char* json = nullptr;
    cn_status st = cn_run(scenario, inv.command.c_str(), flags.data(), flags.size(), &json);
    if (json) {
        std::fputs(json, stdout);
        cn_string_free(json);
    } else if (st != CN_OK) {
        std::fprintf(stderr, "error: %s\n", cn_last_error());
    }
    cn_scenario_free(scenario);
    return static_cast<int>(st);
}

void add_flag_option(CLI::App* cmd, Invocation& inv, const std::string& name,
                     const std::string& description) {
    auto setter = [&inv, name](const std::string& value) {
        inv.flags.push_back(name + "=" + value);
    };
    cmd->add_option_function<std::string>("--" + name, setter, description);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cochain-net: torsor/gerbe/tower key-distribution simulator"};
    app.require_subcommand(1);
    Invocation inv;

    auto add_scenario = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("--scenario", inv.scenario_path, "scenario TOML file");
        if (required) opt->required();
    };

    auto* verify = app.add_subcommand("verify-cocycle", "check the torsor law on the schedule");
    add_scenario(verify, true);
    verify->callback([&] { inv.command = "verify-cocycle"; });

    auto* triv = app.add_subcommand("trivialize", "find a trivializing 0-chain or holonomy");
    add_scenario(triv, true);
    triv->callback([&] { inv.command = "trivialize"; });

    auto* send = app.add_subcommand("send", "hop-by-hop header encryption along a path");
    add_scenario(send, true);
    add_flag_option(send, inv, "path", "comma-separated vertices, e.g. A,B,C");
    add_flag_option(send, inv, "header", "header value (decimal or 0x-hex)");
    send->callback([&] { inv.command = "send"; });

    auto* kdc = app.add_subcommand("kdc-session", "three-message KDC session with trace");
    add_scenario(kdc, true);
    add_flag_option(kdc, inv, "from", "initiator vertex");
    add_flag_option(kdc, inv, "to", "responder vertex");
    add_flag_option(kdc, inv, "seed", "session seed");
    kdc->callback([&] { inv.command = "kdc-session"; });

    auto* dh = app.add_subcommand("dh", "Diffie-Hellman torsor exchange");
    add_scenario(dh, false);
    add_flag_option(dh, inv, "p", "prime modulus");
    add_flag_option(dh, inv, "alpha", "generator of the multiplicative group");
    add_flag_option(dh, inv, "seed", "keygen seed");
    dh->callback([&] { inv.command = "dh"; });

    auto* gerbe_keys = app.add_subcommand("gerbe-keys", "public keys from a connective structure");
    add_scenario(gerbe_keys, true);
    gerbe_keys->callback([&] { inv.command = "gerbe-keys"; });

    auto* tower = app.add_subcommand("tower-build", "classifying cocycle sequence of a tower");
    add_scenario(tower, true);
    tower->callback([&] { inv.command = "tower-build"; });

    auto* attack = app.add_subcommand("attack", "adversarial algorithms");
    attack->require_subcommand(1);
    for (const char* kind : {"mitm", "gerbe3", "tower"}) {
        auto* sub = attack->add_subcommand(kind);
        add_scenario(sub, true);
        add_flag_option(sub, inv, "intruders", "comma-separated intruder vertices");
        add_flag_option(sub, inv, "targets", "the two target vertices, e.g. D,E");
        add_flag_option(sub, inv, "target", "alias for --targets");
        add_flag_option(sub, inv, "publish-band", "true/false: classifying band is public");
        sub->callback([&, kind] { inv.command = std::string("attack-") + kind; });
    }

    auto* audit = app.add_subcommand("secrecy-audit", "exact ciphertext/perfect-secrecy audit");
    add_scenario(audit, true);
    add_flag_option(audit, inv, "path", "override the audited path's node names");
    audit->callback([&] { inv.command = "secrecy-audit"; });

    auto* entropy = app.add_subcommand("entropy-report", "entropy identities and cocycle check");
    add_scenario(entropy, true);
    entropy->callback([&] { inv.command = "entropy-report"; });

    auto* cost = app.add_subcommand("cost", "brute-force cost of the link-to-link network");
    add_flag_option(cost, inv, "users", "participant count N");
    add_flag_option(cost, inv, "bits", "header width n in bits");
    add_flag_option(cost, inv, "genus", "surface genus for the holonomy comparison");
    cost->callback([&] { inv.command = "cost"; });

    CLI11_PARSE(app, argc, argv);
    return run(inv);
}
