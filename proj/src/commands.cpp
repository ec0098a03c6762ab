#include "commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>

#include <json.hpp>

#include "attack.hpp"
#include "error.hpp"
#include "gerbe_tower.hpp"
#include "kdc.hpp"
#include "linkcrypt.hpp"
#include "pubkey.hpp"
#include "secrecy.hpp"

namespace cochain {

namespace {

using nlohmann::json;
using Flags = std::map<std::string, std::string>;

// --- small helpers -------------------------------------------------------

json json_rational(const Rational& r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    json out;
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max()) {
        out["num"] = static_cast<std::int64_t>(num);
    } else {
        out["num"] = num.str();
    }
    if (den <= std::numeric_limits<std::int64_t>::max()) {
        out["den"] = static_cast<std::int64_t>(den);
    } else {
        out["den"] = den.str();
    }
    return out;
}

// fixed 12-significant-digit rendering keeps float output byte-stable
double json_real(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", v);
    return std::strtod(buffer, nullptr);
}

std::string tuple_name(const Network& net, const std::vector<int>& tuple) {
    std::string out;
    for (int v : tuple) out += (out.empty() ? "" : "_") + net.name_of(v);
    return out;
}

json cochain_values(const Network& net, const Cochain& c) {
    json out = json::object();
    for (const auto& t : ascending_tuples(c.support_size(), c.degree() + 1))
        out[tuple_name(net, t)] = c.at(t).value;
    return out;
}

std::string get_flag(const Flags& flags, const std::string& key) {
    auto it = flags.find(key);
    require(it != flags.end(), "missing_flag", "the command needs --" + key);
    return it->second;
}

std::optional<std::string> maybe_flag(const Flags& flags, const std::string& key) {
    auto it = flags.find(key);
    if (it == flags.end()) return std::nullopt;
    return it->second;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        std::uint64_t v = std::stoull(text, &used, 0);
        require(used == text.size(), "parse_error", "malformed " + what + ": " + text);
        return v;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail("parse_error", "malformed " + what + ": " + text);
    }
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ','))
        if (!token.empty()) out.push_back(token);
    return out;
}

std::uint64_t resolve_seed(const std::optional<Scenario>& sc, const Flags& flags) {
    if (auto flag = maybe_flag(flags, "seed")) return parse_u64(*flag, "seed");
    if (const char* env = std::getenv("COCHAIN_NET_SEED"))
        return parse_u64(env, "COCHAIN_NET_SEED");
    return sc ? sc->seed : 0;
}

const Scenario& need_scenario(const std::optional<Scenario>& sc) {
    require(sc.has_value(), "missing_scenario", "this command needs --scenario");
    return *sc;
}

// The scenario's single schedule-flavor cochain, as a plain degree-1 cochain.
const Cochain& schedule_cochain(const Scenario& sc) {
    if (sc.keys) return *sc.keys;
    if (sc.tower) return sc.tower->base;
    if (sc.gerbe) return sc.gerbe->keys;
    fail("missing_section", "the scenario defines no key schedule ([keys]/[tower]/[gerbe])");
}

TorsorSchedule keys_schedule(const Scenario& sc) {
    require(sc.network.has_value(), "missing_section", "the scenario needs [network]");
    require(sc.keys.has_value(), "missing_section", "the scenario needs [keys]");
    return make_schedule(*sc.network, *sc.keys);
}

std::pair<std::vector<std::string>, std::vector<std::string>> attack_parties(
    const Scenario& sc, const Flags& flags) {
    std::vector<std::string> intruders;
    std::vector<std::string> targets;
    if (sc.attack) {
        intruders = sc.attack->intruders;
        targets = sc.attack->targets;
    }
    if (auto flag = maybe_flag(flags, "intruders")) intruders = split_csv(*flag);
    if (auto flag = maybe_flag(flags, "targets")) targets = split_csv(*flag);
    if (auto flag = maybe_flag(flags, "target")) targets = split_csv(*flag);
    require(!intruders.empty(), "missing_flag", "attacks need --intruders (or [attack])");
    require(targets.size() == 2, "missing_flag", "attacks need --targets A,B (or [attack])");
    return {intruders, targets};
}

bool attack_publish_band(const Scenario& sc, const Flags& flags) {
    if (auto flag = maybe_flag(flags, "publish-band")) return *flag == "true" || *flag == "1";
    return sc.attack ? sc.attack->publish_band : false;
}

std::string verdict_name(AttackVerdict v) {
    switch (v) {
        case AttackVerdict::Recovered: return "recovered";
        case AttackVerdict::Degenerate: return "degenerate";
        case AttackVerdict::Candidates: return "candidates";
    }
    return "unknown";
}

// --- subcommands ---------------------------------------------------------

CommandOutcome cmd_verify_cocycle(const Scenario& sc) {
    require(sc.network.has_value(), "missing_section", "the scenario needs [network]");
    const Cochain& keys = schedule_cochain(sc);
    auto check = is_cocycle(keys);
    json out;
    out["command"] = "verify-cocycle";
    out["cocycle"] = check.ok;
    if (check.ok) {
        out["witness"] = nullptr;
    } else {
        json names = json::array();
        for (int v : check.witness) names.push_back(sc.network->name_of(v));
        out["witness"] = names;
    }
    return {0, out.dump(2) + "\n"};
}

CommandOutcome cmd_trivialize(const Scenario& sc) {
    auto schedule = keys_schedule(sc);
    auto result = trivialize(schedule);
    json out;
    out["command"] = "trivialize";
    out["trivial"] = result.trivial;
    if (result.trivial) {
        json chain = json::object();
        for (int v = 0; v < static_cast<int>(schedule.net.vertex_count()); ++v)
            chain[schedule.net.name_of(v)] = result.chain->at({v}).value;
        out["chain"] = chain;
    } else {
        json obstructions = json::array();
        for (const auto& item : result.obstructions) {
            json loop = json::array();
            for (int v : item.loop.vertices) loop.push_back(schedule.net.name_of(v));
            obstructions.push_back({{"loop", loop}, {"holonomy", item.value.value}});
        }
        out["obstructions"] = obstructions;
    }
    return {0, out.dump(2) + "\n"};
}

CommandOutcome cmd_send(const Scenario& sc, const Flags& flags) {
    auto schedule = keys_schedule(sc);
    auto path_names = split_csv(get_flag(flags, "path"));
    Path path = make_path(schedule.net, path_names);
    GroupElement header =
        make_element(schedule.keys.spec(), parse_u64(get_flag(flags, "header"), "header"));
    auto trace = send_header(schedule, path, header);
    json out;
    out["command"] = "send";
    out["path"] = path_names;
    json hops = json::array();
    for (const auto& h : trace) hops.push_back(h.value);
    out["trace"] = hops;
    out["final"] = trace.back().value;
    GroupElement direct =
        compose(schedule.key(path.vertices.back(), path.vertices.front()), header);
    out["direct"] = direct.value;
    out["torsor"] = schedule.cocycle_ok;
    out["matches_direct"] = trace.back() == direct;
    return {0, out.dump(2) + "\n"};
}

CommandOutcome cmd_kdc_session(const Scenario& sc, const Flags& flags) {
    require(sc.network.has_value(), "missing_section", "the scenario needs [network]");
    require(sc.kdc.has_value(), "missing_section", "the scenario needs [kdc]");
    std::uint64_t seed = resolve_seed(sc, flags);
    KdcState state = [&]() {
        if (sc.keys) return make_kdc(keys_schedule(sc), sc.kdc->center);
        require(sc.group.has_value(), "missing_section",
                "the scenario needs [group] (or [keys]) for master keys");
        // master keys come from the scenario's own stream, decoupled from the
        // session seed
        return make_kdc(*sc.network, sc.kdc->center, *sc.group,
                        sc.seed ^ 0x9e3779b97f4a7c15ull);
    }();
    auto result = establish_session(state, get_flag(flags, "from"), get_flag(flags, "to"), seed);
    json out;
    out["command"] = "kdc-session";
    out["center"] = state.center();
    out["seed"] = seed;
    out["session_key"] = result.session_key.value;
    out["initiator_key"] = result.initiator_key.value;
    out["responder_key"] = result.responder_key.value;
    out["keys_mutual_inverse"] =
        compose(result.initiator_key, result.responder_key) == identity(state.spec());
    json log = json::array();
    for (const auto& record : state.log()) {
        std::string hex;
        for (auto b : record.ciphertext) {
            char buf[3];
            std::snprintf(buf, sizeof(buf), "%02x", b);
            hex += buf;
        }
        const char* purpose = record.purpose == MessagePurpose::Request ? "request"
                              : record.purpose == MessagePurpose::ReplyToInitiator
                                  ? "reply_to_initiator"
                                  : "push_to_responder";
        log.push_back({{"from", record.from},
                       {"to", record.to},
                       {"purpose", purpose},
                       {"ciphertext", hex}});
    }
    out["log"] = log;
    return {0, out.dump(2) + "\n"};
}

CommandOutcome cmd_dh(const std::optional<Scenario>& sc, const Flags& flags) {
    std::uint64_t p = parse_u64(get_flag(flags, "p"), "p");
    std::uint64_t alpha = parse_u64(get_flag(flags, "alpha"), "alpha");
    std::uint64_t seed = resolve_seed(sc, flags);
    GroupSpec spec = GroupSpec::cyclic_mul(p, alpha);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(1, spec.order() - 1);
    auto initiator = make_keypair(spec, pick(rng));
    auto responder = make_keypair(spec, pick(rng));
    GroupElement shared = dh_shared(initiator, responder.public_key);
    json out;
    out["command"] = "dh";
    out["p"] = p;
    out["alpha"] = alpha;
    out["seed"] = seed;
    out["initiator"] = {{"private", initiator.private_exp},
                        {"public", initiator.public_key.value}};
    out["responder"] = {{"private", responder.private_exp},
                        {"public", responder.public_key.value}};
    out["shared"] = shared.value;
    out["agreement"] = shared == dh_shared(responder, initiator.public_key);
    auto g = make_element(spec, alpha);
    auto recovered = discrete_log(g, initiator.public_key, spec.order());
    out["brute_force_recovered_private"] =
        recovered ? json(*recovered) : json(nullptr);
    return {0, out.dump(2) + "\n"};
}

CommandOutcome cmd_gerbe_keys(const Scenario& sc) {
    require(sc.network.has_value(), "missing_section", "the scenario needs [network]");
    require(sc.connective.has_value(), "missing_section", "the scenario needs [connective]");
    auto cs = make_connective(sc.connective->c0);
    const Network& net = *sc.network;
    int n = static_cast<int>(net.vertex_count());
    json out;
    out["command"] = "gerbe-keys";
    json keys = json::object();
    Cochain family(cs.c1.spec(), net.vertices(), 1);
    for (const auto& t : ascending_tuples(n, 2)) {
        GroupElement mine = gerbe_public_key(cs, t[0], t[1]);
        GroupElement theirs = gerbe_public_key(cs, t[1], t[0]);
        require(mine == theirs, "internal_error", "the two parties disagreed");
        keys[tuple_name(net, t)] = mine.value;
        family.set(t, mine);
    }
    out["keys"] = keys;
    json publics = json::object();
    json privates = json::object();
    for (int v = 0; v < n; ++v) {
        GroupElement lift = ext_lift(cs.c0.at({v}));
        publics[net.name_of(v)] = lift.value;
        privates[net.name_of(v)] = log_element(lift);
    }
    out["public_keys"] = publics;
    out["private_keys"] = privates;
    auto check = is_cocycle(family);
    out["chasles_holds"] = check.ok;
    if (!check.ok) {
        json names = json::array();
        for (int v : check.witness) names.push_back(net.name_of(v));
        out["chasles_witness"] = names;
    } else {
        out["chasles_witness"] = nullptr;
    }
    return {0, out.dump(2) + "\n"};
}

CommandOutcome cmd_tower_build(const Scenario& sc) {
    require(sc.network.has_value(), "missing_section", "the scenario needs [network]");
    require(sc.tower.has_value(), "missing_section", "the scenario needs [tower]");
    auto t = build_tower(*sc.network, sc.tower->p, sc.tower->levels, sc.tower->base);
    json out;
    out["command"] = "tower-build";
    out["p"] = t.p;
    out["levels"] = t.levels;
    json classifying = json::array();
    for (std::size_t k = 0; k < t.classifying.size(); ++k) {
        const Cochain& c = t.classifying[k];
        classifying.push_back({{"index", k + 1},
                               {"degree", c.degree()},
                               {"values", cochain_values(*sc.network, c)},
                               {"cocycle", is_cocycle(c).ok}});
    }
    out["classifying"] = classifying;
    return {0, out.dump(2) + "\n"};
}

CommandOutcome cmd_attack_mitm(const Scenario& sc, const Flags& flags) {
    auto schedule = keys_schedule(sc);
    auto [intruders, targets] = attack_parties(sc, flags);
    auto view = make_view(schedule, intruders);
    GroupElement key = mitm_torsor(view, targets[0], targets[1]);
    json out;
    out["command"] = "attack-mitm";
    out["verdict"] = "recovered";
    out["key"] = key.value;
    out["matches_schedule"] = key == schedule.key(targets[0], targets[1]);
    out["torsor"] = schedule.cocycle_ok;
    return {0, out.dump(2) + "\n"};
}

json attack_outcome_json(const GerbeAttackOutcome& outcome) {
    json out;
    out["verdict"] = verdict_name(outcome.verdict);
    out["key"] = outcome.key ? json(outcome.key->value) : json(nullptr);
    json candidates = json::array();
    for (const auto& x : outcome.candidates) candidates.push_back(x.value);
    out["candidates"] = candidates;
    out["degenerate_condition"] = outcome.degenerate_condition;
    out["phase_a_difference"] = outcome.phase_a_difference.value;
    return out;
}

CommandOutcome cmd_attack_gerbe3(const Scenario& sc, const Flags& flags) {
    require(sc.network.has_value(), "missing_section", "the scenario needs [network]");
    auto [intruders, targets] = attack_parties(sc, flags);
    bool banded = attack_publish_band(sc, flags);

    GerbeAttackOutcome outcome;
    GroupElement truth;
    if (sc.gerbe) {
        auto gerbe = build_gerbe(*sc.network, sc.gerbe->keys);
        auto view = make_view(gerbe, intruders, banded, /*publish_base=*/true);
        outcome = gerbe_attack_3(view, targets[0], targets[1]);
        truth = gerbe.keys.at({sc.network->index_of(targets[0]), sc.network->index_of(targets[1])});
    } else {
        auto schedule = keys_schedule(sc);
        auto view = make_view(schedule, intruders);
        if (banded) publish_band(view, coboundary(schedule.keys));
        outcome = gerbe_attack_3(view, targets[0], targets[1]);
        truth = schedule.key(targets[0], targets[1]);
    }
    json out = attack_outcome_json(outcome);
    out["command"] = "attack-gerbe3";
    out["band_published"] = banded;
    bool sound = false;
    for (const auto& x : outcome.candidates)
        if (x == truth) sound = true;
    out["true_key_in_candidates"] = sound;
    int code = outcome.verdict == AttackVerdict::Recovered ? 0 : 3;
    return {code, out.dump(2) + "\n"};
}

CommandOutcome cmd_attack_tower(const Scenario& sc, const Flags& flags) {
    require(sc.network.has_value(), "missing_section", "the scenario needs [network]");
    require(sc.tower.has_value(), "missing_section", "the scenario needs [tower]");
    auto [intruders, targets] = attack_parties(sc, flags);
    bool banded = attack_publish_band(sc, flags);
    auto t = build_tower(*sc.network, sc.tower->p, sc.tower->levels, sc.tower->base);
    auto outcome = tower_attack(t, intruders, targets[0], targets[1], banded);
    json out;
    out["command"] = "attack-tower";
    out["verdict"] = verdict_name(outcome.verdict);
    out["key"] = outcome.key ? json(outcome.key->value) : json(nullptr);
    json candidates = json::array();
    for (const auto& x : outcome.candidates) candidates.push_back(x.value);
    out["candidates"] = candidates;
    out["band_published"] = banded;
    GroupElement truth = tower_session_key(t, t.net.index_of(targets[0]),
                                           t.net.index_of(targets[1]), t.levels);
    bool sound = false;
    for (const auto& x : outcome.candidates)
        if (x == truth) sound = true;
    out["true_key_in_candidates"] = sound;
    int code = outcome.verdict == AttackVerdict::Recovered ? 0 : 3;
    return {code, out.dump(2) + "\n"};
}

PathModel secrecy_model(const Scenario& sc, const Flags& flags) {
    require(sc.group.has_value(), "missing_section", "the scenario needs [group]");
    require(sc.secrecy.has_value(), "missing_section", "the scenario needs [secrecy]");
    std::vector<std::string> path = sc.secrecy->path;
    if (auto flag = maybe_flag(flags, "path")) {
        auto override_path = split_csv(*flag);
        require(override_path.size() == path.size(), "size_mismatch",
                "--path must name as many nodes as the [secrecy] distributions cover");
        path = std::move(override_path);
    }
    std::vector<HopModel> hops;
    for (const auto& d : sc.secrecy->key_dists) hops.push_back(translation_hop(*sc.group, d));
    return make_path_model(*sc.group, std::move(path), sc.secrecy->plaintexts,
                           std::move(hops));
}

CommandOutcome cmd_secrecy_audit(const Scenario& sc, const Flags& flags) {
    auto model = secrecy_model(sc, flags);
    auto cipher = ciphertext_dist(model);
    auto verdict = perfect_secrecy_path(model);
    auto shannon = shannon_conditions(model);
    json out;
    out["command"] = "secrecy-audit";
    json dist = json::array();
    for (const auto& p : cipher.dist.probs) dist.push_back(json_rational(p));
    out["ciphertext_distribution"] = dist;
    out["consistency_mass"] = json_rational(cipher.consistency_mass);
    out["perfect_secrecy"] = verdict.perfect;
    if (verdict.witness) {
        json w;
        w["plaintexts"] = verdict.witness->plaintexts;
        w["cipher"] = verdict.witness->cipher;
        w["posterior"] = json_rational(verdict.witness->posterior);
        w["prior"] = json_rational(verdict.witness->prior);
        out["witness"] = w;
    } else {
        out["witness"] = nullptr;
    }
    out["shannon"] = {{"uniform_keys", shannon.uniform_keys},
                      {"unique_transitive", shannon.unique_transitive},
                      {"holds", shannon.holds},
                      {"secrecy_confirmed", shannon.secrecy_confirmed},
                      {"detail", shannon.detail}};
    return {0, out.dump(2) + "\n"};
}

CommandOutcome cmd_entropy_report(const Scenario& sc, const Flags& flags) {
    auto model = secrecy_model(sc, flags);
    json out;
    out["command"] = "entropy-report";
    json hops = json::array();
    for (std::size_t h = 0; h < model.hops.size(); ++h) {
        auto ident = key_equivocation_identity(model.hops[h], model.plaintexts[h]);
        hops.push_back({{"hop", h},
                        {"key_entropy", json_real(entropy(model.hops[h].key_dist))},
                        {"plaintext_entropy", json_real(entropy(model.plaintexts[h]))},
                        {"equivocation_direct", json_real(ident.direct)},
                        {"equivocation_rhs", json_real(ident.via_rhs)},
                        {"identity_residual", json_real(std::abs(ident.direct - ident.via_rhs))}});
    }
    out["hops"] = hops;
    if (model.hops.size() >= 2) {
        auto delivered = ciphertext_dist(model);
        auto report = entropy_cocycle_check(model.fiber, model.hops[0].key_dist,
                                            model.hops[1].key_dist, model.plaintexts[0],
                                            model.plaintexts[1], delivered.dist);
        out["cocycle"] = {{"h_hop1", json_real(report.h_hop1)},
                          {"h_hop2", json_real(report.h_hop2)},
                          {"product_h", json_real(report.product_h)},
                          {"additivity_residual", json_real(report.additivity_residual)},
                          {"collapsed_h", json_real(report.collapsed_h)},
                          {"collapsed_differs", report.collapsed_differs},
                          {"prop3_residual", json_real(report.prop3_residual)}};
    } else {
        out["cocycle"] = nullptr;
    }
    return {0, out.dump(2) + "\n"};
}

CommandOutcome cmd_cost(const Flags& flags) {
    std::uint64_t users = parse_u64(get_flag(flags, "users"), "users");
    std::uint64_t bits = parse_u64(get_flag(flags, "bits"), "bits");
    auto cost = brute_force_cost(users, static_cast<std::uint32_t>(bits));
    json out;
    out["command"] = "cost";
    out["users"] = users;
    out["header_bits"] = bits;
    out["operations_exact"] = cost.exact_valid ? json(cost.exact.str()) : json(nullptr);
    out["operations_log2"] = json_real(cost.log2);
    if (auto genus = maybe_flag(flags, "genus")) {
        std::uint64_t g = parse_u64(*genus, "genus");
        out["genus"] = g;
        out["holonomy_generators"] = holonomy_cost(g);
    } else {
        out["genus"] = nullptr;
        out["holonomy_generators"] = nullptr;
    }
    return {0, out.dump(2) + "\n"};
}

} // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{
        "verify-cocycle", "trivialize",    "send",         "kdc-session",
        "dh",             "gerbe-keys",    "tower-build",  "attack-mitm",
        "attack-gerbe3",  "attack-tower",  "secrecy-audit", "entropy-report",
        "cost"};
    return names;
}

CommandOutcome run_command(const std::optional<Scenario>& scenario, const std::string& command,
                           const std::map<std::string, std::string>& flags) {
    try {
        if (command == "verify-cocycle") return cmd_verify_cocycle(need_scenario(scenario));
        if (command == "trivialize") return cmd_trivialize(need_scenario(scenario));
        if (command == "send") return cmd_send(need_scenario(scenario), flags);
        if (command == "kdc-session") return cmd_kdc_session(need_scenario(scenario), flags);
        if (command == "dh") return cmd_dh(scenario, flags);
        if (command == "gerbe-keys") return cmd_gerbe_keys(need_scenario(scenario));
        if (command == "tower-build") return cmd_tower_build(need_scenario(scenario));
        if (command == "attack-mitm") return cmd_attack_mitm(need_scenario(scenario), flags);
        if (command == "attack-gerbe3") return cmd_attack_gerbe3(need_scenario(scenario), flags);
        if (command == "attack-tower") return cmd_attack_tower(need_scenario(scenario), flags);
        if (command == "secrecy-audit") return cmd_secrecy_audit(need_scenario(scenario), flags);
        if (command == "entropy-report") return cmd_entropy_report(need_scenario(scenario), flags);
        if (command == "cost") return cmd_cost(flags);
        fail("unknown_command", "unknown command: " + command);
    } catch (const Error& e) {
        json out;
        out["error"] = {{"code", e.code()}, {"message", e.what()}};
        return {2, out.dump(2) + "\n"};
    } catch (const std::exception& e) {
        json out;
        out["error"] = {{"code", "internal_error"}, {"message", e.what()}};
        return {2, out.dump(2) + "\n"};
    }
}

} // namespace cochain
