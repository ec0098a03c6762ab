#include "scenario.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"

namespace cochain {

namespace {

GroupSpec parse_group(const TomlValue& section) {
    const std::string& kind = section.at("kind").as_string();
    auto get_u64 = [&](const char* key) {
        std::int64_t v = section.at(key).as_integer();
        require(v >= 0, "parse_error", std::string("negative ") + key + " in [group]");
        return static_cast<std::uint64_t>(v);
    };
    if (kind == "cyclic_mul") {
        std::uint64_t generator = section.has("generator") ? get_u64("generator") : 0;
        return GroupSpec::cyclic_mul(get_u64("p"), generator);
    }
    if (kind == "cyclic_add") {
        std::uint64_t generator = section.has("generator") ? get_u64("generator") : 1;
        return GroupSpec::cyclic_add(get_u64("m"), generator);
    }
    if (kind == "xor_vec") return GroupSpec::xor_vec(static_cast<std::uint32_t>(get_u64("n")));
    if (kind == "mat_gl") return GroupSpec::mat_gl(static_cast<std::uint32_t>(get_u64("n")));
    if (kind == "ext_chain") {
        std::uint64_t generator = section.has("generator") ? get_u64("generator") : 1;
        return GroupSpec::ext_chain(get_u64("p"), static_cast<std::uint32_t>(get_u64("k")),
                                    generator);
    }
    fail("parse_error", "unknown group kind '" + kind + "'");
}

Network parse_network(const TomlValue& section) {
    std::vector<std::string> vertices = section.at("vertices").string_array();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : section.at("edges").as_array()) {
        auto pair = e.string_array();
        require(pair.size() == 2, "parse_error",
                "line " + std::to_string(e.line) + ": an edge is a [from, to] pair");
        edges.emplace_back(pair[0], pair[1]);
    }
    std::string basepoint;
    if (section.has("basepoint")) basepoint = section.at("basepoint").as_string();
    return Network(std::move(vertices), std::move(edges), basepoint);
}

Cochain parse_pair_table(const TomlValue& table, const Network& net, const GroupSpec& spec) {
    Cochain keys(spec, net.vertices(), 1);
    for (const auto& [name, value] : table.table) {
        auto [from, to] = split_pair_name(net, name);
        std::int64_t raw = value.as_integer();
        require(raw >= 0, "parse_error", "negative key value for " + name);
        keys.set({net.index_of(from), net.index_of(to)},
                 make_element(spec, static_cast<std::uint64_t>(raw)));
    }
    std::vector<std::string> missing;
    for (const auto& t : ascending_tuples(static_cast<int>(net.vertex_count()), 2))
        if (!keys.has(t)) missing.push_back(net.name_of(t[0]) + "-" + net.name_of(t[1]));
    if (!missing.empty()) {
        std::string list;
        for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
        fail("missing_key", "key table is missing pairs: " + list);
    }
    return keys;
}

Distribution parse_distribution(const TomlValue& row, std::size_t want) {
    if (row.kind == TomlValue::Kind::String) {
        require(row.as_string() == "uniform", "parse_error",
                "line " + std::to_string(row.line) +
                    ": distributions are \"uniform\" or arrays of rationals");
        return uniform_distribution(want);
    }
    std::vector<Rational> probs;
    for (const auto& entry : row.as_array()) {
        if (entry.kind == TomlValue::Kind::Integer) {
            probs.emplace_back(entry.as_integer());
            continue;
        }
        const std::string& text = entry.as_string();
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) {
                probs.emplace_back(boost::multiprecision::cpp_int(text));
            } else {
                require(slash > 0 && slash + 1 < text.size(), "parse_error",
                        "line " + std::to_string(entry.line) + ": rationals look like \"3/4\"");
                probs.emplace_back(
                    Rational(boost::multiprecision::cpp_int(text.substr(0, slash)),
                             boost::multiprecision::cpp_int(text.substr(slash + 1))));
            }
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail("parse_error",
                 "line " + std::to_string(entry.line) + ": malformed rational '" + text + "'");
        }
    }
    require(probs.size() == want, "size_mismatch",
            "line " + std::to_string(row.line) + ": expected " + std::to_string(want) +
                " probabilities");
    return make_distribution(std::move(probs));
}

} // namespace

std::pair<std::string, std::string> split_pair_name(const Network& net,
                                                    const std::string& name) {
    auto underscore = name.find('_');
    if (underscore != std::string::npos) {
        std::string from = name.substr(0, underscore);
        std::string to = name.substr(underscore + 1);
        require(net.has_vertex(from) && net.has_vertex(to), "unknown_vertex",
                "key name '" + name + "' does not match two vertices");
        return {from, to};
    }
    require(name.size() == 2, "parse_error",
            "key name '" + name +
                "' must be two single-character vertices or use the A_B form");
    std::string from(1, name[0]);
    std::string to(1, name[1]);
    require(net.has_vertex(from) && net.has_vertex(to), "unknown_vertex",
            "key name '" + name + "' does not match two vertices");
    return {from, to};
}

Scenario parse_scenario(const std::string& toml_text) {
    TomlValue root = parse_toml(toml_text);
    Scenario sc;
    if (root.has("seed")) {
        std::int64_t seed = root.at("seed").as_integer();
        require(seed >= 0, "parse_error", "seed must be nonnegative");
        sc.seed = static_cast<std::uint64_t>(seed);
    }
    if (root.has("network")) sc.network = parse_network(root.at("network"));
    if (root.has("group")) sc.group = parse_group(root.at("group"));

    int flavors = 0;
    if (root.has("keys")) ++flavors;
    if (root.has("tower")) ++flavors;
    if (root.has("gerbe")) ++flavors;
    require(flavors <= 1, "parse_error",
            "a scenario carries at most one key-schedule flavor ([keys], [tower] or [gerbe])");

    if (root.has("keys")) {
        require(sc.network && sc.group, "parse_error",
                "[keys] needs both [network] and [group]");
        sc.keys = parse_pair_table(root.at("keys"), *sc.network, *sc.group);
    }
    if (root.has("tower")) {
        require(sc.network.has_value(), "parse_error", "[tower] needs [network]");
        const TomlValue& section = root.at("tower");
        Scenario::TowerSection tower;
        tower.p = static_cast<std::uint64_t>(section.at("p").as_integer());
        tower.levels = static_cast<std::uint32_t>(section.at("levels").as_integer());
        tower.base = parse_pair_table(section.at("base"), *sc.network,
                                      GroupSpec::ext_chain(tower.p, 1));
        sc.tower = std::move(tower);
    }
    if (root.has("gerbe")) {
        require(sc.network.has_value(), "parse_error", "[gerbe] needs [network]");
        const TomlValue& section = root.at("gerbe");
        Scenario::GerbeSection gerbe;
        gerbe.p = static_cast<std::uint64_t>(section.at("p").as_integer());
        gerbe.keys = parse_pair_table(section.at("keys"), *sc.network,
                                      GroupSpec::ext_chain(gerbe.p, 2));
        sc.gerbe = std::move(gerbe);
    }
    if (root.has("connective")) {
        require(sc.network.has_value(), "parse_error", "[connective] needs [network]");
        const TomlValue& section = root.at("connective");
        Scenario::ConnectiveSection conn;
        conn.p = static_cast<std::uint64_t>(section.at("p").as_integer());
        GroupSpec base = GroupSpec::ext_chain(conn.p, 1);
        Cochain c0(base, sc.network->vertices(), 0);
        for (const auto& [name, value] : section.at("c0").table) {
            require(sc.network->has_vertex(name), "unknown_vertex",
                    "[connective] names unknown vertex " + name);
            std::int64_t raw = value.as_integer();
            require(raw >= 0, "parse_error", "negative chain value for " + name);
            c0.set({sc.network->index_of(name)}, make_element(base, static_cast<std::uint64_t>(raw)));
        }
        require(c0.total(), "missing_key", "[connective] must assign c0 at every vertex");
        conn.c0 = std::move(c0);
        sc.connective = std::move(conn);
    }
    if (root.has("kdc")) {
        Scenario::KdcSection kdc;
        kdc.center = root.at("kdc").at("center").as_string();
        require(sc.network && sc.network->has_vertex(kdc.center), "unknown_vertex",
                "[kdc] center must be a network vertex");
        sc.kdc = std::move(kdc);
    }
    if (root.has("secrecy")) {
        require(sc.group.has_value(), "parse_error", "[secrecy] needs [group]");
        const TomlValue& section = root.at("secrecy");
        Scenario::SecrecySection sec;
        sec.path = section.at("path").string_array();
        require(sec.path.size() >= 2, "path_invalid", "[secrecy] paths need two nodes");
        std::size_t hops = sec.path.size() - 1;
        std::size_t e = sc.group->order();
        const auto& plains = section.at("plaintexts").as_array();
        require(plains.size() == hops, "size_mismatch",
                "[secrecy] needs one plaintext distribution per sending node");
        for (const auto& row : plains) sec.plaintexts.push_back(parse_distribution(row, e));
        const auto& keys = section.at("keys").as_array();
        require(keys.size() == hops, "size_mismatch",
                "[secrecy] needs one key distribution per hop");
        for (const auto& row : keys) sec.key_dists.push_back(parse_distribution(row, e));
        sc.secrecy = std::move(sec);
    }
    if (root.has("attack")) {
        const TomlValue& section = root.at("attack");
        Scenario::AttackSection attack;
        if (section.has("intruders")) attack.intruders = section.at("intruders").string_array();
        if (section.has("targets")) attack.targets = section.at("targets").string_array();
        if (section.has("publish_band")) attack.publish_band = section.at("publish_band").as_boolean();
        sc.attack = std::move(attack);
    }
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "io_error", "cannot open scenario file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

} // namespace cochain
