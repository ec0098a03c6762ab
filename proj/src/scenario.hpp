#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cochain.hpp"
#include "secrecy.hpp"
#include "toml_lite.hpp"

namespace cochain {

// A parsed and cross-validated scenario file. Sections are optional; each
// subcommand states which ones it needs. At most one key-schedule flavor
// ([keys], [tower], [gerbe]) may be present.
struct Scenario {
    std::uint64_t seed = 0;
    std::optional<Network> network;
    std::optional<GroupSpec> group;
    std::optional<Cochain> keys; // degree-1 over the configured group

    struct TowerSection {
        std::uint64_t p = 0;
        std::uint32_t levels = 0;
        Cochain base; // degree-1 over ext_chain(p, 1)
    };
    std::optional<TowerSection> tower;

    struct GerbeSection {
        std::uint64_t p = 0;
        Cochain keys; // degree-1 over ext_chain(p, 2)
    };
    std::optional<GerbeSection> gerbe;

    struct ConnectiveSection {
        std::uint64_t p = 0;
        Cochain c0; // degree-0 over ext_chain(p, 1)
    };
    std::optional<ConnectiveSection> connective;

    struct KdcSection {
        std::string center;
    };
    std::optional<KdcSection> kdc;

    struct SecrecySection {
        std::vector<std::string> path;
        std::vector<Distribution> plaintexts;
        std::vector<Distribution> key_dists;
    };
    std::optional<SecrecySection> secrecy;

    struct AttackSection {
        std::vector<std::string> intruders;
        std::vector<std::string> targets;
        bool publish_band = false;
    };
    std::optional<AttackSection> attack;
};

Scenario parse_scenario(const std::string& toml_text);
Scenario load_scenario(const std::string& path);

// "AB" (single-character vertices) or "A_B": the pair naming convention used
// by [keys]-style tables.
std::pair<std::string, std::string> split_pair_name(const Network& net, const std::string& name);

} // namespace cochain
