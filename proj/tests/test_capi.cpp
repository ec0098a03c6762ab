// Exercises the shared-library C surface the way an external caller would.

#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "cochain_net/cochain_net.h"

namespace {

std::string run_ok(cn_scenario* sc, const char* command,
                   std::initializer_list<const char*> flags, cn_status expect = CN_OK) {
    std::vector<const char*> list(flags);
    char* json = nullptr;
    cn_status st = cn_run(sc, command, list.data(), list.size(), &json);
    CHECK(st == expect);
    REQUIRE(json != nullptr);
    std::string out(json);
    cn_string_free(json);
    return out;
}

constexpr const char* kTorsor =
    "[network]\n"
    "vertices = [\"A\", \"B\", \"C\"]\n"
    "edges = [[\"A\", \"B\"], [\"B\", \"C\"], [\"C\", \"A\"]]\n"
    "basepoint = \"A\"\n"
    "[group]\nkind = \"ext_chain\"\np = 5\nk = 1\n"
    "[keys]\nAB = 4\nBC = 3\nAC = 2\n";

} // namespace

TEST_CASE("scenario lifecycle and error reporting") {
    cn_scenario* sc = nullptr;
    CHECK(cn_scenario_parse(kTorsor, &sc) == CN_OK);
    REQUIRE(sc != nullptr);
    cn_scenario_free(sc);

    sc = nullptr;
    CHECK(cn_scenario_parse("keys = [broken\n", &sc) == CN_INVALID);
    CHECK(sc == nullptr);
    CHECK(std::strstr(cn_last_error(), "parse_error") != nullptr);

    CHECK(cn_scenario_load("/nonexistent/scenario.toml", &sc) == CN_INVALID);
    CHECK(std::strstr(cn_last_error(), "cannot open") != nullptr);
}

TEST_CASE("commands run through the C surface") {
    cn_scenario* sc = nullptr;
    REQUIRE(cn_scenario_parse(kTorsor, &sc) == CN_OK);

    auto verify = run_ok(sc, "verify-cocycle", {});
    CHECK(verify.find("\"cocycle\": true") != std::string::npos);

    auto send = run_ok(sc, "send", {"path=A,B,C", "header=0"});
    CHECK(send.find("\"matches_direct\": true") != std::string::npos);

    auto dh = run_ok(nullptr, "dh", {"p=7", "alpha=3", "seed=1"});
    CHECK(dh.find("\"agreement\": true") != std::string::npos);

    // validation failures return CN_INVALID and an error document
    auto invalid = run_ok(sc, "send", {"path=A,Z"}, CN_INVALID);
    CHECK(invalid.find("unknown_vertex") != std::string::npos);

    cn_scenario_free(sc);
}

TEST_CASE("byte-identical output across repeated runs") {
    cn_scenario* sc = nullptr;
    REQUIRE(cn_scenario_parse(kTorsor, &sc) == CN_OK);
    auto first = run_ok(sc, "trivialize", {});
    for (int i = 0; i < 3; ++i) CHECK(run_ok(sc, "trivialize", {}) == first);
    auto dh_first = run_ok(nullptr, "dh", {"p=65537", "alpha=3", "seed=9"});
    for (int i = 0; i < 3; ++i)
        CHECK(run_ok(nullptr, "dh", {"p=65537", "alpha=3", "seed=9"}) == dh_first);
    cn_scenario_free(sc);
}

TEST_CASE("command listing and version") {
    char* names = cn_commands();
    REQUIRE(names != nullptr);
    std::string list(names);
    cn_string_free(names);
    for (const char* expect : {"verify-cocycle", "kdc-session", "attack-gerbe3", "cost"})
        CHECK(list.find(expect) != std::string::npos);
    CHECK(cn_version() != nullptr);
}
