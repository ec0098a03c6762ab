#include <doctest.h>

#include <random>
#include <set>

#include "error.hpp"
#include "network.hpp"

using namespace cochain;

namespace {

Network star(const std::string& center, const std::vector<std::string>& leaves) {
    std::vector<std::string> verts{center};
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& leaf : leaves) {
        verts.push_back(leaf);
        edges.emplace_back(center, leaf);
    }
    return Network(verts, edges, center);
}

std::size_t degree_of(const Network& n, const std::string& v) {
    int idx = n.index_of(v);
    std::size_t d = 0;
    for (const auto& e : n.edges())
        if (e.from == idx || e.to == idx) ++d;
    return d;
}

} // namespace

TEST_CASE("network construction validates vertices and edges") {
    CHECK_THROWS_WITH_AS(Network({"A", "A"}, {}), doctest::Contains("duplicate"), Error);
    CHECK_THROWS_WITH_AS(Network({"A", "B"}, {{"A", "C"}}), doctest::Contains("unknown"), Error);
    CHECK_THROWS_WITH_AS(Network({"A"}, {{"A", "A"}}), doctest::Contains("self-loop"), Error);
}

TEST_CASE("connected sum of two stars has a degree-4 vertex") {
    auto n1 = star("U1", {"U2", "U3"});
    auto n2 = star("V1", {"V2", "V3"});
    auto sum = connected_sum(n1, n2);
    CHECK(sum.vertex_count() == n1.vertex_count() + n2.vertex_count() - 1);
    CHECK(sum.edge_count() == n1.edge_count() + n2.edge_count());
    CHECK(degree_of(sum, connected_sum_glue_name(n1, n2)) == 4);
}

TEST_CASE("connected sum with the one-user network is neutral") {
    auto n = star("A", {"B", "C"});
    auto unit = Network({"P"}, {}, "P");
    auto sum = connected_sum(n, unit);
    CHECK(sum.vertex_count() == n.vertex_count());
    CHECK(sum.edge_count() == n.edge_count());
    // graph-isomorphic to the input: same degree multiset
    std::multiset<std::size_t> before, after;
    for (const auto& v : n.vertices()) before.insert(degree_of(n, v));
    for (const auto& v : sum.vertices()) after.insert(degree_of(sum, v));
    CHECK(before == after);
}

TEST_CASE("connected sum of two single edges at their heads is a 2-edge path") {
    auto n1 = Network({"A", "B"}, {{"A", "B"}}, "B");
    auto n2 = Network({"C", "D"}, {{"C", "D"}}, "C");
    auto sum = connected_sum(n1, n2);
    CHECK(sum.vertex_count() == 3);
    CHECK(sum.edge_count() == 2);
    std::string glue = connected_sum_glue_name(n1, n2);
    CHECK(degree_of(sum, glue) == 2);
    CHECK(degree_of(sum, "A") == 1);
    CHECK(degree_of(sum, "D") == 1);
}

TEST_CASE("connected sum requires basepoints") {
    auto n1 = Network({"A"}, {});
    auto n2 = Network({"B"}, {}, "B");
    CHECK_THROWS_WITH_AS(connected_sum(n1, n2), doctest::Contains("basepoint"), Error);
}

TEST_CASE("contract_edge") {
    SUBCASE("two vertices, one edge -> a single vertex") {
        auto n = Network({"A", "B"}, {{"A", "B"}});
        auto c = contract_edge(n, "A", "B");
        CHECK(c.vertex_count() == 1);
        CHECK(c.edge_count() == 0);
    }
    SUBCASE("path A->B->C contracting A->B leaves edge A->C") {
        auto n = Network({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}});
        auto c = contract_edge(n, "A", "B");
        CHECK(c.vertex_count() == 2);
        CHECK(c.edge_count() == 1);
        CHECK(c.edges()[0].from == c.index_of("A"));
        CHECK(c.edges()[0].to == c.index_of("C"));
    }
    SUBCASE("doubled edge is rejected") {
        auto n = Network({"A", "B", "C"}, {{"A", "B"}, {"B", "A"}, {"B", "C"}, {"C", "A"}});
        CHECK_THROWS_WITH_AS(contract_edge(n, "A", "B"), doctest::Contains("unique"), Error);
    }
    SUBCASE("vertex and edge counts shrink") {
        auto n = Network({"A", "B", "C", "D"}, {{"A", "B"}, {"B", "C"}, {"C", "D"}, {"D", "A"}});
        auto c = contract_edge(n, "B", "C");
        CHECK(c.vertex_count() == n.vertex_count() - 1);
        CHECK(n.edge_count() - c.edge_count() >= 1);
    }
}

TEST_CASE("cycle basis sizes follow the Euler formula") {
    SUBCASE("trees have no independent cycles") {
        auto n = Network({"A", "B", "C", "D"}, {{"A", "B"}, {"A", "C"}, {"C", "D"}}, "A");
        CHECK(cycle_basis(n).empty());
    }
    SUBCASE("a triangle has one loop") {
        auto n = Network({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}, {"C", "A"}}, "A");
        auto basis = cycle_basis(n);
        REQUIRE(basis.size() == 1);
        CHECK(basis[0].vertices.front() == basis[0].vertices.back());
    }
    SUBCASE("polygon with chords matches |E| - |V| + 1") {
        // 2n boundary vertices in a cycle plus n chords
        for (int n = 2; n <= 4; ++n) {
            std::vector<std::string> verts;
            std::vector<std::pair<std::string, std::string>> edges;
            for (int i = 0; i < 2 * n; ++i) verts.push_back("v" + std::to_string(i));
            for (int i = 0; i < 2 * n; ++i)
                edges.emplace_back(verts[i], verts[(i + 1) % (2 * n)]);
            for (int i = 0; i < n; ++i) edges.emplace_back(verts[i], verts[i + n]);
            Network net(verts, edges, verts[0]);
            CHECK(cycle_basis(net).size() == edges.size() - verts.size() + 1);
        }
    }
    SUBCASE("random connected graphs match |E| - |V| + 1") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 200; ++trial) {
            int v = 2 + static_cast<int>(rng() % 6);
            std::vector<std::string> verts;
            for (int i = 0; i < v; ++i) verts.push_back("n" + std::to_string(i));
            std::vector<std::pair<std::string, std::string>> edges;
            for (int i = 1; i < v; ++i)
                edges.emplace_back(verts[static_cast<std::size_t>(rng() % i)], verts[i]);
            int extra = static_cast<int>(rng() % 4);
            for (int i = 0; i < extra; ++i) {
                int a = static_cast<int>(rng() % v), b = static_cast<int>(rng() % v);
                if (a != b) edges.emplace_back(verts[a], verts[b]);
            }
            Network net(verts, edges, verts[0]);
            CHECK(cycle_basis(net).size() == net.edge_count() - net.vertex_count() + 1);
        }
    }
    SUBCASE("disconnected networks are rejected") {
        auto n = Network({"A", "B", "C"}, {{"A", "B"}});
        CHECK_THROWS_WITH_AS(cycle_basis(n), doctest::Contains("connected"), Error);
    }
}

TEST_CASE("enumerate_paths") {
    SUBCASE("from == to yields the trivial path") {
        auto n = Network({"A", "B"}, {{"A", "B"}});
        auto paths = enumerate_paths(n, "A", "A", 3);
        REQUIRE(paths.size() == 1);
        CHECK(paths[0].vertices.size() == 1);
        CHECK(paths[0].length() == 0);
    }
    SUBCASE("the square has two length-2 routes") {
        auto n = Network({"U1", "U2", "U3", "U4"},
                         {{"U1", "U2"}, {"U2", "U4"}, {"U1", "U3"}, {"U3", "U4"}});
        auto paths = enumerate_paths(n, "U1", "U4", 4);
        REQUIRE(paths.size() == 2);
        CHECK(paths[0].length() == 2);
        CHECK(paths[1].length() == 2);
        // deterministic lexicographic order: U1,U2,U4 before U1,U3,U4
        CHECK(paths[0].vertices[1] == n.index_of("U2"));
        CHECK(paths[1].vertices[1] == n.index_of("U3"));
    }
    SUBCASE("disconnected pair yields nothing") {
        auto n = Network({"A", "B", "C"}, {{"A", "B"}});
        CHECK(enumerate_paths(n, "A", "C", 5).empty());
    }
    SUBCASE("unknown vertices are rejected") {
        auto n = Network({"A"}, {});
        CHECK_THROWS_WITH_AS(enumerate_paths(n, "A", "Z", 2), doctest::Contains("unknown"), Error);
    }
    SUBCASE("paths are simple and respect edge direction") {
        auto n = Network({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}, {"C", "A"}});
        auto paths = enumerate_paths(n, "A", "C", 5);
        REQUIRE(paths.size() == 1); // only A->B->C; the C->A edge points the wrong way
        CHECK(paths[0].length() == 2);
    }
}

TEST_CASE("make_path validates adjacency and records direction flags") {
    auto n = Network({"A", "B", "C"}, {{"A", "B"}, {"C", "B"}});
    auto p = make_path(n, {"A", "B", "C"});
    CHECK(p.length() == 2);
    CHECK(p.forward[0] == true);   // A->B declared
    CHECK(p.forward[1] == false);  // B->C traverses C->B backwards
    CHECK_THROWS_WITH_AS(make_path(n, {"A", "C"}), doctest::Contains("no edge"), Error);
}
