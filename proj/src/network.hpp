#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cochain {

struct Edge {
    int from = -1;
    int to = -1;
    std::string label;
};

// Finite directed multigraph of users. Vertex order is declaration order and
// fixes all tie-breaking downstream (spanning trees, path enumeration).
// Self-loops are rejected; the contraction rule has no meaning for them.
class Network {
public:
    Network() = default;
    Network(std::vector<std::string> vertices,
            std::vector<std::pair<std::string, std::string>> edges,
            std::string basepoint = "");

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(const std::string& name) const;
    int index_of(const std::string& name) const; // fails with unknown_vertex
    const std::string& name_of(int index) const { return vertices_[static_cast<std::size_t>(index)]; }

    bool pointed() const { return basepoint_ >= 0; }
    int basepoint() const; // fails with unpointed
    void set_basepoint(const std::string& name);

    // Adjacent in the underlying undirected graph.
    bool adjacent(int a, int b) const;
    bool connected() const;

    // Edges between the unordered pair {a,b}, in declaration order.
    std::vector<int> edges_between(int a, int b) const;

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    int basepoint_ = -1;
};

// A groupoid path: vertex sequence with consecutive vertices adjacent in the
// underlying graph; forward[t] records whether step t follows an edge in its
// declared orientation (false = formal inverse).
struct Path {
    std::vector<int> vertices;
    std::vector<bool> forward;

    std::size_t length() const { return forward.size(); } // number of steps
};

Path make_path(const Network& net, const std::vector<std::string>& names);

// Pointed connected sum: vertex sets minus the two basepoints plus a fresh
// glue vertex inheriting all their incident edges. Vertex names outside the
// basepoints must be disjoint.
Network connected_sum(const Network& n1, const Network& n2);
std::string connected_sum_glue_name(const Network& n1, const Network& n2);

// Contract the unique edge between two vertices: the head vertex disappears
// and every edge incident to it is rerouted to the tail.
Network contract_edge(const Network& n, const std::string& tail, const std::string& head);

struct SpanningTree {
    int root = -1;
    std::vector<int> parent;      // -1 at root
    std::vector<int> parent_edge; // edge index into Network::edges(), -1 at root
    std::vector<int> order;       // BFS visit order
    std::vector<int> non_tree_edges;
};

SpanningTree spanning_tree(const Network& n); // fails with disconnected

// One fundamental loop per non-tree edge: root -> u (tree path), the non-tree
// edge u -> v, then v -> root. Count is |E| - |V| + 1 for connected networks.
std::vector<Path> cycle_basis(const Network& n);

// All simple directed paths from -> to with at most max_len steps, in
// lexicographic vertex order. from == to yields the trivial path.
std::vector<Path> enumerate_paths(const Network& n, const std::string& from,
                                  const std::string& to, std::size_t max_len);

} // namespace cochain
