#include "network.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "error.hpp"

namespace cochain {

Network::Network(std::vector<std::string> vertices,
                 std::vector<std::pair<std::string, std::string>> edges,
                 std::string basepoint)
    : vertices_(std::move(vertices)) {
    std::set<std::string> seen;
    for (const auto& v : vertices_) {
        require(!v.empty(), "bad_vertex", "empty vertex identifier");
        require(seen.insert(v).second, "duplicate_vertex", "duplicate vertex: " + v);
    }
    for (const auto& [from, to] : edges) {
        int a = index_of(from);
        int b = index_of(to);
        require(a != b, "self_loop", "self-loops are not supported: " + from);
        edges_.push_back({a, b, ""});
    }
    if (!basepoint.empty()) set_basepoint(basepoint);
}

bool Network::has_vertex(const std::string& name) const {
    return std::find(vertices_.begin(), vertices_.end(), name) != vertices_.end();
}

int Network::index_of(const std::string& name) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end()) fail("unknown_vertex", "unknown vertex: " + name);
    return static_cast<int>(it - vertices_.begin());
}

int Network::basepoint() const {
    require(basepoint_ >= 0, "unpointed", "network has no basepoint");
    return basepoint_;
}

void Network::set_basepoint(const std::string& name) { basepoint_ = index_of(name); }

bool Network::adjacent(int a, int b) const {
    for (const auto& e : edges_)
        if ((e.from == a && e.to == b) || (e.from == b && e.to == a)) return true;
    return false;
}

std::vector<int> Network::edges_between(int a, int b) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        if ((e.from == a && e.to == b) || (e.from == b && e.to == a))
            out.push_back(static_cast<int>(i));
    }
    return out;
}

bool Network::connected() const {
    if (vertices_.empty()) return true;
    std::vector<bool> seen(vertices_.size(), false);
    std::deque<int> queue{0};
    seen[0] = true;
    std::size_t found = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (const auto& e : edges_) {
            int other = -1;
            if (e.from == v) other = e.to;
            else if (e.to == v) other = e.from;
            if (other >= 0 && !seen[static_cast<std::size_t>(other)]) {
                seen[static_cast<std::size_t>(other)] = true;
                ++found;
                queue.push_back(other);
            }
        }
    }
    return found == vertices_.size();
}

Path make_path(const Network& net, const std::vector<std::string>& names) {
    require(!names.empty(), "path_invalid", "a path needs at least one vertex");
    Path p;
    for (const auto& name : names) p.vertices.push_back(net.index_of(name));
    for (std::size_t t = 0; t + 1 < p.vertices.size(); ++t) {
        int a = p.vertices[t], b = p.vertices[t + 1];
        bool fwd = false, found = false;
        for (const auto& e : net.edges()) {
            if (e.from == a && e.to == b) { found = true; fwd = true; break; }
            if (e.from == b && e.to == a) { found = true; }
        }
        require(found, "path_invalid",
                "no edge between " + net.name_of(a) + " and " + net.name_of(b));
        p.forward.push_back(fwd);
    }
    return p;
}

std::string connected_sum_glue_name(const Network& n1, const Network& n2) {
    return n1.name_of(n1.basepoint()) + "*" + n2.name_of(n2.basepoint());
}

Network connected_sum(const Network& n1, const Network& n2) {
    int b1 = n1.basepoint();
    int b2 = n2.basepoint();
    std::string glue = connected_sum_glue_name(n1, n2);

    std::vector<std::string> verts;
    for (int i = 0; i < static_cast<int>(n1.vertex_count()); ++i)
        if (i != b1) verts.push_back(n1.name_of(i));
    for (int i = 0; i < static_cast<int>(n2.vertex_count()); ++i)
        if (i != b2) verts.push_back(n2.name_of(i));
    verts.push_back(glue);

    std::set<std::string> unique(verts.begin(), verts.end());
    require(unique.size() == verts.size(), "duplicate_vertex",
            "connected sum requires disjoint vertex names away from the basepoints");

    std::vector<std::pair<std::string, std::string>> edges;
    auto remap1 = [&](int v) { return v == b1 ? glue : n1.name_of(v); };
    auto remap2 = [&](int v) { return v == b2 ? glue : n2.name_of(v); };
    for (const auto& e : n1.edges()) edges.emplace_back(remap1(e.from), remap1(e.to));
    for (const auto& e : n2.edges()) edges.emplace_back(remap2(e.from), remap2(e.to));

    return Network(std::move(verts), std::move(edges), glue);
}

Network contract_edge(const Network& n, const std::string& tail, const std::string& head) {
    int u = n.index_of(tail);
    int v = n.index_of(head);
    auto between = n.edges_between(u, v);
    require(between.size() == 1, "not_unique",
            "contraction requires a unique edge between " + tail + " and " + head);
    int contracted = between[0];

    std::vector<std::string> verts;
    for (int i = 0; i < static_cast<int>(n.vertex_count()); ++i)
        if (i != v) verts.push_back(n.name_of(i));

    std::vector<std::pair<std::string, std::string>> edges;
    auto remap = [&](int w) { return w == v ? tail : n.name_of(w); };
    for (std::size_t i = 0; i < n.edges().size(); ++i) {
        if (static_cast<int>(i) == contracted) continue;
        const auto& e = n.edges()[i];
        edges.emplace_back(remap(e.from), remap(e.to));
    }
    std::string basepoint;
    if (n.pointed()) basepoint = n.basepoint() == v ? tail : n.name_of(n.basepoint());
    return Network(std::move(verts), std::move(edges), basepoint);
}

SpanningTree spanning_tree(const Network& n) {
    require(n.vertex_count() > 0, "disconnected", "empty network");
    require(n.connected(), "disconnected", "network is not connected");
    SpanningTree tree;
    tree.root = n.pointed() ? n.basepoint() : 0;
    tree.parent.assign(n.vertex_count(), -1);
    tree.parent_edge.assign(n.vertex_count(), -1);
    std::vector<bool> seen(n.vertex_count(), false);
    std::vector<bool> edge_used(n.edge_count(), false);
    std::deque<int> queue{tree.root};
    seen[static_cast<std::size_t>(tree.root)] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        tree.order.push_back(v);
        for (std::size_t i = 0; i < n.edges().size(); ++i) {
            const auto& e = n.edges()[i];
            int other = -1;
            if (e.from == v) other = e.to;
            else if (e.to == v) other = e.from;
            if (other < 0) continue;
            if (!seen[static_cast<std::size_t>(other)]) {
                seen[static_cast<std::size_t>(other)] = true;
                tree.parent[static_cast<std::size_t>(other)] = v;
                tree.parent_edge[static_cast<std::size_t>(other)] = static_cast<int>(i);
                edge_used[i] = true;
                queue.push_back(other);
            }
        }
    }
    for (std::size_t i = 0; i < n.edge_count(); ++i)
        if (!edge_used[i]) tree.non_tree_edges.push_back(static_cast<int>(i));
    return tree;
}

namespace {

std::vector<int> tree_path_to_root(const SpanningTree& tree, int v) {
    std::vector<int> path{v};
    while (tree.parent[static_cast<std::size_t>(path.back())] >= 0)
        path.push_back(tree.parent[static_cast<std::size_t>(path.back())]);
    return path; // v ... root
}

} // namespace

std::vector<Path> cycle_basis(const Network& n) {
    SpanningTree tree = spanning_tree(n);
    std::vector<Path> loops;
    for (int ei : tree.non_tree_edges) {
        const Edge& e = n.edges()[static_cast<std::size_t>(ei)];
        // root -> e.from along the tree, step to e.to, then back to root.
        std::vector<int> up = tree_path_to_root(tree, e.from);   // from ... root
        std::vector<int> down = tree_path_to_root(tree, e.to);   // to ... root
        Path loop;
        for (auto it = up.rbegin(); it != up.rend(); ++it) loop.vertices.push_back(*it);
        loop.vertices.push_back(e.to);
        for (std::size_t i = 1; i < down.size(); ++i) loop.vertices.push_back(down[i]);
        for (std::size_t t = 0; t + 1 < loop.vertices.size(); ++t) {
            int a = loop.vertices[t], b = loop.vertices[t + 1];
            bool fwd = false;
            for (const auto& edge : n.edges())
                if (edge.from == a && edge.to == b) { fwd = true; break; }
            loop.forward.push_back(fwd);
        }
        loops.push_back(std::move(loop));
    }
    return loops;
}

namespace {

void extend_paths(const Network& n, int target, std::size_t max_len, Path& cur,
                  std::vector<bool>& used, std::vector<Path>& out) {
    int v = cur.vertices.back();
    if (v == target) {
        out.push_back(cur);
        // A simple path cannot revisit the target, so stop here.
        return;
    }
    if (cur.length() == max_len) return;
    // Successors in vertex order (deterministic lexicographic enumeration).
    std::vector<int> next;
    for (const auto& e : n.edges())
        if (e.from == v && !used[static_cast<std::size_t>(e.to)]) next.push_back(e.to);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    for (int w : next) {
        used[static_cast<std::size_t>(w)] = true;
        cur.vertices.push_back(w);
        cur.forward.push_back(true);
        extend_paths(n, target, max_len, cur, used, out);
        cur.vertices.pop_back();
        cur.forward.pop_back();
        used[static_cast<std::size_t>(w)] = false;
    }
}

} // namespace

std::vector<Path> enumerate_paths(const Network& n, const std::string& from,
                                  const std::string& to, std::size_t max_len) {
    require(max_len >= 1, "bad_bound", "max_len must be >= 1");
    int a = n.index_of(from);
    int b = n.index_of(to);
    std::vector<Path> out;
    Path cur;
    cur.vertices.push_back(a);
    std::vector<bool> used(n.vertex_count(), false);
    used[static_cast<std::size_t>(a)] = true;
    extend_paths(n, b, max_len, cur, used, out);
    return out;
}

} // namespace cochain
