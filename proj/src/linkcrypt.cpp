#include "linkcrypt.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"

namespace cochain {

namespace {

void check_path(const TorsorSchedule& s, const Path& path) {
    require(!path.vertices.empty(), "path_invalid", "empty path");
    int n = static_cast<int>(s.net.vertex_count());
    for (int v : path.vertices)
        require(v >= 0 && v < n, "path_invalid", "path vertex outside the network");
    for (std::size_t t = 0; t + 1 < path.vertices.size(); ++t)
        require(s.net.adjacent(path.vertices[t], path.vertices[t + 1]), "path_invalid",
                "path steps must follow edges of the network");
}

} // namespace

std::vector<GroupElement> send_header(const TorsorSchedule& s, const Path& path,
                                      const GroupElement& header) {
    check_path(s, path);
    require(header.spec == s.keys.spec(), "spec_mismatch",
            "header must live in the schedule's fiber group");
    std::vector<GroupElement> trace{header};
    for (std::size_t t = 0; t + 1 < path.vertices.size(); ++t) {
        const GroupElement key = s.key(path.vertices[t + 1], path.vertices[t]);
        trace.push_back(compose(key, trace.back()));
    }
    return trace;
}

GroupElement holonomy_map(const TorsorSchedule& s, const Cochain& conn, const Path& path) {
    check_path(s, path);
    require(conn.degree() == 0, "bad_degree", "a connection is a degree-0 chain");
    require(conn.support() == s.net.vertices(), "spec_mismatch",
            "connection support must match the network");
    require(conn.spec() == s.keys.spec(), "spec_mismatch",
            "connection values must live in the key group");
    GroupElement acc = identity(s.keys.spec());
    for (std::size_t t = 0; t + 1 < path.vertices.size(); ++t) {
        int src = path.vertices[t];
        int dst = path.vertices[t + 1];
        GroupElement step =
            compose(compose(inverse(conn.at({dst})), s.key(dst, src)), conn.at({src}));
        acc = compose(step, acc);
    }
    return acc;
}

GenusExpansion expand_genus_keys(const std::vector<GroupElement>& generators,
                                 const std::vector<std::string>& boundary,
                                 const std::vector<std::string>& interior) {
    std::size_t n = generators.size();
    require(n >= 1, "size_mismatch", "need at least one holonomy generator");
    require(boundary.size() == 2 * n, "size_mismatch",
            "a genus-n polygon has 2n boundary vertices");
    GroupSpec spec = generators[0].spec;
    for (const auto& g : generators)
        require(g.spec == spec, "spec_mismatch", "generators must share one group");

    std::vector<std::string> verts = boundary;
    verts.insert(verts.end(), interior.begin(), interior.end());
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i + 1 < boundary.size(); ++i)
        edges.emplace_back(boundary[i], boundary[i + 1]);
    if (boundary.size() >= 2) edges.emplace_back(boundary.back(), boundary.front());
    for (const auto& m : interior) edges.emplace_back(boundary.front(), m);
    Network net(verts, edges, boundary.front());

    // Consecutive boundary keys: the generators, then identity padding.
    std::size_t bcount = boundary.size();
    std::vector<GroupElement> consecutive;
    for (std::size_t i = 0; i + 1 < bcount; ++i)
        consecutive.push_back(i < n ? generators[i] : identity(spec));

    // Prefix products turn the recurrence u_ij = u_{i,j-1} ∘ u_{j-1,j} into
    // u_ij = prefix_i^{-1} ∘ prefix_j on the whole boundary block.
    std::vector<GroupElement> prefix{identity(spec)};
    for (const auto& c : consecutive) prefix.push_back(compose(prefix.back(), c));

    Cochain keys(spec, net.vertices(), 1);
    int total = static_cast<int>(verts.size());
    for (int i = 0; i < total; ++i) {
        for (int j = i + 1; j < total; ++j) {
            GroupElement value = identity(spec);
            if (j < static_cast<int>(bcount)) {
                value = compose(inverse(prefix[static_cast<std::size_t>(i)]),
                                prefix[static_cast<std::size_t>(j)]);
            }
            keys.set({i, j}, value);
        }
    }

    GenusExpansion out;
    out.schedule = make_schedule(net, keys);
    out.generator_count = n;
    out.table_entries = static_cast<std::size_t>(total) * (total - 1) / 2;
    out.boundary_cocycle = true;
    for (const auto& t : ascending_tuples(static_cast<int>(bcount), 3)) {
        if (!(compose(keys.at({t[0], t[1]}), keys.at({t[1], t[2]})) == keys.at({t[0], t[2]})))
            out.boundary_cocycle = false;
    }
    return out;
}

TorsorSchedule schedule_connected_sum(const TorsorSchedule& s1, const TorsorSchedule& s2) {
    require(s1.keys.spec() == s2.keys.spec(), "spec_mismatch",
            "connected sum needs isomorphic fibers (equal key groups)");
    Network net = connected_sum(s1.net, s2.net);
    int b1 = s1.net.basepoint();
    int b2 = s2.net.basepoint();
    int glue = net.index_of(connected_sum_glue_name(s1.net, s2.net));

    // result index -> (side, original index); the glue vertex maps to both
    // basepoints.
    auto side_of = [&](int v) -> std::pair<int, int> {
        if (v == glue) return {0, -1};
        const std::string& name = net.name_of(v);
        if (s1.net.has_vertex(name)) return {1, s1.net.index_of(name)};
        return {2, s2.net.index_of(name)};
    };

    Cochain keys(s1.keys.spec(), net.vertices(), 1);
    int total = static_cast<int>(net.vertex_count());
    for (int i = 0; i < total; ++i) {
        for (int j = i + 1; j < total; ++j) {
            auto [si, oi] = side_of(i);
            auto [sj, oj] = side_of(j);
            GroupElement value = identity(s1.keys.spec());
            if (si == 1 && sj == 1) value = s1.key(oi, oj);
            else if (si == 2 && sj == 2) value = s2.key(oi, oj);
            else if (si == 1 && sj == 2) value = compose(s1.key(oi, b1), s2.key(b2, oj));
            else if (si == 2 && sj == 1) value = compose(s2.key(oi, b2), s1.key(b1, oj));
            else if (si == 0) value = (sj == 1) ? s1.key(b1, oj) : s2.key(b2, oj);
            else if (sj == 0) value = (si == 1) ? s1.key(oi, b1) : s2.key(oi, b2);
            keys.set({i, j}, value);
        }
    }
    return make_schedule(net, keys);
}

TorsorSchedule schedule_contract(const TorsorSchedule& s, const std::string& tail,
                                 const std::string& head) {
    int u = s.net.index_of(tail);
    int v = s.net.index_of(head);
    Network net = contract_edge(s.net, tail, head); // validates uniqueness
    GroupElement through = s.key(u, v);

    // Pairs {tail, W} that gained a rerouted edge take the recomposed key.
    std::set<int> rerouted;
    for (const auto& e : s.net.edges()) {
        int other = -1;
        if (e.from == v && e.to != u) other = e.to;
        if (e.to == v && e.from != u) other = e.from;
        if (other >= 0) rerouted.insert(other);
    }

    Cochain keys(s.keys.spec(), net.vertices(), 1);
    int total = static_cast<int>(net.vertex_count());
    for (int i = 0; i < total; ++i) {
        for (int j = i + 1; j < total; ++j) {
            int oi = s.net.index_of(net.name_of(i));
            int oj = s.net.index_of(net.name_of(j));
            GroupElement value = s.key(oi, oj);
            if (oi == u && rerouted.count(oj)) value = compose(through, s.key(v, oj));
            if (oj == u && rerouted.count(oi)) value = compose(s.key(oi, v), inverse(through));
            keys.set({i, j}, value);
        }
    }
    return make_schedule(net, keys);
}

namespace {

void check_linear(const TorsorSchedule& s) {
    require(s.keys.spec().kind == GroupKind::MatGL, "not_linear",
            "tensor/dual schedules need mat_gl keys");
}

} // namespace

TorsorSchedule tensor_schedule(const TorsorSchedule& s1, const TorsorSchedule& s2) {
    check_linear(s1);
    check_linear(s2);
    require(s1.net.vertices() == s2.net.vertices(), "spec_mismatch",
            "tensor needs schedules over the same network");
    GroupSpec big = GroupSpec::mat_gl(s1.keys.spec().n * s2.keys.spec().n);
    Cochain keys(big, s1.net.vertices(), 1);
    for (const auto& t : ascending_tuples(static_cast<int>(s1.net.vertex_count()), 2))
        keys.set(t, mat_kronecker(s1.keys.at(t), s2.keys.at(t)));
    return make_schedule(s1.net, keys);
}

TorsorSchedule dual_schedule(const TorsorSchedule& s) {
    check_linear(s);
    Cochain keys(s.keys.spec(), s.net.vertices(), 1);
    for (const auto& t : ascending_tuples(static_cast<int>(s.net.vertex_count()), 2))
        keys.set(t, inverse(mat_transpose(s.keys.at(t))));
    return make_schedule(s.net, keys);
}

namespace {

// PRESENT S-box, applied to each nibble of the half-block.
constexpr std::uint8_t kSbox[16] = {0xC, 0x5, 0x6, 0xB, 0x9, 0x0, 0xA, 0xD,
                                    0x3, 0xE, 0xF, 0x8, 0x4, 0x7, 0x1, 0x2};

std::uint64_t half_mask(std::uint32_t half) {
    return (half == 64) ? ~0ull : ((1ull << half) - 1);
}

std::uint64_t round_function(std::uint64_t right, std::uint64_t key, std::uint32_t half) {
    std::uint64_t mask = half_mask(half);
    std::uint64_t x = (right ^ key) & mask;
    x = ((x << 1) | (x >> (half - 1))) & mask; // rotate left by 1 within the half
    std::uint64_t out = 0;
    for (std::uint32_t nib = 0; nib * 4 < half; ++nib)
        out |= static_cast<std::uint64_t>(kSbox[(x >> (nib * 4)) & 0xF]) << (nib * 4);
    return out & mask;
}

std::uint64_t feistel_run(const FeistelKey& k, std::uint64_t block, bool reverse) {
    std::uint32_t half = k.width / 2;
    std::uint64_t mask = half_mask(half);
    std::uint64_t left = (block >> half) & mask;
    std::uint64_t right = block & mask;
    std::size_t rounds = k.round_keys.size();
    for (std::size_t r = 0; r < rounds; ++r) {
        std::uint64_t key = k.round_keys[reverse ? rounds - 1 - r : r];
        std::uint64_t next_left = right;
        std::uint64_t next_right = (left ^ round_function(right, key, half)) & mask;
        left = next_left;
        right = next_right;
    }
    // the halves swap after the last round
    return (right << half) | left;
}

} // namespace

FeistelKey make_feistel_key(std::uint32_t width, std::vector<std::uint64_t> round_keys) {
    require(width >= 2 && width <= 64 && width % 2 == 0, "size_mismatch",
            "feistel block width must be even and within 2..64");
    std::uint64_t mask = half_mask(width / 2);
    for (auto& k : round_keys) k &= mask;
    return {width, std::move(round_keys)};
}

std::uint64_t feistel_encrypt(const FeistelKey& k, std::uint64_t block) {
    return feistel_run(k, block, false);
}

std::uint64_t feistel_decrypt(const FeistelKey& k, std::uint64_t block) {
    return feistel_run(k, block, true);
}

std::uint64_t BitMatrix::apply(std::uint64_t v) const {
    std::uint64_t out = 0;
    for (std::uint32_t i = 0; i < n; ++i)
        out |= static_cast<std::uint64_t>(__builtin_parityll(rows[i] & v)) << i;
    return out;
}

BitMatrix hill_recover_key(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs,
                           std::uint32_t n) {
    require(n >= 1 && n <= 64, "size_mismatch", "hill dimension must be within 1..64");
    // Row i of M solves <row_i, p_t> = bit i of c_t for every pair t; all n
    // systems share the coefficient matrix built from the plaintexts.
    std::vector<std::uint64_t> coeff;
    std::vector<std::uint64_t> rhs; // bit i of rhs[t] = target for system i
    for (const auto& [p, c] : pairs) {
        coeff.push_back(p);
        rhs.push_back(c);
    }
    std::size_t m = coeff.size();
    std::vector<std::uint64_t> mat = coeff;
    std::vector<std::uint64_t> aug = rhs;
    std::uint32_t rank = 0;
    std::vector<int> pivot_row(n, -1);
    for (std::uint32_t col = 0; col < n && rank < m; ++col) {
        std::size_t sel = m;
        for (std::size_t r = rank; r < m; ++r)
            if ((mat[r] >> col) & 1) { sel = r; break; }
        if (sel == m) continue;
        std::swap(mat[rank], mat[sel]);
        std::swap(aug[rank], aug[sel]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r != rank && ((mat[r] >> col) & 1)) {
                mat[r] ^= mat[rank];
                aug[r] ^= aug[rank];
            }
        }
        pivot_row[col] = static_cast<int>(rank);
        ++rank;
    }
    for (std::size_t r = rank; r < m; ++r)
        require(aug[r] == 0, "inconsistent_pairs",
                "no linear map is consistent with the given pairs");
    require(rank == n, "underdetermined", "plaintexts do not span the space");

    BitMatrix out{n, std::vector<std::uint64_t>(n, 0)};
    for (std::uint32_t col = 0; col < n; ++col) {
        std::uint64_t solution = aug[static_cast<std::size_t>(pivot_row[col])];
        // bit i of `solution` is M(i, col)
        for (std::uint32_t i = 0; i < n; ++i)
            if ((solution >> i) & 1) out.rows[i] |= 1ull << col;
    }
    return out;
}

} // namespace cochain
