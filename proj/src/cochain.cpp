#include "cochain.hpp"

#include <algorithm>

#include "error.hpp"

namespace cochain {

namespace {

// Sorts the tuple, returns whether the permutation applied was odd.
std::pair<std::vector<int>, bool> canonical_tuple(std::vector<int> t) {
    bool odd = false;
    for (std::size_t i = 1; i < t.size(); ++i) {
        for (std::size_t j = i; j > 0 && t[j - 1] > t[j]; --j) {
            std::swap(t[j - 1], t[j]);
            odd = !odd;
        }
    }
    for (std::size_t i = 1; i < t.size(); ++i)
        require(t[i - 1] != t[i], "bad_tuple", "tuple indices must be distinct");
    return {std::move(t), odd};
}

} // namespace

std::vector<std::vector<int>> ascending_tuples(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k <= 0 || k > n) return out;
    std::vector<int> tuple(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) tuple[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(tuple);
        int pos = k - 1;
        while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        ++tuple[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            tuple[static_cast<std::size_t>(i)] = tuple[static_cast<std::size_t>(i - 1)] + 1;
    }
    return out;
}

Cochain::Cochain(GroupSpec spec, std::vector<std::string> support, int degree)
    : spec_(std::move(spec)), support_(std::move(support)), degree_(degree) {
    require(degree >= 0 && degree <= 4, "degree_too_high", "cochain degree must be in 0..4");
    require(degree + 1 <= static_cast<int>(support_.size()), "not_enough_vertices",
            "degree-" + std::to_string(degree) + " cochains need " +
                std::to_string(degree + 1) + " distinct vertices");
    if (degree >= 2 && !spec_.abelian()) explicit_ = true;
}

void Cochain::set(const std::vector<int>& tuple, const GroupElement& value) {
    require(static_cast<int>(tuple.size()) == degree_ + 1, "bad_tuple",
            "tuple size must be degree+1");
    require(value.spec == spec_, "spec_mismatch", "value spec differs from cochain spec");
    for (int v : tuple)
        require(v >= 0 && v < support_size(), "bad_tuple", "vertex index out of range");
    if (explicit_) {
        auto [sorted, odd] = canonical_tuple(tuple); // distinctness check
        (void)sorted;
        (void)odd;
        values_[tuple] = value;
        return;
    }
    auto [sorted, odd] = canonical_tuple(tuple);
    values_[sorted] = odd ? inverse(value) : value;
}

void Cochain::set_explicit(const std::vector<int>& tuple, const GroupElement& value) {
    require(explicit_, "bad_tuple", "explicit storage only for non-abelian degree >= 2");
    values_[tuple] = value;
}

GroupElement Cochain::at(const std::vector<int>& tuple) const {
    require(static_cast<int>(tuple.size()) == degree_ + 1, "bad_tuple",
            "tuple size must be degree+1");
    if (explicit_) {
        auto it = values_.find(tuple);
        require(it != values_.end(), "missing_key", "no value stored for tuple");
        return it->second;
    }
    auto [sorted, odd] = canonical_tuple(tuple);
    auto it = values_.find(sorted);
    require(it != values_.end(), "missing_key", "no value stored for tuple");
    return odd ? inverse(it->second) : it->second;
}

bool Cochain::has(const std::vector<int>& tuple) const {
    if (explicit_) return values_.count(tuple) > 0;
    auto [sorted, odd] = canonical_tuple(tuple);
    (void)odd;
    return values_.count(sorted) > 0;
}

bool Cochain::total() const {
    for (const auto& t : ascending_tuples(support_size(), degree_ + 1))
        if (!values_.count(t)) return false;
    return true;
}

void Cochain::fill_identity() {
    GroupElement id = identity(spec_);
    if (explicit_) {
        std::vector<std::vector<int>> perms;
        for (const auto& t : ascending_tuples(support_size(), degree_ + 1)) {
            std::vector<int> perm = t;
            std::sort(perm.begin(), perm.end());
            do {
                values_[perm] = id;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        return;
    }
    for (const auto& t : ascending_tuples(support_size(), degree_ + 1)) values_[t] = id;
}

GroupElement coboundary_at(const Cochain& c, const std::vector<int>& tuple) {
    require(static_cast<int>(tuple.size()) == c.degree() + 2, "bad_tuple",
            "coboundary tuple size must be degree+2");
    int k = c.degree();
    if (k == 0) {
        // (δu)(i,j) = u_i ∘ u_j^{-1}
        return compose(c.at({tuple[0]}), inverse(c.at({tuple[1]})));
    }
    if (k == 1) {
        // (δu)(i,j,l) = u_li ∘ u_ij ∘ u_jl (valid for non-abelian too)
        int i = tuple[0], j = tuple[1], l = tuple[2];
        return compose(compose(c.at({l, i}), c.at({i, j})), c.at({j, l}));
    }
    require(c.spec().abelian(), "non_abelian_degree",
            "coboundary above degree 1 requires an abelian group");
    // Alternating face sum: Σ_t (−1)^t u(tuple minus entry t).
    GroupElement acc = identity(c.spec());
    for (std::size_t t = 0; t < tuple.size(); ++t) {
        std::vector<int> face;
        face.reserve(tuple.size() - 1);
        for (std::size_t s = 0; s < tuple.size(); ++s)
            if (s != t) face.push_back(tuple[s]);
        GroupElement v = c.at(face);
        acc = compose(acc, (t % 2 == 0) ? v : inverse(v));
    }
    return acc;
}

Cochain coboundary(const Cochain& c) {
    require(c.degree() <= 3, "degree_too_high", "coboundary input degree must be <= 3");
    if (c.degree() >= 2)
        require(c.spec().abelian(), "non_abelian_degree",
                "coboundary above degree 1 requires an abelian group");
    Cochain out(c.spec(), c.support(), c.degree() + 1);
    if (!out.spec().abelian() && out.degree() >= 2) {
        // Non-abelian degree-2 output: keep all orderings explicit.
        for (const auto& t : ascending_tuples(c.support_size(), c.degree() + 2)) {
            std::vector<int> perm = t;
            do {
                out.set_explicit(perm, coboundary_at(c, perm));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        return out;
    }
    for (const auto& t : ascending_tuples(c.support_size(), c.degree() + 2))
        out.set(t, coboundary_at(c, t));
    return out;
}

CocycleCheck is_cocycle(const Cochain& c) {
    require(c.degree() >= 1, "bad_degree", "is_cocycle needs degree >= 1");
    if (c.degree() >= 2)
        require(c.spec().abelian(), "non_abelian_degree",
                "the cocycle identity above degree 1 is only checked for abelian groups");
    GroupElement id = identity(c.spec());
    for (const auto& t : ascending_tuples(c.support_size(), c.degree() + 2)) {
        if (!(coboundary_at(c, t) == id)) return {false, t};
    }
    return {true, {}};
}

GroupElement TorsorSchedule::key(int i, int j) const {
    if (i == j) return identity(keys.spec());
    return keys.at({i, j});
}

GroupElement TorsorSchedule::key(const std::string& i, const std::string& j) const {
    return key(net.index_of(i), net.index_of(j));
}

TorsorSchedule make_schedule(const Network& net, const Cochain& keys) {
    require(keys.degree() == 1, "bad_degree", "a key schedule is a degree-1 cochain");
    require(keys.support() == net.vertices(), "spec_mismatch",
            "cochain support must match the network's vertex list");
    require(keys.total(), "missing_key", "key schedule must cover every vertex pair");
    TorsorSchedule s{net, keys, false};
    if (net.vertex_count() >= 3) {
        s.cocycle_ok = is_cocycle(keys).ok;
    } else {
        s.cocycle_ok = true; // no triples, condition vacuous
    }
    return s;
}

TrivializeResult trivialize(const TorsorSchedule& s) {
    SpanningTree tree = spanning_tree(s.net);
    int n = static_cast<int>(s.net.vertex_count());
    std::vector<GroupElement> chain(static_cast<std::size_t>(n), identity(s.keys.spec()));
    for (int v : tree.order) {
        int p = tree.parent[static_cast<std::size_t>(v)];
        if (p < 0) continue;
        // value(p, v) = u_p ∘ u_v^{-1}  =>  u_v = value(v, p) ∘ u_p
        chain[static_cast<std::size_t>(v)] = compose(s.key(v, p), chain[static_cast<std::size_t>(p)]);
    }
    bool consistent = true;
    for (const auto& t : ascending_tuples(n, 2)) {
        GroupElement expect = compose(chain[static_cast<std::size_t>(t[0])],
                                      inverse(chain[static_cast<std::size_t>(t[1])]));
        if (!(s.keys.at(t) == expect)) {
            consistent = false;
            break;
        }
    }
    TrivializeResult result;
    if (consistent) {
        result.trivial = true;
        Cochain c0(s.keys.spec(), s.net.vertices(), 0);
        for (int v = 0; v < n; ++v) c0.set({v}, chain[static_cast<std::size_t>(v)]);
        result.chain = std::move(c0);
        return result;
    }
    for (const Path& loop : cycle_basis(s.net)) {
        GroupElement hol = identity(s.keys.spec());
        for (std::size_t t = 0; t + 1 < loop.vertices.size(); ++t)
            hol = compose(hol, s.key(loop.vertices[t], loop.vertices[t + 1]));
        result.obstructions.push_back({loop, hol});
    }
    return result;
}

Cochain bockstein_lift(const Cochain& c) {
    require(c.spec().kind == GroupKind::ExtChain && c.spec().k == 1, "spec_mismatch",
            "bockstein_lift expects a cochain over ext_chain(p, 1)");
    require(c.total(), "missing_key", "bockstein_lift needs a total cochain");
    auto check = is_cocycle(c);
    require(check.ok, "not_a_cocycle", "bockstein_lift input must be a cocycle");

    GroupSpec upper = GroupSpec::ext_chain(c.spec().p, 2, c.spec().generator);
    Cochain lifted(upper, c.support(), c.degree());
    for (const auto& [tuple, value] : c.stored()) lifted.set(tuple, ext_lift(value));

    Cochain delta = coboundary(lifted);
    Cochain out(c.spec(), c.support(), c.degree() + 1);
    for (const auto& [tuple, value] : delta.stored()) {
        require(value.value % c.spec().p == 0, "lift_leak",
                "coboundary of the lift left the kernel");
        out.set(tuple, ext_kernel_div(value));
    }
    return out;
}

} // namespace cochain
