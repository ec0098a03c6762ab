#include "gerbe_tower.hpp"

#include "error.hpp"

namespace cochain {

GerbeSchedule build_gerbe(const Network& net, const Cochain& keys) {
    require(keys.degree() == 1, "bad_degree", "gerbe keys form a degree-1 cochain");
    require(keys.spec().kind == GroupKind::ExtChain && keys.spec().k == 2, "spec_mismatch",
            "gerbe keys live in ext_chain(p, 2)");
    require(keys.support() == net.vertices(), "spec_mismatch",
            "cochain support must match the network");
    require(keys.total(), "missing_key", "gerbe keys must cover every pair");
    require(net.vertex_count() >= 3, "not_enough_vertices",
            "a gerbe needs at least one triple of users");

    GroupSpec band = GroupSpec::ext_chain(keys.spec().p, 1, keys.spec().generator);
    Cochain projected(band, keys.support(), 1);
    for (const auto& [tuple, value] : keys.stored()) projected.set(tuple, ext_project(value));

    auto check = is_cocycle(projected);
    if (!check.ok) {
        std::string witness;
        for (int v : check.witness) witness += (witness.empty() ? "" : ",") + net.name_of(v);
        fail("projection_not_cocycle",
             "projected keys violate the cocycle law at (" + witness + ")");
    }

    // The Chasles failure lands in the kernel because the projection is a
    // cocycle; divide it into the band.
    Cochain delta = coboundary(keys);
    Cochain derived(band, keys.support(), 2);
    for (const auto& [tuple, value] : delta.stored()) {
        require(value.value % keys.spec().p == 0, "lift_leak",
                "Chasles failure left the kernel");
        derived.set(tuple, ext_kernel_div(value));
    }
    return {net, keys, std::move(projected), std::move(derived)};
}

TowerSchedule build_tower(const Network& net, std::uint64_t p, std::uint32_t levels,
                          const Cochain& base) {
    require(levels >= 1 && levels <= 3, "degree_too_high",
            "towers are supported up to n = 3 (degree-4 classifying cocycles)");
    require(net.vertex_count() >= levels + 2, "not_enough_vertices",
            "degree-(n+1) cochains need n+2 distinct vertices");
    require(base.degree() == 1, "bad_degree", "the tower base is a degree-1 cochain");
    require(base.spec().kind == GroupKind::ExtChain && base.spec().k == 1 &&
                base.spec().p == p,
            "spec_mismatch", "the tower base lives over ext_chain(p, 1)");
    require(base.support() == net.vertices(), "spec_mismatch",
            "cochain support must match the network");
    require(base.total(), "missing_key", "the tower base must cover every pair");
    require(is_cocycle(base).ok, "base_not_cocycle", "the tower base must be a 1-cocycle");

    TowerSchedule t{net, p, levels, base, {}};
    t.classifying.push_back(base);
    for (std::uint32_t k = 1; k <= levels; ++k)
        t.classifying.push_back(bockstein_lift(t.classifying.back()));
    return t;
}

GroupElement tower_session_key(const TowerSchedule& t, int i, int j, std::uint32_t level) {
    require(level <= t.levels, "level_out_of_range",
            "the tower has levels 0.." + std::to_string(t.levels));
    require(i != j, "bad_tuple", "a session key joins two distinct users");
    bool ascending = i < j;
    GroupElement stored = t.base.at(ascending ? std::vector<int>{i, j} : std::vector<int>{j, i});
    GroupElement lifted = ext_lift_to(stored, level + 1);
    return ascending ? lifted : inverse(lifted);
}

} // namespace cochain
