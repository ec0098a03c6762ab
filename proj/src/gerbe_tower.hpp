#pragma once

#include <cstdint>
#include <vector>

#include "cochain.hpp"

namespace cochain {

// A gerbe key schedule built from the extension Z/p ⊂ Z/p^2 → Z/p: keys live
// in the middle group, their projection is a torsor cocycle, and the failure
// of the Chasles law divides into the band as the classifying 2-cocycle.
struct GerbeSchedule {
    Network net;
    Cochain keys;      // degree 1 over ext_chain(p, 2)
    Cochain projected; // degree 1 over ext_chain(p, 1): the base cocycle
    Cochain derived;   // degree 2 over ext_chain(p, 1): the band cocycle
};

GerbeSchedule build_gerbe(const Network& net, const Cochain& keys);

// An n-tower of torsors over the cyclic filtration of Z/p^{n+1}, recorded by
// its classifying cocycle sequence (c_1, ..., c_{n+1}) of rising degree,
// produced by iterated Bockstein lifting from the base 1-cocycle.
struct TowerSchedule {
    Network net;
    std::uint64_t p = 0;
    std::uint32_t levels = 0;         // n
    Cochain base;                     // degree 1 cocycle over ext_chain(p, 1)
    std::vector<Cochain> classifying; // c_1 .. c_{n+1}; c_k has degree k
};

TowerSchedule build_tower(const Network& net, std::uint64_t p, std::uint32_t levels,
                          const Cochain& base);

// The level-k exchange key between i and j: the canonical lift of the base
// key into ext_chain(p, k+1), with antisymmetry applied in the top group.
// Level 0 reproduces the base key.
GroupElement tower_session_key(const TowerSchedule& t, int i, int j, std::uint32_t level);

} // namespace cochain
