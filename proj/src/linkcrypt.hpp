#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cochain.hpp"

namespace cochain {

// Hop-by-hop header encryption. Keys act on the fiber by left translation;
// headers live in the schedule's key group. Returns the header value seen at
// every stage, starting with the input (length+1 entries).
std::vector<GroupElement> send_header(const TorsorSchedule& s, const Path& path,
                                      const GroupElement& header);

// Holonomy of a connection (degree-0 chain) along a path: each step applies
// conn(dst)^{-1} ∘ key(dst, src) ∘ conn(src), so holonomies concatenate and
// a trivializing chain kills every loop.
GroupElement holonomy_map(const TorsorSchedule& s, const Cochain& conn, const Path& path);

struct GenusExpansion {
    TorsorSchedule schedule;
    std::size_t generator_count = 0;   // independent key inputs
    std::size_t table_entries = 0;     // C(2n+p, 2) pairwise keys produced
    bool boundary_cocycle = false;     // cocycle condition on the filled region
};

// The genus key-entry algorithm: n holonomy generators label consecutive
// boundary keys of a 2n-gon, the rest of the boundary table is completed by
// the composition recurrence u_ij = u_{i,j-1} ∘ u_{j-1,j}, and keys touching
// interior vertices are set to the identity.
GenusExpansion expand_genus_keys(const std::vector<GroupElement>& generators,
                                 const std::vector<std::string>& boundary,
                                 const std::vector<std::string>& interior);

// Connected sum of schedules over the pointed connected sum of the networks.
// Cross keys route through the glue vertex.
TorsorSchedule schedule_connected_sum(const TorsorSchedule& s1, const TorsorSchedule& s2);

// Contract the unique edge between tail and head; keys of pairs that gained a
// rerouted edge are recomposed through the contracted key.
TorsorSchedule schedule_contract(const TorsorSchedule& s, const std::string& tail,
                                 const std::string& head);

// Tensor (Kronecker per pair) and dual (inverse transpose per key) of linear
// schedules; both preserve the cocycle property.
TorsorSchedule tensor_schedule(const TorsorSchedule& s1, const TorsorSchedule& s2);
TorsorSchedule dual_schedule(const TorsorSchedule& s);

// Feistel block cipher over even-width bit blocks. The round function is
// fixed bit-exactly (see README): F(R, K) = S(rotl(R xor K, 1)) applied
// nibble-wise, with the PRESENT S-box. After the last round the halves swap;
// decryption runs the same rounds with the key order reversed.
struct FeistelKey {
    std::uint32_t width = 0; // block width in bits, even, 2..64
    std::vector<std::uint64_t> round_keys;
};

FeistelKey make_feistel_key(std::uint32_t width, std::vector<std::uint64_t> round_keys);
std::uint64_t feistel_encrypt(const FeistelKey& k, std::uint64_t block);
std::uint64_t feistel_decrypt(const FeistelKey& k, std::uint64_t block);

struct BitMatrix {
    std::uint32_t n = 0;
    std::vector<std::uint64_t> rows;

    bool bit(std::uint32_t r, std::uint32_t c) const { return (rows[r] >> c) & 1; }
    std::uint64_t apply(std::uint64_t v) const; // matrix * vector over GF(2)
};

// Hill-cipher chosen-plaintext attack: recover M with M*p = c for all pairs
// by Gaussian elimination over GF(2). Plaintexts must span the space.
BitMatrix hill_recover_key(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs,
                           std::uint32_t n);

} // namespace cochain
