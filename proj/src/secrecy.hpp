#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "group.hpp"

namespace cochain {

using Rational = boost::multiprecision::cpp_rational;

// Exact probability vector over an indexed finite outcome set.
struct Distribution {
    std::vector<Rational> probs;

    std::size_t size() const { return probs.size(); }
};

Distribution make_distribution(std::vector<Rational> probs); // validates sum == 1
Distribution uniform_distribution(std::size_t n);
Distribution point_mass(std::size_t n, std::size_t at);

// One hop of a path: a key distribution plus the key action on the fiber,
// as an explicit permutation table (row per key, column per plaintext).
// Translation hops act by k: x -> k ∘ x in the fiber group.
struct HopModel {
    Distribution key_dist;
    std::vector<std::vector<std::uint32_t>> action; // action[key][plain] = cipher

    std::size_t key_count() const { return action.size(); }
};

HopModel translation_hop(const GroupSpec& fiber, Distribution key_dist);
HopModel table_hop(Distribution key_dist, std::vector<std::vector<std::uint32_t>> action,
                   std::size_t fiber_size);

// A path model: plaintexts drawn independently at each of the n-1 sending
// nodes, keys drawn independently per hop, under the chain constraint that
// the value arriving at a node equals the plaintext drawn there.
struct PathModel {
    GroupSpec fiber;
    std::vector<std::string> nodes; // i_1 .. i_n, n >= 2
    std::vector<Distribution> plaintexts; // per sending node, size n-1
    std::vector<HopModel> hops;           // per hop, size n-1
};

PathModel make_path_model(const GroupSpec& fiber, std::vector<std::string> nodes,
                          std::vector<Distribution> plaintexts, std::vector<HopModel> hops);

struct CiphertextResult {
    Distribution dist;         // conditioned on chain consistency, sums to 1
    Rational consistency_mass; // total probability of chain-consistent events
};

// Exact distribution of the final ciphertext by full enumeration of the
// product space (size capped at 2^24).
CiphertextResult ciphertext_dist(const PathModel& m);

struct SecrecyWitness {
    std::vector<std::uint32_t> plaintexts; // the tuple at nodes i_1..i_{n-1}
    std::uint32_t cipher = 0;
    Rational posterior;
    Rational prior;
};

struct SecrecyVerdict {
    bool perfect = false;
    std::optional<SecrecyWitness> witness;
};

// Perfect secrecy of the path: the posterior of every plaintext tuple given
// any positive-probability ciphertext equals its prior. Exact rationals only.
SecrecyVerdict perfect_secrecy_path(const PathModel& m);

struct ShannonReport {
    bool uniform_keys = false;
    bool unique_transitive = false;
    bool holds = false;             // both conditions
    bool secrecy_confirmed = false; // perfect_secrecy_path re-checked when holds
    std::string detail;
};

// The sufficient conditions: every hop key uniform, and for each hop a unique
// key mapping any plaintext to any ciphertext. Requires |E| = |key group|.
ShannonReport shannon_conditions(const PathModel& m);

double entropy(const Distribution& d); // natural log

// Key equivocation of a single hop: H(key | cipher) for independent key and
// plaintext, computed from the exact joint distribution.
double cond_entropy_key_given_cipher(const HopModel& hop, const Distribution& plaintext);

struct EntropyIdentity {
    double direct = 0.0; // H(V|C) by definition
    double via_rhs = 0.0; // H(V) + H(P_in) - H(P_out)
};

EntropyIdentity key_equivocation_identity(const HopModel& hop, const Distribution& plaintext);

struct EntropyCocycleReport {
    double h_hop1 = 0.0;
    double h_hop2 = 0.0;
    double product_h = 0.0;        // entropy of the product (path) key space
    double additivity_residual = 0.0; // |product_h - (h_hop1 + h_hop2)|
    double collapsed_h = 0.0;      // entropy of the composed-automorphism space
    bool collapsed_differs = false;
    double prop3_residual = 0.0;   // conditional-entropy cocycle via the identity
};

// The entropy 1-cocycle on a triangle: additivity holds on the product-space
// model; the collapsed composed-key model is computed for contrast.
EntropyCocycleReport entropy_cocycle_check(const GroupSpec& fiber, const Distribution& d_hop1,
                                           const Distribution& d_hop2, const Distribution& p_i,
                                           const Distribution& p_j, const Distribution& p_l);

} // namespace cochain
