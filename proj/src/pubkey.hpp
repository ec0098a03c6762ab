#pragma once

#include <cstdint>

#include "cochain.hpp"
#include "group.hpp"

namespace cochain {

enum class KeyLevel { Torsor, Gerbe, Tower };

struct KeyPair {
    std::uint64_t private_exp = 0;
    GroupElement public_key;
    KeyLevel level = KeyLevel::Torsor;
    std::uint32_t tower_level = 0;
};

// public = generator^private; privates below 1 are rejected.
KeyPair make_keypair(const GroupSpec& spec, std::uint64_t private_exp,
                     KeyLevel level = KeyLevel::Torsor, std::uint32_t tower_level = 0);

// The Diffie-Hellman torsor exchange: shared = their_public ^ my_private.
GroupElement dh_shared(const KeyPair& mine, const GroupElement& their_public);

// The two built-in instantiations of the connection form L.
//   Dh:               L(a, h) = h^a                (symmetric by construction)
//   CoordinateChange: L(a, u_j) = exp(a) ∘ u_j^{-1} (reproduces the torsor key)
enum class SchemeForm { Dh, CoordinateChange };

GroupElement connection_scheme_key(const GroupSpec& spec, std::uint64_t conn_private,
                                   const GroupElement& their_public, SchemeForm form);

// A flat connective structure per the discrete definition: a 0-chain c0 over
// Z/p together with the canonical lift c1 of its coboundary into Z/p^2.
struct ConnectiveStructure {
    Cochain c0; // degree 0 over ext_chain(p, 1)
    Cochain c1; // degree 1 over ext_chain(p, 2), lift of delta(c0)
};

ConnectiveStructure make_connective(const Cochain& c0);

// Validates the lift condition: projecting c1 must give delta(c0).
void validate_connective(const ConnectiveStructure& cs);

// Gerbe public keys: private = Ln(c'_i) for the canonical lift c'_i of c0(i),
// public = c'_i, and u_ij = J(Ln(c'_i), c'_j) with J fixed to exponentiation
// in the top group. Both parties compute the same u_ij; the family of u_ij
// does not satisfy the Chasles relation in general.
GroupElement gerbe_public_key(const ConnectiveStructure& cs, int i, int j);

// Level-n tower exchange in the top group ext_chain(p, n+1):
// u^n_ij = exp(c_i * c_j) = their_public ^ my_private.
GroupElement tower_public_key(std::uint64_t p, std::uint32_t level_n,
                              std::uint64_t my_private, const GroupElement& their_public);

KeyPair tower_keypair(std::uint64_t p, std::uint32_t level_n, std::uint64_t private_exp);

} // namespace cochain
