#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cochain {

enum class GroupKind { CyclicMul, CyclicAdd, XorVec, MatGL, ExtChain };

// Pluggable finite group kernel. Elements are canonical uint64 encodings so
// element equality is representation equality (attack loops compare elements
// constantly) and hashing stays cheap.
//
//   CyclicMul(p)   residues 1..p-1 under multiplication mod a prime p
//   CyclicAdd(m)   residues 0..m-1 under addition mod m
//   XorVec(n)      n-bit vectors under XOR
//   MatGL(n)       invertible n x n matrices over GF(2), row-major bit layout
//   ExtChain(p,k)  Z/p^k under addition, with its mod-p^{k-1} filtration
//
// Orders are capped at 2^20 so brute-force oracles always terminate.
struct GroupSpec {
    GroupKind kind = GroupKind::CyclicAdd;
    std::uint64_t p = 0;         // prime (CyclicMul, ExtChain)
    std::uint64_t m = 0;         // modulus (CyclicAdd)
    std::uint32_t n = 0;         // bit width (XorVec) or dimension (MatGL)
    std::uint32_t k = 0;         // chain depth (ExtChain)
    std::uint64_t generator = 0; // exp/log base; 0 = none configured

    static GroupSpec cyclic_mul(std::uint64_t p, std::uint64_t generator = 0);
    static GroupSpec cyclic_add(std::uint64_t m, std::uint64_t generator = 1);
    static GroupSpec xor_vec(std::uint32_t n);
    static GroupSpec mat_gl(std::uint32_t n);
    static GroupSpec ext_chain(std::uint64_t p, std::uint32_t k, std::uint64_t generator = 1);

    std::uint64_t order() const;
    bool abelian() const;
    std::string describe() const;

    bool operator==(const GroupSpec&) const = default;
};

struct GroupElement {
    GroupSpec spec;
    std::uint64_t value = 0;

    bool operator==(const GroupElement&) const = default;
};

// Canonicalizes (reduces mod the order where applicable) and validates raw.
GroupElement make_element(const GroupSpec& spec, std::uint64_t raw);

GroupElement identity(const GroupSpec& spec);
GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);

// Square-and-multiply; negative exponents act through the inverse.
GroupElement power(const GroupElement& a, std::int64_t e);

// All elements in a fixed canonical order; nth_element(spec, i) is its i-th
// entry without materializing the list (except MatGL, which caches).
std::vector<GroupElement> enumerate_group(const GroupSpec& spec);
GroupElement nth_element(const GroupSpec& spec, std::uint64_t index);

// Brute-force discrete-log oracle: least e in [0, bound) with base^e = target.
std::optional<std::uint64_t> discrete_log(const GroupElement& base,
                                          const GroupElement& target,
                                          std::uint64_t bound);

// exp/Ln instantiation used by the public-key schemes: exp(e) = generator^e
// (k*g for additive kinds) and Ln = brute-force discrete_log over the group.
GroupElement exp_element(const GroupSpec& spec, std::uint64_t e);
std::uint64_t log_element(const GroupElement& a);

// Extension-chain structure maps (ExtChain only).
GroupElement ext_project(const GroupElement& a);    // Z/p^k -> Z/p^{k-1}
GroupElement ext_lift(const GroupElement& a);       // canonical section Z/p^{k-1} -> Z/p^k
GroupElement ext_kernel_div(const GroupElement& a); // ker(ext_project) -> Z/p (divide by p^{k-1})

// Iterated canonical section into ExtChain(p, depth).
GroupElement ext_lift_to(const GroupElement& a, std::uint32_t depth);

bool is_prime(std::uint64_t v);

// MatGL-only linear-algebra helpers (used by the tensor/dual schedules and
// the Hill-cipher attack).
GroupElement mat_transpose(const GroupElement& a);
GroupElement mat_kronecker(const GroupElement& a, const GroupElement& b);
bool mat_bit(std::uint64_t m, std::uint32_t n, std::uint32_t row, std::uint32_t col);

} // namespace cochain
