#include "pubkey.hpp"

#include "error.hpp"

namespace cochain {

KeyPair make_keypair(const GroupSpec& spec, std::uint64_t private_exp, KeyLevel level,
                     std::uint32_t tower_level) {
    require(private_exp >= 1, "bad_private", "private exponents start at 1");
    require(private_exp < spec.order(), "bad_private", "private exponent beyond group order");
    return {private_exp, exp_element(spec, private_exp), level, tower_level};
}

GroupElement dh_shared(const KeyPair& mine, const GroupElement& their_public) {
    require(mine.public_key.spec == their_public.spec, "spec_mismatch",
            "key pairs live in different groups");
    return power(their_public, static_cast<std::int64_t>(mine.private_exp));
}

GroupElement connection_scheme_key(const GroupSpec& spec, std::uint64_t conn_private,
                                   const GroupElement& their_public, SchemeForm form) {
    require(their_public.spec == spec, "spec_mismatch",
            "public value lives in a different group");
    switch (form) {
        case SchemeForm::Dh:
            return power(their_public, static_cast<std::int64_t>(conn_private));
        case SchemeForm::CoordinateChange:
            return compose(exp_element(spec, conn_private), inverse(their_public));
    }
    fail("unsupported_form", "unknown connection scheme form");
}

ConnectiveStructure make_connective(const Cochain& c0) {
    require(c0.degree() == 0, "bad_degree", "a connective structure starts from a 0-chain");
    require(c0.spec().kind == GroupKind::ExtChain && c0.spec().k == 1, "spec_mismatch",
            "connective structures are built over ext_chain(p, 1)");
    Cochain delta = coboundary(c0);
    GroupSpec upper = GroupSpec::ext_chain(c0.spec().p, 2, c0.spec().generator);
    Cochain c1(upper, c0.support(), 1);
    for (const auto& [tuple, value] : delta.stored()) c1.set(tuple, ext_lift(value));
    ConnectiveStructure cs{c0, c1};
    validate_connective(cs);
    return cs;
}

void validate_connective(const ConnectiveStructure& cs) {
    require(cs.c0.degree() == 0 && cs.c1.degree() == 1, "not_a_connective_structure",
            "a connective structure is a (0-chain, 1-chain) pair");
    require(cs.c1.spec().kind == GroupKind::ExtChain && cs.c1.spec().k == 2,
            "not_a_connective_structure", "c1 must live one extension step up");
    require(cs.c1.spec().p == cs.c0.spec().p, "not_a_connective_structure",
            "extension steps of different primes");
    Cochain delta = coboundary(cs.c0);
    for (const auto& t : ascending_tuples(cs.c0.support_size(), 2)) {
        require(ext_project(cs.c1.at(t)) == delta.at(t), "not_a_connective_structure",
                "c1 does not lift the coboundary of c0");
    }
}

GroupElement gerbe_public_key(const ConnectiveStructure& cs, int i, int j) {
    validate_connective(cs);
    GroupElement lift_i = ext_lift(cs.c0.at({i}));
    GroupElement lift_j = ext_lift(cs.c0.at({j}));
    std::uint64_t private_i = log_element(lift_i);
    return power(lift_j, static_cast<std::int64_t>(private_i));
}

KeyPair tower_keypair(std::uint64_t p, std::uint32_t level_n, std::uint64_t private_exp) {
    GroupSpec top = GroupSpec::ext_chain(p, level_n + 1);
    return make_keypair(top, private_exp, KeyLevel::Tower, level_n);
}

GroupElement tower_public_key(std::uint64_t p, std::uint32_t level_n,
                              std::uint64_t my_private, const GroupElement& their_public) {
    require(their_public.spec.kind == GroupKind::ExtChain && their_public.spec.p == p,
            "spec_mismatch", "tower publics live in the configured extension chain");
    require(their_public.spec.k == level_n + 1, "level_out_of_range",
            "level-n keys live in ext_chain(p, n+1)");
    return power(their_public, static_cast<std::int64_t>(my_private));
}

} // namespace cochain
