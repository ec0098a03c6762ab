#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "group.hpp"
#include "network.hpp"

namespace cochain {

// Degree-k Cech cochain on the complete-tuple model: a total map from
// ascending (k+1)-tuples of distinct vertex indices to group elements, with
// values on other orderings derived by the antisymmetry convention
// (odd permutation = inverse). Non-abelian cochains of degree 2 produced by
// the coboundary keep every ordering explicit instead.
//
// Orientation convention, fixed once for the whole artifact: value(i,j) is
// the map from j's fiber to i's fiber, composition reads compose(a,b) = a∘b,
// and the coboundary of a 0-chain is (δu)(i,j) = u_i ∘ u_j^{-1}.
class Cochain {
public:
    Cochain() = default; // empty placeholder; real cochains use the ctor below
    Cochain(GroupSpec spec, std::vector<std::string> support, int degree);

    int degree() const { return degree_; }
    const GroupSpec& spec() const { return spec_; }
    const std::vector<std::string>& support() const { return support_; }
    int support_size() const { return static_cast<int>(support_.size()); }

    // Accepts any ordering of distinct indices; stores canonically.
    void set(const std::vector<int>& tuple, const GroupElement& value);
    GroupElement at(const std::vector<int>& tuple) const;
    bool has(const std::vector<int>& tuple) const;

    // Every ascending tuple present.
    bool total() const;

    // Fill every tuple with the identity.
    void fill_identity();

    const std::map<std::vector<int>, GroupElement>& stored() const { return values_; }

    bool explicit_storage() const { return explicit_; }
    void set_explicit(const std::vector<int>& tuple, const GroupElement& value);

private:
    GroupSpec spec_;
    std::vector<std::string> support_;
    int degree_ = 0;
    bool explicit_ = false; // all orderings stored (non-abelian degree 2)
    std::map<std::vector<int>, GroupElement> values_;
};

std::vector<std::vector<int>> ascending_tuples(int n, int k);

// The alternating-sum/composite coboundary value on one ascending tuple of
// size degree+2; evaluates without materializing the next cochain.
GroupElement coboundary_at(const Cochain& c, const std::vector<int>& tuple);

// Degree k -> k+1. Composite form at k<=1 (valid non-abelian), alternating
// sum for abelian k in {2,3}; degree 4 is out of range.
Cochain coboundary(const Cochain& c);

struct CocycleCheck {
    bool ok = false;
    std::vector<int> witness; // one violating ascending tuple when !ok
};

CocycleCheck is_cocycle(const Cochain& c);

// A degree-1 cochain bound to a network; flag records whether the cocycle
// condition (torsor law) holds on the full support.
struct TorsorSchedule {
    Network net;
    Cochain keys;
    bool cocycle_ok = false;

    // key(i,j): identity when i == j, cochain value otherwise.
    GroupElement key(int i, int j) const;
    GroupElement key(const std::string& i, const std::string& j) const;
};

TorsorSchedule make_schedule(const Network& net, const Cochain& keys);

struct LoopHolonomy {
    Path loop;
    GroupElement value;
};

struct TrivializeResult {
    bool trivial = false;
    std::optional<Cochain> chain;            // degree-0, when trivial
    std::vector<LoopHolonomy> obstructions;  // per cycle-basis loop, otherwise
};

// Fix identity at the basepoint, propagate along a spanning tree, then check
// every pair; on failure report the holonomy of each fundamental loop,
// reading keys forward: value(v0,v1) ∘ value(v1,v2) ∘ ... around the loop.
TrivializeResult trivialize(const TorsorSchedule& s);

// Bockstein-style lift along Z/p ⊂ Z/p^2: lift values by the canonical
// section, take the coboundary upstairs, and divide the kernel back down.
// Input and output both live over ExtChain(p, 1).
Cochain bockstein_lift(const Cochain& c);

} // namespace cochain
