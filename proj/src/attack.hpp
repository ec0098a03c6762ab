#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cochain.hpp"
#include "gerbe_tower.hpp"

namespace cochain {

// What a coalition of intruders sees. Adversary model, stated once:
//  - group parameters and the network are public;
//  - intruders know every pairwise key incident to one of them;
//  - pairwise keys between honest users are secret;
//  - classifying data (the band 2-cocycle, and for extension schedules the
//    projected base cocycle) is public exactly when the instance publishes
//    it here. Never a key between two non-intruders.
struct IntruderView {
    Network net;
    GroupSpec spec;
    std::vector<int> intruders;                          // sorted indices
    std::map<std::pair<int, int>, GroupElement> keys;    // ascending incident pairs
    std::map<std::vector<int>, GroupElement> band;       // published band values (ascending)
    std::map<std::pair<int, int>, GroupElement> base;    // published base projection

    GroupElement key(int i, int j) const; // fails with missing_key
    bool knows(int i, int j) const;
};

IntruderView make_view(const TorsorSchedule& s, const std::vector<std::string>& intruders);
IntruderView make_view(const GerbeSchedule& g, const std::vector<std::string>& intruders,
                       bool publish_band, bool publish_base);

void publish_band(IntruderView& view, const Cochain& derived);
void publish_base(IntruderView& view, const Cochain& projected);

// The meet-in-the-middle reconstruction u_ij = u_il ∘ u_lj through the first
// intruder holding both keys. Exact on torsors; wrong on some pair of every
// gerbe-style schedule.
GroupElement mitm_torsor(const IntruderView& view, const std::string& i, const std::string& j);

enum class AttackVerdict { Recovered, Degenerate, Candidates };

struct GerbeAttackOutcome {
    AttackVerdict verdict = AttackVerdict::Candidates;
    std::optional<GroupElement> key;      // when Recovered
    std::vector<GroupElement> candidates; // survivors, all verdicts
    bool degenerate_condition = false;    // u_dl∘u_lc == (u_di∘u_ic)^{-1}
    GroupElement phase_a_difference;      // the derived value of u_lcd - u_icd
};

// Three-intruder attack on a gerbe schedule, two phases.
// Phase A follows the written chain of cocycle relations: it determines
// u_lcd - u_icd (the target key cancels from that difference) and flags the
// degenerate condition. Phase B enumerates every group value x for the
// target pair consistent with the view, the published classifying data, and
// the delta-relations on the 4-subsets of {i,j,l,c,d}.
GerbeAttackOutcome gerbe_attack_3(const IntruderView& view, const std::string& c,
                                  const std::string& d);

struct ImpossibilityCase {
    std::pair<std::string, std::string> intruders;
    std::pair<std::string, std::string> target;
    std::size_t attainable = 0; // candidate values with an exhibited witness
    bool full_group = false;
};

struct ImpossibilityReport {
    std::size_t group_order = 0;
    bool all_full_group = false;     // the impossibility statement, checked
    std::vector<ImpossibilityCase> cases;
    // Contrast: constraining witnesses to torsors collapses the candidate set
    // to the single MITM value.
    bool torsor_contrast_unique = false;
};

// Two-intruder impossibility, made literal: for every 2-intruder view and
// every candidate value of the target key, a full gerbe schedule consistent
// with the view realizes it. Exhaustive; group order <= 7, <= 5 vertices.
ImpossibilityReport gerbe_impossibility_2(const TorsorSchedule& schedule);

struct TowerAttackOutcome {
    AttackVerdict verdict = AttackVerdict::Candidates;
    std::optional<GroupElement> key;      // level-n key when Recovered
    std::vector<GroupElement> candidates; // level-n candidates otherwise
    std::uint32_t gerbe_calls = 0;        // recursion depth bookkeeping
};

// The recursive (n+3)-intruder attack: each level anchors the complex at one
// intruder and drops it; the base case hands 3 intruders to gerbe_attack_3 on
// the level-1 data, and the recovered key climbs back up through the tower's
// canonical sections.
TowerAttackOutcome tower_attack(const TowerSchedule& t,
                                const std::vector<std::string>& intruders,
                                const std::string& c, const std::string& d,
                                bool band_published);

} // namespace cochain
