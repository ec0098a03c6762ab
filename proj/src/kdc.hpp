#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cochain.hpp"
#include "group.hpp"
#include "network.hpp"

namespace cochain {

enum class MessagePurpose { Request, ReplyToInitiator, PushToResponder };

struct MessageRecord {
    std::string from;
    std::string to;
    std::vector<std::uint8_t> ciphertext;
    MessagePurpose purpose = MessagePurpose::Request;
};

struct SessionResult;
class KdcState;
SessionResult establish_session(KdcState& st, const std::string& initiator,
                                const std::string& responder, std::uint64_t seed);

// Key-distribution-center state: the center holds one master key per user and
// an append-only trace of every session message. The center must have an edge
// to every user (the initial-object condition).
class KdcState {
public:
    KdcState(Network net, std::string center, std::map<std::string, GroupElement> master_keys);

    const Network& net() const { return net_; }
    const std::string& center() const { return center_; }
    const GroupSpec& spec() const { return spec_; }
    const std::vector<MessageRecord>& log() const { return log_; }
    const GroupElement& master_key(const std::string& user) const;

    friend SessionResult establish_session(KdcState& st, const std::string& initiator,
                                           const std::string& responder, std::uint64_t seed);

private:
    Network net_;
    std::string center_;
    GroupSpec spec_;
    std::map<std::string, GroupElement> master_;
    std::vector<MessageRecord> log_;
};

// Master keys drawn uniformly from a seeded generator (one per non-center
// user, in vertex order).
KdcState make_kdc(const Network& net, const std::string& center, const GroupSpec& spec,
                  std::uint64_t seed);

// Master keys taken from a link-to-link schedule: u_id = value(i, D).
KdcState make_kdc(const TorsorSchedule& schedule, const std::string& center);

// Result of the three-message protocol: Request {ID_i, ID_j} under u_id, the
// session key u_ji back to the initiator under u_id, and {u_ij, ID_i} to the
// responder under u_jd. The two delivered keys are mutual inverses.
struct SessionResult {
    GroupElement session_key;    // u_ji as drawn by the center
    GroupElement initiator_key;  // decrypted from ReplyToInitiator
    GroupElement responder_key;  // decrypted from PushToResponder (= inverse)
    std::size_t first_record = 0; // index of the Request in the log
};

// Group-translation block encryption used for every protocol message.
std::vector<std::uint8_t> encrypt_blocks(const GroupElement& key,
                                         const std::vector<GroupElement>& blocks);
std::vector<GroupElement> decrypt_blocks(const GroupElement& key, const GroupSpec& spec,
                                         const std::vector<std::uint8_t>& bytes);

// Identifier encoding: the i-th vertex maps to the i-th group element.
GroupElement encode_id(const GroupSpec& spec, int vertex_index);

struct BruteForceCost {
    bool exact_valid = false;
    boost::multiprecision::cpp_int exact; // C(N,2) * (2^n)! when representable
    double log2 = 0.0;                    // always available
};

// Exhaustive key-search cost against the link-to-link network: C(N,2)*(2^n)!
// tried keys. The exact big integer is produced for 2^n <= 4096; the base-2
// logarithm is always reported.
BruteForceCost brute_force_cost(std::uint64_t users, std::uint32_t header_bits);

// Generator count parameterizing the holonomy of a genus-g surface: 2g images
// determine every key, however large the network.
std::uint64_t holonomy_cost(std::uint64_t genus);

} // namespace cochain
