#include "kdc.hpp"

#include <cmath>
#include <random>

#include "error.hpp"

namespace cochain {

KdcState::KdcState(Network net, std::string center,
                   std::map<std::string, GroupElement> master_keys)
    : net_(std::move(net)), center_(std::move(center)), master_(std::move(master_keys)) {
    int d = net_.index_of(center_);
    require(!master_.empty(), "unknown_user", "a KDC needs at least one registered user");
    spec_ = master_.begin()->second.spec;
    for (int v = 0; v < static_cast<int>(net_.vertex_count()); ++v) {
        if (v == d) continue;
        const std::string& name = net_.name_of(v);
        require(master_.count(name) == 1, "unknown_user",
                "every non-center user needs exactly one master key: " + name);
        require(master_.at(name).spec == spec_, "spec_mismatch",
                "master keys must share one group");
        require(net_.adjacent(v, d), "not_initial",
                "the KDC must have an edge to every user: " + name);
    }
    require(master_.size() == net_.vertex_count() - 1, "unknown_user",
            "master keys listed for unregistered users");
    require(spec_.order() >= net_.vertex_count(), "size_mismatch",
            "identifier encoding needs group order >= user count");
}

const GroupElement& KdcState::master_key(const std::string& user) const {
    auto it = master_.find(user);
    require(it != master_.end(), "unknown_user", "no master key for " + user);
    return it->second;
}

KdcState make_kdc(const Network& net, const std::string& center, const GroupSpec& spec,
                  std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, spec.order() - 1);
    int d = net.index_of(center);
    std::map<std::string, GroupElement> master;
    for (int v = 0; v < static_cast<int>(net.vertex_count()); ++v)
        if (v != d) master.emplace(net.name_of(v), nth_element(spec, pick(rng)));
    return KdcState(net, center, std::move(master));
}

KdcState make_kdc(const TorsorSchedule& schedule, const std::string& center) {
    int d = schedule.net.index_of(center);
    std::map<std::string, GroupElement> master;
    for (int v = 0; v < static_cast<int>(schedule.net.vertex_count()); ++v)
        if (v != d) master.emplace(schedule.net.name_of(v), schedule.key(v, d));
    return KdcState(schedule.net, center, std::move(master));
}

GroupElement encode_id(const GroupSpec& spec, int vertex_index) {
    require(vertex_index >= 0, "unknown_user", "negative vertex index");
    return nth_element(spec, static_cast<std::uint64_t>(vertex_index));
}

std::vector<std::uint8_t> encrypt_blocks(const GroupElement& key,
                                         const std::vector<GroupElement>& blocks) {
    std::vector<std::uint8_t> out;
    out.reserve(blocks.size() * 8);
    for (const auto& b : blocks) {
        std::uint64_t v = compose(key, b).value;
        for (int shift = 56; shift >= 0; shift -= 8)
            out.push_back(static_cast<std::uint8_t>((v >> shift) & 0xFF));
    }
    return out;
}

std::vector<GroupElement> decrypt_blocks(const GroupElement& key, const GroupSpec& spec,
                                         const std::vector<std::uint8_t>& bytes) {
    require(bytes.size() % 8 == 0, "bad_ciphertext", "ciphertext is not block-aligned");
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < bytes.size(); i += 8) {
        std::uint64_t v = 0;
        for (std::size_t b = 0; b < 8; ++b) v = (v << 8) | bytes[i + b];
        out.push_back(compose(inverse(key), make_element(spec, v)));
    }
    return out;
}

SessionResult establish_session(KdcState& st, const std::string& initiator,
                                const std::string& responder, std::uint64_t seed) {
    require(initiator != responder, "self_session", "initiator and responder must differ");
    const GroupElement& u_id = st.master_key(initiator);
    const GroupElement& u_jd = st.master_key(responder);
    int i = st.net().index_of(initiator);
    int j = st.net().index_of(responder);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, st.spec().order() - 1);
    GroupElement u_ji = nth_element(st.spec(), pick(rng)); // sessional key

    SessionResult result;
    result.session_key = u_ji;
    result.first_record = st.log_.size();

    st.log_.push_back({initiator, st.center(),
                       encrypt_blocks(u_id, {encode_id(st.spec(), i), encode_id(st.spec(), j)}),
                       MessagePurpose::Request});
    st.log_.push_back({st.center(), initiator, encrypt_blocks(u_id, {u_ji}),
                       MessagePurpose::ReplyToInitiator});
    st.log_.push_back({st.center(), responder,
                       encrypt_blocks(u_jd, {inverse(u_ji), encode_id(st.spec(), i)}),
                       MessagePurpose::PushToResponder});

    result.initiator_key =
        decrypt_blocks(u_id, st.spec(), st.log_[result.first_record + 1].ciphertext)[0];
    result.responder_key =
        decrypt_blocks(u_jd, st.spec(), st.log_[result.first_record + 2].ciphertext)[0];
    return result;
}

BruteForceCost brute_force_cost(std::uint64_t users, std::uint32_t header_bits) {
    require(users >= 2, "size_mismatch", "need at least two users");
    require(header_bits >= 1, "size_mismatch", "need at least one header bit");
    using boost::multiprecision::cpp_int;
    BruteForceCost out;
    cpp_int pairs = cpp_int(users) * (users - 1) / 2;

    // log2(C(N,2) * (2^n)!) via lgamma
    double keys = std::pow(2.0, static_cast<double>(header_bits));
    out.log2 = std::log2(static_cast<double>(pairs)) + std::lgamma(keys + 1.0) / std::log(2.0);

    if (header_bits <= 12) {
        cpp_int fact = 1;
        std::uint64_t limit = 1ull << header_bits;
        for (std::uint64_t v = 2; v <= limit; ++v) fact *= v;
        out.exact = pairs * fact;
        out.exact_valid = true;
    }
    return out;
}

std::uint64_t holonomy_cost(std::uint64_t genus) { return 2 * genus; }

} // namespace cochain
