#include "secrecy.hpp"

#include <cmath>
#include <map>

#include "error.hpp"

namespace cochain {

namespace {

constexpr double kLogTol = 1e-15;

double to_double(const Rational& r) { return static_cast<double>(r); }

// -p ln p with the 0 ln 0 = 0 convention
double nlogn(const Rational& p) {
    if (p == 0) return 0.0;
    double v = to_double(p);
    return -v * std::log(v);
}

} // namespace

Distribution make_distribution(std::vector<Rational> probs) {
    require(!probs.empty(), "bad_distribution", "a distribution needs outcomes");
    Rational sum = 0;
    for (const auto& p : probs) {
        require(p >= 0, "bad_distribution", "probabilities must be nonnegative");
        sum += p;
    }
    require(sum == 1, "bad_distribution", "probabilities must sum exactly to 1");
    return {std::move(probs)};
}

Distribution uniform_distribution(std::size_t n) {
    require(n >= 1, "bad_distribution", "a distribution needs outcomes");
    return {std::vector<Rational>(n, Rational(1, static_cast<unsigned>(n)))};
}

Distribution point_mass(std::size_t n, std::size_t at) {
    require(at < n, "bad_distribution", "point mass outside the outcome set");
    std::vector<Rational> probs(n, 0);
    probs[at] = 1;
    return {std::move(probs)};
}

HopModel translation_hop(const GroupSpec& fiber, Distribution key_dist) {
    std::size_t n = fiber.order();
    require(n <= 4096, "too_large", "translation tables are capped at 2^12 fiber elements");
    require(key_dist.size() == n, "size_mismatch",
            "translation keys range over the fiber group");
    auto elements = enumerate_group(fiber);
    std::map<std::uint64_t, std::uint32_t> index;
    for (std::uint32_t i = 0; i < elements.size(); ++i) index[elements[i].value] = i;
    std::vector<std::vector<std::uint32_t>> action(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t x = 0; x < n; ++x)
            action[k][x] = index[compose(elements[k], elements[x]).value];
    return {std::move(key_dist), std::move(action)};
}

HopModel table_hop(Distribution key_dist, std::vector<std::vector<std::uint32_t>> action,
                   std::size_t fiber_size) {
    require(key_dist.size() == action.size(), "size_mismatch",
            "one action row per key required");
    for (const auto& row : action) {
        require(row.size() == fiber_size, "size_mismatch", "action rows span the fiber");
        std::vector<bool> hit(fiber_size, false);
        for (auto v : row) {
            require(v < fiber_size, "size_mismatch", "action lands outside the fiber");
            require(!hit[v], "size_mismatch", "keys must act by bijections");
            hit[v] = true;
        }
    }
    return {std::move(key_dist), std::move(action)};
}

PathModel make_path_model(const GroupSpec& fiber, std::vector<std::string> nodes,
                          std::vector<Distribution> plaintexts, std::vector<HopModel> hops) {
    require(nodes.size() >= 2, "path_invalid", "a path model needs at least two nodes");
    require(plaintexts.size() == nodes.size() - 1, "size_mismatch",
            "one plaintext distribution per sending node");
    require(hops.size() == nodes.size() - 1, "size_mismatch", "one hop model per edge");
    std::size_t e = fiber.order();
    double log_total = 0.0;
    for (std::size_t h = 0; h < hops.size(); ++h) {
        require(plaintexts[h].size() == e, "size_mismatch",
                "plaintext distributions range over the fiber");
        for (const auto& row : hops[h].action)
            require(row.size() == e, "size_mismatch", "hop actions must cover the fiber");
        log_total += std::log2(static_cast<double>(e)) +
                     std::log2(static_cast<double>(hops[h].key_count()));
    }
    require(log_total <= 24.0, "too_large", "enumeration space exceeds 2^24");
    return {fiber, std::move(nodes), std::move(plaintexts), std::move(hops)};
}

namespace {

// Transition weight of one hop: T(x -> y) = sum of d(k) over keys with
// k(x) = y.
std::vector<std::vector<Rational>> transition(const HopModel& hop, std::size_t e) {
    std::vector<std::vector<Rational>> t(e, std::vector<Rational>(e, 0));
    for (std::size_t k = 0; k < hop.key_count(); ++k)
        for (std::size_t x = 0; x < e; ++x)
            t[x][hop.action[k][x]] += hop.key_dist.probs[k];
    return t;
}

} // namespace

CiphertextResult ciphertext_dist(const PathModel& m) {
    std::size_t e = m.fiber.order();
    std::size_t sending = m.hops.size();
    std::vector<std::vector<std::vector<Rational>>> trans;
    for (const auto& hop : m.hops) trans.push_back(transition(hop, e));

    // forward pass: weight of (chain-consistent events ending with value y)
    std::vector<Rational> weight = m.plaintexts[0].probs;
    for (std::size_t p = 0; p + 1 < sending; ++p) {
        std::vector<Rational> next(e, 0);
        for (std::size_t x = 0; x < e; ++x) {
            if (weight[x] == 0) continue;
            for (std::size_t y = 0; y < e; ++y) {
                if (trans[p][x][y] == 0) continue;
                // the arriving value must equal the plaintext drawn at p+1
                next[y] += weight[x] * trans[p][x][y] * m.plaintexts[p + 1].probs[y];
            }
        }
        weight = std::move(next);
    }
    std::vector<Rational> mu(e, 0);
    for (std::size_t x = 0; x < e; ++x) {
        if (weight[x] == 0) continue;
        for (std::size_t y = 0; y < e; ++y) mu[y] += weight[x] * trans[sending - 1][x][y];
    }
    Rational total = 0;
    for (const auto& v : mu) total += v;
    require(total > 0, "empty_support", "no chain-consistent event has positive probability");
    std::vector<Rational> probs;
    for (const auto& v : mu) probs.push_back(v / total);
    return {make_distribution(std::move(probs)), total};
}

SecrecyVerdict perfect_secrecy_path(const PathModel& m) {
    std::size_t e = m.fiber.order();
    std::size_t sending = m.hops.size();
    std::vector<std::vector<std::vector<Rational>>> trans;
    for (const auto& hop : m.hops) trans.push_back(transition(hop, e));
    auto mu = ciphertext_dist(m); // conditioned marginal and total mass

    // iterate plaintext tuples with positive prior
    std::vector<std::uint32_t> tuple(sending, 0);
    while (true) {
        Rational prior = 1;
        for (std::size_t p = 0; p < sending; ++p) prior *= m.plaintexts[p].probs[tuple[p]];
        if (prior != 0) {
            // chain factor through the fixed tuple
            Rational chain = 1;
            for (std::size_t p = 0; p + 1 < sending; ++p)
                chain *= trans[p][tuple[p]][tuple[p + 1]];
            for (std::uint32_t c = 0; c < e; ++c) {
                Rational marginal = mu.dist.probs[c] * mu.consistency_mass; // = mu(C)
                if (marginal == 0) continue;
                Rational likelihood = chain * trans[sending - 1][tuple[sending - 1]][c];
                // posterior(tuple | C) = likelihood * prior / mu(C); perfect
                // secrecy demands posterior == prior, i.e. likelihood == mu(C).
                if (likelihood != marginal) {
                    SecrecyWitness w;
                    w.plaintexts = tuple;
                    w.cipher = c;
                    w.posterior = likelihood * prior / marginal;
                    w.prior = prior;
                    return {false, w};
                }
            }
        }
        std::size_t pos = 0;
        while (pos < sending && ++tuple[pos] == e) tuple[pos++] = 0;
        if (pos == sending) break;
    }
    return {true, std::nullopt};
}

ShannonReport shannon_conditions(const PathModel& m) {
    std::size_t e = m.fiber.order();
    ShannonReport report;
    report.uniform_keys = true;
    report.unique_transitive = true;
    for (std::size_t h = 0; h < m.hops.size(); ++h) {
        const HopModel& hop = m.hops[h];
        require(hop.key_count() == e, "size_mismatch",
                "the theorem's hypothesis needs |E| = |key group|");
        Rational share(1, static_cast<unsigned>(hop.key_count()));
        for (const auto& p : hop.key_dist.probs)
            if (p != share) {
                report.uniform_keys = false;
                report.detail = "hop " + std::to_string(h) + " keys are not uniform";
            }
        for (std::size_t x = 0; x < e && report.unique_transitive; ++x) {
            for (std::size_t y = 0; y < e; ++y) {
                std::size_t count = 0;
                for (std::size_t k = 0; k < hop.key_count(); ++k)
                    if (hop.action[k][x] == y) ++count;
                if (count != 1) {
                    report.unique_transitive = false;
                    report.detail = "hop " + std::to_string(h) +
                                    " does not act uniquely transitively";
                    break;
                }
            }
        }
    }
    report.holds = report.uniform_keys && report.unique_transitive;
    if (report.holds) {
        report.secrecy_confirmed = perfect_secrecy_path(m).perfect;
        require(report.secrecy_confirmed, "internal_error",
                "the sufficient conditions held but perfect secrecy failed");
    }
    return report;
}

double entropy(const Distribution& d) {
    double h = 0.0;
    for (const auto& p : d.probs) h += nlogn(p);
    return h < kLogTol && h > -kLogTol ? 0.0 : h;
}

EntropyIdentity key_equivocation_identity(const HopModel& hop, const Distribution& plaintext) {
    std::size_t e = plaintext.size();
    std::size_t keys = hop.key_count();
    // joint over (key, cipher); plaintext and key independent
    std::vector<std::vector<Rational>> joint(keys, std::vector<Rational>(e, 0));
    std::vector<Rational> cipher(e, 0);
    for (std::size_t k = 0; k < keys; ++k)
        for (std::size_t x = 0; x < e; ++x) {
            Rational p = hop.key_dist.probs[k] * plaintext.probs[x];
            joint[k][hop.action[k][x]] += p;
            cipher[hop.action[k][x]] += p;
        }
    EntropyIdentity out;
    // H(V|C) = sum_C p(C) H(V | C)
    double h = 0.0;
    for (std::size_t c = 0; c < e; ++c) {
        if (cipher[c] == 0) continue;
        for (std::size_t k = 0; k < keys; ++k) {
            if (joint[k][c] == 0) continue;
            double pj = to_double(joint[k][c]);
            h -= pj * std::log(to_double(joint[k][c] / cipher[c]));
        }
    }
    out.direct = h;
    out.via_rhs = entropy(hop.key_dist) + entropy(plaintext) -
                  entropy(make_distribution(cipher));
    return out;
}

double cond_entropy_key_given_cipher(const HopModel& hop, const Distribution& plaintext) {
    return key_equivocation_identity(hop, plaintext).direct;
}

EntropyCocycleReport entropy_cocycle_check(const GroupSpec& fiber, const Distribution& d_hop1,
                                           const Distribution& d_hop2, const Distribution& p_i,
                                           const Distribution& p_j, const Distribution& p_l) {
    std::size_t n = fiber.order();
    require(d_hop1.size() == n && d_hop2.size() == n, "size_mismatch",
            "key distributions range over the fiber group");
    EntropyCocycleReport report;
    report.h_hop1 = entropy(d_hop1);
    report.h_hop2 = entropy(d_hop2);

    // product (path) model: outcomes are key pairs with product measure
    std::vector<Rational> product;
    product.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) product.push_back(d_hop1.probs[a] * d_hop2.probs[b]);
    report.product_h = entropy(make_distribution(std::move(product)));
    report.additivity_residual = std::abs(report.product_h - (report.h_hop1 + report.h_hop2));

    // collapsed model: the distribution of the composed automorphism
    auto elements = enumerate_group(fiber);
    std::map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i].value] = i;
    std::vector<Rational> collapsed(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            collapsed[index[compose(elements[a], elements[b]).value]] +=
                d_hop1.probs[a] * d_hop2.probs[b];
    report.collapsed_h = entropy(make_distribution(std::move(collapsed)));
    report.collapsed_differs = std::abs(report.collapsed_h - report.product_h) > 1e-9;

    // the conditional quantity: expand each H(V|P) through the identity
    double cond_lj = report.h_hop2 + entropy(p_j) - entropy(p_l);
    double cond_li = report.product_h + entropy(p_i) - entropy(p_l);
    double cond_ji = report.h_hop1 + entropy(p_i) - entropy(p_j);
    report.prop3_residual = std::abs(cond_lj - cond_li + cond_ji);
    return report;
}

} // namespace cochain
