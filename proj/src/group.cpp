#include "group.hpp"

#include <map>
#include <numeric>

#include "error.hpp"

namespace cochain {

namespace {

constexpr std::uint64_t kMaxOrder = 1u << 20;

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

// --- GF(2) bit-matrix helpers (row-major, row i in bits [i*n, i*n+n)) ---

std::uint64_t mat_row(std::uint64_t m, std::uint32_t n, std::uint32_t i) {
    return (m >> (i * n)) & ((n == 64) ? ~0ull : ((1ull << n) - 1));
}

std::uint64_t mat_mul(std::uint64_t a, std::uint64_t b, std::uint32_t n) {
    std::uint64_t out = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint64_t row = mat_row(a, n, i);
        std::uint64_t acc = 0;
        for (std::uint32_t t = 0; t < n; ++t)
            if ((row >> t) & 1) acc ^= mat_row(b, n, t);
        out |= acc << (i * n);
    }
    return out;
}

std::uint64_t mat_identity(std::uint32_t n) {
    std::uint64_t out = 0;
    for (std::uint32_t i = 0; i < n; ++i) out |= 1ull << (i * n + i);
    return out;
}

// Gauss-Jordan over GF(2); returns inverse or nullopt when singular.
std::optional<std::uint64_t> mat_inverse(std::uint64_t m, std::uint32_t n) {
    std::vector<std::uint64_t> a(n), inv(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        a[i] = mat_row(m, n, i);
        inv[i] = 1ull << i;
    }
    for (std::uint32_t col = 0; col < n; ++col) {
        std::uint32_t pivot = col;
        while (pivot < n && !((a[pivot] >> col) & 1)) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        for (std::uint32_t r = 0; r < n; ++r) {
            if (r != col && ((a[r] >> col) & 1)) {
                a[r] ^= a[col];
                inv[r] ^= inv[col];
            }
        }
    }
    std::uint64_t out = 0;
    for (std::uint32_t i = 0; i < n; ++i) out |= inv[i] << (i * n);
    return out;
}

bool mat_invertible(std::uint64_t m, std::uint32_t n) { return mat_inverse(m, n).has_value(); }

std::uint64_t gl_order(std::uint32_t n) {
    // |GL(n,2)| = prod_{i<n} (2^n - 2^i)
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < n; ++i) order *= (1ull << n) - (1ull << i);
    return order;
}

const std::vector<std::uint64_t>& gl_table(std::uint32_t n) {
    static std::map<std::uint32_t, std::vector<std::uint64_t>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<std::uint64_t> all;
    all.reserve(gl_order(n));
    std::uint64_t total = 1ull << (n * n);
    for (std::uint64_t v = 0; v < total; ++v)
        if (mat_invertible(v, n)) all.push_back(v);
    return cache.emplace(n, std::move(all)).first->second;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return (a * b) % m; // operands < 2^20, no overflow
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) {
    // extended Euclid
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
    while (newr != 0) {
        std::int64_t q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

} // namespace

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

GroupSpec GroupSpec::cyclic_mul(std::uint64_t p, std::uint64_t generator) {
    require(p <= kMaxOrder, "order_too_large", "cyclic_mul modulus exceeds 2^20");
    require(is_prime(p), "not_prime", "cyclic_mul modulus must be prime");
    GroupSpec s;
    s.kind = GroupKind::CyclicMul;
    s.p = p;
    s.generator = generator % p;
    if (generator != 0) {
        require(s.generator != 0, "bad_generator", "generator must be a unit mod p");
        // The configured generator must have order exactly p-1.
        GroupElement g{s, s.generator};
        for (std::uint64_t q : prime_factors(p - 1)) {
            require(power(g, static_cast<std::int64_t>((p - 1) / q)).value != 1,
                    "bad_generator", "generator does not have order p-1");
        }
    }
    return s;
}

GroupSpec GroupSpec::cyclic_add(std::uint64_t m, std::uint64_t generator) {
    require(m >= 1 && m <= kMaxOrder, "order_too_large", "cyclic_add modulus out of range");
    GroupSpec s;
    s.kind = GroupKind::CyclicAdd;
    s.m = m;
    s.generator = generator % m;
    require(m == 1 || std::gcd(s.generator, m) == 1, "bad_generator",
            "cyclic_add generator must be a unit mod m");
    return s;
}

GroupSpec GroupSpec::xor_vec(std::uint32_t n) {
    require(n >= 1 && n <= 20, "order_too_large", "xor_vec width out of range (1..20)");
    GroupSpec s;
    s.kind = GroupKind::XorVec;
    s.n = n;
    return s;
}

GroupSpec GroupSpec::mat_gl(std::uint32_t n) {
    require(n >= 1 && n <= 8, "order_too_large", "mat_gl dimension out of range (1..8)");
    if (n <= 4) {
        require(gl_order(n) <= kMaxOrder, "order_too_large", "mat_gl order exceeds 2^20");
    } else {
        fail("order_too_large", "mat_gl enumeration beyond n=4 exceeds the 2^20 order cap");
    }
    GroupSpec s;
    s.kind = GroupKind::MatGL;
    s.n = n;
    return s;
}

GroupSpec GroupSpec::ext_chain(std::uint64_t p, std::uint32_t k, std::uint64_t generator) {
    require(is_prime(p), "not_prime", "ext_chain base must be prime");
    require(k >= 1, "bad_depth", "ext_chain depth must be >= 1");
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        order *= p;
        require(order <= kMaxOrder, "order_too_large", "ext_chain order exceeds 2^20");
    }
    GroupSpec s;
    s.kind = GroupKind::ExtChain;
    s.p = p;
    s.k = k;
    s.generator = generator % order;
    require(std::gcd(s.generator, p) == 1, "bad_generator",
            "ext_chain generator must be a unit mod p");
    return s;
}

std::uint64_t GroupSpec::order() const {
    switch (kind) {
        case GroupKind::CyclicMul: return p - 1;
        case GroupKind::CyclicAdd: return m;
        case GroupKind::XorVec: return 1ull << n;
        case GroupKind::MatGL: return gl_order(n);
        case GroupKind::ExtChain: return pow_u64(p, k);
    }
    return 0;
}

bool GroupSpec::abelian() const {
    return kind != GroupKind::MatGL || n < 2;
}

std::string GroupSpec::describe() const {
    switch (kind) {
        case GroupKind::CyclicMul: return "cyclic_mul(p=" + std::to_string(p) + ")";
        case GroupKind::CyclicAdd: return "cyclic_add(m=" + std::to_string(m) + ")";
        case GroupKind::XorVec: return "xor_vec(n=" + std::to_string(n) + ")";
        case GroupKind::MatGL: return "mat_gl(n=" + std::to_string(n) + ")";
        case GroupKind::ExtChain:
            return "ext_chain(p=" + std::to_string(p) + ",k=" + std::to_string(k) + ")";
    }
    return "unknown";
}

GroupElement make_element(const GroupSpec& spec, std::uint64_t raw) {
    switch (spec.kind) {
        case GroupKind::CyclicMul: {
            std::uint64_t v = raw % spec.p;
            require(v != 0, "invalid_element", "0 is not a unit mod p");
            return {spec, v};
        }
        case GroupKind::CyclicAdd:
            return {spec, raw % spec.m};
        case GroupKind::XorVec: {
            std::uint64_t mask = (spec.n == 64) ? ~0ull : ((1ull << spec.n) - 1);
            require((raw & ~mask) == 0, "invalid_element", "bits beyond the configured width");
            return {spec, raw};
        }
        case GroupKind::MatGL: {
            std::uint64_t mask = (spec.n * spec.n == 64) ? ~0ull : ((1ull << (spec.n * spec.n)) - 1);
            require((raw & ~mask) == 0, "invalid_element", "bits beyond the matrix layout");
            require(mat_invertible(raw, spec.n), "matrix_singular",
                    "matrix is not invertible over GF(2)");
            return {spec, raw};
        }
        case GroupKind::ExtChain:
            return {spec, raw % spec.order()};
    }
    fail("invalid_element", "unknown group kind");
}

GroupElement identity(const GroupSpec& spec) {
    switch (spec.kind) {
        case GroupKind::CyclicMul: return {spec, 1};
        case GroupKind::CyclicAdd: return {spec, 0};
        case GroupKind::XorVec: return {spec, 0};
        case GroupKind::MatGL: return {spec, mat_identity(spec.n)};
        case GroupKind::ExtChain: return {spec, 0};
    }
    fail("invalid_element", "unknown group kind");
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
    require(a.spec == b.spec, "spec_mismatch", "composing elements of different groups");
    switch (a.spec.kind) {
        case GroupKind::CyclicMul: return {a.spec, mul_mod(a.value, b.value, a.spec.p)};
        case GroupKind::CyclicAdd: return {a.spec, (a.value + b.value) % a.spec.m};
        case GroupKind::XorVec: return {a.spec, a.value ^ b.value};
        case GroupKind::MatGL: return {a.spec, mat_mul(a.value, b.value, a.spec.n)};
        case GroupKind::ExtChain: return {a.spec, (a.value + b.value) % a.spec.order()};
    }
    fail("invalid_element", "unknown group kind");
}

GroupElement inverse(const GroupElement& a) {
    switch (a.spec.kind) {
        case GroupKind::CyclicMul: return {a.spec, inv_mod_prime(a.value, a.spec.p)};
        case GroupKind::CyclicAdd: return {a.spec, (a.spec.m - a.value) % a.spec.m};
        case GroupKind::XorVec: return a;
        case GroupKind::MatGL: return {a.spec, *mat_inverse(a.value, a.spec.n)};
        case GroupKind::ExtChain: {
            std::uint64_t ord = a.spec.order();
            return {a.spec, (ord - a.value) % ord};
        }
    }
    fail("invalid_element", "unknown group kind");
}

GroupElement power(const GroupElement& a, std::int64_t e) {
    GroupElement base = a;
    std::uint64_t exp;
    if (e < 0) {
        base = inverse(a);
        exp = static_cast<std::uint64_t>(-(e + 1)) + 1;
    } else {
        exp = static_cast<std::uint64_t>(e);
    }
    GroupElement acc = identity(a.spec);
    while (exp > 0) {
        if (exp & 1) acc = compose(acc, base);
        base = compose(base, base);
        exp >>= 1;
    }
    return acc;
}

std::vector<GroupElement> enumerate_group(const GroupSpec& spec) {
    std::vector<GroupElement> out;
    std::uint64_t n = spec.order();
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(nth_element(spec, i));
    return out;
}

GroupElement nth_element(const GroupSpec& spec, std::uint64_t index) {
    require(index < spec.order(), "index_out_of_range", "element index beyond group order");
    switch (spec.kind) {
        case GroupKind::CyclicMul: return {spec, index + 1};
        case GroupKind::CyclicAdd: return {spec, index};
        case GroupKind::XorVec: return {spec, index};
        case GroupKind::MatGL: return {spec, gl_table(spec.n)[index]};
        case GroupKind::ExtChain: return {spec, index};
    }
    fail("invalid_element", "unknown group kind");
}

std::optional<std::uint64_t> discrete_log(const GroupElement& base,
                                          const GroupElement& target,
                                          std::uint64_t bound) {
    require(base.spec == target.spec, "spec_mismatch", "discrete_log across groups");
    require(bound >= 1, "bad_bound", "discrete_log bound must be >= 1");
    GroupElement cur = identity(base.spec);
    for (std::uint64_t e = 0; e < bound; ++e) {
        if (cur == target) return e;
        cur = compose(cur, base);
    }
    return std::nullopt;
}

GroupElement exp_element(const GroupSpec& spec, std::uint64_t e) {
    require(spec.generator != 0, "bad_generator", "exp requires a configured generator");
    GroupElement g = make_element(spec, spec.generator);
    return power(g, static_cast<std::int64_t>(e % (2 * spec.order())));
}

std::uint64_t log_element(const GroupElement& a) {
    GroupElement g = make_element(a.spec, a.spec.generator);
    auto e = discrete_log(g, a, a.spec.order());
    require(e.has_value(), "not_in_image", "element is not a power of the generator");
    return *e;
}

GroupElement ext_project(const GroupElement& a) {
    require(a.spec.kind == GroupKind::ExtChain, "spec_mismatch", "ext_project needs ext_chain");
    require(a.spec.k >= 2, "bad_depth", "ext_project needs depth >= 2");
    GroupSpec lower = GroupSpec::ext_chain(a.spec.p, a.spec.k - 1, a.spec.generator);
    return {lower, a.value % lower.order()};
}

GroupElement ext_lift(const GroupElement& a) {
    require(a.spec.kind == GroupKind::ExtChain, "spec_mismatch", "ext_lift needs ext_chain");
    GroupSpec upper = GroupSpec::ext_chain(a.spec.p, a.spec.k + 1, a.spec.generator);
    return {upper, a.value}; // canonical section: integer representative in [0, p^k)
}

GroupElement ext_kernel_div(const GroupElement& a) {
    require(a.spec.kind == GroupKind::ExtChain, "spec_mismatch", "ext_kernel_div needs ext_chain");
    require(a.spec.k >= 2, "bad_depth", "ext_kernel_div needs depth >= 2");
    std::uint64_t step = pow_u64(a.spec.p, a.spec.k - 1);
    require(a.value % step == 0, "not_in_kernel",
            "value is not in the kernel of the projection");
    GroupSpec band = GroupSpec::ext_chain(a.spec.p, 1, a.spec.generator);
    return {band, (a.value / step) % a.spec.p};
}

bool mat_bit(std::uint64_t m, std::uint32_t n, std::uint32_t row, std::uint32_t col) {
    return (m >> (row * n + col)) & 1;
}

GroupElement mat_transpose(const GroupElement& a) {
    require(a.spec.kind == GroupKind::MatGL, "not_linear", "transpose needs mat_gl keys");
    std::uint32_t n = a.spec.n;
    std::uint64_t out = 0;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (mat_bit(a.value, n, i, j)) out |= 1ull << (j * n + i);
    return {a.spec, out};
}

GroupElement mat_kronecker(const GroupElement& a, const GroupElement& b) {
    require(a.spec.kind == GroupKind::MatGL && b.spec.kind == GroupKind::MatGL, "not_linear",
            "kronecker product needs mat_gl keys");
    std::uint32_t n1 = a.spec.n, n2 = b.spec.n;
    GroupSpec big = GroupSpec::mat_gl(n1 * n2);
    std::uint64_t out = 0;
    for (std::uint32_t i1 = 0; i1 < n1; ++i1)
        for (std::uint32_t i2 = 0; i2 < n2; ++i2)
            for (std::uint32_t j1 = 0; j1 < n1; ++j1)
                for (std::uint32_t j2 = 0; j2 < n2; ++j2)
                    if (mat_bit(a.value, n1, i1, j1) && mat_bit(b.value, n2, i2, j2))
                        out |= 1ull << ((i1 * n2 + i2) * (n1 * n2) + (j1 * n2 + j2));
    return {big, out};
}

GroupElement ext_lift_to(const GroupElement& a, std::uint32_t depth) {
    require(a.spec.kind == GroupKind::ExtChain, "spec_mismatch", "ext_lift_to needs ext_chain");
    require(depth >= a.spec.k, "bad_depth", "ext_lift_to target depth below current");
    GroupElement cur = a;
    while (cur.spec.k < depth) cur = ext_lift(cur);
    return cur;
}

} // namespace cochain
