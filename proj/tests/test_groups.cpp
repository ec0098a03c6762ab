#include <doctest.h>

#include <cstdint>
#include <random>
#include <set>

#include "error.hpp"
#include "group.hpp"

using namespace cochain;

namespace {

// Independent oracle: repeated modular multiplication, no square-and-multiply.
std::uint64_t naive_pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    for (std::uint64_t i = 0; i < e; ++i) r = (r * base) % mod;
    return r;
}

} // namespace

TEST_CASE("compose matches integer oracles") {
    auto z7 = GroupSpec::cyclic_mul(7);
    CHECK(compose(make_element(z7, 3), make_element(z7, 5)).value == (3ull * 5ull) % 7ull);
    CHECK(compose(make_element(z7, 3), make_element(z7, 5)).value == 1);

    auto x3 = GroupSpec::xor_vec(3);
    CHECK(compose(make_element(x3, 0b101), make_element(x3, 0b110)).value == (0b101ull ^ 0b110ull));
    CHECK(compose(make_element(x3, 0b101), make_element(x3, 0b110)).value == 0b011);

    // identity neutral on a sample of kinds
    for (const auto& spec : {z7, GroupSpec::cyclic_add(12), GroupSpec::ext_chain(5, 2)}) {
        for (const auto& x : enumerate_group(spec)) {
            CHECK(compose(x, identity(spec)) == x);
            CHECK(compose(identity(spec), x) == x);
        }
    }
}

TEST_CASE("compose rejects mismatched specs") {
    auto a = make_element(GroupSpec::cyclic_add(5), 2);
    auto b = make_element(GroupSpec::cyclic_add(7), 2);
    CHECK_THROWS_WITH_AS(compose(a, b), doctest::Contains("different groups"), Error);
}

TEST_CASE("power by square-and-multiply") {
    auto z7 = GroupSpec::cyclic_mul(7);
    auto three = make_element(z7, 3);
    CHECK(power(three, 6).value == naive_pow_mod(3, 6, 7)); // Fermat: 1
    CHECK(power(three, 6).value == 1);
    CHECK(power(three, 2).value == 2); // 9 mod 7
    CHECK(power(three, 0) == identity(z7));
    CHECK(power(three, -1) == inverse(three));
    for (std::int64_t e = -10; e <= 10; ++e) {
        std::uint64_t expect = e >= 0
            ? naive_pow_mod(3, static_cast<std::uint64_t>(e), 7)
            : naive_pow_mod(inverse(three).value, static_cast<std::uint64_t>(-e), 7);
        CHECK(power(three, e).value == expect);
    }
    // power(a, order) = identity across kinds
    for (const auto& spec :
         {GroupSpec::cyclic_mul(11), GroupSpec::cyclic_add(9), GroupSpec::xor_vec(4),
          GroupSpec::mat_gl(2), GroupSpec::ext_chain(3, 2)}) {
        for (const auto& x : enumerate_group(spec))
            CHECK(power(x, static_cast<std::int64_t>(spec.order())) == identity(spec));
    }
}

TEST_CASE("discrete_log brute-force oracle") {
    auto z7 = GroupSpec::cyclic_mul(7);
    auto three = make_element(z7, 3);
    CHECK(discrete_log(three, make_element(z7, 2), 6) == 2);
    CHECK(discrete_log(three, make_element(z7, 4), 6) == 4); // 3^4 = 81 = 4 mod 7
    CHECK(discrete_log(three, identity(z7), 6) == 0);
    CHECK(!discrete_log(make_element(z7, 1), make_element(z7, 3), 100).has_value());
    // least exponent wins
    auto z4 = GroupSpec::cyclic_add(4);
    CHECK(discrete_log(make_element(z4, 2), make_element(z4, 0), 4) == 0);
}

TEST_CASE("group laws hold exhaustively for small orders") {
    for (const auto& spec :
         {GroupSpec::cyclic_mul(13), GroupSpec::cyclic_add(8), GroupSpec::xor_vec(3),
          GroupSpec::mat_gl(2), GroupSpec::ext_chain(2, 3)}) {
        auto all = enumerate_group(spec);
        REQUIRE(all.size() == spec.order());
        std::set<std::uint64_t> distinct;
        for (const auto& x : all) distinct.insert(x.value);
        CHECK(distinct.size() == all.size());
        for (const auto& x : all) {
            CHECK(compose(x, inverse(x)) == identity(spec));
            CHECK(compose(inverse(x), x) == identity(spec));
        }
        for (const auto& x : all)
            for (const auto& y : all)
                for (const auto& z : all)
                    CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
    }
}

TEST_CASE("group laws hold on random samples for larger orders") {
    std::mt19937_64 rng(20260811);
    for (const auto& spec : {GroupSpec::cyclic_mul(65537, 3), GroupSpec::xor_vec(16),
                             GroupSpec::mat_gl(4), GroupSpec::ext_chain(2, 16)}) {
        std::uniform_int_distribution<std::uint64_t> pick(0, spec.order() - 1);
        for (int i = 0; i < 10000; ++i) {
            auto x = nth_element(spec, pick(rng));
            auto y = nth_element(spec, pick(rng));
            auto z = nth_element(spec, pick(rng));
            CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
            CHECK(compose(x, inverse(x)) == identity(spec));
        }
    }
}

TEST_CASE("mat_gl is non-abelian from dimension 2 and validates invertibility") {
    auto gl2 = GroupSpec::mat_gl(2);
    CHECK(!gl2.abelian());
    CHECK(GroupSpec::mat_gl(1).abelian());
    CHECK(gl2.order() == 6);
    CHECK_THROWS_WITH_AS(make_element(gl2, 0b0000), doctest::Contains("not invertible"), Error);
    bool commutes_everywhere = true;
    for (const auto& x : enumerate_group(gl2))
        for (const auto& y : enumerate_group(gl2))
            if (!(compose(x, y) == compose(y, x))) commutes_everywhere = false;
    CHECK(!commutes_everywhere);
}

TEST_CASE("cyclic_mul validates primality and generators") {
    CHECK_THROWS_WITH_AS(GroupSpec::cyclic_mul(15), doctest::Contains("prime"), Error);
    CHECK_NOTHROW(GroupSpec::cyclic_mul(7, 3));  // 3 generates (Z/7)*
    CHECK_THROWS_WITH_AS(GroupSpec::cyclic_mul(7, 2), doctest::Contains("order p-1"), Error);
    // generator order p-1: every power below p-1 is != 1
    auto spec = GroupSpec::cyclic_mul(65537, 3);
    auto g = make_element(spec, 3);
    CHECK(power(g, 65536).value == 1);
    CHECK(power(g, 32768).value != 1);
}

TEST_CASE("ext_chain structure maps") {
    auto e52 = GroupSpec::ext_chain(5, 2);
    CHECK(ext_project(make_element(e52, 17)).value == 2); // 17 mod 5
    auto e51 = GroupSpec::ext_chain(5, 1);
    CHECK(ext_lift(make_element(e51, 2)).value == 2); // canonical section
    CHECK(ext_kernel_div(make_element(e52, 15)).value == 3); // 15 = 3*5
    CHECK_THROWS_WITH_AS(ext_kernel_div(make_element(e52, 7)),
                         doctest::Contains("kernel"), Error);

    // project ∘ lift = identity map
    for (const auto& x : enumerate_group(e51))
        CHECK(ext_project(ext_lift(x)) == x);

    // ext_project is a homomorphism with kernel of size exactly p,
    // and ext_kernel_div is a bijection kernel -> Z/p.
    std::set<std::uint64_t> kernel_images;
    std::size_t kernel_size = 0;
    for (const auto& x : enumerate_group(e52)) {
        for (const auto& y : enumerate_group(e52))
            CHECK(ext_project(compose(x, y)) == compose(ext_project(x), ext_project(y)));
        if (ext_project(x).value == 0) {
            ++kernel_size;
            kernel_images.insert(ext_kernel_div(x).value);
        }
    }
    CHECK(kernel_size == 5);
    CHECK(kernel_images.size() == 5);

    // kernel-div inverts multiplication by p^{k-1}
    for (std::uint64_t x = 0; x < 5; ++x)
        CHECK(ext_kernel_div(make_element(e52, (x * 5) % 25)).value == x);
}

TEST_CASE("enumeration and nth_element agree") {
    for (const auto& spec : {GroupSpec::cyclic_mul(11), GroupSpec::mat_gl(3),
                             GroupSpec::xor_vec(5), GroupSpec::ext_chain(3, 3)}) {
        auto all = enumerate_group(spec);
        for (std::size_t i = 0; i < all.size(); ++i)
            CHECK(nth_element(spec, i) == all[i]);
    }
}

TEST_CASE("exp and log round-trip through the configured generator") {
    auto z7 = GroupSpec::cyclic_mul(7, 3);
    CHECK(exp_element(z7, 2).value == 2); // 3^2 = 9 = 2
    CHECK(log_element(make_element(z7, 2)) == 2);
    auto z12 = GroupSpec::cyclic_add(12, 1);
    CHECK(exp_element(z12, 3).value == 3);
    for (std::uint64_t e = 0; e < 12; ++e)
        CHECK(log_element(exp_element(z12, e)) == e);
}
