#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slhilb/poly.hpp"
#include "slhilb/sl2rep.hpp"

#include <random>

using namespace slhilb;

namespace {

SparsePoly var(const RingPtr& r, const std::string& name) {
    return SparsePoly::variable(r, name);
}

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

Mono random_mono(const RingPtr& ring, std::mt19937_64& eng, int max_deg) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<int> dv(0, static_cast<int>(ring->size()) - 1);
    Mono m(ring->size(), 0);
    int deg = dd(eng);
    for (int i = 0; i < deg; ++i) m[static_cast<size_t>(dv(eng))]++;
    return m;
}

}  // namespace

TEST_CASE("monomial enumeration counts match the stars-and-bars formula") {
    CHECK(monomials_of_degree(4, 0).size() == 1);
    CHECK(monomials_of_degree(4, 1).size() == 4);
    CHECK(monomials_of_degree(4, 2).size() == 10);
    CHECK(monomials_of_degree(12, 2).size() == 78);
    CHECK(monomials_of_degree(12, 3).size() == 364);
    for (size_t v = 1; v <= 5; ++v)
        for (int d = 0; d <= 5; ++d) {
            auto monos = monomials_of_degree(v, d);
            CHECK(static_cast<long>(monos.size()) ==
                  binom(static_cast<long>(v) + d - 1, d));
            for (const auto& m : monos) CHECK(mono_degree(m) == d);
        }
}

TEST_CASE("weight dimensions of the free ring on a,b,c,d in degree one") {
    auto r = ring_abcd();
    auto dims = weight_dimensions(r, {}, 1);
    CHECK(dims.at({1, 1}) == 2);
    CHECK(dims.at({1, -1}) == 2);
    CHECK(dims.at({0, 0}) == 1);
}

TEST_CASE("weight dimensions of the quadric cone quotient in degree two") {
    auto r = ring_abcd();
    SparsePoly det = var(r, "a") * var(r, "d") - var(r, "b") * var(r, "c");
    auto dims = weight_dimensions(r, {det}, 2);
    CHECK(dims.at({2, 0}) == 3);
    CHECK(dims.at({2, 2}) == 3);
    CHECK(dims.at({2, -2}) == 3);
    long total = 0;
    for (const auto& [key, d] : dims)
        if (key.first == 2) total += d;
    CHECK(total == 9);
}

TEST_CASE("quadric cone quotient decomposes with one copy of each irreducible") {
    auto r = ring_abcd();
    SparsePoly det = var(r, "a") * var(r, "d") - var(r, "b") * var(r, "c");
    auto t = isotypic_table(r, {det}, 6);
    for (int d = 0; d <= 6; ++d)
        for (int n = 0; n <= 6; ++n)
            CHECK(t.at(d, n) == (d == n ? n + 1 : 0));
    // degree-n piece of the quotient has dimension (n+1)^2
    for (int n = 0; n <= 6; ++n) {
        long dim = 0;
        for (int d = 0; d <= n; ++d) dim += t.at(d, n) * (d + 1);
        CHECK(dim == (n + 1) * (n + 1));
    }
}

TEST_CASE("free ring on a single weight pair is one irreducible per degree") {
    auto r = ring_v1_pairs(1);
    auto t = isotypic_table(r, {}, 3);
    for (int d = 0; d <= 3; ++d)
        for (int n = 0; n <= 3; ++n)
            CHECK(t.at(d, n) == (d == n ? 1 : 0));
}

TEST_CASE("free ring on six weight pairs matches the binomial dimension count") {
    auto r = ring_x26();
    auto t = isotypic_table(r, {}, 4);
    for (int n = 0; n <= 4; ++n) {
        long dim = 0;
        for (int d = 0; d <= n; ++d) dim += t.at(d, n) * (d + 1);
        CHECK(dim == binom(n + 11, 11));
    }
}

TEST_CASE("hilbert function of the quadric cone quotient is d+1") {
    auto r = ring_abcd();
    SparsePoly det = var(r, "a") * var(r, "d") - var(r, "b") * var(r, "c");
    auto h = hilbert_function(isotypic_table(r, {det}, 6));
    for (int d = 0; d <= 6; ++d) {
        CHECK(h.at(d).value == d + 1);
        CHECK(h.at(d).truncation_limited == (d + 2 > 6));
    }
}

TEST_CASE("hilbert function edge cases") {
    SUBCASE("zero ideal on twelve variables has h(1) = 6") {
        auto r = ring_x26();
        auto h = hilbert_function(isotypic_table(r, {}, 2));
        // degree 0 constant plus the 15 invariant quadrics
        CHECK(h.at(0).value == 16);
        CHECK(h.at(1).value == 6);
        CHECK(h.at(1).truncation_limited);
    }
    SUBCASE("unit ideal gives the zero table") {
        auto r = ring_abcd();
        auto t = isotypic_table(r, {SparsePoly::constant(r, Rational(1))}, 3);
        auto h = hilbert_function(t);
        for (int d = 0; d <= 3; ++d) CHECK(h.at(d).value == 0);
    }
}

TEST_CASE("equivariance check accepts closed ideals and rejects open ones") {
    auto r = ring_abcd();
    SparsePoly det = var(r, "a") * var(r, "d") - var(r, "b") * var(r, "c");
    CHECK(check_equivariant_ideal({det}));
    CHECK_FALSE(check_equivariant_ideal({var(r, "a")}));
    CHECK(check_equivariant_ideal({}));
    // the full span of degree-one forms is closed even though no single
    // variable is
    CHECK(check_equivariant_ideal({var(r, "a"), var(r, "b"), var(r, "c"), var(r, "d")}));
}

TEST_CASE("isotypic table rejects non-equivariant input") {
    auto r = ring_abcd();
    CHECK_THROWS_AS(isotypic_table(r, {var(r, "a")}, 2), std::invalid_argument);
}

TEST_CASE("weight dimensions reject malformed generators") {
    auto r = ring_abcd();
    SparsePoly mixed_deg = var(r, "a") + var(r, "a") * var(r, "b");
    CHECK_THROWS_AS(weight_dimensions(r, {mixed_deg}, 2), std::invalid_argument);
    SparsePoly mixed_wt = var(r, "a") + var(r, "c");
    CHECK_THROWS_AS(weight_dimensions(r, {mixed_wt}, 2), std::invalid_argument);
}

TEST_CASE("lowering operator satisfies [H,E] = -2E on random monomials") {
    std::mt19937_64 eng(20260819);
    for (const auto& ring : {ring_x26(), ring_abcd()}) {
        for (int trial = 0; trial < 40; ++trial) {
            Mono m = random_mono(ring, eng, 4);
            SparsePoly p = SparsePoly::monomial(ring, m, Rational(rat(1, 1)));
            SparsePoly lhs = apply_H(apply_E(p)) - apply_E(apply_H(p));
            SparsePoly rhs = Rational(-2) * apply_E(p);
            CHECK(lhs == rhs);
        }
    }
}
