#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "exbound/quadratic.hpp"
#include "exbound/weil.hpp"

#include <chrono>

using namespace exbound;

namespace {

mpz_class pow_z(long base, unsigned long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(std::labs(base)), e);
    return (base < 0 && (e & 1)) ? mpz_class(-r) : r;
}

RingElement E(long x, long y)
{
    return RingElement({mpz_class(x), mpz_class(y)});
}

}  // namespace

TEST_CASE("enumerate_FR examples")
{
    const auto fr2 = enumerate_FR(2);
    CHECK(fr2.size() == 10);
    bool has_one_plus_i = false;
    for (const auto& w : fr2) {
        CHECK(w.a * w.a <= 8);
        has_one_plus_i = has_one_plus_i || (w.a == -2 && w.root == RootChoice::upper);
    }
    CHECK(has_one_plus_i);

    const auto fr1 = enumerate_FR(1);
    CHECK(fr1.size() == 8);  // a = -1, 0, 1 give two roots each, a = +-2 one each
    CHECK(fr1.front().a == -2);
    CHECK(fr1.front().is_double_root());
    CHECK(fr1.back().a == 2);

    CHECK(enumerate_FR(5).size() == 18);
    CHECK(enumerate_FR(3).size() == 14);
    CHECK_THROWS(enumerate_FR(0));
}

TEST_CASE("power_trace examples")
{
    CHECK(power_trace({-2, 2}, 12) == -128);
    CHECK(power_trace({-2, 2}, 0) == 2);
    CHECK(power_trace({5, 7}, 0) == 2);
    CHECK(power_trace({-3, 3}, 48) == 2 * pow_z(3, 24));
}

TEST_CASE("weil_power_check examples")
{
    const auto start = std::chrono::steady_clock::now();
    const WeilPowerCheck c = weil_power_check({-2, 2});
    CHECK(c.beta12 == mpz_class(-64));
    CHECK(c.beta24 == mpz_class(4096));
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(1));

    for (long q : {2L, 3L, 5L, 7L, 11L}) {
        const WeilPowerCheck z = weil_power_check({0, q});
        // beta^2 = -q, so beta^12 = (-q)^6 = q^6.
        CHECK(z.beta12 == pow_z(q, 6));
        CHECK(beta_power({0, mpz_class(q)}, 2).x == -q);
        CHECK(beta_power({0, mpz_class(q)}, 2).y == 0);
    }
    CHECK(weil_power_check({-1, 1}).beta12 == mpz_class(1));
    CHECK(weil_power_check({2, 1}).beta12 == mpz_class(1));  // beta = -1
    // beta = (1 + sqrt(-7))/2 has no rational power below 24.
    CHECK_FALSE(weil_power_check({-1, 2}).beta12.has_value());
}

TEST_CASE("FR invariants: a^2 <= 4n and beta * conj(beta) = n")
{
    for (long n = 1; n <= 60; ++n) {
        for (const auto& w : enumerate_FR(n)) {
            REQUIRE(w.a * w.a <= 4 * n);
            // In Z[beta]: beta * conj(beta) = beta * (-a - beta) = n.
            const BetaPower b = beta_power(w, 1);
            REQUIRE(b.x == 0);
            REQUIRE(b.y == 1);
            const ComplexInterval v = weil_value(w, 128);
            REQUIRE(abs2(v).contains(mpz_class(n)));
        }
    }
}

TEST_CASE("power_trace matches interval evaluation and Z[beta] powering")
{
    for (long n = 1; n <= 50; ++n) {
        for (const auto& w : enumerate_FR(n)) {
            if (w.root == RootChoice::lower)
                continue;
            const ComplexInterval beta = weil_value(w, 512);
            ComplexInterval power(Interval(1L, 512), Interval(0L, 512));
            for (unsigned long M = 0; M <= 200; ++M) {
                const mpz_class s = power_trace(w, M);
                // beta^M + conj(beta)^M = 2 Re(beta^M).
                REQUIRE((power.re + power.re).contains(s));
                if (M % 37 == 0) {
                    const BetaPower b = beta_power(w, M);
                    REQUIRE(2 * b.x - w.a * b.y == s);
                }
                power *= beta;
            }
        }
    }
}

TEST_CASE("conjugate roots share traces and norms")
{
    for (long n : {2L, 3L, 5L, 7L, 13L}) {
        for (const auto& w : enumerate_FR(n)) {
            const WeilNumber c = w.conjugate();
            CHECK(power_trace(w, 48) == power_trace(c, 48));
            CHECK(c.conjugate() == w);
            const ComplexInterval prod = weil_value(w, 128) * weil_value(c, 128);
            CHECK(prod.re.contains(mpz_class(n)));
            CHECK(prod.im.contains(mpz_class(0)));
        }
    }
}

TEST_CASE("beta_in_field examples")
{
    const FieldCard gauss = build_card(-1);
    CHECK(beta_in_field({-4, 5, RootChoice::upper}, gauss) == E(2, 1));
    CHECK(beta_in_field({-4, 5, RootChoice::lower}, gauss) == E(2, -1));
    CHECK_FALSE(beta_in_field({-3, 3}, build_card(-5)).has_value());
    const FieldCard r = build_card(2);
    for (const auto& w : enumerate_FR(7))
        if (!w.is_double_root())
            CHECK_FALSE(beta_in_field(w, r).has_value());
    // Eisenstein integers: (a=-1, n=1) is the root (1 + sqrt -3)/2 = omega.
    CHECK(beta_in_field({-1, 1}, build_card(-3)) == E(0, 1));
    // Double roots are rational.
    CHECK(beta_in_field({-4, 4}, build_card(-5)) == E(2, 0));
}

TEST_CASE("beta_in_field returns a root of x^2 + a x + n")
{
    for (long D : {-1L, -2L, -3L, -5L, -7L, -11L}) {
        const FieldCard k = build_card(D);
        for (long n = 1; n <= 40; ++n) {
            for (const auto& w : enumerate_FR(n)) {
                const auto b = beta_in_field(w, k);
                if (!b)
                    continue;
                const RingElement value =
                    ring_add(ring_add(ring_mul(*b, *b, k), ring_scale(*b, w.a)), ring_integer(k, w.n));
                REQUIRE(value.is_zero());
                // The chosen root matches the interval value at the distinguished embedding.
                const ComplexInterval z = EmbeddingTable(k, 128).embed(0, *b);
                const ComplexInterval expected = weil_value(w, 128);
                REQUIRE(z.re.overlaps(expected.re));
                REQUIRE(z.im.overlaps(expected.im));
            }
        }
    }
}
