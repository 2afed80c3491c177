#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "exbound/arith.hpp"
#include "exbound/quaternion.hpp"

using namespace exbound;

namespace {

// Behaviour of l in the quadratic field of discriminant disc by brute force:
// odd l splits iff disc is a nonzero square mod l; 2 splits iff disc = 1 mod 8.
SplitType brute_force_split(long disc, long l)
{
    const long r = ((disc % l) + l) % l;
    if (r == 0)
        return SplitType::ramified;
    if (l == 2)
        return ((disc % 8) + 8) % 8 == 1 ? SplitType::split : SplitType::inert;
    for (long x = 1; x < l; ++x)
        if (x * x % l == r)
            return SplitType::split;
    return SplitType::inert;
}

}  // namespace

TEST_CASE("validate_disc examples")
{
    CHECK(validate_disc(6).primes == std::vector<mpz_class>{2, 3});
    CHECK(validate_disc(10).primes == std::vector<mpz_class>{2, 5});
    CHECK(validate_disc(210).primes.size() == 4);
    CHECK_THROWS_AS(validate_disc(30), std::invalid_argument);
    CHECK_THROWS_AS(validate_disc(1), std::invalid_argument);
    CHECK_THROWS_AS(validate_disc(12), std::invalid_argument);
    CHECK_THROWS_AS(validate_disc(7), std::invalid_argument);
}

TEST_CASE("splits_imag_quadratic examples")
{
    const QuaternionDisc six = validate_disc(6);
    CHECK(splits_imag_quadratic(six, 3));
    CHECK_FALSE(splits_imag_quadratic(six, 7));
    CHECK(splitting_witness(six, 7) == mpz_class(2));
    CHECK_FALSE(splits_imag_quadratic(six, 5));
    CHECK(splitting_witness(six, 5) == mpz_class(3));
    CHECK(imaginary_quadratic_disc(5) == -20);
    CHECK(imaginary_quadratic_disc(7) == -7);
    CHECK(imaginary_quadratic_disc(2) == -8);
}

TEST_CASE("local splitting matches square-class enumeration")
{
    for (std::uint32_t q : primes_up_to(300)) {
        const long disc = imaginary_quadratic_disc(q).get_si();
        for (std::uint32_t l : primes_up_to(60)) {
            INFO("q=" << q << " l=" << l);
            REQUIRE(local_split(disc, l) == brute_force_split(disc, l));
        }
    }
}

TEST_CASE("splits_imag_quadratic depends only on the per-l split vector")
{
    const std::vector<long> discs{6, 10, 14, 15, 21, 22, 35, 210, 330};
    for (long d : discs) {
        const QuaternionDisc D = validate_disc(d);
        for (std::uint32_t q : primes_up_to(200)) {
            const long disc = imaginary_quadratic_disc(q).get_si();
            bool any_split = false;
            for (const auto& l : D.primes)
                any_split = any_split || brute_force_split(disc, l.get_si()) == SplitType::split;
            REQUIRE(splits_imag_quadratic(D, q) == !any_split);
        }
    }
}

TEST_CASE("splits_over_field examples")
{
    CHECK_FALSE(splits_over_field(validate_disc(6), build_card(-5)));
    CHECK(splits_over_field(validate_disc(6), build_card(-3)));
    CHECK(splits_over_field(validate_disc(10), build_card(2)));

    FieldCard general = build_card(-5);
    general.quadratic_radicand.reset();
    CHECK_THROWS_AS(splits_over_field(validate_disc(6), general), FieldError);
    general.local_degrees[2] = {2};
    general.local_degrees[3] = {1, 1};
    CHECK_FALSE(splits_over_field(validate_disc(6), general));
    general.local_degrees[3] = {2};
    CHECK(splits_over_field(validate_disc(6), general));
}

TEST_CASE("find_admissible_q examples")
{
    const AdmissibleSearch a = find_admissible_q(validate_disc(6), build_card(-5));
    REQUIRE(a.q.has_value());
    CHECK(*a.q == 7);
    CHECK(a.threshold == 28);
    REQUIRE(a.rejected.size() == 1);
    CHECK(a.rejected[0].q == 3);
    CHECK(a.rejected[0].local.size() == 2);

    CHECK(find_admissible_q(validate_disc(6), build_card(-3)).q == mpz_class(7));
    CHECK(find_admissible_q(validate_disc(10), build_card(2)).q == mpz_class(7));

    const AdmissibleSearch none = find_admissible_q(validate_disc(6), build_card(-5), 5);
    CHECK_FALSE(none.q.has_value());
    CHECK(none.scanned_up_to == 5);
}

TEST_CASE("find_admissible_q returns the least admissible prime")
{
    for (long D : {-5L, -3L, -7L, 2L, 3L, 5L, -23L, 13L}) {
        const FieldCard k = build_card(D);
        for (long d : {6L, 10L, 15L, 22L, 35L}) {
            const QuaternionDisc B = validate_disc(d);
            const AdmissibleSearch s = find_admissible_q(B, k);
            REQUIRE(s.q.has_value());
            for (std::uint32_t q : primes_up_to(static_cast<std::uint32_t>(s.q->get_ui()))) {
                const bool split = split_type(k, q) == SplitType::split;
                const bool admissible = split && !splits_imag_quadratic(B, q);
                REQUIRE(admissible == (q == *s.q));
            }
            for (const auto& r : s.rejected)
                for (const auto& [l, t] : r.local)
                    REQUIRE(t != SplitType::split);
        }
    }
}
