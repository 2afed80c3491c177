#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "exbound/interval.hpp"

using namespace exbound;

TEST_CASE("sqrt(2) squared contains 2 and is tight")
{
    const Interval two(2L, 256);
    const Interval r = sqrt(two);
    CHECK(pow(r, 2).contains(mpz_class(2)));
    CHECK(mpfr_cmp_d(r.width().get(), 1e-70) < 0);
}

TEST_CASE("decimal round trip encloses the source interval")
{
    const Interval x = log(Interval(3L, 200));
    const auto [mid, rad] = x.to_decimal(30);
    const Interval back = Interval::from_decimal(mid, rad, 200);
    CHECK(back.contains(x));
    CHECK(mid.rfind("1.0986122886681", 0) == 0);
}

TEST_CASE("multiplication across zero")
{
    const Interval a = Interval::from_decimal("0", "1", 64);
    const Interval b = Interval::from_decimal("-3", "1", 64);
    const Interval c = a * b;
    CHECK(c.contains(mpz_class(4)));
    CHECK(c.contains(mpz_class(-4)));
    CHECK_FALSE(c.contains(mpz_class(5)));
}

TEST_CASE("complex powers of 1+i")
{
    const ComplexInterval z(Interval(1L, 128), Interval(1L, 128));
    const ComplexInterval z12 = pow(z, 12);
    CHECK(z12.re.contains(mpz_class(-64)));
    CHECK(z12.im.contains(mpz_class(0)));
    CHECK(abs(z12).contains(mpz_class(64)));
}

TEST_CASE("certified comparisons")
{
    const Interval one(1L, 64);
    const Interval e = exp(one);
    CHECK(certainly_lt(Interval(2L, 64), e));
    CHECK(certainly_lt(e, Interval(3L, 64)));
    CHECK_FALSE(certainly_le(e, e));
    CHECK_THROWS_AS(log(Interval(0L, 64)), std::domain_error);
    CHECK_THROWS_AS(one / Interval::from_decimal("0", "1", 64), std::domain_error);
}
