#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "exbound/arith.hpp"

#include <random>
#include <vector>

using namespace exbound;

namespace {

// Independent Kronecker symbol: factor n by trial division and use Euler's
// criterion at odd primes, the (a/2) table at 2 and the sign rule at -1.
int kronecker_oracle(long long a, long long n)
{
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0)
            result = -result;
    }
    auto legendre = [](long long x, long long p) {
        long long r = ((x % p) + p) % p;
        if (r == 0)
            return 0;
        long long acc = 1;
        long long base = r;
        long long e = (p - 1) / 2;
        while (e > 0) {
            if (e & 1)
                acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return acc == 1 ? 1 : -1;
    };
    for (long long p = 2; p * p <= n || n > 1; ++p) {
        if (p * p > n)
            p = n;
        while (n % p == 0) {
            n /= p;
            int symbol;
            if (p == 2) {
                if (a % 2 == 0)
                    symbol = 0;
                else {
                    long long m = ((a % 8) + 8) % 8;
                    symbol = (m == 1 || m == 7) ? 1 : -1;
                }
            } else {
                symbol = legendre(a, p);
            }
            result *= symbol;
        }
    }
    return result;
}

bool trial_division_prime(std::uint32_t n, const std::vector<std::uint32_t>& small_primes)
{
    if (n < 2)
        return false;
    for (std::uint32_t p : small_primes) {
        if (static_cast<std::uint64_t>(p) * p > n)
            return true;
        if (n % p == 0)
            return false;
    }
    return true;
}

int K(long long a, long long n)
{
    return kronecker(mpz_class(static_cast<long>(a)), mpz_class(static_cast<long>(n)));
}

mpz_class reassemble(const FactorizationResult& f)
{
    mpz_class product = f.cofactor;
    for (const auto& pp : f.known_factors) {
        for (unsigned i = 0; i < pp.multiplicity; ++i)
            product *= pp.prime;
    }
    return product;
}

}  // namespace

TEST_CASE("kronecker examples")
{
    CHECK(kronecker(1, 3) == 1);
    CHECK(kronecker(-20, 3) == 1);
    CHECK(kronecker(-20, 11) == -1);
    CHECK_THROWS_AS(kronecker(5, 0), std::invalid_argument);
}

TEST_CASE("kronecker matches the factor-and-multiply oracle")
{
    for (long long a = -60; a <= 60; ++a) {
        for (long long n = -60; n <= 60; ++n) {
            if (n == 0)
                continue;
            INFO("a=" << a << " n=" << n);
            REQUIRE(K(a, n) == kronecker_oracle(a, n));
        }
    }
}

TEST_CASE("kronecker multiplicativity on random triples")
{
    std::mt19937_64 rng(20261018);
    std::uniform_int_distribution<long long> dist(-5000, 5000);
    for (int i = 0; i < 2000; ++i) {
        const long long a = dist(rng);
        const long long b = dist(rng);
        long long m = dist(rng);
        long long n = dist(rng);
        if (m == 0)
            m = 7;
        if (n == 0)
            n = -3;
        CHECK(K(a * b, n) == K(a, n) * K(b, n));
        CHECK(K(a, m * n) == K(a, m) * K(a, n));
    }
}

TEST_CASE("is_prime examples")
{
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(531441));
    CHECK(is_prime(6481));
    CHECK_FALSE(is_prime(1));
    CHECK(primality(6481).proven);
}

TEST_CASE("is_prime agrees with trial division up to 10^6")
{
    std::vector<std::uint32_t> small;
    for (std::uint32_t n = 2; n <= 1000; ++n) {
        if (trial_division_prime(n, small))
            small.push_back(n);
    }
    for (std::uint32_t n = 1; n <= 1'000'000; ++n) {
        if (is_prime(n) != trial_division_prime(n, small)) {
            FAIL("disagreement at n=" << n);
        }
    }
}

TEST_CASE("primality verdicts above 2^64 carry the proven flag")
{
    // 2^89 - 1 is a Mersenne prime, well above the deterministic range.
    mpz_class m89 = (mpz_class(1) << 89) - 1;
    const PrimalityVerdict v = primality(m89);
    CHECK(v.is_prime);
    CHECK_FALSE(v.proven);
    // Strong pseudoprime to bases 2..37 is still caught below the bound.
    CHECK_FALSE(is_prime(mpz_class("3825123056546413051")));
    // 2^64 + 13 is prime and inside the deterministic range.
    const PrimalityVerdict w = primality((mpz_class(1) << 64) + 13);
    CHECK(w.is_prime);
    CHECK(w.proven);
}

TEST_CASE("factor_bounded examples")
{
    const FactorizationResult twelve = factor_bounded(12);
    CHECK(twelve.known_factors == std::vector<PrimePower>{{2, 2}, {3, 1}});
    CHECK(twelve.cofactor == 1);

    const FactorizationResult f = factor_bounded(531440);
    CHECK(f.known_factors == std::vector<PrimePower>{{2, 4}, {5, 1}, {7, 1}, {13, 1}, {73, 1}});
    CHECK(f.complete());

    mpz_class p;
    mpz_class q;
    mpz_class ten39;
    mpz_ui_pow_ui(ten39.get_mpz_t(), 10, 39);
    mpz_nextprime(p.get_mpz_t(), ten39.get_mpz_t());
    mpz_class start = 3 * ten39;
    mpz_nextprime(q.get_mpz_t(), start.get_mpz_t());
    REQUIRE(is_prime(p));
    REQUIRE(is_prime(q));
    FactorBudget tiny;
    tiny.units = 100;
    const FactorizationResult hard = factor_bounded(p * q, tiny);
    CHECK(hard.known_factors.empty());
    CHECK(hard.cofactor == p * q);
    CHECK_FALSE(hard.cofactor_is_probable_prime);

    CHECK(factor_bounded(-12).known_factors == twelve.known_factors);
    CHECK_THROWS(factor_bounded(0));
}

TEST_CASE("factor_bounded splits mid-size semiprimes with rho")
{
    const mpz_class p("1000000007");
    const mpz_class q("998244353");
    const mpz_class r("4294967311");
    const FactorizationResult f = factor_bounded(p * q * q * r);
    CHECK(f.complete());
    CHECK(f.known_factors == std::vector<PrimePower>{{q, 2}, {p, 1}, {r, 1}});
}

TEST_CASE("factor_bounded reassembles random 64-bit inputs")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t raw = rng() | 1ULL;
        mpz_class n;
        mpz_import(n.get_mpz_t(), 1, 1, sizeof raw, 0, 0, &raw);
        const FactorizationResult f = factor_bounded(n);
        INFO("n=" << n.get_str());
        REQUIRE(reassemble(f) == n);
        for (const auto& pp : f.known_factors) {
            REQUIRE(is_prime(pp.prime));
            REQUIRE(f.cofactor % pp.prime != 0);
        }
    }
}

TEST_CASE("divides_query")
{
    mpz_class m = mpz_class("282429536480");
    m = m * m * m * m;
    CHECK(divides_query(m, 7));
    CHECK_FALSE(divides_query(m, 11));
    CHECK_FALSE(divides_query(mpz_class(30), 31));
    CHECK(divides_query(mpz_class(-21), 7));
}

TEST_CASE("divides_query agrees with full factorizations")
{
    std::mt19937_64 rng(99);
    const auto primes = primes_up_to(200);
    for (int i = 0; i < 300; ++i) {
        const mpz_class m = mpz_class(static_cast<unsigned long>(rng() >> 24)) + 1;
        const FactorizationResult f = factor_bounded(m);
        REQUIRE(f.complete());
        for (std::uint32_t p : primes) {
            bool listed = false;
            for (const auto& pp : f.known_factors)
                listed = listed || pp.prime == p;
            CHECK(divides_query(m, p) == listed);
        }
    }
}

TEST_CASE("sqrt_mod_prime and squarefree helpers")
{
    for (long p : {3L, 5L, 13L, 17L, 97L, 1009L}) {
        for (long a = 0; a < p; ++a) {
            auto r = sqrt_mod_prime(a, p);
            if (r) {
                CHECK((*r * *r - a) % p == 0);
            } else {
                CHECK(kronecker(a, p) == -1);
            }
        }
    }
    CHECK(is_squarefree(-5));
    CHECK_FALSE(is_squarefree(12));
    auto [s, f] = squarefree_decomposition(-68);
    CHECK(s == -17);
    CHECK(f == 2);
}
