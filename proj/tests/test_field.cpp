#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "exbound/card_io.hpp"
#include "exbound/field.hpp"
#include "exbound/quadratic.hpp"

#include <cmath>
#include <complex>
#include <random>

using namespace exbound;

namespace {

RingElement E(std::initializer_list<long> coords)
{
    IntVector v;
    for (long c : coords)
        v.emplace_back(c);
    return RingElement(v);
}

// Q(zeta_8) on the power basis 1, z, z^2, z^3 with z^4 = -1.
FieldCard zeta8_card()
{
    FieldCard card;
    card.label = "Q(zeta8)";
    card.degree = 4;
    card.discriminant = 256;
    card.class_number = 1;
    card.unit_rank = 1;
    card.regulator = {"1.7627471740390860504652186499595846", "1e-30"};
    card.ramified_primes = {2};
    card.basis_names = {"1", "z", "z^2", "z^3"};
    // z^m for any m, as coordinates.
    auto power = [](int m) {
        IntVector v(4, 0);
        m = ((m % 8) + 8) % 8;
        if (m < 4)
            v[m] = 1;
        else
            v[m - 4] = -1;
        return v;
    };
    card.multiplication.assign(4, std::vector<IntVector>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            card.multiplication[i][j] = power(i + j);
    for (int k : {1, 3, 5, 7}) {
        IntMatrix m(4, IntVector(4, 0));
        for (int j = 0; j < 4; ++j) {
            const IntVector image = power(k * j);
            for (int i = 0; i < 4; ++i)
                m[i][j] = image[i];
        }
        card.galois.push_back(m);
    }
    const mpfr_prec prec = 256;
    const Interval h = sqrt(Interval(2L, prec)) / Interval(2L, prec);
    PowerBasis pb;
    pb.polynomial = {1, 0, 0, 0, 1};
    pb.basis = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    for (auto [sr, si] : {std::pair{1, 1}, std::pair{1, -1}, std::pair{-1, 1}, std::pair{-1, -1}}) {
        const ComplexInterval z(Interval(static_cast<long>(sr), prec) * h, Interval(static_cast<long>(si), prec) * h);
        EmbeddingData e;
        e.real = false;
        for (unsigned j = 0; j < 4; ++j)
            e.basis_values.push_back(DecimalComplex::from(pow(z, j), 40));
        card.embeddings.push_back(e);
        pb.roots.push_back(DecimalComplex::from(z, 40));
    }
    card.power_basis = pb;
    card.fundamental_units = {E({1, 1, 0, -1})};  // 1 + sqrt 2
    card.delta_k = default_delta(4);
    card.torsion_order = 8;
    card.hcf_free_asserted = false;  // contains Q(i), whose class number is 1
    card.quadratic_subfields = {{-1, E({0, 0, 1, 0})}, {2, E({0, 1, 0, -1})}, {-2, E({0, 1, 0, 1})}};
    return card;
}

// N(x + y w) straight from the minimal polynomial of w.
mpz_class quadratic_norm_oracle(long D, const RingElement& x)
{
    const mpz_class& a = x.coords[0];
    const mpz_class& b = x.coords[1];
    if (((D % 4) + 4) % 4 == 1)
        return a * a + a * b + b * b * ((1 - D) / 4);
    return a * a - D * b * b;
}

// Height via long double embeddings of x + y w.
long double quadratic_height_oracle(long D, long x, long y)
{
    const bool half = ((D % 4) + 4) % 4 == 1;
    const std::complex<long double> root =
        D > 0 ? std::complex<long double>(std::sqrt(static_cast<long double>(D)), 0)
              : std::complex<long double>(0, std::sqrt(static_cast<long double>(-D)));
    long double product = 1;
    for (int sign : {1, -1}) {
        const std::complex<long double> w = half ? (1.0L + static_cast<long double>(sign) * root) / 2.0L
                                                 : static_cast<long double>(sign) * root;
        const long double a = std::abs(static_cast<long double>(x) + static_cast<long double>(y) * w);
        product *= std::max(1.0L, a);
    }
    return std::sqrt(product);
}

RingElement random_element(std::mt19937_64& rng, int n, long range)
{
    std::uniform_int_distribution<long> dist(-range, range);
    IntVector v;
    for (int i = 0; i < n; ++i)
        v.emplace_back(dist(rng));
    return RingElement(v);
}

bool contains_double(const Interval& x, double v, double slack)
{
    return x.lo().to_double() <= v + slack && x.hi().to_double() >= v - slack;
}

}  // namespace

TEST_CASE("ring_mul examples")
{
    const FieldCard k = build_card(-5);
    CHECK(ring_mul(ring_one(k), ring_one(k), k) == ring_one(k));
    CHECK(ring_mul(E({0, 1}), E({0, 1}), k) == E({-5, 0}));
    CHECK(ring_mul(E({2, -1}), E({2, 1}), k) == E({9, 0}));
    CHECK_THROWS_AS(ring_mul(E({1, 0, 0}), E({1, 0}), k), FieldError);
}

TEST_CASE("galois_apply examples")
{
    const FieldCard k = build_card(-5);
    const RingElement x = E({2, -1});
    CHECK(galois_apply(0, x, k) == x);
    CHECK(galois_apply(1, x, k) == E({2, 1}));
    CHECK(galois_apply(1, galois_apply(1, x, k), k) == x);
    CHECK_THROWS(galois_apply(2, x, k));

    // Q(sqrt 5) on (1, (1+sqrt 5)/2): sigma(w) = 1 - w.
    const FieldCard r = build_card(5);
    CHECK(galois_apply(1, E({0, 1}), r) == E({1, -1}));
}

TEST_CASE("norm examples")
{
    const FieldCard k = build_card(-5);
    CHECK(norm(ring_one(k), k) == 1);
    CHECK(norm(E({2, -1}), k) == 9);
    CHECK(norm(E({0, 1}), k) == 5);
    CHECK(trace(E({2, -1}), k) == 4);
    CHECK(as_rational_integer(E({7, 0})) == mpz_class(7));
    CHECK_FALSE(as_rational_integer(E({7, 1})).has_value());
}

TEST_CASE("norm agrees with the minimal-polynomial formula")
{
    std::mt19937_64 rng(11);
    for (long D : {-5L, -1L, -3L, 2L, 5L, 13L, -23L}) {
        const FieldCard k = build_card(D);
        for (int i = 0; i < 200; ++i) {
            const RingElement x = random_element(rng, 2, 1000);
            REQUIRE(norm(x, k) == quadratic_norm_oracle(D, x));
        }
    }
}

TEST_CASE("norm is multiplicative and Galois-invariant")
{
    std::mt19937_64 rng(12);
    for (const FieldCard& k : {build_card(-5), build_card(5), zeta8_card()}) {
        for (int i = 0; i < 1000; ++i) {
            const RingElement x = random_element(rng, k.degree, 50);
            const RingElement y = random_element(rng, k.degree, 50);
            REQUIRE(norm(ring_mul(x, y, k), k) == norm(x, k) * norm(y, k));
        }
        for (int i = 0; i < 100; ++i) {
            const RingElement x = random_element(rng, k.degree, 50);
            for (int s = 0; s < k.degree; ++s)
                REQUIRE(norm(galois_apply(s, x, k), k) == norm(x, k));
        }
    }
}

TEST_CASE("product of embeddings contains the exact norm")
{
    std::mt19937_64 rng(13);
    for (const FieldCard& k : {build_card(-5), build_card(2), build_card(-23), zeta8_card()}) {
        const EmbeddingTable table(k, 128);
        for (int i = 0; i < 1000; ++i) {
            const RingElement x = random_element(rng, k.degree, 1000);
            ComplexInterval product(Interval(1L, 128), Interval(0L, 128));
            for (std::size_t e = 0; e < table.size(); ++e)
                product *= table.embed(e, x);
            REQUIRE(product.re.contains(norm(x, k)));
            REQUIRE(product.im.contains(mpz_class(0)));
        }
    }
}

TEST_CASE("group_ring_power examples")
{
    const FieldCard k = build_card(-5);
    const RingElement x = E({2, -1});
    CHECK(group_ring_power(x, {{0, 0}}, k) == ring_one(k));
    CHECK(group_ring_power(x, {{1, 0}}, k) == x);
    mpz_class nine24;
    mpz_ui_pow_ui(nine24.get_mpz_t(), 9, 24);
    CHECK(group_ring_power(x, {{24, 24}}, k) == RingElement({nine24, 0}));
    CHECK(group_ring_power(x, {{0, 1}}, k) == E({2, 1}));
}

TEST_CASE("group_ring_power matches repeated multiplication")
{
    const FieldCard k = zeta8_card();
    std::mt19937_64 rng(14);
    for (int i = 0; i < 20; ++i) {
        const RingElement x = random_element(rng, 4, 5);
        ExponentVector eps{{static_cast<unsigned>(rng() % 4), static_cast<unsigned>(rng() % 4),
                            static_cast<unsigned>(rng() % 4), static_cast<unsigned>(rng() % 4)}};
        RingElement expected = ring_one(k);
        for (int s = 0; s < 4; ++s)
            for (unsigned t = 0; t < eps.exponents[s]; ++t)
                expected = ring_mul(expected, galois_apply(s, x, k), k);
        REQUIRE(group_ring_power(x, eps, k) == expected);
    }
}

TEST_CASE("height examples")
{
    const FieldCard k = build_card(-5);
    const HeightResult minus_one = height(E({-1, 0}), k);
    CHECK(minus_one.value.contains(mpz_class(1)));
    CHECK(minus_one.value.width().to_double() < 2e-12);

    const HeightResult root = height(E({0, 1}), k);
    CHECK(contains_double(root.value, std::sqrt(5.0), 1e-12));
    CHECK(root.value.width().to_double() < 1e-12);

    const FieldCard r = build_card(2);
    const HeightResult unit = height(E({1, 1}), r);
    CHECK(contains_double(unit.value, std::sqrt(1.0 + std::sqrt(2.0)), 1e-12));
    CHECK(unit.value.mid_double() == doctest::Approx(1.55377).epsilon(1e-5));

    // i in Q(i) is a root of unity; so is z in Q(zeta8).
    CHECK(height(E({0, 1}), build_card(-1)).value.contains(mpz_class(1)));
    const HeightResult z = height(E({0, 1, 0, 0}), zeta8_card());
    CHECK(z.value.contains(mpz_class(1)));
    CHECK(z.value.width().to_double() < 1e-12);
    CHECK_THROWS_AS(height(ring_zero(k), k), FieldError);
}

TEST_CASE("height agrees with a long double oracle")
{
    std::mt19937_64 rng(15);
    std::uniform_int_distribution<long> dist(-40, 40);
    for (long D : {-5L, -3L, 2L, 5L, 7L, -7L}) {
        const FieldCard k = build_card(D);
        for (int i = 0; i < 100; ++i) {
            const long x = dist(rng);
            const long y = dist(rng);
            if (x == 0 && y == 0)
                continue;
            const long double expected = quadratic_height_oracle(D, x, y);
            const HeightResult h = height(E({x, y}), k);
            INFO("D=" << D << " x=" << x << " y=" << y);
            REQUIRE(h.value.mid_double() == doctest::Approx(static_cast<double>(expected)).epsilon(1e-12));
        }
    }
}

TEST_CASE("height identities: powers and torsion units")
{
    std::mt19937_64 rng(16);
    const FieldCard q8 = zeta8_card();
    for (const FieldCard& k : {build_card(-5), build_card(-1), build_card(3), q8}) {
        std::vector<RingElement> torsion{ring_one(k), ring_integer(k, -1)};
        if (k.degree == 2 && k.discriminant == -4)
            torsion.push_back(E({0, 1}));
        if (k.degree == 4)
            torsion.push_back(E({0, 1, 0, 0}));
        for (int i = 0; i < 30; ++i) {
            const RingElement x = random_element(rng, k.degree, 20);
            if (x.is_zero())
                continue;
            const HeightResult hx = height(x, k);
            for (unsigned m : {2u, 3u, 5u}) {
                const HeightResult hm = height(ring_pow(x, m, k), k);
                REQUIRE(hm.value.overlaps(pow(hx.value, m)));
            }
            for (const auto& u : torsion)
                REQUIRE(height(ring_mul(u, x, k), k).value.overlaps(hx.value));
        }
    }
}

TEST_CASE("height reports an indeterminate place at the precision cap")
{
    // |tau(z)| = 1 exactly for z = zeta_8, while its enclosures have positive
    // width, so max(1, |tau(z)|) can never be separated from 1.
    PrecisionPolicy policy;
    policy.initial = 64;
    policy.cap = 128;
    policy.rel_tolerance = 0;
    try {
        height(E({0, 1, 0, 0}), zeta8_card(), policy);
        FAIL("expected HeightIndeterminate");
    } catch (const HeightIndeterminate& ex) {
        CHECK(ex.place() >= 0);
    }
}

TEST_CASE("complex conjugation index")
{
    const FieldCard k = build_card(-5);
    CHECK(complex_conjugation_index(k, 0) == 1);
    CHECK(complex_conjugation_index(build_card(5), 0) == 0);
    const FieldCard q8 = zeta8_card();
    // z -> z^7 = conj(z) is the second Galois element.
    CHECK(complex_conjugation_index(q8, 0) == 3);
}

TEST_CASE("validate_card accepts built and hand-written cards")
{
    for (long D : {-5L, -1L, -3L, 2L, 3L, 5L, 10L, -23L, -163L})
        CHECK_NOTHROW(validate_card(build_card(D)));
    CHECK_NOTHROW(validate_card(zeta8_card()));
}

TEST_CASE("validate_card lists every violation")
{
    FieldCard card = build_card(-5);
    card.discriminant = -21;
    card.ramified_primes = {2};
    card.unit_rank = 1;
    try {
        validate_card(card);
        FAIL("expected CardValidationError");
    } catch (const CardValidationError& ex) {
        CHECK(ex.problems().size() >= 3);
    }

    FieldCard bad_galois = zeta8_card();
    bad_galois.galois[2] = bad_galois.galois[1];
    CHECK_THROWS_AS(validate_card(bad_galois), CardValidationError);

    FieldCard bad_unit = build_card(2);
    bad_unit.fundamental_units = {E({3, 1})};
    CHECK_THROWS_AS(validate_card(bad_unit), CardValidationError);

    FieldCard bad_table = build_card(-5);
    bad_table.multiplication[0][1] = {1, 1};
    CHECK_THROWS_AS(validate_card(bad_table), CardValidationError);
}

TEST_CASE("card JSON round trip")
{
    for (const FieldCard& k : {build_card(-5), build_card(2), build_card(-23), zeta8_card()}) {
        const nlohmann::json j = card_to_json(k);
        CHECK(j.at("schema") == kCardSchema);
        const FieldCard back = card_from_json(nlohmann::json::parse(j.dump()));
        CHECK(back == k);
    }
}

TEST_CASE("malformed card JSON reports field diagnostics")
{
    nlohmann::json j = card_to_json(build_card(-5));
    j.erase("discriminant");
    j["degree"] = "two";
    j["schema"] = "something-else";
    try {
        card_from_json(j);
        FAIL("expected CardFormatError");
    } catch (const CardFormatError& ex) {
        const auto& d = ex.diagnostics();
        CHECK(d.size() == 3);
        auto mentions = [&](const std::string& word) {
            return std::any_of(d.begin(), d.end(), [&](const std::string& s) { return s.find(word) != std::string::npos; });
        };
        CHECK(mentions("discriminant"));
        CHECK(mentions("degree"));
        CHECK(mentions("schema"));
    }
}
