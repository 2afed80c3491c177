#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "exbound/gate.hpp"
#include "exbound/report.hpp"

#include <algorithm>

using namespace exbound;

namespace {

ExceptionalConfig small_config()
{
    ExceptionalConfig c;
    c.list_limit = 20000;
    return c;
}

const Hypothesis& find(const Certificate& c, const std::string& name)
{
    for (const auto& h : c.hypotheses)
        if (h.name == name)
            return h;
    throw std::runtime_error("no hypothesis " + name);
}

}  // namespace

TEST_CASE("certify Q(sqrt -5), d = 6")
{
    const Certificate c = certify(build_card(-5), validate_disc(6), small_config(), {2, 3, 5, 7, 13, 1009});
    REQUIRE_FALSE(c.refused());
    CHECK(c.admissible.q == mpz_class(7));
    CHECK(c.admissible.threshold == 28);
    CHECK(c.branch == Branch::elliptic);
    CHECK_FALSE(c.quaternion_splits_over_k);
    CHECK(find(c, "hcf_free").status == HypothesisStatus::verified);
    CHECK(find(c, "galois").status == HypothesisStatus::verified);

    auto reason = [&](long p) {
        for (const auto& e : c.excluded)
            if (e.p == p)
                return std::optional<ExclusionReason>(e.reason);
        return std::optional<ExclusionReason>();
    };
    CHECK(reason(2) == ExclusionReason::divides_d);
    CHECK(reason(3) == ExclusionReason::divides_d);
    CHECK(reason(13) == ExclusionReason::at_most_4q);
    CHECK(reason(23) == ExclusionReason::at_most_4q);
    CHECK(reason(29) == ExclusionReason::in_N1);
    CHECK_FALSE(reason(53).has_value());

    REQUIRE(c.queries.size() == 6);
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(c.queries[i].member);

    const std::string text = certificate_text(c);
    CHECK(text.find("elliptic points of order 2 or 3") != std::string::npos);
    CHECK(text.find("We have M^B(R) = empty set.") != std::string::npos);
}

TEST_CASE("refusals are reported together")
{
    const Certificate gauss = certify(build_card(-1), validate_disc(6), small_config());
    CHECK(gauss.refused());
    CHECK(find(gauss, "hcf_free").status == HypothesisStatus::failed);
    CHECK_FALSE(gauss.exceptional.has_value());

    // Q(sqrt -3): the hypothesis fails, and the ledger still records branch (1).
    const Certificate eis = certify(build_card(-3), validate_disc(6), small_config());
    CHECK(eis.refused());
    CHECK(eis.quaternion_splits_over_k);
    CHECK(eis.branch == Branch::empty);
    CHECK(eis.admissible.q == mpz_class(7));
    CHECK(certificate_text(eis).find("REFUSED") != std::string::npos);

    // Two failures at once: no admissible q within the limit and not HCF-free.
    ExceptionalConfig tight = small_config();
    tight.snew_scan_limit = 4;
    const Certificate both = certify(build_card(-1), validate_disc(6), tight);
    CHECK(both.refusals.size() == 2);

    FieldCard general = build_card(-5);
    general.quadratic_radicand.reset();
    general.hcf_free_asserted = false;
    general.is_galois_asserted = false;
    general.local_degrees[2] = {2};
    general.local_degrees[3] = {1, 1};
    const Certificate g = certify(general, validate_disc(6), small_config());
    CHECK(find(g, "galois").status == HypothesisStatus::failed);
    CHECK(find(g, "hcf_free").status == HypothesisStatus::failed);
    CHECK(g.refusals.size() >= 2);
}

TEST_CASE("the conclusion is never asserted for an excluded prime")
{
    for (long D : {-5L, -23L, 2L, -14L}) {
        for (long d : {6L, 10L, 15L}) {
            const Certificate c = certify(build_card(D), validate_disc(d), small_config());
            if (c.refused())
                continue;
            const mpz_class threshold = c.admissible.threshold;
            std::size_t next = 0;
            for (std::uint32_t p : primes_up_to(5000)) {
                const bool member = membership(*c.exceptional, p).member;
                const bool hypotheses_hold = p > threshold && p >= 11 && p != 13 && d % p != 0 && !member;
                const auto r = exclusion_reason(c, p);
                INFO("D = " << D << ", d = " << d << ", p = " << p);
                REQUIRE(r.has_value() == !hypotheses_hold);
                if (r) {
                    // One reason, the first in the documented order.
                    ExclusionReason first = ExclusionReason::in_N1;
                    if (d % p == 0)
                        first = ExclusionReason::divides_d;
                    else if (p <= threshold)
                        first = ExclusionReason::at_most_4q;
                    else if (p < 11)
                        first = ExclusionReason::below_11;
                    else if (p == 13)
                        first = ExclusionReason::equals_13;
                    REQUIRE(*r == first);
                    REQUIRE(next < c.excluded.size());
                    REQUIRE(c.excluded[next].p == p);
                    REQUIRE(c.excluded[next].reason == first);
                    ++next;
                }
            }
            CHECK(bound_dominates(*c.exceptional, c.listing->N1));
        }
    }
}

TEST_CASE("certificates are reproducible and schema-valid")
{
    const ExceptionalConfig cfg = small_config();
    const auto a = certificate_json(certify(build_card(-5), validate_disc(6), cfg, {1009}), cfg);
    const auto b = certificate_json(certify(build_card(-5), validate_disc(6), cfg, {1009}), cfg);
    CHECK(a.dump() == b.dump());
    CHECK(validate_report(a).empty());
    CHECK(a["branch"] == "elliptic");

    const auto refused = certificate_json(certify(build_card(-1), validate_disc(6), cfg), cfg);
    CHECK(validate_report(refused).empty());
    CHECK(refused["refused"] == true);

    auto broken = a;
    broken.erase("branch");
    CHECK_FALSE(validate_report(broken).empty());
    broken = a;
    broken["refused"] = true;
    CHECK_FALSE(validate_report(broken).empty());
}
