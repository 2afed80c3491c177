#include "exbound/gate.hpp"

#include <algorithm>
#include <sstream>

namespace exbound {

const char* to_string(HypothesisStatus s)
{
    switch (s) {
    case HypothesisStatus::verified: return "verified";
    case HypothesisStatus::asserted: return "asserted";
    case HypothesisStatus::failed: return "failed";
    }
    return "?";
}

const char* to_string(Branch b)
{
    return b == Branch::empty ? "empty" : "elliptic";
}

std::string branch_statement(Branch b)
{
    if (b == Branch::empty)
        return "M0^B(p)(k) = empty set";
    return "M0^B(p)(k) is contained in the set of elliptic points of order 2 or 3";
}

const char* to_string(ExclusionReason r)
{
    switch (r) {
    case ExclusionReason::divides_d: return "p | d";
    case ExclusionReason::at_most_4q: return "p <= 4q";
    case ExclusionReason::below_11: return "p < 11";
    case ExclusionReason::equals_13: return "p = 13";
    case ExclusionReason::in_N1: return "p in N1(k)";
    }
    return "?";
}

Certificate certify(const FieldCard& card, const QuaternionDisc& D, const ExceptionalConfig& config,
                    const std::vector<mpz_class>& test_primes)
{
    Certificate cert;
    cert.field = card;
    cert.disc = D;

    if (card.is_quadratic())
        cert.hypotheses.push_back({"galois", HypothesisStatus::verified, "quadratic fields are Galois"});
    else if (card.is_galois_asserted)
        cert.hypotheses.push_back({"galois", HypothesisStatus::asserted, "asserted by the field card"});
    else
        cert.hypotheses.push_back({"galois", HypothesisStatus::failed, "the field card does not assert Galois"});

    if (card.is_quadratic()) {
        if (hcf_containment_check(card))
            cert.hypotheses.push_back({"hcf_free", HypothesisStatus::failed,
                                       "k has class number 1 and is imaginary quadratic, so it is its own "
                                       "Hilbert class field"});
        else
            cert.hypotheses.push_back({"hcf_free", HypothesisStatus::verified,
                                       "k contains no Hilbert class field of an imaginary quadratic field"});
    } else if (card.hcf_free_asserted) {
        cert.hypotheses.push_back({"hcf_free", HypothesisStatus::asserted, "asserted by the field card"});
    } else {
        cert.hypotheses.push_back({"hcf_free", HypothesisStatus::failed,
                                   "not asserted by the field card and not decidable here"});
    }

    cert.admissible = find_admissible_q(D, card, config.snew_scan_limit);
    if (cert.admissible.q) {
        const mpz_class& q = *cert.admissible.q;
        cert.hypotheses.push_back({"admissible_q", HypothesisStatus::verified,
                                   "q = " + q.get_str() + " splits completely in k and l = "
                                       + splitting_witness(D, q)->get_str() + " splits in Q(sqrt(-" + q.get_str()
                                       + ")), so B tensor Q(sqrt(-q)) is not a matrix algebra"});
    } else {
        cert.hypotheses.push_back({"admissible_q", HypothesisStatus::failed,
                                   "no admissible q up to " + cert.admissible.scanned_up_to.get_str()});
    }

    cert.quaternion_splits_over_k = splits_over_field(D, card);
    cert.branch = cert.quaternion_splits_over_k ? Branch::empty : Branch::elliptic;

    for (const auto& h : cert.hypotheses)
        if (h.status == HypothesisStatus::failed)
            cert.refusals.push_back(h.name + ": " + h.detail);
    if (cert.refused())
        return cert;

    try {
        cert.exceptional = run_exceptional(card, config);
    } catch (const EnumerationRefused& e) {
        cert.refusals.push_back(std::string("exceptional set: ") + e.what());
    } catch (const SnewError& e) {
        cert.refusals.push_back(std::string("exceptional set: ") + e.what());
    }
    if (cert.refused())
        return cert;

    cert.listing = list_upto(*cert.exceptional, config.list_limit);
    for (std::uint32_t p : primes_up_to(config.list_limit))
        if (auto r = exclusion_reason(cert, p))
            cert.excluded.push_back({p, *r});
    for (const auto& p : test_primes)
        cert.queries.push_back(membership(*cert.exceptional, p));
    return cert;
}

std::optional<ExclusionReason> exclusion_reason(const Certificate& cert, const mpz_class& p)
{
    if (!cert.exceptional || !cert.admissible.q)
        throw std::logic_error("exclusion_reason needs a certificate that was not refused");
    if (cert.disc.d % p == 0)
        return ExclusionReason::divides_d;
    if (p <= cert.admissible.threshold)
        return ExclusionReason::at_most_4q;
    if (p < 11)
        return ExclusionReason::below_11;
    if (p == 13)
        return ExclusionReason::equals_13;
    if (cert.listing && p <= cert.listing->limit) {
        if (std::binary_search(cert.listing->N1.begin(), cert.listing->N1.end(), p))
            return ExclusionReason::in_N1;
    } else if (membership(*cert.exceptional, p).member) {
        return ExclusionReason::in_N1;
    }
    return std::nullopt;
}

std::string certificate_text(const Certificate& cert)
{
    std::ostringstream out;
    const FieldCard& k = cert.field;
    out << "Certificate for k = " << k.label << " (degree " << k.degree << ", d_k = " << k.discriminant
        << ", h_k = " << k.class_number << ") and the indefinite quaternion algebra B of discriminant d = "
        << cert.disc.d << ".\n";
    out << "Background on the Shimura curve M^B of B: \"We have M^B(R) = empty set.\"\n\n";

    out << "Hypotheses:\n";
    for (const auto& h : cert.hypotheses)
        out << "  " << h.name << ": " << to_string(h.status) << " (" << h.detail << ")\n";
    out << "  B tensor k " << (cert.quaternion_splits_over_k ? "=" : "is not") << " M_2(k)\n";

    if (cert.refused()) {
        out << "\nREFUSED. The conclusion is not certified:\n";
        for (const auto& r : cert.refusals)
            out << "  - " << r << "\n";
        out << "(Were the hypotheses met, the branch would be: " << branch_statement(cert.branch) << ".)\n";
        return out.str();
    }

    const mpz_class& q = *cert.admissible.q;
    const ExceptionalRun& run = *cert.exceptional;
    out << "\nConclusion: for every prime p with p > " << cert.admissible.threshold << " (= 4q, q = " << q
        << "), p >= 11, p != 13, p not dividing " << cert.disc.d
        << " and p not in N1(k), one has\n  " << branch_statement(cert.branch) << ".\n";
    out << "Membership of p in N1(k) is decidable exactly for any given p (remainders of the M2 integers).\n\n";

    out << "S^new:";
    for (const auto& s : run.snew)
        out << " " << s.q;
    out << "\nT(k):";
    for (const auto& t : run.T)
        out << " " << t;
    out << "\nRam(k):";
    for (const auto& r : run.Ram)
        out << " " << r;
    out << "\nM2 integers: " << run.entries.size() << " nonzero of " << run.processed << " (q, eps, beta) triples ("
        << run.zero_excluded << " zero values excluded)\n";

    if (cert.listing) {
        out << "N1(k) up to " << cert.listing->limit << ":";
        for (const auto& p : cert.listing->N1)
            out << " " << p;
        out << "\nExcluded primes up to " << cert.listing->limit << ":\n";
        for (const auto& e : cert.excluded)
            out << "  " << e.p << "  " << to_string(e.reason) << "\n";
    }
    for (const auto& m : cert.queries)
        out << "Query p = " << m.p << ": " << (m.member ? "in N1(k)" : "not in N1(k)") << "\n";

    const auto [mid, rad] = run.constants.log10_C.to_decimal(12);
    out << "A-priori bound: every prime of N1(k) is at most C(k, 2|d_k|^(A1 h_k)) with A1 = " << run.constants.A1
        << ", log10 C = " << mid << " +- " << rad << "\n";
    return out.str();
}

}  // namespace exbound
