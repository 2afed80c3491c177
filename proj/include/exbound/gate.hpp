#pragma once

// Applicability certificate for the Shimura-curve conclusion over k: which
// hypotheses hold, which branch of the dichotomy applies, and which primes p
// are excluded (and why).

#include "exbound/exceptional.hpp"
#include "exbound/quaternion.hpp"

#include <optional>
#include <string>
#include <vector>

namespace exbound {

enum class HypothesisStatus { verified, asserted, failed };
const char* to_string(HypothesisStatus s);

struct Hypothesis
{
    std::string name;  // "galois", "hcf_free", "admissible_q"
    HypothesisStatus status = HypothesisStatus::failed;
    std::string detail;
};

enum class Branch {
    empty,     // B tensor k = M_2(k): no k-rational points
    elliptic,  // otherwise: only elliptic points of order 2 or 3
};
const char* to_string(Branch b);
std::string branch_statement(Branch b);

enum class ExclusionReason { divides_d, at_most_4q, below_11, equals_13, in_N1 };
const char* to_string(ExclusionReason r);

struct ExcludedPrime
{
    mpz_class p;
    ExclusionReason reason;
};

struct Certificate
{
    FieldCard field;
    QuaternionDisc disc;
    std::vector<Hypothesis> hypotheses;
    std::vector<std::string> refusals;  // every failed check, not just the first
    AdmissibleSearch admissible;
    bool quaternion_splits_over_k = false;
    Branch branch = Branch::elliptic;
    std::optional<ExceptionalRun> exceptional;
    std::optional<PrimeListing> listing;
    std::vector<ExcludedPrime> excluded;  // every excluded prime <= listing limit
    std::vector<MembershipResult> queries;

    bool refused() const { return !refusals.empty(); }
};

/// Runs every check, collecting all failures. The exceptional pipeline runs
/// only when the hypotheses hold.
Certificate certify(const FieldCard& card, const QuaternionDisc& D, const ExceptionalConfig& config,
                    const std::vector<mpz_class>& test_primes = {});

/// The first applicable reason, in the order p | d, p <= 4q, p < 11, p = 13,
/// p in N1; nullopt when the conclusion holds at p. Requires a certificate
/// that was not refused.
std::optional<ExclusionReason> exclusion_reason(const Certificate& cert, const mpz_class& p);

/// Human-readable rendering.
std::string certificate_text(const Certificate& cert);

}  // namespace exbound
