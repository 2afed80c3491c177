#pragma once

// The exceptional prime set: split primes generating the class group, their
// unit-reduced generators, the integers m = Norm(alpha^eps - beta^{24h}) and
// the primes dividing them, plus the explicit a-priori bound.

#include "exbound/arith.hpp"
#include "exbound/field.hpp"
#include "exbound/quadratic.hpp"
#include "exbound/weil.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace exbound {

struct ExceptionalConfig
{
    mpq_class A1 = 40;
    /// Overrides the card's delta_k when set (decimal string).
    std::optional<std::string> delta_override;
    FactorBudget budget;
    PrecisionPolicy precision;
    unsigned threads = 1;
    int enumeration_cap = 12;
    /// Integers with more digits are reported as digit count, edges and digest.
    std::size_t digit_threshold = 10'000;
    bool full_digits = false;
    std::uint32_t list_limit = 1'000'000;
    bool best_effort = false;
    mpz_class snew_scan_limit = 1'000'000;

    std::string delta_for(const FieldCard& card) const { return delta_override.value_or(card.delta_k); }
};

/// C1(k) = r^{1+r} delta^{1-r} / 2, with 0^1 = 0.
Interval c1_constant(const FieldCard& card, const std::string& delta, mpfr_prec prec);

/// Outcome of H(alpha) <= |Norm alpha|^{1/n} exp(C1 R).
struct Prop73Check
{
    Interval height;
    Interval bound;
    /// Decided without intervals: for r = 0 every conjugate has absolute
    /// value |N|^{1/n}, so H = |N|^{1/n} = bound.
    bool exact = false;
    bool holds = false;
};

Prop73Check check_prop73(const FieldCard& card, const RingElement& alpha, const std::string& delta,
                         const PrecisionPolicy& policy = {});

/// An associate of gamma of least height, found by rounding its log embedding
/// onto the unit lattice and searching the +-1 neighbourhood. Ties go to the
/// largest value at the distinguished embedding; real fields get a positive
/// result there. r = 0 returns gamma unchanged. Throws FieldError when the
/// height inequality cannot be certified or fails.
RingElement reduce_generator(const FieldCard& card, const RingElement& gamma, const std::string& delta,
                             const PrecisionPolicy& policy = {});

struct SplitPrimeDatum
{
    mpz_class q;                          // N(q), a rational prime
    std::optional<QuadIdeal> ideal;       // quadratic cards only
    std::optional<std::size_t> class_index;
    RingElement raw_generator;            // as found or supplied
    RingElement generator;                // unit-reduced alpha_q
    mpz_class generator_norm;             // Norm(alpha_q) = +-q^{h}
    Prop73Check height_check;
    bool meets_split_prime_bound = false; // N(q) <= 2|d_k|^{A1 h_k}
};

class SnewError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Least completely split primes, one prime ideal each, until their classes
/// generate the class group. Primes whose class is already generated are
/// skipped, except the first. General cards use their supplied split primes.
std::vector<SplitPrimeDatum> select_Snew(const FieldCard& card, const ExceptionalConfig& config);

class EnumerationRefused : public std::runtime_error
{
public:
    EnumerationRefused(int degree, int cap);
    int degree() const { return degree_; }
    /// 5^degree as a decimal string.
    const std::string& count() const { return count_; }

private:
    int degree_;
    std::string count_;
};

/// E(k) in lexicographic order over the card's Galois ordering. Vectors are
/// produced by index so the 5^n set is never materialized.
class ExponentRange
{
public:
    static constexpr unsigned kValues[5] = {0, 8, 12, 16, 24};

    explicit ExponentRange(int degree);
    std::uint64_t size() const { return size_; }
    int degree() const { return degree_; }
    ExponentVector at(std::uint64_t index) const;

private:
    int degree_;
    std::uint64_t size_;
};

ExponentRange enumerate_E(const FieldCard& card, int cap = 12);

struct M2Entry
{
    mpz_class q;
    ExponentVector eps;
    WeilNumber beta;
    bool beta_in_k = false;
    mpz_class m;
};

/// m = Norm_{k(beta)/Q}(alpha_q^eps - beta^{24h}), or nullopt when it is 0.
std::optional<M2Entry> compute_M2_entry(const FieldCard& card, const SplitPrimeDatum& datum,
                                        const ExponentVector& eps, const WeilNumber& w);

struct BoundConstants
{
    mpq_class A1;
    std::string delta;
    Interval C1;
    Interval C2;
    Interval log_C2;
    Interval log10_a;  // a = 2 |d_k|^{A1 h_k}
    Interval log10_C;  // log10 C(k, a)
    std::string leading_digits;
    mpfr_prec precision = 0;
    bool C2_is_one = false;  // exactly, which happens iff r_k = 0
};

BoundConstants bound_constants(const FieldCard& card, const mpq_class& A1, const std::string& delta,
                               mpfr_prec prec = 256);
/// log10 C(k, a) for log10 a given as an interval.
Interval log10_C_at(const FieldCard& card, const BoundConstants& constants, const Interval& log10_a);
/// C(k, a) = (a^{24h} + a^{12h})^{2n} exactly, valid when C2 = 1.
mpz_class exact_C(const FieldCard& card, const mpz_class& a);

struct Prop74Record
{
    std::size_t datum = 0;
    std::uint64_t eps_index = 0;
    Interval abs_value;  // |alpha^eps| at the distinguished embedding
    bool holds = false;
    bool exact = false;  // decided by the exact gamma * conj(gamma) comparison
};

struct Prop75Record
{
    std::size_t entry = 0;
    bool holds = false;
    bool exact = false;
};

struct ExceptionalRun
{
    std::vector<SplitPrimeDatum> snew;
    std::uint64_t exponent_count = 0;
    std::size_t weil_count = 0;  // sum of |FR(N(q))| over S^new
    std::size_t processed = 0;   // (q, eps, beta) triples
    std::size_t zero_excluded = 0;
    std::vector<M2Entry> entries;  // ordered by (q, eps index, beta)
    std::vector<Prop74Record> prop74;
    std::vector<Prop75Record> prop75;
    BoundConstants constants;
    std::vector<mpz_class> T;    // primes under S^new, 2 and 3
    std::vector<mpz_class> Ram;  // ramified primes of k

    std::size_t prop74_violations() const;
    std::size_t prop75_violations() const;
};

/// The whole pipeline for one field. Work is split across config.threads
/// workers; the result does not depend on the thread count.
ExceptionalRun run_exceptional(const FieldCard& card, const ExceptionalConfig& config);

struct MembershipResult
{
    mpz_class p;
    bool member = false;
    std::vector<std::string> sources;     // subset of {"N0", "T", "Ram"}
    std::optional<std::size_t> witness;   // entry index with p | m
};

/// Exact p in N1; only remainders are used, nothing is factored.
MembershipResult membership(const ExceptionalRun& run, const mpz_class& p);

struct PrimeListing
{
    std::uint32_t limit = 0;
    std::vector<mpz_class> N0;
    std::vector<mpz_class> N1;
};

/// N0 and N1 intersected with [2, X], exactly.
PrimeListing list_upto(const ExceptionalRun& run, std::uint32_t limit);

struct BestEffortFactors
{
    struct Item
    {
        mpz_class m;  // absolute value, distinct
        FactorizationResult result;
    };
    std::vector<Item> items;
    std::vector<mpz_class> N0_found;
    std::vector<mpz_class> unresolved;  // cofactors left unsplit
};

BestEffortFactors best_effort_factor(const ExceptionalRun& run, const FactorBudget& budget);

/// Every prime and every |m| lies below the a-priori bound C(k, a).
bool bound_dominates(const ExceptionalRun& run, const std::vector<mpz_class>& primes);

}  // namespace exbound
