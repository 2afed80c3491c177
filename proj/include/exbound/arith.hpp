#pragma once

// Integer number theory shared by every module: Kronecker symbols, primality,
// budgeted factorization and exact divisibility.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace exbound {

/// Kronecker symbol (a/n), including even and negative n. Throws for n = 0.
int kronecker(const mpz_class& a, const mpz_class& n);

struct PrimalityVerdict
{
    bool is_prime = false;
    /// True when the verdict is a proof (deterministic witness set or trial
    /// division); false for a strong probable-prime verdict.
    bool proven = false;
};

/// Miller-Rabin with the first 13 prime bases is deterministic below this bound
/// (Sorenson-Webster); it covers all of [1, 2^64).
mpz_class deterministic_primality_bound();

/// Deterministic below deterministic_primality_bound(); above it, BPSW plus at
/// least 64 random Miller-Rabin rounds (error below 4^-64 per composite).
PrimalityVerdict primality(const mpz_class& n);
bool is_prime(const mpz_class& n);

/// All primes <= limit, ascending.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

/// Work units for factor_bounded: one per trial-division prime, one per rho
/// iteration.
struct FactorBudget
{
    static constexpr std::uint32_t kDefaultTrialLimit = 10'000'000;
    static constexpr std::uint64_t kDefaultUnits = 664'579 + 1'000'000;

    std::uint64_t units = kDefaultUnits;
    std::uint32_t trial_limit = kDefaultTrialLimit;
};

struct PrimePower
{
    mpz_class prime;
    unsigned multiplicity = 0;

    bool operator==(const PrimePower&) const = default;
};

struct FactorizationResult
{
    std::vector<PrimePower> known_factors;  // ascending, every prime proven
    mpz_class cofactor = 1;                 // 1 when fully factored
    bool cofactor_is_probable_prime = false;
    std::uint64_t units_spent = 0;

    bool complete() const { return cofactor == 1; }
};

/// Trial division, then Brent-Pollard rho, inside `budget`. Partial results are
/// legal: whatever could not be split is returned as the cofactor.
FactorizationResult factor_bounded(const mpz_class& n, const FactorBudget& budget = {});

/// Exact p | m, by remainder.
bool divides_query(const mpz_class& m, const mpz_class& p);

/// sqrt(a) mod p for odd prime p, or nullopt for nonresidues.
std::optional<mpz_class> sqrt_mod_prime(const mpz_class& a, const mpz_class& p);

/// True when n is divisible by no square > 1. Uses full factorization; throws
/// if n cannot be factored within a generous budget.
bool is_squarefree(const mpz_class& n);

/// Squarefree part s and cofactor f with n = f^2 * s (sign carried by s).
std::pair<mpz_class, mpz_class> squarefree_decomposition(const mpz_class& n);

}  // namespace exbound
