#pragma once

// Local splitting of the indefinite quaternion algebra B over Q of
// discriminant d. Only the ramification set of B is ever used.

#include "exbound/field.hpp"
#include "exbound/quadratic.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace exbound {

struct QuaternionDisc
{
    mpz_class d;
    std::vector<mpz_class> primes;  // ascending
};

/// d must be squarefree, > 1, with an even number of prime factors.
QuaternionDisc validate_disc(const mpz_class& d);

/// Field discriminant of Q(sqrt(-q)): -q for q = 3 mod 4, -4q otherwise.
mpz_class imaginary_quadratic_disc(const mpz_class& q);

/// Behaviour of the prime l in the quadratic field of discriminant disc.
SplitType local_split(const mpz_class& disc, const mpz_class& l);

/// Some l | d that splits in Q(sqrt(-q)), if any. B tensor Q(sqrt -q) is a
/// matrix algebra exactly when there is none.
std::optional<mpz_class> splitting_witness(const QuaternionDisc& D, const mpz_class& q);
bool splits_imag_quadratic(const QuaternionDisc& D, const mpz_class& q);

/// True iff B tensor k is M_2(k): every prime of k over every l | d has even
/// local degree. Non-quadratic cards must carry local_degrees for each l | d.
bool splits_over_field(const QuaternionDisc& D, const FieldCard& card);

/// Whether q splits completely in k; nullopt when a general card does not say.
std::optional<bool> splits_completely(const FieldCard& card, const mpz_class& q);

struct AdmissibleSearch
{
    /// A completely split q for which B tensor Q(sqrt -q) is a matrix
    /// algebra: no l | d splits in Q(sqrt -q).
    struct Rejection
    {
        mpz_class q;
        std::vector<std::pair<mpz_class, SplitType>> local;  // behaviour of each l | d
    };

    std::optional<mpz_class> q;
    mpz_class threshold;             // 4q
    std::vector<Rejection> rejected; // every smaller completely split prime
    mpz_class scanned_up_to;
};

/// Least prime q <= limit splitting completely in k with B tensor Q(sqrt -q)
/// not a matrix algebra.
AdmissibleSearch find_admissible_q(const QuaternionDisc& D, const FieldCard& card,
                                   const mpz_class& limit = 1'000'000);

}  // namespace exbound
