#include "exbound/quaternion.hpp"

#include "exbound/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace exbound {

QuaternionDisc validate_disc(const mpz_class& d)
{
    if (d <= 1)
        throw std::invalid_argument("quaternion discriminant must be > 1, got " + d.get_str());
    const FactorizationResult f = factor_bounded(d);
    if (!f.complete())
        throw std::invalid_argument("could not factor the quaternion discriminant " + d.get_str());
    QuaternionDisc out{d, {}};
    for (const auto& pp : f.known_factors) {
        if (pp.multiplicity != 1)
            throw std::invalid_argument("quaternion discriminant " + d.get_str() + " is not squarefree");
        out.primes.push_back(pp.prime);
    }
    if (out.primes.size() % 2 != 0)
        throw std::invalid_argument("quaternion discriminant " + d.get_str() + " has an odd number ("
                                    + std::to_string(out.primes.size()) + ") of prime factors");
    return out;
}

mpz_class imaginary_quadratic_disc(const mpz_class& q)
{
    if (q % 4 == 3)
        return -q;
    return -4 * q;
}

SplitType local_split(const mpz_class& disc, const mpz_class& l)
{
    if (disc % l == 0)
        return SplitType::ramified;
    // For odd disc the Kronecker symbol at 2 is 1 exactly when disc = 1 mod 8.
    return kronecker(disc, l) == 1 ? SplitType::split : SplitType::inert;
}

std::optional<mpz_class> splitting_witness(const QuaternionDisc& D, const mpz_class& q)
{
    const mpz_class disc = imaginary_quadratic_disc(q);
    for (const auto& l : D.primes)
        if (local_split(disc, l) == SplitType::split)
            return l;
    return std::nullopt;
}

bool splits_imag_quadratic(const QuaternionDisc& D, const mpz_class& q)
{
    return !splitting_witness(D, q).has_value();
}

bool splits_over_field(const QuaternionDisc& D, const FieldCard& card)
{
    for (const auto& l : D.primes) {
        if (card.is_quadratic()) {
            if (split_type(card, l) == SplitType::split)
                return false;
            continue;
        }
        auto it = card.local_degrees.find(l);
        if (it == card.local_degrees.end() || it->second.empty())
            throw FieldError("card " + card.label + " has no local degrees for " + l.get_str());
        if (std::any_of(it->second.begin(), it->second.end(), [](int f) { return f % 2 != 0; }))
            return false;
    }
    return true;
}

std::optional<bool> splits_completely(const FieldCard& card, const mpz_class& q)
{
    if (card.is_quadratic())
        return split_type(card, q) == SplitType::split;
    for (const auto& s : card.supplied_split_primes)
        if (s.q == q)
            return true;
    auto it = card.local_degrees.find(q);
    if (it != card.local_degrees.end())
        return static_cast<int>(it->second.size()) == card.degree
               && std::all_of(it->second.begin(), it->second.end(), [](int f) { return f == 1; });
    return std::nullopt;
}

AdmissibleSearch find_admissible_q(const QuaternionDisc& D, const FieldCard& card, const mpz_class& limit)
{
    AdmissibleSearch out;
    for (mpz_class q = 2; q <= limit; mpz_nextprime(q.get_mpz_t(), q.get_mpz_t())) {
        out.scanned_up_to = q;
        if (splits_completely(card, q) != true)
            continue;
        if (splitting_witness(D, q)) {
            out.q = q;
            out.threshold = 4 * q;
            return out;
        }
        AdmissibleSearch::Rejection r{q, {}};
        const mpz_class disc = imaginary_quadratic_disc(q);
        for (const auto& l : D.primes)
            r.local.emplace_back(l, local_split(disc, l));
        out.rejected.push_back(std::move(r));
    }
    out.scanned_up_to = limit;
    return out;
}

}  // namespace exbound
