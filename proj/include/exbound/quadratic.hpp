#pragma once

// Quadratic fields Q(sqrt D): automatic field cards, ideals, class groups and
// principal generators.

#include "exbound/field.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace exbound {

/// Binary quadratic form a x^2 + b xy + c y^2.
struct QuadForm
{
    mpz_class a;
    mpz_class b;
    mpz_class c;

    mpz_class discriminant() const { return b * b - 4 * a * c; }
    bool operator==(const QuadForm&) const = default;
};

/// Ideal Z*a + Z*(b + c*omega) of O_k in Hermite normal form over the
/// integral basis (1, omega): c | a, c | b, 0 <= b < a.
struct QuadIdeal
{
    mpz_class a;
    mpz_class b;
    mpz_class c;

    mpz_class norm() const { return a * c; }
    bool operator==(const QuadIdeal&) const = default;
};

/// u + v*sqrt(d_k) with rational u, v.
struct QuadNumber
{
    mpq_class u;
    mpq_class v;
};

FieldCard build_card(const mpz_class& D);

/// d_k of a quadratic card; throws for non-quadratic cards.
mpz_class quadratic_discriminant(const FieldCard& card);

RingElement to_ring(const FieldCard& card, const QuadNumber& x);
QuadNumber from_ring(const FieldCard& card, const RingElement& x);

enum class SplitType { split, inert, ramified };
const char* to_string(SplitType t);

SplitType split_type(const FieldCard& card, const mpz_class& p);
/// Degree-one prime above p; b is the least nonnegative root of b^2 = d_k (mod 4p).
QuadIdeal prime_above(const FieldCard& card, const mpz_class& p);

QuadIdeal ideal_from_generators(const FieldCard& card, const std::vector<RingElement>& generators);
QuadIdeal principal_ideal(const FieldCard& card, const RingElement& alpha);
QuadIdeal ideal_mul(const FieldCard& card, const QuadIdeal& x, const QuadIdeal& y);
QuadIdeal ideal_pow(const FieldCard& card, const QuadIdeal& x, unsigned long exponent);
QuadIdeal ideal_conjugate(const FieldCard& card, const QuadIdeal& x);
bool ideal_contains(const QuadIdeal& ideal, const RingElement& x);

/// Generator of a principal ideal, or nullopt when the ideal is not principal.
/// Imaginary fields: lexicographically largest coordinates among the
/// torsion associates. Real fields: positive at the distinguished embedding.
std::optional<RingElement> principal_generator(const FieldCard& card, const QuadIdeal& ideal);

/// Ideal class group with canonical reduced representatives.
class ClassGroup
{
public:
    struct Generator
    {
        std::size_t element;
        unsigned long order;
        QuadIdeal prime;  // prime ideal whose class this is
    };

    explicit ClassGroup(const FieldCard& card);
    /// Class group of the maximal order of discriminant disc.
    explicit ClassGroup(const mpz_class& disc);

    std::size_t order() const { return classes_.size(); }
    /// Canonical form of each class; index 0 is the principal class.
    const std::vector<QuadForm>& classes() const { return classes_; }
    std::size_t index_of(const QuadIdeal& ideal) const;
    std::size_t compose(std::size_t x, std::size_t y) const;
    std::size_t inverse(std::size_t x) const;
    unsigned long element_order(std::size_t x) const;
    /// Ideal in the class with the canonical form.
    QuadIdeal representative(std::size_t x) const;

    const std::vector<Generator>& generators() const { return generators_; }
    /// Invariant factors d_1 | d_2 | ..., empty for the trivial group.
    const std::vector<unsigned long>& invariants() const { return invariants_; }

private:
    mpz_class disc_;
    std::vector<QuadForm> classes_;
    std::map<std::pair<mpz_class, mpz_class>, std::size_t> index_;
    std::vector<Generator> generators_;
    std::vector<unsigned long> invariants_;

    mutable std::vector<unsigned long> orders_;

    std::size_t lookup(const QuadForm& canonical) const;
    QuadForm compose_forms(const QuadForm& x, const QuadForm& y) const;
};

/// Canonical reduced form in the ideal class of a primitive form with a > 0.
QuadForm canonical_form(const mpz_class& disc, const QuadForm& form);
/// Form (A, B, C) of the primitive part of an ideal.
QuadForm ideal_form(const FieldCard& card, const QuadIdeal& ideal);

ClassGroup class_group(const FieldCard& card);

/// True iff k contains the Hilbert class field of an imaginary quadratic
/// field; for quadratic k that happens exactly when D < 0 and h_k = 1.
bool hcf_containment_check(const FieldCard& card);

}  // namespace exbound
