#pragma once

// Exact arithmetic in the ring of integers of a Galois number field described
// by a FieldCard, plus certified archimedean data (embeddings, heights).

#include "exbound/interval.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace exbound {

using IntVector = std::vector<mpz_class>;
using IntMatrix = std::vector<IntVector>;  // row-major

/// Element of O_k as integer coordinates on the card's integral basis.
struct RingElement
{
    IntVector coords;

    RingElement() = default;
    explicit RingElement(IntVector c) : coords(std::move(c)) {}

    std::size_t dimension() const { return coords.size(); }
    bool is_zero() const;
    bool operator==(const RingElement&) const = default;
};

/// Decimal midpoint and radius, as stored in card files.
struct DecimalInterval
{
    std::string mid = "0";
    std::string rad = "0";

    Interval at(mpfr_prec prec) const { return Interval::from_decimal(mid, rad, prec); }
    static DecimalInterval from(const Interval& x, int digits);
    bool operator==(const DecimalInterval&) const = default;
};

struct DecimalComplex
{
    DecimalInterval re;
    DecimalInterval im;

    ComplexInterval at(mpfr_prec prec) const { return {re.at(prec), im.at(prec)}; }
    static DecimalComplex from(const ComplexInterval& z, int digits);
    bool operator==(const DecimalComplex&) const = default;
};

struct EmbeddingData
{
    bool real = true;
    std::vector<DecimalComplex> basis_values;  // tau(omega_i)

    bool operator==(const EmbeddingData&) const = default;
};

/// The integral basis written over a primitive element theta, plus certified
/// approximations of theta under each embedding. Lets embeddings be refined
/// to any precision.
struct PowerBasis
{
    IntVector polynomial;  // monic, constant term first
    IntMatrix basis;       // omega_i = sum_j basis[i][j] theta^j / denominator
    mpz_class denominator = 1;
    std::vector<DecimalComplex> roots;  // tau_e(theta), same order as embeddings

    bool operator==(const PowerBasis&) const = default;
};

/// Q(sqrt(radicand)) inside k, with sqrt(radicand) as a ring element.
struct QuadraticSubfield
{
    mpz_class radicand;
    RingElement sqrt;

    bool operator==(const QuadraticSubfield&) const = default;
};

/// A prime q and a generator of q^{h_k} for one prime of k above it. Supplied
/// by the card when the field is not quadratic.
struct SuppliedSplitPrime
{
    mpz_class q;
    RingElement generator;

    bool operator==(const SuppliedSplitPrime&) const = default;
};

struct FieldCard
{
    std::string label;
    int degree = 0;
    mpz_class discriminant;
    mpz_class class_number = 1;
    int unit_rank = 0;
    DecimalInterval regulator{"1", "0"};
    std::vector<mpz_class> ramified_primes;
    std::vector<std::string> basis_names;
    /// multiplication[i][j] = coordinates of omega_i * omega_j.
    std::vector<std::vector<IntVector>> multiplication;
    /// galois[s][i][j] = coefficient of omega_i in sigma_s(omega_j); s = 0 is the identity.
    std::vector<IntMatrix> galois;
    std::vector<EmbeddingData> embeddings;
    int distinguished_embedding = 0;
    std::vector<RingElement> fundamental_units;
    std::string delta_k = "0.5";
    int torsion_order = 2;
    bool is_galois_asserted = true;
    bool hcf_free_asserted = false;
    std::optional<mpz_class> quadratic_radicand;
    std::optional<PowerBasis> power_basis;
    std::vector<QuadraticSubfield> quadratic_subfields;
    /// For primes l: local degrees [k_lambda : Q_l] of the primes above l.
    std::map<mpz_class, std::vector<int>> local_degrees;
    std::vector<SuppliedSplitPrime> supplied_split_primes;

    bool is_quadratic() const { return quadratic_radicand.has_value(); }
    int real_embedding_count() const;
    bool operator==(const FieldCard&) const = default;
};

class FieldError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a card violates its invariants; carries one line per problem.
class CardValidationError : public FieldError
{
public:
    explicit CardValidationError(std::vector<std::string> problems);
    const std::vector<std::string>& problems() const { return problems_; }

private:
    std::vector<std::string> problems_;
};

/// Checks every card invariant and throws CardValidationError listing all
/// violations.
void validate_card(const FieldCard& card);

/// Default height lower-bound constant for degree n (Voutier's explicit
/// Lehmer-type bound 2/(log 3n)^3, and log 2 for n = 1), as a decimal string.
std::string default_delta(int degree);

// Exact ring arithmetic.

RingElement ring_zero(const FieldCard& card);
RingElement ring_one(const FieldCard& card);
RingElement ring_integer(const FieldCard& card, const mpz_class& value);
RingElement ring_add(const RingElement& x, const RingElement& y);
RingElement ring_sub(const RingElement& x, const RingElement& y);
RingElement ring_neg(const RingElement& x);
RingElement ring_scale(const RingElement& x, const mpz_class& factor);
RingElement ring_mul(const RingElement& x, const RingElement& y, const FieldCard& card);
RingElement ring_pow(const RingElement& x, unsigned long exponent, const FieldCard& card);
RingElement galois_apply(int sigma, const RingElement& x, const FieldCard& card);

/// Matrix of multiplication by x on the integral basis (column j = x * omega_j).
IntMatrix multiplication_matrix(const RingElement& x, const FieldCard& card);
mpz_class determinant(IntMatrix m);
mpz_class norm(const RingElement& x, const FieldCard& card);
mpz_class trace(const RingElement& x, const FieldCard& card);
/// Rational integer value if x lies in Z (omega_0 = 1).
std::optional<mpz_class> as_rational_integer(const RingElement& x);

/// One exponent a_sigma per Galois element, in the card's Galois order.
struct ExponentVector
{
    std::vector<unsigned> exponents;

    bool operator==(const ExponentVector&) const = default;
    auto operator<=>(const ExponentVector&) const = default;
};

/// prod_sigma sigma(x)^{a_sigma}.
RingElement group_ring_power(const RingElement& x, const ExponentVector& eps, const FieldCard& card);

// Archimedean data.

/// tau_e(omega_i) for every embedding e, at one working precision.
class EmbeddingTable
{
public:
    EmbeddingTable(const FieldCard& card, mpfr_prec prec);

    mpfr_prec precision() const { return prec_; }
    std::size_t size() const { return values_.size(); }
    bool is_real(std::size_t e) const { return real_[e]; }
    const std::vector<ComplexInterval>& basis_values(std::size_t e) const { return values_[e]; }

    ComplexInterval embed(std::size_t e, const RingElement& x) const;
    /// |tau_e(x)|.
    Interval abs_at(std::size_t e, const RingElement& x) const;

private:
    mpfr_prec prec_;
    std::vector<bool> real_;
    std::vector<std::vector<ComplexInterval>> values_;
};

/// Index s of the Galois element with tau_e(sigma_s(x)) = conj(tau_e(x)).
int complex_conjugation_index(const FieldCard& card, std::size_t embedding);

struct PrecisionPolicy
{
    mpfr_prec initial = 128;
    mpfr_prec cap = 16384;
    /// Stop when the interval width is below rel_tolerance * max(1, |value|).
    double rel_tolerance = 1e-15;
};

class HeightIndeterminate : public FieldError
{
public:
    HeightIndeterminate(const std::string& what, int place) : FieldError(what), place_(place) {}
    int place() const { return place_; }

private:
    int place_;
};

struct HeightResult
{
    Interval value;      // contains H(x)
    Interval log_value;  // contains log H(x)
    mpfr_prec precision = 0;
};

/// Absolute height H(x) = (prod_v max(1, ||x||_v))^{1/n_k} for x in O_k,
/// certified; precision doubles until the tolerance is met or the cap is hit.
HeightResult height(const RingElement& x, const FieldCard& card, const PrecisionPolicy& policy = {});

}  // namespace exbound
