#pragma once

// Quadratic Weil numbers: roots of x^2 + a x + n with a^2 <= 4n.

#include "exbound/field.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace exbound {

enum class RootChoice { upper, lower };

/// beta = (-a + sqrt(a^2 - 4n)) / 2 for `upper` (nonnegative imaginary part),
/// the conjugate for `lower`. A double root (a^2 = 4n) is always `upper`.
struct WeilNumber
{
    mpz_class a;
    mpz_class n;
    RootChoice root = RootChoice::upper;

    mpz_class discriminant() const { return a * a - 4 * n; }
    bool is_double_root() const { return discriminant() == 0; }
    WeilNumber conjugate() const;
    std::string to_string() const;
    bool operator==(const WeilNumber&) const = default;
};

/// All of FR(n), ordered by a and then upper before lower.
std::vector<WeilNumber> enumerate_FR(const mpz_class& n);

/// s_M = beta^M + conj(beta)^M via s_m = -a s_{m-1} - n s_{m-2}.
mpz_class power_trace(const WeilNumber& w, unsigned long M);

/// beta^M = x + y beta in Z[beta], exactly.
struct BetaPower
{
    mpz_class x;
    mpz_class y;
};
BetaPower beta_power(const WeilNumber& w, unsigned long M);

/// beta as an element of O_k, if k contains it.
std::optional<RingElement> beta_in_field(const WeilNumber& w, const FieldCard& card);

struct WeilPowerCheck
{
    std::optional<mpz_class> beta12;  // set when beta^12 is rational
    std::optional<mpz_class> beta24;
};
WeilPowerCheck weil_power_check(const WeilNumber& w);

/// beta under the complex embedding fixed by root_choice.
ComplexInterval weil_value(const WeilNumber& w, mpfr_prec prec);

}  // namespace exbound
