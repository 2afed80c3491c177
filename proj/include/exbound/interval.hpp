#pragma once

// Outward-rounded real and complex intervals on top of MPFR.

#include <mpfr.h>
#include <gmpxx.h>

#include <string>
#include <utility>

namespace exbound {

using mpfr_prec = mpfr_prec_t;

inline constexpr mpfr_prec kDefaultPrecision = 128;

/// Owning wrapper around an mpfr_t.
class BigFloat
{
public:
    explicit BigFloat(mpfr_prec prec = kDefaultPrecision);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    mpfr_prec precision() const { return mpfr_get_prec(value_); }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

private:
    mpfr_t value_;
};

/// Closed interval [lo, hi]. Every operation rounds lo down and hi up, so the
/// result always contains the exact image of the operands.
class Interval
{
public:
    explicit Interval(mpfr_prec prec = kDefaultPrecision);
    Interval(long value, mpfr_prec prec);
    Interval(const mpz_class& value, mpfr_prec prec);
    Interval(const mpq_class& value, mpfr_prec prec);

    static Interval hull(const BigFloat& lo, const BigFloat& hi);
    static Interval pi(mpfr_prec prec);
    /// Parses "mid" and "rad" decimal strings into [mid - rad, mid + rad].
    static Interval from_decimal(const std::string& mid, const std::string& rad, mpfr_prec prec);

    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }
    mpfr_prec precision() const { return lo_.precision(); }

    bool contains_zero() const;
    bool contains(const mpz_class& value) const;
    bool contains(const Interval& other) const;
    bool overlaps(const Interval& other) const;
    bool is_positive() const;  // lo > 0
    bool is_negative() const;  // hi < 0

    /// hi - lo, rounded up.
    BigFloat width() const;
    /// Largest |x| over the interval, rounded up.
    BigFloat magnitude() const;
    /// Midpoint (rounded to nearest) as a degenerate interval.
    Interval midpoint() const;

    /// Decimal midpoint with `digits` significant digits and an outward radius.
    std::pair<std::string, std::string> to_decimal(int digits) const;

    double mid_double() const;

    Interval& operator+=(const Interval& other);
    Interval& operator-=(const Interval& other);
    Interval& operator*=(const Interval& other);

    friend Interval operator+(Interval a, const Interval& b) { return a += b; }
    friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
    friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
    friend Interval operator/(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a);

    /// Widen by a nonnegative radius on both sides.
    Interval widened(const BigFloat& radius) const;

private:
    BigFloat lo_;
    BigFloat hi_;
};

Interval abs(const Interval& x);
Interval sqrt(const Interval& x);
Interval exp(const Interval& x);
Interval log(const Interval& x);
Interval log10(const Interval& x);
/// Integer power by repeated squaring on intervals; exact image for even powers.
Interval pow(const Interval& x, unsigned long exponent);
/// max(1, x) for x >= 0 sets.
Interval max_one(const Interval& x);
Interval max(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);

/// Certified ordering. Returns true only when every point of a is <= every point of b.
bool certainly_le(const Interval& a, const Interval& b);
bool certainly_lt(const Interval& a, const Interval& b);

/// Rectangular complex interval.
struct ComplexInterval
{
    Interval re;
    Interval im;

    explicit ComplexInterval(mpfr_prec prec = kDefaultPrecision) : re(prec), im(prec) {}
    ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

    mpfr_prec precision() const { return re.precision(); }

    ComplexInterval& operator+=(const ComplexInterval& other);
    ComplexInterval& operator-=(const ComplexInterval& other);
    ComplexInterval& operator*=(const ComplexInterval& other);
    ComplexInterval& operator*=(const Interval& scalar);

    friend ComplexInterval operator+(ComplexInterval a, const ComplexInterval& b) { return a += b; }
    friend ComplexInterval operator-(ComplexInterval a, const ComplexInterval& b) { return a -= b; }
    friend ComplexInterval operator*(ComplexInterval a, const ComplexInterval& b) { return a *= b; }
    friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);

    ComplexInterval conj() const;
    ComplexInterval midpoint() const { return {re.midpoint(), im.midpoint()}; }
};

Interval abs(const ComplexInterval& z);
Interval abs2(const ComplexInterval& z);
ComplexInterval pow(const ComplexInterval& z, unsigned long exponent);

}  // namespace exbound
