#include "exbound/interval.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace exbound {

// BigFloat

BigFloat::BigFloat(mpfr_prec prec)
{
    mpfr_init2(value_, prec);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other)
{
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept
{
    mpfr_init2(value_, other.precision());
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other)
{
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept
{
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat()
{
    mpfr_clear(value_);
}

namespace {

mpfr_prec joint_precision(const Interval& a, const Interval& b)
{
    return std::max(a.precision(), b.precision());
}

// min/max of four products, each rounded outward.
void product_bounds(mpfr_ptr lo, mpfr_ptr hi, const Interval& a, const Interval& b)
{
    const mpfr_prec prec = mpfr_get_prec(lo);
    BigFloat t(prec);
    mpfr_srcptr as[2] = {a.lo().get(), a.hi().get()};
    mpfr_srcptr bs[2] = {b.lo().get(), b.hi().get()};
    bool first = true;
    for (auto x : as) {
        for (auto y : bs) {
            mpfr_mul(t.get(), x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t.get(), lo))
                mpfr_set(lo, t.get(), MPFR_RNDD);
            mpfr_mul(t.get(), x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t.get(), hi))
                mpfr_set(hi, t.get(), MPFR_RNDU);
            first = false;
        }
    }
}

std::string format_scientific(mpfr_srcptr x, int digits, mpfr_rnd_t rnd)
{
    if (mpfr_zero_p(x))
        return "0";
    mpfr_exp_t exponent = 0;
    char* raw = mpfr_get_str(nullptr, &exponent, 10, static_cast<size_t>(digits), x, rnd);
    std::string mantissa(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!mantissa.empty() && mantissa.front() == '-') {
        sign = "-";
        mantissa.erase(0, 1);
    }
    std::string out = sign + mantissa.substr(0, 1);
    std::string rest = mantissa.substr(1);
    while (!rest.empty() && rest.back() == '0')
        rest.pop_back();
    if (!rest.empty())
        out += "." + rest;
    const long e = static_cast<long>(exponent) - 1;
    if (e != 0)
        out += "e" + std::to_string(e);
    return out;
}

}  // namespace

// Interval

Interval::Interval(mpfr_prec prec) : lo_(prec), hi_(prec) {}

Interval::Interval(long value, mpfr_prec prec) : lo_(prec), hi_(prec)
{
    mpfr_set_si(lo_.get(), value, MPFR_RNDD);
    mpfr_set_si(hi_.get(), value, MPFR_RNDU);
}

Interval::Interval(const mpz_class& value, mpfr_prec prec) : lo_(prec), hi_(prec)
{
    mpfr_set_z(lo_.get(), value.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi_.get(), value.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const mpq_class& value, mpfr_prec prec) : lo_(prec), hi_(prec)
{
    mpfr_set_q(lo_.get(), value.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_.get(), value.get_mpq_t(), MPFR_RNDU);
}

Interval Interval::hull(const BigFloat& lo, const BigFloat& hi)
{
    Interval r(std::max(lo.precision(), hi.precision()));
    mpfr_set(r.lo_.get(), lo.get(), MPFR_RNDD);
    mpfr_set(r.hi_.get(), hi.get(), MPFR_RNDU);
    if (mpfr_greater_p(r.lo_.get(), r.hi_.get()))
        throw std::invalid_argument("interval hull: lo > hi");
    return r;
}

Interval Interval::pi(mpfr_prec prec)
{
    Interval r(prec);
    mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
    mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::from_decimal(const std::string& mid, const std::string& rad, mpfr_prec prec)
{
    Interval r(prec);
    BigFloat radius(prec);
    if (mpfr_set_str(r.lo_.get(), mid.c_str(), 10, MPFR_RNDD) != 0
        || mpfr_set_str(r.hi_.get(), mid.c_str(), 10, MPFR_RNDU) != 0
        || mpfr_set_str(radius.get(), rad.c_str(), 10, MPFR_RNDU) != 0)
        throw std::invalid_argument("malformed decimal interval: " + mid + " +/- " + rad);
    if (mpfr_sgn(radius.get()) < 0)
        throw std::invalid_argument("negative interval radius: " + rad);
    mpfr_sub(r.lo_.get(), r.lo_.get(), radius.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), r.hi_.get(), radius.get(), MPFR_RNDU);
    return r;
}

bool Interval::contains_zero() const
{
    return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
}

bool Interval::contains(const mpz_class& value) const
{
    return mpfr_cmp_z(lo_.get(), value.get_mpz_t()) <= 0 && mpfr_cmp_z(hi_.get(), value.get_mpz_t()) >= 0;
}

bool Interval::contains(const Interval& other) const
{
    return mpfr_lessequal_p(lo_.get(), other.lo_.get()) && mpfr_greaterequal_p(hi_.get(), other.hi_.get());
}

bool Interval::overlaps(const Interval& other) const
{
    return mpfr_lessequal_p(lo_.get(), other.hi_.get()) && mpfr_lessequal_p(other.lo_.get(), hi_.get());
}

bool Interval::is_positive() const
{
    return mpfr_sgn(lo_.get()) > 0;
}

bool Interval::is_negative() const
{
    return mpfr_sgn(hi_.get()) < 0;
}

BigFloat Interval::width() const
{
    BigFloat w(precision());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return w;
}

BigFloat Interval::magnitude() const
{
    BigFloat m(precision());
    BigFloat a(precision());
    mpfr_abs(m.get(), lo_.get(), MPFR_RNDU);
    mpfr_abs(a.get(), hi_.get(), MPFR_RNDU);
    mpfr_max(m.get(), m.get(), a.get(), MPFR_RNDU);
    return m;
}

Interval Interval::midpoint() const
{
    Interval r(precision());
    mpfr_add(r.lo_.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_2ui(r.lo_.get(), r.lo_.get(), 1, MPFR_RNDN);
    mpfr_set(r.hi_.get(), r.lo_.get(), MPFR_RNDN);
    return r;
}

double Interval::mid_double() const
{
    return midpoint().lo().to_double();
}

std::pair<std::string, std::string> Interval::to_decimal(int digits) const
{
    const mpfr_prec prec = precision() + 64;
    Interval mid = midpoint();
    std::string mid_text = format_scientific(mid.lo().get(), digits, MPFR_RNDN);
    Interval parsed = from_decimal(mid_text, "0", prec);
    BigFloat rad(prec);
    BigFloat t(prec);
    mpfr_sub(rad.get(), hi_.get(), parsed.lo_.get(), MPFR_RNDU);
    mpfr_sub(t.get(), parsed.hi_.get(), lo_.get(), MPFR_RNDU);
    mpfr_max(rad.get(), rad.get(), t.get(), MPFR_RNDU);
    if (mpfr_sgn(rad.get()) < 0)
        mpfr_set_zero(rad.get(), 1);
    return {mid_text, format_scientific(rad.get(), 3, MPFR_RNDU)};
}

Interval& Interval::operator+=(const Interval& other)
{
    const mpfr_prec prec = joint_precision(*this, other);
    Interval r(prec);
    mpfr_add(r.lo_.get(), lo_.get(), other.lo_.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), hi_.get(), other.hi_.get(), MPFR_RNDU);
    *this = std::move(r);
    return *this;
}

Interval& Interval::operator-=(const Interval& other)
{
    const mpfr_prec prec = joint_precision(*this, other);
    Interval r(prec);
    mpfr_sub(r.lo_.get(), lo_.get(), other.hi_.get(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), hi_.get(), other.lo_.get(), MPFR_RNDU);
    *this = std::move(r);
    return *this;
}

Interval& Interval::operator*=(const Interval& other)
{
    Interval r(joint_precision(*this, other));
    product_bounds(r.lo_.get(), r.hi_.get(), *this, other);
    *this = std::move(r);
    return *this;
}

Interval operator/(const Interval& a, const Interval& b)
{
    if (b.contains_zero())
        throw std::domain_error("interval division by an interval containing zero");
    Interval inv(joint_precision(a, b));
    mpfr_ui_div(inv.lo_.get(), 1, b.hi_.get(), MPFR_RNDD);
    mpfr_ui_div(inv.hi_.get(), 1, b.lo_.get(), MPFR_RNDU);
    return a * inv;
}

Interval operator-(const Interval& a)
{
    Interval r(a.precision());
    mpfr_neg(r.lo_.get(), a.hi_.get(), MPFR_RNDD);
    mpfr_neg(r.hi_.get(), a.lo_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::widened(const BigFloat& radius) const
{
    Interval r(precision());
    mpfr_sub(r.lo_.get(), lo_.get(), radius.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), hi_.get(), radius.get(), MPFR_RNDU);
    return r;
}

Interval abs(const Interval& x)
{
    if (mpfr_sgn(x.lo().get()) >= 0)
        return x;
    if (mpfr_sgn(x.hi().get()) <= 0)
        return -x;
    BigFloat zero(x.precision());
    return Interval::hull(zero, x.magnitude());
}

Interval sqrt(const Interval& x)
{
    if (mpfr_sgn(x.hi().get()) < 0)
        throw std::domain_error("sqrt of a negative interval");
    BigFloat lo(x.precision());
    BigFloat hi(x.precision());
    if (mpfr_sgn(x.lo().get()) > 0)
        mpfr_sqrt(lo.get(), x.lo().get(), MPFR_RNDD);
    mpfr_sqrt(hi.get(), x.hi().get(), MPFR_RNDU);
    return Interval::hull(lo, hi);
}

Interval exp(const Interval& x)
{
    BigFloat lo(x.precision());
    BigFloat hi(x.precision());
    mpfr_exp(lo.get(), x.lo().get(), MPFR_RNDD);
    mpfr_exp(hi.get(), x.hi().get(), MPFR_RNDU);
    return Interval::hull(lo, hi);
}

Interval log(const Interval& x)
{
    if (!x.is_positive())
        throw std::domain_error("log of an interval not bounded away from zero");
    BigFloat lo(x.precision());
    BigFloat hi(x.precision());
    mpfr_log(lo.get(), x.lo().get(), MPFR_RNDD);
    mpfr_log(hi.get(), x.hi().get(), MPFR_RNDU);
    return Interval::hull(lo, hi);
}

Interval log10(const Interval& x)
{
    if (!x.is_positive())
        throw std::domain_error("log10 of an interval not bounded away from zero");
    BigFloat lo(x.precision());
    BigFloat hi(x.precision());
    mpfr_log10(lo.get(), x.lo().get(), MPFR_RNDD);
    mpfr_log10(hi.get(), x.hi().get(), MPFR_RNDU);
    return Interval::hull(lo, hi);
}

Interval pow(const Interval& x, unsigned long exponent)
{
    if (exponent == 0)
        return Interval(1L, x.precision());
    BigFloat lo(x.precision());
    BigFloat hi(x.precision());
    if (exponent % 2 == 1) {
        mpfr_pow_ui(lo.get(), x.lo().get(), exponent, MPFR_RNDD);
        mpfr_pow_ui(hi.get(), x.hi().get(), exponent, MPFR_RNDU);
        return Interval::hull(lo, hi);
    }
    Interval a = abs(x);
    mpfr_pow_ui(lo.get(), a.lo().get(), exponent, MPFR_RNDD);
    mpfr_pow_ui(hi.get(), a.hi().get(), exponent, MPFR_RNDU);
    return Interval::hull(lo, hi);
}

Interval max(const Interval& a, const Interval& b)
{
    BigFloat lo(joint_precision(a, b));
    BigFloat hi(joint_precision(a, b));
    mpfr_max(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
    mpfr_max(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
    return Interval::hull(lo, hi);
}

Interval min(const Interval& a, const Interval& b)
{
    BigFloat lo(joint_precision(a, b));
    BigFloat hi(joint_precision(a, b));
    mpfr_min(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
    mpfr_min(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
    return Interval::hull(lo, hi);
}

Interval max_one(const Interval& x)
{
    return max(x, Interval(1L, x.precision()));
}

bool certainly_le(const Interval& a, const Interval& b)
{
    return mpfr_lessequal_p(a.hi().get(), b.lo().get());
}

bool certainly_lt(const Interval& a, const Interval& b)
{
    return mpfr_less_p(a.hi().get(), b.lo().get());
}

// ComplexInterval

ComplexInterval& ComplexInterval::operator+=(const ComplexInterval& other)
{
    re += other.re;
    im += other.im;
    return *this;
}

ComplexInterval& ComplexInterval::operator-=(const ComplexInterval& other)
{
    re -= other.re;
    im -= other.im;
    return *this;
}

ComplexInterval& ComplexInterval::operator*=(const ComplexInterval& other)
{
    Interval r = re * other.re - im * other.im;
    Interval i = re * other.im + im * other.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

ComplexInterval& ComplexInterval::operator*=(const Interval& scalar)
{
    re *= scalar;
    im *= scalar;
    return *this;
}

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b)
{
    Interval denom = abs2(b);
    ComplexInterval num = a * b.conj();
    return {num.re / denom, num.im / denom};
}

ComplexInterval ComplexInterval::conj() const
{
    return {re, -im};
}

Interval abs2(const ComplexInterval& z)
{
    return pow(z.re, 2) + pow(z.im, 2);
}

Interval abs(const ComplexInterval& z)
{
    return sqrt(abs2(z));
}

ComplexInterval pow(const ComplexInterval& z, unsigned long exponent)
{
    ComplexInterval result(Interval(1L, z.precision()), Interval(0L, z.precision()));
    ComplexInterval base = z;
    while (exponent > 0) {
        if (exponent & 1UL)
            result *= base;
        exponent >>= 1;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

}  // namespace exbound
