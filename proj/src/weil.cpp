#include "exbound/weil.hpp"

#include "exbound/arith.hpp"

#include <stdexcept>

namespace exbound {

WeilNumber WeilNumber::conjugate() const
{
    if (is_double_root())
        return *this;
    return {a, n, root == RootChoice::upper ? RootChoice::lower : RootChoice::upper};
}

std::string WeilNumber::to_string() const
{
    std::string s = "(a=" + a.get_str() + ", n=" + n.get_str();
    if (!is_double_root())
        s += root == RootChoice::upper ? ", upper" : ", lower";
    return s + ")";
}

std::vector<WeilNumber> enumerate_FR(const mpz_class& n)
{
    if (n < 1)
        throw std::invalid_argument("FR(n) needs n >= 1");
    mpz_class bound;
    const mpz_class four_n = 4 * n;
    mpz_sqrt(bound.get_mpz_t(), four_n.get_mpz_t());
    std::vector<WeilNumber> out;
    for (mpz_class a = -bound; a <= bound; ++a) {
        out.push_back({a, n, RootChoice::upper});
        if (a * a != four_n)
            out.push_back({a, n, RootChoice::lower});
    }
    return out;
}

mpz_class power_trace(const WeilNumber& w, unsigned long M)
{
    mpz_class prev = 2;  // s_0
    if (M == 0)
        return prev;
    mpz_class cur = -w.a;  // s_1
    for (unsigned long m = 2; m <= M; ++m) {
        mpz_class next = -w.a * cur - w.n * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BetaPower beta_power(const WeilNumber& w, unsigned long M)
{
    // (x1 + y1 b)(x2 + y2 b) with b^2 = -a b - n.
    auto mul = [&](const BetaPower& p, const BetaPower& q) {
        const mpz_class yy = p.y * q.y;
        return BetaPower{p.x * q.x - w.n * yy, p.x * q.y + p.y * q.x - w.a * yy};
    };
    BetaPower result{1, 0};
    BetaPower base{0, 1};
    while (M > 0) {
        if (M & 1)
            result = mul(result, base);
        M >>= 1;
        if (M > 0)
            base = mul(base, base);
    }
    return result;
}

std::optional<RingElement> beta_in_field(const WeilNumber& w, const FieldCard& card)
{
    const mpz_class disc = w.discriminant();
    if (disc > 0)
        throw std::invalid_argument("not a Weil number: a^2 > 4n");
    if (disc == 0)
        return ring_integer(card, -w.a / 2);
    // disc = f^2 s with s squarefree; need sqrt(s) in k.
    auto [s, f] = squarefree_decomposition(disc);
    for (const auto& sub : card.quadratic_subfields) {
        if (sub.radicand != s)
            continue;
        // Orient sqrt(s) so that it has positive imaginary part at the
        // distinguished embedding; that root is `upper`.
        const EmbeddingTable table(card, 128);
        const ComplexInterval z = table.embed(static_cast<std::size_t>(card.distinguished_embedding), sub.sqrt);
        if (!z.im.is_positive() && !z.im.is_negative())
            throw FieldError("cannot orient sqrt(" + s.get_str() + ") at the distinguished embedding");
        RingElement root = ring_scale(sub.sqrt, f);
        if (z.im.is_negative() != (w.root == RootChoice::lower))
            root = ring_neg(root);
        RingElement twice = ring_add(ring_integer(card, -w.a), root);
        for (auto& c : twice.coords) {
            if (c % 2 != 0)
                throw FieldError("Weil number is not integral on the card basis");
            c /= 2;
        }
        return twice;
    }
    return std::nullopt;
}

WeilPowerCheck weil_power_check(const WeilNumber& w)
{
    WeilPowerCheck out;
    const BetaPower b12 = beta_power(w, 12);
    const BetaPower b24 = beta_power(w, 24);
    if (w.is_double_root()) {
        // beta = -a/2 is rational.
        mpz_class beta = -w.a / 2;
        mpz_class p12;
        mpz_pow_ui(p12.get_mpz_t(), beta.get_mpz_t(), 12);
        out.beta12 = p12;
        out.beta24 = p12 * p12;
        return out;
    }
    if (b12.y == 0)
        out.beta12 = b12.x;
    if (b24.y == 0)
        out.beta24 = b24.x;
    return out;
}

ComplexInterval weil_value(const WeilNumber& w, mpfr_prec prec)
{
    const Interval half(mpq_class(1, 2), prec);
    const Interval re = -Interval(w.a, prec) * half;
    const mpz_class disc = w.discriminant();
    Interval im = sqrt(Interval(mpz_class(-disc), prec)) * half;
    if (w.root == RootChoice::lower)
        im = -im;
    return {re, im};
}

}  // namespace exbound
