#include "exbound/quadratic.hpp"

#include "exbound/arith.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace exbound {

namespace {

mpz_class mod(const mpz_class& x, const mpz_class& m)
{
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

mpz_class isqrt(const mpz_class& x)
{
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

// Arithmetic data of the maximal order of discriminant disc, basis (1, omega):
// omega = (e + sqrt(disc)) / 2 with e = disc mod 2.
struct Order
{
    mpz_class disc;
    int e;
    mpz_class omega_norm;  // N(omega)
    mpz_class s;           // floor(sqrt|disc|)

    explicit Order(const mpz_class& d) : disc(d)
    {
        e = mod(d, 4) == 1 ? 1 : 0;
        omega_norm = e == 1 ? mpz_class((1 - d) / 4) : mpz_class(-d / 4);
        s = isqrt(abs(d));
    }

    bool real() const { return disc > 0; }

    // N(x + y omega) = x^2 + e x y + N(omega) y^2.
    mpz_class norm(const mpz_class& x, const mpz_class& y) const
    {
        return x * x + e * x * y + omega_norm * y * y;
    }

    // (x1 + y1 w)(x2 + y2 w), using w^2 = e w - N(w).
    std::pair<mpz_class, mpz_class> mul(const mpz_class& x1, const mpz_class& y1, const mpz_class& x2,
                                        const mpz_class& y2) const
    {
        const mpz_class yy = y1 * y2;
        return {x1 * x2 - omega_norm * yy, x1 * y2 + x2 * y1 + e * yy};
    }
};

Order order_of(const FieldCard& card)
{
    return Order(quadratic_discriminant(card));
}

using Vec = std::pair<mpz_class, mpz_class>;

// HNF of the Z-lattice spanned by vectors (x, y) = x + y omega.
QuadIdeal lattice_hnf(const std::vector<Vec>& gens)
{
    mpz_class c = 0;
    mpz_class x0 = 0;
    for (const auto& [x, y] : gens) {
        // Combine (x0, c) and (x, y) into (x0', gcd(c, y)).
        mpz_class g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), c.get_mpz_t(), y.get_mpz_t());
        if (g == 0)
            continue;
        x0 = s * x0 + t * x;
        c = g;
    }
    if (c < 0) {
        c = -c;
        x0 = -x0;
    }
    if (c == 0)
        throw FieldError("lattice is not of full rank");
    mpz_class a = 0;
    for (const auto& [x, y] : gens)
        a = gcd(a, x - (y / c) * x0);
    if (a == 0)
        throw FieldError("lattice is not of full rank");
    return {a, mod(x0, a), c};
}

std::vector<Vec> ideal_basis(const QuadIdeal& I)
{
    return {{I.a, 0}, {I.b, I.c}};
}

QuadIdeal from_generators(const Order& o, const std::vector<Vec>& gens)
{
    std::vector<Vec> lattice;
    for (const auto& [x, y] : gens) {
        lattice.push_back({x, y});
        lattice.push_back(o.mul(x, y, 0, 1));
    }
    return lattice_hnf(lattice);
}

QuadIdeal multiply(const Order& o, const QuadIdeal& I, const QuadIdeal& J)
{
    std::vector<Vec> lattice;
    for (const auto& [x1, y1] : ideal_basis(I))
        for (const auto& [x2, y2] : ideal_basis(J))
            lattice.push_back(o.mul(x1, y1, x2, y2));
    return lattice_hnf(lattice);
}

// Primitive ideal [A, (B + sqrt disc)/2] scaled by g.
QuadIdeal ideal_of(const Order& o, const mpz_class& A, const mpz_class& B, const mpz_class& g = 1)
{
    const mpz_class t = (B - o.e) / 2;
    return {g * A, g * mod(t, A), g};
}

QuadForm form_of(const Order& o, const QuadIdeal& I)
{
    const mpz_class g = I.c;
    const mpz_class A = I.a / g;
    const mpz_class B = 2 * (I.b / g) + o.e;
    return {A, B, (B * B - o.disc) / (4 * A)};
}

QuadNumber qmul(const Order& o, const QuadNumber& x, const QuadNumber& y)
{
    return {x.u * y.u + x.v * y.v * mpq_class(o.disc), x.u * y.v + x.v * y.u};
}

int sign_real(const Order& o, const QuadNumber& x)
{
    const int su = sgn(x.u);
    const int sv = sgn(x.v);
    if (sv == 0)
        return su;
    if (su == 0 || su == sv)
        return sv;
    // Opposite signs: compare u^2 with v^2 disc.
    const mpq_class lhs = x.u * x.u;
    const mpq_class rhs = x.v * x.v * mpq_class(o.disc);
    return lhs > rhs ? su : sv;
}

std::pair<mpz_class, mpz_class> to_coords(const Order& o, const QuadNumber& x)
{
    const mpq_class y = 2 * x.v;
    const mpq_class xx = x.u - o.e * x.v;
    if (y.get_den() != 1 || xx.get_den() != 1)
        throw FieldError("quadratic number is not an algebraic integer");
    return {xx.get_num(), y.get_num()};
}

// Representative of b mod 2a in the reduction window for the modulus a.
mpz_class normalize(const Order& o, const mpz_class& b, const mpz_class& a)
{
    if (o.real() && a <= o.s)
        return o.s - mod(o.s - b, 2 * a);
    return mod(b + a - 1, 2 * a) - a + 1;
}

bool is_reduced(const Order& o, const mpz_class& A, const mpz_class& B)
{
    if (o.real())
        return B <= o.s && 2 * A - B <= o.s && 2 * A + B >= o.s + 1;
    const mpz_class C = (B * B - o.disc) / (4 * A);
    return -A < B && B <= A && (A < C || (A == C && B >= 0));
}

// One reduction step: [A, (B + sqrt d)/2] = lambda * [A', (B' + sqrt d)/2].
struct Step
{
    mpz_class A;
    mpz_class B;
    QuadNumber lambda;
};

Step rho(const Order& o, const mpz_class& A, const mpz_class& B)
{
    const mpz_class C = (B * B - o.disc) / (4 * A);
    const mpz_class Ap = abs(C);
    QuadNumber lambda{mpq_class(-B, 2 * C), mpq_class(-1, 2 * C)};
    lambda.u.canonicalize();
    lambda.v.canonicalize();
    return {Ap, normalize(o, -B, Ap), lambda};
}

// Reduces a primitive ideal, multiplying `lambda` by the accumulated factor.
std::pair<mpz_class, mpz_class> reduce(const Order& o, mpz_class A, mpz_class B, QuadNumber& lambda)
{
    B = normalize(o, B, A);
    while (!is_reduced(o, A, B)) {
        Step st = rho(o, A, B);
        lambda = qmul(o, lambda, st.lambda);
        A = st.A;
        B = st.B;
    }
    return {A, B};
}

QuadForm canonical(const Order& o, const QuadForm& f)
{
    if (f.a <= 0)
        throw FieldError("canonical_form expects a > 0");
    QuadNumber unused{1, 0};
    auto [A, B] = reduce(o, f.a, f.b, unused);
    if (o.real()) {
        // Least (A, B) on the cycle of reduced ideals.
        std::pair<mpz_class, mpz_class> best{A, B};
        mpz_class a = A;
        mpz_class b = B;
        while (true) {
            Step st = rho(o, a, b);
            a = st.A;
            b = st.B;
            if (a == A && b == B)
                break;
            best = std::min(best, std::pair<mpz_class, mpz_class>{a, b});
        }
        A = best.first;
        B = best.second;
    }
    return {A, B, (B * B - o.disc) / (4 * A)};
}

// Reduced principal ideal [1, (B0 + sqrt d)/2].
mpz_class principal_b(const Order& o)
{
    if (o.real())
        return normalize(o, o.e, 1);
    return o.e;
}

// Fundamental unit > 1 as u + v sqrt(disc), from one period of the principal cycle.
QuadNumber fundamental_unit(const Order& o)
{
    const mpz_class B0 = principal_b(o);
    QuadNumber eps{1, 0};
    mpz_class A = 1;
    mpz_class B = B0;
    do {
        Step st = rho(o, A, B);
        eps = qmul(o, eps, st.lambda);
        A = st.A;
        B = st.B;
    } while (!(A == 1 && B == B0));
    return {abs(eps.u), abs(eps.v)};
}

std::vector<Vec> torsion(const Order& o)
{
    std::vector<Vec> units;
    if (o.real())
        return {{1, 0}, {-1, 0}};
    for (long x = -2; x <= 2; ++x)
        for (long y = -2; y <= 2; ++y)
            if (o.norm(x, y) == 1)
                units.push_back({x, y});
    return units;
}

std::optional<Vec> shortest_generator(const Order& o, const QuadIdeal& I)
{
    Vec v1{I.a, 0};
    Vec v2{I.b, I.c};
    auto N = [&](const Vec& v) { return o.norm(v.first, v.second); };
    while (true) {
        if (N(v1) > N(v2))
            std::swap(v1, v2);
        const mpz_class n1 = N(v1);
        const mpz_class two_b = N({v1.first + v2.first, v1.second + v2.second}) - n1 - N(v2);
        // m = round(two_b / (2 n1))
        mpz_class m;
        const mpz_class num = two_b + n1;
        const mpz_class den = 2 * n1;
        mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (m == 0)
            break;
        v2 = {v2.first - m * v1.first, v2.second - m * v1.second};
    }
    if (N(v1) != I.norm())
        return std::nullopt;
    Vec best = v1;
    for (const auto& [ux, uy] : torsion(o)) {
        Vec cand = o.mul(v1.first, v1.second, ux, uy);
        if (cand > best)
            best = cand;
    }
    return best;
}

std::optional<Vec> cycle_generator(const Order& o, const QuadIdeal& I)
{
    const QuadForm f = form_of(o, I);
    QuadNumber lambda{1, 0};
    auto [A, B] = reduce(o, f.a, f.b, lambda);
    const mpz_class A0 = A;
    const mpz_class B0 = B;
    while (A != 1) {
        Step st = rho(o, A, B);
        lambda = qmul(o, lambda, st.lambda);
        A = st.A;
        B = st.B;
        if (A == A0 && B == B0)
            return std::nullopt;
    }
    lambda.u *= I.c;
    lambda.v *= I.c;
    if (sign_real(o, lambda) < 0) {
        lambda.u = -lambda.u;
        lambda.v = -lambda.v;
    }
    return to_coords(o, lambda);
}

void check_squarefree_radicand(const mpz_class& D)
{
    if (D == 0 || D == 1)
        throw std::invalid_argument("D must not be 0 or 1");
    if (!is_squarefree(D))
        throw std::invalid_argument("D = " + D.get_str() + " is not squarefree");
}

}  // namespace

mpz_class quadratic_discriminant(const FieldCard& card)
{
    if (!card.quadratic_radicand)
        throw FieldError("not a quadratic field card");
    return card.discriminant;
}

RingElement to_ring(const FieldCard& card, const QuadNumber& x)
{
    auto [a, b] = to_coords(order_of(card), x);
    return RingElement({a, b});
}

QuadNumber from_ring(const FieldCard& card, const RingElement& x)
{
    const Order o = order_of(card);
    const mpq_class y(x.coords.at(1));
    return {mpq_class(x.coords.at(0)) + o.e * y / 2, y / 2};
}

const char* to_string(SplitType t)
{
    switch (t) {
    case SplitType::split:
        return "split";
    case SplitType::inert:
        return "inert";
    case SplitType::ramified:
        return "ramified";
    }
    return "?";
}

SplitType split_type(const FieldCard& card, const mpz_class& p)
{
    const mpz_class d = quadratic_discriminant(card);
    if (d % p == 0)
        return SplitType::ramified;
    return kronecker(d, p) == 1 ? SplitType::split : SplitType::inert;
}

QuadIdeal prime_above(const FieldCard& card, const mpz_class& p)
{
    if (!is_prime(p))
        throw std::invalid_argument(p.get_str() + " is not prime");
    if (split_type(card, p) == SplitType::inert)
        throw std::invalid_argument(p.get_str() + " is inert");
    const Order o = order_of(card);
    const mpz_class four_p = 4 * p;
    std::vector<mpz_class> candidates;
    if (p == 2) {
        for (long b = 0; b < 4; ++b)
            candidates.push_back(b);
    } else {
        const mpz_class r = *sqrt_mod_prime(mod(o.disc, p), p);
        for (const mpz_class& b : {mpz_class(r), mpz_class(p - r), mpz_class(r + p), mpz_class(2 * p - r)})
            candidates.push_back(b);
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& b : candidates) {
        if (b >= 0 && b < 2 * p && mod(b * b - o.disc, four_p) == 0)
            return ideal_of(o, p, b);
    }
    throw FieldError("no square root of the discriminant modulo 4p");
}

QuadIdeal ideal_from_generators(const FieldCard& card, const std::vector<RingElement>& generators)
{
    const Order o = order_of(card);
    std::vector<Vec> gens;
    for (const auto& g : generators)
        gens.push_back({g.coords.at(0), g.coords.at(1)});
    return from_generators(o, gens);
}

QuadIdeal principal_ideal(const FieldCard& card, const RingElement& alpha)
{
    if (alpha.is_zero())
        throw std::invalid_argument("zero ideal");
    return ideal_from_generators(card, {alpha});
}

QuadIdeal ideal_mul(const FieldCard& card, const QuadIdeal& x, const QuadIdeal& y)
{
    return multiply(order_of(card), x, y);
}

QuadIdeal ideal_pow(const FieldCard& card, const QuadIdeal& x, unsigned long exponent)
{
    const Order o = order_of(card);
    QuadIdeal result{1, 0, 1};
    QuadIdeal base = x;
    while (exponent > 0) {
        if (exponent & 1)
            result = multiply(o, result, base);
        exponent >>= 1;
        if (exponent > 0)
            base = multiply(o, base, base);
    }
    return result;
}

QuadIdeal ideal_conjugate(const FieldCard& card, const QuadIdeal& x)
{
    const Order o = order_of(card);
    // conj(b + c w) = (b + c e) - c w
    return lattice_hnf({{x.a, 0}, {x.b + x.c * o.e, -x.c}});
}

bool ideal_contains(const QuadIdeal& ideal, const RingElement& x)
{
    const mpz_class& x0 = x.coords.at(0);
    const mpz_class& x1 = x.coords.at(1);
    if (x1 % ideal.c != 0)
        return false;
    const mpz_class k = x1 / ideal.c;
    return (x0 - k * ideal.b) % ideal.a == 0;
}

std::optional<RingElement> principal_generator(const FieldCard& card, const QuadIdeal& ideal)
{
    const Order o = order_of(card);
    const std::optional<Vec> g = o.real() ? cycle_generator(o, ideal) : shortest_generator(o, ideal);
    if (!g)
        return std::nullopt;
    return RingElement({g->first, g->second});
}

QuadForm canonical_form(const mpz_class& disc, const QuadForm& form)
{
    return canonical(Order(disc), form);
}

QuadForm ideal_form(const FieldCard& card, const QuadIdeal& ideal)
{
    return form_of(order_of(card), ideal);
}

// Class group

ClassGroup::ClassGroup(const FieldCard& card) : ClassGroup(quadratic_discriminant(card)) {}

ClassGroup::ClassGroup(const mpz_class& disc) : disc_(disc)
{
    const Order o(disc);
    const mpz_class B0 = principal_b(o);
    const QuadForm identity = canonical(o, {1, B0, (B0 * B0 - disc) / 4});
    classes_.push_back(identity);
    index_[{identity.a, identity.b}] = 0;

    // Classes of primes below the Minkowski bound generate the group:
    // (2/pi) sqrt|d| < sqrt|d| for imaginary fields, sqrt(d)/2 for real ones.
    const mpz_class bound = o.real() ? o.s / 2 + 1 : o.s;
    if (!bound.fits_ulong_p() || bound > 100'000'000)
        throw FieldError("discriminant too large for class group enumeration");
    for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(bound.get_ui()))) {
        const mpz_class d_mod_p = mod(disc, p);
        if (d_mod_p != 0 && kronecker(disc, p) != 1)
            continue;
        // Smallest b with b^2 = d mod 4p.
        std::optional<mpz_class> b;
        for (mpz_class cand = 0; cand < 2 * p; ++cand) {
            if (mod(cand * cand - disc, 4 * mpz_class(p)) == 0) {
                b = cand;
                break;
            }
        }
        const QuadForm pf = canonical(o, {p, *b, (*b * *b - disc) / (4 * p)});
        if (index_.count({pf.a, pf.b}))
            continue;
        // Adjoin the class: H' = union of g^i H until g^k lands in H.
        std::vector<QuadForm> layer(classes_.begin(), classes_.end());
        while (true) {
            std::vector<QuadForm> next;
            for (const auto& f : layer)
                next.push_back(compose_forms(f, pf));
            if (index_.count({next.front().a, next.front().b}))
                break;
            for (const auto& f : next) {
                index_[{f.a, f.b}] = classes_.size();
                classes_.push_back(f);
            }
            layer = std::move(next);
        }
        generators_.push_back({index_.at({pf.a, pf.b}), 0, ideal_of(o, p, *b)});
    }
    for (auto& g : generators_)
        g.order = element_order(g.element);

    // Invariant factors from the counts #{x : x^(p^j) = 1}.
    const unsigned long h = classes_.size();
    std::map<unsigned long, std::vector<unsigned long>> p_parts;  // p -> cyclic factor orders
    unsigned long rest = h;
    for (unsigned long p = 2; p <= rest; ++p) {
        if (rest % p != 0)
            continue;
        while (rest % p == 0)
            rest /= p;
        std::vector<unsigned long> ranks{0};  // log_p #{x^(p^j) = 1}
        unsigned long pj = 1;
        while (true) {
            pj *= p;
            unsigned long count = 0;
            for (std::size_t x = 0; x < h; ++x)
                count += (pj % element_order(x) == 0) ? 1 : 0;
            unsigned long r = 0;
            for (unsigned long c = count; c > 1; c /= p)
                ++r;
            if (r == ranks.back())
                break;
            ranks.push_back(r);
        }
        // Number of cyclic factors of order >= p^j is ranks[j] - ranks[j-1].
        std::vector<unsigned long> parts;
        for (std::size_t j = ranks.size() - 1; j >= 1; --j) {
            const unsigned long at_least_j = ranks[j] - ranks[j - 1];
            const unsigned long at_least_next = j + 1 < ranks.size() ? ranks[j + 1] - ranks[j] : 0;
            unsigned long pow = 1;
            for (std::size_t t = 0; t < j; ++t)
                pow *= p;
            for (unsigned long c = 0; c < at_least_j - at_least_next; ++c)
                parts.push_back(pow);
        }
        p_parts[p] = parts;  // descending
    }
    std::size_t factors = 0;
    for (const auto& [p, parts] : p_parts)
        factors = std::max(factors, parts.size());
    for (std::size_t i = 0; i < factors; ++i) {
        unsigned long d = 1;
        for (const auto& [p, parts] : p_parts)
            if (i < parts.size())
                d *= parts[i];
        invariants_.push_back(d);
    }
    std::reverse(invariants_.begin(), invariants_.end());
}

QuadForm ClassGroup::compose_forms(const QuadForm& x, const QuadForm& y) const
{
    const Order o(disc_);
    const QuadIdeal product = multiply(o, ideal_of(o, x.a, x.b), ideal_of(o, y.a, y.b));
    return canonical(o, form_of(o, product));
}

std::size_t ClassGroup::lookup(const QuadForm& canonical) const
{
    auto it = index_.find({canonical.a, canonical.b});
    if (it == index_.end())
        throw FieldError("form is not in the enumerated class group");
    return it->second;
}

std::size_t ClassGroup::index_of(const QuadIdeal& ideal) const
{
    const Order o(disc_);
    return lookup(canonical(o, form_of(o, ideal)));
}

std::size_t ClassGroup::compose(std::size_t x, std::size_t y) const
{
    return lookup(compose_forms(classes_.at(x), classes_.at(y)));
}

std::size_t ClassGroup::inverse(std::size_t x) const
{
    const QuadForm& f = classes_.at(x);
    return lookup(canonical_form(disc_, {f.a, -f.b, f.c}));
}

unsigned long ClassGroup::element_order(std::size_t x) const
{
    if (orders_.size() != classes_.size())
        orders_.assign(classes_.size(), 0);
    if (orders_[x] != 0)
        return orders_[x];
    unsigned long k = 1;
    std::size_t y = x;
    while (y != 0) {
        y = compose(y, x);
        ++k;
    }
    orders_[x] = k;
    return k;
}

QuadIdeal ClassGroup::representative(std::size_t x) const
{
    const QuadForm& f = classes_.at(x);
    return ideal_of(Order(disc_), f.a, f.b);
}

ClassGroup class_group(const FieldCard& card)
{
    return ClassGroup(card);
}

bool hcf_containment_check(const FieldCard& card)
{
    const mpz_class d = quadratic_discriminant(card);
    return d < 0 && card.class_number == 1;
}

// Card construction

FieldCard build_card(const mpz_class& D)
{
    check_squarefree_radicand(D);
    const mpz_class disc = mod(D, 4) == 1 ? D : mpz_class(4 * D);
    const Order o(disc);
    FieldCard card;
    card.label = "Q(sqrt(" + D.get_str() + "))";
    card.degree = 2;
    card.discriminant = disc;
    card.quadratic_radicand = D;
    card.basis_names = {"1", o.e == 1 ? "(1+sqrt(" + D.get_str() + "))/2" : "sqrt(" + D.get_str() + ")"};
    card.multiplication = {{{1, 0}, {0, 1}}, {{0, 1}, {-o.omega_norm, o.e}}};
    card.galois = {{{1, 0}, {0, 1}}, {{1, o.e}, {0, -1}}};

    const FactorizationResult f = factor_bounded(disc);
    if (!f.complete())
        throw FieldError("could not factor the discriminant");
    for (const auto& pp : f.known_factors)
        card.ramified_primes.push_back(pp.prime);

    // omega and its conjugate under the two embeddings.
    const mpfr_prec prec = 256;
    const int digits = 45;
    const Interval root = sqrt(Interval(mpz_class(abs(disc)), prec));
    const Interval half(mpq_class(1, 2), prec);
    const Interval e_half = Interval(static_cast<long>(o.e), prec) * half;
    const Interval root_half = root * half;
    std::vector<ComplexInterval> omegas;
    if (o.real()) {
        card.unit_rank = 1;
        omegas.push_back({e_half + root_half, Interval(0L, prec)});
        omegas.push_back({e_half - root_half, Interval(0L, prec)});
    } else {
        card.unit_rank = 0;
        omegas.push_back({e_half, root_half});
        omegas.push_back({e_half, -root_half});
    }
    PowerBasis pb;
    pb.polynomial = {o.omega_norm, -o.e, 1};
    pb.basis = {{1, 0}, {0, 1}};
    pb.denominator = 1;
    for (const auto& w : omegas) {
        EmbeddingData emb;
        emb.real = o.real();
        emb.basis_values.push_back(DecimalComplex::from({Interval(1L, prec), Interval(0L, prec)}, digits));
        emb.basis_values.push_back(DecimalComplex::from(w, digits));
        card.embeddings.push_back(emb);
        pb.roots.push_back(DecimalComplex::from(w, digits));
    }
    card.power_basis = pb;
    card.distinguished_embedding = 0;

    if (o.real()) {
        const QuadNumber eps = fundamental_unit(o);
        card.fundamental_units.push_back(to_ring(card, eps));
        for (mpfr_prec p = 128;; p *= 2) {
            const Interval value =
                Interval(eps.u, p) + Interval(eps.v, p) * sqrt(Interval(disc, p));
            const Interval reg = log(value);
            if (reg.width().to_double() < 1e-30 || p >= 1 << 16) {
                card.regulator = DecimalInterval::from(reg, 35);
                break;
            }
        }
        card.torsion_order = 2;
    } else {
        card.regulator = {"1", "0"};
        card.torsion_order = D == -1 ? 4 : (D == -3 ? 6 : 2);
    }
    card.class_number = ClassGroup(disc).order();
    card.delta_k = default_delta(2);
    card.is_galois_asserted = true;
    card.hcf_free_asserted = !(D < 0 && card.class_number == 1);
    card.quadratic_subfields.push_back({D, RingElement(o.e == 1 ? IntVector{-1, 2} : IntVector{0, 1})});
    validate_card(card);
    return card;
}

}  // namespace exbound
