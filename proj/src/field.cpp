#include "exbound/field.hpp"

#include "exbound/arith.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace exbound {

bool RingElement::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](const mpz_class& c) { return c == 0; });
}

DecimalInterval DecimalInterval::from(const Interval& x, int digits)
{
    auto [mid, rad] = x.to_decimal(digits);
    return {mid, rad};
}

DecimalComplex DecimalComplex::from(const ComplexInterval& z, int digits)
{
    return {DecimalInterval::from(z.re, digits), DecimalInterval::from(z.im, digits)};
}

int FieldCard::real_embedding_count() const
{
    return static_cast<int>(std::count_if(embeddings.begin(), embeddings.end(),
                                          [](const EmbeddingData& e) { return e.real; }));
}

namespace {

std::string join_problems(const std::vector<std::string>& problems)
{
    std::ostringstream out;
    out << "invalid field card:";
    for (const auto& p : problems)
        out << "\n  - " << p;
    return out.str();
}

void require_dimension(const RingElement& x, std::size_t n)
{
    if (x.dimension() != n)
        throw FieldError("ring element has dimension " + std::to_string(x.dimension())
                         + ", expected " + std::to_string(n));
}

}  // namespace

CardValidationError::CardValidationError(std::vector<std::string> problems)
    : FieldError(join_problems(problems)), problems_(std::move(problems))
{
}

std::string default_delta(int degree)
{
    if (degree <= 1)
        return "0.69314718055994530941";
    // 2 / (log 3n)^3, rounded down to 20 digits.
    const mpfr_prec prec = 128;
    Interval three_n(static_cast<long>(3 * degree), prec);
    Interval value = Interval(2L, prec) / pow(log(three_n), 3);
    BigFloat lo = value.lo();
    mpfr_exp_t exponent = 0;
    char* raw = mpfr_get_str(nullptr, &exponent, 10, 20, lo.get(), MPFR_RNDD);
    std::string digits(raw);
    mpfr_free_str(raw);
    // value < 1, so exponent <= 0.
    return "0." + std::string(static_cast<std::size_t>(-exponent), '0') + digits;
}

// Ring arithmetic

RingElement ring_zero(const FieldCard& card)
{
    return RingElement(IntVector(static_cast<std::size_t>(card.degree), 0));
}

RingElement ring_one(const FieldCard& card)
{
    return ring_integer(card, 1);
}

RingElement ring_integer(const FieldCard& card, const mpz_class& value)
{
    RingElement r = ring_zero(card);
    r.coords[0] = value;
    return r;
}

RingElement ring_add(const RingElement& x, const RingElement& y)
{
    require_dimension(y, x.dimension());
    RingElement r = x;
    for (std::size_t i = 0; i < r.coords.size(); ++i)
        r.coords[i] += y.coords[i];
    return r;
}

RingElement ring_sub(const RingElement& x, const RingElement& y)
{
    require_dimension(y, x.dimension());
    RingElement r = x;
    for (std::size_t i = 0; i < r.coords.size(); ++i)
        r.coords[i] -= y.coords[i];
    return r;
}

RingElement ring_neg(const RingElement& x)
{
    RingElement r = x;
    for (auto& c : r.coords)
        c = -c;
    return r;
}

RingElement ring_scale(const RingElement& x, const mpz_class& factor)
{
    RingElement r = x;
    for (auto& c : r.coords)
        c *= factor;
    return r;
}

RingElement ring_mul(const RingElement& x, const RingElement& y, const FieldCard& card)
{
    const auto n = static_cast<std::size_t>(card.degree);
    require_dimension(x, n);
    require_dimension(y, n);
    RingElement r = ring_zero(card);
    mpz_class t;
    for (std::size_t i = 0; i < n; ++i) {
        if (x.coords[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y.coords[j] == 0)
                continue;
            t = x.coords[i] * y.coords[j];
            const IntVector& table = card.multiplication[i][j];
            for (std::size_t k = 0; k < n; ++k) {
                if (table[k] != 0)
                    r.coords[k] += t * table[k];
            }
        }
    }
    return r;
}

RingElement ring_pow(const RingElement& x, unsigned long exponent, const FieldCard& card)
{
    RingElement result = ring_one(card);
    RingElement base = x;
    while (exponent > 0) {
        if (exponent & 1UL)
            result = ring_mul(result, base, card);
        exponent >>= 1;
        if (exponent > 0)
            base = ring_mul(base, base, card);
    }
    return result;
}

RingElement galois_apply(int sigma, const RingElement& x, const FieldCard& card)
{
    if (sigma < 0 || sigma >= static_cast<int>(card.galois.size()))
        throw FieldError("Galois index " + std::to_string(sigma) + " out of range");
    const auto n = static_cast<std::size_t>(card.degree);
    require_dimension(x, n);
    const IntMatrix& g = card.galois[static_cast<std::size_t>(sigma)];
    RingElement r = ring_zero(card);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            r.coords[i] += g[i][j] * x.coords[j];
    }
    return r;
}

IntMatrix multiplication_matrix(const RingElement& x, const FieldCard& card)
{
    const auto n = static_cast<std::size_t>(card.degree);
    require_dimension(x, n);
    IntMatrix m(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x.coords[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            const IntVector& table = card.multiplication[i][j];
            for (std::size_t k = 0; k < n; ++k)
                m[k][j] += x.coords[i] * table[k];
        }
    }
    return m;
}

mpz_class determinant(IntMatrix m)
{
    // Fraction-free Bareiss elimination.
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    int sign = 1;
    mpz_class previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), previous.get_mpz_t());
            }
        }
        previous = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

mpz_class norm(const RingElement& x, const FieldCard& card)
{
    return determinant(multiplication_matrix(x, card));
}

mpz_class trace(const RingElement& x, const FieldCard& card)
{
    const IntMatrix m = multiplication_matrix(x, card);
    mpz_class t = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        t += m[i][i];
    return t;
}

std::optional<mpz_class> as_rational_integer(const RingElement& x)
{
    for (std::size_t i = 1; i < x.coords.size(); ++i) {
        if (x.coords[i] != 0)
            return std::nullopt;
    }
    return x.coords.empty() ? mpz_class(0) : x.coords[0];
}

RingElement group_ring_power(const RingElement& x, const ExponentVector& eps, const FieldCard& card)
{
    if (eps.exponents.size() != card.galois.size())
        throw FieldError("exponent vector has " + std::to_string(eps.exponents.size())
                         + " entries for a Galois group of order " + std::to_string(card.galois.size()));
    RingElement result = ring_one(card);
    for (std::size_t s = 0; s < eps.exponents.size(); ++s) {
        if (eps.exponents[s] == 0)
            continue;
        result = ring_mul(result, ring_pow(galois_apply(static_cast<int>(s), x, card), eps.exponents[s], card),
                          card);
    }
    return result;
}

// Embeddings

namespace {

ComplexInterval horner(const IntVector& coeffs, const ComplexInterval& z)
{
    const mpfr_prec prec = z.precision();
    ComplexInterval acc(Interval(0L, prec), Interval(0L, prec));
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc *= z;
        acc.re += Interval(*it, prec);
    }
    return acc;
}

IntVector derivative(const IntVector& coeffs)
{
    IntVector d;
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        d.push_back(coeffs[i] * static_cast<unsigned long>(i));
    return d;
}

// Certified discs around each root of the defining polynomial. For a monic
// squarefree f of degree n and any z, some root lies within n|f(z)/f'(z)| of z;
// pairwise-disjoint discs therefore hold exactly one root each.
std::vector<ComplexInterval> refine_roots(const PowerBasis& pb, const std::vector<EmbeddingData>& embeddings,
                                          mpfr_prec prec)
{
    const std::size_t n = pb.polynomial.size() - 1;
    const IntVector fprime = derivative(pb.polynomial);
    const mpfr_prec work = prec + 32;
    std::vector<ComplexInterval> centers;
    std::vector<Interval> radii;
    for (std::size_t e = 0; e < pb.roots.size(); ++e) {
        const bool real = embeddings[e].real;
        ComplexInterval z = pb.roots[e].at(work).midpoint();
        if (real)
            z.im = Interval(0L, work);
        BigFloat threshold(work);
        mpfr_set_ui_2exp(threshold.get(), 1, -static_cast<long>(prec) - 8, MPFR_RNDN);
        for (int iter = 0; iter < 200; ++iter) {
            ComplexInterval f = horner(pb.polynomial, z);
            ComplexInterval df = horner(fprime, z);
            if (abs2(df).contains_zero())
                throw FieldError("root refinement hit a critical point of the defining polynomial");
            ComplexInterval step = (f / df).midpoint();
            if (real)
                step.im = Interval(0L, work);
            z = (z - step).midpoint();
            const Interval size = abs(step);
            if (mpfr_lessequal_p(size.hi().get(), threshold.get()))
                break;
        }
        const ComplexInterval f = horner(pb.polynomial, z);
        const ComplexInterval df = horner(fprime, z);
        Interval r = Interval(static_cast<long>(n), work) * abs(f) / abs(df);
        centers.push_back(z);
        radii.push_back(r);
    }
    for (std::size_t a = 0; a < centers.size(); ++a) {
        for (std::size_t b = a + 1; b < centers.size(); ++b) {
            const Interval gap = abs(centers[a] - centers[b]);
            if (!certainly_lt(radii[a] + radii[b], gap))
                throw FieldError("root discs of the defining polynomial are not separated");
        }
    }
    std::vector<ComplexInterval> roots;
    for (std::size_t e = 0; e < centers.size(); ++e) {
        const BigFloat rad = radii[e].hi();
        ComplexInterval root(centers[e].re.widened(rad), centers[e].im.widened(rad));
        if (embeddings[e].real)
            root.im = Interval(0L, work);
        roots.push_back(root);
    }
    return roots;
}

}  // namespace

EmbeddingTable::EmbeddingTable(const FieldCard& card, mpfr_prec prec) : prec_(prec)
{
    const auto n = static_cast<std::size_t>(card.degree);
    if (card.power_basis) {
        const PowerBasis& pb = *card.power_basis;
        const std::vector<ComplexInterval> roots = refine_roots(pb, card.embeddings, prec);
        const Interval denominator(pb.denominator, prec + 32);
        for (std::size_t e = 0; e < roots.size(); ++e) {
            std::vector<ComplexInterval> powers;
            ComplexInterval p(Interval(1L, prec + 32), Interval(0L, prec + 32));
            for (std::size_t j = 0; j < n; ++j) {
                powers.push_back(p);
                p *= roots[e];
            }
            std::vector<ComplexInterval> row;
            for (std::size_t i = 0; i < n; ++i) {
                ComplexInterval v(Interval(0L, prec + 32), Interval(0L, prec + 32));
                for (std::size_t j = 0; j < n; ++j) {
                    if (pb.basis[i][j] == 0)
                        continue;
                    ComplexInterval term = powers[j];
                    term *= Interval(pb.basis[i][j], prec + 32);
                    v += term;
                }
                v.re = v.re / denominator;
                v.im = v.im / denominator;
                if (card.embeddings[e].real)
                    v.im = Interval(0L, prec + 32);
                row.push_back(v);
            }
            values_.push_back(std::move(row));
            real_.push_back(card.embeddings[e].real);
        }
        return;
    }
    for (const auto& emb : card.embeddings) {
        std::vector<ComplexInterval> row;
        for (const auto& v : emb.basis_values) {
            ComplexInterval z = v.at(prec);
            if (emb.real)
                z.im = Interval(0L, prec);
            row.push_back(z);
        }
        values_.push_back(std::move(row));
        real_.push_back(emb.real);
    }
}

ComplexInterval EmbeddingTable::embed(std::size_t e, const RingElement& x) const
{
    const auto& row = values_.at(e);
    require_dimension(x, row.size());
    const mpfr_prec prec = row.empty() ? prec_ : row.front().precision();
    ComplexInterval acc(Interval(0L, prec), Interval(0L, prec));
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (x.coords[i] == 0)
            continue;
        ComplexInterval term = row[i];
        term *= Interval(x.coords[i], prec);
        acc += term;
    }
    return acc;
}

Interval EmbeddingTable::abs_at(std::size_t e, const RingElement& x) const
{
    const ComplexInterval z = embed(e, x);
    if (real_[e])
        return abs(z.re);
    return abs(z);
}

int complex_conjugation_index(const FieldCard& card, std::size_t embedding)
{
    if (card.embeddings.at(embedding).real)
        return 0;
    const EmbeddingTable table(card, 256);
    const auto n = static_cast<std::size_t>(card.degree);
    int found = -1;
    for (std::size_t s = 0; s < card.galois.size(); ++s) {
        bool match = true;
        for (std::size_t i = 0; i < n && match; ++i) {
            RingElement basis = ring_zero(card);
            basis.coords[i] = 1;
            const ComplexInterval image = table.embed(embedding, galois_apply(static_cast<int>(s), basis, card));
            const ComplexInterval target = table.basis_values(embedding)[i].conj();
            match = image.re.overlaps(target.re) && image.im.overlaps(target.im);
        }
        if (match) {
            if (found >= 0)
                throw FieldError("complex conjugation is not uniquely determined by the Galois table");
            found = static_cast<int>(s);
        }
    }
    if (found < 0)
        throw FieldError("no Galois element acts as complex conjugation at the embedding");
    return found;
}

HeightResult height(const RingElement& x, const FieldCard& card, const PrecisionPolicy& policy)
{
    if (x.is_zero())
        throw FieldError("height of zero is undefined here");
    int straddling_place = -1;
    for (mpfr_prec prec = policy.initial;; prec *= 2) {
        const EmbeddingTable table(card, prec);
        Interval log_sum(0L, prec);
        straddling_place = -1;
        for (std::size_t e = 0; e < table.size(); ++e) {
            const Interval a = table.abs_at(e, x);
            if (a.contains(mpz_class(1)) && !certainly_le(a, Interval(1L, prec)))
                straddling_place = static_cast<int>(e);
            log_sum += log(max_one(a));
        }
        const Interval log_h = log_sum / Interval(static_cast<long>(card.degree), prec);
        Interval h = exp(log_h);
        BigFloat scale = h.magnitude();
        if (mpfr_cmp_ui(scale.get(), 1) < 0)
            mpfr_set_ui(scale.get(), 1, MPFR_RNDU);
        BigFloat tol(prec);
        mpfr_mul_d(tol.get(), scale.get(), policy.rel_tolerance, MPFR_RNDD);
        if (mpfr_lessequal_p(h.width().get(), tol.get()))
            return {h, log_h, prec};
        if (prec * 2 > policy.cap) {
            if (straddling_place >= 0)
                throw HeightIndeterminate("height: max(1, ||x||_v) undecidable at place "
                                              + std::to_string(straddling_place) + " within the precision cap",
                                          straddling_place);
            throw HeightIndeterminate("height: tolerance not met within the precision cap", -1);
        }
    }
}

// Validation

void validate_card(const FieldCard& card)
{
    std::vector<std::string> problems;
    const int n = card.degree;
    if (n < 1) {
        throw CardValidationError({"degree must be positive"});
    }
    const auto un = static_cast<std::size_t>(n);
    if (card.discriminant == 0)
        problems.push_back("discriminant must be nonzero");
    if (card.class_number < 1)
        problems.push_back("class_number must be positive");
    if (card.basis_names.size() != un)
        problems.push_back("basis has " + std::to_string(card.basis_names.size()) + " names for degree "
                           + std::to_string(n));

    bool table_ok = card.multiplication.size() == un;
    for (const auto& row : card.multiplication) {
        table_ok = table_ok && row.size() == un;
        for (const auto& v : row)
            table_ok = table_ok && v.size() == un;
    }
    if (!table_ok) {
        problems.push_back("multiplication table must be n x n x n");
        throw CardValidationError(problems);
    }
    for (std::size_t j = 0; j < un; ++j) {
        for (std::size_t k = 0; k < un; ++k) {
            if (card.multiplication[0][j][k] != (j == k ? 1 : 0)) {
                problems.push_back("basis element 0 must be 1 (multiplication row 0 is not the identity)");
                j = un;
                break;
            }
        }
    }
    // Commutativity and discriminant = det(trace form).
    for (std::size_t i = 0; i < un; ++i) {
        for (std::size_t j = 0; j < un; ++j) {
            if (card.multiplication[i][j] != card.multiplication[j][i]) {
                problems.push_back("multiplication table is not commutative");
                i = un;
                break;
            }
        }
    }
    if (problems.empty()) {
        IntMatrix trace_form(un, IntVector(un, 0));
        for (std::size_t i = 0; i < un; ++i) {
            for (std::size_t j = 0; j < un; ++j)
                trace_form[i][j] = trace(RingElement(card.multiplication[i][j]), card);
        }
        const mpz_class disc = determinant(trace_form);
        if (disc != card.discriminant)
            problems.push_back("discriminant " + card.discriminant.get_str() + " does not match det(trace form) = "
                               + disc.get_str());
    }

    // Ramified primes are the prime divisors of d_k.
    if (card.discriminant != 0) {
        FactorBudget budget;
        budget.units = 20'000'000;
        const FactorizationResult f = factor_bounded(card.discriminant, budget);
        if (!f.complete()) {
            problems.push_back("could not factor the discriminant to check ramified primes");
        } else {
            std::vector<mpz_class> expected;
            for (const auto& pp : f.known_factors)
                expected.push_back(pp.prime);
            std::vector<mpz_class> given = card.ramified_primes;
            std::sort(given.begin(), given.end());
            if (given != expected)
                problems.push_back("ramified_primes must equal the prime divisors of the discriminant");
        }
    }

    // Galois group: ring automorphisms closed under composition, identity first.
    if (card.galois.size() != un) {
        problems.push_back("Galois group must list exactly n_k = " + std::to_string(n) + " elements");
    } else {
        bool shapes = true;
        for (const auto& g : card.galois) {
            shapes = shapes && g.size() == un;
            for (const auto& row : g)
                shapes = shapes && row.size() == un;
        }
        if (!shapes) {
            problems.push_back("Galois matrices must be n x n");
        } else if (problems.empty()) {
            IntMatrix identity(un, IntVector(un, 0));
            for (std::size_t i = 0; i < un; ++i)
                identity[i][i] = 1;
            if (card.galois[0] != identity)
                problems.push_back("Galois element 0 must be the identity");
            auto compose = [&](const IntMatrix& a, const IntMatrix& b) {
                IntMatrix c(un, IntVector(un, 0));
                for (std::size_t i = 0; i < un; ++i)
                    for (std::size_t j = 0; j < un; ++j)
                        for (std::size_t k = 0; k < un; ++k)
                            c[i][j] += a[i][k] * b[k][j];
                return c;
            };
            std::set<IntMatrix> elements(card.galois.begin(), card.galois.end());
            if (elements.size() != un)
                problems.push_back("Galois matrices are not distinct");
            const bool closed = std::all_of(card.galois.begin(), card.galois.end(), [&](const IntMatrix& a) {
                return std::all_of(card.galois.begin(), card.galois.end(),
                                   [&](const IntMatrix& b) { return elements.count(compose(a, b)) > 0; });
            });
            if (!closed)
                problems.push_back("Galois matrices are not closed under composition");
            for (std::size_t s = 0; s < un; ++s) {
                bool automorphism = true;
                for (std::size_t i = 0; i < un && automorphism; ++i) {
                    for (std::size_t j = 0; j < un && automorphism; ++j) {
                        RingElement wi = ring_zero(card);
                        RingElement wj = ring_zero(card);
                        wi.coords[i] = 1;
                        wj.coords[j] = 1;
                        const RingElement lhs =
                            galois_apply(static_cast<int>(s), RingElement(card.multiplication[i][j]), card);
                        const RingElement rhs = ring_mul(galois_apply(static_cast<int>(s), wi, card),
                                                         galois_apply(static_cast<int>(s), wj, card), card);
                        automorphism = lhs == rhs;
                    }
                }
                if (!automorphism)
                    problems.push_back("Galois element " + std::to_string(s) + " is not a ring automorphism");
            }
        }
    }

    // Embeddings and unit rank.
    if (card.embeddings.size() != un) {
        problems.push_back("expected " + std::to_string(n) + " embeddings, found "
                           + std::to_string(card.embeddings.size()));
    } else {
        for (const auto& e : card.embeddings) {
            if (e.basis_values.size() != un)
                problems.push_back("each embedding must list a value for every basis element");
        }
        const int r1 = card.real_embedding_count();
        const int complex_count = n - r1;
        if (complex_count % 2 != 0)
            problems.push_back("complex embeddings must come in conjugate pairs");
        else if (card.unit_rank != r1 + complex_count / 2 - 1)
            problems.push_back("unit_rank " + std::to_string(card.unit_rank)
                               + " disagrees with r1 + r2 - 1 = " + std::to_string(r1 + complex_count / 2 - 1));
        if (card.distinguished_embedding < 0 || card.distinguished_embedding >= n)
            problems.push_back("distinguished_embedding out of range");
    }
    if (card.power_basis) {
        const PowerBasis& pb = *card.power_basis;
        if (pb.polynomial.size() != un + 1 || pb.polynomial.back() != 1)
            problems.push_back("power_basis polynomial must be monic of degree n_k");
        if (pb.basis.size() != un || pb.roots.size() != un || pb.denominator <= 0)
            problems.push_back("power_basis must give n_k basis rows, n_k roots and a positive denominator");
    }

    // Units.
    if (card.fundamental_units.size() != static_cast<std::size_t>(std::max(card.unit_rank, 0)))
        problems.push_back("expected " + std::to_string(card.unit_rank) + " fundamental units");
    for (const auto& u : card.fundamental_units) {
        if (u.dimension() != un) {
            problems.push_back("fundamental unit has the wrong dimension");
            continue;
        }
        if (abs(norm(u, card)) != 1)
            problems.push_back("fundamental unit with |Norm| != 1");
    }
    for (const auto& sub : card.quadratic_subfields) {
        if (sub.sqrt.dimension() != un
            || ring_mul(sub.sqrt, sub.sqrt, card) != ring_integer(card, sub.radicand))
            problems.push_back("quadratic subfield entry for " + sub.radicand.get_str()
                               + " does not square to its radicand");
    }

    // Numeric checks on archimedean data.
    if (problems.empty()) {
        try {
            const Interval reg = card.regulator.at(128);
            if (card.unit_rank > 0 && !reg.is_positive())
                problems.push_back("regulator must be positive");
            const EmbeddingTable table(card, 128);
            for (std::size_t e = 0; e < un; ++e) {
                for (std::size_t i = 0; i < un; ++i) {
                    const ComplexInterval stored = card.embeddings[e].basis_values[i].at(128);
                    const ComplexInterval v = table.basis_values(e)[i];
                    if (!stored.re.overlaps(v.re) || !stored.im.overlaps(v.im))
                        problems.push_back("embedding " + std::to_string(e) + " value of basis element "
                                           + std::to_string(i) + " disagrees with the power basis");
                }
            }
            Interval(0L, 64) + Interval::from_decimal(card.delta_k, "0", 64);
        } catch (const std::exception& ex) {
            problems.push_back(std::string("archimedean data: ") + ex.what());
        }
    }

    if (!problems.empty())
        throw CardValidationError(problems);
}

}  // namespace exbound
