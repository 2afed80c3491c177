#include "exbound/exceptional.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace exbound {

namespace {

mpz_class pow_z(const mpz_class& base, unsigned long e)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

mpz_class abs_z(const mpz_class& x)
{
    return x < 0 ? mpz_class(-x) : x;
}

unsigned long exponent_M(const FieldCard& card)
{
    return 24 * card.class_number.get_ui();
}

// x^{-1} for a unit x, by solving x * y = 1 over Q on the integral basis.
RingElement unit_inverse(const RingElement& x, const FieldCard& card)
{
    const IntMatrix m = multiplication_matrix(x, card);
    const std::size_t n = m.size();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m[i][j];
        a[i][n] = i == 0 ? 1 : 0;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            throw FieldError("unit_inverse: element is not invertible");
        std::swap(a[pivot], a[col]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0)
                continue;
            const mpq_class f = a[i][col] / a[col][col];
            for (std::size_t j = col; j <= n; ++j)
                a[i][j] -= f * a[col][j];
        }
    }
    IntVector coords(n);
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class v = a[i][n] / a[i][i];
        v.canonicalize();
        if (v.get_den() != 1)
            throw FieldError("unit_inverse: element is not a unit of O_k");
        coords[i] = v.get_num();
    }
    return RingElement(std::move(coords));
}

RingElement signed_power(const RingElement& u, const RingElement& u_inv, long k, const FieldCard& card)
{
    if (k >= 0)
        return ring_pow(u, static_cast<unsigned long>(k), card);
    return ring_pow(u_inv, static_cast<unsigned long>(-k), card);
}

Interval log_abs(const mpz_class& x, mpfr_prec prec)
{
    return log(Interval(abs_z(x), prec));
}

Interval ln10(mpfr_prec prec)
{
    return log(Interval(10L, prec));
}

}  // namespace

// Constants

Interval c1_constant(const FieldCard& card, const std::string& delta, mpfr_prec prec)
{
    const long r = card.unit_rank;
    if (r == 0)
        return Interval(0L, prec);
    if (r == 1)
        return Interval(mpq_class(1, 2), prec);
    const Interval d = Interval::from_decimal(delta, "0", prec);
    if (!d.is_positive())
        throw FieldError("delta_k must be positive");
    // r^{1+r} / (2 delta^{r-1})
    const Interval num(pow_z(mpz_class(r), static_cast<unsigned long>(r + 1)), prec);
    return num / (Interval(2L, prec) * pow(d, static_cast<unsigned long>(r - 1)));
}

Interval log10_C_at(const FieldCard& card, const BoundConstants& c, const Interval& log10_a)
{
    const mpfr_prec prec = c.precision;
    const long n = card.degree;
    const long h = card.class_number.get_si();
    const Interval l10 = ln10(prec);
    // C = (a^{24h} C2 + a^{12h})^{2n} = (a^{24h} C2)^{2n} (1 + a^{-12h}/C2)^{2n}
    const Interval big = Interval(24 * h, prec) * log10_a + c.log_C2 / l10;
    const Interval t = exp(-(Interval(12 * h, prec) * log10_a * l10) - c.log_C2);
    const Interval tail = log(Interval(1L, prec) + t) / l10;
    return Interval(2 * n, prec) * (big + tail);
}

mpz_class exact_C(const FieldCard& card, const mpz_class& a)
{
    const unsigned long h = card.class_number.get_ui();
    const mpz_class inner = pow_z(a, 24 * h) + pow_z(a, 12 * h);
    return pow_z(inner, 2 * static_cast<unsigned long>(card.degree));
}

BoundConstants bound_constants(const FieldCard& card, const mpq_class& A1, const std::string& delta,
                               mpfr_prec prec)
{
    if (A1 <= 1)
        throw std::invalid_argument("A1 must exceed 1");
    BoundConstants c;
    c.A1 = A1;
    c.delta = delta;
    c.precision = prec;
    c.C1 = c1_constant(card, delta, prec);
    const Interval R = card.regulator.at(prec);
    if (card.unit_rank == 0) {
        c.log_C2 = Interval(0L, prec);
        c.C2_is_one = true;
    } else {
        c.log_C2 = Interval(24L * card.degree, prec) * c.C1 * R;
    }
    c.C2 = exp(c.log_C2);
    const Interval l10 = ln10(prec);
    const long h = card.class_number.get_si();
    const Interval log_a = log(Interval(2L, prec)) + Interval(A1, prec) * Interval(h, prec) * log_abs(card.discriminant, prec);
    c.log10_a = log_a / l10;
    c.log10_C = log10_C_at(card, c, c.log10_a);

    // Leading digits of C(k, a): 10^{frac(log10 C)}.
    BigFloat fl(prec);
    mpfr_floor(fl.get(), c.log10_C.midpoint().lo().get());
    const Interval frac = c.log10_C - Interval::hull(fl, fl);
    const Interval mantissa = exp(frac * l10);
    c.leading_digits = mantissa.to_decimal(15).first;
    return c;
}

// Prop 7.3

Prop73Check check_prop73(const FieldCard& card, const RingElement& alpha, const std::string& delta,
                         const PrecisionPolicy& policy)
{
    const mpz_class N = norm(alpha, card);
    if (N == 0)
        throw FieldError("check_prop73: alpha is zero");
    const long n = card.degree;
    Prop73Check out;
    if (card.unit_rank == 0) {
        const mpfr_prec prec = policy.initial;
        out.height = exp(log_abs(N, prec) / Interval(n, prec));
        out.bound = out.height;
        out.exact = true;
        out.holds = true;
        return out;
    }
    PrecisionPolicy p = policy;
    for (int attempt = 0; attempt < 3; ++attempt) {
        const HeightResult h = height(alpha, card, p);
        const mpfr_prec prec = h.precision;
        const Interval log_bound = log_abs(N, prec) / Interval(n, prec)
                                   + c1_constant(card, delta, prec) * card.regulator.at(prec);
        out.height = h.value;
        out.bound = exp(log_bound);
        if (certainly_le(h.log_value, log_bound)) {
            out.holds = true;
            return out;
        }
        if (certainly_lt(log_bound, h.log_value))
            return out;
        p.initial = std::min(prec * 2, p.cap);
        p.rel_tolerance *= 1e-20;
    }
    return out;
}

RingElement reduce_generator(const FieldCard& card, const RingElement& gamma, const std::string& delta,
                             const PrecisionPolicy& policy)
{
    if (gamma.is_zero())
        throw FieldError("reduce_generator: gamma is zero");
    const auto r = static_cast<std::size_t>(card.unit_rank);
    if (r == 0)
        return gamma;
    if (card.fundamental_units.size() != r)
        throw FieldError("reduce_generator: card lists " + std::to_string(card.fundamental_units.size())
                         + " fundamental units for unit rank " + std::to_string(r));

    const EmbeddingTable table(card, 128);
    const std::size_t n = table.size();
    const double log_norm = log_abs(norm(gamma, card), 128).mid_double();
    Eigen::MatrixXd A(n, r);
    Eigen::VectorXd target(n);
    for (std::size_t e = 0; e < n; ++e) {
        target(static_cast<Eigen::Index>(e)) = log(table.abs_at(e, gamma)).mid_double() - log_norm / n;
        for (std::size_t j = 0; j < r; ++j)
            A(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(j)) =
                log(table.abs_at(e, card.fundamental_units[j])).mid_double();
    }
    const Eigen::VectorXd x = A.colPivHouseholderQr().solve(target);

    std::vector<RingElement> inverses;
    for (const auto& u : card.fundamental_units)
        inverses.push_back(unit_inverse(u, card));
    RingElement base = gamma;
    for (std::size_t j = 0; j < r; ++j) {
        const long k = std::lround(x(static_cast<Eigen::Index>(j)));
        base = ring_mul(base, signed_power(card.fundamental_units[j], inverses[j], -k, card), card);
    }

    const auto dist = static_cast<std::size_t>(card.distinguished_embedding);
    const bool real = table.is_real(dist);
    struct Candidate
    {
        RingElement element;
        Interval h;
        double value;
    };
    std::vector<Candidate> candidates;
    std::size_t combos = 1;
    for (std::size_t j = 0; j < r; ++j)
        combos *= 3;
    for (std::size_t code = 0; code < combos; ++code) {
        RingElement c = base;
        std::size_t rest = code;
        for (std::size_t j = 0; j < r; ++j) {
            const long offset = static_cast<long>(rest % 3) - 1;
            rest /= 3;
            if (offset != 0)
                c = ring_mul(c, signed_power(card.fundamental_units[j], inverses[j], offset, card), card);
        }
        if (real && table.embed(dist, c).re.is_negative())
            c = ring_neg(c);
        try {
            const HeightResult h = height(c, card, policy);
            candidates.push_back({c, h.value, table.embed(dist, c).re.mid_double()});
        } catch (const HeightIndeterminate&) {
            // an undecidable candidate cannot be certified; the others still can
        }
    }
    if (candidates.empty())
        throw FieldError("reduce_generator: no candidate height could be certified");

    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i)
        if (mpfr_less_p(candidates[i].h.hi().get(), candidates[best].h.hi().get()))
            best = i;
    std::size_t chosen = best;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (candidates[i].h.overlaps(candidates[best].h) && candidates[i].value > candidates[chosen].value)
            chosen = i;

    RingElement result = candidates[chosen].element;
    const Prop73Check check = check_prop73(card, result, delta, policy);
    if (!check.holds) {
        if (certainly_lt(check.bound, check.height))
            throw FieldError("reduce_generator: height bound violated after the search (inconsistent delta_k?)");
        throw FieldError("reduce_generator: height bound not verifiable within the precision cap");
    }
    return result;
}

// S^new

std::vector<SplitPrimeDatum> select_Snew(const FieldCard& card, const ExceptionalConfig& config)
{
    const std::string delta = config.delta_for(card);
    const unsigned long h = card.class_number.get_ui();
    const mpfr_prec prec = 128;
    const Interval log_bound = log(Interval(2L, prec))
                               + Interval(config.A1, prec) * Interval(card.class_number, prec)
                                     * log_abs(card.discriminant, prec);

    auto finish = [&](SplitPrimeDatum d) {
        const mpz_class N = norm(d.raw_generator, card);
        if (abs_z(N) != pow_z(d.q, h))
            throw SnewError("generator for q = " + d.q.get_str() + " has norm " + N.get_str() + ", expected +-"
                            + pow_z(d.q, h).get_str());
        d.generator = reduce_generator(card, d.raw_generator, delta, config.precision);
        d.generator_norm = norm(d.generator, card);
        d.height_check = check_prop73(card, d.generator, delta, config.precision);
        d.meets_split_prime_bound = certainly_le(log_abs(d.q, prec), log_bound);
        return d;
    };

    std::vector<SplitPrimeDatum> out;
    if (!card.is_quadratic()) {
        if (card.supplied_split_primes.empty())
            throw SnewError("card " + card.label + " supplies no split primes and is not quadratic");
        for (const auto& s : card.supplied_split_primes) {
            SplitPrimeDatum d;
            d.q = s.q;
            d.raw_generator = s.generator;
            out.push_back(finish(std::move(d)));
        }
        return out;
    }

    const ClassGroup group(card);
    std::set<std::size_t> generated{0};
    mpz_class q = 2;
    for (; q <= config.snew_scan_limit; mpz_nextprime(q.get_mpz_t(), q.get_mpz_t())) {
        if (split_type(card, q) != SplitType::split)
            continue;
        const QuadIdeal P = prime_above(card, q);
        const std::size_t cls = group.index_of(P);
        if (!out.empty() && generated.count(cls))
            continue;
        SplitPrimeDatum d;
        d.q = q;
        d.ideal = P;
        d.class_index = cls;
        const auto g = principal_generator(card, ideal_pow(card, P, h));
        if (!g)
            throw SnewError("q^h is not principal for q = " + q.get_str() + "; class number inconsistent");
        d.raw_generator = *g;
        out.push_back(finish(std::move(d)));

        // Close the subgroup under composition with the new class.
        std::vector<std::size_t> frontier(generated.begin(), generated.end());
        while (!frontier.empty()) {
            const std::size_t x = group.compose(frontier.back(), cls);
            frontier.pop_back();
            if (generated.insert(x).second)
                frontier.push_back(x);
        }
        if (generated.size() == group.order())
            return out;
    }
    throw SnewError("split primes up to " + config.snew_scan_limit.get_str() + " generate a subgroup of order "
                    + std::to_string(generated.size()) + " of the class group of order "
                    + std::to_string(group.order()) + " (" + std::to_string(out.size()) + " primes collected)");
}

// E(k)

namespace {

std::string refusal_message(int degree, int cap)
{
    return "E(k) has 5^" + std::to_string(degree) + " = " + pow_z(5, static_cast<unsigned long>(degree)).get_str()
           + " exponent vectors; degree " + std::to_string(degree) + " is above the enumeration cap "
           + std::to_string(cap);
}

}  // namespace

EnumerationRefused::EnumerationRefused(int degree, int cap)
    : std::runtime_error(refusal_message(degree, cap)),
      degree_(degree),
      count_(pow_z(5, static_cast<unsigned long>(degree)).get_str())
{
}

ExponentRange::ExponentRange(int degree) : degree_(degree), size_(1)
{
    if (degree < 1 || degree > 27)
        throw std::invalid_argument("ExponentRange: degree out of range");
    for (int i = 0; i < degree; ++i)
        size_ *= 5;
}

ExponentVector ExponentRange::at(std::uint64_t index) const
{
    ExponentVector v;
    v.exponents.assign(static_cast<std::size_t>(degree_), 0);
    for (int i = degree_ - 1; i >= 0; --i) {
        v.exponents[static_cast<std::size_t>(i)] = kValues[index % 5];
        index /= 5;
    }
    return v;
}

ExponentRange enumerate_E(const FieldCard& card, int cap)
{
    if (card.degree > cap)
        throw EnumerationRefused(card.degree, cap);
    return ExponentRange(card.degree);
}

// M2 entries

namespace {

// Per-Weil-number data that does not depend on eps.
struct WeilData
{
    WeilNumber w;
    std::optional<RingElement> beta_power;  // beta^M when beta lies in k
    mpz_class trace;                        // s_M otherwise
    mpz_class n_power;                      // n^M
};

WeilData weil_data(const FieldCard& card, const WeilNumber& w, unsigned long M)
{
    WeilData d{w, std::nullopt, 0, 0};
    if (const auto b = beta_in_field(w, card)) {
        d.beta_power = ring_pow(*b, M, card);
    } else {
        d.trace = power_trace(w, M);
        d.n_power = pow_z(w.n, M);
    }
    return d;
}

mpz_class m_value(const FieldCard& card, const RingElement& gamma, const WeilData& d)
{
    if (d.beta_power)
        return norm(ring_sub(gamma, *d.beta_power), card);
    // Norm_{k(beta)/k}(gamma - beta^M) = gamma^2 - s_M gamma + n^M
    RingElement x = ring_sub(ring_mul(gamma, gamma, card), ring_scale(gamma, d.trace));
    x = ring_add(x, ring_integer(card, d.n_power));
    return norm(x, card);
}

}  // namespace

std::optional<M2Entry> compute_M2_entry(const FieldCard& card, const SplitPrimeDatum& datum,
                                        const ExponentVector& eps, const WeilNumber& w)
{
    if (w.n != datum.q)
        throw std::invalid_argument("compute_M2_entry: Weil number " + w.to_string() + " is not in FR("
                                    + datum.q.get_str() + ")");
    const RingElement gamma = group_ring_power(datum.generator, eps, card);
    const WeilData d = weil_data(card, w, exponent_M(card));
    mpz_class m = m_value(card, gamma, d);
    if (m == 0)
        return std::nullopt;
    return M2Entry{datum.q, eps, w, d.beta_power.has_value(), std::move(m)};
}

// Pipeline

std::size_t ExceptionalRun::prop74_violations() const
{
    return static_cast<std::size_t>(std::count_if(prop74.begin(), prop74.end(), [](const auto& r) { return !r.holds; }));
}

std::size_t ExceptionalRun::prop75_violations() const
{
    return static_cast<std::size_t>(std::count_if(prop75.begin(), prop75.end(), [](const auto& r) { return !r.holds; }));
}

namespace {

struct DatumContext
{
    const SplitPrimeDatum* datum;
    std::vector<WeilData> weil;
    std::vector<Interval> conj_abs;  // |tau(sigma(alpha))| at the distinguished embedding
    Interval bound74;                // N(q)^{24h} C2
    mpz_class exact_bound74_sq;      // N(q)^{48h}, used when C2 = 1
};

struct TaskResult
{
    Prop74Record record;
    std::vector<M2Entry> entries;
    std::size_t processed = 0;
    std::size_t zeros = 0;
};

}  // namespace

ExceptionalRun run_exceptional(const FieldCard& card, const ExceptionalConfig& config)
{
    ExceptionalRun run;
    const std::string delta = config.delta_for(card);
    run.constants = bound_constants(card, config.A1, delta);
    const ExponentRange range = enumerate_E(card, config.enumeration_cap);
    run.exponent_count = range.size();
    run.snew = select_Snew(card, config);

    const unsigned long M = exponent_M(card);
    const unsigned long h = card.class_number.get_ui();
    const mpfr_prec prec = 256;
    const auto dist = static_cast<std::size_t>(card.distinguished_embedding);
    const EmbeddingTable table(card, prec);
    const int conj = complex_conjugation_index(card, dist);

    std::vector<DatumContext> contexts;
    for (const auto& d : run.snew) {
        DatumContext c{&d, {}, {}, Interval(prec), pow_z(d.q, 48 * h)};
        for (const auto& w : enumerate_FR(d.q))
            c.weil.push_back(weil_data(card, w, M));
        for (std::size_t s = 0; s < card.galois.size(); ++s)
            c.conj_abs.push_back(table.abs_at(dist, galois_apply(static_cast<int>(s), d.generator, card)));
        c.bound74 = Interval(pow_z(d.q, 24 * h), prec) * run.constants.C2;
        run.weil_count += c.weil.size();
        contexts.push_back(std::move(c));
    }

    const std::uint64_t per_datum = range.size();
    const std::uint64_t total = per_datum * contexts.size();
    std::vector<TaskResult> results(total);

    auto work = [&](std::uint64_t task) {
        const std::size_t di = static_cast<std::size_t>(task / per_datum);
        const std::uint64_t ei = task % per_datum;
        const DatumContext& c = contexts[di];
        const ExponentVector eps = range.at(ei);
        const RingElement gamma = group_ring_power(c.datum->generator, eps, card);

        TaskResult& out = results[task];
        Interval value(1L, prec);
        for (std::size_t s = 0; s < eps.exponents.size(); ++s)
            value *= pow(c.conj_abs[s], eps.exponents[s]);
        out.record = {di, ei, value, certainly_le(value, c.bound74), false};
        if (!out.record.holds && run.constants.C2_is_one) {
            // |tau(gamma)|^2 = gamma * conj(gamma), a rational integer here.
            const auto sq = as_rational_integer(ring_mul(gamma, galois_apply(conj, gamma, card), card));
            if (!sq)
                throw FieldError("gamma * conj(gamma) is not rational");
            out.record.holds = *sq <= c.exact_bound74_sq;
            out.record.exact = true;
        }

        // Conjugate Weil numbers outside k share s_M and n, hence m.
        std::optional<std::pair<mpz_class, mpz_class>> last;  // (a, m)
        for (const auto& wd : c.weil) {
            mpz_class m;
            if (!wd.beta_power && last && last->first == wd.w.a)
                m = last->second;
            else
                m = m_value(card, gamma, wd);
            if (!wd.beta_power)
                last = std::make_pair(wd.w.a, m);
            ++out.processed;
            if (m == 0) {
                ++out.zeros;
                continue;
            }
            out.entries.push_back({c.datum->q, eps, wd.w, wd.beta_power.has_value(), std::move(m)});
        }
    };

    const unsigned threads = std::max(1U, config.threads);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::uint64_t t = next++; t < total; t = next++) {
            try {
                work(t);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = total;
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    for (auto& r : results) {
        run.prop74.push_back(std::move(r.record));
        run.processed += r.processed;
        run.zero_excluded += r.zeros;
        for (auto& e : r.entries)
            run.entries.push_back(std::move(e));
    }

    // Prop 7.5: |m| <= C(k, N(q)).
    std::map<mpz_class, mpz_class> exact_bounds;
    for (std::size_t i = 0; i < run.entries.size(); ++i) {
        const M2Entry& e = run.entries[i];
        Prop75Record rec{i, false, false};
        if (run.constants.C2_is_one) {
            auto it = exact_bounds.find(e.q);
            if (it == exact_bounds.end())
                it = exact_bounds.emplace(e.q, exact_C(card, e.q)).first;
            rec.holds = abs_z(e.m) <= it->second;
            rec.exact = true;
        } else {
            const Interval bound = log10_C_at(card, run.constants, log10(Interval(e.q, prec)));
            rec.holds = certainly_le(log10(Interval(abs_z(e.m), prec)), bound);
        }
        run.prop75.push_back(rec);
    }

    std::set<mpz_class> T{2, 3};
    for (const auto& d : run.snew)
        T.insert(d.q);
    run.T.assign(T.begin(), T.end());
    std::set<mpz_class> ram(card.ramified_primes.begin(), card.ramified_primes.end());
    run.Ram.assign(ram.begin(), ram.end());
    return run;
}

// N1

MembershipResult membership(const ExceptionalRun& run, const mpz_class& p)
{
    if (p < 2 || !is_prime(p))
        throw std::invalid_argument("membership: " + p.get_str() + " is not a prime");
    MembershipResult out;
    out.p = p;
    for (std::size_t i = 0; i < run.entries.size(); ++i) {
        if (divides_query(run.entries[i].m, p)) {
            out.sources.push_back("N0");
            out.witness = i;
            break;
        }
    }
    if (std::binary_search(run.T.begin(), run.T.end(), p))
        out.sources.push_back("T");
    if (std::binary_search(run.Ram.begin(), run.Ram.end(), p))
        out.sources.push_back("Ram");
    out.member = !out.sources.empty();
    return out;
}

namespace {

std::vector<mpz_class> distinct_abs_values(const ExceptionalRun& run)
{
    std::set<mpz_class> values;
    for (const auto& e : run.entries)
        values.insert(abs_z(e.m));
    return {values.begin(), values.end()};
}

}  // namespace

PrimeListing list_upto(const ExceptionalRun& run, std::uint32_t limit)
{
    PrimeListing out;
    out.limit = limit;
    const std::vector<std::uint32_t> primes = primes_up_to(limit);
    std::vector<char> hit(primes.size(), 0);
    for (const auto& m : distinct_abs_values(run))
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (!hit[i] && mpz_divisible_ui_p(m.get_mpz_t(), primes[i]))
                hit[i] = 1;
    std::set<mpz_class> n1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (hit[i]) {
            out.N0.emplace_back(primes[i]);
            n1.insert(primes[i]);
        }
    }
    for (const auto* set : {&run.T, &run.Ram})
        for (const auto& p : *set)
            if (p <= limit)
                n1.insert(p);
    out.N1.assign(n1.begin(), n1.end());
    return out;
}

BestEffortFactors best_effort_factor(const ExceptionalRun& run, const FactorBudget& budget)
{
    BestEffortFactors out;
    std::set<mpz_class> found;
    for (const auto& m : distinct_abs_values(run)) {
        FactorizationResult f = factor_bounded(m, budget);
        for (const auto& pp : f.known_factors)
            found.insert(pp.prime);
        if (!f.complete())
            out.unresolved.push_back(f.cofactor);
        out.items.push_back({m, std::move(f)});
    }
    out.N0_found.assign(found.begin(), found.end());
    return out;
}

bool bound_dominates(const ExceptionalRun& run, const std::vector<mpz_class>& primes)
{
    const mpfr_prec prec = run.constants.precision;
    for (const auto& p : primes)
        if (!certainly_le(log10(Interval(p, prec)), run.constants.log10_C))
            return false;
    for (const auto& m : distinct_abs_values(run))
        if (!certainly_le(log10(Interval(m, prec)), run.constants.log10_C))
            return false;
    return true;
}

}  // namespace exbound
