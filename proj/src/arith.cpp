#include "exbound/arith.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

namespace exbound {

int kronecker(const mpz_class& a, const mpz_class& n)
{
    if (n == 0)
        throw std::invalid_argument("kronecker: n must be nonzero");
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

mpz_class deterministic_primality_bound()
{
    static const mpz_class bound("3317044064679887385961981");
    return bound;
}

namespace {

constexpr std::array<unsigned, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool strong_probable_prime(const mpz_class& n, const mpz_class& d, unsigned s, unsigned base)
{
    const mpz_class n_minus_1 = n - 1;
    mpz_class x;
    mpz_class b = base;
    mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1)
        return true;
    for (unsigned r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n_minus_1)
            return true;
        if (x == 1)
            return false;
    }
    return false;
}

bool deterministic_miller_rabin(const mpz_class& n)
{
    for (unsigned p : kWitnesses) {
        if (n == p)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return false;
    }
    mpz_class d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    return std::all_of(kWitnesses.begin(), kWitnesses.end(),
                       [&](unsigned base) { return strong_probable_prime(n, d, s, base); });
}

}  // namespace

PrimalityVerdict primality(const mpz_class& n)
{
    if (n < 2)
        return {false, true};
    if (n < deterministic_primality_bound())
        return {deterministic_miller_rabin(n), true};
    const int verdict = mpz_probab_prime_p(n.get_mpz_t(), 64);
    // 0: composite (always certain), 2: certainly prime.
    return {verdict != 0, verdict != 1};
}

bool is_prime(const mpz_class& n)
{
    return primality(n).is_prime;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit)
{
    std::vector<std::uint32_t> primes;
    if (limit < 2)
        return primes;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    return primes;
}

namespace {

const std::vector<std::uint32_t>& cached_primes(std::uint32_t limit)
{
    static std::mutex mutex;
    static std::map<std::uint32_t, std::vector<std::uint32_t>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(limit);
    if (it == cache.end())
        it = cache.emplace(limit, primes_up_to(limit)).first;
    return it->second;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0 when the
// budget runs out.
mpz_class brent_rho(const mpz_class& n, std::uint64_t& units)
{
    for (unsigned long c = 1; units > 0; ++c) {
        mpz_class y = 2;
        mpz_class x;
        mpz_class ys;
        mpz_class q = 1;
        mpz_class g = 1;
        const std::uint64_t batch = 128;
        std::uint64_t r = 1;
        auto step = [&](mpz_class& v) {
            v = (v * v + c) % n;
        };
        while (g == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) {
                if (units == 0)
                    return 0;
                --units;
                step(y);
            }
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                const std::uint64_t m = std::min(batch, r - k);
                for (std::uint64_t i = 0; i < m; ++i) {
                    if (units == 0)
                        return 0;
                    --units;
                    step(y);
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // Batched product overshot: backtrack one step at a time.
            do {
                step(ys);
                mpz_class diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
    return 0;
}

void add_factor(std::map<mpz_class, unsigned>& found, const mpz_class& p, unsigned multiplicity = 1)
{
    found[p] += multiplicity;
}

}  // namespace

FactorizationResult factor_bounded(const mpz_class& n, const FactorBudget& budget)
{
    if (n == 0)
        throw std::invalid_argument("factor_bounded: n must be nonzero");
    FactorizationResult result;
    mpz_class rest = abs(n);
    std::map<mpz_class, unsigned> found;
    std::uint64_t units = budget.units;

    // Trial division pays off only up to about the fourth root of the input;
    // beyond that rho finds the remaining factors faster.
    mpz_class fourth_root;
    mpz_root(fourth_root.get_mpz_t(), rest.get_mpz_t(), 4);
    const std::uint32_t trial_limit = fourth_root < budget.trial_limit
        ? std::max<std::uint32_t>(10'000, static_cast<std::uint32_t>(fourth_root.get_ui()))
        : budget.trial_limit;
    const auto& primes = cached_primes(budget.trial_limit);
    for (std::uint32_t p : primes) {
        if (rest == 1 || units == 0 || p > trial_limit)
            break;
        if (mpz_class(p) * p > rest)
            break;
        --units;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
                ++e;
            }
            add_factor(found, p, e);
        }
    }

    // Split the remainder into pieces; pieces are prime (proven), probable
    // prime, or composite that the budget could not split.
    std::vector<mpz_class> pending;
    std::vector<mpz_class> stuck;
    if (rest > 1)
        pending.push_back(rest);
    while (!pending.empty()) {
        mpz_class m = pending.back();
        pending.pop_back();
        const PrimalityVerdict v = primality(m);
        if (v.is_prime && v.proven) {
            add_factor(found, m);
            continue;
        }
        if (v.is_prime) {
            stuck.push_back(m);
            continue;
        }
        mpz_class root;
        if (mpz_perfect_power_p(m.get_mpz_t())) {
            for (unsigned long k = 2;; ++k) {
                if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0) {
                    for (unsigned long i = 0; i < k; ++i)
                        pending.push_back(root);
                    break;
                }
            }
            continue;
        }
        mpz_class f = brent_rho(m, units);
        if (f == 0) {
            stuck.push_back(m);
            continue;
        }
        pending.push_back(f);
        pending.push_back(m / f);
    }

    for (auto& s : stuck) {
        for (auto& [p, e] : found) {
            while (mpz_divisible_p(s.get_mpz_t(), p.get_mpz_t())) {
                mpz_divexact(s.get_mpz_t(), s.get_mpz_t(), p.get_mpz_t());
                ++e;
            }
        }
    }
    std::erase_if(stuck, [](const mpz_class& s) { return s == 1; });

    for (const auto& [p, e] : found)
        result.known_factors.push_back({p, e});
    result.cofactor = 1;
    for (const auto& s : stuck)
        result.cofactor *= s;
    result.cofactor_is_probable_prime = stuck.size() == 1 && primality(stuck.front()).is_prime;
    result.units_spent = budget.units - units;
    return result;
}

bool divides_query(const mpz_class& m, const mpz_class& p)
{
    if (p == 0)
        throw std::invalid_argument("divides_query: p must be nonzero");
    return mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()) != 0;
}

std::optional<mpz_class> sqrt_mod_prime(const mpz_class& a_in, const mpz_class& p)
{
    mpz_class a = a_in % p;
    if (a < 0)
        a += p;
    if (a == 0)
        return mpz_class(0);
    if (p == 2)
        return a;
    if (kronecker(a, p) != 1)
        return std::nullopt;
    // Tonelli-Shanks.
    mpz_class q = p - 1;
    unsigned s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q >>= 1;
        ++s;
    }
    mpz_class z = 2;
    while (kronecker(z, p) != -1)
        ++z;
    mpz_class c;
    mpz_class t;
    mpz_class r;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_class e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    unsigned m = s;
    while (t != 1) {
        unsigned i = 0;
        mpz_class tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        mpz_class b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j)
            b = b * b % p;
        r = r * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return r;
}

std::pair<mpz_class, mpz_class> squarefree_decomposition(const mpz_class& n)
{
    if (n == 0)
        throw std::invalid_argument("squarefree_decomposition: n must be nonzero");
    FactorBudget budget;
    budget.units = 50'000'000;
    const FactorizationResult f = factor_bounded(n, budget);
    if (!f.complete())
        throw std::runtime_error("squarefree_decomposition: could not factor " + n.get_str());
    mpz_class s = sgn(n);
    mpz_class root = 1;
    for (const auto& pp : f.known_factors) {
        for (unsigned i = 0; i < pp.multiplicity / 2; ++i)
            root *= pp.prime;
        if (pp.multiplicity % 2 == 1)
            s *= pp.prime;
    }
    return {s, root};
}

bool is_squarefree(const mpz_class& n)
{
    return abs(squarefree_decomposition(n).second) == 1;
}

}  // namespace exbound
