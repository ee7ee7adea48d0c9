#include "repsplit/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "repsplit/errors.hpp"

namespace repsplit {

namespace {

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x], p an odd word-sized prime. Dense, low-to-high.
// ---------------------------------------------------------------------------

using PVec = std::vector<std::uint64_t>;

void pm_trim(PVec& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

int pm_deg(const PVec& a) { return static_cast<int>(a.size()) - 1; }

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // extended euclid
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (t < 0)
        t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

PVec pm_mul(const PVec& a, const PVec& b, std::uint64_t p) {
    if (a.empty() || b.empty())
        return {};
    PVec c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    pm_trim(c);
    return c;
}

PVec pm_sub(const PVec& a, const PVec& b, std::uint64_t p) {
    PVec c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        c[i] = (c[i] + p - b[i]) % p;
    pm_trim(c);
    return c;
}

PVec pm_rem(PVec a, const PVec& b, std::uint64_t p) {
    std::uint64_t linv = inv_mod(b.back(), p);
    while (pm_deg(a) >= pm_deg(b)) {
        std::uint64_t q = a.back() * linv % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = (a[shift + j] + p - q * b[j] % p) % p;
        pm_trim(a);
        if (a.empty())
            break;
    }
    return a;
}

PVec pm_monic(PVec a, std::uint64_t p) {
    if (a.empty())
        return a;
    std::uint64_t linv = inv_mod(a.back(), p);
    for (auto& v : a)
        v = v * linv % p;
    return a;
}

PVec pm_gcd(PVec a, PVec b, std::uint64_t p) {
    while (!b.empty()) {
        PVec r = pm_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return pm_monic(std::move(a), p);
}

PVec pm_deriv(const PVec& a, std::uint64_t p) {
    if (a.size() <= 1)
        return {};
    PVec c(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        c[i - 1] = a[i] * (i % p) % p;
    pm_trim(c);
    return c;
}

PVec pm_powmod(PVec base, const Integer& e, const PVec& mod, std::uint64_t p) {
    PVec result{1};
    base = pm_rem(std::move(base), mod, p);
    Integer k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t()))
            result = pm_rem(pm_mul(result, base, p), mod, p);
        base = pm_rem(pm_mul(base, base, p), mod, p);
        k >>= 1;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Factorization of a squarefree monic polynomial mod p.
// ---------------------------------------------------------------------------

PVec divrem_exact(const PVec& a, const PVec& b, std::uint64_t p);

void equal_degree_split(const PVec& f, int d, std::uint64_t p, std::mt19937_64& rng,
                        std::vector<PVec>& out) {
    int n = pm_deg(f);
    if (n == d) {
        out.push_back(f);
        return;
    }
    Integer card = 1;
    for (int i = 0; i < d; ++i)
        card *= static_cast<unsigned long>(p);
    Integer half = (card - 1) / 2;
    for (;;) {
        PVec a(static_cast<std::size_t>(n), 0);
        for (auto& v : a)
            v = rng() % p;
        pm_trim(a);
        if (pm_deg(a) < 1)
            continue;
        PVec g = pm_gcd(f, a, p);
        if (pm_deg(g) > 0 && pm_deg(g) < n) {
            equal_degree_split(g, d, p, rng, out);
            equal_degree_split(pm_monic(divrem_exact(f, g, p), p), d, p, rng, out);
            return;
        }
        PVec b = pm_powmod(a, half, f, p);
        b = pm_sub(b, PVec{1}, p);
        g = pm_gcd(f, b, p);
        if (pm_deg(g) > 0 && pm_deg(g) < n) {
            equal_degree_split(g, d, p, rng, out);
            equal_degree_split(pm_monic(divrem_exact(f, g, p), p), d, p, rng, out);
            return;
        }
    }
}

PVec divrem_exact(const PVec& a, const PVec& b, std::uint64_t p) {
    // exact quotient a / b mod p
    PVec rem(a);
    PVec quo(a.size() - b.size() + 1, 0);
    std::uint64_t linv = inv_mod(b.back(), p);
    while (pm_deg(rem) >= pm_deg(b)) {
        std::uint64_t q = rem.back() * linv % p;
        std::size_t shift = rem.size() - b.size();
        quo[shift] = q;
        for (std::size_t j = 0; j < b.size(); ++j)
            rem[shift + j] = (rem[shift + j] + p - q * b[j] % p) % p;
        pm_trim(rem);
        if (rem.empty())
            break;
    }
    pm_trim(quo);
    return quo;
}

std::vector<PVec> factor_mod_p(const PVec& f, std::uint64_t p) {
    // distinct degree, then equal degree
    std::vector<PVec> out;
    PVec rest = f;
    PVec h{0, 1}; // x
    int d = 0;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (p * 2654435761ull));
    while (pm_deg(rest) > 0) {
        ++d;
        if (2 * d > pm_deg(rest)) {
            out.push_back(pm_monic(rest, p));
            break;
        }
        h = pm_powmod(h, Integer(static_cast<unsigned long>(p)), rest, p);
        PVec hx = pm_sub(h, PVec{0, 1}, p);
        PVec g = pm_gcd(rest, hx, p);
        if (pm_deg(g) > 0) {
            equal_degree_split(g, d, p, rng, out);
            rest = pm_monic(divrem_exact(rest, g, p), p);
            h = pm_rem(h, rest, p);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers (dense, low-to-high, mpz coefficients).
// ---------------------------------------------------------------------------

using ZVec = std::vector<Integer>;

void z_trim(ZVec& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

int z_deg(const ZVec& a) { return static_cast<int>(a.size()) - 1; }

ZVec z_mul_mod(const ZVec& a, const ZVec& b, const Integer& m) {
    if (a.empty() || b.empty())
        return {};
    ZVec c(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    }
    for (auto& v : c)
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    z_trim(c);
    return c;
}

ZVec z_sub_mod(const ZVec& a, const ZVec& b, const Integer& m) {
    ZVec c(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        c[i] -= b[i];
    for (auto& v : c)
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    z_trim(c);
    return c;
}

ZVec z_add_mod(const ZVec& a, const ZVec& b, const Integer& m) {
    ZVec c(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        c[i] += b[i];
    for (auto& v : c)
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    z_trim(c);
    return c;
}

// division by a monic divisor, coefficients mod m
std::pair<ZVec, ZVec> z_divrem_monic_mod(ZVec a, const ZVec& b, const Integer& m) {
    ZVec quo;
    if (z_deg(a) >= z_deg(b))
        quo.assign(a.size() - b.size() + 1, Integer(0));
    while (z_deg(a) >= z_deg(b)) {
        Integer q = a.back();
        std::size_t shift = a.size() - b.size();
        quo[shift] = q;
        for (std::size_t j = 0; j < b.size(); ++j) {
            a[shift + j] -= q * b[j];
            mpz_fdiv_r(a[shift + j].get_mpz_t(), a[shift + j].get_mpz_t(), m.get_mpz_t());
        }
        z_trim(a);
        if (a.empty())
            break;
    }
    z_trim(quo);
    return {std::move(quo), std::move(a)};
}

ZVec z_symmetric(ZVec a, const Integer& m) {
    Integer half = m / 2;
    for (auto& v : a) {
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        if (v > half)
            v -= m;
    }
    z_trim(a);
    return a;
}

// plain integer ops
ZVec z_mul(const ZVec& a, const ZVec& b) {
    if (a.empty() || b.empty())
        return {};
    ZVec c(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    z_trim(c);
    return c;
}

// exact division test of integer polynomials (b monic); returns quotient if divisible
bool z_divides_monic(const ZVec& f, const ZVec& g, ZVec* quotient) {
    ZVec rem(f);
    ZVec quo;
    if (z_deg(rem) < z_deg(g))
        return false;
    quo.assign(rem.size() - g.size() + 1, Integer(0));
    while (z_deg(rem) >= z_deg(g)) {
        Integer q = rem.back();
        std::size_t shift = rem.size() - g.size();
        quo[shift] = q;
        for (std::size_t j = 0; j < g.size(); ++j)
            rem[shift + j] -= q * g[j];
        z_trim(rem);
        if (rem.empty())
            break;
    }
    if (!rem.empty())
        return false;
    if (quotient)
        *quotient = std::move(quo);
    return true;
}

// ---------------------------------------------------------------------------
// Quadratic Hensel lifting.
// ---------------------------------------------------------------------------

struct BezoutPair {
    ZVec s, t; // s*g + t*h = 1 (mod p)
};

BezoutPair bezout_mod_p(const PVec& g, const PVec& h, std::uint64_t p) {
    // extended euclid over F_p
    PVec r0 = g, r1 = h;
    PVec s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        // divide r0 by r1
        PVec rem = r0;
        PVec quo(rem.size() > r1.size() ? rem.size() - r1.size() + 1 : 1, 0);
        std::uint64_t linv = inv_mod(r1.back(), p);
        while (pm_deg(rem) >= pm_deg(r1)) {
            std::uint64_t q = rem.back() * linv % p;
            std::size_t shift = rem.size() - r1.size();
            quo[shift] = q;
            for (std::size_t j = 0; j < r1.size(); ++j)
                rem[shift + j] = (rem[shift + j] + p - q * r1[j] % p) % p;
            pm_trim(rem);
            if (rem.empty())
                break;
        }
        pm_trim(quo);
        PVec ns = pm_sub(s0, pm_mul(quo, s1, p), p);
        PVec nt = pm_sub(t0, pm_mul(quo, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(ns);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    // r0 = gcd (a nonzero constant since g, h coprime); scale to 1
    std::uint64_t c = inv_mod(r0.back(), p);
    auto scale = [&](const PVec& v) {
        ZVec out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            out[i] = Integer(static_cast<unsigned long>(v[i] * c % p));
        z_trim(out);
        return out;
    };
    return {scale(s0), scale(t0)};
}

// Lifts f = g*h from mod m to mod m^2 (f, g, h monic, s*g + t*h = 1 mod m).
void hensel_step(const ZVec& f, ZVec& g, ZVec& h, ZVec& s, ZVec& t, const Integer& m) {
    Integer m2 = m * m;
    ZVec e = z_sub_mod(f, z_mul_mod(g, h, m2), m2);
    auto [q, r] = z_divrem_monic_mod(z_mul_mod(s, e, m2), h, m2);
    ZVec g_new = z_add_mod(g, z_add_mod(z_mul_mod(t, e, m2), z_mul_mod(q, g, m2), m2), m2);
    ZVec h_new = z_add_mod(h, r, m2);
    ZVec b = z_sub_mod(
        z_add_mod(z_mul_mod(s, g_new, m2), z_mul_mod(t, h_new, m2), m2), ZVec{Integer(1)}, m2);
    auto [c, d] = z_divrem_monic_mod(z_mul_mod(s, b, m2), h_new, m2);
    ZVec s_new = z_sub_mod(s, d, m2);
    ZVec t_new = z_sub_mod(t, z_add_mod(z_mul_mod(t, b, m2), z_mul_mod(c, g_new, m2), m2), m2);
    g = std::move(g_new);
    h = std::move(h_new);
    s = std::move(s_new);
    t = std::move(t_new);
}

// Lifts the full modular factorization of monic f to mod p^K >= bound.
void hensel_lift_tree(const ZVec& f, const std::vector<PVec>& modular, std::uint64_t p,
                      const Integer& bound, std::vector<ZVec>& out) {
    if (modular.size() == 1) {
        // f itself is the lift (monic, coefficients already exact)
        out.push_back(f);
        return;
    }
    std::size_t halfn = modular.size() / 2;
    std::vector<PVec> left(modular.begin(), modular.begin() + static_cast<std::ptrdiff_t>(halfn));
    std::vector<PVec> right(modular.begin() + static_cast<std::ptrdiff_t>(halfn), modular.end());
    PVec gp{1}, hp{1};
    for (const auto& m : left)
        gp = pm_mul(gp, m, p);
    for (const auto& m : right)
        hp = pm_mul(hp, m, p);
    BezoutPair bz = bezout_mod_p(gp, hp, p);
    ZVec g(gp.size()), h(hp.size());
    for (std::size_t i = 0; i < gp.size(); ++i)
        g[i] = Integer(static_cast<unsigned long>(gp[i]));
    for (std::size_t i = 0; i < hp.size(); ++i)
        h[i] = Integer(static_cast<unsigned long>(hp[i]));
    ZVec s = bz.s, t = bz.t;
    Integer m(static_cast<unsigned long>(p));
    while (m < bound) {
        hensel_step(f, g, h, s, t, m);
        m = m * m;
    }
    // recurse with the lifted halves (reduce mod m for the recursion)
    auto norm = [&](ZVec v) {
        for (auto& x : v)
            mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
        z_trim(v);
        return v;
    };
    hensel_lift_tree(norm(g), left, p, bound, out);
    hensel_lift_tree(norm(h), right, p, bound, out);
}

// ---------------------------------------------------------------------------
// Zassenhaus driver for a squarefree monic integer polynomial.
// ---------------------------------------------------------------------------

Integer mignotte_bound(const ZVec& f) {
    // |g|_inf <= 2^n * |f|_2 for any monic divisor g of monic f, deg f = n
    Integer norm2_sq = 0;
    for (const auto& c : f)
        norm2_sq += c * c;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), norm2_sq.get_mpz_t());
    root += 1;
    Integer out = root;
    mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), static_cast<mp_bitcnt_t>(z_deg(f)));
    return out;
}

constexpr std::uint64_t kCandidatePrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                              41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
                                              89, 97, 101, 103, 107, 109, 113, 127};

std::vector<ZVec> factor_squarefree_monic_z(const ZVec& f) {
    int n = z_deg(f);
    if (n <= 1)
        return {f};

    // pick a prime where f stays squarefree, preferring few modular factors
    std::vector<PVec> best_factors;
    std::uint64_t best_p = 0;
    int tried = 0;
    for (std::uint64_t p : kCandidatePrimes) {
        PVec fp(f.size());
        bool ok = true;
        for (std::size_t i = 0; i < f.size(); ++i) {
            Integer r;
            mpz_fdiv_r_ui(r.get_mpz_t(), f[i].get_mpz_t(), static_cast<unsigned long>(p));
            fp[i] = mpz_get_ui(r.get_mpz_t());
        }
        pm_trim(fp);
        if (pm_deg(fp) != n) // cannot happen for monic f, defensive
            continue;
        PVec d = pm_deriv(fp, p);
        if (d.empty())
            ok = false;
        else if (pm_deg(pm_gcd(fp, d, p)) != 0)
            ok = false;
        if (!ok)
            continue;
        std::vector<PVec> fac = factor_mod_p(pm_monic(fp, p), p);
        if (best_p == 0 || fac.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(fac);
        }
        if (best_factors.size() == 1)
            break;
        if (++tried >= 5)
            break;
    }
    if (best_p == 0)
        throw ResourceLimit("no usable small prime for factorization");
    if (best_factors.size() == 1)
        return {f}; // irreducible mod p => irreducible over Z

    Integer bound = mignotte_bound(f) * 2 + 1;
    std::vector<ZVec> lifted;
    // stable order helps determinism
    std::sort(best_factors.begin(), best_factors.end());
    hensel_lift_tree(f, best_factors, best_p, bound, lifted);
    Integer modulus(static_cast<unsigned long>(best_p));
    while (modulus < bound)
        modulus = modulus * modulus;

    // recombination
    std::vector<ZVec> result;
    std::vector<ZVec> active = std::move(lifted);
    ZVec rest = f;
    std::size_t combos_tested = 0;
    constexpr std::size_t kComboCap = 4'000'000;

    std::size_t subset_size = 1;
    while (2 * subset_size <= active.size()) {
        bool found = false;
        std::vector<std::size_t> idx(subset_size);
        for (std::size_t i = 0; i < subset_size; ++i)
            idx[i] = i;
        for (;;) {
            if (++combos_tested > kComboCap)
                throw ResourceLimit("factor recombination exceeded candidate cap");
            ZVec cand{Integer(1)};
            for (std::size_t i : idx)
                cand = z_mul_mod(cand, active[i], modulus);
            cand = z_symmetric(std::move(cand), modulus);
            ZVec quo;
            if (z_divides_monic(rest, cand, &quo)) {
                result.push_back(cand);
                rest = std::move(quo);
                std::vector<ZVec> next_active;
                for (std::size_t i = 0; i < active.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end())
                        next_active.push_back(std::move(active[i]));
                active = std::move(next_active);
                found = true;
                break;
            }
            // next subset
            std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(subset_size) - 1;
            while (pos >= 0 &&
                   idx[static_cast<std::size_t>(pos)] ==
                       active.size() - subset_size + static_cast<std::size_t>(pos))
                --pos;
            if (pos < 0)
                break;
            ++idx[static_cast<std::size_t>(pos)];
            for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < subset_size; ++i)
                idx[i] = idx[i - 1] + 1;
        }
        if (!found)
            ++subset_size;
    }
    if (z_deg(rest) > 0)
        result.push_back(rest);
    return result;
}

// Yun's squarefree decomposition for monic f over Q.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f) {
    std::vector<std::pair<QPoly, int>> out;
    QPoly fp = derivative(f);
    QPoly u = gcd(f, fp);
    if (u.degree() == 0) {
        out.emplace_back(monic(f), 1);
        return out;
    }
    QPoly v = divrem(f, u).first;
    QPoly w = divrem(fp, u).first;
    int i = 1;
    while (v.degree() > 0) {
        QPoly z = w - derivative(v);
        QPoly h = gcd(v, z);
        if (h.degree() > 0)
            out.emplace_back(monic(h), i);
        v = divrem(v, h).first;
        w = divrem(z, h).first;
        ++i;
    }
    return out;
}

} // namespace

QPoly QFactorization::reassemble() const {
    QPoly prod = QPoly::constant(lead);
    for (const auto& f : factors)
        prod = prod * pow(f.poly, static_cast<unsigned>(f.multiplicity));
    return prod;
}

QFactorization factor_over_Q(const QPoly& f) {
    if (f.is_zero())
        throw MalformedInput("cannot factor the zero polynomial");
    QFactorization result;
    result.lead = f.lc();
    if (f.degree() == 0)
        return result;

    QPoly fm = monic(f);
    for (const auto& [sf, mult] : squarefree_decomposition(fm)) {
        if (sf.degree() == 0)
            continue;
        // scale to a monic integer polynomial F(y) = d^n * sf(y/d)
        Integer d = 1;
        for (const auto& q : sf.coeffs())
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den().get_mpz_t());
        int n = sf.degree();
        ZVec F(static_cast<std::size_t>(n) + 1);
        Integer dk = 1;
        for (int k = 0; k <= n; ++k) {
            // coefficient of y^(n-k) is sf[n-k] * d^k
            const Rational& q = sf[n - k];
            F[static_cast<std::size_t>(n - k)] = q.get_num() * (dk / q.get_den());
            dk *= d;
        }
        for (const auto& G : factor_squarefree_monic_z(F)) {
            // map back: g(x) = G(d*x) / d^deg(G)
            int m = z_deg(G);
            std::vector<Rational> coeffs(static_cast<std::size_t>(m) + 1);
            Integer dj = 1;
            for (int j = 0; j <= m; ++j) {
                // coefficient of x^j: G[j] * d^j / d^m
                Integer denom = 1;
                mpz_pow_ui(denom.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(m - j));
                coeffs[static_cast<std::size_t>(j)] = make_rational(G[static_cast<std::size_t>(j)], denom);
                dj *= d;
            }
            result.factors.push_back({QPoly(std::move(coeffs)), mult});
        }
    }
    std::sort(result.factors.begin(), result.factors.end(), [](const QFactor& a, const QFactor& b) {
        if (a.poly.degree() != b.poly.degree())
            return a.poly.degree() < b.poly.degree();
        for (int i = a.poly.degree(); i >= 0; --i)
            if (a.poly[i] != b.poly[i])
                return a.poly[i] < b.poly[i];
        return a.multiplicity < b.multiplicity;
    });
    return result;
}

bool is_irreducible_over_Q(const QPoly& f) {
    if (f.degree() <= 0)
        return false;
    if (f.degree() == 1)
        return true;
    QFactorization fac = factor_over_Q(f);
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

} // namespace repsplit
