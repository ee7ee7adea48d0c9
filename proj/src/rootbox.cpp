#include "repsplit/rootbox.hpp"

#include <algorithm>

#include "repsplit/errors.hpp"

namespace repsplit {

bool Disk::contains_zero() const {
    // |center|^2 <= rad^2
    return re * re + im * im <= rad * rad;
}

Disk operator+(const Disk& a, const Disk& b) { return {a.re + b.re, a.im + b.im, a.rad + b.rad}; }
Disk operator-(const Disk& a, const Disk& b) { return {a.re - b.re, a.im - b.im, a.rad + b.rad}; }

Disk operator*(const Disk& a, const Disk& b) {
    Rational re = a.re * b.re - a.im * b.im;
    Rational im = a.re * b.im + a.im * b.re;
    Rational rad = abs_upper(Disk(a.re, a.im, Rational(0))) * b.rad +
                   abs_upper(Disk(b.re, b.im, Rational(0))) * a.rad + a.rad * b.rad;
    return {std::move(re), std::move(im), std::move(rad)};
}

Disk operator*(const Rational& q, const Disk& a) {
    return {q * a.re, q * a.im, abs(q) * a.rad};
}

Disk conj(const Disk& a) { return {a.re, -a.im, a.rad}; }

Rational abs_upper(const Disk& a) { return abs(a.re) + abs(a.im) + a.rad; }

Rational abs_lower(const Disk& a) {
    Rational m = std::max(abs(a.re), abs(a.im));
    Rational lo = m - a.rad;
    return lo > 0 ? lo : Rational(0);
}

bool disks_disjoint(const Disk& a, const Disk& b) {
    Rational dr = a.re - b.re, di = a.im - b.im;
    Rational rr = a.rad + b.rad;
    return dr * dr + di * di > rr * rr;
}

bool disk_inside(const Disk& inner, const Disk& outer) {
    if (outer.rad < inner.rad)
        return false;
    Rational dr = inner.re - outer.re, di = inner.im - outer.im;
    Rational slack = outer.rad - inner.rad;
    return dr * dr + di * di <= slack * slack;
}

bool disks_intersect(const Disk& a, const Disk& b) { return !disks_disjoint(a, b); }

Disk round_disk(const Disk& a, int digits) {
    Rational grid = pow10_inv(digits);
    auto snap = [&](const Rational& v) {
        Integer q;
        Rational scaled = v / grid;
        mpz_fdiv_q(q.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
        return Rational(q) * grid;
    };
    // snapping moves the center by < grid in each coordinate
    return {snap(a.re), snap(a.im), a.rad + 2 * grid};
}

namespace {

// Minimal arbitrary-precision complex type for the Durand-Kerner iteration.
struct CF {
    mpf_class re, im;
    CF(mp_bitcnt_t prec) : re(0, prec), im(0, prec) {}
};

CF cf_mul(const CF& a, const CF& b, mp_bitcnt_t prec) {
    CF out(prec);
    out.re = a.re * b.re - a.im * b.im;
    out.im = a.re * b.im + a.im * b.re;
    return out;
}

CF cf_sub(const CF& a, const CF& b, mp_bitcnt_t prec) {
    CF out(prec);
    out.re = a.re - b.re;
    out.im = a.im - b.im;
    return out;
}

CF cf_div(const CF& a, const CF& b, mp_bitcnt_t prec) {
    CF out(prec);
    mpf_class d = b.re * b.re + b.im * b.im;
    out.re = (a.re * b.re + a.im * b.im) / d;
    out.im = (a.im * b.re - a.re * b.im) / d;
    return out;
}

mpf_class cf_abs2(const CF& a) { return a.re * a.re + a.im * a.im; }

Rational rational_from_mpf(const mpf_class& v, int digits) {
    // decimal truncation at the requested precision
    mp_exp_t exp10 = 0;
    std::string mant = v.get_str(exp10, 10, static_cast<std::size_t>(digits));
    if (mant.empty() || mant == "-")
        return Rational(0);
    bool neg = mant[0] == '-';
    if (neg)
        mant.erase(0, 1);
    Integer m(mant, 10);
    long frac_digits = static_cast<long>(mant.size()) - exp10;
    Rational out(m);
    if (frac_digits > 0) {
        Integer den = 1;
        for (long i = 0; i < frac_digits; ++i)
            den *= 10;
        out = make_rational(m, den);
    } else if (frac_digits < 0) {
        Integer mul = 1;
        for (long i = 0; i < -frac_digits; ++i)
            mul *= 10;
        out = Rational(m * mul);
    }
    return neg ? Rational(-out) : out;
}

struct RationalComplex {
    Rational re, im;
};

RationalComplex eval_rc(const QPoly& f, const Rational& zre, const Rational& zim) {
    RationalComplex acc{Rational(0), Rational(0)};
    for (int i = f.degree(); i >= 0; --i) {
        Rational nre = acc.re * zre - acc.im * zim + f[i];
        Rational nim = acc.re * zim + acc.im * zre;
        acc.re = std::move(nre);
        acc.im = std::move(nim);
    }
    return acc;
}

// Certified inclusion disk around a rational point: for monic-normalized f of
// degree n, the disk |w - z| <= n*|f(z)/f'(z)| contains at least one root.
// Upper/lower modulus bounds keep the radius rational and rigorous.
bool inclusion_disk(const QPoly& f, const QPoly& fd, const Rational& zre, const Rational& zim,
                    Disk& out) {
    RationalComplex num = eval_rc(f, zre, zim);
    RationalComplex den = eval_rc(fd, zre, zim);
    Rational ub = abs(num.re) + abs(num.im);
    Rational lb = std::max(abs(den.re), abs(den.im));
    if (lb == 0)
        return false;
    Rational rad = Rational(f.degree()) * ub / lb;
    out = Disk(zre, zim, rad);
    return true;
}

std::vector<Disk> try_isolate(const QPoly& f, int digits, bool& ok) {
    ok = false;
    const int n = f.degree();
    const QPoly fd = derivative(f);
    mp_bitcnt_t prec = static_cast<mp_bitcnt_t>(digits * 3.5) + 64;

    // coefficients as floats
    std::vector<CF> coeff;
    coeff.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        CF c(prec);
        c.re = mpf_class(f[i].get_num(), prec) / mpf_class(f[i].get_den(), prec);
        coeff.push_back(c);
    }

    // Cauchy bound for initial points
    mpf_class bound(1, prec);
    mpf_class lc_abs = abs(coeff.back().re);
    for (int i = 0; i < n; ++i) {
        mpf_class m = (abs(coeff[static_cast<std::size_t>(i)].re) +
                       abs(coeff[static_cast<std::size_t>(i)].im)) /
                      lc_abs;
        if (m > bound)
            bound = m;
    }
    bound += 1;

    std::vector<CF> z;
    z.reserve(static_cast<std::size_t>(n));
    {
        CF seed(prec), cur(prec);
        seed.re = mpf_class("0.4", prec) * bound;
        seed.im = mpf_class("0.9", prec) * bound;
        cur.re = 1;
        cur.im = 0;
        for (int i = 0; i < n; ++i) {
            cur = cf_mul(cur, seed, prec);
            z.push_back(cur);
        }
    }

    auto eval_cf = [&](const CF& x) {
        CF acc(prec);
        for (int i = n; i >= 0; --i) {
            acc = cf_mul(acc, x, prec);
            acc.re += coeff[static_cast<std::size_t>(i)].re;
            acc.im += coeff[static_cast<std::size_t>(i)].im;
        }
        return acc;
    };

    mpf_class tol(1, prec);
    mpf_class ten(10, prec);
    for (int i = 0; i < digits; ++i)
        tol /= ten;
    tol = tol * tol; // compare against squared magnitudes

    const int max_iter = 64 + digits * 4;
    for (int iter = 0; iter < max_iter; ++iter) {
        mpf_class worst(0, prec);
        for (int i = 0; i < n; ++i) {
            CF num = eval_cf(z[static_cast<std::size_t>(i)]);
            CF den(prec);
            den.re = coeff.back().re;
            den.im = coeff.back().im;
            for (int j = 0; j < n; ++j) {
                if (j == i)
                    continue;
                den = cf_mul(den, cf_sub(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)], prec), prec);
            }
            if (cf_abs2(den) == 0) {
                // collided points; perturb
                z[static_cast<std::size_t>(i)].re += mpf_class(1, prec) / mpf_class(1000 + i, prec);
                continue;
            }
            CF delta = cf_div(num, den, prec);
            z[static_cast<std::size_t>(i)] = cf_sub(z[static_cast<std::size_t>(i)], delta, prec);
            mpf_class d2 = cf_abs2(delta);
            if (d2 > worst)
                worst = d2;
        }
        if (worst < tol)
            break;
    }

    // certification with exact rational arithmetic; coordinates that plausibly
    // sit on an axis are snapped to exact zero (sound either way: the disk is
    // re-certified at the snapped point, and a wrong snap breaks the global
    // disjointness test and triggers a retry at higher precision)
    std::vector<Disk> disks;
    disks.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Rational zre = rational_from_mpf(z[static_cast<std::size_t>(i)].re, digits);
        Rational zim = rational_from_mpf(z[static_cast<std::size_t>(i)].im, digits);
        Disk d;
        if (!inclusion_disk(f, fd, zre, zim, d))
            return {};
        bool near_re_axis = !(abs(zim) > d.rad);
        bool near_im_axis = !(abs(zre) > d.rad);
        Disk snapped;
        if (near_re_axis && near_im_axis &&
            inclusion_disk(f, fd, Rational(0), Rational(0), snapped))
            d = snapped;
        else if (near_re_axis && inclusion_disk(f, fd, zre, Rational(0), snapped))
            d = snapped;
        else if (near_im_axis && inclusion_disk(f, fd, Rational(0), zim, snapped))
            d = snapped;
        disks.push_back(d);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!disks_disjoint(disks[static_cast<std::size_t>(i)], disks[static_cast<std::size_t>(j)]))
                return {};
    std::sort(disks.begin(), disks.end(), [](const Disk& a, const Disk& b) {
        if (a.re != b.re)
            return a.re < b.re;
        return a.im < b.im;
    });
    ok = true;
    return disks;
}

} // namespace

std::vector<Disk> isolate_roots(const QPoly& f, int digits) {
    if (f.degree() <= 0)
        return {};
    QPoly fm = monic(f);
    if (fm.degree() == 1)
        return {Disk(-fm[0], Rational(0), Rational(0))};
    for (int d = std::max(digits, 16); d <= kMaxDigits; d *= 2) {
        bool ok = false;
        std::vector<Disk> disks = try_isolate(fm, d, ok);
        if (ok)
            return disks;
    }
    throw BoxNotIsolating("root isolation failed below the precision cap");
}

Disk refine_root(const QPoly& f, const Disk& box, int digits) {
    Rational target = pow10_inv(digits);
    if (box.rad <= target)
        return box;
    for (int d = std::max(digits * 2, 32); d <= kMaxDigits; d *= 2) {
        std::vector<Disk> disks = isolate_roots(f, d);
        const Disk* match = nullptr;
        bool ambiguous = false;
        for (const auto& cand : disks) {
            if (!disks_disjoint(cand, box)) {
                if (match) {
                    ambiguous = true;
                    break;
                }
                match = &cand;
            }
        }
        if (!ambiguous && match && match->rad <= target)
            return *match;
    }
    throw BoxNotIsolating("root refinement failed below the precision cap");
}

} // namespace repsplit
